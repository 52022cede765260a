#include "subthresh/graph.hpp"

#include "subthresh/error.hpp"

#include <string>

namespace subthresh {

namespace {

void check_order(int order) {
    if (order < 0 || order > kMaxVertices) {
        throw_capacity("graph order " + std::to_string(order) + " exceeds the 64-vertex capacity");
    }
}

} // namespace

Graph::Graph(int order) : order_(order) { check_order(order); }

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
    Graph g(order);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

Graph Graph::complete(int order) {
    Graph g(order);
    for (int u = 0; u < order; ++u) {
        for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
    }
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order_ || v >= order_) {
        throw_input("edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") outside vertex range 0.." + std::to_string(order_ - 1));
    }
    if (u == v) throw_input("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) {
        throw_input("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    rows_[static_cast<std::size_t>(u)] |= bit(v);
    rows_[static_cast<std::size_t>(v)] |= bit(u);
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order_ || v >= order_ || !has_edge(u, v)) return;
    rows_[static_cast<std::size_t>(u)] &= ~bit(v);
    rows_[static_cast<std::size_t>(v)] &= ~bit(u);
    --edge_count_;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order_; ++u) {
        Row above = neighbors(u) & ~low_bits(u + 1);
        while (above) {
            const int v = std::countr_zero(above);
            above &= above - 1;
            out.push_back({u, v});
        }
    }
    return out;
}

Row Graph::non_isolated() const noexcept {
    Row out = 0;
    for (int v = 0; v < order_; ++v) {
        if (neighbors(v)) out |= bit(v);
    }
    return out;
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (int v = 0; v < order_; ++v) best = std::max(best, degree(v));
    return best;
}

bool Graph::is_connected_ignoring_isolated() const noexcept {
    const Row live = non_isolated();
    if (!live) return true;
    Row seen = bit(std::countr_zero(live));
    Row frontier = seen;
    while (frontier) {
        Row next = 0;
        Row f = frontier;
        while (f) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            next |= neighbors(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == live;
}

Graph Graph::induced(Row vertices) const {
    vertices &= vertex_set();
    std::array<int, kMaxVertices> label{};
    int k = 0;
    for (int v = 0; v < order_; ++v) {
        if ((vertices >> v) & 1U) label[static_cast<std::size_t>(v)] = k++;
    }
    Graph out(k);
    for (int u = 0; u < order_; ++u) {
        if (!((vertices >> u) & 1U)) continue;
        Row above = neighbors(u) & vertices & ~low_bits(u + 1);
        while (above) {
            const int v = std::countr_zero(above);
            above &= above - 1;
            out.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
        }
    }
    return out;
}

Graph Graph::strip_isolated() const { return induced(non_isolated()); }

Graph Graph::relabel(std::span<const int> new_label) const {
    if (static_cast<int>(new_label.size()) != order_) {
        throw_input("relabelling size does not match graph order");
    }
    Graph out(order_);
    for (const Edge& e : edges()) {
        out.add_edge(new_label[static_cast<std::size_t>(e.u)], new_label[static_cast<std::size_t>(e.v)]);
    }
    return out;
}

Graph Graph::with_order(int order) const {
    if (order < order_) {
        const Row kept = low_bits(order);
        for (int v = 0; v < order_; ++v) {
            if (neighbors(v) & ~kept) throw_input("with_order would drop an edge");
        }
    }
    Graph out(order);
    for (const Edge& e : edges()) out.add_edge(e.u, e.v);
    return out;
}

bool Graph::contains_edges_of(const Graph& other) const noexcept {
    if (other.order_ > order_) {
        for (int v = order_; v < other.order_; ++v) {
            if (other.neighbors(v)) return false;
        }
    }
    const int common = std::min(order_, other.order_);
    for (int v = 0; v < common; ++v) {
        if (other.neighbors(v) & ~neighbors(v)) return false;
    }
    return true;
}

bool Graph::operator==(const Graph& other) const noexcept {
    if (order_ != other.order_ || edge_count_ != other.edge_count_) return false;
    for (int v = 0; v < order_; ++v) {
        if (neighbors(v) != other.neighbors(v)) return false;
    }
    return true;
}

Graph edge_induced_subgraph(const Graph& g, EdgeMask edges) {
    const std::vector<Edge> all = g.edges();
    const int m = static_cast<int>(all.size());
    if (m < 64 && (edges >> m) != 0) {
        throw_input("edge mask references an edge index >= " + std::to_string(m) +
                    " that does not exist in the graph");
    }
    Graph out(g.order());
    while (edges) {
        const int i = std::countr_zero(edges);
        edges &= edges - 1;
        out.add_edge(all[static_cast<std::size_t>(i)].u, all[static_cast<std::size_t>(i)].v);
    }
    return out;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    Row remaining = g.non_isolated();
    while (remaining) {
        Row comp = bit(std::countr_zero(remaining));
        Row frontier = comp;
        while (frontier) {
            Row next = 0;
            Row f = frontier;
            while (f) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(g.induced(comp));
        remaining &= ~comp;
    }
    return out;
}

} // namespace subthresh
