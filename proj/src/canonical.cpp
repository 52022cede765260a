#include "subthresh/canonical.hpp"

#include "subthresh/embedding.hpp"
#include "subthresh/error.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>

namespace subthresh {

namespace {

using Partition = std::vector<Row>;

// Splits every cell by the vector of neighbour counts into the cells of the
// current partition, ordering the pieces by that vector, until nothing splits.
// Only counts and cell positions are consulted, so the result commutes with
// relabelling.
void refine(const Graph& g, Partition& cells) {
    std::vector<std::uint8_t> sig;
    std::vector<int> members;
    std::vector<int> order;
    Partition next;
    for (;;) {
        const std::size_t k = cells.size();
        next.clear();
        bool split = false;
        for (const Row cell : cells) {
            if (std::popcount(cell) == 1) {
                next.push_back(cell);
                continue;
            }
            members.clear();
            for (Row c = cell; c; c &= c - 1) members.push_back(std::countr_zero(c));
            sig.assign(members.size() * k, 0);
            for (std::size_t i = 0; i < members.size(); ++i) {
                const Row nb = g.neighbors(members[i]);
                for (std::size_t c = 0; c < k; ++c) {
                    sig[i * k + c] = static_cast<std::uint8_t>(std::popcount(nb & cells[c]));
                }
            }
            order.resize(members.size());
            std::iota(order.begin(), order.end(), 0);
            auto less = [&](int a, int b) {
                return std::memcmp(&sig[static_cast<std::size_t>(a) * k],
                                   &sig[static_cast<std::size_t>(b) * k], k) < 0;
            };
            std::sort(order.begin(), order.end(), less);
            Row piece = 0;
            for (std::size_t i = 0; i < order.size(); ++i) {
                if (i > 0 && less(order[i - 1], order[i])) {
                    next.push_back(piece);
                    piece = 0;
                    split = true;
                }
                piece |= bit(members[static_cast<std::size_t>(order[i])]);
            }
            next.push_back(piece);
        }
        cells.swap(next);
        if (!split) return;
    }
}

class LabellingSearch {
public:
    explicit LabellingSearch(const Graph& g) : g_(g), n_(g.order()) {}

    void run() {
        Partition root{g_.vertex_set()};
        descend(std::move(root));
    }

    const std::vector<Row>& best_rows() const { return best_; }
    const std::vector<int>& best_label() const { return best_label_; }

private:
    void descend(Partition cells) {
        refine(g_, cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (std::popcount(cells[i]) > 1) {
                target = i;
                break;
            }
        }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        const Row cell = cells[target];
        Row explored = 0;
        for (Row c = cell; c; c &= c - 1) {
            const int x = std::countr_zero(c);
            if (explored && in_explored_orbit(x, explored)) continue;
            Partition child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(bit(x));
            child.push_back(cell & ~bit(x));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
            prefix_.push_back(x);
            descend(std::move(child));
            prefix_.pop_back();
            explored |= bit(x);
        }
    }

    void leaf(const Partition& cells) {
        std::vector<int> label(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < cells.size(); ++i) {
            label[static_cast<std::size_t>(std::countr_zero(cells[i]))] = static_cast<int>(i);
        }
        std::vector<Row> rows(static_cast<std::size_t>(n_), 0);
        for (int u = 0; u < n_; ++u) {
            const int lu = label[static_cast<std::size_t>(u)];
            Row r = 0;
            for (Row nb = g_.neighbors(u); nb; nb &= nb - 1) {
                const int lw = label[static_cast<std::size_t>(std::countr_zero(nb))];
                if (lw > lu) r |= bit(63 - lw);
            }
            rows[static_cast<std::size_t>(lu)] = r;
        }
        if (best_.empty() || rows < best_) {
            best_ = std::move(rows);
            best_label_ = std::move(label);
            return;
        }
        if (rows == best_) {
            // Same encoding from two labellings: their composition is an automorphism.
            std::vector<int> inverse_best(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) {
                inverse_best[static_cast<std::size_t>(best_label_[static_cast<std::size_t>(v)])] = v;
            }
            std::vector<int> gamma(static_cast<std::size_t>(n_));
            bool identity = true;
            for (int v = 0; v < n_; ++v) {
                gamma[static_cast<std::size_t>(v)] =
                    inverse_best[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
                identity = identity && gamma[static_cast<std::size_t>(v)] == v;
            }
            if (!identity) generators_.push_back(std::move(gamma));
        }
    }

    // Orbits of the group generated by the known automorphisms that fix the
    // current prefix pointwise; children in one orbit have identical subtrees.
    bool in_explored_orbit(int x, Row explored) const {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) {
                parent[static_cast<std::size_t>(v)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
                v = parent[static_cast<std::size_t>(v)];
            }
            return v;
        };
        bool any = false;
        for (const auto& gamma : generators_) {
            bool fixes = true;
            for (int p : prefix_) {
                if (gamma[static_cast<std::size_t>(p)] != p) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) continue;
            any = true;
            for (int v = 0; v < n_; ++v) {
                const int a = find(v);
                const int b = find(gamma[static_cast<std::size_t>(v)]);
                if (a != b) parent[static_cast<std::size_t>(a)] = b;
            }
        }
        if (!any) return false;
        const int rx = find(x);
        for (Row e = explored; e; e &= e - 1) {
            if (find(std::countr_zero(e)) == rx) return true;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<Row> best_;
    std::vector<int> best_label_;
    std::vector<std::vector<int>> generators_;
    std::vector<int> prefix_;
};

std::size_t triangle_index(int i, int j, int order) {
    return static_cast<std::size_t>(i * order - i * (i + 1) / 2 + (j - i - 1));
}

std::string encode(int order, const std::vector<Edge>& edges) {
    const std::size_t pairs = static_cast<std::size_t>(order * (order - 1) / 2);
    std::string key(1 + (pairs + 7) / 8, '\0');
    key[0] = static_cast<char>(order);
    for (const Edge& e : edges) {
        const std::size_t idx = triangle_index(std::min(e.u, e.v), std::max(e.u, e.v), order);
        key[1 + idx / 8] = static_cast<char>(static_cast<unsigned char>(key[1 + idx / 8]) |
                                             (0x80U >> (idx % 8)));
    }
    return key;
}

std::vector<Edge> decode_edges(const std::string& key, int order) {
    std::vector<Edge> out;
    for (int i = 0; i < order; ++i) {
        for (int j = i + 1; j < order; ++j) {
            const std::size_t idx = triangle_index(i, j, order);
            if (static_cast<unsigned char>(key[1 + idx / 8]) & (0x80U >> (idx % 8))) out.push_back({i, j});
        }
    }
    return out;
}

CanonicalForm canonical_form_connected(const Graph& g) {
    LabellingSearch search(g);
    search.run();
    std::vector<Edge> edges;
    const auto& rows = search.best_rows();
    for (int i = 0; i < g.order(); ++i) {
        for (Row r = rows[static_cast<std::size_t>(i)]; r; r &= r - 1) {
            edges.push_back({i, 63 - std::countr_zero(r)});
        }
    }
    return {encode(g.order(), edges), g.order(), g.edge_count()};
}

} // namespace

std::string CanonicalForm::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (const char c : key) {
        const auto b = static_cast<unsigned char>(c);
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

std::vector<int> canonical_labelling(const Graph& connected) {
    LabellingSearch search(connected);
    search.run();
    return search.best_label();
}

CanonicalForm assemble_canonical_form(std::vector<CanonicalForm> components) {
    if (components.size() == 1) return std::move(components.front());
    std::sort(components.begin(), components.end());
    int order = 0;
    int edge_count = 0;
    for (const auto& c : components) {
        order += c.order;
        edge_count += c.edge_count;
    }
    if (order > kMaxVertices) throw_capacity("assembled graph exceeds 64 vertices");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(edge_count));
    int offset = 0;
    for (const auto& c : components) {
        for (const Edge& e : decode_edges(c.key, c.order)) edges.push_back({e.u + offset, e.v + offset});
        offset += c.order;
    }
    return {encode(order, edges), order, edge_count};
}

CanonicalForm canonical_form(const Graph& g) {
    if (g.edge_count() == 0) return {std::string(1, '\0'), 0, 0};
    const std::vector<Graph> parts = connected_components(g);
    std::vector<CanonicalForm> forms;
    forms.reserve(parts.size());
    for (const Graph& part : parts) forms.push_back(canonical_form_connected(part));
    return assemble_canonical_form(std::move(forms));
}

Graph graph_from_canonical(const CanonicalForm& form) {
    const int order = form.key.empty() ? 0 : static_cast<unsigned char>(form.key[0]);
    const std::vector<Edge> edges = decode_edges(form.key, order);
    return Graph::from_edges(order, edges);
}

BigInt automorphism_count(const Graph& g) {
    std::map<std::string, std::pair<int, BigInt>> classes;
    for (const Graph& part : connected_components(g)) {
        CanonicalForm form = canonical_form_connected(part);
        auto [it, inserted] = classes.try_emplace(std::move(form.key), 0, BigInt(0));
        if (inserted) it->second.second = count_embeddings(part, part);
        ++it->second.first;
    }
    BigInt total = 1;
    for (const auto& [key, entry] : classes) {
        const auto& [copies, aut] = entry;
        total *= boost::multiprecision::pow(aut, static_cast<unsigned>(copies)) * factorial(copies);
    }
    return total;
}

} // namespace subthresh
