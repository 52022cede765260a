#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace subthresh {

inline constexpr int kMaxVertices = 64;

/// One adjacency row; bit v set means an edge to vertex v.
using Row = std::uint64_t;

/// Subset of a graph's edges, indexed by position in Graph::edges().
using EdgeMask = std::uint64_t;

struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

inline constexpr Row bit(int v) { return Row{1} << v; }

inline constexpr Row low_bits(int count) {
    return count >= 64 ? ~Row{0} : (Row{1} << count) - 1;
}

/// Labelled simple undirected graph on at most 64 vertices.
///
/// Adjacency is kept as one 64-bit row per vertex. The matrix is always
/// symmetric with an empty diagonal and edge_count() is maintained on every
/// mutation.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    static Graph from_edges(int order, std::span<const Edge> edges);
    static Graph complete(int order);

    int order() const noexcept { return order_; }
    int edge_count() const noexcept { return edge_count_; }

    Row neighbors(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
    int degree(int v) const noexcept { return std::popcount(neighbors(v)); }
    bool has_edge(int u, int v) const noexcept { return (neighbors(u) >> v) & 1U; }

    /// Throws input error on self-loops, duplicate edges or out-of-range ends.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Edges with u < v in lexicographic order; this order defines EdgeMask bits.
    std::vector<Edge> edges() const;

    Row vertex_set() const noexcept { return low_bits(order_); }
    Row non_isolated() const noexcept;
    /// v(H) for edge-induced patterns: vertices that carry at least one edge.
    int non_isolated_count() const noexcept { return std::popcount(non_isolated()); }
    int max_degree() const noexcept;

    bool is_connected_ignoring_isolated() const noexcept;

    /// Drops isolated vertices and compacts labels, preserving relative order.
    Graph strip_isolated() const;
    /// Subgraph induced on `vertices`, relabelled 0..k-1 in increasing order.
    Graph induced(Row vertices) const;
    /// Vertex v becomes new_label[v]; new_label must be a permutation of 0..order-1.
    Graph relabel(std::span<const int> new_label) const;
    /// Same adjacency on a larger labelled vertex set.
    Graph with_order(int order) const;

    bool contains_edges_of(const Graph& other) const noexcept;

    bool operator==(const Graph& other) const noexcept;

private:
    int order_ = 0;
    int edge_count_ = 0;
    std::array<Row, kMaxVertices> rows_{};
};

/// Edge-induced subgraph for the given subset of g's edges. Isolated vertices
/// are kept; the labelled vertex set is that of g.
Graph edge_induced_subgraph(const Graph& g, EdgeMask edges);

/// Connected components of the non-isolated part, each relabelled compactly.
std::vector<Graph> connected_components(const Graph& g);

} // namespace subthresh
