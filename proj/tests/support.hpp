#pragma once

// Brute-force oracles for the unit tests. Nothing here touches canonical
// forms or the embedding planner: isomorphism is decided by trying every
// vertex bijection, and copies are counted as distinct edge sets.

#include "subthresh/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace support {

using subthresh::Edge;
using subthresh::Graph;

inline bool brute_isomorphic(const Graph& a0, const Graph& b0) {
    const Graph a = a0.strip_isolated();
    const Graph b = b0.strip_isolated();
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    const auto edges = a.edges();
    do {
        bool ok = true;
        for (const Edge& e : edges) {
            if (!b.has_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::uint64_t brute_automorphisms(const Graph& g0) {
    const Graph g = g0.strip_isolated();
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    const auto edges = g.edges();
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (const Edge& e : edges) {
            if (!g.has_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)])) {
                ok = false;
                break;
            }
        }
        count += ok ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

namespace detail {
inline void embed(const Graph& p, const Graph& h, std::vector<int>& image, std::vector<bool>& used, std::uint64_t& count) {
    const auto k = static_cast<int>(image.size());
    if (k == p.order()) {
        for (const Edge& e : p.edges()) {
            if (!h.has_edge(image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)])) return;
        }
        ++count;
        return;
    }
    for (int v = 0; v < h.order(); ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(v)] = true;
        image.push_back(v);
        embed(p, h, image, used, count);
        image.pop_back();
        used[static_cast<std::size_t>(v)] = false;
    }
}
} // namespace detail

/// Injective vertex maps carrying every pattern edge to a host edge.
inline std::uint64_t brute_embeddings(const Graph& pattern, const Graph& host) {
    std::vector<int> image;
    std::vector<bool> used(static_cast<std::size_t>(host.order()), false);
    std::uint64_t count = 0;
    detail::embed(pattern, host, image, used, count);
    return count;
}

struct BruteClass {
    Graph representative;
    std::uint64_t multiplicity = 0;
};

/// Classes of nonempty edge subsets grouped by brute-force isomorphism.
inline std::vector<BruteClass> brute_census(const Graph& h) {
    const auto edges = h.edges();
    std::vector<BruteClass> classes;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        Graph sub(h.order());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if ((mask >> i) & 1U) sub.add_edge(edges[i].u, edges[i].v);
        }
        bool placed = false;
        for (auto& c : classes) {
            if (brute_isomorphic(c.representative, sub)) {
                ++c.multiplicity;
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({sub.strip_isolated(), 1});
    }
    return classes;
}

/// Distinct copies of `pattern` in K_n, as distinct edge sets (n <= 8).
inline std::uint64_t brute_copies_in_complete(const Graph& pattern0, int n) {
    const Graph pattern = pattern0.strip_isolated();
    std::set<std::uint64_t> seen;
    std::vector<int> image;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto pair_index = [n](int a, int b) {
        if (a > b) std::swap(a, b);
        return a * n + b;
    };
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(image.size()) == pattern.order()) {
            std::uint64_t mask = 0;
            for (const Edge& e : pattern.edges()) {
                mask |= std::uint64_t{1} << pair_index(image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)]);
            }
            seen.insert(mask);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            image.push_back(v);
            self(self);
            image.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(rec);
    return seen.size();
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

inline Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabel(perm);
}

inline Graph edges_graph(int order, std::initializer_list<Edge> edges) {
    return Graph::from_edges(order, std::vector<Edge>(edges));
}

} // namespace support
