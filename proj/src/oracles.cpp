#include "subthresh/oracles.hpp"

#include "subthresh/error.hpp"

#include <array>
#include <vector>

namespace subthresh {

std::string_view to_string(OracleKind kind) noexcept {
    switch (kind) {
    case OracleKind::generic: return "generic";
    case OracleKind::hamiltonian_cycle: return "hamiltonian_cycle";
    case OracleKind::perfect_matching: return "perfect_matching";
    case OracleKind::clique: return "clique";
    }
    return "generic";
}

OracleKind parse_oracle_kind(std::string_view name) {
    std::string s(name);
    for (char& c : s) {
        if (c == '-') c = '_';
    }
    if (s == "generic") return OracleKind::generic;
    if (s == "hamiltonian_cycle" || s == "hamiltonian") return OracleKind::hamiltonian_cycle;
    if (s == "perfect_matching" || s == "matching") return OracleKind::perfect_matching;
    if (s == "clique") return OracleKind::clique;
    throw_input("unknown oracle kind '" + std::string(name) + "'");
}

int maximum_matching_size(const Graph& g) {
    const int n = g.order();
    std::array<int, kMaxVertices> match{};
    std::array<int, kMaxVertices> parent{};
    std::array<int, kMaxVertices> base{};
    std::array<bool, kMaxVertices> used{};
    std::array<bool, kMaxVertices> blossom{};
    std::array<int, kMaxVertices> queue{};
    match.fill(-1);

    auto lca = [&](int a, int b) {
        std::array<bool, kMaxVertices> seen{};
        for (;;) {
            a = base[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = true;
            if (match[static_cast<std::size_t>(a)] == -1) break;
            a = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[static_cast<std::size_t>(v)] != b) {
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = true;
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])])] = true;
            parent[static_cast<std::size_t>(v)] = child;
            child = match[static_cast<std::size_t>(v)];
            v = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])];
        }
    };
    // BFS for an augmenting path from root; returns its free endpoint or -1.
    auto find_path = [&](int root) {
        used.fill(false);
        parent.fill(-1);
        for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
        used[static_cast<std::size_t>(root)] = true;
        int head = 0;
        int tail = 0;
        queue[static_cast<std::size_t>(tail++)] = root;
        while (head < tail) {
            const int v = queue[static_cast<std::size_t>(head++)];
            for (Row nb = g.neighbors(v); nb; nb &= nb - 1) {
                const int to = std::countr_zero(nb);
                if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] ||
                    match[static_cast<std::size_t>(v)] == to) {
                    continue;
                }
                if (to == root || (match[static_cast<std::size_t>(to)] != -1 &&
                                   parent[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] != -1)) {
                    const int cur = lca(v, to);
                    blossom.fill(false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
                            base[static_cast<std::size_t>(i)] = cur;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = true;
                                queue[static_cast<std::size_t>(tail++)] = i;
                            }
                        }
                    }
                } else if (parent[static_cast<std::size_t>(to)] == -1) {
                    parent[static_cast<std::size_t>(to)] = v;
                    if (match[static_cast<std::size_t>(to)] == -1) return to;
                    const int next = match[static_cast<std::size_t>(to)];
                    used[static_cast<std::size_t>(next)] = true;
                    queue[static_cast<std::size_t>(tail++)] = next;
                }
            }
        }
        return -1;
    };

    int size = 0;
    // greedy start
    for (int v = 0; v < n; ++v) {
        if (match[static_cast<std::size_t>(v)] != -1) continue;
        for (Row nb = g.neighbors(v); nb; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            if (match[static_cast<std::size_t>(u)] == -1) {
                match[static_cast<std::size_t>(u)] = v;
                match[static_cast<std::size_t>(v)] = u;
                ++size;
                break;
            }
        }
    }
    for (int v = 0; v < n && 2 * size + 1 < n; ++v) {
        if (match[static_cast<std::size_t>(v)] != -1) continue;
        int u = find_path(v);
        if (u == -1) continue;
        ++size;
        while (u != -1) {
            const int pv = parent[static_cast<std::size_t>(u)];
            const int ppv = match[static_cast<std::size_t>(pv)];
            match[static_cast<std::size_t>(u)] = pv;
            match[static_cast<std::size_t>(pv)] = u;
            u = ppv;
        }
    }
    return size;
}

bool has_hamiltonian_cycle(const Graph& g) {
    const int n = g.order();
    if (n > kHamiltonianMaxOrder) {
        throw_capacity("Hamiltonian-cycle oracle supports at most 20 vertices, got " + std::to_string(n));
    }
    if (n < 3) return false;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < 2) return false;
    }
    if (!g.is_connected_ignoring_isolated()) return false;

    // Paths start at vertex 0. Vertex v >= 1 is bit v-1 of a subset; ends[S]
    // holds the possible last vertices of a path from 0 covering exactly {0} + S.
    const int m = n - 1;
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    std::array<std::uint32_t, kHamiltonianMaxOrder> row{};
    for (int v = 1; v < n; ++v) row[static_cast<std::size_t>(v - 1)] = static_cast<std::uint32_t>(g.neighbors(v) >> 1);
    const auto start = static_cast<std::uint32_t>(g.neighbors(0) >> 1);

    thread_local std::vector<std::uint32_t> ends;
    ends.assign(std::size_t{1} << m, 0);
    for (std::uint32_t s = start; s; s &= s - 1) {
        const std::uint32_t b = s & (0U - s);
        ends[b] = b;
    }
    for (std::uint32_t set = 1; set < full; ++set) {
        std::uint32_t e = ends[set];
        if (!e) continue;
        std::uint32_t reach = 0;
        for (; e; e &= e - 1) reach |= row[static_cast<std::size_t>(std::countr_zero(e))];
        for (std::uint32_t ext = reach & ~set & full; ext; ext &= ext - 1) {
            const std::uint32_t b = ext & (0U - ext);
            ends[set | b] |= b;
        }
    }
    return (ends[full] & start) != 0;
}

namespace {

bool clique_search(const Graph& g, Row candidates, int needed) {
    if (needed == 0) return true;
    while (std::popcount(candidates) >= needed) {
        // greedy colouring of the candidates bounds the clique size from above
        int colours = 0;
        for (Row uncoloured = candidates; uncoloured;) {
            ++colours;
            Row available = uncoloured;
            while (available) {
                const int v = std::countr_zero(available);
                available &= ~(bit(v) | g.neighbors(v));
                uncoloured &= ~bit(v);
            }
        }
        if (colours < needed) return false;
        const int v = std::countr_zero(candidates);
        if (clique_search(g, candidates & g.neighbors(v), needed - 1)) return true;
        candidates &= ~bit(v);
    }
    return false;
}

bool is_cycle_shape(const Graph& p) {
    if (p.order() < 3 || !p.is_connected_ignoring_isolated()) return false;
    for (int v = 0; v < p.order(); ++v) {
        if (p.degree(v) != 2) return false;
    }
    return true;
}

bool is_matching_shape(const Graph& p) {
    if (p.order() == 0) return false;
    for (int v = 0; v < p.order(); ++v) {
        if (p.degree(v) != 1) return false;
    }
    return true;
}

bool is_clique_shape(const Graph& p) {
    return p.order() >= 2 && p.edge_count() == p.order() * (p.order() - 1) / 2;
}

} // namespace

bool has_clique(const Graph& g, int k) {
    if (k <= 0) return true;
    return clique_search(g, g.vertex_set(), k);
}

ContainmentOracle::ContainmentOracle(const Graph& pattern, OracleKind kind)
    : kind_(kind), pattern_(pattern.strip_isolated()), plan_(pattern_) {
    switch (kind_) {
    case OracleKind::generic:
        break;
    case OracleKind::hamiltonian_cycle:
        if (!is_cycle_shape(pattern_)) throw_input("hamiltonian_cycle oracle needs a cycle pattern");
        size_ = pattern_.order();
        break;
    case OracleKind::perfect_matching:
        if (!is_matching_shape(pattern_)) throw_input("perfect_matching oracle needs a matching pattern kK_2");
        size_ = pattern_.edge_count();
        break;
    case OracleKind::clique:
        if (!is_clique_shape(pattern_)) throw_input("clique oracle needs a complete pattern K_k");
        size_ = pattern_.order();
        break;
    }
}

bool ContainmentOracle::contains(const Graph& host) const {
    switch (kind_) {
    case OracleKind::generic:
        return plan_.exists(host);
    case OracleKind::hamiltonian_cycle:
        if (host.order() != size_) {
            throw_input("hamiltonian_cycle oracle: cycle length " + std::to_string(size_) +
                        " differs from host order " + std::to_string(host.order()));
        }
        return has_hamiltonian_cycle(host);
    case OracleKind::perfect_matching:
        return 2 * size_ <= host.order() && maximum_matching_size(host) >= size_;
    case OracleKind::clique:
        return size_ <= host.order() && has_clique(host, size_);
    }
    return false;
}

bool contains_copy(const Graph& host, const Graph& pattern, OracleKind kind) {
    return ContainmentOracle(pattern, kind).contains(host);
}

} // namespace subthresh
