#include "subthresh/census.hpp"

#include "subthresh/error.hpp"
#include "subthresh/parallel.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace subthresh {

namespace {

struct Tally {
    std::uint64_t count = 0;
    EdgeMask first_mask = ~EdgeMask{0};  // smallest mask in the class; picks the representative
    int edge_count = 0;
};

using TallyMap = std::unordered_map<std::string, Tally>;

void record(TallyMap& tallies, const Graph& sub, EdgeMask mask) {
    CanonicalForm form = canonical_form(sub);
    Tally& t = tallies[std::move(form.key)];
    ++t.count;
    t.first_mask = std::min(t.first_mask, mask);
    t.edge_count = sub.edge_count();
}

Graph subgraph_from_mask(const Graph& h, const std::vector<Edge>& edges, EdgeMask mask) {
    Graph sub(h.order());
    for (EdgeMask m = mask; m; m &= m - 1) {
        const Edge& e = edges[static_cast<std::size_t>(std::countr_zero(m))];
        sub.add_edge(e.u, e.v);
    }
    return sub;
}

// Connected edge subsets are the connected vertex subsets of the line graph;
// enumerated with the ESU extension scheme so each one is produced once.
void extend_connected(const Graph& h, const std::vector<Edge>& edges, const std::vector<EdgeMask>& line,
                      int root, EdgeMask subset, EdgeMask closed_nbhd, EdgeMask extension, TallyMap& tallies) {
    record(tallies, subgraph_from_mask(h, edges, subset), subset);
    const EdgeMask above_root = ~low_bits(root + 1);
    while (extension) {
        const int w = std::countr_zero(extension);
        extension &= extension - 1;
        const EdgeMask exclusive = line[static_cast<std::size_t>(w)] & ~closed_nbhd & above_root;
        extend_connected(h, edges, line, root, subset | bit(w),
                         closed_nbhd | line[static_cast<std::size_t>(w)] | bit(w), extension | exclusive, tallies);
    }
}

} // namespace

LogScaledCount LogScaledCount::of(BigInt value) {
    const double lg = log_of(value);
    return {std::move(value), lg};
}

std::vector<SubgraphClass> subgraph_census(const Graph& h, const CensusOptions& options) {
    const int e = h.edge_count();
    if (e == 0) throw_input("census requires a graph with at least one edge");
    if (options.connected_only) {
        if (e > 64) throw_capacity("connected-only census supports at most 64 edges");
    } else if (e > options.edge_cap) {
        throw_capacity("full census of " + std::to_string(e) + " edges exceeds the cap of " +
                       std::to_string(options.edge_cap) +
                       " edges; use connected-only mode or the family analytic census");
    }
    const std::vector<Edge> edges = h.edges();
    const int threads = resolve_threads(options.threads);

    std::vector<TallyMap> partial;
    if (options.connected_only) {
        std::vector<EdgeMask> line(static_cast<std::size_t>(e), 0);
        for (int i = 0; i < e; ++i) {
            for (int j = 0; j < e; ++j) {
                const Edge& a = edges[static_cast<std::size_t>(i)];
                const Edge& b = edges[static_cast<std::size_t>(j)];
                if (i != j && (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)) {
                    line[static_cast<std::size_t>(i)] |= bit(j);
                }
            }
        }
        partial.resize(static_cast<std::size_t>(std::min(threads, e)));
        parallel_chunks(static_cast<std::uint64_t>(e), threads, [&](std::size_t chunk, std::uint64_t b, std::uint64_t en) {
            for (auto root = static_cast<int>(b); root < static_cast<int>(en); ++root) {
                const EdgeMask nb = line[static_cast<std::size_t>(root)];
                extend_connected(h, edges, line, root, bit(root), nb | bit(root), nb & ~low_bits(root + 1),
                                 partial[chunk]);
            }
        });
    } else {
        const std::uint64_t total = (std::uint64_t{1} << e) - 1;
        partial.resize(static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total))));
        parallel_chunks(total, threads, [&](std::size_t chunk, std::uint64_t b, std::uint64_t en) {
            for (std::uint64_t i = b; i < en; ++i) {
                const EdgeMask mask = i + 1;
                record(partial[chunk], subgraph_from_mask(h, edges, mask), mask);
            }
        });
    }

    std::map<std::string, Tally> merged;
    for (auto& part : partial) {
        for (auto& [key, t] : part) {
            Tally& m = merged[key];
            m.count += t.count;
            m.first_mask = std::min(m.first_mask, t.first_mask);
            m.edge_count = t.edge_count;
        }
    }

    std::vector<SubgraphClass> out;
    out.reserve(merged.size());
    for (auto& [key, t] : merged) {
        SubgraphClass c;
        c.representative = subgraph_from_mask(h, edges, t.first_mask).strip_isolated();
        c.canonical = {key, c.representative.order(), t.edge_count};
        c.edge_count = t.edge_count;
        c.vertex_count = c.representative.order();
        c.multiplicity = t.count;
        c.aut_count = automorphism_count(c.representative);
        out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(), [](const SubgraphClass& a, const SubgraphClass& b) {
        return a.edge_count < b.edge_count;
    });
    return out;
}

LogScaledCount copies_in_complete(int vertex_count, const BigInt& aut_count, int n) {
    if (aut_count <= 0) throw_input("automorphism count must be positive");
    if (vertex_count > n) return LogScaledCount::of(0);
    return LogScaledCount::of(falling_factorial(n, vertex_count) / aut_count);
}

LogScaledCount copies_in_complete(const Graph& pattern, int n) {
    if (pattern.non_isolated_count() != pattern.order()) {
        throw_input("pattern has isolated vertices; strip them before counting copies");
    }
    return copies_in_complete(pattern.order(), automorphism_count(pattern), n);
}

BigInt multiplicity_sum(std::span<const SubgraphClass> census) {
    BigInt total = 0;
    for (const auto& c : census) total += c.multiplicity;
    return total;
}

std::ptrdiff_t find_class(std::span<const SubgraphClass> census, const CanonicalForm& form) {
    for (std::size_t i = 0; i < census.size(); ++i) {
        if (census[i].canonical == form) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
}

} // namespace subthresh
