#pragma once

#include "subthresh/bigint.hpp"
#include "subthresh/canonical.hpp"
#include "subthresh/graph.hpp"

#include <span>
#include <vector>

namespace subthresh {

/// One isomorphism class of nonempty edge-induced subgraphs H' of a host H.
struct SubgraphClass {
    Graph representative;       // isolated vertices stripped
    CanonicalForm canonical;
    int edge_count = 0;         // e(H')
    int vertex_count = 0;       // v(H'), non-isolated vertices
    BigInt multiplicity = 0;    // M_{H',H}: edge subsets of H inducing a copy of H'
    BigInt aut_count = 0;       // |Aut(H')|
};

/// Exact count with a natural-log mirror; log of zero is -inf.
struct LogScaledCount {
    BigInt exact = 0;
    double log_value = 0.0;

    static LogScaledCount of(BigInt value);
    bool is_zero() const { return exact.is_zero(); }
};

struct CensusOptions {
    /// Only connected edge subsets. The result is then NOT a full census and
    /// thresholds computed from it are lower bounds; compute_thresholds
    /// rejects it.
    bool connected_only = false;
    /// Largest e(H) accepted for full enumeration of all 2^e(H) - 1 subsets.
    int edge_cap = 24;
    int threads = 0;
};

/// All isomorphism classes of nonempty edge subsets of h, sorted by
/// (edge_count, canonical key). The multiplicities of a full census sum to
/// 2^e(h) - 1.
///
/// Throws a capacity error when e(h) exceeds options.edge_cap (full mode) or
/// 64 (connected-only mode), and an input error when h has no edges.
std::vector<SubgraphClass> subgraph_census(const Graph& h, const CensusOptions& options = {});

/// Number of copies of `pattern` in K_n: (n)_v / |Aut(pattern)|, zero when v > n.
/// The pattern must not have isolated vertices.
LogScaledCount copies_in_complete(const Graph& pattern, int n);
LogScaledCount copies_in_complete(int vertex_count, const BigInt& aut_count, int n);

BigInt multiplicity_sum(std::span<const SubgraphClass> census);

/// Index of the class whose canonical form equals `form`, or -1.
std::ptrdiff_t find_class(std::span<const SubgraphClass> census, const CanonicalForm& form);

} // namespace subthresh
