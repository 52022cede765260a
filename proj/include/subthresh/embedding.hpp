#pragma once

#include "subthresh/graph.hpp"

#include <cstdint>
#include <vector>

namespace subthresh {

/// Precomputed search order for mapping one pattern into many hosts.
///
/// Pattern vertices are placed so that each new vertex has as many already
/// placed neighbours as possible (ties: higher degree, then lower label).
/// Candidates for a vertex are the intersection of the host rows of its placed
/// neighbours, restricted to unused host vertices of sufficient degree.
class EmbeddingPlan {
public:
    explicit EmbeddingPlan(const Graph& pattern);

    /// Number of injective maps pattern -> host sending edges to edges.
    std::uint64_t count(const Graph& host) const;
    /// Early-exit variant of count(host) > 0.
    bool exists(const Graph& host) const;

    int pattern_order() const noexcept { return static_cast<int>(steps_.size()); }

private:
    struct Step {
        int vertex = 0;
        int degree = 0;
        std::vector<int> placed_neighbours;  // positions in steps_
    };

    template <bool StopAtFirst>
    std::uint64_t search(const Graph& host) const;

    std::vector<Step> steps_;
    int max_degree_ = 0;
};

std::uint64_t count_embeddings(const Graph& pattern, const Graph& host);

} // namespace subthresh
