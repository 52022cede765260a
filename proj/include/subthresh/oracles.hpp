#pragma once

#include "subthresh/embedding.hpp"
#include "subthresh/graph.hpp"

#include <string>
#include <string_view>

namespace subthresh {

enum class OracleKind { generic, hamiltonian_cycle, perfect_matching, clique };

std::string_view to_string(OracleKind kind) noexcept;
/// Accepts "generic", "hamiltonian_cycle", "perfect_matching", "clique"
/// (dashes allowed in place of underscores). Throws input error otherwise.
OracleKind parse_oracle_kind(std::string_view name);

/// Largest matching, Edmonds' blossom algorithm.
int maximum_matching_size(const Graph& g);

/// Held-Karp bitmask DP over vertex subsets; capacity error above 20 vertices.
bool has_hamiltonian_cycle(const Graph& g);
inline constexpr int kHamiltonianMaxOrder = 20;

/// Branch and bound with a greedy colouring bound.
bool has_clique(const Graph& g, int k);

/// Decides whether a host contains a copy of a fixed pattern.
///
/// Specialised kinds require the matching pattern shape:
///   hamiltonian_cycle: a cycle whose length equals the host order
///   perfect_matching:  a matching kK_2 (host contains it iff nu(host) >= k)
///   clique:            a complete graph K_k
/// A mismatch is an input error, raised on construction (shape) or on
/// contains() (cycle length vs host order).
class ContainmentOracle {
public:
    ContainmentOracle(const Graph& pattern, OracleKind kind);

    bool contains(const Graph& host) const;

    OracleKind kind() const noexcept { return kind_; }
    const Graph& pattern() const noexcept { return pattern_; }

private:
    OracleKind kind_;
    Graph pattern_;
    EmbeddingPlan plan_;
    int size_ = 0;  // cycle length, matching edges or clique order
};

bool contains_copy(const Graph& host, const Graph& pattern, OracleKind kind = OracleKind::generic);

} // namespace subthresh
