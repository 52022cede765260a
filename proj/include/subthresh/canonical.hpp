#pragma once

#include "subthresh/bigint.hpp"
#include "subthresh/graph.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace subthresh {

/// Isomorphism-invariant key of a graph with its isolated vertices removed.
///
/// `key` is one byte holding the order followed by the upper triangle of the
/// canonically labelled adjacency matrix, row-major, packed most significant
/// bit first. The empty graph has the one-byte key "\0".
struct CanonicalForm {
    std::string key;
    int order = 0;
    int edge_count = 0;

    std::string hex() const;

    bool operator==(const CanonicalForm& other) const noexcept { return key == other.key; }
    std::strong_ordering operator<=>(const CanonicalForm& other) const noexcept {
        return key <=> other.key;
    }
};

CanonicalForm canonical_form(const Graph& g);

/// Canonical form of the disjoint union of graphs with the given forms.
/// canonical_form(g) == assemble_canonical_form(forms of g's components).
CanonicalForm assemble_canonical_form(std::vector<CanonicalForm> components);

/// Canonical labelling of a connected graph: result[v] is v's canonical label.
std::vector<int> canonical_labelling(const Graph& connected);

/// Graph reconstructed from a key; isomorphic to the graph the key came from.
Graph graph_from_canonical(const CanonicalForm& form);

/// |Aut(g)| of the non-isolated part of g (isolated vertices are ignored).
BigInt automorphism_count(const Graph& g);

} // namespace subthresh
