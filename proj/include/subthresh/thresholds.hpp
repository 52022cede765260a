#pragma once

#include "subthresh/canonical.hpp"
#include "subthresh/census.hpp"
#include "subthresh/graph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace subthresh {

/// Log-domain tolerance for treating two class terms as tied.
inline constexpr double kTieTolerance = 1e-12;

/// One census class reduced to what the threshold maxima need.
struct ClassTerm {
    int edge_count = 0;            // e(H') >= 1
    double log_multiplicity = 0;   // ln M_{H',H}
    double log_copies = 0;         // ln M_{H'} in K_n
};

/// Maxima over classes of the two log-threshold terms
///   expectation: (ln c - ln M_{H'}) / e(H')
///   modified:    (ln c + ln M_{H',H} - ln M_{H'}) / e(H')
/// with c = exp(log_constant); the defining constant is c = 1/2.
struct TermMaxima {
    double log_expectation = 0;
    double log_modified = 0;
    std::vector<std::size_t> expectation_argmax;  // indices within kTieTolerance of the max
    std::vector<std::size_t> modified_argmax;
    std::vector<double> expectation_terms;
    std::vector<double> modified_terms;
};

TermMaxima maximize_terms(std::span<const ClassTerm> terms, double log_constant);

struct Witness {
    std::size_t class_index = 0;   // into the census the report was built from
    CanonicalForm canonical;
    int edge_count = 0;
    double log_value = 0;
};

struct ThresholdReport {
    int n = 0;
    CanonicalForm pattern_canonical;
    int pattern_edges = 0;
    double p_expectation = 0;      // p_E
    double p_modified = 0;         // p~_E
    double log_p_expectation = 0;
    double log_p_modified = 0;
    std::vector<Witness> witnesses_expectation;
    std::vector<Witness> witnesses_modified;
};

/// p_E and p~_E of h in G(n, p) from the closed-form maxima over census classes.
///
/// `census` must be the full census of h (multiplicities summing to
/// 2^e(h) - 1, top class equal to h); otherwise an input error is thrown.
/// Throws an infeasible error when n < v(h).
ThresholdReport compute_thresholds(const Graph& h, int n, std::span<const SubgraphClass> census);
ThresholdReport compute_thresholds(const Graph& h, int n);

/// Same maxima with the constant 1/2 replaced by `constant` (> 0). For
/// exploration only; the values may exceed 1.
ThresholdReport compute_generalized_thresholds(const Graph& h, int n, std::span<const SubgraphClass> census,
                                               double constant);

/// ln E_p Z_{H'} = ln M_{H'} + e(H') ln p. Throws a domain error unless 0 < p <= 1.
double expectation_value(const SubgraphClass& pattern_class, int n, double p);

/// Validates that `census` is the full census of h; throws input error otherwise.
void require_full_census(const Graph& h, std::span<const SubgraphClass> census);

std::vector<ClassTerm> class_terms(std::span<const SubgraphClass> census, int n);

} // namespace subthresh
