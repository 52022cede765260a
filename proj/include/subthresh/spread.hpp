#pragma once

#include "subthresh/census.hpp"
#include "subthresh/graph.hpp"
#include "subthresh/mc.hpp"
#include "subthresh/oracles.hpp"
#include "subthresh/thresholds.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace subthresh {

/// pi_H is the uniform law over copies of H in K_n. For a fixed copy J_0 of J,
///   pi_H(J_0 in H) = M_{J,H} / M_J,
/// which depends on J only through its isomorphism class, so the maximal
/// spread parameter is a maximum over census classes:
///   ln R* = -max_J (ln M_{J,H} - ln M_J) / e(J).

struct SpreadClassMargin {
    std::size_t class_index = 0;
    CanonicalForm canonical;
    double log_ratio_over_e = 0;  // (ln M_{J,H} - ln M_J) / e(J)
    double margin = 0;            // -log_ratio_over_e - ln r_claimed
};

struct SpreadCertificate {
    int n = 0;
    CanonicalForm pattern_canonical;
    double r_claimed = 0;
    double r_star = 0;
    double log_r_claimed = 0;
    double log_r_star = 0;
    std::vector<SpreadClassMargin> worst_classes;  // classes binding R*
    bool pass = false;
};

double log_max_spread(const Graph& h, int n, std::span<const SubgraphClass> census);
double max_spread(const Graph& h, int n, std::span<const SubgraphClass> census);

/// Checks that pi_H is R-spread with R = 1/(2 p~_E(H)).
/// Input error when the report was computed for another (h, n).
SpreadCertificate verify_spread_certificate(const Graph& h, int n, std::span<const SubgraphClass> census,
                                            const ThresholdReport& report);
SpreadCertificate verify_spread_certificate(const Graph& h, int n, const ThresholdReport& report);

struct RateEstimate {
    double rate = 0;
    double standard_error = 0;  // sqrt(rate (1 - rate) / samples)
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

/// Fraction of uniform copies of h in K_n (uniform injective placements of
/// h's vertices) that contain every edge of the labelled graph j0 on [n].
RateEstimate empirical_containment_rate(const Graph& h, int n, const Graph& j0, std::uint64_t samples,
                                        std::uint64_t seed, int threads = 0);

/// Reporting probe for the spread-lemma consequence: containment rate of h in
/// G(n, p) at p = min(1, c * max(1, ln e(H)) * 2 p~_E(H)).
struct LemmaProbe {
    double c = 0;
    double p = 0;
    RateEstimate containment;
    WilsonInterval interval;
};

LemmaProbe spread_lemma_probe(const Graph& h, int n, double c, std::uint64_t samples, std::uint64_t seed,
                              OracleKind oracle = OracleKind::generic, int threads = 0);

} // namespace subthresh
