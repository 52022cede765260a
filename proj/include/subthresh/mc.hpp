#pragma once

#include "subthresh/canonical.hpp"
#include "subthresh/graph.hpp"
#include "subthresh/oracles.hpp"
#include "subthresh/random.hpp"

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

namespace subthresh {

/// G(n, p): each of the C(n,2) pairs (in lexicographic order) is an edge iff
/// the next uniform draw is below p. Using one stream for several p gives the
/// standard monotone coupling.
Graph sample_gnp(int n, double p, CounterStream& stream);

struct WilsonInterval {
    double low = 0;
    double high = 1;
};

inline constexpr double kZ95 = 1.959963984540054;

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t samples, double z = kZ95);

/// Number of host graphs with k edges (k = 0..C(n,2)) that contain the
/// pattern; P_p(contain) = sum_k count[k] p^k (1-p)^(C(n,2)-k).
class ContainmentPolynomial {
public:
    static constexpr int kMaxPairs = 24;

    ContainmentPolynomial(const Graph& pattern, int n, int threads = 0);

    double evaluate(double p) const;
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    int n() const noexcept { return n_; }

private:
    int n_;
    std::vector<std::uint64_t> counts_;
};

/// Exact P_p(G(n,p) contains the pattern), summing over all 2^C(n,2) hosts.
/// Polynomials are built once per (pattern, n) and cached for the process.
/// Capacity error when C(n,2) > 24; domain error unless 0 <= p <= 1.
double exact_containment_probability(const Graph& pattern, int n, double p);
std::shared_ptr<const ContainmentPolynomial> containment_polynomial(const Graph& pattern, int n);

enum class PcMethod { exact, monte_carlo };
std::string_view to_string(PcMethod method) noexcept;

struct ProbeRecord {
    double p = 0;
    std::uint64_t successes = 0;
    std::uint64_t samples = 0;
};

struct PcEstimate {
    int n = 0;
    CanonicalForm pattern_canonical;
    int pattern_edges = 0;
    PcMethod method = PcMethod::exact;
    OracleKind oracle = OracleKind::generic;
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::uint64_t samples_per_probe = 0;
    std::vector<ProbeRecord> probes;
    std::uint64_t seed = 0;
    bool low_confidence = false;  // some probe hit the sample cap undecided
};

/// Root of P_p(contain) = 1/2 by bisection to absolute tolerance `tol`.
PcEstimate exact_pc(const Graph& pattern, int n, double tol = 1e-12);

struct EstimateOptions {
    std::uint64_t samples_per_probe = 2000;
    std::uint64_t sample_cap = 32000;
    double tol = 5e-3;
    std::uint64_t seed = 0;
    OracleKind oracle = OracleKind::generic;
    int threads = 0;
};

/// Monte Carlo bisection for p_c.
///
/// Each probe draws fresh samples. The bracket moves only when the Wilson 95%
/// interval of the probe excludes 1/2; otherwise the probe's sample count is
/// doubled (new sample indices, same probe stream) up to sample_cap, after
/// which the bracket is split on the point estimate and the estimate is
/// flagged low_confidence. The reported interval runs from the highest
/// probe confidently below 1/2 to the lowest probe confidently above it.
/// Results depend only on the options, never on the thread count.
PcEstimate estimate_pc(const Graph& pattern, int n, const EstimateOptions& options);

/// Successes among samples [begin, end) of probe `probe` at edge probability p.
std::uint64_t count_containing(const ContainmentOracle& oracle, int n, double p, std::uint64_t seed,
                               std::uint64_t probe, std::uint64_t begin, std::uint64_t end, int threads);

} // namespace subthresh
