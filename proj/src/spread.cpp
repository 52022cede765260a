#include "subthresh/spread.hpp"

#include "subthresh/error.hpp"
#include "subthresh/parallel.hpp"
#include "subthresh/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace subthresh {

namespace {

constexpr std::uint64_t kPlacementStream = 0x5350524541440001ULL;
constexpr std::uint64_t kLemmaStream = 0x5350524541440002ULL;

std::vector<double> class_log_ratios(std::span<const SubgraphClass> census, int n) {
    std::vector<double> out;
    out.reserve(census.size());
    for (const ClassTerm& t : class_terms(census, n)) {
        out.push_back((t.log_multiplicity - t.log_copies) / static_cast<double>(t.edge_count));
    }
    return out;
}

void check_feasible(const Graph& h, int n) {
    if (n < h.non_isolated_count()) {
        throw_infeasible("H cannot appear in K_n at all: n = " + std::to_string(n) + " < v(H) = " +
                         std::to_string(h.non_isolated_count()));
    }
}

} // namespace

double log_max_spread(const Graph& h, int n, std::span<const SubgraphClass> census) {
    require_full_census(h, census);
    check_feasible(h, n);
    const auto ratios = class_log_ratios(census, n);
    return -*std::max_element(ratios.begin(), ratios.end());
}

double max_spread(const Graph& h, int n, std::span<const SubgraphClass> census) {
    return std::exp(log_max_spread(h, n, census));
}

SpreadCertificate verify_spread_certificate(const Graph& h, int n, std::span<const SubgraphClass> census,
                                            const ThresholdReport& report) {
    if (report.n != n || report.pattern_canonical != canonical_form(h)) {
        throw_input("threshold report was computed for a different (H, n)");
    }
    require_full_census(h, census);
    check_feasible(h, n);
    const auto ratios = class_log_ratios(census, n);
    const double worst = *std::max_element(ratios.begin(), ratios.end());

    SpreadCertificate cert;
    cert.n = n;
    cert.pattern_canonical = report.pattern_canonical;
    cert.log_r_star = -worst;
    cert.log_r_claimed = -std::log(2.0) - report.log_p_modified;
    cert.r_star = std::exp(cert.log_r_star);
    cert.r_claimed = std::exp(cert.log_r_claimed);
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (ratios[i] >= worst - kTieTolerance) {
            cert.worst_classes.push_back({i, census[i].canonical, ratios[i], -ratios[i] - cert.log_r_claimed});
        }
    }
    cert.pass = cert.log_r_claimed <= cert.log_r_star + kTieTolerance;
    return cert;
}

SpreadCertificate verify_spread_certificate(const Graph& h, int n, const ThresholdReport& report) {
    const auto census = subgraph_census(h);
    return verify_spread_certificate(h, n, census, report);
}

RateEstimate empirical_containment_rate(const Graph& h, int n, const Graph& j0, std::uint64_t samples,
                                        std::uint64_t seed, int threads) {
    const Graph pattern = h.strip_isolated();
    check_feasible(pattern, n);
    if (n > kMaxVertices) throw_capacity("n exceeds the 64-vertex capacity");
    if (samples == 0) throw_domain("samples must be positive");
    if (j0.order() > n && (j0.non_isolated() >> n) != 0) throw_input("J_0 uses vertices outside [n]");
    const int v = pattern.order();
    const std::vector<Edge> pattern_edges = pattern.edges();

    const int workers = resolve_threads(threads);
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
    parallel_chunks(samples, workers, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
        std::array<int, kMaxVertices> slot{};
        std::uint64_t hits = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            CounterStream stream(stream_key(seed, kPlacementStream, i));
            std::iota(slot.begin(), slot.begin() + n, 0);
            // partial Fisher-Yates: slot[0..v) is a uniform injective placement
            for (int k = 0; k < v; ++k) {
                const auto j = k + static_cast<int>(stream.below(static_cast<std::uint64_t>(n - k)));
                std::swap(slot[static_cast<std::size_t>(k)], slot[static_cast<std::size_t>(j)]);
            }
            Graph copy(n);
            for (const Edge& e : pattern_edges) {
                copy.add_edge(slot[static_cast<std::size_t>(e.u)], slot[static_cast<std::size_t>(e.v)]);
            }
            if (copy.contains_edges_of(j0)) ++hits;
        }
        partial[chunk] = hits;
    });
    RateEstimate out;
    out.samples = samples;
    for (const auto h_ : partial) out.hits += h_;
    out.rate = static_cast<double>(out.hits) / static_cast<double>(samples);
    out.standard_error = std::sqrt(out.rate * (1 - out.rate) / static_cast<double>(samples));
    return out;
}

LemmaProbe spread_lemma_probe(const Graph& h, int n, double c, std::uint64_t samples, std::uint64_t seed,
                              OracleKind oracle, int threads) {
    if (!(c > 0)) throw_domain("lemma constant must be positive");
    if (samples == 0) throw_domain("samples must be positive");
    const Graph pattern = h.strip_isolated();
    const ThresholdReport report = compute_thresholds(pattern, n);
    const double log_k = std::max(1.0, std::log(static_cast<double>(pattern.edge_count())));
    LemmaProbe probe;
    probe.c = c;
    probe.p = std::min(1.0, c * log_k * 2.0 * report.p_modified);
    const ContainmentOracle containment(pattern, oracle);
    const std::uint64_t hits = count_containing(containment, n, probe.p, seed, kLemmaStream, 0, samples, threads);
    probe.containment.hits = hits;
    probe.containment.samples = samples;
    probe.containment.rate = static_cast<double>(hits) / static_cast<double>(samples);
    probe.containment.standard_error =
        std::sqrt(probe.containment.rate * (1 - probe.containment.rate) / static_cast<double>(samples));
    probe.interval = wilson_interval(hits, samples);
    return probe;
}

} // namespace subthresh
