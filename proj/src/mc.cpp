#include "subthresh/mc.hpp"

#include "subthresh/error.hpp"
#include "subthresh/parallel.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace subthresh {

Graph sample_gnp(int n, double p, CounterStream& stream) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (stream.uniform() < p) g.add_edge(u, v);
        }
    }
    return g;
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t samples, double z) {
    if (samples == 0) return {0.0, 1.0};
    const double n = static_cast<double>(samples);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (phat + z2 / (2 * n)) / denom;
    const double half = z / denom * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n));
    WilsonInterval out{std::max(0.0, centre - half), std::min(1.0, centre + half)};
    if (successes == 0) out.low = 0.0;
    if (successes == samples) out.high = 1.0;
    return out;
}

ContainmentPolynomial::ContainmentPolynomial(const Graph& pattern, int n, int threads) : n_(n) {
    const int pairs = n * (n - 1) / 2;
    if (n < 0 || pairs > kMaxPairs) {
        throw_capacity("exact containment needs C(n,2) <= 24 (n <= 7), got n = " + std::to_string(n));
    }
    const ContainmentOracle oracle(pattern, OracleKind::generic);
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    }
    const std::uint64_t hosts = std::uint64_t{1} << pairs;
    const int workers = resolve_threads(threads);
    std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(workers),
                                                    std::vector<std::uint64_t>(static_cast<std::size_t>(pairs) + 1, 0));
    parallel_chunks(hosts, workers, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
        auto& out = partial[chunk];
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            Graph host(n);
            for (std::uint64_t m = mask; m; m &= m - 1) {
                const Edge& e = slots[static_cast<std::size_t>(std::countr_zero(m))];
                host.add_edge(e.u, e.v);
            }
            if (oracle.contains(host)) ++out[static_cast<std::size_t>(std::popcount(mask))];
        }
    });
    counts_.assign(static_cast<std::size_t>(pairs) + 1, 0);
    for (const auto& part : partial) {
        for (std::size_t k = 0; k < part.size(); ++k) counts_[k] += part[k];
    }
}

double ContainmentPolynomial::evaluate(double p) const {
    if (!(p >= 0) || p > 1) throw_domain("p must lie in [0, 1]");
    const int pairs = static_cast<int>(counts_.size()) - 1;
    double total = 0;
    for (int k = 0; k <= pairs; ++k) {
        const std::uint64_t c = counts_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        total += static_cast<double>(c) * std::pow(p, k) * std::pow(1 - p, pairs - k);
    }
    return total;
}

std::shared_ptr<const ContainmentPolynomial> containment_polynomial(const Graph& pattern, int n) {
    static std::mutex mutex;
    static std::map<std::pair<std::string, int>, std::shared_ptr<const ContainmentPolynomial>> cache;
    std::pair<std::string, int> key{canonical_form(pattern).key, n};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto poly = std::make_shared<const ContainmentPolynomial>(pattern, n);
    std::lock_guard lock(mutex);
    return cache.emplace(std::move(key), std::move(poly)).first->second;
}

double exact_containment_probability(const Graph& pattern, int n, double p) {
    if (!(p >= 0) || p > 1) throw_domain("p must lie in [0, 1]");
    return containment_polynomial(pattern, n)->evaluate(p);
}

std::string_view to_string(PcMethod method) noexcept {
    return method == PcMethod::exact ? "exact" : "monte_carlo";
}

PcEstimate exact_pc(const Graph& pattern, int n, double tol) {
    if (!(tol > 0)) throw_domain("tolerance must be positive");
    const Graph stripped = pattern.strip_isolated();
    if (stripped.edge_count() == 0) throw_input("pattern has no edges");
    if (stripped.order() > n) {
        throw_infeasible("H cannot appear in K_n at all: v(H) = " + std::to_string(stripped.order()) + " > n = " +
                         std::to_string(n));
    }
    const auto poly = containment_polynomial(stripped, n);
    double lo = 0;
    double hi = 1;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double value = poly->evaluate(mid);
        if (value == 0.5) {
            lo = hi = mid;
        } else if (value > 0.5) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    PcEstimate est;
    est.n = n;
    est.pattern_canonical = canonical_form(stripped);
    est.pattern_edges = stripped.edge_count();
    est.method = PcMethod::exact;
    est.p_hat = 0.5 * (lo + hi);
    est.ci_low = est.p_hat;
    est.ci_high = est.p_hat;
    return est;
}

std::uint64_t count_containing(const ContainmentOracle& oracle, int n, double p, std::uint64_t seed,
                               std::uint64_t probe, std::uint64_t begin, std::uint64_t end, int threads) {
    const int workers = resolve_threads(threads);
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
    parallel_chunks(end - begin, workers, [&](std::size_t chunk, std::uint64_t b, std::uint64_t e) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = begin + b; i < begin + e; ++i) {
            CounterStream stream(stream_key(seed, probe, i));
            if (oracle.contains(sample_gnp(n, p, stream))) ++hits;
        }
        partial[chunk] = hits;
    });
    std::uint64_t total = 0;
    for (const auto h : partial) total += h;
    return total;
}

PcEstimate estimate_pc(const Graph& pattern, int n, const EstimateOptions& options) {
    if (options.samples_per_probe < 100) throw_domain("samples_per_probe must be at least 100");
    if (!(options.tol >= 1e-4)) throw_domain("tolerance must be at least 1e-4");
    if (n > kMaxVertices) throw_capacity("n exceeds the 64-vertex capacity");
    const Graph stripped = pattern.strip_isolated();
    if (stripped.edge_count() == 0) throw_input("pattern has no edges");
    if (stripped.order() > n) {
        throw_infeasible("H cannot appear in K_n at all: v(H) = " + std::to_string(stripped.order()) + " > n = " +
                         std::to_string(n));
    }
    const ContainmentOracle oracle(stripped, options.oracle);
    const std::uint64_t cap = std::max(options.sample_cap, options.samples_per_probe);

    PcEstimate est;
    est.n = n;
    est.pattern_canonical = canonical_form(stripped);
    est.pattern_edges = stripped.edge_count();
    est.method = PcMethod::monte_carlo;
    est.oracle = options.oracle;
    est.samples_per_probe = options.samples_per_probe;
    est.seed = options.seed;

    double lo = 0;
    double hi = 1;
    double confident_lo = 0;
    double confident_hi = 1;
    std::uint64_t probe = 0;
    while (hi - lo > options.tol) {
        const double p = 0.5 * (lo + hi);
        std::uint64_t samples = options.samples_per_probe;
        std::uint64_t hits = count_containing(oracle, n, p, options.seed, probe, 0, samples, options.threads);
        int verdict = 0;  // -1 below 1/2, +1 above, 0 undecided
        for (;;) {
            const WilsonInterval w = wilson_interval(hits, samples);
            if (w.high < 0.5) {
                verdict = -1;
                break;
            }
            if (w.low > 0.5) {
                verdict = 1;
                break;
            }
            if (samples >= cap) break;
            const std::uint64_t more = std::min(samples, cap - samples);
            hits += count_containing(oracle, n, p, options.seed, probe, samples, samples + more, options.threads);
            samples += more;
        }
        est.probes.push_back({p, hits, samples});
        if (verdict < 0) {
            lo = p;
            confident_lo = std::max(confident_lo, p);
        } else if (verdict > 0) {
            hi = p;
            confident_hi = std::min(confident_hi, p);
        } else {
            est.low_confidence = true;
            if (2 * hits >= samples) {
                hi = p;
            } else {
                lo = p;
            }
        }
        ++probe;
    }
    est.p_hat = 0.5 * (lo + hi);
    est.ci_low = confident_lo;
    est.ci_high = confident_hi;
    return est;
}

} // namespace subthresh
