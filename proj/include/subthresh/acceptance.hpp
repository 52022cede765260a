#pragma once

#include "subthresh/graph.hpp"
#include "subthresh/json_out.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace subthresh {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// K_2..K_5, C_3..C_8, P_2..P_7 (by edge count), K_{1,3}..K_{1,5}, 1K_2..4K_2, Q_3.
std::vector<NamedGraph> acceptance_corpus();

struct AcceptanceOptions {
    std::uint64_t seed = 0;
    int threads = 0;
    /// Rewrite the golden Hamiltonian band instead of comparing against it.
    bool calibrate = false;
    std::string golden_dir;  // empty: the source tree's tests/golden
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;
};

/// Criterion ids for "all", "fast", a single id, or a comma-separated id list.
std::vector<int> suite_criteria(std::string_view suite);

class AcceptanceRunner {
public:
    explicit AcceptanceRunner(AcceptanceOptions options);

    CriterionResult run(int id);

    /// Runs every criterion of the suite, printing one line per criterion.
    /// Returns the number of failures.
    int run_suite(std::string_view suite, std::ostream& out);

    /// Per-pattern rows of the bounded-ratio check, serialised deterministically.
    std::string bounded_ratio_json(int threads);

private:
    struct Outcome {
        bool pass = false;
        std::string detail;
    };
    Outcome census_completeness();
    Outcome counting_oracle();
    Outcome sandwich();
    Outcome pinned_values();
    Outcome spread_certificate();
    Outcome double_counting();
    Outcome hamiltonian_scaling();
    Outcome bounded_ratio();
    Outcome separation();
    Outcome first_moment();
    Outcome determinism();

    AcceptanceOptions options_;
    std::vector<NamedGraph> corpus_;
    std::string bounded_ratio_cache_;
    int bounded_ratio_cache_threads_ = -1;
};

/// Bound on p_c upper CI / (p~_E max(1, ln e(H))), frozen after calibration
/// (first run at seed 0 gave 1.951; seeds 1-3 gave 1.70 to 1.92).
extern const double kBoundedRatioConstant;

/// Allowed ratio between the largest and smallest n p~_E(C_n) in the band check.
inline constexpr double kHamiltonianBandRatio = 4.0;

} // namespace subthresh
