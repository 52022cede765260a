#pragma once

#include "subthresh/bigint.hpp"
#include "subthresh/census.hpp"
#include "subthresh/graph.hpp"
#include "subthresh/mc.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subthresh {

enum class FamilyKind { cycle, matching, clique, path, star };

std::string_view to_string(FamilyKind kind) noexcept;
FamilyKind parse_family_kind(std::string_view name);

/// size: cycle length, matching edges, clique order, path edges or star leaves.
struct FamilySpec {
    FamilyKind kind = FamilyKind::cycle;
    int size = 3;
};

/// Analytic formulas accept sizes up to this cap.
inline constexpr int kAnalyticCap = 256;
/// Largest cycle whose analytic census is materialised as SubgraphClass values.
inline constexpr int kMaterialisedCycleCap = 48;

/// Standard labelled representative: cycle 0-1-..-(n-1)-0, matching
/// {0-1, 2-3, ..}, clique on 0..k-1, path 0-1-..-l, star centred at 0.
Graph make_family(const FamilySpec& spec);

/// A nonempty edge subset class of C_k: a disjoint union of paths with the
/// given edge lengths, or the whole cycle.
struct PathForestClass {
    int cycle_length = 0;
    bool full_cycle = false;
    std::vector<int> parts;  // path lengths in edges, nonincreasing; empty for the full cycle
    int edge_count = 0;
    int vertex_count = 0;
    BigInt multiplicity = 0;  // M_{H',C_k}
    BigInt aut_count = 0;

    std::string label() const;  // e.g. "P3+P1+P1" or "C8"
};

/// Visits every class of nonempty edge subsets of C_k (3 <= k <= 256).
/// Arcs with lengths l_1..l_m (m parts, e edges) fit on C_k iff m <= k - e;
/// the number of placements is k (m-1)! C(k-e-1, m-1) / prod_l c_l!, where
/// c_l counts parts equal to l.
void for_each_cycle_class(int k, const std::function<void(const PathForestClass&)>& visit);

/// Census of C_k in SubgraphClass form (3 <= k <= 48), identical to
/// subgraph_census(make_family({cycle, k})) wherever both run.
/// Sum of M_{J,C_k} over all path forests J with e edges in m pieces:
/// (k/m) C(e-1, m-1) C(k-e-1, m-1).
BigInt cycle_group_multiplicity(int k, int e, int m);

/// Sum of all class multiplicities of C_k via the (e, m) groups; equals 2^k - 1.
BigInt cycle_census_total(int k);

std::vector<SubgraphClass> analytic_census_cycle(int k);

/// Census of kK_2: classes jK_2 with multiplicity C(k, j) (1 <= k <= 32 here;
/// matching_thresholds handles k up to 128).
std::vector<SubgraphClass> analytic_census_matching(int k);

struct FamilyThresholds {
    FamilySpec spec;
    int n = 0;
    int edge_count = 0;
    double log_p_expectation = 0;
    double log_p_modified = 0;
    double p_expectation = 0;
    double p_modified = 0;
    std::string witness_expectation;
    std::string witness_modified;
};

/// p_E, p~_E of C_k in G(n,p) by enumerating every path-forest class with
/// exact integers (feasible to k = 64).
FamilyThresholds cycle_thresholds_enumerated(int k, int n);

/// Same maxima grouped by (edges e, components m): M_{J,H}/M_J depends only on
/// (e, m), and the smallest M_J for given (e, m) maximises prod_l c_l!, found
/// by a knapsack over part sizes. Handles k up to 256.
FamilyThresholds cycle_thresholds(int k, int n);

/// p_E, p~_E of kK_2 in G(n,p), k <= 128.
FamilyThresholds matching_thresholds(int k, int n);

/// Thresholds of a family member by its analytic route (cycle, matching) or
/// by full census of the concrete graph (clique, path, star).
FamilyThresholds family_thresholds(const FamilySpec& spec, int n);

struct ScalingOptions {
    /// 0 ties the size to n (cycle: C_n, matching: (n/2)K_2); required for
    /// clique, path and star.
    int param = 0;
    bool with_pc = false;
    EstimateOptions mc;
};

struct ScalingRow {
    int n = 0;
    int edges = 0;
    std::optional<double> p_expectation;
    std::optional<double> p_modified;
    std::optional<double> n_p_modified;
    std::optional<PcEstimate> pc;
    std::optional<double> pc_n_over_log_n;
    std::optional<double> pc_over_modified_log_e;
    std::string note;  // why a cell is unavailable
};

FamilySpec family_spec_for(FamilyKind kind, int param, int n);
OracleKind family_oracle(FamilyKind kind, int param);

/// One row per n; cells that hit a capacity or feasibility limit are left
/// empty with the reason in `note`.
std::vector<ScalingRow> scaling_table(FamilyKind kind, std::span<const int> n_values, const ScalingOptions& options);

std::string scaling_csv(std::span<const ScalingRow> rows);

} // namespace subthresh
