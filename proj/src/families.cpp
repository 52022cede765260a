#include "subthresh/families.hpp"

#include "subthresh/error.hpp"
#include "subthresh/json_out.hpp"
#include "subthresh/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace subthresh {

namespace {

const double kLn2 = std::log(2.0);
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

Graph path_graph(int edges) {
    Graph g(edges + 1);
    for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
    return g;
}

void check_cycle_length(int k, int cap) {
    if (k < 3) throw_input("cycle length must be at least 3");
    if (k > cap) throw_capacity("cycle length " + std::to_string(k) + " exceeds the cap of " + std::to_string(cap));
}

void check_ambient(int size_vertices, int n) {
    if (n > 4096) throw_capacity("ambient order above 4096 is not supported by the analytic routes");
    if (n < size_vertices) {
        throw_infeasible("H cannot appear in K_n at all: n = " + std::to_string(n) + " < v(H) = " +
                         std::to_string(size_vertices));
    }
}

// multiplicities of equal parts in a nonincreasing sequence
std::vector<int> part_multiplicities(const std::vector<int>& parts) {
    std::vector<int> out;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        out.push_back(static_cast<int>(j - i));
        i = j;
    }
    return out;
}

class FactorialTable {
public:
    explicit FactorialTable(int upto) : exact_(static_cast<std::size_t>(upto) + 1) {
        exact_[0] = 1;
        for (int i = 1; i <= upto; ++i) exact_[static_cast<std::size_t>(i)] = exact_[static_cast<std::size_t>(i) - 1] * i;
    }
    const BigInt& operator[](int i) const { return exact_[static_cast<std::size_t>(i)]; }

private:
    std::vector<BigInt> exact_;
};

void enumerate_partitions(int remaining, int max_part, int max_parts, std::vector<int>& parts,
                          const std::function<void(const std::vector<int>&)>& visit) {
    if (remaining == 0) {
        visit(parts);
        return;
    }
    if (max_parts == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // remaining edges must fit in the parts still available
        if (static_cast<long long>(part) * max_parts < remaining) break;
        parts.push_back(part);
        enumerate_partitions(remaining - part, part, max_parts - 1, parts, visit);
        parts.pop_back();
    }
}

std::string forest_label(const std::vector<int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '+';
        out += 'P' + std::to_string(parts[i]);
    }
    return out;
}

FamilyThresholds make_result(FamilySpec spec, int n, int edges, double log_e, double log_m, std::string we,
                             std::string wm) {
    FamilyThresholds r;
    r.spec = spec;
    r.n = n;
    r.edge_count = edges;
    r.log_p_expectation = log_e;
    r.log_p_modified = log_m;
    r.p_expectation = std::exp(log_e);
    r.p_modified = std::exp(log_m);
    r.witness_expectation = std::move(we);
    r.witness_modified = std::move(wm);
    return r;
}

} // namespace

std::string_view to_string(FamilyKind kind) noexcept {
    switch (kind) {
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::matching: return "matching";
    case FamilyKind::clique: return "clique";
    case FamilyKind::path: return "path";
    case FamilyKind::star: return "star";
    }
    return "cycle";
}

FamilyKind parse_family_kind(std::string_view name) {
    if (name == "cycle") return FamilyKind::cycle;
    if (name == "matching") return FamilyKind::matching;
    if (name == "clique") return FamilyKind::clique;
    if (name == "path") return FamilyKind::path;
    if (name == "star") return FamilyKind::star;
    throw_input("unknown family kind '" + std::string(name) + "'");
}

Graph make_family(const FamilySpec& spec) {
    const int s = spec.size;
    switch (spec.kind) {
    case FamilyKind::cycle: {
        check_cycle_length(s, kMaxVertices);
        Graph g(s);
        for (int i = 0; i < s; ++i) g.add_edge(i, (i + 1) % s);
        return g;
    }
    case FamilyKind::matching: {
        if (s < 1) throw_input("matching needs at least one edge");
        if (2 * s > kMaxVertices) throw_capacity("matching with " + std::to_string(s) + " edges exceeds 64 vertices");
        Graph g(2 * s);
        for (int i = 0; i < s; ++i) g.add_edge(2 * i, 2 * i + 1);
        return g;
    }
    case FamilyKind::clique:
        if (s < 2) throw_input("clique order must be at least 2");
        if (s > kMaxVertices) throw_capacity("clique order exceeds 64 vertices");
        return Graph::complete(s);
    case FamilyKind::path:
        if (s < 1) throw_input("path needs at least one edge");
        if (s + 1 > kMaxVertices) throw_capacity("path exceeds 64 vertices");
        return path_graph(s);
    case FamilyKind::star: {
        if (s < 1) throw_input("star needs at least one leaf");
        if (s + 1 > kMaxVertices) throw_capacity("star exceeds 64 vertices");
        Graph g(s + 1);
        for (int i = 1; i <= s; ++i) g.add_edge(0, i);
        return g;
    }
    }
    throw_input("unknown family kind");
}

std::string PathForestClass::label() const {
    return full_cycle ? "C" + std::to_string(cycle_length) : forest_label(parts);
}

void for_each_cycle_class(int k, const std::function<void(const PathForestClass&)>& visit) {
    check_cycle_length(k, kAnalyticCap);
    const FactorialTable fact(k);
    PathForestClass cls;
    cls.cycle_length = k;
    for (int e = 1; e < k; ++e) {
        const int max_parts = std::min(e, k - e);
        std::vector<int> parts;
        enumerate_partitions(e, e, max_parts, parts, [&](const std::vector<int>& p) {
            const int m = static_cast<int>(p.size());
            BigInt equal_parts = 1;
            for (int c : part_multiplicities(p)) equal_parts *= fact[c];
            cls.full_cycle = false;
            cls.parts = p;
            cls.edge_count = e;
            cls.vertex_count = e + m;
            cls.multiplicity = BigInt(k) * fact[m - 1] * binomial(k - e - 1, m - 1) / equal_parts;
            cls.aut_count = (BigInt(1) << m) * equal_parts;
            visit(cls);
        });
    }
    cls.full_cycle = true;
    cls.parts.clear();
    cls.edge_count = k;
    cls.vertex_count = k;
    cls.multiplicity = 1;
    cls.aut_count = 2 * k;
    visit(cls);
}

BigInt cycle_group_multiplicity(int k, int e, int m) {
    check_cycle_length(k, kAnalyticCap);
    if (e < 1 || e >= k || m < 1 || m > std::min(e, k - e)) return 0;
    return BigInt(k) * binomial(e - 1, m - 1) * binomial(k - e - 1, m - 1) / m;
}

BigInt cycle_census_total(int k) {
    check_cycle_length(k, kAnalyticCap);
    BigInt total = 1;  // the full cycle
    for (int e = 1; e < k; ++e) {
        for (int m = 1; m <= std::min(e, k - e); ++m) total += cycle_group_multiplicity(k, e, m);
    }
    return total;
}

std::vector<SubgraphClass> analytic_census_cycle(int k) {
    check_cycle_length(k, kMaterialisedCycleCap);
    std::map<int, CanonicalForm> path_forms;
    auto path_form = [&](int len) -> const CanonicalForm& {
        auto it = path_forms.find(len);
        if (it == path_forms.end()) it = path_forms.emplace(len, canonical_form(path_graph(len))).first;
        return it->second;
    };
    std::vector<SubgraphClass> out;
    for_each_cycle_class(k, [&](const PathForestClass& pf) {
        SubgraphClass c;
        c.edge_count = pf.edge_count;
        c.vertex_count = pf.vertex_count;
        c.multiplicity = pf.multiplicity;
        c.aut_count = pf.aut_count;
        if (pf.full_cycle) {
            c.representative = make_family({FamilyKind::cycle, k});
            c.canonical = canonical_form(c.representative);
        } else {
            c.representative = Graph(pf.vertex_count);
            std::vector<CanonicalForm> forms;
            int offset = 0;
            for (int len : pf.parts) {
                for (int i = 0; i < len; ++i) c.representative.add_edge(offset + i, offset + i + 1);
                offset += len + 1;
                forms.push_back(path_form(len));
            }
            c.canonical = assemble_canonical_form(std::move(forms));
        }
        out.push_back(std::move(c));
    });
    std::sort(out.begin(), out.end(), [](const SubgraphClass& a, const SubgraphClass& b) {
        if (a.edge_count != b.edge_count) return a.edge_count < b.edge_count;
        return a.canonical < b.canonical;
    });
    return out;
}

std::vector<SubgraphClass> analytic_census_matching(int k) {
    if (k < 1) throw_input("matching needs at least one edge");
    if (2 * k > kMaxVertices) {
        throw_capacity("matching census with concrete representatives needs 2k <= 64; use matching_thresholds");
    }
    const CanonicalForm edge_form = canonical_form(make_family({FamilyKind::matching, 1}));
    std::vector<SubgraphClass> out;
    for (int j = 1; j <= k; ++j) {
        SubgraphClass c;
        c.representative = make_family({FamilyKind::matching, j});
        c.canonical = assemble_canonical_form(std::vector<CanonicalForm>(static_cast<std::size_t>(j), edge_form));
        c.edge_count = j;
        c.vertex_count = 2 * j;
        c.multiplicity = binomial(k, j);
        c.aut_count = (BigInt(1) << j) * factorial(j);
        out.push_back(std::move(c));
    }
    return out;
}

FamilyThresholds cycle_thresholds_enumerated(int k, int n) {
    check_cycle_length(k, kMaxVertices);
    check_ambient(k, n);
    double best_e = kNegInf;
    double best_m = kNegInf;
    std::string we;
    std::string wm;
    for_each_cycle_class(k, [&](const PathForestClass& c) {
        const LogScaledCount copies = copies_in_complete(c.vertex_count, c.aut_count, n);
        const double e = static_cast<double>(c.edge_count);
        const double te = (-kLn2 - copies.log_value) / e;
        const double tm = (-kLn2 + log_of(c.multiplicity) - copies.log_value) / e;
        if (te > best_e) {
            best_e = te;
            we = c.label();
        }
        if (tm > best_m) {
            best_m = tm;
            wm = c.label();
        }
    });
    return make_result({FamilyKind::cycle, k}, n, k, best_e, best_m, we, wm);
}

FamilyThresholds cycle_thresholds(int k, int n) {
    check_cycle_length(k, kAnalyticCap);
    check_ambient(k, n);
    const int max_e = k - 1;
    const int max_m = k / 2;

    // best[e][m] = max over partitions of e into m parts of sum_l ln(c_l!)
    const FactorialTable fact(n);
    std::vector<double> log_fact(static_cast<std::size_t>(k) + 1, 0.0);
    for (int i = 1; i <= k; ++i) log_fact[static_cast<std::size_t>(i)] = log_of(fact[i]);
    const std::size_t width = static_cast<std::size_t>(max_m) + 1;
    std::vector<double> best((static_cast<std::size_t>(max_e) + 1) * width, kNegInf);
    best[0] = 0.0;
    for (int part = 1; part <= max_e; ++part) {
        std::vector<double> next = best;
        for (int e = 0; e <= max_e; ++e) {
            for (int m = 0; m <= max_m; ++m) {
                const double base = best[static_cast<std::size_t>(e) * width + static_cast<std::size_t>(m)];
                if (base == kNegInf) continue;
                for (int c = 1; e + part * c <= max_e && m + c <= max_m; ++c) {
                    double& slot = next[static_cast<std::size_t>(e + part * c) * width + static_cast<std::size_t>(m + c)];
                    slot = std::max(slot, base + log_fact[static_cast<std::size_t>(c)]);
                }
            }
        }
        best.swap(next);
    }

    double best_e = kNegInf;
    double best_m = kNegInf;
    std::string we;
    std::string wm;
    for (int e = 1; e <= max_e; ++e) {
        for (int m = 1; m <= std::min(e, k - e); ++m) {
            const double log_falling = log_of(fact[n] / fact[n - e - m]);
            // ln M_{J,H} - ln M_J for any path forest with e edges in m pieces
            const double log_ratio = log_of(BigInt(k) * fact[m - 1] * binomial(k - e - 1, m - 1)) +
                                     m * kLn2 - log_falling;
            const double tm = (log_ratio - kLn2) / e;
            const double aut_part = best[static_cast<std::size_t>(e) * width + static_cast<std::size_t>(m)];
            const double te = (-kLn2 - (log_falling - m * kLn2 - aut_part)) / e;
            const std::string label = "e=" + std::to_string(e) + ",m=" + std::to_string(m);
            if (tm > best_m) {
                best_m = tm;
                wm = label;
            }
            if (te > best_e) {
                best_e = te;
                we = label;
            }
        }
    }
    const double full_copies = log_of(fact[n] / fact[n - k] / (2 * k));
    const double full = (-kLn2 - full_copies) / k;
    if (full > best_m) {
        best_m = full;
        wm = "C" + std::to_string(k);
    }
    if (full > best_e) {
        best_e = full;
        we = "C" + std::to_string(k);
    }
    return make_result({FamilyKind::cycle, k}, n, k, best_e, best_m, we, wm);
}

FamilyThresholds matching_thresholds(int k, int n) {
    if (k < 1) throw_input("matching needs at least one edge");
    if (k > kAnalyticCap / 2) throw_capacity("matching size exceeds the analytic cap of 128 edges");
    check_ambient(2 * k, n);
    double best_e = kNegInf;
    double best_m = kNegInf;
    std::string we;
    std::string wm;
    for (int j = 1; j <= k; ++j) {
        const BigInt aut = (BigInt(1) << j) * factorial(j);
        const double log_copies = copies_in_complete(2 * j, aut, n).log_value;
        const double te = (-kLn2 - log_copies) / j;
        const double tm = (-kLn2 + log_of(binomial(k, j)) - log_copies) / j;
        const std::string label = std::to_string(j) + "K2";
        if (te > best_e) {
            best_e = te;
            we = label;
        }
        if (tm > best_m) {
            best_m = tm;
            wm = label;
        }
    }
    return make_result({FamilyKind::matching, k}, n, k, best_e, best_m, we, wm);
}

FamilyThresholds family_thresholds(const FamilySpec& spec, int n) {
    switch (spec.kind) {
    case FamilyKind::cycle: return cycle_thresholds(spec.size, n);
    case FamilyKind::matching: return matching_thresholds(spec.size, n);
    default: break;
    }
    const Graph g = make_family(spec);
    const ThresholdReport r = compute_thresholds(g, n);
    const auto label = [](const std::vector<Witness>& w) { return w.empty() ? std::string() : w.front().canonical.hex(); };
    return make_result(spec, n, g.edge_count(), r.log_p_expectation, r.log_p_modified, label(r.witnesses_expectation),
                       label(r.witnesses_modified));
}

FamilySpec family_spec_for(FamilyKind kind, int param, int n) {
    if (param > 0) return {kind, param};
    switch (kind) {
    case FamilyKind::cycle: return {kind, n};
    case FamilyKind::matching:
        if (n % 2 != 0) throw_infeasible("perfect matching needs even n, got " + std::to_string(n));
        return {kind, n / 2};
    default:
        throw_input(std::string(to_string(kind)) + " family needs a positive size parameter");
    }
}

OracleKind family_oracle(FamilyKind kind, int param) {
    switch (kind) {
    case FamilyKind::cycle: return param > 0 ? OracleKind::generic : OracleKind::hamiltonian_cycle;
    case FamilyKind::matching: return OracleKind::perfect_matching;
    case FamilyKind::clique: return OracleKind::clique;
    default: return OracleKind::generic;
    }
}

std::vector<ScalingRow> scaling_table(FamilyKind kind, std::span<const int> n_values, const ScalingOptions& options) {
    std::vector<ScalingRow> rows;
    for (const int n : n_values) {
        ScalingRow row;
        row.n = n;
        FamilySpec spec;
        try {
            spec = family_spec_for(kind, options.param, n);
            const FamilyThresholds t = family_thresholds(spec, n);
            row.edges = t.edge_count;
            row.p_expectation = t.p_expectation;
            row.p_modified = t.p_modified;
            row.n_p_modified = n * t.p_modified;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::input) throw;
            row.note = e.what();
            rows.push_back(std::move(row));
            continue;
        }
        if (options.with_pc) {
            try {
                EstimateOptions mc = options.mc;
                mc.oracle = family_oracle(kind, options.param);
                const Graph pattern = make_family(spec);
                PcEstimate est = estimate_pc(pattern, n, mc);
                row.pc_n_over_log_n = est.p_hat * n / std::log(static_cast<double>(n));
                if (row.edges > 1) {
                    row.pc_over_modified_log_e = est.p_hat / (*row.p_modified * std::log(static_cast<double>(row.edges)));
                }
                row.pc = std::move(est);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::input) throw;
                row.note = e.what();
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string scaling_csv(std::span<const ScalingRow> rows) {
    std::ostringstream out;
    out << "n,edges,p_E,p_tilde_E,n_p_tilde_E,p_c_hat,p_c_ci_low,p_c_ci_high,p_c_hat_n_over_ln_n,"
           "p_c_hat_over_p_tilde_E_ln_e\n";
    auto cell = [&](const std::optional<double>& v) { out << (v ? format_double(*v) : std::string("NA")); };
    for (const ScalingRow& r : rows) {
        out << r.n << ',' << r.edges << ',';
        cell(r.p_expectation);
        out << ',';
        cell(r.p_modified);
        out << ',';
        cell(r.n_p_modified);
        out << ',';
        cell(r.pc ? std::optional<double>(r.pc->p_hat) : std::nullopt);
        out << ',';
        cell(r.pc ? std::optional<double>(r.pc->ci_low) : std::nullopt);
        out << ',';
        cell(r.pc ? std::optional<double>(r.pc->ci_high) : std::nullopt);
        out << ',';
        cell(r.pc_n_over_log_n);
        out << ',';
        cell(r.pc_over_modified_log_e);
        out << '\n';
    }
    return out.str();
}

} // namespace subthresh
