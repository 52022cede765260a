#include "subthresh/thresholds.hpp"

#include "subthresh/error.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace subthresh {

namespace {

const double kLn2 = std::log(2.0);

std::vector<std::size_t> within_tolerance(const std::vector<double>& values, double best) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= best - kTieTolerance) out.push_back(i);
    }
    return out;
}

ThresholdReport build_report(const Graph& h, int n, std::span<const SubgraphClass> census, double log_constant) {
    require_full_census(h, census);
    const int v = h.non_isolated_count();
    if (n < v) {
        throw_infeasible("H cannot appear in K_n at all: n = " + std::to_string(n) + " < v(H) = " +
                         std::to_string(v));
    }
    const std::vector<ClassTerm> terms = class_terms(census, n);
    const TermMaxima maxima = maximize_terms(terms, log_constant);

    ThresholdReport report;
    report.n = n;
    report.pattern_canonical = canonical_form(h);
    report.pattern_edges = h.edge_count();
    report.log_p_expectation = maxima.log_expectation;
    report.log_p_modified = maxima.log_modified;
    report.p_expectation = std::exp(maxima.log_expectation);
    report.p_modified = std::exp(maxima.log_modified);
    for (std::size_t i : maxima.expectation_argmax) {
        report.witnesses_expectation.push_back(
            {i, census[i].canonical, census[i].edge_count, maxima.expectation_terms[i]});
    }
    for (std::size_t i : maxima.modified_argmax) {
        report.witnesses_modified.push_back({i, census[i].canonical, census[i].edge_count, maxima.modified_terms[i]});
    }
    return report;
}

} // namespace

TermMaxima maximize_terms(std::span<const ClassTerm> terms, double log_constant) {
    TermMaxima out;
    out.log_expectation = -std::numeric_limits<double>::infinity();
    out.log_modified = -std::numeric_limits<double>::infinity();
    out.expectation_terms.reserve(terms.size());
    out.modified_terms.reserve(terms.size());
    for (const ClassTerm& t : terms) {
        assert(t.edge_count >= 1);
        const double e = static_cast<double>(t.edge_count);
        const double te = (log_constant - t.log_copies) / e;
        const double tm = (log_constant + t.log_multiplicity - t.log_copies) / e;
        out.expectation_terms.push_back(te);
        out.modified_terms.push_back(tm);
        out.log_expectation = std::max(out.log_expectation, te);
        out.log_modified = std::max(out.log_modified, tm);
    }
    out.expectation_argmax = within_tolerance(out.expectation_terms, out.log_expectation);
    out.modified_argmax = within_tolerance(out.modified_terms, out.log_modified);
    return out;
}

void require_full_census(const Graph& h, std::span<const SubgraphClass> census) {
    if (census.empty()) throw_input("census is empty");
    const int e = h.edge_count();
    if (e < 1 || e > 63) throw_input("census check needs 1 <= e(H) <= 63");
    const BigInt expected = (BigInt(1) << e) - 1;
    if (multiplicity_sum(census) != expected) {
        throw_input("census multiplicities do not sum to 2^e(H) - 1; a full census of H is required");
    }
    const SubgraphClass& top = census.back();
    if (top.edge_count != e || top.multiplicity != 1 || top.canonical != canonical_form(h)) {
        throw_input("census does not belong to the given graph");
    }
}

std::vector<ClassTerm> class_terms(std::span<const SubgraphClass> census, int n) {
    std::vector<ClassTerm> terms;
    terms.reserve(census.size());
    for (const SubgraphClass& c : census) {
        if (c.edge_count < 1) throw_input("census class with no edges");
        const LogScaledCount copies = copies_in_complete(c.vertex_count, c.aut_count, n);
        if (copies.is_zero()) {
            throw_infeasible("class with " + std::to_string(c.vertex_count) + " vertices cannot appear in K_" +
                             std::to_string(n));
        }
        terms.push_back({c.edge_count, log_of(c.multiplicity), copies.log_value});
    }
    return terms;
}

ThresholdReport compute_thresholds(const Graph& h, int n, std::span<const SubgraphClass> census) {
    return build_report(h, n, census, -kLn2);
}

ThresholdReport compute_thresholds(const Graph& h, int n) {
    const auto census = subgraph_census(h);
    return compute_thresholds(h, n, census);
}

ThresholdReport compute_generalized_thresholds(const Graph& h, int n, std::span<const SubgraphClass> census,
                                               double constant) {
    if (!(constant > 0)) throw_domain("threshold constant must be positive");
    return build_report(h, n, census, std::log(constant));
}

double expectation_value(const SubgraphClass& pattern_class, int n, double p) {
    if (!(p > 0) || p > 1) throw_domain("p must lie in (0, 1]");
    const LogScaledCount copies = copies_in_complete(pattern_class.vertex_count, pattern_class.aut_count, n);
    return copies.log_value + static_cast<double>(pattern_class.edge_count) * std::log(p);
}

} // namespace subthresh
