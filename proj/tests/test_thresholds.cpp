#include "doctest.h"
#include "support.hpp"

#include "subthresh/canonical.hpp"
#include "subthresh/census.hpp"
#include "subthresh/error.hpp"
#include "subthresh/families.hpp"
#include "subthresh/thresholds.hpp"

#include <cmath>

using namespace subthresh;
using doctest::Approx;

namespace {

Graph family(FamilyKind kind, int size) { return make_family({kind, size}); }

std::vector<Graph> corpus_up_to(int max_order) {
    std::vector<Graph> out;
    for (int k = 2; k <= 5; ++k) out.push_back(Graph::complete(k));
    for (int k = 3; k <= 8; ++k) out.push_back(family(FamilyKind::cycle, k));
    for (int l = 2; l <= 7; ++l) out.push_back(family(FamilyKind::path, l));
    for (int s = 3; s <= 5; ++s) out.push_back(family(FamilyKind::star, s));
    for (int j = 1; j <= 4; ++j) out.push_back(family(FamilyKind::matching, j));
    std::erase_if(out, [&](const Graph& g) { return g.order() > max_order; });
    return out;
}

// Thresholds from the brute-force census and brute copy counts only.
struct BruteThresholds {
    double p_expectation = 0;
    double p_modified = 0;
};

BruteThresholds brute_thresholds(const Graph& h, int n) {
    BruteThresholds out;
    for (const auto& c : support::brute_census(h)) {
        const double copies = static_cast<double>(support::brute_copies_in_complete(c.representative, n));
        const double e = c.representative.edge_count();
        out.p_expectation = std::max(out.p_expectation, std::pow(1.0 / (2.0 * copies), 1.0 / e));
        out.p_modified = std::max(out.p_modified, std::pow(static_cast<double>(c.multiplicity) / (2.0 * copies), 1.0 / e));
    }
    return out;
}

} // namespace

TEST_CASE("thresholds of K3 at n = 5") {
    const auto r = compute_thresholds(Graph::complete(3), 5);
    const double expected = std::cbrt(1.0 / 20.0);
    CHECK(std::abs(r.p_expectation - expected) <= 1e-12);
    CHECK(std::abs(r.p_modified - expected) <= 1e-12);
    CHECK(r.p_modified == Approx(0.368403).epsilon(1e-6));
    REQUIRE(r.witnesses_modified.size() == 1);
    REQUIRE(r.witnesses_expectation.size() == 1);
    CHECK(r.witnesses_modified[0].canonical == canonical_form(Graph::complete(3)));
    CHECK(r.witnesses_expectation[0].canonical == canonical_form(Graph::complete(3)));
    const auto brute = brute_thresholds(Graph::complete(3), 5);
    CHECK(r.p_modified == Approx(brute.p_modified).epsilon(1e-12));
}

TEST_CASE("thresholds of K3 at n = 3") {
    const auto r = compute_thresholds(Graph::complete(3), 3);
    CHECK(std::abs(r.p_modified - std::pow(2.0, -1.0 / 3.0)) <= 1e-12);
    CHECK(r.p_modified == Approx(0.793701).epsilon(1e-6));
}

TEST_CASE("thresholds of 2K2 at n = 4") {
    const auto r = compute_thresholds(family(FamilyKind::matching, 2), 4);
    CHECK(std::abs(r.p_modified - std::sqrt(1.0 / 6.0)) <= 1e-12);
    CHECK(std::abs(r.p_expectation - std::sqrt(1.0 / 6.0)) <= 1e-12);
    CHECK(support::brute_copies_in_complete(family(FamilyKind::matching, 2), 4) == 3);
    CHECK(support::brute_copies_in_complete(Graph::complete(2), 4) == 6);
    REQUIRE(r.witnesses_modified.size() == 1);
    CHECK(r.witnesses_modified[0].edge_count == 2);
}

TEST_CASE("thresholds agree with the brute-force census evaluation") {
    for (const Graph& h : corpus_up_to(7)) {
        for (int n = h.order(); n <= 7; ++n) {
            const auto r = compute_thresholds(h, n);
            const auto b = brute_thresholds(h, n);
            CHECK(r.p_expectation == Approx(b.p_expectation).epsilon(1e-12));
            CHECK(r.p_modified == Approx(b.p_modified).epsilon(1e-12));
        }
    }
}

TEST_CASE("report invariants over the corpus") {
    for (const Graph& h : corpus_up_to(12)) {
        const auto census = subgraph_census(h);
        double previous = 0.0;
        for (int n = h.order(); n <= 12; ++n) {
            const auto r = compute_thresholds(h, n, census);
            CHECK(r.log_p_expectation <= r.log_p_modified);
            CHECK(r.log_p_modified <= -std::log(2.0) / h.edge_count() + 1e-12);
            CHECK(r.p_modified > 0.0);
            CHECK(r.p_modified < 1.0);
            for (const auto& w : r.witnesses_modified) CHECK(std::abs(w.log_value - r.log_p_modified) <= 1e-12);
            for (const auto& w : r.witnesses_expectation) CHECK(std::abs(w.log_value - r.log_p_expectation) <= 1e-12);
            if (n > h.order()) CHECK(r.log_p_modified <= previous + 1e-15);
            previous = r.log_p_modified;
        }
    }
}

TEST_CASE("defining property of the thresholds") {
    for (const Graph& h : corpus_up_to(8)) {
        const auto census = subgraph_census(h);
        for (int n = h.order(); n <= 10; ++n) {
            const auto r = compute_thresholds(h, n, census);
            const double slack = std::log1p(1e-9);
            bool modified_violated = false;
            bool expectation_violated = false;
            for (const auto& c : census) {
                const double log_half_m = log_of(c.multiplicity) - std::log(2.0);
                CHECK(expectation_value(c, n, r.p_modified) >= log_half_m - slack);
                CHECK(expectation_value(c, n, r.p_expectation) >= -std::log(2.0) - slack);
                modified_violated |= expectation_value(c, n, r.p_modified * (1 - 1e-6)) < log_half_m;
                expectation_violated |= expectation_value(c, n, r.p_expectation * (1 - 1e-6)) < -std::log(2.0);
            }
            CHECK(modified_violated);
            CHECK(expectation_violated);
        }
    }
}

TEST_CASE("full class term coincides for both thresholds") {
    for (const Graph& h : corpus_up_to(8)) {
        const auto census = subgraph_census(h);
        const auto idx = find_class(census, canonical_form(h));
        REQUIRE(idx >= 0);
        CHECK(census[static_cast<std::size_t>(idx)].multiplicity == 1);
        const int n = h.order() + 2;
        const auto terms = class_terms(census, n);
        const auto maxima = maximize_terms(terms, std::log(2.0));
        const auto i = static_cast<std::size_t>(idx);
        CHECK(maxima.modified_terms[i] == maxima.expectation_terms[i]);
    }
}

TEST_CASE("expectation values") {
    const auto k5 = subgraph_census(Graph::complete(3));
    const auto& edge = k5.front();
    const auto& triangle = k5.back();
    CHECK(std::abs(expectation_value(edge, 5, 0.1) - std::log(1.0)) <= 1e-12);
    CHECK(std::abs(expectation_value(triangle, 6, 0.3) - std::log(0.54)) <= 1e-12);
    const auto r = compute_thresholds(Graph::complete(3), 7);
    CHECK(expectation_value(triangle, 7, r.p_modified) >= std::log(0.5) - 1e-12);
    CHECK_THROWS_AS(expectation_value(edge, 5, 0.0), Error);
    CHECK_THROWS_AS(expectation_value(edge, 5, -0.5), Error);
    CHECK_THROWS_AS(expectation_value(edge, 5, 1.5), Error);
}

TEST_CASE("ties report every witness") {
    // In K3 at n = 3 every class term for the spread ratio is 0, so the
    // generalised constant 1 makes all three classes tie for p~_E.
    const auto census = subgraph_census(Graph::complete(3));
    const auto r = compute_generalized_thresholds(Graph::complete(3), 3, census, 1.0);
    CHECK(r.witnesses_modified.size() == 3);
    CHECK(r.p_modified == Approx(1.0));
}

TEST_CASE("generalised constant 1/2 reproduces the standard report") {
    const Graph h = family(FamilyKind::cycle, 6);
    const auto census = subgraph_census(h);
    const auto a = compute_thresholds(h, 9, census);
    const auto b = compute_generalized_thresholds(h, 9, census, 0.5);
    CHECK(a.log_p_modified == b.log_p_modified);
    CHECK(a.log_p_expectation == b.log_p_expectation);
}

TEST_CASE("threshold errors") {
    try {
        compute_thresholds(Graph::complete(4), 3);
        FAIL("expected infeasible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::infeasible);
    }
    const auto partial = subgraph_census(family(FamilyKind::cycle, 6), {.connected_only = true});
    CHECK_THROWS_AS(compute_thresholds(family(FamilyKind::cycle, 6), 8, partial), Error);
    const auto other = subgraph_census(Graph::complete(3));
    CHECK_THROWS_AS(compute_thresholds(family(FamilyKind::cycle, 4), 8, other), Error);
}
