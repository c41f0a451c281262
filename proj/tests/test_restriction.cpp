#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "restriction.hpp"
#include "verify.hpp"

using namespace schubrest;

namespace {

// t_b/t_a - 1
LaurentPolynomial k_term(int n, int a, int b) { return -k_weight_factor(n, a, b); }

}  // namespace

TEST_CASE("Gr_{3,6} golden example") {
    GrassIndex alpha(3, 6, {1, 3, 5});
    GrassIndex beta(3, 6, {2, 5, 6});
    int n = 6;

    // Tableau sum: 11/2 -> (1,6)(3,6)(1,5); 12/2 -> (1,6)(4,5)(1,5);
    // 1{1,2}/2 -> (1,6)(3,6)(4,5)(1,5). Global sign (-1)^3.
    LaurentPolynomial expected_k =
        -(k_term(n, 1, 6) * k_term(n, 3, 6) * k_term(n, 1, 5) +
          k_term(n, 1, 6) * k_term(n, 4, 5) * k_term(n, 1, 5) +
          k_term(n, 1, 6) * k_term(n, 3, 6) * k_term(n, 4, 5) * k_term(n, 1, 5));
    CHECK(restrict_k(alpha, beta) == expected_k);

    // Independent derivation: Y is cut out by the regular sequence
    // y_{15}, y_{16}, y_{35} y_{46} - y_{36} y_{45}, so its class is
    // (1 - t5/t1)(1 - t6/t1)(1 - t5 t6 / (t3 t4)).
    LaurentPolynomial quadric_factor =
        LaurentPolynomial::one(n) - LaurentPolynomial::monomial({0, 0, -1, -1, 1, 1}, 1);
    LaurentPolynomial independent =
        k_weight_factor(n, 1, 5) * k_weight_factor(n, 1, 6) * quadric_factor;
    CHECK(restrict_k(alpha, beta) == independent);

    LaurentPolynomial expected_h =
        h_weight_factor(n, 1, 6) * h_weight_factor(n, 3, 6) * h_weight_factor(n, 1, 5) +
        h_weight_factor(n, 1, 6) * h_weight_factor(n, 4, 5) * h_weight_factor(n, 1, 5);
    CHECK(restrict_h(alpha, beta) == expected_h);

    // Hand expansion of (t6-t1)(t5-t1)(t5+t6-t3-t4), frozen.
    LaurentPolynomial hand(n);
    auto mono = [&](std::initializer_list<int> e, long long c) {
        hand += LaurentPolynomial::monomial(Exponents(e), c);
    };
    mono({0, 0, 0, 0, 2, 1}, 1);   // t5^2 t6
    mono({0, 0, 0, 0, 1, 2}, 1);   // t5 t6^2
    mono({0, 0, 1, 0, 1, 1}, -1);  // -t3 t5 t6
    mono({0, 0, 0, 1, 1, 1}, -1);  // -t4 t5 t6
    mono({1, 0, 0, 0, 1, 1}, -2);  // -2 t1 t5 t6
    mono({1, 0, 0, 0, 0, 2}, -1);  // -t1 t6^2
    mono({1, 0, 1, 0, 0, 1}, 1);   // t1 t3 t6
    mono({1, 0, 0, 1, 0, 1}, 1);   // t1 t4 t6
    mono({1, 0, 0, 0, 2, 0}, -1);  // -t1 t5^2
    mono({1, 0, 1, 0, 1, 0}, 1);   // t1 t3 t5
    mono({1, 0, 0, 1, 1, 0}, 1);   // t1 t4 t5
    mono({2, 0, 0, 0, 1, 0}, 1);   // t1^2 t5
    mono({2, 0, 0, 0, 0, 1}, 1);   // t1^2 t6
    mono({2, 0, 1, 0, 0, 0}, -1);  // -t1^2 t3
    mono({2, 0, 0, 1, 0, 0}, -1);  // -t1^2 t4
    CHECK(restrict_h(alpha, beta) == hand);
}

TEST_CASE("degenerate contracts") {
    // alpha = {1..d} restricts to 1.
    for (const GrassIndex& beta : all_indices(3, 6)) {
        GrassIndex min_alpha(3, 6, {1, 2, 3});
        CHECK(restrict_k(min_alpha, beta).is_constant(1));
        CHECK(restrict_h(min_alpha, beta).is_constant(1));
    }
    // Vanishing exactly when pi(alpha) is not below pi(beta).
    for (const GrassIndex& alpha : all_indices(2, 5)) {
        for (const GrassIndex& beta : all_indices(2, 5)) {
            bool leq = partition_leq(alpha.shape(), beta.shape());
            CHECK(restrict_k(alpha, beta).is_zero() == !leq);
            CHECK(restrict_h(alpha, beta).is_zero() == !leq);
        }
    }
    CHECK(restrict_k(GrassIndex(3, 6, {2, 5, 6}), GrassIndex(3, 6, {1, 3, 5})).is_zero());
}

TEST_CASE("alpha = beta gives the single-term Euler class product") {
    for (const GrassIndex& beta : all_indices(2, 5)) {
        Partition mu = beta.shape();
        CHECK(enumerate_ssvt(mu, mu).size() == 1);
        int n = beta.n();
        int d = beta.d();
        std::vector<int> comp = beta.complement();
        LaurentPolynomial expected_k = LaurentPolynomial::one(n);
        LaurentPolynomial expected_h = LaurentPolynomial::one(n);
        for (const Box& box : mu.boxes()) {
            int a = comp[static_cast<size_t>(box.col) - 1];
            int b = beta.entry(d + 1 - box.row);
            expected_k *= k_term(n, a, b);
            expected_h *= h_weight_factor(n, a, b);
        }
        if (beta.length() % 2 == 1) expected_k = -expected_k;
        CHECK(restrict_k(beta, beta) == expected_k);
        CHECK(restrict_h(beta, beta) == expected_h);
    }
    CHECK(enumerate_ssvt(Partition({3, 3, 1}), Partition({3, 3, 1})).size() == 1);
}

TEST_CASE("coordinate subspace classes") {
    GrassIndex beta(3, 6, {2, 5, 6});
    int n = 6;
    SetValuedTableau s(Partition({2, 1, 0}), {{{1}, {1, 2}}, {{2}}});
    LaurentPolynomial expected = k_weight_factor(n, 1, 6) * k_weight_factor(n, 3, 6) *
                                 k_weight_factor(n, 4, 5) * k_weight_factor(n, 1, 5);
    CHECK(coordinate_subspace_class(s, beta) == expected);

    SetValuedTableau empty(Partition({0, 0, 0}), {});
    CHECK(coordinate_subspace_class(empty, beta).is_constant(1));

    // Duplicate coordinates collapse: 2@(1,1) and 2@(2,2) sit on the same
    // diagonal with equal value, so both select the chart coordinate (2,5);
    // the six entries cut out only five coordinates.
    SetValuedTableau dup(Partition({2, 2, 0}), {{{1, 2}, {2}}, {{2}, {2, 3}}});
    GrassIndex beta2(3, 6, {4, 5, 6});
    LaurentPolynomial cls = coordinate_subspace_class(dup, beta2);
    CHECK(cls == k_weight_factor(n, 1, 6) * k_weight_factor(n, 2, 5) *
                     k_weight_factor(n, 3, 5) * k_weight_factor(n, 1, 5) *
                     k_weight_factor(n, 3, 4));
}

TEST_CASE("union class oracle basics") {
    GrassIndex beta(3, 6, {2, 5, 6});
    SetValuedTableau p1(Partition({2, 1, 0}), {{{1}, {1}}, {{2}}});
    SetValuedTableau p2(Partition({2, 1, 0}), {{{1}, {2}}, {{2}}});
    CHECK(union_class_oracle({p1}, beta) == coordinate_subspace_class(p1, beta));
    CHECK(union_class_oracle({p1, p1}, beta) == coordinate_subspace_class(p1, beta));
    GrassIndex alpha(3, 6, {1, 3, 5});
    CHECK(union_class_oracle({p1, p2}, beta) == restrict_k(alpha, beta));
    CHECK_THROWS_AS(union_class_oracle(std::vector<SetValuedTableau>(21, p1), beta, 20),
                    std::invalid_argument);
}

TEST_CASE("oracle equivalence sweep on Gr_{2,4}") {
    for (const GrassIndex& alpha : all_indices(2, 4)) {
        for (const GrassIndex& beta : all_indices(2, 4)) {
            LaurentPolynomial k = restrict_k(alpha, beta);
            CHECK(k == restrict_k_via_nsum(alpha, beta));
            CHECK(k == union_class_oracle(enumerate_ssyt(alpha.shape(), beta.shape()), beta));
        }
    }
}

TEST_CASE("positivity audit") {
    GrassIndex alpha(3, 6, {1, 3, 5});
    GrassIndex beta(3, 6, {2, 5, 6});
    AuditReport report = positivity_audit(alpha, beta);
    CHECK(report.all_positive);
    CHECK(report.terms.size() == 3);
    CHECK(report.factor_count == 10);
    CHECK(report.global_sign == -1);
    // Factor multiset of the first tableau 11/2.
    CHECK(report.terms[0].factors ==
          std::vector<std::pair<int, int>>{{1, 6}, {3, 6}, {1, 5}});

    AuditReport trivial = positivity_audit(GrassIndex(3, 6, {1, 2, 3}), beta);
    CHECK(trivial.all_positive);
    CHECK(trivial.factor_count == 0);

    // Every summand of the cohomology class is homogeneous of degree l(alpha).
    for (const auto& term : report.terms) {
        if (!term.tableau.is_young()) continue;
        LaurentPolynomial prod = LaurentPolynomial::one(6);
        for (auto [a, b] : term.factors) prod *= h_weight_factor(6, a, b);
        for (const auto& [e, c] : prod.terms()) {
            int deg = 0;
            for (int x : e) deg += x;
            CHECK(deg == alpha.length());
        }
    }
}

TEST_CASE("lowest degree consistency") {
    CHECK(consistency_lowest_degree(GrassIndex(3, 6, {1, 3, 5}), GrassIndex(3, 6, {2, 5, 6})));
    CHECK(consistency_lowest_degree(GrassIndex(3, 6, {2, 5, 6}), GrassIndex(3, 6, {2, 5, 6})));
    for (const GrassIndex& alpha : all_indices(2, 5))
        for (const GrassIndex& beta : all_indices(2, 5))
            CHECK(consistency_lowest_degree(alpha, beta));
}

TEST_CASE("verification suites pass at desk scale") {
    auto results = run_suite("all", 2, 4);
    INFO(format_report(results));
    CHECK(all_pass(results));
}

TEST_CASE("oracle equivalence across every Grassmannian with n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (int d = 1; d < n; ++d) {
            auto results = run_suite("oracles", d, n);
            INFO("d=" << d << " n=" << n << "\n" << format_report(results));
            CHECK(all_pass(results));
        }
    }
}
