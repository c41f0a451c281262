#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "laurent.hpp"

using namespace schubrest;

namespace {

LaurentPolynomial t(int n, int i, int p = 1) { return LaurentPolynomial::variable(n, i, p); }

LaurentPolynomial random_poly(std::mt19937& rng, int n, int terms, int max_abs_exp) {
    LaurentPolynomial p(n);
    for (int k = 0; k < terms; ++k) {
        Exponents e(static_cast<size_t>(n));
        for (int& x : e)
            x = static_cast<int>(rng() % static_cast<unsigned>(2 * max_abs_exp + 1)) - max_abs_exp;
        long long c = static_cast<long long>(rng() % 9) - 4;
        p += LaurentPolynomial::monomial(std::move(e), c);
    }
    return p;
}

}  // namespace

TEST_CASE("coordinate subspace class of the axis example") {
    // [Y]_K = (1 - t2/t3)(1 - t1^-2) over four torus variables.
    int n = 4;
    LaurentPolynomial a = LaurentPolynomial::one(n) -
                          LaurentPolynomial::monomial({0, 1, -1, 0}, 1);
    LaurentPolynomial b = LaurentPolynomial::one(n) -
                          LaurentPolynomial::monomial({-2, 0, 0, 0}, 1);
    LaurentPolynomial expected = LaurentPolynomial::one(n) -
                                 LaurentPolynomial::monomial({0, 1, -1, 0}, 1) -
                                 LaurentPolynomial::monomial({-2, 0, 0, 0}, 1) +
                                 LaurentPolynomial::monomial({-2, 1, -1, 0}, 1);
    CHECK(a * b == expected);
    CHECK((a * b).term_count() == 4);
}

TEST_CASE("annihilation and units") {
    int n = 4;
    LaurentPolynomial f = LaurentPolynomial::monomial({-1, 0, 0, 1}, 1) - LaurentPolynomial::one(n);
    CHECK((f * LaurentPolynomial::zero(n)).is_zero());
    CHECK(f * LaurentPolynomial::one(n) == f);
    CHECK(f - f == LaurentPolynomial::zero(n));
}

TEST_CASE("weight factors") {
    int n = 6;
    CHECK(k_weight_factor(n, 1, 6) ==
          LaurentPolynomial::one(n) - LaurentPolynomial::monomial({-1, 0, 0, 0, 0, 1}, 1));
    CHECK(k_weight_factor(n, 3, 3).is_zero());
    CHECK(h_weight_factor(n, 1, 6) == t(n, 6) - t(n, 1));
    CHECK(h_weight_factor(n, 2, 4) == t(n, 4) - t(n, 2));
    CHECK(h_weight_factor(n, 2, 2).is_zero());
}

TEST_CASE("ring laws on random triples") {
    std::mt19937 rng(12345);
    int n = 3;
    for (int trial = 0; trial < 60; ++trial) {
        LaurentPolynomial a = random_poly(rng, n, 4, 3);
        LaurentPolynomial b = random_poly(rng, n, 4, 3);
        LaurentPolynomial c = random_poly(rng, n, 4, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * LaurentPolynomial::one(n) == a);
    }
}

TEST_CASE("truncated multiplication agrees with exact on low degrees") {
    std::mt19937 rng(777);
    int n = 3;
    int cutoff = 8;
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPolynomial a(n), b(n);
        for (int k = 0; k < 4; ++k) {
            Exponents e(static_cast<size_t>(n));
            int budget = cutoff / 2;
            for (int& x : e) {
                x = static_cast<int>(rng() % static_cast<unsigned>(budget + 1));
                budget -= x;
            }
            long long c = static_cast<long long>(rng() % 7) - 3;
            a += LaurentPolynomial::monomial(e, c);
            std::shuffle(e.begin(), e.end(), rng);
            b += LaurentPolynomial::monomial(e, static_cast<long long>(rng() % 7) - 3);
        }
        TruncatedSeries sa = TruncatedSeries::from_polynomial(a, cutoff);
        TruncatedSeries sb = TruncatedSeries::from_polynomial(b, cutoff);
        CHECK(sa * sb == TruncatedSeries::from_polynomial(a * b, cutoff));
    }
}

TEST_CASE("lowest degree part of single factors") {
    // A single K-factor list of SSYT type gives exactly the product of
    // (s_a - s_b).
    int n = 6;
    std::vector<WeightFactorTerm> sum{{-1, {{1, 6}, {3, 6}, {1, 5}}}};
    LaurentPolynomial expected =
        (t(n, 1) - t(n, 6)) * (t(n, 3) - t(n, 6)) * (t(n, 1) - t(n, 5));
    expected = -expected;
    CHECK(lowest_degree_part(sum, n, 4) == expected);

    // A strict set-valued term of 4 factors contributes nothing at degree 3.
    std::vector<WeightFactorTerm> both{{-1, {{1, 6}, {3, 6}, {1, 5}}},
                                       {-1, {{1, 6}, {3, 6}, {5, 6}, {1, 5}}}};
    CHECK(lowest_degree_part(both, n, 4) == expected);
}

TEST_CASE("lowest degree part rejects a cutoff below the answer") {
    std::vector<WeightFactorTerm> sum{{1, {{1, 2}, {1, 3}}}};
    CHECK_THROWS_AS(lowest_degree_part(sum, 3, 1), std::invalid_argument);
    CHECK(lowest_degree_part({}, 3, 0).is_zero());
}

TEST_CASE("overflow is detected, not wrapped") {
    int n = 1;
    LaurentPolynomial big = LaurentPolynomial::constant(n, 1ll << 62);
    CHECK_THROWS_AS(big * LaurentPolynomial::constant(n, 4), std::overflow_error);
    CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("text rendering is canonical") {
    int n = 4;
    LaurentPolynomial p = LaurentPolynomial::one(n) -
                          LaurentPolynomial::monomial({0, 1, -1, 0}, 1) -
                          LaurentPolynomial::monomial({-2, 0, 0, 0}, 1) +
                          LaurentPolynomial::monomial({-2, 1, -1, 0}, 1);
    CHECK(to_text(p) == "-t1^-2 + t1^-2*t2*t3^-1 + 1 - t2*t3^-1");
    CHECK(to_text(LaurentPolynomial::zero(2)) == "0");
    CHECK(to_text(LaurentPolynomial::constant(2, -3)) == "-3");
    CHECK(to_latex(LaurentPolynomial::monomial({2, -1}, -2)) == "-2 t_{1}^{2} t_{2}^{-1}");
}

TEST_CASE("json round trip") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        LaurentPolynomial p = random_poly(rng, 5, 6, 4);
        CHECK(poly_from_json(to_json(p)) == p);
    }
    CHECK(poly_from_json("{\"n\":2,\"terms\":[]}").is_zero());
    CHECK_THROWS(poly_from_json("{\"terms\":[]}"));
    CHECK_THROWS(poly_from_json("{\"n\":2,\"terms\":[{\"exponents\":[1],\"coeff\":1}]}"));
}
