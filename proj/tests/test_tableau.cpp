#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "tableau.hpp"
#include "verify.hpp"

using namespace schubrest;

namespace {

SetValuedTableau svt(const Partition& shape, std::vector<std::vector<Cell>> rows) {
    return SetValuedTableau(shape, std::move(rows));
}

const Partition shape21({2, 1});
const Partition shape210({2, 1, 0});

// 1 1 / 2 and friends on shape (2,1).
SetValuedTableau t(const Cell& a, const Cell& b, const Cell& c) {
    return svt(shape21, {{a, b}, {c}});
}

}  // namespace

TEST_CASE("semistandardness") {
    // Shape (5,3,2) tableau with set-valued cells: weak rows, strict columns.
    SetValuedTableau fig(Partition({5, 3, 2}),
                         {{{1}, {2, 3}, {3}, {4, 6, 7}, {7, 9}},
                          {{2}, {4, 5, 7}, {8, 9}},
                          {{4, 6}, {8}}});
    CHECK(is_semistandard(fig));
    CHECK(fig.entry_count() == 18);
    CHECK(fig.box_count() == 10);

    CHECK(is_semistandard(svt(Partition({1}), {{{1, 5, 9}}})));
    CHECK_FALSE(is_semistandard(svt(Partition({1, 1}), {{{2}}, {{2}}})));
    CHECK_FALSE(is_semistandard(t({1, 2}, {1}, {3})));
}

TEST_CASE("on-mu condition") {
    Partition mu({3, 3, 1});
    CHECK(is_on_mu(t({1}, {2}, {2}), mu));
    CHECK_FALSE(is_on_mu(t({1}, {3}, {2}), mu));   // 3 + 2 - 1 = 4 > mu_3 = 1
    CHECK_FALSE(is_on_mu(t({1}, {4}, {2}), mu));   // entry above the part count
    CHECK(is_on_mu(t({1}, {1, 2}, {2}), mu));
}

TEST_CASE("enumerate_ssyt matches the ladder diagram") {
    Partition mu({4, 4, 3, 3, 1});
    auto list = enumerate_ssyt(shape21.padded(5), mu);
    std::set<SetValuedTableau> got(list.begin(), list.end());
    auto yt = [&](int a, int b, int c) {
        return SetValuedTableau::young(shape21.padded(5), {{a, b}, {c}});
    };
    std::set<SetValuedTableau> expected{yt(1, 1, 2), yt(1, 2, 2), yt(1, 2, 3), yt(2, 2, 3),
                                        yt(2, 2, 4), yt(1, 1, 3), yt(1, 1, 4), yt(1, 2, 4)};
    CHECK(got == expected);
    CHECK(std::is_sorted(list.begin(), list.end()));
}

TEST_CASE("enumerate_ssyt on the Gr_{3,6} example") {
    auto list = enumerate_ssyt(shape210, Partition({3, 3, 1}));
    REQUIRE(list.size() == 2);
    CHECK(list[0] == SetValuedTableau::young(shape210, {{1, 1}, {2}}));
    CHECK(list[1] == SetValuedTableau::young(shape210, {{1, 2}, {2}}));
}

TEST_CASE("enumerate_ssyt is empty when lambda is not below mu") {
    CHECK(enumerate_ssyt(Partition({3, 3, 1}), Partition({2, 1, 0})).empty());
}

TEST_CASE("empty shape has exactly the empty tableau") {
    auto list = enumerate_ssvt(Partition({0, 0}), Partition({2, 1}));
    REQUIRE(list.size() == 1);
    CHECK(list[0].box_count() == 0);
    CHECK(enumerate_ssyt(Partition({0, 0}), Partition({2, 1})).size() == 1);
}

TEST_CASE("the eleven set-valued tableaux of shape (2,1) on (4,4,2,1)") {
    Partition mu({4, 4, 2, 1});
    auto list = enumerate_ssvt(shape21.padded(4), mu);
    CHECK(list.size() == 11);
    auto mk = [&](Cell a, Cell b, Cell c) {
        return svt(shape21.padded(4), {{a, b}, {c}});
    };
    std::set<SetValuedTableau> expected{
        mk({1}, {1}, {2}),    mk({1}, {2}, {2}),    mk({1}, {1}, {3}),
        mk({1}, {2}, {3}),    mk({2}, {2}, {3}),    mk({1, 2}, {2}, {3}),
        mk({1}, {1, 2}, {2}), mk({1}, {1, 2}, {3}), mk({1}, {1}, {2, 3}),
        mk({1}, {2}, {2, 3}), mk({1}, {1, 2}, {2, 3})};
    CHECK(std::set<SetValuedTableau>(list.begin(), list.end()) == expected);
}

TEST_CASE("the three set-valued tableaux of the Gr_{3,6} example") {
    auto list = enumerate_ssvt(shape210, Partition({3, 3, 1}));
    REQUIRE(list.size() == 3);
    std::set<SetValuedTableau> got(list.begin(), list.end());
    std::set<SetValuedTableau> expected{svt(shape210, {{{1}, {1}}, {{2}}}),
                                        svt(shape210, {{{1}, {2}}, {{2}}}),
                                        svt(shape210, {{{1}, {1, 2}}, {{2}}})};
    CHECK(got == expected);
}

TEST_CASE("ssvt restricted to singletons equals ssyt") {
    for (const Partition& mu : {Partition({3, 2, 1}), Partition({4, 4, 2, 1}), Partition({2, 2})}) {
        for (const Partition& lam : partitions_below(mu)) {
            auto svt_list = enumerate_ssvt(lam, mu);
            std::vector<SetValuedTableau> singletons;
            for (const auto& s : svt_list)
                if (s.is_young()) singletons.push_back(s);
            CHECK(singletons == enumerate_ssyt(lam, mu));
        }
    }
}

TEST_CASE("union and containment") {
    SetValuedTableau a = t({1}, {1}, {2});
    SetValuedTableau b = t({1}, {2}, {2});
    CHECK(tableau_union(a, b) == t({1}, {1, 2}, {2}));
    CHECK(tableau_union(a, a) == a);
    CHECK(tableau_union(a, t({1}, {1}, {3})) == t({1}, {1}, {2, 3}));
    CHECK(tableau_contains(a, a));
    CHECK(tableau_contains(a, t({1}, {1, 2}, {2})));
    CHECK_FALSE(tableau_contains(b, a));
    CHECK_THROWS_AS(tableau_union(a, svt(Partition({1}), {{{1}}})), std::invalid_argument);
}

TEST_CASE("ssyt contained in a set-valued tableau") {
    SetValuedTableau u = t({1}, {1, 2}, {2});
    auto inner = ssyt_contained_in(u);
    REQUIRE(inner.size() == 2);
    CHECK(inner[0] == t({1}, {1}, {2}));
    CHECK(inner[1] == t({1}, {2}, {2}));

    SetValuedTableau plain = t({1}, {2}, {3});
    auto self_only = ssyt_contained_in(plain);
    REQUIRE(self_only.size() == 1);
    CHECK(self_only[0] == plain);

    SetValuedTableau blocked = svt(Partition({1, 1}), {{{1}}, {{1}}});
    CHECK(ssyt_contained_in(blocked).empty());
    CHECK_FALSE(has_ssyt_selection(blocked));
}

TEST_CASE("N_S examples") {
    SetValuedTableau u = t({1}, {1, 2}, {2});  // |S| = 4, boxes = 3
    CHECK(n_coefficient_definition(u) == -1);
    CHECK(n_coefficient_inclusion_exclusion(u) == -1);
    CHECK(n_coefficient_closed_form(u) == -1);

    SetValuedTableau blocked = svt(Partition({1, 1}), {{{1}}, {{1}}});
    CHECK(n_coefficient_definition(blocked) == 0);
    CHECK(n_coefficient_inclusion_exclusion(blocked) == 0);
    CHECK(n_coefficient_closed_form(blocked) == 0);

    // A non-semistandard union that IS a union of semistandard tableaux.
    SetValuedTableau tricky = svt(Partition({2, 2}), {{{1, 2}, {2}}, {{2, 3}, {2, 3}}});
    CHECK_FALSE(is_semistandard(tricky));
    CHECK(n_coefficient_checked(tricky) == 0);
}

TEST_CASE("three-way N_S agreement on enumerated and random tableaux") {
    Partition mu({4, 4, 2, 1});
    for (const auto& s : enumerate_ssvt(shape21.padded(4), mu)) {
        long long expected = (s.entry_count() + s.box_count()) % 2 == 0 ? 1 : -1;
        CHECK(n_coefficient_checked(s) == expected);
        // Every semistandard set-valued tableau is the union of the Young
        // tableaux it contains.
        auto inner = ssyt_contained_in(s);
        SetValuedTableau u = inner.front();
        for (const auto& r : inner) u = tableau_union(u, r);
        CHECK(u == s);
    }
    for (const auto& s : random_non_semistandard_tableaux(120, 8, 4242u))
        CHECK(n_coefficient_checked(s) == 0);
}

TEST_CASE("top tableau and ladder moves") {
    CHECK(top_ssyt(shape21) == SetValuedTableau::young(shape21, {{1, 1}, {2}}));
    CHECK(top_ssyt(Partition({3})) == SetValuedTableau::young(Partition({3}), {{1, 1, 1}}));
    CHECK(top_ssyt(Partition({0, 0})).box_count() == 0);

    Partition mu({4, 4, 3, 3, 1});
    Partition lam = shape21.padded(5);
    auto yt = [&](int a, int b, int c) {
        return SetValuedTableau::young(lam, {{a, b}, {c}});
    };
    CHECK(ladder_moves_ssyt(yt(1, 1, 2), mu) ==
          std::vector<SetValuedTableau>{yt(1, 1, 3), yt(1, 2, 2)});
    CHECK(ladder_moves_ssyt(yt(2, 2, 4), mu).empty());
    CHECK(ladder_moves_ssyt(yt(1, 2, 3), mu) ==
          std::vector<SetValuedTableau>{yt(1, 2, 4), yt(2, 2, 3)});
}

TEST_CASE("ladder closure of the top tableau is all of SSYT on mu") {
    // The worked (2,1) on (4,4,3,3,1) case plus an exhaustive desk-scale sweep.
    auto closure = [](const Partition& lam, const Partition& mu) {
        std::set<SetValuedTableau> seen;
        std::vector<SetValuedTableau> work{top_ssyt(lam)};
        if (!is_on_mu(work[0], mu)) return seen;
        seen.insert(work[0]);
        while (!work.empty()) {
            SetValuedTableau cur = work.back();
            work.pop_back();
            for (const auto& next : ladder_moves_ssyt(cur, mu))
                if (seen.insert(next).second) work.push_back(next);
        }
        return seen;
    };
    {
        Partition mu({4, 4, 3, 3, 1});
        Partition lam = shape21.padded(5);
        auto direct = enumerate_ssyt(lam, mu);
        CHECK(closure(lam, mu) == std::set<SetValuedTableau>(direct.begin(), direct.end()));
        CHECK(direct.size() == 8);
    }
    for (int n = 4; n <= 7; ++n) {
        int d = 3;
        for (const GrassIndex& beta : all_indices(d, n)) {
            Partition mu = beta.shape();
            for (const Partition& lam : partitions_below(mu)) {
                auto direct = enumerate_ssyt(lam, mu);
                CHECK(closure(lam, mu) ==
                      std::set<SetValuedTableau>(direct.begin(), direct.end()));
            }
        }
    }
}
