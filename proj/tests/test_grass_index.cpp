#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "grass_index.hpp"

using namespace schubrest;

TEST_CASE("pi maps subsets to partitions") {
    CHECK(GrassIndex(3, 6, {1, 3, 5}).shape() == Partition({2, 1, 0}));
    CHECK(GrassIndex(3, 6, {2, 5, 6}).shape() == Partition({3, 3, 1}));
    CHECK(GrassIndex(3, 6, {1, 2, 3}).shape() == Partition({0, 0, 0}));
}

TEST_CASE("pi_inverse examples") {
    CHECK(GrassIndex::from_shape(Partition({4, 4, 3, 3, 1}), 5, 9).entries() ==
          std::vector<int>{2, 5, 6, 8, 9});
    CHECK(GrassIndex::from_shape(Partition({4, 2, 2, 1, 1}), 5, 9).entries() ==
          std::vector<int>{2, 3, 5, 6, 9});
    CHECK(GrassIndex::from_shape(Partition({0, 0, 0}), 3, 6).entries() ==
          std::vector<int>{1, 2, 3});
}

TEST_CASE("pi_inverse rejects shapes outside J_{d,n}") {
    CHECK_THROWS_AS(GrassIndex::from_shape(Partition({4}), 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(GrassIndex::from_shape(Partition({2, 1, 1}), 2, 5), std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(GrassIndex(3, 7, {2, 5, 7}).complement() == std::vector<int>{1, 3, 4, 6});
    CHECK(GrassIndex(3, 6, {1, 2, 3}).complement() == std::vector<int>{4, 5, 6});
    CHECK(GrassIndex(5, 9, {2, 5, 6, 8, 9}).complement() == std::vector<int>{1, 3, 4, 7});
}

TEST_CASE("length") {
    CHECK(GrassIndex(3, 6, {1, 3, 5}).length() == 3);
    CHECK(GrassIndex(4, 9, {1, 2, 3, 4}).length() == 0);
    CHECK(GrassIndex(3, 6, {2, 5, 6}).length() == 7);
}

TEST_CASE("partition order") {
    CHECK(partition_leq(Partition({2, 1, 0}), Partition({3, 3, 1})));
    CHECK(partition_leq(Partition({2, 2}), Partition({2, 2})));
    CHECK_FALSE(partition_leq(Partition({2, 2}), Partition({3, 1})));
    CHECK(partition_leq(Partition({2, 1}), Partition({2, 1, 0})));
}

TEST_CASE("mu column identity examples") {
    CHECK(mu_column_identity(GrassIndex(3, 6, {2, 5, 6})));
    CHECK(mu_column_identity(GrassIndex(4, 8, {1, 2, 3, 4})));
    CHECK(mu_column_identity(GrassIndex(5, 9, {2, 5, 6, 8, 9})));
}

TEST_CASE("invalid subsets are rejected") {
    CHECK_THROWS_AS(GrassIndex(3, 6, {1, 1, 5}), std::invalid_argument);
    CHECK_THROWS_AS(GrassIndex(3, 6, {0, 3, 5}), std::invalid_argument);
    CHECK_THROWS_AS(GrassIndex(3, 6, {1, 3, 7}), std::invalid_argument);
    CHECK_THROWS_AS(GrassIndex(3, 3, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("exhaustive round trips and identities up to n = 8") {
    for (int n = 2; n <= 8; ++n) {
        for (int d = 1; d < n; ++d) {
            for (const GrassIndex& a : all_indices(d, n)) {
                Partition lam = a.shape();
                CHECK(lam.size() == d);
                CHECK(GrassIndex::from_shape(lam, d, n) == a);
                CHECK(a.length() == lam.weight());
                CHECK(mu_column_identity(a));

                // Box membership criterion of the diagram of pi(a).
                std::vector<int> comp = a.complement();
                for (int i = 1; i <= d; ++i)
                    for (int j = 1; j <= n - d; ++j)
                        CHECK(lam.contains(i, j) ==
                              (comp[static_cast<size_t>(j) - 1] < a.entry(d + 1 - i)));
            }
        }
    }
}

TEST_CASE("pi is a bijection onto J_{d,n}") {
    int count = 0;
    Partition bound({3, 3, 3});
    for (const Partition& lam : partitions_below(bound)) {
        (void)lam;
        ++count;
    }
    CHECK(count == 20);  // semistandard counting: C(6,3) = 20 partitions in a 3x3 box
    for (int n = 2; n <= 7; ++n)
        for (int d = 1; d < n; ++d) {
            auto idx = all_indices(d, n);
            std::set<Partition> shapes;
            for (const auto& a : idx) shapes.insert(a.shape());
            CHECK(shapes.size() == idx.size());
        }
}
