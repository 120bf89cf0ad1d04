#include <catch2/catch_amalgamated.hpp>

#include "secant/graphcomb.hpp"

using namespace secant;
using namespace secant::graphcomb;

TEST_CASE("tree enumeration and weighted sum") {
    // d = 2: the single tree has weight 1, and 3 * 1 = C(3,1) 1!.
    auto r2 = tree_weight_sum(2);
    CHECK(r2.tree_count == 1);
    CHECK(r2.weighted_sum == 1);
    CHECK(r2.identity_ok);

    // d = 3: three trees with weights 1, 1, 2.
    auto r3 = tree_weight_sum(3);
    CHECK(r3.tree_count == 3);
    CHECK(r3.weighted_sum == 4);
    CHECK(r3.identity_ok);  // 5 * 4 = C(5,2) 2! = 20

    for (int d = 2; d <= 8; ++d) {
        auto r = tree_weight_sum(d);
        mpz_class cayley;
        mpz_ui_pow_ui(cayley.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(d - 2));
        CHECK(r.tree_count == cayley);
        CHECK(r.identity_ok);
    }
}

TEST_CASE("connected d-edge graph sums") {
    // d = 3: the triangle is the unique simple graph, weight 1! 2! = 2,
    // matching (sum_{i<=0} C(5,i)) 2! = 2; the doubled-edge class sums to 10.
    auto r3 = connected_graph_sums(3);
    CHECK(r3.s1_sum == 2);
    CHECK(r3.s2_sum == 10);
    CHECK(r3.s1_ok);
    CHECK(r3.s2_ok);

    for (int d = 2; d <= 7; ++d) {
        auto r = connected_graph_sums(d);
        CHECK(r.s1_ok);
        CHECK(r.s2_ok);
    }
}

TEST_CASE("trees grouped by indegree partition") {
    auto t1 = trees_by_indegree({2}, 3);
    CHECK(t1.enumerated == 1);
    CHECK(t1.match);
    auto t2 = trees_by_indegree({1, 1}, 3);
    CHECK(t2.enumerated == 2);
    CHECK(t2.match);

    CHECK_THROWS_AS(trees_by_indegree({3}, 3), std::invalid_argument);

    for (int d = 3; d <= 6; ++d) {
        mpz_class total = 0;
        for (const auto& lambda : partitions_of(d - 1)) {
            auto r = trees_by_indegree(lambda, d);
            CHECK(r.match);
            total += r.enumerated;
        }
        // Partition classes cover every tree exactly once.
        CHECK(total == tree_weight_sum(d).tree_count);
    }
}

TEST_CASE("exponential formula consistency") {
    CHECK(exponential_consistency(1).ok);
    CHECK(exponential_consistency(3).ok);
    CHECK(exponential_consistency(5).ok);
}
