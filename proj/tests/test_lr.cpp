#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brute_force.hpp"
#include "linespec/lr.hpp"

using namespace linespec;

TEST_CASE("skew shape validation")
{
    SkewShape s(Partition{4, 1, 1}, Partition{3});
    CHECK(s.cell_count() == 3);
    CHECK_THROWS_AS(SkewShape(Partition{4, 1, 1}, Partition{3, 2}), std::invalid_argument);
}

TEST_CASE("oracle reproduces known coefficients")
{
    CHECK(testing::brute_force_lr({3}, {1, 1, 1}, {4, 1, 1}) == 1);
    CHECK(testing::brute_force_lr({2, 2}, {2, 2}, {4, 2, 2}) == 1);
    CHECK(testing::brute_force_lr({2, 1}, {2, 1}, {3, 2, 1}) == 2);
    CHECK(testing::brute_force_lr({3}, {1, 1, 1}, {6}) == 0);
    CHECK(testing::brute_force_lr({1}, {1}, {1, 1}) == 1);
}

TEST_CASE("lr_coefficient examples")
{
    CHECK(lr_coefficient({3}, {1, 1, 1}, {4, 1, 1}) == 1);
    CHECK(lr_coefficient({2, 2}, {2, 2}, {4, 2, 2}) == 1);
    CHECK(lr_coefficient({3}, {1}, {5}) == 0);
    CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
    for (auto lambda : {Partition{}, Partition{1}, Partition{3, 2}, Partition{4, 4, 1}})
        CHECK(lr_coefficient(lambda, {}, lambda) == 1);
}

TEST_CASE("lr_positive examples")
{
    CHECK(lr_positive({3}, {1, 1, 1}, {4, 1, 1}));
    CHECK_FALSE(lr_positive({3}, {1, 1, 1}, {6}));
    CHECK(lr_positive({1}, {1}, {1, 1}));
    CHECK_FALSE(lr_positive({3}, {1}, {5}));
    CHECK_FALSE(lr_positive({2}, {1}, {1, 1, 1}));
}

TEST_CASE("backtracking agrees with brute force on all small triples")
{
    auto shapes = testing::partitions_in_box(3, 3);
    int nonzero = 0;
    for (const auto& a : shapes)
        for (const auto& b : shapes) {
            const auto n = size(a) + size(b);
            if (n > 8)
                continue;
            for (std::int64_t len = 0; len <= 6; ++len)
                for (const auto& g : enumerate_partitions(n, len, n)) {
                    auto expected = testing::brute_force_lr(a, b, g);
                    CAPTURE(to_string(a));
                    CAPTURE(to_string(b));
                    CAPTURE(to_string(g));
                    CHECK(lr_coefficient(a, b, g) == expected);
                    CHECK(lr_positive(a, b, g) == (expected > 0));
                    nonzero += expected > 0;
                }
        }
    CHECK(nonzero > 100);
}

TEST_CASE("symmetry and zero conditions")
{
    auto shapes = testing::partitions_in_box(4, 3);
    for (const auto& a : shapes)
        for (const auto& b : shapes) {
            auto n = size(a) + size(b);
            if (n > 9)
                continue;
            for (std::int64_t len = 1; len <= 6; ++len)
                for (const auto& g : enumerate_partitions(n, len, n)) {
                    auto c = lr_coefficient(a, b, g);
                    CHECK(c == lr_coefficient(b, a, g));
                    if (c > 0) {
                        CHECK(contains(g, a));
                        CHECK(contains(g, b));
                    }
                }
        }
    // size mismatch always gives zero
    CHECK(lr_coefficient({2, 1}, {1}, {2, 1}) == 0);
}

TEST_CASE("two one-row factors follow the Pieri rule")
{
    auto pieri = [](std::int64_t n, std::int64_t m, const Partition& g) -> int {
        if (length(g) > 2 || size(g) != n + m)
            return 0;
        // g / (n) must be a horizontal strip
        return g[0] >= n && g[1] <= n ? 1 : 0;
    };
    for (std::int64_t n = 0; n <= 6; ++n)
        for (std::int64_t m = 0; m <= 6; ++m)
            for (std::int64_t len = 0; len <= 3; ++len)
                for (const auto& g : enumerate_partitions(n + m, len, n + m)) {
                    CAPTURE(n);
                    CAPTURE(m);
                    CAPTURE(to_string(g));
                    CHECK(lr_coefficient(Partition{n}, Partition{m}, g) == pieri(n, m, g));
                }
}

TEST_CASE("larger coefficients stay exact")
{
    // values computed once with the brute-force oracle and frozen
    CHECK(lr_coefficient({3, 2, 1}, {2, 1, 1}, {4, 3, 2, 1}) == 3);
    CHECK(lr_coefficient({3, 2, 1}, {3, 2, 1}, {4, 3, 2, 2, 1}) == 4);
    CHECK(lr_coefficient({4, 2, 1}, {3, 2, 1}, {5, 4, 2, 1, 1}) == 4);
}
