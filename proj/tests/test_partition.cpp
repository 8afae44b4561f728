#include <doctest.h>

#include <stdexcept>

#include "bgrank/counting.hpp"
#include "bgrank/partition.hpp"

using namespace bgrank;

TEST_CASE("parse accepts plus and comma forms") {
    CHECK(parse_partition("4+3+3+1+1+1").parts() == std::vector<long long>{4, 3, 3, 1, 1, 1});
    CHECK(parse_partition("3,2,1").parts() == std::vector<long long>{3, 2, 1});
    CHECK(parse_partition(" 5 + 5 , 2 ").parts() == std::vector<long long>{5, 5, 2});
    CHECK(parse_partition("").empty());
    CHECK(parse_partition("0").empty());
    CHECK(parse_partition("  0  ").empty());
    CHECK(parse_partition("7").parts() == std::vector<long long>{7});
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_partition("1+2"), std::invalid_argument);        // increasing
    CHECK_THROWS_AS(parse_partition("3+0"), std::invalid_argument);        // zero part
    CHECK_THROWS_AS(parse_partition("3+-1"), std::invalid_argument);       // negative part
    CHECK_THROWS_AS(parse_partition("3+x"), std::invalid_argument);        // non-integer
    CHECK_THROWS_AS(parse_partition("3++2"), std::invalid_argument);       // empty token
    CHECK_THROWS_AS(parse_partition("3+2+"), std::invalid_argument);       // trailing sep
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
}

TEST_CASE("canonical rendering") {
    CHECK(Partition({4, 3, 3, 1, 1, 1}).str() == "4+3+3+1+1+1");
    CHECK(Partition{}.str() == "0");
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition({4, 3, 3, 1, 1, 1}).weight() == 13);
}

TEST_CASE("parse/format round trip over all partitions of weight <= 12") {
    for (long long n = 0; n <= 12; ++n) {
        for_each_partition(n, [](const Partition& p) {
            CHECK(parse_partition(p.str()) == p);
        });
    }
}

TEST_CASE("normalized sorts and strips zeros") {
    CHECK(Partition::normalized({1, 3, 0, 2}) == Partition({3, 2, 1}));
    CHECK(Partition::normalized({0, 0}) == Partition{});
    CHECK_THROWS_AS(Partition::normalized({-1, 2}), std::invalid_argument);
}

TEST_CASE("chessboard rank of pinned partitions") {
    CHECK(bg_rank_naive(Partition({4, 3, 3, 1, 1, 1})) == -1);
    CHECK(bg_rank(Partition({4, 3, 3, 1, 1, 1})) == -1);
    CHECK(bg_rank_naive(Partition{}) == 0);
    CHECK(bg_rank_naive(Partition({1})) == 1);
    CHECK(bg_rank_naive(Partition({2, 1})) == -1);
    CHECK(bg_rank(Partition({3, 2, 1})) == 2);
    CHECK(bg_rank(Partition({5, 5, 5, 5})) == 0);
}

TEST_CASE("fast rank equals the cell-by-cell oracle, exhaustively to weight 20") {
    for (long long n = 0; n <= 20; ++n) {
        for_each_partition(n, [&](const Partition& p) {
            const long long fast = bg_rank(p);
            CHECK(fast == bg_rank_naive(p));
            // rank and weight always share parity
            CHECK((fast - n) % 2 == 0);
        });
    }
}

TEST_CASE("staircase ranks") {
    CHECK(staircase_bg_rank(0) == 0);
    CHECK(staircase_bg_rank(1) == 1);
    CHECK(staircase_bg_rank(2) == -1);
    CHECK(staircase_bg_rank(4) == -2);
    CHECK_THROWS_AS(staircase_bg_rank(-1), std::domain_error);
    for (long long k = 0; k <= 40; ++k) {
        CHECK(staircase_bg_rank(k) == bg_rank(Staircase{k}.to_partition()));
    }
}

TEST_CASE("staircase recognition") {
    CHECK(is_staircase(Partition({3, 2, 1})) == 3);
    CHECK(is_staircase(Partition({2, 2})) == std::nullopt);
    CHECK(is_staircase(Partition{}) == 0);
    CHECK(is_staircase(Partition({1})) == 1);
    CHECK(is_staircase(Partition({3, 1})) == std::nullopt);
    CHECK(Staircase{4}.weight() == 10);
    CHECK(Staircase{4}.to_partition() == Partition({4, 3, 2, 1}));
}
