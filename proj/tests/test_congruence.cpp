#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "bgrank/congruence.hpp"
#include "bgrank/counting.hpp"

using namespace bgrank;

TEST_CASE("residue arithmetic") {
    CHECK(residue_rhs({0, 1}) == 2);
    CHECK(residue_rhs({1, 0}) == 3);
    CHECK(residue_rhs({0, 0}) == 0);
    CHECK(residue_rhs({4, 2}) == 4);
    CHECK(residue_rhs({2, 2}) == 3);
}

TEST_CASE("the fifteen covered residue pairs") {
    const auto pairs = fifteen_pairs();
    REQUIRE(pairs.size() == 15);
    CHECK(std::count(pairs.begin(), pairs.end(), ResiduePair{3, 3}) == 1);
    CHECK(std::count(pairs.begin(), pairs.end(), ResiduePair{0, 0}) == 0);
    CHECK(std::count(pairs.begin(), pairs.end(), ResiduePair{4, 0}) == 1);
    CHECK(std::count(pairs.begin(), pairs.end(), ResiduePair{4, 4}) == 1);

    // no duplicates
    for (const auto& p : pairs) {
        CHECK(std::count(pairs.begin(), pairs.end(), p) == 1);
    }

    const auto report = verify_fifteen_pairs();
    CHECK(report.passed());
    for (const auto& pair : pairs) {
        const int rhs = residue_rhs(pair);
        CHECK(rhs >= 2);
        CHECK(rhs <= 4);
    }
}

TEST_CASE("reduction identity sweep") {
    CHECK(verify_reduction_identity(200).passed());
    // two spot checks of the underlying arithmetic
    CHECK((13 - (-1) * (2 * (-1) - 1)) / 2 % 5 == 0);
    CHECK(residue_rhs({3, 4}) == 0);
    CHECK((6 - 2 * (2 * 2 - 1)) / 2 == 0);
    CHECK(residue_rhs({1, 2}) == 0);
}

TEST_CASE("pair counts vanish mod 5 on residues 2, 3, 4") {
    CHECK(pair_count(2) % 5 == 0);
    CHECK(pair_count(7) == 110);
    CHECK(pair_count(5) == 36);  // residue 0: not covered, and indeed not divisible
    const auto report = verify_pp_mod5(600);
    CHECK(report.passed());
    CHECK(report.range == 600);
}

TEST_CASE("triangular residues stay in {0, 1, 3}") {
    const long long expected[] = {0, 1, 3, 1, 0};
    for (long long n = 0; n <= 4; ++n) {
        CHECK(n * (n + 1) / 2 % 5 == expected[n]);
    }
    CHECK((7 * 8 / 2) % 5 == 3);
    CHECK((2 * 7 + 1) % 5 == 0);
    CHECK(triangular_residue_analysis(2000).passed());
}

TEST_CASE("refined congruence sweep with enumeration cross-check") {
    const auto report = verify_refined_congruences(120, 24);
    CHECK(report.passed());
}

TEST_CASE("refined coverage filter") {
    // 13 mod 5 = 3 covers j mod 5 in {0, 3}; j = -1 has residue 4, so the
    // pair is not claimed even though p_j(13) != 0 mod 5.
    CHECK(pj_formula(13, -1) % 5 != 0);
    // 6 mod 5 = 1 covers {0, 3, 4}; j = 1 is outside it (and infeasible:
    // 6 + 1 is odd).
    CHECK_FALSE(rank_exists(6, 1));
    // The uncovered pairs must not make the sweep fail.
    CHECK(verify_refined_congruences(13, 13).passed());
}

TEST_CASE("classical p(5n+4) divisibility") {
    CHECK(partition_count(4) == 5);
    CHECK(partition_count(9) == 30);
    CHECK(partition_count(5) == 7);  // not in the residue class, not claimed
    CHECK(ramanujan_check(100).passed());
}

TEST_CASE("series-backed report families") {
    CHECK(verify_jacobi_cube(300).passed());
    CHECK(verify_factor_identity(200).passed());
}

TEST_CASE("negative control fails and reports counterexamples") {
    const auto report = negative_control(50);
    CHECK_FALSE(report.passed());
    REQUIRE(!report.failures.empty());
    CHECK(report.failures.front().n == 0);
    CHECK(report.failures.front().value == "pp(k) = 1");
}

TEST_CASE("report JSON shape") {
    const auto good = to_json_string(verify_fifteen_pairs());
    const auto parsed = nlohmann::json::parse(good);
    CHECK(parsed["family"] == "fifteen-pairs");
    CHECK(parsed["passed"] == true);
    CHECK(parsed["failures"].is_array());
    CHECK(parsed["failures"].empty());

    const auto bad = nlohmann::json::parse(to_json_string(negative_control(10)));
    CHECK(bad["passed"] == false);
    REQUIRE(!bad["failures"].empty());
    CHECK(bad["failures"][0]["n"] == 0);
    CHECK(bad["failures"][0]["j"].is_null());
    CHECK(bad["failures"][0]["value"].is_string());
}
