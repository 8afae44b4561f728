#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bgrank/counting.hpp"
#include "bgrank/series.hpp"

using namespace bgrank;

namespace {

TruncatedSeries from_coeffs(std::vector<long> values, long long modulus = 0) {
    TruncatedSeries s(static_cast<long long>(values.size()) - 1, modulus);
    for (std::size_t k = 0; k < values.size(); ++k) {
        s.set_coeff(static_cast<long long>(k), values[k]);
    }
    return s;
}

TruncatedSeries random_series(std::mt19937_64& rng, long long order, long long modulus) {
    std::uniform_int_distribution<long> coeff(-9, 9);
    TruncatedSeries s(order, modulus);
    for (long long k = 0; k <= order; ++k) s.set_coeff(k, coeff(rng));
    return s;
}

}  // namespace

TEST_CASE("multiplication basics") {
    const auto one_plus = from_coeffs({1, 1, 0, 0});
    const auto one_minus = from_coeffs({1, -1, 0, 0});
    CHECK(series_mul(one_plus, one_minus) == from_coeffs({1, 0, -1, 0}));

    const auto identity = TruncatedSeries::one(3);
    CHECK(series_mul(one_plus, identity) == one_plus);

    const auto pair_gf = expand_product({{{1, -2}}}, 5);
    CHECK(pair_gf.coeff(5) == pair_count(5));
    CHECK(pair_gf.coeff(5) == 36);
}

TEST_CASE("mismatched operands are rejected") {
    CHECK_THROWS_AS(series_mul(TruncatedSeries::one(3), TruncatedSeries::one(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(series_mul(TruncatedSeries::one(3, 5), TruncatedSeries::one(3, 7)),
                    std::invalid_argument);
    CHECK_THROWS_AS(series_mul(TruncatedSeries::one(3, 5), TruncatedSeries::one(3)),
                    std::invalid_argument);
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937_64 rng(7);
    for (long long modulus : {0LL, 5LL}) {
        for (int trial = 0; trial < 25; ++trial) {
            const auto a = random_series(rng, 32, modulus);
            const auto b = random_series(rng, 32, modulus);
            const auto c = random_series(rng, 32, modulus);
            CHECK(series_mul(a, b) == series_mul(b, a));
            CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        }
    }
}

TEST_CASE("inversion") {
    CHECK(series_invert(from_coeffs({1, -1, 0, 0, 0})) == from_coeffs({1, 1, 1, 1, 1}));
    CHECK(series_invert(from_coeffs({1, -2, 1, 0})) == from_coeffs({1, 2, 3, 4}));
    CHECK_THROWS_AS(series_invert(from_coeffs({2, 1})), std::domain_error);
    CHECK_THROWS_AS(series_invert(from_coeffs({0, 1}, 5)), std::domain_error);

    std::mt19937_64 rng(11);
    for (long long modulus : {0LL, 5LL}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_series(rng, 24, modulus);
            a.set_coeff(0, modulus == 0 ? (trial % 2 == 0 ? 1 : -1) : 1 + trial % 4);
            CHECK(series_invert(series_invert(a)) == a);
            CHECK(series_mul(a, series_invert(a)) == TruncatedSeries::one(24, modulus));
        }
    }
}

TEST_CASE("factored products of pinned shape") {
    const auto partition_gf = expand_product({{{1, -1}}}, 5);
    CHECK(partition_gf.coeffs() ==
          std::vector<BigInt>{1, 1, 2, 3, 5, 7});

    const auto pair_gf = expand_product({{{1, -2}}}, 5);
    CHECK(pair_gf.coeffs() == std::vector<BigInt>{1, 2, 5, 10, 20, 36});

    const auto cube = expand_product({{{1, 3}}}, 6);
    CHECK(cube.coeffs() == std::vector<BigInt>{1, -3, 0, 5, 0, 0, -7});

    CHECK_THROWS_AS(expand_product({{{0, 1}}}, 4), std::invalid_argument);
}

TEST_CASE("partition generating function matches the recurrence, n <= 300") {
    const auto gf = expand_product({{{1, -1}}}, 300);
    for (long long n = 0; n <= 300; ++n) {
        CHECK(gf.coeff(n) == partition_count(n));
    }
}

TEST_CASE("cube closed form") {
    CHECK(jacobi_cube(6).coeffs() == std::vector<BigInt>{1, -3, 0, 5, 0, 0, -7});
    CHECK(jacobi_cube(0).coeffs() == std::vector<BigInt>{1});
    CHECK(jacobi_cube(10).coeff(10) == 9);
    CHECK(expand_product({{{1, 3}}}, 400) == jacobi_cube(400));
}

TEST_CASE("reduction commutes with expansion for the mod-5 products, order 200") {
    const FactoredProduct shapes[] = {
        {{{1, -2}}},
        {{{1, 3}}},
        {{{5, -1}}},
        {{{1, 3}, {5, -1}}},
    };
    for (const auto& f : shapes) {
        CHECK(expand_product(f, 200).reduced(5) == expand_product(f, 200, 5));
    }
}

TEST_CASE("modular reduction guards") {
    CHECK_THROWS_AS(TruncatedSeries::one(4).reduced(0), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries::one(4, 5).reduced(7), std::invalid_argument);
    const auto reduced = from_coeffs({4, -3, 12}).reduced(5);
    CHECK(reduced.coeffs() == std::vector<BigInt>{4, 2, 2});
    CHECK(reduced.modulus() == 5);
}

TEST_CASE("the mod-5 factor identity holds at several orders") {
    CHECK(verify_mod5_factor_identity(0));
    CHECK(verify_mod5_factor_identity(1));
    CHECK(verify_mod5_factor_identity(50));
    CHECK(verify_mod5_factor_identity(200));
}
