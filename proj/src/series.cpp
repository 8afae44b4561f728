#include "bgrank/series.hpp"

#include <stdexcept>
#include <utility>

namespace bgrank {

namespace {

BigInt reduce(BigInt value, long long modulus) {
    if (modulus == 0) return value;
    BigInt r;
    mpz_mod(r.get_mpz_t(), value.get_mpz_t(), BigInt(static_cast<long>(modulus)).get_mpz_t());
    return r;
}

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
    }
    if (a.modulus() != b.modulus()) {
        throw std::invalid_argument("series modulus mismatch: " + std::to_string(a.modulus()) +
                                    " vs " + std::to_string(b.modulus()));
    }
}

// In-place multiplication by (1 - x^step), high coefficients first.
void mul_one_minus_power(std::vector<BigInt>& c, long long step, long long modulus) {
    for (long long k = static_cast<long long>(c.size()) - 1; k >= step; --k) {
        c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - step)];
        if (modulus != 0) {
            c[static_cast<std::size_t>(k)] = reduce(c[static_cast<std::size_t>(k)], modulus);
        }
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(long long order, long long modulus) : modulus_(modulus) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    if (modulus < 0) throw std::invalid_argument("series modulus must be positive or zero");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
}

TruncatedSeries TruncatedSeries::one(long long order, long long modulus) {
    TruncatedSeries s(order, modulus);
    s.set_coeff(0, 1);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(long long degree, BigInt c, long long order,
                                          long long modulus) {
    TruncatedSeries s(order, modulus);
    if (degree <= order) s.set_coeff(degree, std::move(c));
    return s;
}

void TruncatedSeries::set_coeff(long long k, BigInt value) {
    if (k < 0 || k > order()) throw std::out_of_range("coefficient index out of range");
    coeffs_[static_cast<std::size_t>(k)] = reduce(std::move(value), modulus_);
}

TruncatedSeries TruncatedSeries::reduced(long long m) const {
    if (m <= 0) throw std::invalid_argument("reduction modulus must be positive");
    if (modulus_ != 0 && modulus_ != m) {
        throw std::invalid_argument("cannot re-reduce a series to a different modulus");
    }
    TruncatedSeries out(order(), m);
    for (long long k = 0; k <= order(); ++k) out.set_coeff(k, coeffs_[static_cast<std::size_t>(k)]);
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    const long long n = a.order();
    TruncatedSeries out(n, a.modulus());
    for (long long k = 0; k <= n; ++k) {
        BigInt sum = 0;
        for (long long i = 0; i <= k; ++i) sum += a.coeff(i) * b.coeff(k - i);
        out.set_coeff(k, std::move(sum));
    }
    return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    TruncatedSeries out(a.order(), a.modulus());
    for (long long k = 0; k <= a.order(); ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
    return out;
}

TruncatedSeries series_invert(const TruncatedSeries& a) {
    const long long n = a.order();
    BigInt lead_inv;
    if (a.modular()) {
        const BigInt m(static_cast<long>(a.modulus()));
        if (mpz_invert(lead_inv.get_mpz_t(), a.coeff(0).get_mpz_t(), m.get_mpz_t()) == 0) {
            throw std::domain_error("constant term is not invertible modulo " +
                                    std::to_string(a.modulus()));
        }
    } else {
        if (a.coeff(0) != 1 && a.coeff(0) != -1) {
            throw std::domain_error("constant term must be +-1 to invert over the integers");
        }
        lead_inv = a.coeff(0);
    }

    TruncatedSeries out(n, a.modulus());
    out.set_coeff(0, lead_inv);
    for (long long k = 1; k <= n; ++k) {
        BigInt sum = 0;
        for (long long i = 1; i <= k; ++i) sum += a.coeff(i) * out.coeff(k - i);
        out.set_coeff(k, -lead_inv * sum);
    }
    return out;
}

TruncatedSeries expand_product(const FactoredProduct& f, long long order, long long modulus) {
    TruncatedSeries result = TruncatedSeries::one(order, modulus);
    for (const auto& factor : f.factors) {
        if (factor.step <= 0) throw std::invalid_argument("factor step must be positive");
        if (factor.exponent == 0) continue;

        std::vector<BigInt> base(static_cast<std::size_t>(order) + 1, BigInt(0));
        base[0] = 1;
        for (long long i = 1; factor.step * i <= order; ++i) {
            mul_one_minus_power(base, factor.step * i, modulus);
        }
        TruncatedSeries base_series(order, modulus);
        for (long long k = 0; k <= order; ++k) base_series.set_coeff(k, base[static_cast<std::size_t>(k)]);

        const long long reps = factor.exponent > 0 ? factor.exponent : -factor.exponent;
        TruncatedSeries power = base_series;
        for (long long r = 1; r < reps; ++r) power = series_mul(power, base_series);
        if (factor.exponent < 0) power = series_invert(power);

        result = series_mul(result, power);
    }
    return result;
}

TruncatedSeries jacobi_cube(long long order, long long modulus) {
    TruncatedSeries out(order, modulus);
    for (long long n = 0; n * (n + 1) / 2 <= order; ++n) {
        const BigInt c = (n % 2 == 0) ? BigInt(static_cast<long>(2 * n + 1)) : BigInt(static_cast<long>(-(2 * n + 1)));
        out.set_coeff(n * (n + 1) / 2, c);
    }
    return out;
}

bool verify_mod5_factor_identity(long long order) {
    constexpr long long m = 5;

    // Univariate form: 1/(1-t)^2 == (1-t)^3 * 1/(1-t^5).
    TruncatedSeries one_minus_t(order, m);
    one_minus_t.set_coeff(0, 1);
    if (order >= 1) one_minus_t.set_coeff(1, -1);
    TruncatedSeries one_minus_t5(order, m);
    one_minus_t5.set_coeff(0, 1);
    if (order >= 5) one_minus_t5.set_coeff(5, -1);

    const TruncatedSeries lhs = series_invert(series_mul(one_minus_t, one_minus_t));
    const TruncatedSeries rhs = series_mul(
        series_mul(series_mul(one_minus_t, one_minus_t), one_minus_t), series_invert(one_minus_t5));
    if (lhs != rhs) return false;

    // Product form: prod 1/(1-x^i)^2 == prod (1-x^i)^3 * prod 1/(1-x^(5i)).
    const TruncatedSeries pair_gf = expand_product({{{1, -2}}}, order, m);
    const TruncatedSeries cube = expand_product({{{1, 3}}}, order, m);
    const TruncatedSeries fifth = expand_product({{{5, -1}}}, order, m);
    return pair_gf == series_mul(cube, fifth);
}

}  // namespace bgrank
