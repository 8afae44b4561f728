#pragma once

#include <gmpxx.h>

#include <vector>

#include "bgrank/counting.hpp"

namespace bgrank {

/// A formal power series truncated at x^order, with exact integer
/// coefficients (modulus 0) or coefficients in Z/m (modulus m > 0, every
/// coefficient kept in [0, m)). Values are immutable once built; all
/// arithmetic returns fresh series.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(long long order, long long modulus = 0);

    /// The constant series 1.
    static TruncatedSeries one(long long order, long long modulus = 0);

    /// c * x^degree.
    static TruncatedSeries monomial(long long degree, BigInt c, long long order,
                                    long long modulus = 0);

    long long order() const { return static_cast<long long>(coeffs_.size()) - 1; }
    long long modulus() const { return modulus_; }
    bool modular() const { return modulus_ != 0; }

    const BigInt& coeff(long long k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    void set_coeff(long long k, BigInt value);

    /// Copy of an exact series with coefficients reduced into Z/m.
    TruncatedSeries reduced(long long m) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    long long modulus_;
    std::vector<BigInt> coeffs_;
};

/// Cauchy product truncated at the common order. Throws
/// std::invalid_argument on an order or modulus mismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse to the truncation order. The constant term must
/// be a unit (+-1 exactly, coprime to the modulus otherwise); throws
/// std::domain_error when it is not.
TruncatedSeries series_invert(const TruncatedSeries& a);

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_mul(a, b);
}
inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_add(a, b);
}

/// The product prod_{i>=1} (1 - x^(step*i))^exponent over all factors;
/// negative exponents invert the corresponding positive-power product.
struct FactoredProduct {
    struct Factor {
        long long step;      // > 0
        long long exponent;  // any integer
    };
    std::vector<Factor> factors;
};

TruncatedSeries expand_product(const FactoredProduct& f, long long order, long long modulus = 0);

/// prod_{j>=1} (1 - x^j)^3 built from its closed form: coefficient
/// (-1)^n (2n+1) at each triangular index n(n+1)/2, zero elsewhere.
TruncatedSeries jacobi_cube(long long order, long long modulus = 0);

/// Checks, over Z/5, that 1/(1-t)^2 == (1-t)^3 / (1-t^5) up to the given
/// order, in both its univariate and infinite-product forms.
bool verify_mod5_factor_identity(long long order);

}  // namespace bgrank
