#pragma once

// Averages over t-th roots of unity, done symbolically.
//
// A polynomial P(Z) averaged over Z = zeta_t^s, s = 0..t-1, keeps exactly the
// coefficients of Z^m with t | m, because sum_s zeta_t^{sm} is t when t | m
// and 0 otherwise. No complex number is ever formed.

#include "rootcong/arith.hpp"

#include <cstdint>
#include <vector>

namespace rootcong {

class RationalPolynomial {
public:
    RationalPolynomial() = default;
    /// Coefficients by ascending degree; trailing zeros are dropped.
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    /// Zero past the degree.
    Rational coefficient(std::size_t m) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& z) const;
    /// (1/t) sum_{s<t} P(zeta_t^s): the sum of coefficients at degrees divisible by t.
    Rational average_over_roots(std::uint64_t t) const;

    friend RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
    friend RationalPolynomial operator+(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// C(n + dZ, c) = (1/c!) prod_{i<c} (n - i + dZ), expanded in Z.
RationalPolynomial binom_poly(std::int64_t n, std::uint64_t d, std::uint64_t c);

/// (1/t) sum_{s<t} C(n + d zeta_t^s, c).
Rational average_over_roots(std::uint64_t t, std::int64_t n, std::uint64_t d, std::uint64_t c);

/// Whether average_over_roots(t, n, d, c) - C(n, c) equals lemma1_sum exactly.
bool verify_lemma1(std::uint64_t t, std::int64_t n, std::uint64_t d, std::uint64_t c);

}  // namespace rootcong
