#include "rootcong/cyclotomic.hpp"

#include "rootcong/congruence.hpp"

#include <span>
#include <stdexcept>

namespace rootcong {

namespace {

// Schoolbook product of integer coefficient vectors.
std::vector<BigInt> multiply(std::span<const BigInt> lhs, std::span<const BigInt> rhs) {
    if (lhs.empty() || rhs.empty()) return {};
    std::vector<BigInt> product(lhs.size() + rhs.size() - 1);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        for (std::size_t j = 0; j < rhs.size(); ++j) product[i + j] += lhs[i] * rhs[j];
    }
    return product;
}

// prod_{i<c} ((n - i) + d Z), integer coefficients.
std::vector<BigInt> shifted_product(std::int64_t n, std::uint64_t d, std::uint64_t c) {
    std::vector<BigInt> product{BigInt(1)};
    const BigInt slope(static_cast<unsigned long>(d));
    for (std::uint64_t i = 0; i < c; ++i) {
        const BigInt factor[] = {BigInt(static_cast<long>(n - static_cast<std::int64_t>(i))), slope};
        product = multiply(product, factor);
    }
    return product;
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t m) const {
    return m < coeffs_.size() ? coeffs_[m] : Rational(0L);
}

Rational RationalPolynomial::evaluate(const Rational& z) const {
    Rational acc(0L);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Rational RationalPolynomial::average_over_roots(std::uint64_t t) const {
    if (t == 0) throw std::invalid_argument("t must be positive");
    Rational total(0L);
    for (std::size_t m = 0; m < coeffs_.size(); m += t) total += coeffs_[m];
    return total;
}

RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> product(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) product[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return RationalPolynomial(std::move(product));
}

RationalPolynomial operator+(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
    std::vector<Rational> sum(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t m = 0; m < sum.size(); ++m) sum[m] = lhs.coefficient(m) + rhs.coefficient(m);
    return RationalPolynomial(std::move(sum));
}

RationalPolynomial binom_poly(std::int64_t n, std::uint64_t d, std::uint64_t c) {
    const std::vector<BigInt> product = shifted_product(n, d, c);
    const BigInt denominator = factorial(c);
    std::vector<Rational> coefficients;
    coefficients.reserve(product.size());
    for (const BigInt& coefficient : product) coefficients.emplace_back(coefficient, denominator);
    return RationalPolynomial(std::move(coefficients));
}

Rational average_over_roots(std::uint64_t t, std::int64_t n, std::uint64_t d, std::uint64_t c) {
    if (t == 0) throw std::invalid_argument("t must be positive");
    // Filter on the integer product and divide once.
    const std::vector<BigInt> product = shifted_product(n, d, c);
    BigInt total(0);
    for (std::size_t m = 0; m < product.size(); m += t) total += product[m];
    return Rational(total, factorial(c));
}

bool verify_lemma1(std::uint64_t t, std::int64_t n, std::uint64_t d, std::uint64_t c) {
    const Rational lhs = average_over_roots(t, n, d, c) - binom(Rational(n), c);
    return lhs == lemma1_sum({t, d, c, n});
}

}  // namespace rootcong
