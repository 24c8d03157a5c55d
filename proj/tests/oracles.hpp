#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// they are used to check.

#include "rootcong/arith.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using rootcong::BigInt;
using rootcong::Rational;

/// e_m of `values` by enumerating all subsets (|values| <= ~20).
inline std::vector<BigInt> subset_elementary(const std::vector<std::int64_t>& values) {
    const std::size_t n = values.size();
    std::vector<BigInt> e(n + 1, BigInt(0));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        BigInt product(1);
        std::size_t size = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1U) {
                product *= static_cast<long>(values[i]);
                ++size;
            }
        }
        e[size] += product;
    }
    return e;
}

inline std::vector<std::int64_t> interval(std::int64_t a, std::int64_t b) {
    std::vector<std::int64_t> out;
    for (std::int64_t j = a; j <= b; ++j) out.push_back(j);
    return out;
}

/// n! by repeated multiplication.
inline BigInt slow_factorial(std::uint64_t n) {
    BigInt f(1);
    for (std::uint64_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

/// Exponent of p in a nonzero integer by repeated division.
inline std::int64_t divide_out(std::uint64_t p, BigInt x) {
    std::int64_t e = 0;
    if (x < 0) x = -x;
    while (x % static_cast<unsigned long>(p) == 0) {
        x /= static_cast<unsigned long>(p);
        ++e;
    }
    return e;
}

/// (x)_k / k! straight from the definition.
inline Rational direct_binomial(const Rational& x, std::uint64_t k) {
    Rational num(1L);
    for (std::uint64_t i = 0; i < k; ++i) num *= x - Rational(static_cast<long>(i));
    return num / Rational(slow_factorial(k));
}

// ---------------------------------------------------------------------------
// Arithmetic in Q(zeta_t) = Q[x] / Phi_t(x), enough to evaluate
// (1/t) sum_s C(n + d zeta_t^s, c) at the actual roots of unity.

using IntPoly = std::vector<BigInt>;  // ascending degree

inline void trim(IntPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

/// Exact division of integer polynomials with monic divisor.
inline IntPoly divide_exact(IntPoly num, const IntPoly& den) {
    IntPoly quotient(num.size() - den.size() + 1, BigInt(0));
    for (std::size_t i = quotient.size(); i-- > 0;) {
        const BigInt coefficient = num[i + den.size() - 1];
        quotient[i] = coefficient;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= coefficient * den[j];
    }
    return quotient;
}

/// Phi_t via x^t - 1 = prod_{e | t} Phi_e.
inline IntPoly cyclotomic_polynomial(std::uint64_t t) {
    IntPoly p(t + 1, BigInt(0));
    p[0] = -1;
    p[t] = 1;
    for (std::uint64_t e = 1; e < t; ++e) {
        if (t % e == 0) p = divide_exact(p, cyclotomic_polynomial(e));
    }
    trim(p);
    return p;
}

/// Element of Q(zeta_t) as coefficients of 1, x, ..., x^{phi-1}.
class CyclotomicField {
public:
    explicit CyclotomicField(std::uint64_t t) : t_(t), modulus_(cyclotomic_polynomial(t)) {}

    std::size_t dimension() const { return modulus_.size() - 1; }

    std::vector<Rational> reduce(std::vector<Rational> value) const {
        const std::size_t dim = dimension();
        for (std::size_t i = value.size(); i-- > dim;) {
            const Rational lead = value[i];
            if (lead.is_zero()) continue;
            for (std::size_t j = 0; j < modulus_.size(); ++j) value[i - dim + j] -= lead * Rational(modulus_[j]);
        }
        value.resize(dim, Rational(0L));
        return value;
    }

    std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
        std::vector<Rational> product(a.size() + b.size() - 1, Rational(0L));
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) product[i + j] += a[i] * b[j];
        }
        return reduce(std::move(product));
    }

    /// zeta_t^s
    std::vector<Rational> root_power(std::uint64_t s) const {
        std::vector<Rational> x(s % t_ + 1, Rational(0L));
        x.back() = Rational(1L);
        return reduce(std::move(x));
    }

    std::uint64_t order() const { return t_; }

private:
    std::uint64_t t_;
    IntPoly modulus_;
};

/// (1/t) sum_s C(n + d zeta^s, c) evaluated in Q(zeta_t). Returns the full
/// field element so callers can check that it is rational.
inline std::vector<Rational> root_average(std::uint64_t t, std::int64_t n, std::uint64_t d, std::uint64_t c) {
    const CyclotomicField field(t);
    std::vector<Rational> total(field.dimension(), Rational(0L));
    for (std::uint64_t s = 0; s < t; ++s) {
        const std::vector<Rational> zeta = field.root_power(s);
        std::vector<Rational> value(field.dimension(), Rational(0L));
        value[0] = Rational(1L);
        for (std::uint64_t i = 0; i < c; ++i) {
            std::vector<Rational> factor = zeta;
            for (auto& coefficient : factor) coefficient *= Rational(static_cast<long>(d));
            factor[0] += Rational(n - static_cast<std::int64_t>(i));
            value = field.multiply(value, factor);
        }
        for (std::size_t j = 0; j < value.size(); ++j) total[j] += value[j];
    }
    const Rational scale = Rational(1L) / Rational(BigInt(slow_factorial(c) * static_cast<unsigned long>(t)));
    for (auto& coefficient : total) coefficient *= scale;
    return total;
}

inline Rational random_rational(std::mt19937_64& rng, long bound = 1000) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace oracle
