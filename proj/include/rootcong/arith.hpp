#pragma once

// Exact integers and rationals, p-adic valuations and small integer helpers.
//
// Big values are GMP integers (mpz_class). Rationals are always kept in lowest
// terms with a positive denominator, which is the normal form the congruence
// test relies on.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rootcong {

using BigInt = mpz_class;

/// Exact quotient of two integers, stored reduced with denominator > 0.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    /// Throws std::invalid_argument when `denominator` is zero.
    Rational(const BigInt& numerator, const BigInt& denominator);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// "a" for integers, "a/b" otherwise.
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// An integer or +infinity. Used for valuations, where nu_p(0) = +inf.
class ExtendedInt {
public:
    constexpr ExtendedInt() = default;
    constexpr ExtendedInt(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    static constexpr ExtendedInt infinity() {
        ExtendedInt x;
        x.infinite_ = true;
        return x;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }
    /// Throws std::logic_error when infinite.
    std::int64_t value() const;

    friend constexpr bool operator==(const ExtendedInt& lhs, const ExtendedInt& rhs) {
        if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
        return lhs.value_ == rhs.value_;
    }
    friend constexpr std::strong_ordering operator<=>(const ExtendedInt& lhs, const ExtendedInt& rhs) {
        if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ <=> rhs.infinite_;
        return lhs.value_ <=> rhs.value_;
    }

    /// Finite + finite, or +inf if either side is infinite.
    friend ExtendedInt operator+(const ExtendedInt& lhs, const ExtendedInt& rhs);
    friend ExtendedInt operator-(const ExtendedInt& lhs, std::int64_t rhs);

    /// Decimal value or "+inf".
    std::string to_string() const;

private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtendedInt& x);

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing, exponents >= 1.
using PrimeFactorization = std::vector<PrimePower>;

bool is_prime(std::uint64_t n);

/// Trial-division factorization. factorize(1) is empty; n = 0 throws std::invalid_argument.
PrimeFactorization factorize(std::uint64_t n);

/// Product of p^r over the factorization (throws std::overflow_error past 64 bits).
std::uint64_t expand(const PrimeFactorization& factors);

/// nu_p of a machine integer; n must be nonzero.
unsigned valuation(std::uint64_t p, std::uint64_t n);

/// nu_p(x) for an integer; +inf for zero. Throws std::invalid_argument if p is not prime.
ExtendedInt vp(std::uint64_t p, const BigInt& x);

/// nu_p(x) for a rational, negative when p divides the reduced denominator.
ExtendedInt vp(std::uint64_t p, const Rational& x);

/// nu_p(n!) by Legendre's formula.
std::uint64_t vp_factorial(std::uint64_t p, std::uint64_t n);

/// Largest e with base^e <= n, by integer multiplication. Requires base >= 2, n >= 1.
unsigned floor_log(std::uint64_t base, std::uint64_t n);

/// base^exp, throwing std::overflow_error if it does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

BigInt factorial(std::uint64_t n);

/// x (x - 1) ... (x - k + 1); the empty product (k = 0) is 1.
Rational falling_factorial(const Rational& x, std::uint64_t k);

/// (x)_k / k!
Rational binom(const Rational& x, std::uint64_t k);

}  // namespace rootcong
