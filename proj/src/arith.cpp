#include "rootcong/arith.hpp"

#include <ostream>
#include <stdexcept>

namespace rootcong {

namespace {

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
}

// nu_p of a nonzero big integer.
std::int64_t big_valuation(std::uint64_t p, const BigInt& x) {
    if (p == 2) return static_cast<std::int64_t>(mpz_scan1(x.get_mpz_t(), 0));
    BigInt rest = x;
    BigInt prime(static_cast<unsigned long>(p));
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

std::int64_t ExtendedInt::value() const {
    if (infinite_) throw std::logic_error("value() of +inf");
    return value_;
}

ExtendedInt operator+(const ExtendedInt& lhs, const ExtendedInt& rhs) {
    if (lhs.infinite_ || rhs.infinite_) return ExtendedInt::infinity();
    return ExtendedInt(lhs.value_ + rhs.value_);
}

ExtendedInt operator-(const ExtendedInt& lhs, std::int64_t rhs) {
    if (lhs.infinite_) return lhs;
    return ExtendedInt(lhs.value_ - rhs);
}

std::string ExtendedInt::to_string() const { return infinite_ ? "+inf" : std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, const ExtendedInt& x) { return os << x.to_string(); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f <= n / f; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

PrimeFactorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    PrimeFactorization factors;
    auto strip = [&](std::uint64_t f) {
        unsigned e = 0;
        while (n % f == 0) {
            n /= f;
            ++e;
        }
        if (e > 0) factors.push_back({f, e});
    };
    strip(2);
    for (std::uint64_t f = 3; f <= n / f; f += 2) strip(f);
    if (n > 1) factors.push_back({n, 1});
    return factors;
}

std::uint64_t expand(const PrimeFactorization& factors) {
    std::uint64_t product = 1;
    for (const auto& [p, r] : factors) {
        const std::uint64_t power = checked_pow(p, r);
        if (power != 0 && product > UINT64_MAX / power) throw std::overflow_error("expand overflows 64 bits");
        product *= power;
    }
    return product;
}

unsigned valuation(std::uint64_t p, std::uint64_t n) {
    if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
    if (n == 0) throw std::invalid_argument("valuation of zero is infinite");
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

ExtendedInt vp(std::uint64_t p, const BigInt& x) {
    require_prime(p);
    if (x == 0) return ExtendedInt::infinity();
    return big_valuation(p, x);
}

ExtendedInt vp(std::uint64_t p, const Rational& x) {
    require_prime(p);
    if (x.is_zero()) return ExtendedInt::infinity();
    return big_valuation(p, x.raw().get_num()) - big_valuation(p, x.raw().get_den());
}

std::uint64_t vp_factorial(std::uint64_t p, std::uint64_t n) {
    require_prime(p);
    std::uint64_t total = 0;
    for (std::uint64_t q = n / p; q > 0; q /= p) total += q;
    return total;
}

unsigned floor_log(std::uint64_t base, std::uint64_t n) {
    if (base < 2) throw std::invalid_argument("floor_log base must be >= 2");
    if (n < 1) throw std::invalid_argument("floor_log argument must be >= 1");
    unsigned e = 0;
    std::uint64_t power = 1;
    while (power <= n / base) {
        power *= base;
        ++e;
    }
    return e;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) throw std::overflow_error("power overflows 64 bits");
        result *= base;
    }
    return result;
}

BigInt factorial(std::uint64_t n) {
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Rational falling_factorial(const Rational& x, std::uint64_t k) {
    Rational result(1L);
    Rational factor = x;
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= factor;
        factor -= Rational(1L);
    }
    return result;
}

Rational binom(const Rational& x, std::uint64_t k) {
    return falling_factorial(x, k) / Rational(factorial(k));
}

}  // namespace rootcong
