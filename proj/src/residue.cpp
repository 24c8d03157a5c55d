#include "rootcong/residue.hpp"

#include <stdexcept>
#include <string>

namespace rootcong {

ResidueRing::ResidueRing(std::uint64_t p, unsigned exponent) : prime_(p), exponent_(exponent) {
    if (!is_prime(p)) throw std::invalid_argument("residue ring base is not prime: " + std::to_string(p));
    if (exponent == 0) throw std::invalid_argument("residue ring exponent must be positive");
    mpz_ui_pow_ui(modulus_.get_mpz_t(), p, exponent);
}

ExtendedInt ResidueRing::valuation(const BigInt& x) const {
    if (x == 0) return ExtendedInt::infinity();
    if (prime_ == 2) return static_cast<std::int64_t>(mpz_scan1(x.get_mpz_t(), 0));
    BigInt rest;
    BigInt prime(static_cast<unsigned long>(prime_));
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

RingHandle make_ring(std::uint64_t p, unsigned exponent) {
    return std::make_shared<const ResidueRing>(p, exponent);
}

ResidueElement::ResidueElement(RingHandle ring, const BigInt& value) : ring_(std::move(ring)), value_(value) {
    if (!ring_) throw std::invalid_argument("residue element without a ring");
    ring_->reduce(value_);
}

ResidueElement::ResidueElement(RingHandle ring, std::int64_t value)
    : ResidueElement(std::move(ring), BigInt(static_cast<long>(value))) {}

void ResidueElement::check_same_ring(const ResidueElement& rhs) const {
    if (!(*ring_ == *rhs.ring_)) throw std::logic_error("residue ring mismatch");
}

ResidueElement& ResidueElement::operator+=(const ResidueElement& rhs) {
    check_same_ring(rhs);
    value_ += rhs.value_;
    if (value_ >= ring_->modulus()) value_ -= ring_->modulus();
    return *this;
}

ResidueElement& ResidueElement::operator-=(const ResidueElement& rhs) {
    check_same_ring(rhs);
    value_ -= rhs.value_;
    if (value_ < 0) value_ += ring_->modulus();
    return *this;
}

ResidueElement& ResidueElement::operator*=(const ResidueElement& rhs) {
    check_same_ring(rhs);
    value_ *= rhs.value_;
    ring_->reduce(value_);
    return *this;
}

ResidueElement& ResidueElement::mul_small(std::int64_t factor) {
    if (factor >= 0) {
        mpz_mul_ui(value_.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(factor));
    } else {
        mpz_mul_si(value_.get_mpz_t(), value_.get_mpz_t(), static_cast<long>(factor));
    }
    ring_->reduce(value_);
    return *this;
}

ResidueElement ResidueElement::pow(std::uint64_t exponent) const {
    ResidueElement result(ring_, BigInt(0));
    mpz_powm_ui(result.value_.get_mpz_t(), value_.get_mpz_t(), exponent, ring_->modulus().get_mpz_t());
    return result;
}

}  // namespace rootcong
