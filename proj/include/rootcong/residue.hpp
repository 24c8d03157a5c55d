#pragma once

// Integers modulo a prime power p^M for large M.

#include "rootcong/arith.hpp"

#include <cstdint>
#include <memory>

namespace rootcong {

/// The ring Z / p^M Z. Immutable; raising precision means building a new ring.
class ResidueRing {
public:
    /// Throws std::invalid_argument if p is not prime or M == 0.
    ResidueRing(std::uint64_t p, unsigned exponent);

    std::uint64_t prime() const { return prime_; }
    unsigned exponent() const { return exponent_; }
    const BigInt& modulus() const { return modulus_; }

    /// Reduce `x` in place into [0, p^M).
    void reduce(BigInt& x) const {
        if (prime_ == 2) {
            mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), exponent_);
        } else {
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t());
        }
    }

    /// nu_p of the residue x in [0, p^M); +inf for 0 (i.e. "at least M").
    ExtendedInt valuation(const BigInt& x) const;

    friend bool operator==(const ResidueRing& lhs, const ResidueRing& rhs) {
        return lhs.prime_ == rhs.prime_ && lhs.exponent_ == rhs.exponent_;
    }

private:
    std::uint64_t prime_;
    unsigned exponent_;
    BigInt modulus_;
};

using RingHandle = std::shared_ptr<const ResidueRing>;

RingHandle make_ring(std::uint64_t p, unsigned exponent);

/// An element of a ResidueRing. Operands of a binary operation must live in
/// equal rings (same p and M); otherwise std::logic_error is thrown.
class ResidueElement {
public:
    ResidueElement(RingHandle ring, const BigInt& value);
    ResidueElement(RingHandle ring, std::int64_t value);

    std::uint64_t prime() const { return ring_->prime(); }
    unsigned exponent() const { return ring_->exponent(); }
    const RingHandle& ring() const { return ring_; }
    const BigInt& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    ResidueElement& operator+=(const ResidueElement& rhs);
    ResidueElement& operator-=(const ResidueElement& rhs);
    ResidueElement& operator*=(const ResidueElement& rhs);
    /// Word-sized multiplier, no full big multiply.
    ResidueElement& mul_small(std::int64_t factor);

    friend ResidueElement operator+(ResidueElement lhs, const ResidueElement& rhs) { return lhs += rhs; }
    friend ResidueElement operator-(ResidueElement lhs, const ResidueElement& rhs) { return lhs -= rhs; }
    friend ResidueElement operator*(ResidueElement lhs, const ResidueElement& rhs) { return lhs *= rhs; }

    ResidueElement pow(std::uint64_t exponent) const;

    /// nu_p of the stored value; +inf when it is zero in the ring.
    ExtendedInt valuation() const { return ring_->valuation(value_); }

    friend bool operator==(const ResidueElement& lhs, const ResidueElement& rhs) {
        return *lhs.ring_ == *rhs.ring_ && lhs.value_ == rhs.value_;
    }

private:
    void check_same_ring(const ResidueElement& rhs) const;

    RingHandle ring_;
    BigInt value_;
};

}  // namespace rootcong
