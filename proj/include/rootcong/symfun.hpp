#pragma once

// Elementary symmetric sums of integer intervals.
//
// A SymmetricPrefix over {a, ..., b} holds the coefficients e_m of
//     prod_{j=a}^{b} (X + j) = sum_m e_m X^{len - m},   len = b - a + 1,
// either exactly or modulo p^M. Growing the interval by one element is a
// single pass over the stored coefficients with a word-sized multiplier, so
// scanning nested intervals {-1}, {-2,-1}, {-3,-2,-1}, ... is quadratic in
// total rather than cubic.

#include "rootcong/arith.hpp"
#include "rootcong/residue.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rootcong {

/// Which orders e_m a prefix keeps.
///
/// `lowest(m)` keeps e_0..e_m. `highest(k)` keeps e_{len-k}..e_len, the
/// coefficients of X^0..X^k; this is the window the congruence sums need, since
/// only e_{c-kt} with small k survive modulo p^M.
struct Truncation {
    enum class Kind { none, lowest, highest };

    Kind kind = Kind::none;
    std::size_t count = 0;

    static Truncation none() { return {}; }
    static Truncation lowest(std::size_t max_order) { return {Kind::lowest, max_order}; }
    static Truncation highest(std::size_t window) { return {Kind::highest, window}; }
};

class SymmetricPrefix {
public:
    /// Empty interval {upper + 1, ..., upper}: coefficients [1].
    static SymmetricPrefix empty(std::int64_t upper, Truncation truncation = {});
    static SymmetricPrefix empty_mod(std::int64_t upper, RingHandle ring, Truncation truncation = {});

    std::int64_t lower() const { return lower_; }
    std::int64_t upper() const { return upper_; }
    /// Number of elements in the interval.
    std::size_t length() const { return static_cast<std::size_t>(upper_ - lower_ + 1); }
    bool is_modular() const { return ring_ != nullptr; }
    /// Null for the exact carrier.
    const RingHandle& ring() const { return ring_; }
    const Truncation& truncation() const { return truncation_; }

    /// Whether e_m is available (orders above length() are implicitly zero and always available).
    bool has_order(std::size_t m) const;
    /// e_m (reduced into [0, p^M) for the modular carrier). Throws std::out_of_range if truncated away.
    BigInt coefficient(std::size_t m) const;
    /// e_m as a ring element; modular carrier only.
    ResidueElement residue(std::size_t m) const;
    /// Stored coefficients, lowest stored order first.
    const std::vector<BigInt>& stored() const { return coeffs_; }
    std::size_t first_stored_order() const { return first_order_; }

    /// Adds `element` to the interval; it must be lower() - 1 or upper() + 1.
    /// Throws std::invalid_argument otherwise.
    [[nodiscard]] SymmetricPrefix extend(std::int64_t element) const&;
    [[nodiscard]] SymmetricPrefix extend(std::int64_t element) &&;

private:
    SymmetricPrefix(std::int64_t upper, RingHandle ring, Truncation truncation);
    void extend_in_place(std::int64_t element);

    std::int64_t lower_ = 0;
    std::int64_t upper_ = -1;
    RingHandle ring_;
    Truncation truncation_;
    std::size_t first_order_ = 0;
    std::vector<BigInt> coeffs_;
};

/// Exact e_0..e_len of {a, ..., b}; a = b + 1 gives [1].
SymmetricPrefix elementary_symmetric_exact(std::int64_t a, std::int64_t b, Truncation truncation = {});

/// Same coefficients reduced modulo p^M.
SymmetricPrefix elementary_symmetric_mod(std::int64_t a, std::int64_t b, std::uint64_t p, unsigned exponent,
                                         Truncation truncation = {});

}  // namespace rootcong
