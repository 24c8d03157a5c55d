#include "rootcong/symfun.hpp"

#include <stdexcept>
#include <string>

namespace rootcong {

SymmetricPrefix::SymmetricPrefix(std::int64_t upper, RingHandle ring, Truncation truncation)
    : lower_(upper + 1), upper_(upper), ring_(std::move(ring)), truncation_(truncation) {
    if (truncation_.kind == Truncation::Kind::highest && truncation_.count == 0) {
        throw std::invalid_argument("highest-order window must keep at least one coefficient");
    }
    coeffs_.emplace_back(1);
    if (ring_) ring_->reduce(coeffs_.front());
}

SymmetricPrefix SymmetricPrefix::empty(std::int64_t upper, Truncation truncation) {
    return SymmetricPrefix(upper, nullptr, truncation);
}

SymmetricPrefix SymmetricPrefix::empty_mod(std::int64_t upper, RingHandle ring, Truncation truncation) {
    if (!ring) throw std::invalid_argument("modular prefix needs a ring");
    return SymmetricPrefix(upper, std::move(ring), truncation);
}

bool SymmetricPrefix::has_order(std::size_t m) const {
    if (m > length()) return true;
    return m >= first_order_ && m - first_order_ < coeffs_.size();
}

BigInt SymmetricPrefix::coefficient(std::size_t m) const {
    if (m > length()) return BigInt(0);
    if (!has_order(m)) throw std::out_of_range("e_" + std::to_string(m) + " was truncated away");
    return coeffs_[m - first_order_];
}

ResidueElement SymmetricPrefix::residue(std::size_t m) const {
    if (!ring_) throw std::logic_error("residue() on an exact prefix");
    return ResidueElement(ring_, coefficient(m));
}

SymmetricPrefix SymmetricPrefix::extend(std::int64_t element) const& {
    SymmetricPrefix copy = *this;
    copy.extend_in_place(element);
    return copy;
}

SymmetricPrefix SymmetricPrefix::extend(std::int64_t element) && {
    extend_in_place(element);
    return std::move(*this);
}

void SymmetricPrefix::extend_in_place(std::int64_t element) {
    if (element == lower_ - 1) {
        lower_ = element;
    } else if (element == upper_ + 1) {
        upper_ = element;
    } else {
        throw std::invalid_argument("element " + std::to_string(element) + " does not extend [" +
                                    std::to_string(lower_) + ", " + std::to_string(upper_) + "]");
    }
    const std::size_t len = length();  // new length
    const bool grows = truncation_.kind != Truncation::Kind::lowest || len <= truncation_.count;
    if (grows) coeffs_.emplace_back(0);

    // e'_m = e_m + element * e_{m-1}, highest order first so e_{m-1} is still the old value.
    const auto magnitude = static_cast<unsigned long>(element < 0 ? -element : element);
    for (std::size_t i = coeffs_.size() - 1; i > 0; --i) {
        mpz_ptr target = coeffs_[i].get_mpz_t();
        mpz_srcptr source = coeffs_[i - 1].get_mpz_t();
        if (element >= 0) {
            mpz_addmul_ui(target, source, magnitude);
        } else {
            mpz_submul_ui(target, source, magnitude);
        }
        if (ring_) ring_->reduce(coeffs_[i]);
    }
    // The stored front is e_0 = 1 or an order that the window now drops.
    if (truncation_.kind == Truncation::Kind::highest && len > truncation_.count &&
        len - truncation_.count > first_order_) {
        coeffs_.erase(coeffs_.begin());
        ++first_order_;
    } else if (first_order_ > 0) {
        // Unreachable: a window that started dropping keeps dropping one order per step.
        throw std::logic_error("symmetric prefix window out of step");
    }
}

SymmetricPrefix elementary_symmetric_exact(std::int64_t a, std::int64_t b, Truncation truncation) {
    if (a > b + 1) throw std::invalid_argument("interval lower end exceeds upper end + 1");
    SymmetricPrefix prefix = SymmetricPrefix::empty(b, truncation);
    for (std::int64_t j = b; j >= a; --j) prefix = std::move(prefix).extend(j);
    return prefix;
}

SymmetricPrefix elementary_symmetric_mod(std::int64_t a, std::int64_t b, std::uint64_t p, unsigned exponent,
                                         Truncation truncation) {
    if (a > b + 1) throw std::invalid_argument("interval lower end exceeds upper end + 1");
    SymmetricPrefix prefix = SymmetricPrefix::empty_mod(b, make_ring(p, exponent), truncation);
    for (std::int64_t j = b; j >= a; --j) prefix = std::move(prefix).extend(j);
    return prefix;
}

}  // namespace rootcong
