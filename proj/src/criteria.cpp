#include "rootcong/criteria.hpp"

#include <stdexcept>

namespace rootcong {

namespace {

using u128 = unsigned __int128;

void require_positive(std::uint64_t t, std::uint64_t d) {
    if (t == 0 || d == 0) throw std::invalid_argument("t and d must be positive");
}

CriterionVerdict inconclusive(CriterionId id) { return {id, Outcome::inconclusive, {}}; }

std::int64_t as_signed(std::uint64_t x) { return static_cast<std::int64_t>(x); }

bool is_power_of(std::uint64_t p, std::uint64_t n) {
    while (n % p == 0) n /= p;
    return n == 1;
}

// (p^{e} - 1) / (p - 1) = 1 + p + ... + p^{e-1}
std::int64_t geometric_sum(std::uint64_t p, unsigned e) {
    std::int64_t total = 0;
    std::int64_t power = 1;
    for (unsigned i = 0; i < e; ++i) {
        total += power;
        power *= as_signed(p);
    }
    return total;
}

// floor(x * p^shift) for shift of either sign.
BigInt scaled_floor(std::uint64_t x, std::uint64_t p, std::int64_t shift) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), p, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    BigInt value(static_cast<unsigned long>(x));
    if (shift >= 0) return value * power;
    BigInt quotient;
    mpz_fdiv_q(quotient.get_mpz_t(), value.get_mpz_t(), power.get_mpz_t());
    return quotient;
}

}  // namespace

std::string_view to_string(CriterionId id) {
    switch (id) {
        case CriterionId::DLeT: return "DLeT";
        case CriterionId::CorPower: return "CorPower";
        case CriterionId::PropSuffcond: return "PropSuffcond";
        case CriterionId::PropBeta: return "PropBeta";
        case CriterionId::CorTooLargeValue: return "CorTooLargeValue";
        case CriterionId::PropTooLargeValuation: return "PropTooLargeValuation";
        case CriterionId::PropParticular: return "PropParticular";
        case CriterionId::CorPowerNot: return "CorPowerNot";
        case CriterionId::PropAnother: return "PropAnother";
        case CriterionId::DirectCheck: return "DirectCheck";
    }
    return "?";
}

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::holds: return "holds";
        case Outcome::fails: return "fails";
        case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

std::int64_t CriterionVerdict::at(std::string_view key) const {
    for (const auto& [name, value] : detail) {
        if (name == key) return value;
    }
    throw std::out_of_range("no detail entry '" + std::string(key) + "'");
}

std::int64_t power_holds_bound(std::uint64_t t, std::uint64_t p) {
    const unsigned alpha = floor_log(p, t);
    return as_signed(alpha + 1) * as_signed(t + 1) - geometric_sum(p, alpha + 1);
}

std::int64_t toolarge_valuation_bound(std::uint64_t t, std::uint64_t p) {
    const unsigned alpha = floor_log(p, t);
    return as_signed(alpha + 1) * as_signed(t) - as_signed(vp_factorial(p, t));
}

std::int64_t particular_bound(std::uint64_t t, std::uint64_t p, unsigned u) {
    return as_signed(u) * as_signed(t) + 1 - as_signed(vp_factorial(p, t - 1));
}

bool in_At(std::uint64_t t, std::uint64_t d) {
    require_positive(t, d);
    const PrimeFactorization factors = factorize(d);
    if (factors.size() == 1) {
        const auto [p, r] = factors.front();
        if (!(p == 2 || (p < t && !is_power_of(p, t)))) return false;
        const auto exponent = static_cast<std::int64_t>(r);
        return exponent > power_holds_bound(t, p) && exponent <= toolarge_valuation_bound(t, p);
    }
    if (factors.size() < 2) return false;
    for (const auto& [p, r] : factors) {
        if (p > t) return false;
        if (d / checked_pow(p, r) > t) return false;
    }
    return true;
}

SuffcondParams suffcond_params(std::uint64_t t, std::uint64_t d, std::uint64_t p) {
    require_positive(t, d);
    if (!is_prime(p) || d % p != 0) throw std::invalid_argument("suffcond_params needs a prime divisor of d");
    SuffcondParams params;
    params.p = p;
    const unsigned v = valuation(p, d);

    // k_p = max{1, ceil(floor((d-1) / p^{v+1}) / t)}
    const BigInt quotient = scaled_floor(d - 1, p, -static_cast<std::int64_t>(v + 1));
    BigInt k;
    BigInt t_big(static_cast<unsigned long>(t));
    mpz_cdiv_q(k.get_mpz_t(), quotient.get_mpz_t(), t_big.get_mpz_t());
    if (k < 1) k = 1;
    params.k_p = k.get_si();
    params.gamma_p = floor_log(p, d);

    // alpha = floor(log_p(k t p^gamma / d)); the argument exceeds 1/p because p^{gamma+1} > d.
    const BigInt numerator = k * t_big * scaled_floor(1, p, params.gamma_p);
    const BigInt d_big(static_cast<unsigned long>(d));
    if (numerator < d_big) {
        params.alpha_p_suff = -1;
    } else {
        BigInt ratio = numerator / d_big;
        std::int64_t alpha = 0;
        while (ratio >= p) {
            ratio /= static_cast<unsigned long>(p);
            ++alpha;
        }
        params.alpha_p_suff = alpha;
    }

    BigInt bound = BigInt(static_cast<long>(as_signed(v) - params.gamma_p + params.alpha_p_suff + 1)) * k * t_big;
    for (std::int64_t g = 0; g <= params.alpha_p_suff; ++g) {
        bound -= scaled_floor(d - 1, p, g - params.gamma_p);
    }
    if (!bound.fits_slong_p()) throw std::overflow_error("suffcond bound does not fit 64 bits");
    params.bound = bound.get_si();
    return params;
}

CriterionVerdict crit_d_le_t(std::uint64_t t, std::uint64_t d) {
    require_positive(t, d);
    if (d > t) return inconclusive(CriterionId::DLeT);
    return {CriterionId::DLeT, Outcome::holds, {{"d", as_signed(d)}, {"bound", as_signed(t)}}};
}

CriterionVerdict crit_power_holds(std::uint64_t t, std::uint64_t d) {
    require_positive(t, d);
    const PrimeFactorization factors = factorize(d);
    if (factors.size() != 1) return inconclusive(CriterionId::CorPower);
    const auto [p, r] = factors.front();
    const std::int64_t bound = power_holds_bound(t, p);
    if (static_cast<std::int64_t>(r) > bound) return inconclusive(CriterionId::CorPower);
    return {CriterionId::CorPower,
            Outcome::holds,
            {{"p", as_signed(p)}, {"r", r}, {"alpha", floor_log(p, t)}, {"bound", bound}}};
}

CriterionVerdict crit_toolarge_valuation(std::uint64_t t, std::uint64_t d) {
    require_positive(t, d);
    for (const auto& [p, r] : factorize(d)) {
        const std::int64_t bound = toolarge_valuation_bound(t, p);
        if (static_cast<std::int64_t>(r) > bound) {
            return {CriterionId::PropTooLargeValuation,
                    Outcome::fails,
                    {{"p", as_signed(p)}, {"r", r}, {"alpha", floor_log(p, t)}, {"bound", bound}}};
        }
    }
    return inconclusive(CriterionId::PropTooLargeValuation);
}

CriterionVerdict crit_toolarge_value(std::uint64_t t, std::uint64_t d) {
    require_positive(t, d);
    for (const auto& [p, r] : factorize(d)) {
        const u128 bound = static_cast<u128>(t) * checked_pow(p, r);
        if (static_cast<u128>(d) > bound) {
            return {CriterionId::CorTooLargeValue,
                    Outcome::fails,
                    {{"p", as_signed(p)}, {"r", r}, {"bound", static_cast<std::int64_t>(bound)}}};
        }
    }
    return inconclusive(CriterionId::CorTooLargeValue);
}

CriterionVerdict crit_beta(std::uint64_t t, std::uint64_t d) {
    require_positive(t, d);
    for (const auto& [p, r] : factorize(d)) {
        const auto factorial_val = as_signed(vp_factorial(p, t));
        for (unsigned beta = 1; beta <= r; ++beta) {
            const std::int64_t valuation_bound = as_signed(t) * beta - factorial_val;
            const u128 size_bound = static_cast<u128>(t) * checked_pow(p, r - beta);
            if (static_cast<std::int64_t>(r) > valuation_bound && static_cast<u128>(d) > size_bound) {
                return {CriterionId::PropBeta,
                        Outcome::fails,
                        {{"p", as_signed(p)},
                         {"r", r},
                         {"beta", beta},
                         {"bound", valuation_bound},
                         {"c", static_cast<std::int64_t>(size_bound)}}};
            }
        }
    }
    return inconclusive(CriterionId::PropBeta);
}

CriterionVerdict crit_particular(std::uint64_t t, std::uint64_t d) {
    require_positive(t, d);
    for (const auto& [p, u] : factorize(t)) {
        if (p == 2 || d % p != 0) continue;
        const std::uint64_t q = t / checked_pow(p, u);
        const unsigned r = valuation(p, d);
        if (d / checked_pow(p, r) != q) continue;
        const std::int64_t bound = particular_bound(t, p, u);
        if (static_cast<std::int64_t>(r) > bound) {
            return {CriterionId::PropParticular,
                    Outcome::fails,
                    {{"p", as_signed(p)}, {"q", as_signed(q)}, {"u", u}, {"r", r}, {"bound", bound}}};
        }
    }
    return inconclusive(CriterionId::PropParticular);
}

CriterionVerdict crit_powernot(std::uint64_t t, std::uint64_t d) {
    require_positive(t, d);
    const PrimeFactorization t_factors = factorize(t);
    const PrimeFactorization d_factors = factorize(d);
    if (t_factors.size() != 1 || d_factors.size() != 1) return inconclusive(CriterionId::CorPowerNot);
    const auto [p, u] = t_factors.front();
    if (p == 2 || d_factors.front().prime != p) return inconclusive(CriterionId::CorPowerNot);
    const unsigned r = d_factors.front().exponent;
    const std::int64_t bound = particular_bound(t, p, u);
    if (static_cast<std::int64_t>(r) <= bound) return inconclusive(CriterionId::CorPowerNot);
    return {CriterionId::CorPowerNot, Outcome::fails, {{"p", as_signed(p)}, {"u", u}, {"r", r}, {"bound", bound}}};
}

CriterionVerdict crit_another(std::uint64_t t, std::uint64_t d) {
    require_positive(t, d);
    for (const auto& [p, u] : factorize(t)) {
        if (d % p != 0) continue;
        const std::uint64_t q = t / checked_pow(p, u);
        if ((q + 1) % p == 0) continue;
        const unsigned r = valuation(p, d);
        if (d / checked_pow(p, r) != q + 1) continue;
        const std::int64_t bound = as_signed(u) * as_signed(t) - as_signed(vp_factorial(p, t));
        if (static_cast<std::int64_t>(r) > bound) {
            return {CriterionId::PropAnother,
                    Outcome::fails,
                    {{"p", as_signed(p)}, {"q", as_signed(q)}, {"u", u}, {"r", r}, {"bound", bound}}};
        }
    }
    return inconclusive(CriterionId::PropAnother);
}

CriterionVerdict crit_suffcond(std::uint64_t t, std::uint64_t d) {
    require_positive(t, d);
    const PrimeFactorization factors = factorize(d);
    if (factors.empty()) return inconclusive(CriterionId::PropSuffcond);
    CriterionVerdict verdict{CriterionId::PropSuffcond, Outcome::holds, {}};
    std::int64_t tightest = INT64_MAX;
    for (const auto& [p, r] : factors) {
        const SuffcondParams params = suffcond_params(t, d, p);
        if (static_cast<std::int64_t>(r) > params.bound) return inconclusive(CriterionId::PropSuffcond);
        if (params.bound - static_cast<std::int64_t>(r) < tightest) {
            tightest = params.bound - static_cast<std::int64_t>(r);
            verdict.detail = {{"p", as_signed(p)},
                              {"r", r},
                              {"k", params.k_p},
                              {"gamma", params.gamma_p},
                              {"alpha", params.alpha_p_suff},
                              {"bound", params.bound}};
        }
    }
    return verdict;
}

std::vector<CriterionVerdict> evaluate_criteria(std::uint64_t t, std::uint64_t d) {
    return {crit_toolarge_value(t, d), crit_toolarge_valuation(t, d), crit_d_le_t(t, d),
            crit_power_holds(t, d),    crit_suffcond(t, d),           crit_beta(t, d),
            crit_particular(t, d),     crit_powernot(t, d),           crit_another(t, d)};
}

}  // namespace rootcong
