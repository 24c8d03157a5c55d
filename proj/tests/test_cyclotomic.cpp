#include "doctest.h"

#include "oracles.hpp"
#include "rootcong/congruence.hpp"
#include "rootcong/cyclotomic.hpp"

#include <random>

using namespace rootcong;

namespace {

RationalPolynomial random_polynomial(std::mt19937_64& rng, std::size_t degree) {
    std::vector<Rational> coefficients;
    for (std::size_t i = 0; i <= degree; ++i) coefficients.push_back(oracle::random_rational(rng, 30));
    return RationalPolynomial(coefficients);
}

// (1/t) sum_s P(zeta^s) computed in Q(zeta_t).
std::vector<Rational> field_average(const RationalPolynomial& poly, std::uint64_t t) {
    const oracle::CyclotomicField field(t);
    std::vector<Rational> total(field.dimension(), Rational(0L));
    for (std::uint64_t s = 0; s < t; ++s) {
        const auto zeta = field.root_power(s);
        std::vector<Rational> value(field.dimension(), Rational(0L));
        for (std::size_t i = poly.coefficients().size(); i-- > 0;) {
            value = field.multiply(value, zeta);
            value[0] += poly.coefficients()[i];
        }
        for (std::size_t j = 0; j < value.size(); ++j) total[j] += value[j];
    }
    for (auto& coefficient : total) coefficient = coefficient / Rational(static_cast<long>(t));
    return total;
}

}  // namespace

TEST_CASE("polynomial basics") {
    const RationalPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(RationalPolynomial({Rational(0L), Rational(0L)}).is_zero());
    const RationalPolynomial p({Rational(1L), Rational(2L), Rational(0L)});
    CHECK(p.degree() == 1);
    CHECK(p.coefficient(5) == Rational(0L));
    const RationalPolynomial q({Rational(-1L), Rational(1L)});
    CHECK(p * q == RationalPolynomial({Rational(-1L), Rational(-1L), Rational(2L)}));
    CHECK(p + q == RationalPolynomial({Rational(0L), Rational(3L)}));
    CHECK((p * zero).is_zero());
    CHECK(p.evaluate(Rational(3L)) == Rational(7L));
}

TEST_CASE("binom_poly") {
    CHECK(binom_poly(5, 3, 0) == RationalPolynomial({Rational(1L)}));
    CHECK(binom_poly(-4, 9, 1) == RationalPolynomial({Rational(-4L), Rational(9L)}));

    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::int64_t> pick_n(-30, 30);
    std::uniform_int_distribution<std::uint64_t> pick_d(1, 30);
    std::uniform_int_distribution<std::uint64_t> pick_c(0, 15);
    for (int i = 0; i < 300; ++i) {
        const std::int64_t n = pick_n(rng);
        const auto d = pick_d(rng);
        const auto c = pick_c(rng);
        const RationalPolynomial poly = binom_poly(n, d, c);
        CHECK(poly.degree() == static_cast<std::int64_t>(c));
        const auto shifted = static_cast<long>(n + static_cast<std::int64_t>(d));
        REQUIRE(poly.evaluate(Rational(1L)) == oracle::direct_binomial(Rational(shifted), c));
        REQUIRE(poly.coefficient(0) == oracle::direct_binomial(Rational(static_cast<long>(n)), c));
    }
}

TEST_CASE("averaging examples") {
    CHECK(average_over_roots(2, 3, 4, 6) == Rational(4L));
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> pick_n(-50, 50);
    for (int i = 0; i < 100; ++i) {
        const std::int64_t n = pick_n(rng);
        const std::uint64_t d = 1 + static_cast<std::uint64_t>(i % 17);
        const std::uint64_t c = static_cast<std::uint64_t>(i % 11);
        CHECK(average_over_roots(1, n, d, c) ==
              oracle::direct_binomial(Rational(static_cast<long>(n + static_cast<std::int64_t>(d))), c));
        const std::uint64_t t = c + 1 + static_cast<std::uint64_t>(i % 3);
        CHECK(average_over_roots(t, n, d, c) == oracle::direct_binomial(Rational(static_cast<long>(n)), c));
    }
}

TEST_CASE("exponent filtering agrees with evaluation at the roots") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 40; ++i) {
        const RationalPolynomial poly = random_polynomial(rng, static_cast<std::size_t>(i % 13));
        CHECK(poly.average_over_roots(1) == poly.evaluate(Rational(1L)));
        const Rational real_pair = (poly.evaluate(Rational(1L)) + poly.evaluate(Rational(-1L))) / Rational(2L);
        CHECK(poly.average_over_roots(2) == real_pair);
        for (std::uint64_t t = 3; t <= 8; ++t) {
            const auto average = field_average(poly, t);
            for (std::size_t j = 1; j < average.size(); ++j) REQUIRE(average[j].is_zero());
            REQUIRE(poly.average_over_roots(t) == average[0]);
        }
    }
}

TEST_CASE("averaged binomials match the roots of unity oracle") {
    for (std::uint64_t t = 3; t <= 6; ++t) {
        for (std::uint64_t d = 1; d <= 7; ++d) {
            for (std::uint64_t c = 0; c <= 8; ++c) {
                for (std::int64_t n : {-6, -1, 0, 4}) {
                    const auto expected = oracle::root_average(t, n, d, c);
                    for (std::size_t j = 1; j < expected.size(); ++j) REQUIRE(expected[j].is_zero());
                    REQUIRE(average_over_roots(t, n, d, c) == expected[0]);
                }
            }
        }
    }
}

TEST_CASE("verify_lemma1") {
    CHECK(verify_lemma1(2, -1, 6, 5));
    for (std::uint64_t d = 1; d <= 10; ++d) {
        for (std::uint64_t c = 0; c <= 12; ++c) CHECK(verify_lemma1(1, -3, d, c));
    }
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::int64_t> pick_n(-40, 40);
    for (std::uint64_t t = 1; t <= 6; ++t) {
        for (std::uint64_t d = 1; d <= 12; ++d) {
            for (std::uint64_t c = 0; c <= 14; ++c) REQUIRE(verify_lemma1(t, pick_n(rng), d, c));
        }
    }
}
