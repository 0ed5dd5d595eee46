#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "vercat/qcyclo.hpp"

using vercat::i64;
using vercat::qcyclo::CycNum;
using vercat::qcyclo::Rational;
using vercat::qcyclo::qint;

TEST_CASE("q-integer boundary identities") {
    for (i64 p : {5, 7, 11, 13}) {
        CHECK(qint(0, p).is_zero());
        CHECK(qint(1, p) == CycNum::from_integer(p, 1));
        CHECK(qint(p, p).is_zero());
        for (i64 k = 1; k < p; ++k) {
            CHECK(qint(p - k, p) == qint(k, p));       // reflection
            CHECK(qint(p + k, p) == -qint(k, p));      // antiperiodicity
        }
        CHECK(qint(2 * p, p).is_zero());
    }
    CHECK_THROWS_AS(qint(-1, 5), std::invalid_argument);
}

TEST_CASE("q-integer explicit coefficients at p=5") {
    // [2] = zeta + zeta^-1 reduces to 1 + zeta^2 - zeta^3 in the power basis,
    // and equals [3] by reflection.
    const CycNum two = qint(2, 5);
    const std::vector<Rational> expected{1, 0, 1, -1};
    CHECK(two.coeffs() == expected);
    CHECK(two == qint(3, 5));
    CHECK(qint(4, 5) == qint(1, 5));
    CHECK(two.to_float() == doctest::Approx(1.6180339887).epsilon(1e-9));
    CHECK(qint(2, 7).to_float() == doctest::Approx(1.8019377358).epsilon(1e-9));
}

TEST_CASE("zeta powers and polynomial reduction") {
    // zeta is a primitive 2p-th root: zeta^p = -1, zeta^(2p) = 1.
    for (i64 p : {5, 7}) {
        CHECK(CycNum::zeta_power(p, p) == CycNum::from_integer(p, -1));
        CHECK(CycNum::zeta_power(p, 2 * p) == CycNum::from_integer(p, 1));
        CHECK(CycNum::zeta_power(p, -1) * CycNum::zeta_power(p, 1) ==
              CycNum::from_integer(p, 1));
        // Phi_2p(zeta) = 0: the alternating sum of the first p-1 powers
        // equals -zeta^(p-1).
        CycNum acc(p);
        for (i64 i = 0; i < p - 1; ++i) {
            CycNum term = CycNum::zeta_power(p, i);
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        CHECK(acc == -CycNum::zeta_power(p, p - 1));
    }
    // Reduction is idempotent: re-feeding canonical coefficients changes nothing.
    const CycNum x = qint(3, 7);
    CHECK(CycNum::from_poly(7, x.coeffs()) == x);
    // zeta^4 at p=5 reduces through the minimal polynomial.
    const std::vector<Rational> z4{-1, 1, -1, 1};
    CHECK(CycNum::zeta_power(5, 4).coeffs() == z4);
}

TEST_CASE("field arithmetic, inverse and exact division") {
    for (i64 p : {5, 7}) {
        const CycNum one = CycNum::from_integer(p, 1);
        for (i64 k = 1; k < p; ++k) {
            const CycNum x = qint(k, p);
            CHECK(x * x.inverse() == one);
        }
        const CycNum mixed = qint(2, p) + CycNum::zeta_power(p, 3);
        CHECK(mixed * mixed.inverse() == one);
    }
    // [2][3] = [2] + [4] at p=7 (truncated Clebsch-Gordan on q-integers).
    const CycNum prod = qint(2, 7) * qint(3, 7);
    CHECK(prod == qint(2, 7) + qint(4, 7));
    CHECK(prod.div_exact(qint(2, 7)) == qint(3, 7));
    CHECK_THROWS_AS(prod.div_exact(CycNum(7)), std::domain_error);
    CHECK_THROWS_AS(CycNum(5).inverse(), std::domain_error);
}

TEST_CASE("integrality predicate and rationals") {
    CHECK(qint(2, 5).is_integral());
    CHECK(qint(2, 5).inverse().is_integral());  // golden ratio: phi^-1 = phi - 1
    const CycNum half = CycNum::from_rational(5, Rational(1, 2));
    CHECK_FALSE(half.is_integral());
    CHECK(half * CycNum::from_integer(5, 2) == CycNum::from_integer(5, 1));
    CHECK((half + half).is_integral());
}

TEST_CASE("invalid primes and mixed fields are rejected") {
    CHECK_THROWS_AS(CycNum(4), std::invalid_argument);
    CHECK_THROWS_AS(CycNum(2), std::invalid_argument);
    CHECK_THROWS_AS(CycNum(9), std::invalid_argument);
    CHECK_THROWS_AS(qint(2, 5) + qint(2, 7), std::invalid_argument);
}
