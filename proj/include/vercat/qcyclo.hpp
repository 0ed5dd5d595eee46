#pragma once

// Exact arithmetic in Q(zeta), zeta a primitive 2p-th root of unity, with
// rational coefficients in the power basis zeta^0..zeta^(p-2). Values are kept
// canonically reduced modulo the 2p-th cyclotomic polynomial
//   Phi_2p(x) = x^(p-1) - x^(p-2) + ... - x + 1,
// so equality is exact coefficient comparison. This field carries the quantum
// dimensions used as fusion-ring oracles; the float view is display-only.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vercat/common.hpp"

namespace vercat::qcyclo {

using Rational = boost::multiprecision::cpp_rational;

class CycNum {
public:
    // The zero element of Q(zeta_2p).
    explicit CycNum(i64 p);

    static CycNum from_integer(i64 p, i64 value);
    static CycNum from_rational(i64 p, const Rational& value);
    // zeta^e for an arbitrary integer exponent, reduced into the power basis.
    static CycNum zeta_power(i64 p, i64 e);
    // Reduces an arbitrary-length polynomial-in-zeta coefficient vector.
    static CycNum from_poly(i64 p, std::vector<Rational> coeffs);

    i64 prime() const { return p_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    // True when every coefficient is an integer (quantum dimensions of
    // simple objects are algebraic integers; used as an exactness assert).
    bool is_integral() const;
    // Real part of the evaluation at zeta = exp(i*pi/p). Display only; never
    // feeds a decision.
    double to_float() const;

    CycNum operator+(const CycNum& rhs) const;
    CycNum operator-(const CycNum& rhs) const;
    CycNum operator-() const;
    CycNum operator*(const CycNum& rhs) const;
    bool operator==(const CycNum& rhs) const;
    bool operator!=(const CycNum& rhs) const { return !(*this == rhs); }

    // Field inverse via the extended Euclidean algorithm in Q[x] modulo the
    // (irreducible) cyclotomic polynomial. Throws std::domain_error on zero.
    CycNum inverse() const;
    // Quotient q with q*d == *this, asserted exactly after the fact.
    CycNum div_exact(const CycNum& d) const;

private:
    void check_same_field(const CycNum& rhs) const;

    i64 p_;
    std::vector<Rational> c_;  // length p-1, canonical reduction
};

// The q-integer [n] = zeta^(n-1) + zeta^(n-3) + ... + zeta^(1-n) at q = zeta.
// Requires n >= 0; [0] = 0, [1] = 1, [p] = 0, [p-k] = [k].
CycNum qint(i64 n, i64 p);

}  // namespace vercat::qcyclo
