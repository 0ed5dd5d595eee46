#include "vercat/qcyclo.hpp"

#include <cmath>
#include <stdexcept>

namespace vercat::qcyclo {

namespace {

// Dense polynomials over Q, coefficient index = degree. Only used for the
// Euclidean inversion; everything else works on fixed-length vectors.
using Poly = std::vector<Rational>;

int degree(const Poly& a) {
    for (int d = static_cast<int>(a.size()) - 1; d >= 0; --d)
        if (a[d] != 0) return d;
    return -1;
}

Poly poly_sub_scaled(Poly a, const Poly& b, const Rational& c, int shift) {
    // a -= c * x^shift * b
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    return a;
}

// Remainder and the Bezout update for one Euclidean division step.
Poly poly_mod(Poly a, const Poly& b, Poly& bezout_a, const Poly& bezout_b) {
    int db = degree(b);
    for (int da = degree(a); da >= db; da = degree(a)) {
        Rational c = a[da] / b[db];
        int shift = da - db;
        a = poly_sub_scaled(std::move(a), b, c, shift);
        a[da] = 0;  // kill rounding-free leading term exactly
        bezout_a = poly_sub_scaled(std::move(bezout_a), bezout_b, c, shift);
    }
    return a;
}

// Phi_2p(x) = sum_{i=0}^{p-1} (-1)^i x^i for odd prime p.
Poly cyclotomic_2p(i64 p) {
    Poly phi(static_cast<size_t>(p), 0);
    for (i64 i = 0; i < p; ++i) phi[i] = (i % 2 == 0) ? 1 : -1;
    return phi;
}

}  // namespace

CycNum::CycNum(i64 p) : p_(p), c_(static_cast<size_t>(p - 1), 0) {
    require_valid_prime(p);
}

CycNum CycNum::from_poly(i64 p, std::vector<Rational> coeffs) {
    require_valid_prime(p);
    // Fold exponents >= 2p first (callers may hand in anything), then divide
    // out the cyclotomic polynomial by exact long division.
    if (coeffs.size() > static_cast<size_t>(2 * p)) {
        std::vector<Rational> folded(static_cast<size_t>(2 * p), 0);
        for (size_t e = 0; e < coeffs.size(); ++e) folded[e % (2 * p)] += coeffs[e];
        coeffs = std::move(folded);
    }
    for (int d = static_cast<int>(coeffs.size()) - 1; d >= p - 1; --d) {
        Rational c = coeffs[d];
        if (c == 0) continue;
        coeffs[d] = 0;
        // x^d = x^(d-p+1) * x^(p-1) and x^(p-1) = -sum_{j<p-1} (-1)^j x^j.
        for (i64 j = 0; j < p - 1; ++j)
            coeffs[d - (p - 1) + j] -= c * ((j % 2 == 0) ? 1 : -1);
    }
    CycNum out(p);
    for (i64 j = 0; j < p - 1 && j < static_cast<i64>(coeffs.size()); ++j)
        out.c_[j] = coeffs[j];
    return out;
}

CycNum CycNum::from_integer(i64 p, i64 value) {
    CycNum out(p);
    out.c_[0] = value;
    return out;
}

CycNum CycNum::from_rational(i64 p, const Rational& value) {
    CycNum out(p);
    out.c_[0] = value;
    return out;
}

CycNum CycNum::zeta_power(i64 p, i64 e) {
    std::vector<Rational> poly(static_cast<size_t>(mod_floor(e, 2 * p)) + 1, 0);
    poly.back() = 1;
    return from_poly(p, std::move(poly));
}

bool CycNum::is_zero() const {
    for (const Rational& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_integral() const {
    for (const Rational& c : c_)
        if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

double CycNum::to_float() const {
    double acc = 0.0;
    const double pi = 3.14159265358979323846;
    for (size_t j = 0; j < c_.size(); ++j)
        acc += static_cast<double>(c_[j]) * std::cos(pi * static_cast<double>(j) / static_cast<double>(p_));
    return acc;
}

void CycNum::check_same_field(const CycNum& rhs) const {
    if (p_ != rhs.p_)
        throw std::invalid_argument("cyclotomic operands live over different primes");
}

CycNum CycNum::operator+(const CycNum& rhs) const {
    check_same_field(rhs);
    CycNum out(p_);
    for (size_t j = 0; j < c_.size(); ++j) out.c_[j] = c_[j] + rhs.c_[j];
    return out;
}

CycNum CycNum::operator-(const CycNum& rhs) const {
    check_same_field(rhs);
    CycNum out(p_);
    for (size_t j = 0; j < c_.size(); ++j) out.c_[j] = c_[j] - rhs.c_[j];
    return out;
}

CycNum CycNum::operator-() const {
    CycNum out(p_);
    for (size_t j = 0; j < c_.size(); ++j) out.c_[j] = -c_[j];
    return out;
}

CycNum CycNum::operator*(const CycNum& rhs) const {
    check_same_field(rhs);
    std::vector<Rational> conv(c_.size() + rhs.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < rhs.c_.size(); ++j)
            if (rhs.c_[j] != 0) conv[i + j] += c_[i] * rhs.c_[j];
    }
    return from_poly(p_, std::move(conv));
}

bool CycNum::operator==(const CycNum& rhs) const {
    return p_ == rhs.p_ && c_ == rhs.c_;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic value");
    // Extended Euclid maintaining r_i = s_i * (*this) mod Phi; the run ends at
    // a nonzero constant because Phi_2p is irreducible over Q.
    Poly r_prev = cyclotomic_2p(p_);
    Poly r_cur(c_.begin(), c_.end());
    Poly s_prev(1, 0), s_cur(1, 1);
    while (degree(r_cur) > 0) {
        Poly s_next = s_prev;
        Poly r_next = poly_mod(std::move(r_prev), r_cur, s_next, s_cur);
        r_prev = std::move(r_cur);
        r_cur = std::move(r_next);
        s_prev = std::move(s_cur);
        s_cur = std::move(s_next);
    }
    if (degree(r_cur) != 0)
        throw std::logic_error("cyclotomic gcd did not terminate at a constant");
    Rational lead = r_cur[0];
    for (Rational& c : s_cur) c /= lead;
    return from_poly(p_, std::move(s_cur));
}

CycNum CycNum::div_exact(const CycNum& d) const {
    CycNum q = *this * d.inverse();
    if (q * d != *this)
        throw std::logic_error("inexact cyclotomic division (internal arithmetic bug)");
    return q;
}

CycNum qint(i64 n, i64 p) {
    require_valid_prime(p);
    if (n < 0) throw std::invalid_argument("q-integer index must be >= 0");
    std::vector<Rational> poly(static_cast<size_t>(2 * p), 0);
    for (i64 j = 0; j < n; ++j) poly[static_cast<size_t>(mod_floor(n - 1 - 2 * j, 2 * p))] += 1;
    return CycNum::from_poly(p, std::move(poly));
}

}  // namespace vercat::qcyclo
