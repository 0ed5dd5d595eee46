#pragma once

// Formal characters for the even blocks of GL(X) and a brute-force
// hyperalgebra engine for SL(2) over F_p. The engine builds baby Verma
// modules (level 1: plain e, f, h; level 2: divided powers up to order p),
// extracts simple quotients by closing singular vectors, and reproduces the
// classical Steinberg tensor factorization by two independent computations.
// The weight arithmetic it certifies is exactly what the factorization
// engine in glx relies on.

#include <map>
#include <vector>

#include "vercat/common.hpp"
#include "vercat/fpmatrix.hpp"
#include "vercat/glx.hpp"

namespace vercat::charoracle {

// A Laurent polynomial in one variable per summand of the shape, with
// non-negative integer coefficients: exponent vector -> multiplicity.
class LaurentChar {
public:
    explicit LaurentChar(glx::GLXShape shape);
    static LaurentChar one(const glx::GLXShape& shape);

    const glx::GLXShape& shape() const { return shape_; }
    const std::map<std::vector<i64>, i64>& terms() const { return terms_; }
    void add_term(std::vector<i64> exponents, i64 mult);
    i64 total_multiplicity() const;

    LaurentChar operator+(const LaurentChar& rhs) const;
    LaurentChar operator*(const LaurentChar& rhs) const;
    bool operator==(const LaurentChar& rhs) const;
    bool operator!=(const LaurentChar& rhs) const { return !(*this == rhs); }

private:
    glx::GLXShape shape_;
    std::map<std::vector<i64>, i64> terms_;
};

// Product of per-block Schur-Laurent polynomials (semistandard tableau
// enumeration, determinant powers for negative entries). mu must be
// dominant; total multiplicity is the Weyl dimension.
LaurentChar schur_char(const glx::GWeight& mu);

// Every exponent multiplied by `factor` (the character effect of inflating
// through a Frobenius twist when factor = p^i).
LaurentChar dilate(const LaurentChar& c, i64 factor);

// A weight-basis module over F_p with sl(2) operator matrices. `weights`
// holds the integer h-eigenvalue labels of the basis vectors (the matrices
// only see them mod p).
struct SL2Module {
    i64 p = 0;
    i64 dim = 0;
    i64 highest = 0;
    FpMatrix e, f, h;
    std::vector<i64> weights;
};

// Same data with divided-power operators of orders 1..p (index i-1 holds
// order i); the order-p operators generate the second Frobenius-kernel
// layer.
struct DividedSL2Module {
    i64 p = 0;
    i64 dim = 0;
    i64 lambda = 0;
    std::vector<FpMatrix> e_ops, f_ops;
    FpMatrix h;
    std::vector<i64> weights;
};

// Bracket/restrictedness identities; throw std::logic_error on violation.
void validate_sl2(const SL2Module& m);
void validate_divided(const DividedSL2Module& m);

// The p-dimensional level-1 baby Verma with highest weight r (0 <= r < p).
SL2Module baby_verma_sl2(i64 p, i64 r);

// Its simple quotient: dimension r+1.
SL2Module restricted_simple_sl2(i64 p, i64 r);

// Block-diagonal sum (not a highest-weight module; for negative tests).
SL2Module direct_sum_sl2(const SL2Module& a, const SL2Module& b);

// True iff every basis vector generates the whole space under the module's
// operators.
bool u_simplicity_check(const SL2Module& m);
bool u_simplicity_check(const DividedSL2Module& m);

// Simple quotient of the p^2-dimensional level-2 baby Verma with highest
// weight lambda (0 <= lambda < p^2) under divided powers of orders 1..p.
DividedSL2Module dist2_simple_sl2(i64 p, i64 lambda);

// Character as h-eigenvalue -> multiplicity, from the integer weight labels.
std::map<i64, i64> sl2_char(const std::vector<i64>& weights);

// Builds L(r) (x) Fr(L(s)) with the level-2 divided-power action and
// compares dimension, simplicity and character against dist2_simple_sl2
// (r + p*s), which is computed without reference to the tensor product.
bool steinberg_sl2_check(i64 p, i64 r, i64 s);

// Character identity ch L(lambda) = ch L(base) * prod dilate(ch L(twist)):
// left side from the level-2 engine per block, right side through
// glx::steinberg_factorize and level-1 data. Shape must consist of GL(1)
// and GL(2) blocks over L_1 with block differences below p^2.
bool verify_factorization_chars(const glx::GWeight& lambda);

}  // namespace vercat::charoracle
