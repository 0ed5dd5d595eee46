#pragma once

// Dense exact linear algebra over the prime field F_p: deterministic Gaussian
// elimination (first nonzero pivot, no randomization), rank sequences, kernels
// and invariant-subspace closures. Entries are stored reduced into [0, p).

#include <vector>

#include "vercat/common.hpp"

namespace vercat {

i64 mod_inverse(i64 a, i64 p);

class FpMatrix {
public:
    FpMatrix() : p_(0), rows_(0), cols_(0) {}
    FpMatrix(i64 p, int rows, int cols);
    static FpMatrix identity(i64 p, int n);

    i64 p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    i64 at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, i64 value);
    void add_at(int r, int c, i64 value);

    FpMatrix operator*(const FpMatrix& rhs) const;
    FpMatrix operator+(const FpMatrix& rhs) const;
    FpMatrix operator-(const FpMatrix& rhs) const;
    FpMatrix scaled(i64 c) const;
    FpMatrix pow(i64 k) const;  // square matrices, k >= 0
    // Kronecker product; basis of the result is ordered (i_left * rhs.rows + i_right).
    FpMatrix kron(const FpMatrix& rhs) const;

    std::vector<i64> apply(const std::vector<i64>& v) const;

    int rank() const;
    bool is_zero() const;
    bool operator==(const FpMatrix& rhs) const;
    bool operator!=(const FpMatrix& rhs) const { return !(*this == rhs); }

private:
    i64 p_;
    int rows_, cols_;
    std::vector<i64> a_;  // row-major
};

// A subspace of F_p^n maintained in reduced row-echelon form.
class FpSpan {
public:
    FpSpan(i64 p, int ambient_dim);

    // Reduces v against the basis; if a nonzero remainder survives it becomes a
    // new basis vector (pivot normalized to 1, other rows back-substituted).
    // Returns true when the dimension grew.
    bool add(std::vector<i64> v);
    bool contains(const std::vector<i64>& v) const;
    std::vector<i64> reduce(std::vector<i64> v) const;

    int dim() const { return static_cast<int>(basis_.size()); }
    int ambient_dim() const { return n_; }
    const std::vector<std::vector<i64>>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    i64 p_;
    int n_;
    std::vector<std::vector<i64>> basis_;
    std::vector<int> pivots_;
};

// Smallest subspace containing `seed` that is stable under every operator.
FpSpan closure_span(FpSpan seed, const std::vector<FpMatrix>& ops);

}  // namespace vercat
