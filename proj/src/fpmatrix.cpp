#include "vercat/fpmatrix.hpp"

#include <stdexcept>

namespace vercat {

i64 mod_inverse(i64 a, i64 p) {
    a = mod_floor(a, p);
    if (a == 0) throw std::domain_error("division by zero in F_p");
    // Extended Euclid on (a, p).
    i64 old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    return mod_floor(old_s, p);
}

FpMatrix::FpMatrix(i64 p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
    if (p < 2) throw std::invalid_argument("FpMatrix needs a modulus >= 2");
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

FpMatrix FpMatrix::identity(i64 p, int n) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void FpMatrix::set(int r, int c, i64 value) {
    a_[static_cast<size_t>(r) * cols_ + c] = mod_floor(value, p_);
}

void FpMatrix::add_at(int r, int c, i64 value) {
    size_t idx = static_cast<size_t>(r) * cols_ + c;
    a_[idx] = mod_floor(a_[idx] + value, p_);
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
    if (p_ != rhs.p_ || cols_ != rhs.rows_)
        throw std::invalid_argument("incompatible matrix product");
    FpMatrix out(p_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            i64 aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                size_t idx = static_cast<size_t>(i) * rhs.cols_ + j;
                out.a_[idx] = (out.a_[idx] + aik * rhs.at(k, j)) % p_;
            }
        }
    }
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
    if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("incompatible matrix sum");
    FpMatrix out(p_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + rhs.a_[i]) % p_;
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
    return *this + rhs.scaled(p_ - 1);
}

FpMatrix FpMatrix::scaled(i64 c) const {
    c = mod_floor(c, p_);
    FpMatrix out(p_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] * c) % p_;
    return out;
}

FpMatrix FpMatrix::pow(i64 k) const {
    if (rows_ != cols_) throw std::invalid_argument("pow needs a square matrix");
    if (k < 0) throw std::invalid_argument("pow needs k >= 0");
    FpMatrix acc = identity(p_, rows_);
    for (i64 i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

FpMatrix FpMatrix::kron(const FpMatrix& rhs) const {
    if (p_ != rhs.p_) throw std::invalid_argument("kron over different fields");
    FpMatrix out(p_, rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            i64 aij = at(i, j);
            if (aij == 0) continue;
            for (int k = 0; k < rhs.rows_; ++k)
                for (int l = 0; l < rhs.cols_; ++l)
                    out.set(i * rhs.rows_ + k, j * rhs.cols_ + l, aij * rhs.at(k, l));
        }
    return out;
}

std::vector<i64> FpMatrix::apply(const std::vector<i64>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("vector length mismatch in apply");
    std::vector<i64> out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        i64 acc = 0;
        for (int j = 0; j < cols_; ++j) acc = (acc + at(i, j) * v[j]) % p_;
        out[i] = acc;
    }
    return out;
}

int FpMatrix::rank() const {
    std::vector<std::vector<i64>> rows;
    rows.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
        std::vector<i64> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows_; ++i)
            if (rows[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        i64 inv = mod_inverse(rows[rank][col], p_);
        for (int j = col; j < cols_; ++j) rows[rank][j] = (rows[rank][j] * inv) % p_;
        for (int i = rank + 1; i < rows_; ++i) {
            i64 c = rows[i][col];
            if (c == 0) continue;
            for (int j = col; j < cols_; ++j)
                rows[i][j] = mod_floor(rows[i][j] - c * rows[rank][j], p_);
        }
        ++rank;
    }
    return rank;
}

bool FpMatrix::is_zero() const {
    for (i64 x : a_)
        if (x != 0) return false;
    return true;
}

bool FpMatrix::operator==(const FpMatrix& rhs) const {
    return p_ == rhs.p_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

FpSpan::FpSpan(i64 p, int ambient_dim) : p_(p), n_(ambient_dim) {
    if (p < 2) throw std::invalid_argument("FpSpan needs a modulus >= 2");
}

std::vector<i64> FpSpan::reduce(std::vector<i64> v) const {
    if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("vector length mismatch in FpSpan");
    for (size_t b = 0; b < basis_.size(); ++b) {
        i64 c = v[pivots_[b]];
        if (c == 0) continue;
        const std::vector<i64>& row = basis_[b];
        for (int j = 0; j < n_; ++j) v[j] = mod_floor(v[j] - c * row[j], p_);
    }
    return v;
}

bool FpSpan::add(std::vector<i64> v) {
    v = reduce(std::move(v));
    int pivot = -1;
    for (int j = 0; j < n_; ++j)
        if (v[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    i64 inv = mod_inverse(v[pivot], p_);
    for (int j = 0; j < n_; ++j) v[j] = (v[j] * inv) % p_;
    // Back-substitute so the basis stays fully reduced.
    for (size_t b = 0; b < basis_.size(); ++b) {
        i64 c = basis_[b][pivot];
        if (c == 0) continue;
        for (int j = 0; j < n_; ++j)
            basis_[b][j] = mod_floor(basis_[b][j] - c * v[j], p_);
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool FpSpan::contains(const std::vector<i64>& v) const {
    std::vector<i64> r = reduce(v);
    for (i64 x : r)
        if (x != 0) return false;
    return true;
}

FpSpan closure_span(FpSpan seed, const std::vector<FpMatrix>& ops) {
    std::vector<std::vector<i64>> work = seed.basis();
    while (!work.empty()) {
        std::vector<std::vector<i64>> next;
        for (const std::vector<i64>& v : work)
            for (const FpMatrix& op : ops) {
                std::vector<i64> w = op.apply(v);
                if (seed.add(w)) next.push_back(seed.basis().back());
            }
        work = std::move(next);
    }
    return seed;
}

}  // namespace vercat
