#include "vercat/charoracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace vercat::charoracle {

namespace {

// Generalized binomial C(x, k) for integer x (a genuine integer), reduced
// into [0, p).
i64 binom_mod(i64 x, i64 k, i64 p) {
    using boost::multiprecision::cpp_int;
    cpp_int num = 1;
    cpp_int den = 1;
    for (i64 t = 0; t < k; ++t) {
        num *= (x - t);
        den *= (t + 1);
    }
    cpp_int q = num / den;
    return mod_floor((q % p).convert_to<i64>(), p);
}

i64 factorial_mod(i64 k, i64 p) {
    i64 out = 1;
    for (i64 t = 2; t <= k; ++t) out = (out * t) % p;
    return out;
}

std::vector<i64> unit_vec(int dim, int a) {
    std::vector<i64> v(static_cast<size_t>(dim), 0);
    v[static_cast<size_t>(a)] = 1;
    return v;
}

// Basis indices whose generated submodule misses basis vector 0. Valid
// because the integer weight labels of these modules are pairwise distinct,
// so every submodule is spanned by a subset of the basis and the maximal
// proper submodule is exactly the span of such vectors.
std::vector<char> radical_mask(i64 p, int dim, const std::vector<FpMatrix>& ops) {
    std::vector<char> mask(static_cast<size_t>(dim), 0);
    for (int a = 1; a < dim; ++a) {
        FpSpan seed(p, dim);
        seed.add(unit_vec(dim, a));
        FpSpan closed = closure_span(std::move(seed), ops);
        if (!closed.contains(unit_vec(dim, 0))) mask[static_cast<size_t>(a)] = 1;
    }
    return mask;
}

FpMatrix restrict_to(const FpMatrix& m, const std::vector<int>& keep) {
    FpMatrix out(m.p(), static_cast<int>(keep.size()), static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            out.set(static_cast<int>(i), static_cast<int>(j), m.at(keep[i], keep[j]));
    return out;
}

bool commutator_is(const FpMatrix& a, const FpMatrix& b, const FpMatrix& want) {
    return a * b - b * a == want;
}

bool closure_spans_all(i64 p, int dim, const std::vector<FpMatrix>& ops) {
    for (int a = 0; a < dim; ++a) {
        FpSpan seed(p, dim);
        seed.add(unit_vec(dim, a));
        if (closure_span(std::move(seed), ops).dim() != dim) return false;
    }
    return true;
}

// Semistandard tableaux of the partition shape, entries 1..m; calls out
// with the content vector of each tableau.
template <typename Fn>
void for_each_ssyt(const std::vector<i64>& partition, i64 m, Fn&& out) {
    std::vector<std::vector<i64>> fill;
    for (i64 row : partition) fill.emplace_back(static_cast<size_t>(row), 0);
    std::vector<i64> content(static_cast<size_t>(m), 0);
    auto place = [&](auto&& self, size_t r, size_t c) -> void {
        if (r == fill.size()) {
            out(content);
            return;
        }
        if (c == fill[r].size()) {
            self(self, r + 1, 0);
            return;
        }
        i64 lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);
        if (r > 0 && c < fill[r - 1].size()) lo = std::max(lo, fill[r - 1][c] + 1);
        for (i64 v = lo; v <= m; ++v) {
            fill[r][c] = v;
            content[static_cast<size_t>(v - 1)] += 1;
            self(self, r, c + 1);
            content[static_cast<size_t>(v - 1)] -= 1;
        }
        fill[r][c] = 0;
    };
    place(place, 0, 0);
}

// GL(2) character of the simple with block entries (a, b) from integer
// sl(2) weights of the simple of highest weight a - b.
void block_char_from_weights(std::vector<std::pair<std::vector<i64>, i64>>& acc,
                             const std::vector<i64>& weights, i64 a, i64 b) {
    i64 m = a - b;
    std::vector<std::pair<std::vector<i64>, i64>> next;
    for (i64 w : weights) {
        if ((m - w) % 2 != 0) throw std::logic_error("weight parity mismatch");
        i64 lower = b + (m - w) / 2;
        i64 upper = b + (m + w) / 2;
        for (const auto& [exps, mult] : acc) {
            std::vector<i64> grown = exps;
            grown.push_back(upper);
            grown.push_back(lower);
            next.emplace_back(std::move(grown), mult);
        }
    }
    acc = std::move(next);
}

}  // namespace

LaurentChar::LaurentChar(glx::GLXShape shape) : shape_(std::move(shape)) {}

LaurentChar LaurentChar::one(const glx::GLXShape& shape) {
    LaurentChar c(shape);
    c.add_term(std::vector<i64>(static_cast<size_t>(shape.n), 0), 1);
    return c;
}

void LaurentChar::add_term(std::vector<i64> exponents, i64 mult) {
    if (static_cast<i64>(exponents.size()) != shape_.n)
        throw std::invalid_argument("exponent vector length does not match the shape");
    if (mult == 0) return;
    auto it = terms_.find(exponents);
    i64 total = (it == terms_.end() ? 0 : it->second) + mult;
    if (total < 0) throw std::invalid_argument("character multiplicities must stay non-negative");
    if (total == 0) {
        if (it != terms_.end()) terms_.erase(it);
        return;
    }
    if (it != terms_.end())
        it->second = total;
    else
        terms_.emplace(std::move(exponents), total);
}

i64 LaurentChar::total_multiplicity() const {
    i64 acc = 0;
    for (const auto& [exps, mult] : terms_) acc += mult;
    return acc;
}

LaurentChar LaurentChar::operator+(const LaurentChar& rhs) const {
    if (shape_ != rhs.shape_) throw std::invalid_argument("adding characters over different shapes");
    LaurentChar out = *this;
    for (const auto& [exps, mult] : rhs.terms_) out.add_term(exps, mult);
    return out;
}

LaurentChar LaurentChar::operator*(const LaurentChar& rhs) const {
    if (shape_ != rhs.shape_)
        throw std::invalid_argument("multiplying characters over different shapes");
    LaurentChar out(shape_);
    for (const auto& [ea, ma] : terms_) {
        for (const auto& [eb, mb] : rhs.terms_) {
            std::vector<i64> sum(ea.size());
            for (size_t i = 0; i < ea.size(); ++i) sum[i] = ea[i] + eb[i];
            out.add_term(std::move(sum), ma * mb);
        }
    }
    return out;
}

bool LaurentChar::operator==(const LaurentChar& rhs) const {
    return shape_ == rhs.shape_ && terms_ == rhs.terms_;
}

LaurentChar schur_char(const glx::GWeight& mu) {
    if (!glx::is_dominant(mu)) throw std::invalid_argument("Schur character needs a dominant weight");
    const glx::GLXShape& shape = mu.shape;
    LaurentChar out = LaurentChar::one(shape);
    for (const glx::GLXShape::Block& block : shape.blocks) {
        i64 m = block.size;
        i64 shift = mu.entries[static_cast<size_t>(block.offset + m - 1)];
        std::vector<i64> partition;
        for (i64 i = 0; i < m; ++i)
            partition.push_back(mu.entries[static_cast<size_t>(block.offset + i)] - shift);
        while (!partition.empty() && partition.back() == 0) partition.pop_back();

        LaurentChar factor(shape);
        for_each_ssyt(partition, m, [&](const std::vector<i64>& content) {
            std::vector<i64> exps(static_cast<size_t>(shape.n), 0);
            for (i64 i = 0; i < m; ++i)
                exps[static_cast<size_t>(block.offset + i)] = content[static_cast<size_t>(i)] + shift;
            factor.add_term(std::move(exps), 1);
        });
        out = out * factor;
    }
    return out;
}

LaurentChar dilate(const LaurentChar& c, i64 factor) {
    LaurentChar out(c.shape());
    for (const auto& [exps, mult] : c.terms()) {
        std::vector<i64> scaled = exps;
        for (i64& e : scaled) e *= factor;
        out.add_term(std::move(scaled), mult);
    }
    return out;
}

void validate_sl2(const SL2Module& m) {
    if (!commutator_is(m.h, m.e, m.e.scaled(2))) throw std::logic_error("[h,e] != 2e");
    if (!commutator_is(m.h, m.f, m.f.scaled(-2))) throw std::logic_error("[h,f] != -2f");
    if (!commutator_is(m.e, m.f, m.h)) throw std::logic_error("[e,f] != h");
    if (!m.e.pow(m.p).is_zero()) throw std::logic_error("e^p != 0");
    if (!m.f.pow(m.p).is_zero()) throw std::logic_error("f^p != 0");
    if (m.h.pow(m.p) != m.h) throw std::logic_error("h^p != h");
}

void validate_divided(const DividedSL2Module& m) {
    const FpMatrix& e1 = m.e_ops[0];
    const FpMatrix& f1 = m.f_ops[0];
    if (!commutator_is(e1, f1, m.h)) throw std::logic_error("[e,f] != h");
    for (i64 i = 1; i <= m.p; ++i) {
        const FpMatrix& ei = m.e_ops[static_cast<size_t>(i - 1)];
        const FpMatrix& fi = m.f_ops[static_cast<size_t>(i - 1)];
        if (!commutator_is(m.h, ei, ei.scaled(2 * i))) throw std::logic_error("[h,e^(i)] != 2i e^(i)");
        if (!commutator_is(m.h, fi, fi.scaled(-2 * i))) throw std::logic_error("[h,f^(i)] != -2i f^(i)");
        if (i < m.p) {
            i64 fact = factorial_mod(i, m.p);
            if (ei.scaled(fact) != e1.pow(i)) throw std::logic_error("i! e^(i) != e^i");
            if (fi.scaled(fact) != f1.pow(i)) throw std::logic_error("i! f^(i) != f^i");
        }
    }
    if (!e1.pow(m.p).is_zero()) throw std::logic_error("e^p != 0");
    if (!f1.pow(m.p).is_zero()) throw std::logic_error("f^p != 0");
}

SL2Module baby_verma_sl2(i64 p, i64 r) {
    require_valid_prime(p);
    if (r < 0 || r >= p) throw std::invalid_argument("highest weight out of range");
    int d = static_cast<int>(p);
    SL2Module m;
    m.p = p;
    m.dim = d;
    m.highest = r;
    m.e = FpMatrix(p, d, d);
    m.f = FpMatrix(p, d, d);
    m.h = FpMatrix(p, d, d);
    for (int i = 0; i < d; ++i) {
        m.h.set(i, i, mod_floor(r - 2 * i, p));
        m.weights.push_back(r - 2 * i);
        if (i + 1 < d) m.f.set(i + 1, i, 1);
        if (i > 0) m.e.set(i - 1, i, mod_floor(i * (r - i + 1), p));
    }
    validate_sl2(m);
    return m;
}

SL2Module restricted_simple_sl2(i64 p, i64 r) {
    SL2Module verma = baby_verma_sl2(p, r);
    std::vector<char> mask = radical_mask(p, static_cast<int>(verma.dim), {verma.e, verma.f});
    std::vector<int> keep;
    for (int a = 0; a < verma.dim; ++a)
        if (!mask[static_cast<size_t>(a)]) keep.push_back(a);

    SL2Module m;
    m.p = p;
    m.dim = static_cast<i64>(keep.size());
    m.highest = r;
    m.e = restrict_to(verma.e, keep);
    m.f = restrict_to(verma.f, keep);
    m.h = restrict_to(verma.h, keep);
    for (int a : keep) m.weights.push_back(verma.weights[static_cast<size_t>(a)]);
    validate_sl2(m);
    return m;
}

SL2Module direct_sum_sl2(const SL2Module& a, const SL2Module& b) {
    if (a.p != b.p) throw std::invalid_argument("summands over different primes");
    int da = static_cast<int>(a.dim);
    int db = static_cast<int>(b.dim);
    SL2Module m;
    m.p = a.p;
    m.dim = a.dim + b.dim;
    m.highest = std::max(a.highest, b.highest);
    auto block_diag = [&](const FpMatrix& x, const FpMatrix& y) {
        FpMatrix out(a.p, da + db, da + db);
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < da; ++j) out.set(i, j, x.at(i, j));
        for (int i = 0; i < db; ++i)
            for (int j = 0; j < db; ++j) out.set(da + i, da + j, y.at(i, j));
        return out;
    };
    m.e = block_diag(a.e, b.e);
    m.f = block_diag(a.f, b.f);
    m.h = block_diag(a.h, b.h);
    m.weights = a.weights;
    m.weights.insert(m.weights.end(), b.weights.begin(), b.weights.end());
    validate_sl2(m);
    return m;
}

bool u_simplicity_check(const SL2Module& m) {
    return closure_spans_all(m.p, static_cast<int>(m.dim), {m.e, m.f, m.h});
}

bool u_simplicity_check(const DividedSL2Module& m) {
    std::vector<FpMatrix> ops = m.e_ops;
    ops.insert(ops.end(), m.f_ops.begin(), m.f_ops.end());
    ops.push_back(m.h);
    return closure_spans_all(m.p, static_cast<int>(m.dim), ops);
}

DividedSL2Module dist2_simple_sl2(i64 p, i64 lambda) {
    require_valid_prime(p);
    if (lambda < 0 || lambda >= p * p)
        throw std::invalid_argument("level-2 highest weight out of range");
    int d = static_cast<int>(p * p);

    std::vector<FpMatrix> e_ops, f_ops;
    for (i64 i = 1; i <= p; ++i) {
        FpMatrix ei(p, d, d);
        FpMatrix fi(p, d, d);
        for (i64 a = 0; a < d; ++a) {
            if (a + i < d)
                fi.set(static_cast<int>(a + i), static_cast<int>(a), binom_mod(a + i, i, p));
            if (a - i >= 0)
                ei.set(static_cast<int>(a - i), static_cast<int>(a), binom_mod(lambda - a + i, i, p));
        }
        e_ops.push_back(std::move(ei));
        f_ops.push_back(std::move(fi));
    }
    FpMatrix h(p, d, d);
    std::vector<i64> weights;
    for (i64 a = 0; a < d; ++a) {
        h.set(static_cast<int>(a), static_cast<int>(a), mod_floor(lambda - 2 * a, p));
        weights.push_back(lambda - 2 * a);
    }

    std::vector<FpMatrix> all_ops = e_ops;
    all_ops.insert(all_ops.end(), f_ops.begin(), f_ops.end());
    std::vector<char> mask = radical_mask(p, d, all_ops);
    std::vector<int> keep;
    for (int a = 0; a < d; ++a)
        if (!mask[static_cast<size_t>(a)]) keep.push_back(a);

    DividedSL2Module m;
    m.p = p;
    m.dim = static_cast<i64>(keep.size());
    m.lambda = lambda;
    for (const FpMatrix& op : e_ops) m.e_ops.push_back(restrict_to(op, keep));
    for (const FpMatrix& op : f_ops) m.f_ops.push_back(restrict_to(op, keep));
    m.h = restrict_to(h, keep);
    for (int a : keep) m.weights.push_back(weights[static_cast<size_t>(a)]);
    validate_divided(m);
    return m;
}

std::map<i64, i64> sl2_char(const std::vector<i64>& weights) {
    std::map<i64, i64> out;
    for (i64 w : weights) out[w] += 1;
    return out;
}

bool steinberg_sl2_check(i64 p, i64 r, i64 s) {
    SL2Module left = restricted_simple_sl2(p, r);
    SL2Module right = restricted_simple_sl2(p, s);
    int dl = static_cast<int>(left.dim);
    int dr = static_cast<int>(right.dim);
    FpMatrix il = FpMatrix::identity(p, dl);
    FpMatrix ir = FpMatrix::identity(p, dr);

    DividedSL2Module m;
    m.p = p;
    m.dim = left.dim * right.dim;
    m.lambda = r + p * s;
    for (i64 i = 1; i < p; ++i) {
        i64 inv_fact = mod_inverse(factorial_mod(i, p), p);
        m.e_ops.push_back(left.e.pow(i).scaled(inv_fact).kron(ir));
        m.f_ops.push_back(left.f.pow(i).scaled(inv_fact).kron(ir));
    }
    m.e_ops.push_back(il.kron(right.e));
    m.f_ops.push_back(il.kron(right.f));
    m.h = left.h.kron(ir);  // the twisted factor contributes p * h = 0 mod p
    for (i64 wl : left.weights)
        for (i64 wr : right.weights) m.weights.push_back(wl + p * wr);
    validate_divided(m);

    DividedSL2Module direct = dist2_simple_sl2(p, r + p * s);
    return u_simplicity_check(m) && m.dim == direct.dim &&
           sl2_char(m.weights) == sl2_char(direct.weights);
}

bool verify_factorization_chars(const glx::GWeight& lambda) {
    const glx::GLXShape& shape = lambda.shape;
    const i64 p = shape.p;
    for (const glx::GLXShape::Block& block : shape.blocks) {
        if (block.label != 1 || block.size > 2)
            throw std::invalid_argument("character oracle covers GL(1) and GL(2) blocks over L_1");
    }
    if (!glx::is_restricted(lambda, 2))
        throw std::invalid_argument("character oracle covers differences below p^2");

    // Left side: the simple character per block, straight from the level-2
    // engine; blocks are independent so characters multiply.
    std::vector<std::pair<std::vector<i64>, i64>> acc;
    acc.emplace_back(std::vector<i64>{}, 1);
    for (const glx::GLXShape::Block& block : shape.blocks) {
        if (block.size == 1) {
            i64 a = lambda.entries[static_cast<size_t>(block.offset)];
            for (auto& [exps, mult] : acc) exps.push_back(a);
        } else {
            i64 a = lambda.entries[static_cast<size_t>(block.offset)];
            i64 b = lambda.entries[static_cast<size_t>(block.offset + 1)];
            block_char_from_weights(acc, dist2_simple_sl2(p, a - b).weights, a, b);
        }
    }
    LaurentChar lhs(shape);
    for (auto& [exps, mult] : acc) lhs.add_term(std::move(exps), mult);

    // Right side: restricted characters of the factorization layers, each
    // twist dilated by its power of p.
    glx::Factorization fact = glx::steinberg_factorize(glx::SimpleIndex(lambda, glx::VTuple(shape)));
    auto restricted_char = [&](const glx::GWeight& w) {
        std::vector<std::pair<std::vector<i64>, i64>> layer;
        layer.emplace_back(std::vector<i64>{}, 1);
        for (const glx::GLXShape::Block& block : shape.blocks) {
            if (block.size == 1) {
                i64 a = w.entries[static_cast<size_t>(block.offset)];
                for (auto& [exps, mult] : layer) exps.push_back(a);
            } else {
                i64 a = w.entries[static_cast<size_t>(block.offset)];
                i64 b = w.entries[static_cast<size_t>(block.offset + 1)];
                block_char_from_weights(layer, restricted_simple_sl2(p, a - b).weights, a, b);
            }
        }
        LaurentChar out(shape);
        for (auto& [exps, mult] : layer) out.add_term(std::move(exps), mult);
        return out;
    };

    LaurentChar rhs = restricted_char(fact.base.lambda);
    i64 scale = 1;
    for (const glx::GWeight& tw : fact.twists) {
        scale *= p;
        rhs = rhs * dilate(restricted_char(tw), scale);
    }
    return lhs == rhs;
}

}  // namespace vercat::charoracle
