#include "vercat/verp.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "vercat/fpmatrix.hpp"

namespace vercat::verp {

VerpObject::VerpObject(i64 p) : p_(p), mult_(static_cast<size_t>(p - 1), 0) {
    require_valid_prime(p);
}

VerpObject VerpObject::simple(i64 p, i64 k) {
    VerpObject out(p);
    out.add_simple(k, 1);
    return out;
}

i64 VerpObject::mult(i64 k) const {
    if (k < 1 || k > p_ - 1) throw std::invalid_argument("simple index out of 1..p-1");
    return mult_[static_cast<size_t>(k - 1)];
}

void VerpObject::add_simple(i64 k, i64 count) {
    if (k < 1 || k > p_ - 1) throw std::invalid_argument("simple index out of 1..p-1");
    if (count < 0) throw std::invalid_argument("negative multiplicity");
    mult_[static_cast<size_t>(k - 1)] += count;
}

i64 VerpObject::length() const {
    i64 total = 0;
    for (i64 m : mult_) total += m;
    return total;
}

bool VerpObject::is_zero() const { return length() == 0; }

VerpObject VerpObject::operator+(const VerpObject& rhs) const {
    if (p_ != rhs.p_) throw std::invalid_argument("objects live over different primes");
    VerpObject out(p_);
    for (size_t i = 0; i < mult_.size(); ++i) out.mult_[i] = mult_[i] + rhs.mult_[i];
    return out;
}

bool VerpObject::operator==(const VerpObject& rhs) const {
    return p_ == rhs.p_ && mult_ == rhs.mult_;
}

VerpObject fuse(const VerpObject& a, const VerpObject& b) {
    if (a.p() != b.p()) throw std::invalid_argument("objects live over different primes");
    const i64 p = a.p();
    VerpObject out(p);
    for (i64 m = 1; m <= p - 1; ++m) {
        i64 am = a.mult(m);
        if (am == 0) continue;
        for (i64 n = 1; n <= p - 1; ++n) {
            i64 bn = b.mult(n);
            if (bn == 0) continue;
            i64 bound = std::min(std::min(m, n), std::min(p - m, p - n));
            for (i64 i = 1; i <= bound; ++i)
                out.add_simple(std::abs(m - n) + 2 * i - 1, am * bn);
        }
    }
    return out;
}

VerpObject dual(const VerpObject& a) { return a; }

VerpObject frobenius_twist(const VerpObject& a) {
    VerpObject out(a.p());
    out.add_simple(1, a.mult(1));
    return out;
}

qcyclo::CycNum qdim(const VerpObject& a) {
    qcyclo::CycNum acc(a.p());
    for (i64 k = 1; k <= a.p() - 1; ++k) {
        i64 m = a.mult(k);
        if (m == 0) continue;
        acc = acc + qcyclo::CycNum::from_integer(a.p(), m) * qcyclo::qint(k, a.p());
    }
    return acc;
}

i64 fpdim(const VerpObject& a) {
    i64 acc = 0;
    for (i64 k = 1; k <= a.p() - 1; ++k) acc = (acc + a.mult(k) * k) % a.p();
    return acc;
}

i64 underlying_dim(const VerpObject& a) {
    i64 acc = 0;
    for (i64 k = 1; k <= a.p() - 1; ++k) acc += a.mult(k) * k;
    return acc;
}

i64 length(const VerpObject& a) { return a.length(); }

PlusSuperSplit split_plus_super(const VerpObject& a) {
    const i64 p = a.p();
    PlusSuperSplit out{VerpObject(p), VerpObject(p)};
    for (i64 k = 1; k <= p - 1; ++k) {
        i64 m = a.mult(k);
        if (m == 0) continue;
        if (k % 2 == 1)
            out.plus_even.add_simple(k, m);
        else
            out.plus_odd.add_simple(p - k, m);  // L_k = L_{p-k} (x) L_{p-1}
    }
    return out;
}

JordanModule::JordanModule(i64 p) : p_(p), count_(static_cast<size_t>(p), 0) {
    require_valid_prime(p);
}

JordanModule JordanModule::block(i64 p, i64 size) {
    JordanModule out(p);
    out.add_block(size, 1);
    return out;
}

i64 JordanModule::block_count(i64 size) const {
    if (size < 1 || size > p_) throw std::invalid_argument("block size out of 1..p");
    return count_[static_cast<size_t>(size - 1)];
}

void JordanModule::add_block(i64 size, i64 count) {
    if (size < 1 || size > p_) throw std::invalid_argument("block size out of 1..p");
    if (count < 0) throw std::invalid_argument("negative block count");
    count_[static_cast<size_t>(size - 1)] += count;
}

i64 JordanModule::total_dim() const {
    i64 total = 0;
    for (i64 s = 1; s <= p_; ++s) total += s * count_[static_cast<size_t>(s - 1)];
    return total;
}

i64 JordanModule::block_total() const {
    i64 total = 0;
    for (i64 c : count_) total += c;
    return total;
}

bool JordanModule::is_zero() const { return block_total() == 0; }

JordanModule JordanModule::operator+(const JordanModule& rhs) const {
    if (p_ != rhs.p_) throw std::invalid_argument("modules live over different primes");
    JordanModule out(p_);
    for (size_t i = 0; i < count_.size(); ++i) out.count_[i] = count_[i] + rhs.count_[i];
    return out;
}

bool JordanModule::operator==(const JordanModule& rhs) const {
    return p_ == rhs.p_ && count_ == rhs.count_;
}

namespace {

// Jordan type of a nilpotent matrix from its rank sequence.
JordanModule jordan_type_from_nilpotent(i64 p, const FpMatrix& n) {
    std::vector<i64> ranks;  // ranks[i] = rank(n^i)
    ranks.push_back(n.rows());
    FpMatrix power = n;
    while (true) {
        i64 r = power.rank();
        ranks.push_back(r);
        if (r == 0) break;
        if (static_cast<i64>(ranks.size()) > n.rows() + 1)
            throw std::logic_error("matrix handed to jordan_type is not nilpotent");
        power = power * n;
    }
    JordanModule out(p);
    i64 max_size = static_cast<i64>(ranks.size()) - 1;
    for (i64 s = 1; s <= max_size; ++s) {
        i64 at_least_s = ranks[static_cast<size_t>(s - 1)] - ranks[static_cast<size_t>(s)];
        i64 at_least_s1 = (s < max_size)
                              ? ranks[static_cast<size_t>(s)] - ranks[static_cast<size_t>(s + 1)]
                              : 0;
        i64 exactly_s = at_least_s - at_least_s1;
        if (exactly_s < 0) throw std::logic_error("rank sequence is not convex");
        if (exactly_s > 0) out.add_block(s, exactly_s);
    }
    return out;
}

// t(x)1 + 1(x)t on J_s (x) J_t, basis (i,j) -> index i*t + j, with
// t.v_i = v_{i-1} within each factor.
JordanModule tensor_pair(i64 p, i64 s, i64 t) {
    static std::map<std::tuple<i64, i64, i64>, JordanModule> memo;
    static std::mutex memo_mutex;
    auto key = std::make_tuple(p, std::min(s, t), std::max(s, t));
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    const int dim = static_cast<int>(s * t);
    FpMatrix n(p, dim, dim);
    for (i64 i = 0; i < s; ++i)
        for (i64 j = 0; j < t; ++j) {
            int col = static_cast<int>(i * t + j);
            if (i > 0) n.add_at(static_cast<int>((i - 1) * t + j), col, 1);
            if (j > 0) n.add_at(static_cast<int>(i * t + (j - 1)), col, 1);
        }
    JordanModule result = jordan_type_from_nilpotent(p, n);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, result);
    return result;
}

// Monomial basis of S^d(J_m): exponent vectors (a_1..a_m) with sum d. The
// derivation sends x_i to x_{i-1} (and x_1 to 0), acting by Leibniz.
JordanModule sym_single(i64 p, i64 m, i64 d) {
    static std::map<std::tuple<i64, i64, i64>, JordanModule> memo;
    static std::mutex memo_mutex;
    auto key = std::make_tuple(p, m, d);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    std::vector<std::vector<i64>> basis;
    std::vector<i64> current(static_cast<size_t>(m), 0);
    // Enumerate exponent vectors in lexicographic order.
    auto enumerate = [&](auto&& self, i64 pos, i64 remaining) -> void {
        if (pos == m - 1) {
            current[static_cast<size_t>(pos)] = remaining;
            basis.push_back(current);
            return;
        }
        for (i64 a = 0; a <= remaining; ++a) {
            current[static_cast<size_t>(pos)] = a;
            self(self, pos + 1, remaining - a);
        }
    };
    enumerate(enumerate, 0, d);
    std::map<std::vector<i64>, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    FpMatrix der(p, static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t col = 0; col < basis.size(); ++col) {
        for (i64 i = 1; i < m; ++i) {
            i64 a = basis[col][static_cast<size_t>(i)];
            if (a == 0) continue;
            std::vector<i64> target = basis[col];
            target[static_cast<size_t>(i)] -= 1;
            target[static_cast<size_t>(i - 1)] += 1;
            der.add_at(index.at(target), static_cast<int>(col), a);
        }
    }
    JordanModule result = jordan_type_from_nilpotent(p, der);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, result);
    return result;
}

// Subset basis of Ext^d(J_m): strictly increasing index tuples. Lowering an
// index that would collide with its neighbor kills the term; surviving terms
// stay sorted, so no signs appear.
JordanModule ext_single(i64 p, i64 m, i64 d) {
    if (d > m) return JordanModule(p);  // empty exterior power
    std::vector<std::vector<i64>> basis;
    std::vector<i64> current;
    auto enumerate = [&](auto&& self, i64 next, i64 remaining) -> void {
        if (remaining == 0) {
            basis.push_back(current);
            return;
        }
        for (i64 v = next; v <= m - remaining; ++v) {
            current.push_back(v);
            self(self, v + 1, remaining - 1);
            current.pop_back();
        }
    };
    enumerate(enumerate, 0, d);
    std::map<std::vector<i64>, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    FpMatrix der(p, static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t col = 0; col < basis.size(); ++col) {
        for (size_t pos = 0; pos < basis[col].size(); ++pos) {
            i64 v = basis[col][pos];
            if (v == 0) continue;
            if (pos > 0 && basis[col][pos - 1] == v - 1) continue;  // collision
            std::vector<i64> target = basis[col];
            target[pos] = v - 1;
            der.add_at(index.at(target), static_cast<int>(col), 1);
        }
    }
    JordanModule result = jordan_type_from_nilpotent(p, der);
    return result;
}

// Expands the multiset of blocks into an explicit list of sizes.
std::vector<i64> block_list(const JordanModule& a) {
    std::vector<i64> out;
    for (i64 s = 1; s <= a.p(); ++s)
        for (i64 c = 0; c < a.block_count(s); ++c) out.push_back(s);
    return out;
}

using SinglePower = JordanModule (*)(i64, i64, i64);

// S^d / Ext^d of a direct sum: convolve the single-block powers over all
// compositions of d across the block list.
JordanModule power_of_sum(const JordanModule& a, i64 d, SinglePower single) {
    if (d < 0 || d >= a.p())
        throw std::domain_error("tensor-power degree must satisfy 0 <= d < p");
    std::vector<i64> blocks = block_list(a);
    JordanModule total(a.p());
    std::vector<i64> parts(blocks.size(), 0);
    auto recurse = [&](auto&& self, size_t pos, i64 remaining) -> void {
        if (pos == blocks.size()) {
            if (remaining != 0) return;
            JordanModule prod = JordanModule::block(a.p(), 1);  // unit J_1
            for (size_t b = 0; b < blocks.size() && !prod.is_zero(); ++b) {
                JordanModule factor = single(a.p(), blocks[b], parts[b]);
                prod = factor.is_zero() ? JordanModule(a.p()) : tensor_jordan(prod, factor);
            }
            total = total + prod;
            return;
        }
        for (i64 v = 0; v <= remaining; ++v) {
            parts[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    recurse(recurse, 0, d);
    return total;
}

}  // namespace

JordanModule tensor_jordan(const JordanModule& a, const JordanModule& b) {
    if (a.p() != b.p()) throw std::invalid_argument("modules live over different primes");
    JordanModule out(a.p());
    for (i64 s = 1; s <= a.p(); ++s) {
        i64 ca = a.block_count(s);
        if (ca == 0) continue;
        for (i64 t = 1; t <= b.p(); ++t) {
            i64 cb = b.block_count(t);
            if (cb == 0) continue;
            JordanModule pair = tensor_pair(a.p(), s, t);
            for (i64 u = 1; u <= a.p(); ++u) {
                i64 c = pair.block_count(u);
                if (c > 0) out.add_block(u, c * ca * cb);
            }
        }
    }
    return out;
}

JordanModule sym_power_jordan(const JordanModule& a, i64 d) {
    return power_of_sum(a, d, &sym_single);
}

JordanModule ext_power_jordan(const JordanModule& a, i64 d) {
    return power_of_sum(a, d, [](i64 p, i64 m, i64 dd) { return ext_single(p, m, dd); });
}

VerpObject semisimplify(const JordanModule& a) {
    VerpObject out(a.p());
    for (i64 s = 1; s <= a.p() - 1; ++s) {
        i64 c = a.block_count(s);
        if (c > 0) out.add_simple(s, c);
    }
    return out;
}

std::vector<VerpObject> sym_algebra_dims(const VerpObject& a) {
    const i64 p = a.p();
    if (a.mult(1) != 0)
        throw std::invalid_argument(
            "symmetric algebra of an object with unit part is infinite-dimensional");

    // Per-simple symmetric powers, semisimplified; computable for degrees < p,
    // identically zero from the first vanishing degree on (and from degree p
    // on regardless, since multiplication out of S^(d-1) (x) L is onto).
    struct BlockData {
        i64 size;
        std::vector<VerpObject> sym_ss;  // degrees 0..top with nonzero entries
    };
    std::vector<BlockData> blocks;
    for (i64 k = 2; k <= p - 1; ++k) {
        i64 count = a.mult(k);
        if (count == 0) continue;
        BlockData data{k, {}};
        for (i64 d = 0; d < p; ++d) {
            VerpObject ss = semisimplify(sym_power_jordan(JordanModule::block(p, k), d));
            if (ss.is_zero()) break;
            data.sym_ss.push_back(ss);
        }
        for (i64 c = 0; c < count; ++c) blocks.push_back(data);
    }

    std::vector<VerpObject> out;
    for (i64 d = 0;; ++d) {
        VerpObject total(p);
        std::vector<i64> parts(blocks.size(), 0);
        auto recurse = [&](auto&& self, size_t pos, i64 remaining) -> void {
            if (pos == blocks.size()) {
                if (remaining != 0) return;
                VerpObject prod = VerpObject::simple(p, 1);
                for (size_t b = 0; b < blocks.size(); ++b)
                    prod = fuse(prod, blocks[b].sym_ss[static_cast<size_t>(parts[b])]);
                total = total + prod;
                return;
            }
            i64 top = static_cast<i64>(blocks[pos].sym_ss.size()) - 1;
            for (i64 v = 0; v <= std::min(remaining, top); ++v) {
                parts[pos] = v;
                self(self, pos + 1, remaining - v);
            }
        };
        recurse(recurse, 0, d);
        if (total.is_zero()) break;
        out.push_back(total);
    }
    return out;
}

}  // namespace vercat::verp
