#pragma once

// The Grothendieck ring of the semisimplification of Rep k[t]/(t^p): objects
// are multiplicity vectors over the simples L_1..L_{p-1} with the truncated
// Clebsch-Gordan fusion rule, and the brute-force Jordan-block model is kept
// alongside as the oracle the rule is checked against (tensor the nilpotent
// matrices over F_p, read the Jordan type off the rank sequence, drop blocks
// of size p).

#include <vector>

#include "vercat/common.hpp"
#include "vercat/qcyclo.hpp"

namespace vercat::verp {

class VerpObject {
public:
    // The zero object at prime p.
    explicit VerpObject(i64 p);
    static VerpObject simple(i64 p, i64 k);  // L_k, 1 <= k <= p-1

    i64 p() const { return p_; }
    i64 mult(i64 k) const;  // multiplicity of L_k
    void add_simple(i64 k, i64 count = 1);
    // Total number of simple summands (the length of the object).
    i64 length() const;
    bool is_zero() const;
    const std::vector<i64>& mults() const { return mult_; }  // index k-1 <-> L_k

    VerpObject operator+(const VerpObject& rhs) const;
    bool operator==(const VerpObject& rhs) const;
    bool operator!=(const VerpObject& rhs) const { return !(*this == rhs); }

private:
    i64 p_;
    std::vector<i64> mult_;
};

// L_m (x) L_n = (+)_{i=1..min(m,n,p-m,p-n)} L_{|m-n|+2i-1}, extended
// bilinearly. Commutative, associative, unit L_1.
VerpObject fuse(const VerpObject& a, const VerpObject& b);

// Every simple is self-dual, so duality is the identity on objects.
VerpObject dual(const VerpObject& a);

// Projection onto the unit-isotypic component: kills L_2..L_{p-1}.
VerpObject frobenius_twist(const VerpObject& a);

qcyclo::CycNum qdim(const VerpObject& a);  // sum of mult[k] * [k]
i64 fpdim(const VerpObject& a);            // sum of mult[k] * k mod p, in [0,p)
i64 underlying_dim(const VerpObject& a);   // sum of mult[k] * k, unreduced
i64 length(const VerpObject& a);

// The ring splits into a "plus" half (odd indices) times the super-line
// L_{p-1}: L_k for even k equals L_{p-k} (x) L_{p-1}. The split re-expresses
// an object in plus coordinates per parity; fusing plus_odd with L_{p-1} and
// adding plus_even recovers the input.
struct PlusSuperSplit {
    VerpObject plus_even;
    VerpObject plus_odd;  // in plus coordinates (odd indices only)
};
PlusSuperSplit split_plus_super(const VerpObject& a);

class JordanModule {
public:
    // The zero module at prime p.
    explicit JordanModule(i64 p);
    static JordanModule block(i64 p, i64 size);  // J_size, 1 <= size <= p

    i64 p() const { return p_; }
    i64 block_count(i64 size) const;
    void add_block(i64 size, i64 count = 1);
    i64 total_dim() const;
    i64 block_total() const;
    bool is_zero() const;
    const std::vector<i64>& counts() const { return count_; }  // index s-1 <-> J_s

    JordanModule operator+(const JordanModule& rhs) const;
    bool operator==(const JordanModule& rhs) const;
    bool operator!=(const JordanModule& rhs) const { return !(*this == rhs); }

private:
    i64 p_;
    std::vector<i64> count_;
};

// Jordan type of t(x)1 + 1(x)t on the tensor product over F_p, computed from
// the rank sequence r_i = rank(N^i): #blocks of size >= s is r_{s-1} - r_s.
JordanModule tensor_jordan(const JordanModule& a, const JordanModule& b);

// Jordan type of the derivation on the image of the (anti)symmetrizer
// idempotent in the d-th tensor power; requires 0 <= d < p so that 1/d!
// exists over F_p. Direct sums decompose degreewise across blocks.
JordanModule sym_power_jordan(const JordanModule& a, i64 d);
JordanModule ext_power_jordan(const JordanModule& a, i64 d);

// Drops blocks of size p (dimension divisible by p dies), maps J_k -> L_k.
VerpObject semisimplify(const JordanModule& a);

// Degreewise symmetric algebra of an object with no unit part: entry d is
// S^d(a), computed by lifting simples to Jordan blocks, convolving
// S^d(A(+)B) = (+)_{a+b=d} S^a(A)(x)S^b(B) with per-block degrees < p, and
// semisimplifying. Degrees >= p of a single block vanish after
// semisimplification, which is what makes the sequence terminate.
std::vector<VerpObject> sym_algebra_dims(const VerpObject& a);

}  // namespace vercat::verp
