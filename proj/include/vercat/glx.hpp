#pragma once

// Structural combinatorics of the general linear group GL(X) on an object
// X = (+)_k L_k^{n_k}: shapes and block structure, integer weights, roots
// (ordinary vs mixed), subgroup Harish-Chandra descriptors, simple-module
// indices (lambda, V), canonical p-adic weight decomposition, Frobenius-
// kernel classification, the iterated Steinberg factorization engine, and
// the factored dimension formula for kernel coordinate rings.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vercat/common.hpp"
#include "vercat/verp.hpp"

namespace vercat::glx {

struct GLXShape {
    i64 p = 0;
    std::vector<i64> mults;  // mults[k-1] = multiplicity of L_k, length p-1
    i64 n = 0;               // total number of summands
    struct Block {
        i64 label;   // the k of L_k
        i64 size;    // n_k
        i64 offset;  // first summand index (0-based)
    };
    std::vector<Block> blocks;   // ascending label; equal summands consecutive
    std::vector<i64> labels;     // per-summand label, length n
    std::vector<size_t> block_of;  // per-summand block index, length n

    bool operator==(const GLXShape& rhs) const { return p == rhs.p && mults == rhs.mults; }
    bool operator!=(const GLXShape& rhs) const { return !(*this == rhs); }
};

// Validates p, requires some n_k > 0; mults may be shorter than p-1 (padded).
GLXShape build_shape(i64 p, std::vector<i64> mults);

struct GWeight {
    GLXShape shape;
    std::vector<i64> entries;  // length n, grouped into blocks

    GWeight(GLXShape s, std::vector<i64> e);
    bool operator==(const GWeight& rhs) const {
        return shape == rhs.shape && entries == rhs.entries;
    }
    bool operator!=(const GWeight& rhs) const { return !(*this == rhs); }
};

GWeight zero_weight(const GLXShape& shape);

struct Root {
    i64 i = 0;   // summand indices, 0-based, i != j
    i64 j = 0;
    bool ordinary = false;  // X_i isomorphic to X_j
    i64 label_i = 0;
    i64 label_j = 0;
};

// All n(n-1) ordered pairs; positive roots are i < j.
std::vector<Root> roots(const GLXShape& shape);

// X_i (x) X_j^* as an object: verp::fuse of the two labels (self-duality).
verp::VerpObject root_space(const GLXShape& shape, const Root& root);

// Per-block weakly-decreasing check; blocks of size 1 are unconstrained.
bool is_dominant(const GWeight& lambda);
// Consecutive in-block differences lie in [0, p^r).
bool is_restricted(const GWeight& lambda, i64 r);

// Canonical splitting lambda = lambda0 + p*mu with lambda0 restricted (r=1),
// mu dominant, and in each block the last entry of lambda0 in [0, p).
std::pair<GWeight, GWeight> padic_decompose(const GWeight& lambda);

// The odd part of a simple-module index: for each block with label k, one
// plus-part SL(k) alcove weight per copy (k = 1 admits only the empty label).
class VTuple {
public:
    explicit VTuple(const GLXShape& shape);  // the trivial tuple
    VTuple(const GLXShape& shape, std::vector<std::vector<std::vector<i64>>> labels);

    const GLXShape& shape() const { return shape_; }
    // labels()[b][c] = partition for copy c of block b.
    const std::vector<std::vector<std::vector<i64>>>& labels() const { return labels_; }
    bool is_trivial() const;

    bool operator==(const VTuple& rhs) const;
    bool operator!=(const VTuple& rhs) const { return !(*this == rhs); }

private:
    GLXShape shape_;
    std::vector<std::vector<std::vector<i64>>> labels_;
};

// All admissible per-copy labels for a block with simple label k: the
// plus-part SL(k) alcove weights ({} alone when k = 1).
std::vector<std::vector<i64>> plus_labels(i64 p, i64 k);

struct SimpleIndex {
    GWeight lambda;
    VTuple v;

    SimpleIndex(GWeight l, VTuple vt);  // requires dominant lambda, same shape
};

struct SteinbergStep {
    SimpleIndex base;
    GWeight mu;
};

// One even Steinberg step: lambda = lambda0 + p*mu; V stays with the base.
SteinbergStep steinberg_step(const SimpleIndex& idx);

struct Factorization {
    SimpleIndex base;             // restricted weight, carries the V
    std::vector<GWeight> twists;  // restricted; level i inflated through Fr^i
};

// Iterated even Steinberg factorization:
// lambda = base + p*twists[0] + p^2*twists[1] + ...
Factorization steinberg_factorize(const SimpleIndex& idx);

// Simples agree on the r-th Frobenius kernel iff lambda - mu lies in
// p^r * (integer weights) and the V components coincide.
bool frobkernel_equiv(const GWeight& la, const VTuple& va,
                      const GWeight& lb, const VTuple& vb, i64 r);

struct SubgroupSelector {
    enum class Kind { G, T, B, Nminus, P, Kernel };
    Kind kind = Kind::G;
    i64 level = 0;  // only for Kernel

    static SubgroupSelector full() { return {Kind::G, 0}; }
    static SubgroupSelector torus() { return {Kind::T, 0}; }
    static SubgroupSelector borel() { return {Kind::B, 0}; }
    static SubgroupSelector lower_unipotent() { return {Kind::Nminus, 0}; }
    static SubgroupSelector parabolic() { return {Kind::P, 0}; }
    static SubgroupSelector kernel(i64 r);
};

// Harish-Chandra descriptor: the classical even-group factor per block plus
// the Lie-algebra content (an object per retained pair (i,j); diagonal pairs
// included). Invariant: the unit multiplicity of the content equals the
// even-group dimension.
struct HCPair {
    SubgroupSelector selector;
    std::vector<std::string> even_factors;  // one label per block
    std::vector<i64> even_block_dims;
    i64 even_dim = 0;
    std::map<std::pair<i64, i64>, verp::VerpObject> content;
    i64 unit_multiplicity = 0;
};

HCPair hc_pair(const GLXShape& shape, const SubgroupSelector& selector);

// O(G_(r)) factored as p^(even exponent) * prod of symmetric-power degrees:
// even exponent = r * dim g_0; sym_dims = per-degree underlying dimensions
// of the symmetric algebra on the non-unit part of gl(X).
struct KernelCoordDims {
    i64 even_exponent = 0;
    std::vector<i64> sym_dims;
};

KernelCoordDims kernel_coord_dims(const GLXShape& shape, i64 r);

}  // namespace vercat::glx
