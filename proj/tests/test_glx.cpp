#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "vercat/glx.hpp"
#include "vercat/verp.hpp"

using vercat::i64;
using vercat::verp::VerpObject;
using namespace vercat::glx;

namespace {

VerpObject L(i64 p, i64 k) { return VerpObject::simple(p, k); }

GWeight wt(const GLXShape& s, std::vector<i64> e) { return GWeight(s, std::move(e)); }

}  // namespace

TEST_CASE("shape construction and block layout") {
    const GLXShape one = build_shape(5, {1});
    CHECK(one.n == 1);
    CHECK(one.labels == std::vector<i64>{1});
    REQUIRE(one.blocks.size() == 1);
    CHECK(one.blocks[0].label == 1);
    CHECK(one.blocks[0].size == 1);

    const GLXShape mixed = build_shape(5, {2, 0, 1});  // L1 (+) L1 (+) L3
    CHECK(mixed.n == 3);
    CHECK(mixed.labels == (std::vector<i64>{1, 1, 3}));
    REQUIRE(mixed.blocks.size() == 2);
    CHECK(mixed.blocks[0].label == 1);
    CHECK(mixed.blocks[0].size == 2);
    CHECK(mixed.blocks[0].offset == 0);
    CHECK(mixed.blocks[1].label == 3);
    CHECK(mixed.blocks[1].size == 1);
    CHECK(mixed.blocks[1].offset == 2);
    CHECK(mixed.block_of == (std::vector<size_t>{0, 0, 1}));

    // Short multiplicity lists are padded to length p-1.
    CHECK(build_shape(5, {1}).mults == (std::vector<i64>{1, 0, 0, 0}));

    CHECK_THROWS_AS(build_shape(5, {}), std::invalid_argument);
    CHECK_THROWS_AS(build_shape(5, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_shape(5, {0, 0, 0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_shape(5, {-1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_shape(8, {1}), std::invalid_argument);
}

TEST_CASE("roots: ordinary versus mixed") {
    // GL(2) on L2: both ordered pairs are ordinary.
    const std::vector<Root> r2 = roots(build_shape(5, {0, 2}));
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].ordinary);
    CHECK(r2[1].ordinary);

    // L1 (+) L2: two mixed roots.
    const std::vector<Root> rm = roots(build_shape(5, {1, 1}));
    REQUIRE(rm.size() == 2);
    CHECK_FALSE(rm[0].ordinary);
    CHECK_FALSE(rm[1].ordinary);

    // L1^2 (+) L3: six roots, two ordinary (inside the L1 block).
    const std::vector<Root> rbig = roots(build_shape(5, {2, 0, 1}));
    REQUIRE(rbig.size() == 6);
    i64 ordinary = 0;
    for (const Root& r : rbig) ordinary += r.ordinary ? 1 : 0;
    CHECK(ordinary == 2);
}

TEST_CASE("root spaces as objects") {
    const GLXShape s23 = build_shape(5, {0, 1, 1});  // L2 (+) L3
    const std::vector<Root> rr = roots(s23);
    for (const Root& r : rr) {
        const VerpObject space = root_space(s23, r);
        CHECK(space == L(5, 2) + L(5, 4));  // L2 (x) L3* = L2 (+) L4
    }
    // Ordinary root spaces contain one unit summand.
    const GLXShape s22 = build_shape(5, {0, 2});
    for (const Root& r : roots(s22))
        CHECK(root_space(s22, r) == L(5, 1) + L(5, 3));
    // Mixed L1/L3 pair.
    const GLXShape s13 = build_shape(5, {1, 0, 1});
    for (const Root& r : roots(s13))
        CHECK(root_space(s13, r) == L(5, 3));
}

TEST_CASE("dominance and restrictedness") {
    const GLXShape gl2 = build_shape(5, {2});
    CHECK(is_dominant(wt(gl2, {7, 3})));
    CHECK_FALSE(is_dominant(wt(gl2, {3, 7})));
    CHECK(is_restricted(wt(gl2, {7, 3}), 1));       // difference 4 < 5
    CHECK_FALSE(is_restricted(wt(gl2, {12, 3}), 1));  // difference 9
    CHECK(is_restricted(wt(gl2, {12, 3}), 2));        // 9 < 25
    // Size-1 blocks are unconstrained.
    const GLXShape two_blocks = build_shape(5, {1, 1});
    CHECK(is_dominant(wt(two_blocks, {-4, 100})));
    CHECK(is_restricted(wt(two_blocks, {-4, 100}), 1));
}

TEST_CASE("canonical p-adic decomposition") {
    const GLXShape gl2 = build_shape(5, {2});

    auto [lo, hi] = padic_decompose(wt(gl2, {12, 3}));
    CHECK(lo == wt(gl2, {7, 3}));
    CHECK(hi == wt(gl2, {1, 0}));

    // Negative entries decompose too; the last entry of the low part is the
    // non-negative residue.
    auto [lo2, hi2] = padic_decompose(wt(gl2, {0, -7}));
    CHECK(lo2 == wt(gl2, {5, 3}));
    CHECK(hi2 == wt(gl2, {-1, -2}));
    // Reassembly.
    for (i64 i = 0; i < 2; ++i)
        CHECK(lo2.entries[i] + 5 * hi2.entries[i] == wt(gl2, {0, -7}).entries[i]);

    // A weight already canonical is a fixed point.
    auto [lo3, hi3] = padic_decompose(wt(gl2, {4, 3}));
    CHECK(lo3 == wt(gl2, {4, 3}));
    CHECK(hi3 == wt(gl2, {0, 0}));

    // Restricted but non-canonical (last entry >= p) still re-splits.
    auto [lo4, hi4] = padic_decompose(wt(gl2, {7, 6}));
    CHECK(lo4 == wt(gl2, {2, 1}));
    CHECK(hi4 == wt(gl2, {1, 1}));

    CHECK_THROWS_AS(padic_decompose(wt(gl2, {3, 7})), std::invalid_argument);
}

TEST_CASE("Steinberg factorization engine") {
    const GLXShape gl2 = build_shape(5, {2});

    // (31,0) = (1,0) + 5*(1,0) + 25*(1,0).
    const Factorization f = steinberg_factorize(SimpleIndex(wt(gl2, {31, 0}), VTuple(gl2)));
    CHECK(f.base.lambda == wt(gl2, {1, 0}));
    REQUIRE(f.twists.size() == 2);
    CHECK(f.twists[0] == wt(gl2, {1, 0}));
    CHECK(f.twists[1] == wt(gl2, {1, 0}));

    // (12,3) = (7,3) + 5*(1,0).
    const Factorization g = steinberg_factorize(SimpleIndex(wt(gl2, {12, 3}), VTuple(gl2)));
    CHECK(g.base.lambda == wt(gl2, {7, 3}));
    REQUIRE(g.twists.size() == 1);
    CHECK(g.twists[0] == wt(gl2, {1, 0}));

    // Restricted weights pass through unchanged (stop-at-first-restricted).
    const Factorization h = steinberg_factorize(SimpleIndex(wt(gl2, {7, 6}), VTuple(gl2)));
    CHECK(h.base.lambda == wt(gl2, {7, 6}));
    CHECK(h.twists.empty());

    // GL(1) blocks are always restricted.
    const GLXShape gl1 = build_shape(5, {1});
    const Factorization k = steinberg_factorize(SimpleIndex(wt(gl1, {17}), VTuple(gl1)));
    CHECK(k.base.lambda == wt(gl1, {17}));
    CHECK(k.twists.empty());

    // One even step: V stays with the base.
    const GLXShape s2 = build_shape(5, {0, 1});  // one copy of L2
    const VTuple v(s2, {{{2}}});                 // nontrivial plus label of SL(2)
    const SteinbergStep step = steinberg_step(SimpleIndex(wt(s2, {12}), v));
    CHECK(step.base.lambda == wt(s2, {2}));
    CHECK(step.mu == wt(s2, {2}));
    CHECK(step.base.v == v);
    const Factorization fv = steinberg_factorize(SimpleIndex(wt(s2, {12}), v));
    CHECK(fv.base.v == v);
}

TEST_CASE("V-tuples over the plus parts") {
    // Admissible per-copy labels: C(p-1, k-1)/k of them.
    CHECK(plus_labels(5, 1) == (std::vector<std::vector<i64>>{{}}));
    CHECK(plus_labels(5, 2).size() == 2);   // C(4,1)/2
    CHECK(plus_labels(5, 3).size() == 2);   // C(4,2)/3
    CHECK(plus_labels(7, 3).size() == 5);   // C(6,2)/3
    CHECK(plus_labels(11, 2).size() == 5);  // C(10,1)/2

    const GLXShape s = build_shape(5, {1, 1});  // L1 (+) L2
    const VTuple trivial(s);
    CHECK(trivial.is_trivial());
    // L2 admits the nontrivial plus label (2) of SL(2) at p=5.
    const VTuple v(s, {{{}}, {{2}}});
    CHECK_FALSE(v.is_trivial());
    CHECK(v != trivial);

    CHECK_THROWS_AS(VTuple(s, {{{}}}), std::invalid_argument);  // block count
    CHECK_THROWS_AS(VTuple(s, {{{1}}, {{}}}), std::invalid_argument);  // label-1 block
    CHECK_THROWS_AS(VTuple(s, {{{}}, {{3}}}), std::invalid_argument);  // out of alcove
    const GLXShape s3 = build_shape(7, {0, 0, 1});  // one L3
    CHECK_THROWS_AS(VTuple(s3, {{{1}}}), std::invalid_argument);  // (1) is not plus
    CHECK(VTuple(s3, {{{2, 1}}}) != VTuple(s3));
}

TEST_CASE("Frobenius kernel equivalence of simple indices") {
    const GLXShape gl1 = build_shape(5, {1});
    const VTuple t1(gl1);
    CHECK(frobkernel_equiv(wt(gl1, {0}), t1, wt(gl1, {5}), t1, 1));
    CHECK_FALSE(frobkernel_equiv(wt(gl1, {0}), t1, wt(gl1, {1}), t1, 1));
    CHECK_FALSE(frobkernel_equiv(wt(gl1, {0}), t1, wt(gl1, {5}), t1, 2));
    CHECK(frobkernel_equiv(wt(gl1, {0}), t1, wt(gl1, {25}), t1, 2));

    const GLXShape gl2 = build_shape(5, {2});
    const VTuple t2(gl2);
    CHECK(frobkernel_equiv(wt(gl2, {5, 0}), t2, wt(gl2, {0, 0}), t2, 1));
    CHECK_FALSE(frobkernel_equiv(wt(gl2, {5, 0}), t2, wt(gl2, {0, 0}), t2, 2));

    // Distinct V-components are never equivalent.
    const GLXShape s2 = build_shape(5, {0, 1});
    const VTuple tv(s2);
    const VTuple nv(s2, {{{2}}});
    CHECK_FALSE(frobkernel_equiv(wt(s2, {0}), tv, wt(s2, {0}), nv, 1));
    CHECK(frobkernel_equiv(wt(s2, {5}), nv, wt(s2, {0}), nv, 1));
}

TEST_CASE("Harish-Chandra descriptors for the standard subgroups") {
    const GLXShape s = build_shape(5, {2, 1});  // L1^2 (+) L2

    const HCPair torus = hc_pair(s, SubgroupSelector::torus());
    CHECK(torus.even_dim == 3);  // one GL(1) per summand
    REQUIRE(torus.content.count({2, 2}) == 1);
    // Diagonal content on the L2 copy: L2 (x) L2* = L1 (+) L3.
    CHECK(torus.content.at({2, 2}) == L(5, 1) + L(5, 3));
    // Off-diagonal pairs are absent for the torus.
    CHECK(torus.content.count({0, 1}) == 0);

    const HCPair full = hc_pair(s, SubgroupSelector::full());
    CHECK(full.even_dim == 4 + 1);  // GL(2) plus GL(1)
    CHECK(full.content.size() == 9);
    CHECK(full.unit_multiplicity == full.even_dim);

    const HCPair borel = hc_pair(s, SubgroupSelector::borel());
    const HCPair lower = hc_pair(s, SubgroupSelector::lower_unipotent());
    CHECK(borel.even_dim == 3 + 1);   // upper-triangular per block
    CHECK(lower.even_dim == 1);       // strictly lower per block
    CHECK(borel.content.size() + lower.content.size() == full.content.size());

    // The parabolic from the block filtration sits between B and G.
    const HCPair para = hc_pair(s, SubgroupSelector::parabolic());
    CHECK(para.even_dim == full.even_dim);
    CHECK(para.content.size() == 7);  // i <= j plus the in-block pair below the diagonal

    const HCPair ker = hc_pair(s, SubgroupSelector::kernel(2));
    CHECK(ker.even_dim == full.even_dim);
    CHECK(ker.content.size() == full.content.size());
    CHECK(ker.even_factors.size() == 2);

    CHECK_THROWS_AS(SubgroupSelector::kernel(0), std::invalid_argument);
}

TEST_CASE("kernel coordinate ring dimensions") {
    // Ordinary GL(1): O(G_(r)) = p^r, no odd part.
    const KernelCoordDims d1 = kernel_coord_dims(build_shape(5, {1}), 1);
    CHECK(d1.even_exponent == 1);
    CHECK(d1.sym_dims == (std::vector<i64>{1}));

    const KernelCoordDims d1r2 = kernel_coord_dims(build_shape(5, {1}), 2);
    CHECK(d1r2.even_exponent == 2);

    // GL(3) ordinary: exponent r * 9.
    CHECK(kernel_coord_dims(build_shape(5, {3}), 2).even_exponent == 18);

    // X = L2 at p=5: even part GL(1), odd part L3; S(L3) has dims 1,3,1.
    const KernelCoordDims d2 = kernel_coord_dims(build_shape(5, {0, 1}), 1);
    CHECK(d2.even_exponent == 1);
    CHECK(d2.sym_dims == (std::vector<i64>{1, 3, 1}));

    // X = L1 (+) L2 at p=5: even GL(1)^2, odd L2^2 (+) L3.
    const KernelCoordDims d12 = kernel_coord_dims(build_shape(5, {1, 1}), 1);
    CHECK(d12.even_exponent == 2);
    CHECK(d12.sym_dims ==
          (std::vector<i64>{1, 7, 23, 39, 40, 39, 23, 7, 1}));

    CHECK_THROWS_AS(kernel_coord_dims(build_shape(5, {1}), 0), std::invalid_argument);
}

TEST_CASE("weight and index validation") {
    const GLXShape gl2 = build_shape(5, {2});
    CHECK_THROWS_AS(wt(gl2, {1}), std::invalid_argument);        // wrong length
    CHECK_THROWS_AS(wt(gl2, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleIndex(wt(gl2, {3, 7}), VTuple(gl2)), std::invalid_argument);
    CHECK(zero_weight(gl2).entries == (std::vector<i64>{0, 0}));
}
