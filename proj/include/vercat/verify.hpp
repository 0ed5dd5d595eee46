#pragma once

// Runnable property suites. Each suite sweeps an invariant family and
// reports how many checks ran plus the first counterexample found (in the
// deterministic iteration order, so the report is minimal and reproducible).

#include <string>
#include <utility>
#include <vector>

#include "vercat/common.hpp"

namespace vercat::verify {

struct SuiteResult {
    bool ok = true;
    i64 checked = 0;
    std::string failure;  // empty when ok
};

// Fusion in Ver_p against the Jordan-block tensor oracle over F_p, plus
// sym/ext consistency S^2 + Л^2 = V (x) V.
SuiteResult verp_oracle(const std::vector<i64>& primes);

// qdim and fpdim are fusion homomorphisms; untruncated products have
// underlying dimension m*n.
SuiteResult qdim_hom(const std::vector<i64>& primes);

// Ring axioms, duality, grading, invertible consistency, q-dimension
// homomorphism and the pointed/plus bijection for each (p, n). Rings with
// more than 20 simples are sampled (seeded); smaller ones run exhaustively.
SuiteResult sln_ring(const std::vector<std::pair<i64, i64>>& rings, u64 seed, i64 samples);

// Simple counts C(p-1, n-1) and plus-part counts C(p-1, n-1)/n.
SuiteResult sln_count(const std::vector<i64>& primes);

// The n = 2 ring equals Ver_p fusion under L_k <-> (k-1).
SuiteResult dictionary(const std::vector<i64>& primes);

// The stacking action: matches generator fusion, has order n, shifts the
// grading by the level.
SuiteResult stacking(const std::vector<std::pair<i64, i64>>& rings);

// Randomized p-adic decomposition round-trips over a fixed shape pool.
SuiteResult padic_roundtrip(u64 seed, i64 samples);

// Randomized Steinberg factorization properties: reassembly, restrictedness,
// V pass-through, idempotence, one-step-then-recurse consistency.
SuiteResult factorize_props(u64 seed, i64 samples);

// SL(2) engine: restricted dims r+1, level-2 dims (a+1)(b+1), and the
// tensor-vs-direct Steinberg comparison on all p^2 pairs.
SuiteResult sl2_steinberg(const std::vector<i64>& primes);

// Kernel coordinate dimensions against direct symmetric-power computation,
// HC-pair unit-multiplicity invariants, root counts, and Frobenius-kernel
// equivalence classes on a weight box.
SuiteResult kernel_dims();

}  // namespace vercat::verify
