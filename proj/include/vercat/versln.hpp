#pragma once

// The fusion ring of the level-(p-n) SL(n) Verlinde category. Simple objects
// are partitions in the (p-n) x (n-1) box; products are computed by the
// Kac-Walton recipe: classical Littlewood-Richardson expansion (exhaustive
// lattice-word skew tableau counting) followed by signed affine-Weyl folding
// back into the alcove. The stacking action of the invertible generator, the
// plus part, the pointed x plus factorization and exact q-Weyl dimensions
// give independent cross-checks on the same ring.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vercat/common.hpp"
#include "vercat/qcyclo.hpp"

namespace vercat::versln {

struct SLnParams {
    i64 p;
    i64 n;

    SLnParams(i64 p_in, i64 n_in) : p(p_in), n(n_in) {
        require_valid_prime(p);
        if (n < 2 || n >= p)
            throw std::invalid_argument("SL(n) parameters need 2 <= n < p");
    }
    i64 level() const { return p - n; }
    bool operator==(const SLnParams& rhs) const { return p == rhs.p && n == rhs.n; }
    bool operator!=(const SLnParams& rhs) const { return !(*this == rhs); }
};

class AlcoveWeight {
public:
    // Canonicalizes (strips trailing zeros) and validates the alcove bounds:
    // at most n-1 parts, first part <= p-n.
    AlcoveWeight(SLnParams params, std::vector<i64> parts);
    static AlcoveWeight unit(const SLnParams& params) { return AlcoveWeight(params, {}); }

    const SLnParams& params() const { return params_; }
    const std::vector<i64>& parts() const { return parts_; }
    i64 part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    i64 size() const;  // |lambda|
    std::string to_string() const;  // "(2,1)"; the empty partition is "()"

    bool operator==(const AlcoveWeight& rhs) const;
    bool operator!=(const AlcoveWeight& rhs) const { return !(*this == rhs); }
    // Orders by (|lambda|, then wider rows first); params must agree.
    bool operator<(const AlcoveWeight& rhs) const;

private:
    SLnParams params_;
    std::vector<i64> parts_;
};

using FusionExpansion = std::map<AlcoveWeight, i64>;

// All alcove weights, ordered by (size, parts). Count is C(p-1, n-1).
std::vector<AlcoveWeight> enumerate_simples(const SLnParams& params);

FusionExpansion fuse_sln(const AlcoveWeight& a, const AlcoveWeight& b);

// The invertible generator: the single row (p-n).
AlcoveWeight generator(const SLnParams& params);

// Tensoring with the generator: stack a row of width p-n on top, then delete
// the resulting full height-n columns. Order n.
AlcoveWeight invertible_action(const AlcoveWeight& lambda);

// Plus part: n divides |lambda|.
bool is_plus(const AlcoveWeight& lambda);

// Unique (j, sigma) with sigma plus and j generator applications mapping
// sigma back to lambda.
std::pair<i64, AlcoveWeight> pointed_plus_factorize(const AlcoveWeight& lambda);

// Exact q-Weyl dimension: prod over positive roots of [<lambda+rho,alpha>] /
// [<rho,alpha>] at the 2p-th root of unity; the division is asserted exact
// and the result asserted integral.
qcyclo::CycNum qdim_sln(const AlcoveWeight& lambda);

// Componentwise complement dual (reverse and negate as an SL(n) weight);
// pinned down operationally by the duality-multiplicity test on fuse_sln.
AlcoveWeight alcove_dual(const AlcoveWeight& lambda);

// Process-wide fusion memo, exposed so the CLI can persist it. Entries are
// pure recomputable data; loading validates alcove bounds.
struct FusionCacheEntry {
    i64 p = 0;
    i64 n = 0;
    std::vector<i64> a, b;
    std::vector<std::pair<std::vector<i64>, i64>> expansion;
};
std::vector<FusionCacheEntry> fusion_cache_snapshot();
void fusion_cache_load(const std::vector<FusionCacheEntry>& entries);

}  // namespace vercat::versln
