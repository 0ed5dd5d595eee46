#include "vercat/versln.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace vercat::versln {

namespace {

bool is_partition(const std::vector<i64>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return false;
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
    }
    return true;
}

std::vector<i64> strip_zeros(std::vector<i64> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

std::vector<i64> padded(const std::vector<i64>& parts, size_t len) {
    std::vector<i64> out(parts.begin(), parts.end());
    out.resize(len, 0);
    return out;
}

// ---- Littlewood-Richardson coefficients by lattice-word tableau counting --

struct SkewCounter {
    const std::vector<i64>& nu;
    const std::vector<i64>& lam;  // padded to nu's length
    const std::vector<i64>& mu;
    std::vector<std::vector<i64>> fill;  // fill[r][c] for lam[r] <= c < nu[r]
    std::vector<i64> counts;             // occurrences of each value so far

    i64 count() {
        fill.clear();
        for (size_t r = 0; r < nu.size(); ++r)
            fill.emplace_back(static_cast<size_t>(nu[r]), 0);
        counts.assign(mu.size(), 0);
        return place(0, 0);
    }

    // Visits cells row by row, right to left within each row, so the visit
    // order is exactly the reverse reading word and the running counts check
    // is the lattice-word condition.
    i64 place(size_t row, i64 from_right) {
        if (row == nu.size()) return 1;
        i64 c = nu[row] - 1 - from_right;
        if (c < lam[row]) return place(row + 1, 0);

        i64 lo = 1;
        i64 hi = static_cast<i64>(mu.size());
        // Weakly increasing along the row.
        if (c + 1 < nu[row]) hi = std::min(hi, fill[row][static_cast<size_t>(c + 1)]);
        // Strictly increasing down a column (only against filled cells).
        if (row > 0 && c >= lam[row - 1]) lo = std::max(lo, fill[row - 1][static_cast<size_t>(c)] + 1);

        i64 total = 0;
        for (i64 v = lo; v <= hi; ++v) {
            size_t vi = static_cast<size_t>(v - 1);
            if (counts[vi] >= mu[vi]) continue;
            if (v > 1 && counts[vi - 1] <= counts[vi]) continue;
            counts[vi] += 1;
            fill[row][static_cast<size_t>(c)] = v;
            total += place(row, from_right + 1);
            counts[vi] -= 1;
        }
        fill[row][static_cast<size_t>(c)] = 0;
        return total;
    }
};

// All nu with at most max_rows rows and c_{lam,mu}^{nu} > 0.
std::map<std::vector<i64>, i64> lr_expand(const std::vector<i64>& lam,
                                          const std::vector<i64>& mu,
                                          size_t max_rows) {
    std::map<std::vector<i64>, i64> out;
    if (mu.empty()) {
        out[strip_zeros(lam)] = 1;
        return out;
    }
    i64 total = std::accumulate(lam.begin(), lam.end(), i64{0}) +
                std::accumulate(mu.begin(), mu.end(), i64{0});
    i64 max_first = lam.empty() ? mu[0] : lam[0] + mu[0];

    std::vector<i64> nu;
    auto recurse = [&](auto&& self, size_t row, i64 prev, i64 used) -> void {
        if (used == total) {
            std::vector<i64> lam_pad = padded(lam, nu.size());
            bool contains = true;
            for (size_t r = 0; r < nu.size(); ++r)
                if (nu[r] < lam_pad[r]) { contains = false; break; }
            if (static_cast<i64>(lam.size()) > static_cast<i64>(nu.size())) contains = false;
            if (contains) {
                SkewCounter counter{nu, lam_pad, mu, {}, {}};
                i64 c = counter.count();
                if (c > 0) out[nu] = c;
            }
            return;
        }
        if (row == max_rows) return;
        i64 lam_row = row < lam.size() ? lam[row] : 0;
        i64 hi = std::min(prev, total - used);
        for (i64 part = hi; part >= std::max<i64>(lam_row, 1); --part) {
            nu.push_back(part);
            self(self, row + 1, part, used + part);
            nu.pop_back();
        }
    };
    recurse(recurse, 0, max_first, 0);
    return out;
}

// ---- signed affine-Weyl folding ------------------------------------------

// Sorts beta descending via insertion sort, flipping the sign per swap.
// Returns false (wall) on a repeated entry.
bool sort_signed(std::vector<i64>& beta, int& sign) {
    for (size_t i = 1; i < beta.size(); ++i) {
        size_t j = i;
        while (j > 0 && beta[j] > beta[j - 1]) {
            std::swap(beta[j], beta[j - 1]);
            sign = -sign;
            --j;
        }
        if (j > 0 && beta[j] == beta[j - 1]) return false;
    }
    return true;
}

// Folds beta = nu + rho into the open level alcove. Returns sign 0 on a wall.
std::pair<int, std::vector<i64>> fold_into_alcove(std::vector<i64> beta, i64 p) {
    size_t n = beta.size();
    int sign = 1;
    for (int guard = 0; guard < 100000; ++guard) {
        if (!sort_signed(beta, sign)) return {0, {}};
        i64 width = beta[0] - beta[n - 1];
        if (width == p) return {0, {}};
        if (width < p) {
            std::vector<i64> parts(n);
            for (size_t i = 0; i < n; ++i)
                parts[i] = beta[i] - beta[n - 1] - static_cast<i64>(n - 1 - i);
            return {sign, parts};
        }
        i64 top = beta[0];
        beta[0] = beta[n - 1] + p;
        beta[n - 1] = top - p;
        sign = -sign;
    }
    throw std::logic_error("affine folding failed to terminate");
}

// ---- memo -----------------------------------------------------------------

using CacheKey = std::tuple<i64, i64, std::vector<i64>, std::vector<i64>>;
std::map<CacheKey, std::map<std::vector<i64>, i64>>& fusion_cache() {
    static std::map<CacheKey, std::map<std::vector<i64>, i64>> cache;
    return cache;
}
std::mutex& fusion_cache_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

AlcoveWeight::AlcoveWeight(SLnParams params, std::vector<i64> parts)
    : params_(params), parts_(strip_zeros(std::move(parts))) {
    if (!is_partition(parts_))
        throw std::invalid_argument("weight parts must be a partition");
    if (static_cast<i64>(parts_.size()) > params_.n - 1)
        throw std::invalid_argument("weight has more than n-1 rows");
    if (!parts_.empty() && parts_[0] > params_.level())
        throw std::invalid_argument("weight exceeds the level");
}

i64 AlcoveWeight::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), i64{0});
}

std::string AlcoveWeight::to_string() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

bool AlcoveWeight::operator==(const AlcoveWeight& rhs) const {
    return params_ == rhs.params_ && parts_ == rhs.parts_;
}

bool AlcoveWeight::operator<(const AlcoveWeight& rhs) const {
    if (params_ != rhs.params_)
        throw std::invalid_argument("comparing weights from different rings");
    i64 sl = size();
    i64 sr = rhs.size();
    if (sl != sr) return sl < sr;
    return rhs.parts_ < parts_;  // wider rows first within a size class
}

std::vector<AlcoveWeight> enumerate_simples(const SLnParams& params) {
    std::vector<AlcoveWeight> out;
    std::vector<i64> parts;
    auto recurse = [&](auto&& self, i64 row, i64 prev) -> void {
        out.emplace_back(params, strip_zeros(parts));
        if (row == params.n - 1) return;
        for (i64 v = 1; v <= prev; ++v) {
            parts.push_back(v);
            self(self, row + 1, v);
            parts.pop_back();
        }
    };
    recurse(recurse, 0, params.level());
    std::sort(out.begin(), out.end());
    return out;
}

FusionExpansion fuse_sln(const AlcoveWeight& a, const AlcoveWeight& b) {
    if (a.params() != b.params())
        throw std::invalid_argument("fusing weights from different rings");
    const SLnParams& params = a.params();
    const std::vector<i64>& pa = std::min(a.parts(), b.parts());
    const std::vector<i64>& pb = std::max(a.parts(), b.parts());
    CacheKey key{params.p, params.n, pa, pb};

    {
        std::lock_guard<std::mutex> lock(fusion_cache_mutex());
        auto it = fusion_cache().find(key);
        if (it != fusion_cache().end()) {
            FusionExpansion out;
            for (const auto& [parts, mult] : it->second)
                out.emplace(AlcoveWeight(params, parts), mult);
            return out;
        }
    }

    size_t n = static_cast<size_t>(params.n);
    std::map<std::vector<i64>, i64> acc;
    for (const auto& [nu, c] : lr_expand(pa, pb, n)) {
        std::vector<i64> beta = padded(nu, n);
        for (size_t i = 0; i < n; ++i) beta[i] += static_cast<i64>(n - 1 - i);
        auto [sign, parts] = fold_into_alcove(std::move(beta), params.p);
        if (sign != 0) acc[parts] += sign * c;
    }

    FusionExpansion out;
    std::map<std::vector<i64>, i64> stored;
    for (const auto& [parts, mult] : acc) {
        if (mult == 0) continue;
        if (mult < 0) throw std::logic_error("negative fusion multiplicity");
        out.emplace(AlcoveWeight(params, parts), mult);
        stored.emplace(parts, mult);
    }

    std::lock_guard<std::mutex> lock(fusion_cache_mutex());
    fusion_cache().emplace(std::move(key), std::move(stored));
    return out;
}

AlcoveWeight generator(const SLnParams& params) {
    return AlcoveWeight(params, {params.level()});
}

AlcoveWeight invertible_action(const AlcoveWeight& lambda) {
    const SLnParams& params = lambda.params();
    std::vector<i64> stacked;
    stacked.push_back(params.level());
    for (i64 part : lambda.parts()) stacked.push_back(part);
    stacked = padded(stacked, static_cast<size_t>(params.n));
    i64 full_cols = stacked.back();
    for (i64& part : stacked) part -= full_cols;
    return AlcoveWeight(params, std::move(stacked));
}

bool is_plus(const AlcoveWeight& lambda) {
    return lambda.size() % lambda.params().n == 0;
}

std::pair<i64, AlcoveWeight> pointed_plus_factorize(const AlcoveWeight& lambda) {
    const SLnParams& params = lambda.params();
    i64 j = -1;
    for (i64 cand = 0; cand < params.n; ++cand) {
        if (mod_floor(lambda.size() - cand * params.level(), params.n) == 0) {
            j = cand;
            break;
        }
    }
    if (j < 0) throw std::logic_error("no pointed twist matches the grading");
    AlcoveWeight sigma = lambda;
    for (i64 k = 0; k < mod_floor(-j, params.n); ++k) sigma = invertible_action(sigma);
    if (!is_plus(sigma)) throw std::logic_error("plus factor failed the grading check");
    AlcoveWeight check = sigma;
    for (i64 k = 0; k < j; ++k) check = invertible_action(check);
    if (check != lambda) throw std::logic_error("pointed factorization did not reassemble");
    return {j, sigma};
}

qcyclo::CycNum qdim_sln(const AlcoveWeight& lambda) {
    const SLnParams& params = lambda.params();
    size_t n = static_cast<size_t>(params.n);
    std::vector<i64> parts = padded(lambda.parts(), n);
    qcyclo::CycNum num = qcyclo::CycNum::from_integer(params.p, 1);
    qcyclo::CycNum den = qcyclo::CycNum::from_integer(params.p, 1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            i64 gap = static_cast<i64>(j - i);
            num = num * qcyclo::qint(parts[i] - parts[j] + gap, params.p);
            den = den * qcyclo::qint(gap, params.p);
        }
    }
    qcyclo::CycNum q = num.div_exact(den);
    if (!q.is_integral()) throw std::logic_error("q-dimension is not an algebraic integer");
    return q;
}

AlcoveWeight alcove_dual(const AlcoveWeight& lambda) {
    const SLnParams& params = lambda.params();
    size_t n = static_cast<size_t>(params.n);
    std::vector<i64> parts = padded(lambda.parts(), n);
    std::vector<i64> dual(n);
    for (size_t i = 0; i < n; ++i) dual[i] = parts[0] - parts[n - 1 - i];
    return AlcoveWeight(params, std::move(dual));
}

std::vector<FusionCacheEntry> fusion_cache_snapshot() {
    std::lock_guard<std::mutex> lock(fusion_cache_mutex());
    std::vector<FusionCacheEntry> out;
    out.reserve(fusion_cache().size());
    for (const auto& [key, expansion] : fusion_cache()) {
        FusionCacheEntry entry;
        entry.p = std::get<0>(key);
        entry.n = std::get<1>(key);
        entry.a = std::get<2>(key);
        entry.b = std::get<3>(key);
        entry.expansion.assign(expansion.begin(), expansion.end());
        out.push_back(std::move(entry));
    }
    return out;
}

void fusion_cache_load(const std::vector<FusionCacheEntry>& entries) {
    std::lock_guard<std::mutex> lock(fusion_cache_mutex());
    for (const FusionCacheEntry& entry : entries) {
        SLnParams params(entry.p, entry.n);
        AlcoveWeight a(params, entry.a);
        AlcoveWeight b(params, entry.b);
        std::map<std::vector<i64>, i64> expansion;
        for (const auto& [parts, mult] : entry.expansion) {
            if (mult <= 0) throw std::invalid_argument("cache multiplicities must be positive");
            expansion.emplace(AlcoveWeight(params, parts).parts(), mult);
        }
        CacheKey key{entry.p, entry.n, std::min(a.parts(), b.parts()),
                     std::max(a.parts(), b.parts())};
        fusion_cache()[std::move(key)] = std::move(expansion);
    }
}

}  // namespace vercat::versln
