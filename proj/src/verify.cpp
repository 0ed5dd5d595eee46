#include "vercat/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "vercat/charoracle.hpp"
#include "vercat/glx.hpp"
#include "vercat/qcyclo.hpp"
#include "vercat/verp.hpp"
#include "vercat/versln.hpp"

namespace vercat::verify {

namespace {

i64 binom_i64(i64 a, i64 b) {
    if (b < 0 || b > a) return 0;
    i64 out = 1;
    for (i64 t = 1; t <= b; ++t) out = out * (a - b + t) / t;
    return out;
}

template <typename... Args>
std::string format(Args&&... args) {
    std::ostringstream out;
    (out << ... << args);
    return out.str();
}

verp::VerpObject jordan_oracle_fuse(i64 p, i64 m, i64 n) {
    return verp::semisimplify(
        verp::tensor_jordan(verp::JordanModule::block(p, m), verp::JordanModule::block(p, n)));
}

std::string expansion_str(const versln::FusionExpansion& e) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, mult] : e) {
        if (!first) out << " + ";
        first = false;
        if (mult != 1) out << mult << "*";
        out << w.to_string();
    }
    return first ? "0" : out.str();
}

versln::FusionExpansion fuse_into(const versln::FusionExpansion& e,
                                  const versln::AlcoveWeight& c) {
    versln::FusionExpansion out;
    for (const auto& [w, mult] : e)
        for (const auto& [v, inner] : versln::fuse_sln(w, c)) out[v] += mult * inner;
    return out;
}

verp::JordanModule jordan_of(const verp::VerpObject& a) {
    verp::JordanModule out(a.p());
    for (i64 k = 1; k <= a.p() - 1; ++k)
        if (a.mult(k) > 0) out.add_block(k, a.mult(k));
    return out;
}

std::vector<std::pair<i64, std::vector<i64>>> padic_shape_pool() {
    return {{5, {2}}, {5, {1, 1}}, {5, {0, 3}}, {7, {2, 0, 1}}, {11, {4}}, {13, {0, 0, 0, 0, 2}}};
}

glx::GWeight random_dominant(const glx::GLXShape& shape, std::mt19937_64& rng, i64 lo, i64 hi) {
    std::vector<i64> entries(static_cast<size_t>(shape.n), 0);
    for (const glx::GLXShape::Block& block : shape.blocks) {
        std::vector<i64> vals;
        for (i64 i = 0; i < block.size; ++i)
            vals.push_back(lo + static_cast<i64>(rng() % static_cast<u64>(hi - lo + 1)));
        std::sort(vals.rbegin(), vals.rend());
        for (i64 i = 0; i < block.size; ++i)
            entries[static_cast<size_t>(block.offset + i)] = vals[static_cast<size_t>(i)];
    }
    return glx::GWeight(shape, std::move(entries));
}

glx::VTuple random_vtuple(const glx::GLXShape& shape, std::mt19937_64& rng) {
    std::vector<std::vector<std::vector<i64>>> labels;
    for (const glx::GLXShape::Block& block : shape.blocks) {
        std::vector<std::vector<i64>> pool = glx::plus_labels(shape.p, block.label);
        std::vector<std::vector<i64>> copies;
        for (i64 c = 0; c < block.size; ++c)
            copies.push_back(pool[static_cast<size_t>(rng() % pool.size())]);
        labels.push_back(std::move(copies));
    }
    return glx::VTuple(shape, std::move(labels));
}

}  // namespace

SuiteResult verp_oracle(const std::vector<i64>& primes) {
    SuiteResult res;
    for (i64 p : primes) {
        for (i64 m = 1; m <= p - 1; ++m) {
            for (i64 n = m; n <= p - 1; ++n) {
                verp::VerpObject got =
                    verp::fuse(verp::VerpObject::simple(p, m), verp::VerpObject::simple(p, n));
                if (got != jordan_oracle_fuse(p, m, n)) {
                    res.ok = false;
                    res.failure = format("p=", p, ": fuse(L", m, ",L", n,
                                         ") disagrees with the Jordan oracle");
                    return res;
                }
                res.checked += 1;
            }
        }
        for (i64 k = 1; k <= p - 1; ++k) {
            verp::JordanModule jk = verp::JordanModule::block(p, k);
            if (verp::sym_power_jordan(jk, 2) + verp::ext_power_jordan(jk, 2) !=
                verp::tensor_jordan(jk, jk)) {
                res.ok = false;
                res.failure = format("p=", p, ": S^2 + Ext^2 of J_", k, " misses J_", k, " (x) J_", k);
                return res;
            }
            res.checked += 1;
        }
    }
    return res;
}

SuiteResult qdim_hom(const std::vector<i64>& primes) {
    SuiteResult res;
    for (i64 p : primes) {
        std::vector<qcyclo::CycNum> qd;
        qd.reserve(static_cast<size_t>(p - 1));
        for (i64 k = 1; k <= p - 1; ++k)
            qd.push_back(verp::qdim(verp::VerpObject::simple(p, k)));
        for (i64 m = 1; m <= p - 1; ++m) {
            for (i64 n = m; n <= p - 1; ++n) {
                verp::VerpObject prod =
                    verp::fuse(verp::VerpObject::simple(p, m), verp::VerpObject::simple(p, n));
                if (verp::qdim(prod) != qd[static_cast<size_t>(m - 1)] * qd[static_cast<size_t>(n - 1)]) {
                    res.ok = false;
                    res.failure = format("p=", p, ": qdim not multiplicative on (L", m, ",L", n, ")");
                    return res;
                }
                if (verp::fpdim(prod) != mod_floor(m * n, p)) {
                    res.ok = false;
                    res.failure = format("p=", p, ": fpdim(L", m, " (x) L", n, ") != ", m, "*", n,
                                         " mod p");
                    return res;
                }
                if (m + n <= p && verp::underlying_dim(prod) != m * n) {
                    res.ok = false;
                    res.failure = format("p=", p, ": untruncated product (L", m, ",L", n,
                                         ") has wrong total dimension");
                    return res;
                }
                res.checked += 3;
            }
        }
    }
    return res;
}

namespace {

bool ring_pair_check(const versln::SLnParams& params, const versln::AlcoveWeight& a,
                     const versln::AlcoveWeight& b,
                     const std::map<std::vector<i64>, qcyclo::CycNum>& qd, SuiteResult& res) {
    versln::FusionExpansion e = versln::fuse_sln(a, b);
    versln::AlcoveWeight unit = versln::AlcoveWeight::unit(params);
    i64 unit_mult = 0;
    qcyclo::CycNum rhs(params.p);
    for (const auto& [w, mult] : e) {
        if (mult < 1) {
            res.ok = false;
            res.failure = format("p=", params.p, ",n=", params.n, ": non-positive multiplicity in ",
                                 a.to_string(), " (x) ", b.to_string());
            return false;
        }
        if (mod_floor(w.size() - a.size() - b.size(), params.n) != 0) {
            res.ok = false;
            res.failure = format("p=", params.p, ",n=", params.n, ": grading violated by ",
                                 w.to_string(), " in ", a.to_string(), " (x) ", b.to_string());
            return false;
        }
        if (w == unit) unit_mult = mult;
        rhs = rhs + qcyclo::CycNum::from_integer(params.p, mult) * qd.at(w.parts());
    }
    i64 expected_unit = (b == versln::alcove_dual(a)) ? 1 : 0;
    if (unit_mult != expected_unit) {
        res.ok = false;
        res.failure = format("p=", params.p, ",n=", params.n, ": unit multiplicity in ",
                             a.to_string(), " (x) ", b.to_string(), " is ", unit_mult,
                             ", expected ", expected_unit);
        return false;
    }
    if (qd.at(a.parts()) * qd.at(b.parts()) != rhs) {
        res.ok = false;
        res.failure = format("p=", params.p, ",n=", params.n, ": qdim not multiplicative on ",
                             a.to_string(), " (x) ", b.to_string(), " = ", expansion_str(e));
        return false;
    }
    res.checked += 3;
    return true;
}

bool ring_assoc_check(const versln::AlcoveWeight& a, const versln::AlcoveWeight& b,
                      const versln::AlcoveWeight& c, SuiteResult& res) {
    if (fuse_into(versln::fuse_sln(a, b), c) != fuse_into(versln::fuse_sln(b, c), a)) {
        res.ok = false;
        res.failure = format("p=", a.params().p, ",n=", a.params().n, ": associativity fails on (",
                             a.to_string(), ",", b.to_string(), ",", c.to_string(), ")");
        return false;
    }
    res.checked += 1;
    return true;
}

}  // namespace

SuiteResult sln_ring(const std::vector<std::pair<i64, i64>>& rings, u64 seed, i64 samples) {
    SuiteResult res;
    std::mt19937_64 rng(seed);
    for (const auto& [p, n] : rings) {
        versln::SLnParams params(p, n);
        std::vector<versln::AlcoveWeight> simples = versln::enumerate_simples(params);
        const size_t s = simples.size();
        const bool exhaustive = s <= 20;

        std::map<std::vector<i64>, qcyclo::CycNum> qd;
        for (const versln::AlcoveWeight& w : simples) qd.emplace(w.parts(), versln::qdim_sln(w));

        versln::AlcoveWeight unit = versln::AlcoveWeight::unit(params);
        std::set<std::pair<i64, std::vector<i64>>> factored;
        for (const versln::AlcoveWeight& w : simples) {
            versln::FusionExpansion e = versln::fuse_sln(unit, w);
            if (e.size() != 1 || e.begin()->second != 1 || !(e.begin()->first == w)) {
                res.ok = false;
                res.failure = format("p=", p, ",n=", n, ": unit law fails at ", w.to_string());
                return res;
            }
            versln::FusionExpansion g = versln::fuse_sln(versln::generator(params), w);
            if (g.size() != 1 || g.begin()->second != 1 ||
                !(g.begin()->first == versln::invertible_action(w))) {
                res.ok = false;
                res.failure = format("p=", p, ",n=", n, ": generator fusion at ", w.to_string(),
                                     " is ", expansion_str(g), ", stacking gives ",
                                     versln::invertible_action(w).to_string());
                return res;
            }
            auto [j, sigma] = versln::pointed_plus_factorize(w);
            factored.insert({j, sigma.parts()});
            res.checked += 3;
        }
        if (factored.size() != s) {
            res.ok = false;
            res.failure = format("p=", p, ",n=", n, ": pointed/plus factorization is not injective");
            return res;
        }

        if (exhaustive) {
            for (const versln::AlcoveWeight& a : simples)
                for (const versln::AlcoveWeight& b : simples)
                    if (!ring_pair_check(params, a, b, qd, res)) return res;
            for (const versln::AlcoveWeight& a : simples)
                for (const versln::AlcoveWeight& b : simples)
                    for (const versln::AlcoveWeight& c : simples)
                        if (!ring_assoc_check(a, b, c, res)) return res;
        } else {
            for (i64 t = 0; t < samples; ++t) {
                const versln::AlcoveWeight& a = simples[rng() % s];
                const versln::AlcoveWeight& b = simples[rng() % s];
                if (!ring_pair_check(params, a, b, qd, res)) return res;
            }
            for (i64 t = 0; t < samples; ++t) {
                const versln::AlcoveWeight& a = simples[rng() % s];
                const versln::AlcoveWeight& b = simples[rng() % s];
                const versln::AlcoveWeight& c = simples[rng() % s];
                if (!ring_assoc_check(a, b, c, res)) return res;
            }
        }
    }
    return res;
}

SuiteResult sln_count(const std::vector<i64>& primes) {
    SuiteResult res;
    for (i64 p : primes) {
        for (i64 n = 2; n <= p - 1; ++n) {
            versln::SLnParams params(p, n);
            std::vector<versln::AlcoveWeight> simples = versln::enumerate_simples(params);
            i64 expected = binom_i64(p - 1, n - 1);
            if (static_cast<i64>(simples.size()) != expected) {
                res.ok = false;
                res.failure = format("p=", p, ",n=", n, ": ", simples.size(),
                                     " simples, expected C(", p - 1, ",", n - 1, ") = ", expected);
                return res;
            }
            i64 plus = 0;
            for (const versln::AlcoveWeight& w : simples)
                if (versln::is_plus(w)) plus += 1;
            if (plus * n != expected) {
                res.ok = false;
                res.failure = format("p=", p, ",n=", n, ": plus-part count ", plus,
                                     " is not C(p-1,n-1)/n");
                return res;
            }
            res.checked += 2;
        }
    }
    return res;
}

SuiteResult dictionary(const std::vector<i64>& primes) {
    SuiteResult res;
    for (i64 p : primes) {
        versln::SLnParams params(p, 2);
        for (i64 m = 1; m <= p - 1; ++m) {
            for (i64 k = 1; k <= p - 1; ++k) {
                verp::VerpObject vp =
                    verp::fuse(verp::VerpObject::simple(p, m), verp::VerpObject::simple(p, k));
                versln::FusionExpansion sl = versln::fuse_sln(
                    versln::AlcoveWeight(params, {m - 1}), versln::AlcoveWeight(params, {k - 1}));
                bool match = true;
                i64 total = 0;
                for (const auto& [w, mult] : sl) {
                    total += mult;
                    if (vp.mult(w.part(0) + 1) != mult) match = false;
                }
                if (total != verp::length(vp)) match = false;
                if (!match) {
                    res.ok = false;
                    res.failure = format("p=", p, ": dictionary fails on (L", m, ",L", k, ")");
                    return res;
                }
                res.checked += 1;
            }
        }
    }
    return res;
}

SuiteResult stacking(const std::vector<std::pair<i64, i64>>& rings) {
    SuiteResult res;
    for (const auto& [p, n] : rings) {
        versln::SLnParams params(p, n);
        for (const versln::AlcoveWeight& w : versln::enumerate_simples(params)) {
            versln::AlcoveWeight moved = versln::invertible_action(w);
            versln::FusionExpansion g = versln::fuse_sln(versln::generator(params), w);
            if (g.size() != 1 || g.begin()->second != 1 || !(g.begin()->first == moved)) {
                res.ok = false;
                res.failure = format("p=", p, ",n=", n, ": stacking disagrees with fusion at ",
                                     w.to_string());
                return res;
            }
            if (mod_floor(moved.size() - w.size() - (p - n), n) != 0) {
                res.ok = false;
                res.failure = format("p=", p, ",n=", n, ": stacking breaks the grading at ",
                                     w.to_string());
                return res;
            }
            versln::AlcoveWeight orbit = w;
            for (i64 t = 0; t < n; ++t) orbit = versln::invertible_action(orbit);
            if (orbit != w) {
                res.ok = false;
                res.failure = format("p=", p, ",n=", n, ": stacking action is not of order ", n,
                                     " at ", w.to_string());
                return res;
            }
            res.checked += 3;
        }
    }
    return res;
}

SuiteResult padic_roundtrip(u64 seed, i64 samples) {
    SuiteResult res;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<i64, std::vector<i64>>> pool = padic_shape_pool();
    std::vector<glx::GLXShape> shapes;
    for (const auto& [p, mults] : pool) shapes.push_back(glx::build_shape(p, mults));

    for (i64 t = 0; t < samples; ++t) {
        const glx::GLXShape& shape = shapes[static_cast<size_t>(t) % shapes.size()];
        const i64 p = shape.p;
        glx::GWeight lambda = random_dominant(shape, rng, -60, 60);
        auto [low, high] = glx::padic_decompose(lambda);
        std::string tag = format("shape p=", p, " weight #", t);
        if (!glx::is_restricted(low, 1)) {
            res.ok = false;
            res.failure = tag + ": low part not restricted";
            return res;
        }
        if (!glx::is_dominant(high)) {
            res.ok = false;
            res.failure = tag + ": high part not dominant";
            return res;
        }
        for (size_t i = 0; i < lambda.entries.size(); ++i) {
            if (low.entries[i] + p * high.entries[i] != lambda.entries[i]) {
                res.ok = false;
                res.failure = tag + ": decomposition does not reassemble";
                return res;
            }
        }
        for (const glx::GLXShape::Block& block : shape.blocks) {
            i64 last = low.entries[static_cast<size_t>(block.offset + block.size - 1)];
            if (last < 0 || last >= p) {
                res.ok = false;
                res.failure = tag + ": canonical last entry out of [0,p)";
                return res;
            }
        }
        auto [low2, high2] = glx::padic_decompose(low);
        bool high2_zero = std::all_of(high2.entries.begin(), high2.entries.end(),
                                      [](i64 v) { return v == 0; });
        if (low2 != low || !high2_zero) {
            res.ok = false;
            res.failure = tag + ": decomposition of a canonical low part is not the identity";
            return res;
        }
        res.checked += 5;
    }
    return res;
}

SuiteResult factorize_props(u64 seed, i64 samples) {
    SuiteResult res;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<i64, std::vector<i64>>> pool = padic_shape_pool();
    std::vector<glx::GLXShape> shapes;
    for (const auto& [p, mults] : pool) shapes.push_back(glx::build_shape(p, mults));

    for (i64 t = 0; t < samples; ++t) {
        const glx::GLXShape& shape = shapes[static_cast<size_t>(t) % shapes.size()];
        const i64 p = shape.p;
        glx::GWeight lambda = random_dominant(shape, rng, -250, 750);
        glx::VTuple v = random_vtuple(shape, rng);
        glx::SimpleIndex idx(lambda, v);
        glx::Factorization fact = glx::steinberg_factorize(idx);
        std::string tag = format("shape p=", p, " weight #", t);

        if (!glx::is_restricted(fact.base.lambda, 1)) {
            res.ok = false;
            res.failure = tag + ": factor base not restricted";
            return res;
        }
        for (const glx::GWeight& tw : fact.twists) {
            if (!glx::is_restricted(tw, 1)) {
                res.ok = false;
                res.failure = tag + ": twist weight not restricted";
                return res;
            }
        }
        std::vector<i64> total = fact.base.lambda.entries;
        i64 scale = 1;
        for (const glx::GWeight& tw : fact.twists) {
            scale *= p;
            for (size_t i = 0; i < total.size(); ++i) total[i] += scale * tw.entries[i];
        }
        if (total != lambda.entries) {
            res.ok = false;
            res.failure = tag + ": factorization does not reassemble";
            return res;
        }
        if (!(fact.base.v == v)) {
            res.ok = false;
            res.failure = tag + ": odd component not carried to the base";
            return res;
        }
        glx::Factorization again = glx::steinberg_factorize(fact.base);
        if (!again.twists.empty() || again.base.lambda != fact.base.lambda) {
            res.ok = false;
            res.failure = tag + ": engine is not the identity on its own base";
            return res;
        }
        if (!glx::is_restricted(lambda, 1)) {
            glx::SteinbergStep step = glx::steinberg_step(idx);
            glx::Factorization rest = glx::steinberg_factorize(glx::SimpleIndex(step.mu, glx::VTuple(shape)));
            bool consistent = step.base.lambda == fact.base.lambda &&
                              fact.twists.size() == rest.twists.size() + 1 &&
                              fact.twists[0] == rest.base.lambda;
            for (size_t i = 0; consistent && i < rest.twists.size(); ++i)
                consistent = fact.twists[i + 1] == rest.twists[i];
            if (!consistent) {
                res.ok = false;
                res.failure = tag + ": one step then recurse differs from direct factorization";
                return res;
            }
        }
        res.checked += 6;
    }
    return res;
}

SuiteResult sl2_steinberg(const std::vector<i64>& primes) {
    SuiteResult res;
    for (i64 p : primes) {
        for (i64 r = 0; r < p; ++r) {
            charoracle::SL2Module m = charoracle::restricted_simple_sl2(p, r);
            if (m.dim != r + 1) {
                res.ok = false;
                res.failure = format("p=", p, ": dim L(", r, ") = ", m.dim, ", expected ", r + 1);
                return res;
            }
            if (!charoracle::u_simplicity_check(m)) {
                res.ok = false;
                res.failure = format("p=", p, ": L(", r, ") fails its own simplicity check");
                return res;
            }
            res.checked += 2;
        }
        if (charoracle::u_simplicity_check(charoracle::baby_verma_sl2(p, 0))) {
            res.ok = false;
            res.failure = format("p=", p, ": baby Verma of weight 0 passes the simplicity check");
            return res;
        }
        charoracle::SL2Module one = charoracle::restricted_simple_sl2(p, 1);
        if (charoracle::u_simplicity_check(charoracle::direct_sum_sl2(one, one))) {
            res.ok = false;
            res.failure = format("p=", p, ": a direct sum passes the simplicity check");
            return res;
        }
        res.checked += 2;
        for (i64 lam = 0; lam < p * p; ++lam) {
            charoracle::DividedSL2Module m = charoracle::dist2_simple_sl2(p, lam);
            i64 expected = (lam % p + 1) * (lam / p + 1);
            if (m.dim != expected) {
                res.ok = false;
                res.failure = format("p=", p, ": dim of the level-2 simple at ", lam, " is ", m.dim,
                                     ", expected ", expected);
                return res;
            }
            res.checked += 1;
        }
        for (i64 r = 0; r < p; ++r) {
            for (i64 s = 0; s < p; ++s) {
                if (!charoracle::steinberg_sl2_check(p, r, s)) {
                    res.ok = false;
                    res.failure = format("p=", p, ": tensor factorization check fails at (", r, ",",
                                         s, ")");
                    return res;
                }
                res.checked += 1;
            }
        }
    }
    return res;
}

SuiteResult kernel_dims() {
    SuiteResult res;
    // Ordinary GL(m): no odd directions, so the kernel dimension is p^(r m^2).
    for (i64 p : {5, 7}) {
        for (i64 m = 1; m <= 3; ++m) {
            for (i64 r = 1; r <= 2; ++r) {
                glx::GLXShape shape = glx::build_shape(p, {m});
                glx::KernelCoordDims dims = glx::kernel_coord_dims(shape, r);
                if (dims.even_exponent != r * m * m || dims.sym_dims != std::vector<i64>{1}) {
                    res.ok = false;
                    res.failure = format("p=", p, ", X=L1^", m, ", r=", r,
                                         ": ordinary kernel dimensions are off");
                    return res;
                }
                res.checked += 1;
            }
        }
    }

    // Graded sym dimensions against the direct Jordan-model computation of
    // S^d applied to the whole odd part at once.
    for (const auto& [p, mults] : std::vector<std::pair<i64, std::vector<i64>>>{
             {5, {0, 1}}, {5, {1, 1}}, {7, {0, 1}}, {7, {1, 0, 1}}}) {
        glx::GLXShape shape = glx::build_shape(p, mults);
        verp::VerpObject odd(p);
        for (i64 i = 0; i < shape.n; ++i) {
            for (i64 j = 0; j < shape.n; ++j) {
                verp::VerpObject space = verp::fuse(
                    verp::VerpObject::simple(p, shape.labels[static_cast<size_t>(i)]),
                    verp::VerpObject::simple(p, shape.labels[static_cast<size_t>(j)]));
                for (i64 k = 2; k <= p - 1; ++k) odd.add_simple(k, space.mult(k));
            }
        }
        glx::KernelCoordDims dims = glx::kernel_coord_dims(shape, 1);
        verp::JordanModule jodd = jordan_of(odd);
        for (i64 d = 0; d < p; ++d) {
            i64 direct = verp::underlying_dim(verp::semisimplify(verp::sym_power_jordan(jodd, d)));
            i64 listed = d < static_cast<i64>(dims.sym_dims.size())
                             ? dims.sym_dims[static_cast<size_t>(d)]
                             : 0;
            if (direct != listed) {
                res.ok = false;
                res.failure = format("p=", p, ": graded sym dimension at degree ", d,
                                     " is ", listed, ", direct computation gives ", direct);
                return res;
            }
            res.checked += 1;
        }
    }

    // HC-pair content: constructors enforce the unit-multiplicity invariant;
    // spot-check the torus content of gl(L_2) and the root census.
    {
        glx::GLXShape shape = glx::build_shape(5, {0, 1});
        for (auto sel : {glx::SubgroupSelector::full(), glx::SubgroupSelector::torus(),
                         glx::SubgroupSelector::borel(), glx::SubgroupSelector::lower_unipotent(),
                         glx::SubgroupSelector::parabolic(), glx::SubgroupSelector::kernel(1),
                         glx::SubgroupSelector::kernel(2)}) {
            glx::HCPair pair = glx::hc_pair(shape, sel);
            res.checked += 1;
            if (sel.kind == glx::SubgroupSelector::Kind::T) {
                verp::VerpObject want(5);
                want.add_simple(1);
                want.add_simple(3);
                if (pair.content.size() != 1 || !(pair.content.begin()->second == want)) {
                    res.ok = false;
                    res.failure = "torus content of gl(L_2) at p=5 is not L_1 + L_3";
                    return res;
                }
            }
        }
        glx::GLXShape mixed = glx::build_shape(5, {2, 0, 1});
        for (auto sel : {glx::SubgroupSelector::full(), glx::SubgroupSelector::torus(),
                         glx::SubgroupSelector::borel(), glx::SubgroupSelector::lower_unipotent(),
                         glx::SubgroupSelector::parabolic(), glx::SubgroupSelector::kernel(1)}) {
            glx::hc_pair(mixed, sel);
            res.checked += 1;
        }
        std::vector<glx::Root> rts = glx::roots(mixed);
        i64 ordinary = 0;
        for (const glx::Root& rt : rts) ordinary += rt.ordinary ? 1 : 0;
        if (rts.size() != 6 || ordinary != 2) {
            res.ok = false;
            res.failure = "root census of L_1^2 + L_3 at p=5 is off";
            return res;
        }
        res.checked += 1;
    }

    // Frobenius-kernel classes on a weight box: p^(r n) classes per odd
    // component, and equivalence matches the canonical residue.
    {
        glx::GLXShape shape = glx::build_shape(5, {0, 1});  // X = L_2, n = 1
        std::vector<std::vector<i64>> vpool = glx::plus_labels(5, 2);
        for (i64 r = 1; r <= 2; ++r) {
            i64 q = 1;
            for (i64 t = 0; t < r; ++t) q *= 5;
            i64 box = 5 * q;
            std::set<i64> classes;
            for (i64 w = 0; w < box; ++w) classes.insert(mod_floor(w, q));
            if (static_cast<i64>(classes.size()) != q) {
                res.ok = false;
                res.failure = format("kernel level ", r, ": residue census is off");
                return res;
            }
            for (i64 w1 = 0; w1 < box; ++w1) {
                for (i64 w2 = w1; w2 < box; ++w2) {
                    glx::GWeight a(shape, {w1});
                    glx::GWeight b(shape, {w2});
                    glx::VTuple va(shape, {{vpool[0]}});
                    glx::VTuple vb(shape, {{vpool[1 % vpool.size()]}});
                    bool same = glx::frobkernel_equiv(a, va, b, va, r);
                    if (same != (mod_floor(w1, q) == mod_floor(w2, q))) {
                        res.ok = false;
                        res.failure = format("kernel level ", r, ": equivalence at (", w1, ",", w2,
                                             ") disagrees with the residue rule");
                        return res;
                    }
                    if (glx::frobkernel_equiv(a, va, b, vb, r)) {
                        res.ok = false;
                        res.failure = format("kernel level ", r,
                                             ": distinct odd components declared equivalent");
                        return res;
                    }
                    res.checked += 2;
                }
            }
        }
    }
    return res;
}

}  // namespace vercat::verify
