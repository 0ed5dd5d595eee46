// Acceptance gate: one line per criterion, PASS/FAIL/SKIP, nonzero exit on
// any FAIL. Runtime bounds and parameter ranges are pinned here so the gate
// is self-contained and reproducible.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "vercat/charoracle.hpp"
#include "vercat/glx.hpp"
#include "vercat/verify.hpp"
#include "vercat/verp.hpp"
#include "vercat/versln.hpp"

using vercat::i64;
using vercat::u64;
namespace vf = vercat::verify;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

void report(int number, bool pass, const std::string& text) {
    std::printf("CRITERION %2d: %s — %s\n", number, pass ? "PASS" : "FAIL",
                text.c_str());
    if (!pass) ++failures;
}

void report_skip(int number, const std::string& text) {
    std::printf("CRITERION %2d: SKIP — %s\n", number, text.c_str());
}

std::string stats(const vf::SuiteResult& r, double secs) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%lld checks in %.2fs",
                  static_cast<long long>(r.checked), secs);
    std::string out = buf;
    if (!r.ok) out += "; first failure: " + r.failure;
    return out;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const std::vector<i64> primes{5, 7, 11, 13};
    const u64 seed = 42;

    {  // 1. Fusion rule equals the Jordan-block tensor oracle; < 30 s.
        const auto t0 = clock::now();
        const vf::SuiteResult r = vf::verp_oracle(primes);
        const double secs = seconds_since(t0);
        report(1, r.ok && secs < 30.0,
               "fusion equals the brute-force Jordan oracle for p in {5,7,11,13} (" +
                   stats(r, secs) + ", bound 30s)");
    }

    {  // 2. qdim/fpdim are ring homomorphisms; untruncated dimension m*n.
        const auto t0 = clock::now();
        const vf::SuiteResult r = vf::qdim_hom(primes);
        report(2, r.ok,
               "quantum and mod-p dimensions are exact fusion homomorphisms, with "
               "underlying dimension m*n below the truncation threshold (" +
                   stats(r, seconds_since(t0)) + ")");
    }

    {  // 3. SL(n) ring axioms: exhaustive small rings, sampled large ones; < 2 min.
        const auto t0 = clock::now();
        const std::vector<std::pair<i64, i64>> rings{
            {5, 2}, {5, 3}, {7, 2}, {7, 3}, {7, 4}, {11, 3}, {11, 4}, {13, 3}};
        const vf::SuiteResult r = vf::sln_ring(rings, seed, 500);
        const double secs = seconds_since(t0);
        report(3, r.ok && secs < 120.0,
               "ring axioms hold: associativity exhaustive up to 20 simples, 500 "
               "seeded triples beyond; unit/duality/grading exhaustive (" +
                   stats(r, secs) + ", bound 120s)");
    }

    {  // 4. Simple counts C(p-1,n-1), plus-part counts /n.
        const auto t0 = clock::now();
        const vf::SuiteResult r = vf::sln_count({5, 7});
        const bool example =
            vercat::versln::enumerate_simples(vercat::versln::SLnParams(5, 3)).size() == 6;
        report(4, r.ok && example,
               "simple counts are C(p-1,n-1) and plus-part counts C(p-1,n-1)/n for "
               "every ring with p in {5,7} (" + stats(r, seconds_since(t0)) + ")");
    }

    {  // 5. n=2 dictionary onto the base fusion ring.
        const auto t0 = clock::now();
        const vf::SuiteResult r = vf::dictionary({5, 7, 11});
        report(5, r.ok,
               "the n=2 ring matches base fusion under L_k <-> (k-1) exhaustively "
               "for p in {5,7,11} (" + stats(r, seconds_since(t0)) + ")");
    }

    {  // 6. Stacking rule agrees with generator fusion on every simple.
        const auto t0 = clock::now();
        const std::vector<std::pair<i64, i64>> rings{{5, 2}, {5, 3}, {7, 2}, {7, 3}, {7, 4}};
        const vf::SuiteResult r = vf::stacking(rings);
        report(6, r.ok,
               "the column-deletion stacking action equals generator fusion with "
               "multiplicity one on every simple (" + stats(r, seconds_since(t0)) + ")");
    }

    {  // 7. p-adic round-trip and factorization properties, 10^4 seeded weights.
        const auto t0 = clock::now();
        const vf::SuiteResult r1 = vf::padic_roundtrip(seed, 10000);
        const vf::SuiteResult r2 = vf::factorize_props(seed, 10000);
        const double secs = seconds_since(t0);
        const vf::SuiteResult& bad = r1.ok ? r2 : r1;
        report(7, r1.ok && r2.ok,
               "10^4 seeded weights over a 6-shape pool round-trip the p-adic "
               "splitting, and factorization reassembles, stays restricted, "
               "preserves the odd label and is idempotent (" + stats(bad, secs) + ")");
    }

    {  // 8. Quantitative Steinberg reproduction for sl2; p=5 under 60 s.
        const auto t0 = clock::now();
        const vf::SuiteResult r5 = vf::sl2_steinberg({5});
        const double secs5 = seconds_since(t0);
        const auto t1 = clock::now();
        const vf::SuiteResult r7 = vf::sl2_steinberg({7});
        const double secs7 = seconds_since(t1);
        std::string text =
            "level-2 simple dimensions are (a+1)(b+1) and the tensor-vs-direct "
            "comparison passes on all 25 pairs at p=5";
        char timing[128];
        std::snprintf(timing, sizeof timing, " (%.2fs, bound 60s; p=7 extension %.2fs)",
                      secs5, secs7);
        report(8, r5.ok && r7.ok && secs5 < 60.0, text + timing);
    }

    {  // 9. Character-level factorization identity on a GL(2) box, >= 100 weights.
        const auto t0 = clock::now();
        const vercat::glx::GLXShape gl2 = vercat::glx::build_shape(5, {2});
        i64 count = 0;
        bool ok = true;
        for (i64 b = 0; b <= 3 && ok; ++b) {
            for (i64 diff = 0; diff < 25 && ok; ++diff) {
                const vercat::glx::GWeight w(gl2, {b + diff, b});
                ok = vercat::charoracle::verify_factorization_chars(w);
                ++count;
            }
        }
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "exact character equality ch L = ch base * dilated twists on "
                      "%lld GL(2) weights at p=5 (%.2fs)",
                      static_cast<long long>(count), seconds_since(t0));
        report(9, ok && count >= 100, buf);
    }

    {  // 10. Kernel coordinate ring dimensions.
        const auto t0 = clock::now();
        bool ok = true;
        std::string why;
        // Ordinary case: O(G_(r)) has dimension p^(r m^2) and no odd factors.
        for (i64 p : {i64{5}, i64{7}}) {
            for (i64 m = 1; m <= 3; ++m) {
                for (i64 r = 1; r <= 2; ++r) {
                    std::vector<i64> mults{m};
                    const auto d = vercat::glx::kernel_coord_dims(
                        vercat::glx::build_shape(p, mults), r);
                    if (d.even_exponent != r * m * m || d.sym_dims != std::vector<i64>{1}) {
                        ok = false;
                        why = "ordinary shape disagrees with p^(r m^2)";
                    }
                }
            }
        }
        // Factored outputs are stable and satisfy the sum-to-product rule.
        using vercat::verp::VerpObject;
        using vercat::verp::sym_algebra_dims;
        using vercat::verp::underlying_dim;
        // S(A (+) B) = S(A) (x) S(B) degreewise; the product is the fusion
        // product, so dims convolve through fuse, not as plain integers.
        const auto conv_check = [&](const VerpObject& a, const VerpObject& b) {
            const auto da = sym_algebra_dims(a);
            const auto db = sym_algebra_dims(b);
            const auto dsum = sym_algebra_dims(a + b);
            std::vector<i64> conv(da.size() + db.size() - 1, 0);
            for (size_t i = 0; i < da.size(); ++i)
                for (size_t j = 0; j < db.size(); ++j)
                    conv[i + j] += underlying_dim(vercat::verp::fuse(da[i], db[j]));
            while (!conv.empty() && conv.back() == 0) conv.pop_back();
            std::vector<i64> direct;
            for (const VerpObject& o : dsum) direct.push_back(underlying_dim(o));
            while (!direct.empty() && direct.back() == 0) direct.pop_back();
            if (direct != conv) {
                ok = false;
                why = "symmetric algebra of a sum is not the convolution";
            }
        };
        // Odd parts of gl(X) for X = L2 and X = L1 (+) L2 at p=5.
        VerpObject l3(5), l2sq(5);
        l3.add_simple(3);
        l2sq.add_simple(2, 2);
        conv_check(l3, l2sq);
        const auto once = vercat::glx::kernel_coord_dims(vercat::glx::build_shape(5, {1, 1}), 1);
        const auto twice = vercat::glx::kernel_coord_dims(vercat::glx::build_shape(5, {1, 1}), 1);
        if (once.even_exponent != twice.even_exponent || once.sym_dims != twice.sym_dims) {
            ok = false;
            why = "repeated runs disagree";
        }
        const vf::SuiteResult r = vf::kernel_dims();
        if (!r.ok) {
            ok = false;
            why = r.failure;
        }
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "coordinate rings of kernels: p^(r m^2) for unit shapes over "
                      "p in {5,7}, convolution-consistent and stable factored output "
                      "for L2 and L1+L2 at p=5 (%.2fs)%s%s",
                      seconds_since(t0), ok ? "" : "; ", why.c_str());
        report(10, ok, buf);
    }

    // 11. Boundary of what is verifiable without a module engine.
    report_skip(11,
                "the odd component of the simple-module classification is exercised "
                "only as index bookkeeping (criteria 4, 7) and even-block character "
                "identities (criterion 9); verifying those module isomorphisms "
                "directly would need a module engine over the ambient category, "
                "which this artifact deliberately does not include");

    if (failures == 0) std::printf("ACCEPTANCE: all criteria passed (1 documented skip)\n");
    else std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
