// vercat: exact fusion-ring and Steinberg-factorization calculator.
//
// stdout carries one JSON document per invocation (the payload, or a
// status envelope under --json); stderr carries human-readable annotations
// and diagnostics. Exit codes: 0 ok, 1 property violation, 2 input error.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vercat/charoracle.hpp"
#include "vercat/glx.hpp"
#include "vercat/json_io.hpp"
#include "vercat/qcyclo.hpp"
#include "vercat/verify.hpp"
#include "vercat/verp.hpp"
#include "vercat/versln.hpp"

namespace {

using vercat::i64;
using vercat::u64;
using vercat::json_io::json;

struct Options {
    bool as_json = false;
    i64 p = 0;
    i64 n = 0;
    i64 level = 1;
    i64 m_idx = 0, n_idx = 0;
    std::string lambda_text, mu_text, weight_text, shape_text, vtuple_text;
    std::string suite, p_list, n_list, cache_path;
    u64 seed = 42;
    i64 samples = -1;
};

int emit_ok(const json& payload, bool as_json) {
    if (as_json) {
        json envelope;
        envelope["status"] = "ok";
        envelope["payload"] = payload;
        std::cout << envelope.dump() << "\n";
    } else {
        std::cout << payload.dump() << "\n";
    }
    return 0;
}

int emit_input_error(const std::string& message, bool as_json) {
    std::cerr << "error: " << message << "\n";
    if (as_json) {
        json envelope;
        envelope["status"] = "input-error";
        envelope["error"] = message;
        std::cout << envelope.dump() << "\n";
    }
    return 2;
}

int emit_violation(const json& payload, const std::string& message, bool as_json) {
    std::cerr << "property violation: " << message << "\n";
    if (as_json) {
        json envelope;
        envelope["status"] = "property-violation";
        envelope["payload"] = payload;
        std::cout << envelope.dump() << "\n";
    } else if (!payload.is_null()) {
        std::cout << payload.dump() << "\n";
    }
    return 1;
}

int run_fuse(const Options& opt) {
    vercat::verp::VerpObject result =
        vercat::verp::fuse(vercat::verp::VerpObject::simple(opt.p, opt.m_idx),
                           vercat::verp::VerpObject::simple(opt.p, opt.n_idx));
    std::cerr << "# qdim ~= " << vercat::verp::qdim(result).to_float()
              << ", fpdim = " << vercat::verp::fpdim(result) << "\n";
    return emit_ok(vercat::json_io::verp_to_json(result), opt.as_json);
}

int run_sln_fuse(const Options& opt) {
    vercat::versln::SLnParams params(opt.p, opt.n);
    vercat::versln::AlcoveWeight a(params, vercat::json_io::parse_parts(opt.lambda_text));
    vercat::versln::AlcoveWeight b(params, vercat::json_io::parse_parts(opt.mu_text));
    vercat::versln::FusionExpansion result = vercat::versln::fuse_sln(a, b);
    return emit_ok(vercat::json_io::sln_to_json(result), opt.as_json);
}

int run_decompose(const Options& opt) {
    vercat::glx::GLXShape shape = vercat::json_io::parse_shape(opt.p, opt.shape_text);
    vercat::glx::GWeight lambda = vercat::json_io::weight_from_string(shape, opt.weight_text);
    auto [base, mu] = vercat::glx::padic_decompose(lambda);
    return emit_ok(vercat::json_io::decompose_to_json(base, mu), opt.as_json);
}

int run_factorize(const Options& opt) {
    vercat::glx::GLXShape shape = vercat::json_io::parse_shape(opt.p, opt.shape_text);
    vercat::glx::GWeight lambda = vercat::json_io::weight_from_string(shape, opt.weight_text);
    vercat::glx::VTuple v = opt.vtuple_text.empty()
                                ? vercat::glx::VTuple(shape)
                                : vercat::json_io::vtuple_from_string(shape, opt.vtuple_text);
    vercat::glx::Factorization fact =
        vercat::glx::steinberg_factorize(vercat::glx::SimpleIndex(lambda, v));
    return emit_ok(vercat::json_io::factorization_to_json(fact), opt.as_json);
}

int run_kernel_dim(const Options& opt) {
    vercat::glx::GLXShape shape = vercat::json_io::parse_shape(opt.p, opt.shape_text);
    vercat::glx::KernelCoordDims dims = vercat::glx::kernel_coord_dims(shape, opt.level);
    return emit_ok(vercat::json_io::kernel_dims_to_json(dims), opt.as_json);
}

std::vector<i64> parse_list(const std::string& text, std::vector<i64> fallback) {
    if (text.empty()) return fallback;
    return vercat::json_io::parse_parts(text);
}

std::vector<std::pair<i64, i64>> make_rings(const std::string& p_list, const std::string& n_list,
                                            std::vector<std::pair<i64, i64>> fallback) {
    if (p_list.empty()) return fallback;
    std::vector<i64> ps = vercat::json_io::parse_parts(p_list);
    std::vector<i64> ns = n_list.empty() ? std::vector<i64>{2, 3, 4}
                                         : vercat::json_io::parse_parts(n_list);
    std::vector<std::pair<i64, i64>> out;
    for (i64 p : ps)
        for (i64 n : ns)
            if (n >= 2 && n < p) out.emplace_back(p, n);
    if (out.empty()) throw std::invalid_argument("no valid (p, n) pairs selected");
    return out;
}

vercat::verify::SuiteResult run_one_suite(const std::string& name, const Options& opt) {
    using namespace vercat::verify;
    i64 samples = opt.samples;
    if (name == "verp-oracle")
        return verp_oracle(parse_list(opt.p_list, {5, 7, 11, 13}));
    if (name == "qdim-hom")
        return qdim_hom(parse_list(opt.p_list, {5, 7, 11, 13}));
    if (name == "sln-ring")
        return sln_ring(make_rings(opt.p_list, opt.n_list,
                                   {{5, 2}, {5, 3}, {7, 2}, {7, 3}, {7, 4}, {11, 3}, {11, 4}, {13, 3}}),
                        opt.seed, samples < 0 ? 500 : samples);
    if (name == "sln-count")
        return sln_count(parse_list(opt.p_list, {5, 7, 11, 13}));
    if (name == "dictionary")
        return dictionary(parse_list(opt.p_list, {5, 7, 11}));
    if (name == "stacking")
        return stacking(make_rings(opt.p_list, opt.n_list,
                                   {{5, 2}, {5, 3}, {5, 4}, {7, 2}, {7, 3}, {7, 4}, {7, 5}, {7, 6},
                                    {11, 2}, {11, 3}, {11, 4}, {11, 5},
                                    {13, 2}, {13, 3}, {13, 4}, {13, 5}}));
    if (name == "padic")
        return padic_roundtrip(opt.seed, samples < 0 ? 2000 : samples);
    if (name == "factorize")
        return factorize_props(opt.seed, samples < 0 ? 1000 : samples);
    if (name == "sl2-steinberg")
        return sl2_steinberg(parse_list(opt.p_list, {5}));
    if (name == "kernel-dims")
        return kernel_dims();
    throw std::invalid_argument("unknown suite: '" + name + "'");
}

int run_verify(const Options& opt) {
    const std::vector<std::string> all_suites = {
        "verp-oracle", "qdim-hom",  "sln-ring",      "sln-count",   "dictionary",
        "stacking",    "padic",     "factorize",     "sl2-steinberg", "kernel-dims"};

    if (opt.suite == "all") {
        json suites = json::object();
        i64 total = 0;
        for (const std::string& name : all_suites) {
            vercat::verify::SuiteResult result = run_one_suite(name, opt);
            json entry;
            entry["ok"] = result.ok;
            entry["checked"] = result.checked;
            if (!result.ok) entry["failure"] = result.failure;
            suites[name] = std::move(entry);
            total += result.checked;
            if (!result.ok) {
                json payload;
                payload["suite"] = name;
                payload["ok"] = false;
                payload["checked"] = result.checked;
                payload["failure"] = result.failure;
                return emit_violation(payload, name + ": " + result.failure, opt.as_json);
            }
            std::cerr << "# " << name << ": ok, " << result.checked << " checks\n";
        }
        json payload;
        payload["suite"] = "all";
        payload["ok"] = true;
        payload["checked"] = total;
        payload["suites"] = std::move(suites);
        return emit_ok(payload, opt.as_json);
    }

    vercat::verify::SuiteResult result = run_one_suite(opt.suite, opt);
    json payload;
    payload["suite"] = opt.suite;
    payload["ok"] = result.ok;
    payload["checked"] = result.checked;
    if (!result.ok) {
        payload["failure"] = result.failure;
        return emit_violation(payload, result.failure, opt.as_json);
    }
    return emit_ok(payload, opt.as_json);
}

void load_cache(const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in.good()) return;  // absent cache files are fine
    json j;
    in >> j;
    vercat::versln::fusion_cache_load(vercat::json_io::cache_from_json(j));
}

void save_cache(const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    out << vercat::json_io::cache_to_json(vercat::versln::fusion_cache_snapshot()).dump() << "\n";
    if (!out.good()) std::cerr << "warning: could not write cache file '" << path << "'\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fusion rings, p-adic weight decomposition and Steinberg factorization"};
    app.require_subcommand(1);
    // Let global flags (--json) appear after the subcommand and its arguments.
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.as_json, "wrap output in a {status, payload} envelope");

    CLI::App* fuse = app.add_subcommand("fuse", "fuse two simple objects L_m (x) L_n");
    fuse->add_option("-p", opt.p, "odd prime >= 5")->required();
    fuse->add_option("m", opt.m_idx, "first simple index")->required();
    fuse->add_option("n", opt.n_idx, "second simple index")->required();

    CLI::App* sln = app.add_subcommand("sln-fuse", "fuse two alcove weights");
    sln->add_option("-p", opt.p, "odd prime >= 5")->required();
    sln->add_option("-n", opt.n, "rank parameter, 2 <= n < p")->required();
    sln->add_option("lambda", opt.lambda_text, "partition, e.g. 2,1 (0 for the unit)")->required();
    sln->add_option("mu", opt.mu_text, "partition")->required();
    sln->add_option("--cache", opt.cache_path, "fusion memo file (created if absent)");

    CLI::App* dec = app.add_subcommand("decompose", "canonical p-adic weight decomposition");
    dec->add_option("-p", opt.p, "odd prime >= 5")->required();
    dec->add_option("--shape", opt.shape_text, "summand list, e.g. L1:2,L3:1")->required();
    dec->add_option("weight", opt.weight_text, "block weight, e.g. 12,3|0")->required();

    CLI::App* fac = app.add_subcommand("factorize", "iterated Steinberg factorization");
    fac->add_option("-p", opt.p, "odd prime >= 5")->required();
    fac->add_option("--shape", opt.shape_text, "summand list, e.g. L1:2,L3:1")->required();
    fac->add_option("weight", opt.weight_text, "block weight, e.g. 31,0")->required();
    fac->add_option("--v", opt.vtuple_text,
                    "odd component: blocks '|', copies ';', parts ',', '-' for trivial");

    CLI::App* ker = app.add_subcommand("kernel-dim", "Frobenius-kernel coordinate-ring dimensions");
    ker->add_option("-p", opt.p, "odd prime >= 5")->required();
    ker->add_option("--shape", opt.shape_text, "summand list, e.g. L1:1,L2:1")->required();
    ker->add_option("-r", opt.level, "kernel level, default 1");

    CLI::App* ver = app.add_subcommand("verify", "run a property suite");
    ver->add_option("suite", opt.suite,
                    "one of: verp-oracle, qdim-hom, sln-ring, sln-count, dictionary, stacking, "
                    "padic, factorize, sl2-steinberg, kernel-dims, all")
        ->required();
    ver->add_option("-p", opt.p_list, "comma-separated primes");
    ver->add_option("-n", opt.n_list, "comma-separated ranks");
    ver->add_option("--seed", opt.seed, "seed for sampled suites");
    ver->add_option("--samples", opt.samples, "sample count for sampled suites");
    ver->add_option("--cache", opt.cache_path, "fusion memo file (created if absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        load_cache(opt.cache_path);
        int code = 2;
        if (fuse->parsed()) code = run_fuse(opt);
        else if (sln->parsed()) code = run_sln_fuse(opt);
        else if (dec->parsed()) code = run_decompose(opt);
        else if (fac->parsed()) code = run_factorize(opt);
        else if (ker->parsed()) code = run_kernel_dim(opt);
        else if (ver->parsed()) code = run_verify(opt);
        save_cache(opt.cache_path);
        return code;
    } catch (const std::invalid_argument& e) {
        return emit_input_error(e.what(), opt.as_json);
    } catch (const std::domain_error& e) {
        return emit_input_error(e.what(), opt.as_json);
    } catch (const std::exception& e) {
        return emit_violation(json(), e.what(), opt.as_json);
    }
}
