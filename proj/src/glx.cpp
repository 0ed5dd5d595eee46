#include "vercat/glx.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "vercat/versln.hpp"

namespace vercat::glx {

namespace {

i64 checked_prime_power(i64 p, i64 r) {
    if (r < 1) throw std::invalid_argument("kernel level must be positive");
    i64 out = 1;
    for (i64 i = 0; i < r; ++i) {
        if (out > std::numeric_limits<i64>::max() / p)
            throw std::overflow_error("prime power overflows");
        out *= p;
    }
    return out;
}

void check_same_shape(const GLXShape& a, const GLXShape& b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": shapes differ");
}

}  // namespace

GLXShape build_shape(i64 p, std::vector<i64> mults) {
    require_valid_prime(p);
    if (static_cast<i64>(mults.size()) > p - 1)
        throw std::invalid_argument("multiplicity list longer than p-1");
    mults.resize(static_cast<size_t>(p - 1), 0);
    GLXShape shape;
    shape.p = p;
    shape.mults = std::move(mults);
    for (i64 k = 1; k <= p - 1; ++k) {
        i64 nk = shape.mults[static_cast<size_t>(k - 1)];
        if (nk < 0) throw std::invalid_argument("negative multiplicity");
        if (nk == 0) continue;
        shape.blocks.push_back({k, nk, shape.n});
        for (i64 c = 0; c < nk; ++c) {
            shape.labels.push_back(k);
            shape.block_of.push_back(shape.blocks.size() - 1);
        }
        shape.n += nk;
    }
    if (shape.n == 0) throw std::invalid_argument("shape must have a summand");
    return shape;
}

GWeight::GWeight(GLXShape s, std::vector<i64> e) : shape(std::move(s)), entries(std::move(e)) {
    if (static_cast<i64>(entries.size()) != shape.n)
        throw std::invalid_argument("weight length does not match the shape");
}

GWeight zero_weight(const GLXShape& shape) {
    return GWeight(shape, std::vector<i64>(static_cast<size_t>(shape.n), 0));
}

std::vector<Root> roots(const GLXShape& shape) {
    std::vector<Root> out;
    for (i64 i = 0; i < shape.n; ++i) {
        for (i64 j = 0; j < shape.n; ++j) {
            if (i == j) continue;
            i64 li = shape.labels[static_cast<size_t>(i)];
            i64 lj = shape.labels[static_cast<size_t>(j)];
            out.push_back({i, j, li == lj, li, lj});
        }
    }
    return out;
}

verp::VerpObject root_space(const GLXShape& shape, const Root& root) {
    return verp::fuse(verp::VerpObject::simple(shape.p, root.label_i),
                      verp::VerpObject::simple(shape.p, root.label_j));
}

bool is_dominant(const GWeight& lambda) {
    for (const GLXShape::Block& block : lambda.shape.blocks)
        for (i64 i = 0; i + 1 < block.size; ++i)
            if (lambda.entries[static_cast<size_t>(block.offset + i)] <
                lambda.entries[static_cast<size_t>(block.offset + i + 1)])
                return false;
    return true;
}

bool is_restricted(const GWeight& lambda, i64 r) {
    i64 bound = checked_prime_power(lambda.shape.p, r);
    for (const GLXShape::Block& block : lambda.shape.blocks)
        for (i64 i = 0; i + 1 < block.size; ++i) {
            i64 diff = lambda.entries[static_cast<size_t>(block.offset + i)] -
                       lambda.entries[static_cast<size_t>(block.offset + i + 1)];
            if (diff < 0 || diff >= bound) return false;
        }
    return true;
}

std::pair<GWeight, GWeight> padic_decompose(const GWeight& lambda) {
    if (!is_dominant(lambda))
        throw std::invalid_argument("p-adic decomposition needs a dominant weight");
    const i64 p = lambda.shape.p;
    std::vector<i64> low(lambda.entries.size(), 0);
    for (const GLXShape::Block& block : lambda.shape.blocks) {
        size_t last = static_cast<size_t>(block.offset + block.size - 1);
        low[last] = mod_floor(lambda.entries[last], p);
        for (i64 i = block.size - 2; i >= 0; --i) {
            size_t idx = static_cast<size_t>(block.offset + i);
            low[idx] = low[idx + 1] + mod_floor(lambda.entries[idx] - low[idx + 1], p);
        }
    }
    std::vector<i64> high(lambda.entries.size(), 0);
    for (size_t i = 0; i < low.size(); ++i) {
        i64 diff = lambda.entries[i] - low[i];
        if (diff % p != 0) throw std::logic_error("p-adic remainder not divisible by p");
        high[i] = diff / p;
    }
    GWeight lambda0(lambda.shape, std::move(low));
    GWeight mu(lambda.shape, std::move(high));
    if (!is_restricted(lambda0, 1)) throw std::logic_error("low part is not restricted");
    if (!is_dominant(mu)) throw std::logic_error("high part is not dominant");
    return {std::move(lambda0), std::move(mu)};
}

VTuple::VTuple(const GLXShape& shape) : shape_(shape) {
    for (const GLXShape::Block& block : shape_.blocks)
        labels_.emplace_back(static_cast<size_t>(block.size));
}

VTuple::VTuple(const GLXShape& shape, std::vector<std::vector<std::vector<i64>>> labels)
    : shape_(shape), labels_(std::move(labels)) {
    if (labels_.size() != shape_.blocks.size())
        throw std::invalid_argument("one label list per block required");
    for (size_t b = 0; b < labels_.size(); ++b) {
        const GLXShape::Block& block = shape_.blocks[b];
        if (static_cast<i64>(labels_[b].size()) != block.size)
            throw std::invalid_argument("one label per summand copy required");
        for (std::vector<i64>& parts : labels_[b]) {
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            if (block.label == 1) {
                if (!parts.empty())
                    throw std::invalid_argument("blocks with label 1 only admit the trivial label");
                continue;
            }
            versln::AlcoveWeight w(versln::SLnParams(shape_.p, block.label), parts);
            if (!versln::is_plus(w))
                throw std::invalid_argument("per-copy labels must lie in the plus part");
            parts = w.parts();
        }
    }
}

bool VTuple::is_trivial() const {
    for (const auto& block : labels_)
        for (const auto& parts : block)
            if (!parts.empty()) return false;
    return true;
}

bool VTuple::operator==(const VTuple& rhs) const {
    return shape_ == rhs.shape_ && labels_ == rhs.labels_;
}

std::vector<std::vector<i64>> plus_labels(i64 p, i64 k) {
    require_valid_prime(p);
    if (k < 1 || k >= p) throw std::invalid_argument("label out of range");
    if (k == 1) return {{}};
    std::vector<std::vector<i64>> out;
    for (const versln::AlcoveWeight& w : versln::enumerate_simples(versln::SLnParams(p, k)))
        if (versln::is_plus(w)) out.push_back(w.parts());
    return out;
}

SimpleIndex::SimpleIndex(GWeight l, VTuple vt) : lambda(std::move(l)), v(std::move(vt)) {
    check_same_shape(lambda.shape, v.shape(), "simple index");
    if (!is_dominant(lambda))
        throw std::invalid_argument("simple index needs a dominant weight");
}

SteinbergStep steinberg_step(const SimpleIndex& idx) {
    auto [lambda0, mu] = padic_decompose(idx.lambda);
    return {SimpleIndex(std::move(lambda0), idx.v), std::move(mu)};
}

Factorization steinberg_factorize(const SimpleIndex& idx) {
    if (is_restricted(idx.lambda, 1)) return {idx, {}};
    SteinbergStep step = steinberg_step(idx);
    Factorization out{std::move(step.base), {}};
    GWeight mu = std::move(step.mu);
    for (;;) {
        if (is_restricted(mu, 1)) {
            out.twists.push_back(std::move(mu));
            break;
        }
        auto [mu0, next] = padic_decompose(mu);
        out.twists.push_back(std::move(mu0));
        mu = std::move(next);
    }
    // Reassembly guard: base + sum of p^i * twists[i-1] must recover lambda.
    std::vector<i64> total = out.base.lambda.entries;
    i64 scale = 1;
    for (const GWeight& tw : out.twists) {
        scale *= idx.lambda.shape.p;
        for (size_t i = 0; i < total.size(); ++i) total[i] += scale * tw.entries[i];
    }
    if (total != idx.lambda.entries)
        throw std::logic_error("factorization failed to reassemble");
    return out;
}

bool frobkernel_equiv(const GWeight& la, const VTuple& va,
                      const GWeight& lb, const VTuple& vb, i64 r) {
    check_same_shape(la.shape, lb.shape, "kernel comparison");
    check_same_shape(la.shape, va.shape(), "kernel comparison");
    check_same_shape(lb.shape, vb.shape(), "kernel comparison");
    i64 q = checked_prime_power(la.shape.p, r);
    for (size_t i = 0; i < la.entries.size(); ++i)
        if ((la.entries[i] - lb.entries[i]) % q != 0) return false;
    return va == vb;
}

SubgroupSelector SubgroupSelector::kernel(i64 r) {
    if (r < 1) throw std::invalid_argument("kernel level must be positive");
    return {Kind::Kernel, r};
}

HCPair hc_pair(const GLXShape& shape, const SubgroupSelector& selector) {
    using Kind = SubgroupSelector::Kind;
    HCPair out;
    out.selector = selector;

    for (const GLXShape::Block& block : shape.blocks) {
        std::ostringstream name;
        i64 nk = block.size;
        i64 dim = 0;
        switch (selector.kind) {
            case Kind::G:
                name << "GL(" << nk << ")";
                dim = nk * nk;
                break;
            case Kind::T:
                name << "T(" << nk << ")";
                dim = nk;
                break;
            case Kind::B:
                name << "B(" << nk << ")";
                dim = nk * (nk + 1) / 2;
                break;
            case Kind::Nminus:
                name << "N-(" << nk << ")";
                dim = nk * (nk - 1) / 2;
                break;
            case Kind::P:
                name << "GL(" << nk << ")";
                dim = nk * nk;
                break;
            case Kind::Kernel:
                name << "GL(" << nk << ")_(" << selector.level << ")";
                dim = nk * nk;
                break;
        }
        out.even_factors.push_back(name.str());
        out.even_block_dims.push_back(dim);
        out.even_dim += dim;
    }

    auto keep = [&](i64 i, i64 j) {
        bool same_block = shape.block_of[static_cast<size_t>(i)] ==
                          shape.block_of[static_cast<size_t>(j)];
        switch (selector.kind) {
            case Kind::G:
            case Kind::Kernel:
                return true;
            case Kind::T:
                return i == j;
            case Kind::B:
                return i <= j;
            case Kind::Nminus:
                return i > j;
            case Kind::P:
                return i <= j || same_block;
        }
        return false;
    };

    for (i64 i = 0; i < shape.n; ++i) {
        for (i64 j = 0; j < shape.n; ++j) {
            if (!keep(i, j)) continue;
            verp::VerpObject space =
                verp::fuse(verp::VerpObject::simple(shape.p, shape.labels[static_cast<size_t>(i)]),
                           verp::VerpObject::simple(shape.p, shape.labels[static_cast<size_t>(j)]));
            out.unit_multiplicity += space.mult(1);
            out.content.emplace(std::make_pair(i, j), std::move(space));
        }
    }

    if (out.unit_multiplicity != out.even_dim)
        throw std::logic_error("unit-isotypic content does not match the even group");
    return out;
}

KernelCoordDims kernel_coord_dims(const GLXShape& shape, i64 r) {
    if (r < 1) throw std::invalid_argument("kernel level must be positive");
    verp::VerpObject total(shape.p);
    for (i64 i = 0; i < shape.n; ++i)
        for (i64 j = 0; j < shape.n; ++j)
            total = total + verp::fuse(
                                verp::VerpObject::simple(shape.p, shape.labels[static_cast<size_t>(i)]),
                                verp::VerpObject::simple(shape.p, shape.labels[static_cast<size_t>(j)]));

    i64 even_dim = 0;
    for (const GLXShape::Block& block : shape.blocks) even_dim += block.size * block.size;
    if (total.mult(1) != even_dim)
        throw std::logic_error("unit-isotypic part of gl(X) has the wrong dimension");

    verp::VerpObject odd_part(shape.p);
    for (i64 k = 2; k <= shape.p - 1; ++k) odd_part.add_simple(k, total.mult(k));

    KernelCoordDims out;
    out.even_exponent = r * even_dim;
    for (const verp::VerpObject& graded : verp::sym_algebra_dims(odd_part))
        out.sym_dims.push_back(verp::underlying_dim(graded));
    return out;
}

}  // namespace vercat::glx
