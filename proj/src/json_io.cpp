#include "vercat/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace vercat::json_io {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

i64 parse_int(const std::string& text) {
    size_t used = 0;
    i64 value;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
    return value;
}

}  // namespace

json verp_to_json(const verp::VerpObject& a) {
    json out = json::object();
    for (i64 k = 1; k <= a.p() - 1; ++k) {
        i64 m = a.mult(k);
        if (m > 0) out["L" + std::to_string(k)] = m;
    }
    return out;
}

verp::VerpObject verp_from_json(i64 p, const json& j) {
    verp::VerpObject out(p);
    if (!j.is_object()) throw std::invalid_argument("expected an object of L<k> multiplicities");
    for (const auto& [key, value] : j.items()) {
        if (key.size() < 2 || key[0] != 'L')
            throw std::invalid_argument("bad simple label: '" + key + "'");
        out.add_simple(parse_int(key.substr(1)), value.get<i64>());
    }
    return out;
}

json sln_to_json(const versln::FusionExpansion& e) {
    json out = json::object();
    for (const auto& [weight, mult] : e) out[weight.to_string()] = mult;
    return out;
}

versln::FusionExpansion sln_from_json(const versln::SLnParams& params, const json& j) {
    versln::FusionExpansion out;
    if (!j.is_object()) throw std::invalid_argument("expected an object of weight multiplicities");
    for (const auto& [key, value] : j.items()) {
        if (key.size() < 2 || key.front() != '(' || key.back() != ')')
            throw std::invalid_argument("bad weight key: '" + key + "'");
        std::string inner = key.substr(1, key.size() - 2);
        out.emplace(versln::AlcoveWeight(params, parse_parts(inner)), value.get<i64>());
    }
    return out;
}

std::string parts_to_string(const std::vector<i64>& parts) {
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i];
    }
    return out.str();
}

std::vector<i64> parse_parts(const std::string& text) {
    if (text.empty()) return {};
    std::vector<i64> out;
    for (const std::string& piece : split(text, ',')) out.push_back(parse_int(piece));
    return out;
}

std::string weight_to_string(const glx::GWeight& w) {
    std::ostringstream out;
    for (size_t b = 0; b < w.shape.blocks.size(); ++b) {
        const glx::GLXShape::Block& block = w.shape.blocks[b];
        if (b) out << '|';
        for (i64 i = 0; i < block.size; ++i) {
            if (i) out << ',';
            out << w.entries[static_cast<size_t>(block.offset + i)];
        }
    }
    return out.str();
}

glx::GWeight weight_from_string(const glx::GLXShape& shape, const std::string& text) {
    std::vector<std::string> block_texts = split(text, '|');
    if (block_texts.size() != shape.blocks.size())
        throw std::invalid_argument("weight has the wrong number of blocks");
    std::vector<i64> entries;
    for (size_t b = 0; b < block_texts.size(); ++b) {
        std::vector<i64> vals = parse_parts(block_texts[b]);
        if (static_cast<i64>(vals.size()) != shape.blocks[b].size)
            throw std::invalid_argument("block " + std::to_string(b + 1) +
                                        " has the wrong number of entries");
        entries.insert(entries.end(), vals.begin(), vals.end());
    }
    return glx::GWeight(shape, std::move(entries));
}

glx::GLXShape parse_shape(i64 p, const std::string& text) {
    std::vector<i64> mults(static_cast<size_t>(p - 1), 0);
    if (text.empty()) throw std::invalid_argument("empty shape");
    for (const std::string& piece : split(text, ',')) {
        if (piece.size() < 2 || piece[0] != 'L')
            throw std::invalid_argument("bad shape item: '" + piece + "'");
        std::string body = piece.substr(1);
        i64 label, count = 1;
        size_t colon = body.find(':');
        if (colon == std::string::npos) {
            label = parse_int(body);
        } else {
            label = parse_int(body.substr(0, colon));
            count = parse_int(body.substr(colon + 1));
        }
        if (label < 1 || label > p - 1)
            throw std::invalid_argument("shape label out of range: '" + piece + "'");
        if (count < 1) throw std::invalid_argument("shape multiplicity must be positive");
        mults[static_cast<size_t>(label - 1)] += count;
    }
    return glx::build_shape(p, std::move(mults));
}

std::string vtuple_to_string(const glx::VTuple& v) {
    std::ostringstream out;
    for (size_t b = 0; b < v.labels().size(); ++b) {
        if (b) out << '|';
        for (size_t c = 0; c < v.labels()[b].size(); ++c) {
            if (c) out << ';';
            const std::vector<i64>& parts = v.labels()[b][c];
            out << (parts.empty() ? "-" : parts_to_string(parts));
        }
    }
    return out.str();
}

glx::VTuple vtuple_from_string(const glx::GLXShape& shape, const std::string& text) {
    std::vector<std::string> block_texts = split(text, '|');
    if (block_texts.size() != shape.blocks.size())
        throw std::invalid_argument("odd component has the wrong number of blocks");
    std::vector<std::vector<std::vector<i64>>> labels;
    for (const std::string& block_text : block_texts) {
        std::vector<std::vector<i64>> copies;
        for (const std::string& copy_text : split(block_text, ';'))
            copies.push_back(copy_text == "-" ? std::vector<i64>{} : parse_parts(copy_text));
        labels.push_back(std::move(copies));
    }
    return glx::VTuple(shape, std::move(labels));
}

json decompose_to_json(const glx::GWeight& base, const glx::GWeight& mu) {
    json out = json::object();
    out["base"] = weight_to_string(base);
    out["mu"] = weight_to_string(mu);
    return out;
}

json factorization_to_json(const glx::Factorization& f) {
    json out = json::object();
    out["base"] = weight_to_string(f.base.lambda);
    json twists = json::array();
    for (const glx::GWeight& tw : f.twists) twists.push_back(weight_to_string(tw));
    out["twists"] = std::move(twists);
    if (!f.base.v.is_trivial()) out["v"] = vtuple_to_string(f.base.v);
    return out;
}

json kernel_dims_to_json(const glx::KernelCoordDims& d) {
    json out = json::object();
    out["even_exponent"] = d.even_exponent;
    out["sym_dims"] = d.sym_dims;
    return out;
}

json cache_to_json(const std::vector<versln::FusionCacheEntry>& entries) {
    json out = json::array();
    for (const versln::FusionCacheEntry& entry : entries) {
        json item = json::object();
        item["p"] = entry.p;
        item["n"] = entry.n;
        item["a"] = entry.a;
        item["b"] = entry.b;
        json exp = json::array();
        for (const auto& [parts, mult] : entry.expansion) {
            json term = json::object();
            term["nu"] = parts;
            term["mult"] = mult;
            exp.push_back(std::move(term));
        }
        item["expansion"] = std::move(exp);
        out.push_back(std::move(item));
    }
    return out;
}

std::vector<versln::FusionCacheEntry> cache_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("cache file must hold an array");
    std::vector<versln::FusionCacheEntry> out;
    for (const json& item : j) {
        versln::FusionCacheEntry entry;
        entry.p = item.at("p").get<i64>();
        entry.n = item.at("n").get<i64>();
        entry.a = item.at("a").get<std::vector<i64>>();
        entry.b = item.at("b").get<std::vector<i64>>();
        for (const json& term : item.at("expansion"))
            entry.expansion.emplace_back(term.at("nu").get<std::vector<i64>>(),
                                         term.at("mult").get<i64>());
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace vercat::json_io
