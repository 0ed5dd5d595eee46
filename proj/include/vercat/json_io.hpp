#pragma once

// JSON serialization and the shell-facing text formats: "L3:1" shape lists,
// "12,3|0" block weights, "(2,1)" partitions, and the fusion-cache file.
// Keys are emitted in a stable order so output is golden-testable.

#include <string>
#include <vector>

#include <json.hpp>

#include "vercat/glx.hpp"
#include "vercat/verp.hpp"
#include "vercat/versln.hpp"

namespace vercat::json_io {

using json = nlohmann::ordered_json;

json verp_to_json(const verp::VerpObject& a);  // {"L1":1,"L3":1}, ascending k
verp::VerpObject verp_from_json(i64 p, const json& j);

json sln_to_json(const versln::FusionExpansion& e);  // {"(2,1)":1}
versln::FusionExpansion sln_from_json(const versln::SLnParams& params, const json& j);

std::string parts_to_string(const std::vector<i64>& parts);  // "2,1"; "" for empty
std::vector<i64> parse_parts(const std::string& text);       // tolerant of "0"

// Block entries joined by ',' within a block and '|' between blocks.
std::string weight_to_string(const glx::GWeight& w);
glx::GWeight weight_from_string(const glx::GLXShape& shape, const std::string& text);

// "L1:2,L3:1" -> shape; multiplicity defaults to 1 when ":<mult>" is absent.
glx::GLXShape parse_shape(i64 p, const std::string& text);

// Per block '|', per copy ';', partition parts ','; "-" denotes the empty
// partition so the syntax stays unambiguous.
std::string vtuple_to_string(const glx::VTuple& v);
glx::VTuple vtuple_from_string(const glx::GLXShape& shape, const std::string& text);

json decompose_to_json(const glx::GWeight& base, const glx::GWeight& mu);
json factorization_to_json(const glx::Factorization& f);
json kernel_dims_to_json(const glx::KernelCoordDims& d);

json cache_to_json(const std::vector<versln::FusionCacheEntry>& entries);
std::vector<versln::FusionCacheEntry> cache_from_json(const json& j);

}  // namespace vercat::json_io
