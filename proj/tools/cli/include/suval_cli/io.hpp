#pragma once

#include <filesystem>

#include "json.hpp"

#include "suval/grassmann.hpp"
#include "suval/polytope.hpp"

namespace suval::cli {

using Json = nlohmann::ordered_json;

/// Parse errors and missing files are reported as InvalidArgument.
Json read_json_file(const std::filesystem::path& path);

/// {"n": int, "basis": [[[re, im] x n] x k]}
Subspace subspace_from_json(const Json& j);
Json subspace_to_json(const Subspace& w);

/// {"vertices": ...} | {"halfspaces": ...} | {"parallelotope": {"base", "generators"}}
/// | {"zonotope": {...}} | {"box": [sides]}
Polytope polytope_from_json(const Json& j);
/// Parallelotope, zonotope or box inputs only (UnsupportedBody otherwise).
Zonotope zonotope_from_json(const Json& j);
Json polytope_to_json(const Polytope& p);

/// Integral doubles print without a fractional part; -0 prints as 0.
Json number(double v);
Json complex_pair(Complex z);

}  // namespace suval::cli
