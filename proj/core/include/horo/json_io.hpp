#pragma once

#include <string>

#include "horo/solenoid.hpp"
#include "horo/surface.hpp"

#include <json.hpp>

namespace horo {

using Json = nlohmann::ordered_json;

// Lambda assignments: {"default": v, "overrides": {"p/q,r/s": v}}.
Json assignment_to_json(const LambdaAssignment& l);
LambdaAssignment assignment_from_json(const Json& j);

// Triangulations: {"triangles": [[e,e,e],..], "gluing": [[t,s,t,s],..],
// "lambdas": [v,..]}; gluing entries may carry a fifth element 1 for a
// same-direction (non-orientable) identification.
Json surface_to_json(const IdealTriangulation& t, const SurfaceLambda& l);
std::pair<IdealTriangulation, SurfaceLambda> surface_from_json(const Json& j);

// Level data: {"congruence_k": k, "default": v, "lambdas":
// {"a,b,c,d": {"p/q,r/s": v}}}; every listed (coset, edge) pins the slot
// holding that pair, and conflicts are rejected.
Json level_to_json(const TransverseLambda& d);
TransverseLambda level_from_json(const Json& j);

// Loops file: [{"name": n, "steps": [[tri, side], ...]}, ...].
std::vector<std::pair<std::string, std::vector<LoopStep>>> loops_from_json(const Json& j);

// 17-significant-digit float formatting shared by all emitters.
std::string format_double(double v);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace horo
