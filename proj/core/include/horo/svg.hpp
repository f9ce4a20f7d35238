#pragma once

#include <string>

#include "horo/decoration.hpp"

namespace horo {

struct RenderOptions {
  int width = 800;            // square canvas, disk inscribed
  bool horocycles = false;    // draw the tangent circle at each vertex
  bool labels = false;        // label vertices p/q at small depth
};

// Poincare-disk picture of a decorated tessellation: geodesics as arcs
// orthogonal to the unit circle, horocycles as circles tangent to it.
// Output is deterministic byte-for-byte for fixed inputs.
std::string render_svg(const LambdaAssignment& l, int generation, const RenderOptions& opt = {});

}  // namespace horo
