#pragma once

#include <vector>

#include "horo/assignment.hpp"
#include "horo/mobius.hpp"
#include "horo/realization.hpp"

namespace horo {

// Lift heights: `realized` keeps the Lemma-1/2 points; `farey_generation`
// rescales each point to height generation+1 (the discreteness fallback;
// centers, and hence the circle map, are unchanged).
enum class HeightMode { realized, farey_generation };

// Partial decoration of the Farey tessellation: one light cone point per
// vertex of generation <= `generation`, normalized so the triangle right
// of the doe lies over (inf, 0, 1).
struct Decoration {
  int generation = 0;
  std::map<Rational, LightConePoint> points;

  bool has(const Rational& v) const { return points.count(v) != 0; }
  const LightConePoint& at(const Rational& v) const;
  // Boundary coordinate of the horocycle dual to the point at v.
  BoundaryPoint center(const Rational& v) const;
};

inline constexpr int kDecorationDepthGuard = 18;

// Theorem-6 construction: Lemma 1 on the base triangle, then breadth-first
// Lemma 2 across the tessellation. Every prescribed lambda length is
// realized to 1e-9 (validated by tests, not re-checked here).
Decoration build_decoration(const LambdaAssignment& l, int generation,
                            HeightMode mode = HeightMode::realized);

// Decorate only the vertices along a triangle path, each triangle sharing
// an edge with the one before; far cheaper than a full build when probing
// a parabolic fan. The path is given by group elements W whose triangles
// are W(Delta), Delta the base triangle.
Decoration decorate_path(const LambdaAssignment& l, const std::vector<PSL2Mat>& path);

struct CircleSample {
  Rational x;
  BoundaryPoint y;
};

// The sampled circle map x -> center of the decorated horocycle at x,
// ordered by increasing x with infinity last.
std::vector<CircleSample> circle_map_samples(const LambdaAssignment& l, int generation);

// Strict circular monotonicity of the samples after boundary transport.
bool circularly_monotone(const std::vector<CircleSample>& samples);

enum class Side { right, left };

struct DerivativeEstimate {
  double estimate = 1.0;    // phi(n)/n at the requested depth
  double cauchy_gap = 0.0;  // max over n < m <= 2n of |phi(n)/n - phi(m)/m|
};

// Proposition-12 Cesaro averages along the integer strip; the map is
// normalized to fix 0, 1 and infinity by construction.
DerivativeEstimate derivative_at_infinity(const LambdaAssignment& l, int n,
                                          Side side = Side::right);

// One-sided derivative at a finite rational q through the parabolic fan
// A(m) -> q, A = mat_of_edge(neighbor -> q): phi'(q) = c^2 / lim psi(m)/m
// with psi(m) = -1/(phi(A m) - phi(q)), estimated by difference quotients
// (psi(2n) - psi(n))/n to cancel the constant term.
DerivativeEstimate derivative_at_rational(const LambdaAssignment& l, const Rational& q, int n,
                                          Side side = Side::right);

// Pinched assignment whose circle map has right/left derivatives at
// infinity in ratio r: spacings of the target horocycles grow by r right
// of 1, lambda lengths read off the half-plane formula.
LambdaAssignment counterexample_assignment(double r);

struct H1Decoration {
  std::map<Rational, Horocycle> horocycles;  // half-plane model, at the image points
  std::map<Rational, double> derivative;     // |phi'(q)| used for the scaling
  DerivativeEstimate right_at_infinity, left_at_infinity;
  // Ratio of one-sided estimates at infinity; 1 when a genuine derivative
  // exists, the measured mismatch otherwise.
  double infinity_mismatch = 1.0;
};

// Section-5 h1: start from the standard all-sqrt(2) decoration and scale
// the diameter at q by |phi'(q)| to decorate the image point phi(q).
H1Decoration h1_decoration(const LambdaAssignment& l, int generation, int fan_depth = 16);

// Lambda length of the opposite diagonal of the quad around `e`, measured
// on the built decoration (the geometric side of the Ptolemy cross-check).
double other_diagonal_lambda(const Decoration& d, const Edge& e);

}  // namespace horo
