#pragma once

#include <random>
#include <vector>

#include "horo/assignment.hpp"
#include "horo/minkowski.hpp"

namespace horo::test {

inline double urand(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Random light cone point over a random boundary point.
inline LightConePoint random_cone_point(std::mt19937& rng) {
  double x = urand(rng, -3.0, 3.0);
  double t = urand(rng, 0.2, 5.0);
  return LightConePoint(ray_over_boundary(x) * t);
}

inline Horocycle random_horocycle(std::mt19937& rng) {
  return Horocycle::half_plane(urand(rng, -4.0, 4.0), urand(rng, 0.1, 3.0));
}

// Pinched assignment: values in [lo, hi], up to n_overrides overrides on
// edges of generation <= 3.
inline LambdaAssignment random_pinched(std::mt19937& rng, int n_overrides, double lo = 0.5,
                                       double hi = 2.0) {
  static const std::vector<Edge> pool = [] {
    FareyComplex fc = enumerate_edges(3);
    return std::vector<Edge>(fc.edges.begin(), fc.edges.end());
  }();
  std::map<Edge, double> ov;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < n_overrides; ++i) ov.insert_or_assign(pool[pick(rng)], urand(rng, lo, hi));
  return LambdaAssignment(urand(rng, lo, hi), std::move(ov));
}

}  // namespace horo::test
