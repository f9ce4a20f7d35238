#pragma once

#include <array>

#include "horo/error.hpp"

namespace horo {

// Lambda lengths of an ideal quadrilateral: sides a,b,c,d in clockwise
// cyclic order, diagonal e separating {a,b} from {c,d}.
template <typename T>
struct QuadChart {
  T a, b, c, d, e;
};

using QuadLambdas = QuadChart<double>;

// Tangent vector at a quad chart, components named after the lambda
// variables they perturb (flips permute labels, positions would lie).
struct QuadTangent {
  double a = 0, b = 0, c = 0, d = 0, e = 0;
};

// Diagonal exchange ef = ac + bd.
template <typename T>
T flip_value(const QuadChart<T>& q) {
  return (q.a * q.c + q.b * q.d) / q.e;
}

// Full flipped chart: sides relabel cyclically to (b, c, d, a) so the new
// diagonal again separates the first two labels from the last two.
template <typename T>
QuadChart<T> flip(const QuadChart<T>& q) {
  return {q.b, q.c, q.d, q.a, flip_value(q)};
}

// Differential of the flip; f-component by the chain rule on ef = ac + bd.
QuadTangent flip_pushforward(const QuadLambdas& q, const QuadTangent& v);

// omega(x,y,z) = dlnx ^ dlny + dlny ^ dlnz + dlnz ^ dlnx evaluated on two
// tangent vectors (component order matches the base point).
double omega_eval(double x, double y, double z, const std::array<double, 3>& v1,
                  const std::array<double, 3>& v2);

// |omega(a,b,e) + omega(c,d,e) - omega(b,c,f) - omega(d,a,f)| with the
// right side evaluated through flip_pushforward. Vanishes identically.
double check_omega_invariance(const QuadLambdas& q, const QuadTangent& v1, const QuadTangent& v2);

}  // namespace horo
