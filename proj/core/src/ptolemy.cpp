#include "horo/ptolemy.hpp"

#include <cmath>

namespace horo {

namespace {
void check_quad(const QuadLambdas& q) {
  for (double v : {q.a, q.b, q.c, q.d, q.e})
    if (!(v > 0) || !std::isfinite(v)) fail(errc::parse_error, "quad lambda lengths must be positive");
}
}  // namespace

QuadTangent flip_pushforward(const QuadLambdas& q, const QuadTangent& v) {
  check_quad(q);
  double f = flip_value(q);
  QuadTangent out;
  // New chart (b, c, d, a, f): side perturbations ride along with their labels.
  out.a = v.b;
  out.b = v.c;
  out.c = v.d;
  out.d = v.a;
  out.e = (q.c * v.a + q.a * v.c + q.d * v.b + q.b * v.d - f * v.e) / q.e;
  return out;
}

double omega_eval(double x, double y, double z, const std::array<double, 3>& v1,
                  const std::array<double, 3>& v2) {
  for (double b : {x, y, z})
    if (!(b > 0)) fail(errc::parse_error, "omega wants a positive base point");
  double lx1 = v1[0] / x, ly1 = v1[1] / y, lz1 = v1[2] / z;
  double lx2 = v2[0] / x, ly2 = v2[1] / y, lz2 = v2[2] / z;
  return (lx1 * ly2 - lx2 * ly1) + (ly1 * lz2 - ly2 * lz1) + (lz1 * lx2 - lz2 * lx1);
}

double check_omega_invariance(const QuadLambdas& q, const QuadTangent& v1, const QuadTangent& v2) {
  check_quad(q);
  double f = flip_value(q);
  QuadTangent w1 = flip_pushforward(q, v1);
  QuadTangent w2 = flip_pushforward(q, v2);

  double lhs = omega_eval(q.a, q.b, q.e, {v1.a, v1.b, v1.e}, {v2.a, v2.b, v2.e}) +
               omega_eval(q.c, q.d, q.e, {v1.c, v1.d, v1.e}, {v2.c, v2.d, v2.e});
  // Flipped chart (a', b', c', d', e') = (b, c, d, a, f): the two new
  // triangles carry (b, c, f) = (a', b', e') and (d, a, f) = (c', d', e').
  double rhs = omega_eval(q.b, q.c, f, {w1.a, w1.b, w1.e}, {w2.a, w2.b, w2.e}) +
               omega_eval(q.d, q.a, f, {w1.c, w1.d, w1.e}, {w2.c, w2.d, w2.e});
  return std::abs(lhs - rhs);
}

}  // namespace horo
