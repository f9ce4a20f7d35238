#include "horo/realization.hpp"

#include <cmath>

namespace horo {

namespace {
void check_positive(double l, const char* what) {
  if (!(l > 0) || !std::isfinite(l)) fail(errc::parse_error, std::string(what) + " must be positive");
}

// Extension chains compound rounding error through cancellation-heavy
// inner products, so the solves run in extended precision internally.
struct V3L {
  long double x, y, z;
  V3L(const Vec3& v) : x(v.x), y(v.y), z(v.z) {}
  V3L(long double x_, long double y_, long double z_) : x(x_), y(y_), z(z_) {}
};

long double inner(const V3L& a, const V3L& b) { return a.x * b.x + a.y * b.y - a.z * b.z; }

long double det3(const V3L& a, const V3L& b, const V3L& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
         a.z * (b.x * c.y - b.y * c.x);
}
}  // namespace

std::array<LightConePoint, 3> realize_triangle(const Vec3& r0, const Vec3& r1, const Vec3& r2,
                                               double l0, double l1, double l2) {
  check_positive(l0, "l0");
  check_positive(l1, "l1");
  check_positive(l2, "l2");
  const Vec3 rays[3] = {r0, r1, r2};
  for (const Vec3& r : rays) LightConePoint{r};  // validates cone membership

  V3L a(r0), b(r1), c(r2);
  long double scale = std::abs(det3(a, b, c));
  long double norm = a.z * b.z * c.z;
  if (!(scale > kValidationTol * norm)) fail(errc::degenerate_rays, "rays are linearly dependent");

  // m_i = -<r_j, r_k>; positive once independence holds.
  long double m0 = -inner(b, c);
  long double m1 = -inner(c, a);
  long double m2 = -inner(a, b);
  if (!(m0 > 0) || !(m1 > 0) || !(m2 > 0)) fail(errc::degenerate_rays, "rays share a boundary point");

  long double P0 = static_cast<long double>(l0) * l0 / m0;
  long double P1 = static_cast<long double>(l1) * l1 / m1;
  long double P2 = static_cast<long double>(l2) * l2 / m2;
  double t0 = static_cast<double>(std::sqrt(P1 * P2 / P0));
  double t1 = static_cast<double>(std::sqrt(P2 * P0 / P1));
  double t2 = static_cast<double>(std::sqrt(P0 * P1 / P2));
  return {LightConePoint(rays[0] * t0), LightConePoint(rays[1] * t1), LightConePoint(rays[2] * t2)};
}

LightConePoint extend_across(const LightConePoint& u0, const LightConePoint& u1,
                             const LightConePoint& w, double l0, double l1) {
  check_positive(l0, "l0");
  check_positive(l1, "l1");
  V3L a(u0.v), b(u1.v), c(w.v);
  long double e = inner(a, b);
  if (e >= -kValidationTol * a.z * b.z) fail(errc::common_ray, "u0, u1 lie on a common ray");

  long double side_w = det3(a, b, c);
  long double witness_scale = -e * c.z;
  if (std::abs(side_w) <= kValidationTol * witness_scale)
    fail(errc::degenerate_witness, "witness lies in span(u0, u1)");

  // v = alpha u0 + beta u1 + gamma n with n = J (u0 x u1), <n,n> = e^2,
  // <n, v> = det[u0, u1, v].
  V3L n{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, -(a.x * b.y - a.y * b.x)};

  long double alpha = static_cast<long double>(l1) * l1 / (-e);
  long double beta = static_cast<long double>(l0) * l0 / (-e);
  long double gamma = std::sqrt(2.0L * alpha * beta / (-e));
  if (side_w > 0) gamma = -gamma;

  Vec3 v{static_cast<double>(alpha * a.x + beta * b.x + gamma * n.x),
         static_cast<double>(alpha * a.y + beta * b.y + gamma * n.y),
         static_cast<double>(alpha * a.z + beta * b.z + gamma * n.z)};
  if (!v.finite() || std::abs(v.z) > kCoordinateCap)
    fail(errc::numeric_blowup, "extension left the representable range");
  return LightConePoint(v, 1e-7);
}

double sector_length(double l0, double l1, double l2, int i) {
  check_positive(l0, "l0");
  check_positive(l1, "l1");
  check_positive(l2, "l2");
  if (i < 0 || i > 2) fail(errc::parse_error, "corner index must be 0, 1 or 2");
  const double l[3] = {l0, l1, l2};
  return 2.0 * l[i] / (l[(i + 1) % 3] * l[(i + 2) % 3]);
}

}  // namespace horo
