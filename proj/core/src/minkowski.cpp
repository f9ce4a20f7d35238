#include "horo/minkowski.hpp"

#include <cmath>

namespace horo {

bool Vec3::finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }

double mink_inner(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y - a.z * b.z; }

double mink_det(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
         a.z * (b.x * c.y - b.y * c.x);
}

LightConePoint::LightConePoint(const Vec3& u, double tol) : v(u) {
  if (!u.finite()) fail(errc::numeric_blowup, "non-finite light cone point");
  if (u.z <= 0) fail(errc::parse_error, "light cone point needs z > 0");
  double q = mink_inner(u, u);
  if (std::abs(q) > tol * u.z * u.z)
    fail(errc::parse_error, "point is not on the light cone (<u,u> = " + std::to_string(q) + ")");
}

Horocycle Horocycle::half_plane(double center, double diameter) {
  if (!(diameter > 0) || !std::isfinite(diameter) || !std::isfinite(center))
    fail(errc::parse_error, "half-plane horocycle wants finite center and diameter > 0");
  Horocycle h;
  h.model_ = Model::half_plane;
  h.center_ = {center, 0.0};
  h.size_ = diameter;
  return h;
}

Horocycle Horocycle::half_plane_infinity(double height) {
  if (!(height > 0) || !std::isfinite(height))
    fail(errc::parse_error, "horocycle at infinity wants height > 0");
  Horocycle h;
  h.model_ = Model::half_plane;
  h.at_infinity_ = true;
  h.size_ = height;
  return h;
}

Horocycle Horocycle::disk(std::complex<double> center, double diameter) {
  if (!(diameter > 0) || diameter >= 2.0)
    fail(errc::parse_error, "disk horocycle wants diameter in (0, 2)");
  if (std::abs(std::abs(center) - 1.0) > kValidationTol)
    fail(errc::parse_error, "disk horocycle center must lie on the unit circle");
  Horocycle h;
  h.model_ = Model::disk;
  h.center_ = center / std::abs(center);
  h.size_ = diameter;
  return h;
}

double Horocycle::center_real() const {
  if (model_ != Model::half_plane || at_infinity_)
    fail(errc::parse_error, "center_real wants a finite half-plane center");
  return center_.real();
}

std::complex<double> Horocycle::center_disk() const {
  if (model_ != Model::disk) fail(errc::parse_error, "center_disk wants the disk model");
  return center_;
}

bool Horocycle::same_center(const Horocycle& o, double tol) const {
  if (model_ != o.model_) {
    // Compare through the common boundary circle.
    auto self = duality_to_horocycle(duality_from_horocycle(*this), Model::disk);
    auto other = duality_to_horocycle(duality_from_horocycle(o), Model::disk);
    return self.same_center(other, tol);
  }
  if (model_ == Model::half_plane) {
    if (at_infinity_ || o.at_infinity_) return at_infinity_ == o.at_infinity_;
    return std::abs(center_.real() - o.center_.real()) <= tol * (1.0 + std::abs(center_.real()));
  }
  return std::abs(center_ - o.center_) <= tol;
}

double lambda_lightcone(const LightConePoint& u0, const LightConePoint& u1) {
  double ip = mink_inner(u0.v, u1.v);
  double scale = u0.v.z * u1.v.z;
  if (ip >= -kValidationTol * scale)
    fail(errc::common_ray, "light cone points lie on a common ray");
  return std::sqrt(-ip);
}

double lambda_halfplane(const Horocycle& h0, const Horocycle& h1) {
  if (h0.model() != Model::half_plane || h1.model() != Model::half_plane)
    fail(errc::parse_error, "lambda_halfplane wants half-plane horocycles");
  if (h0.same_center(h1)) fail(errc::same_center, "horocycles share a center");
  if (h0.at_infinity() || h1.at_infinity()) {
    const Horocycle& inf = h0.at_infinity() ? h0 : h1;
    const Horocycle& fin = h0.at_infinity() ? h1 : h0;
    return std::sqrt(2.0 * inf.size() / fin.size());
  }
  return std::sqrt(2.0 / (h0.size() * h1.size())) * std::abs(h0.center_real() - h1.center_real());
}

double lambda_length(const Horocycle& h0, const Horocycle& h1) {
  if (h0.same_center(h1)) fail(errc::same_center, "horocycles share a center");
  return lambda_lightcone(duality_from_horocycle(h0), duality_from_horocycle(h1));
}

double lambda_from_delta(double delta) { return std::sqrt(2.0 * std::exp(delta)); }

double delta_from_lambda(double lambda) {
  if (!(lambda > 0)) fail(errc::parse_error, "lambda length must be positive");
  return std::log(lambda * lambda / 2.0);
}

Horocycle duality_to_horocycle(const LightConePoint& u, Model model) {
  const double a = u.v.x, b = u.v.y, c = u.v.z;
  if (model == Model::disk) {
    // h(u) projects to the circle tangent at (a,b)/c with radius 1/(c+1).
    return Horocycle::disk({a / c, b / c}, 2.0 / (c + 1.0));
  }
  double t = c - a;  // degenerates exactly on the ray over infinity
  if (t <= kValidationTol * c) return Horocycle::half_plane_infinity(c);
  return Horocycle::half_plane(b / t, 2.0 / t);
}

LightConePoint duality_from_horocycle(const Horocycle& h) {
  if (h.model() == Model::disk) {
    double c = 2.0 / h.size() - 1.0;
    auto w = h.center_disk();
    return LightConePoint({c * w.real(), c * w.imag(), c});
  }
  if (h.at_infinity()) {
    double H = h.size();
    return LightConePoint({H, 0.0, H});
  }
  double x = h.center_real(), d = h.size();
  return LightConePoint({(x * x - 1.0) / d, 2.0 * x / d, (x * x + 1.0) / d});
}

DecoratedGeodesic::DecoratedGeodesic(const Horocycle& a, const Horocycle& b) : h0(a), h1(b) {
  if (h0.same_center(h1)) fail(errc::same_center, "decorated geodesic wants distinct centers");
}

std::complex<double> boundary_transport(const Rational& x) {
  // (p - qi)/(p + qi) in exact integer arithmetic before the final divide.
  double p = x.num().convert_to<double>();
  double q = x.den().convert_to<double>();
  double n = p * p + q * q;
  return {(p * p - q * q) / n, -2.0 * p * q / n};
}

std::complex<double> boundary_transport(double x, bool at_infinity) {
  if (at_infinity) return {1.0, 0.0};
  double n = x * x + 1.0;
  return {(x * x - 1.0) / n, -2.0 * x / n};
}

Vec3 ray_over_boundary(const Rational& x) {
  if (x.is_infinity()) return {1.0, 0.0, 1.0};
  return ray_over_boundary(x.to_double());
}

Vec3 ray_over_boundary(double x, bool at_infinity) {
  if (at_infinity) return {1.0, 0.0, 1.0};
  return {x * x - 1.0, 2.0 * x, x * x + 1.0};
}

}  // namespace horo
