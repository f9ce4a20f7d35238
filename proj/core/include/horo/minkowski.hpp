#pragma once

#include <complex>
#include <optional>

#include "horo/error.hpp"
#include "horo/rational.hpp"

namespace horo {

// Default tolerances: validation is loose, self-consistency tight. All
// constructions here are algebraic with modest depth, so doubles suffice.
inline constexpr double kValidationTol = 1e-9;
inline constexpr double kConsistencyTol = 1e-12;
inline constexpr double kCoordinateCap = 1e300;

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {s * x, s * y, s * z}; }
  bool finite() const;
};

// Minkowski pairing of signature (2,1): x x' + y y' - z z'.
double mink_inner(const Vec3& a, const Vec3& b);

// det[a, b, c]; sign distinguishes the two sides of the plane span(a,b).
double mink_det(const Vec3& a, const Vec3& b, const Vec3& c);

// Point of the open positive light cone L+, the affine dual of a horocycle.
struct LightConePoint {
  Vec3 v;

  LightConePoint() : v{1, 0, 1} {}  // placeholder point over infinity
  explicit LightConePoint(const Vec3& u, double tol = kValidationTol);
  LightConePoint scaled(double s) const { return LightConePoint(v * s); }
};

enum class Model { half_plane, disk };

// Horocycle as (model, center, size). Size is the Euclidean diameter; a
// half-plane horocycle centered at infinity stores its Euclidean height
// instead, since the diameter degenerates there.
class Horocycle {
 public:
  static Horocycle half_plane(double center, double diameter);
  static Horocycle half_plane_infinity(double height);
  static Horocycle disk(std::complex<double> center, double diameter);

  Model model() const { return model_; }
  bool at_infinity() const { return at_infinity_; }
  double size() const { return size_; }

  double center_real() const;                // half-plane, finite center
  std::complex<double> center_disk() const;  // disk model

  bool same_center(const Horocycle& o, double tol = kValidationTol) const;

 private:
  Horocycle() = default;
  Model model_ = Model::half_plane;
  bool at_infinity_ = false;
  std::complex<double> center_{0.0, 0.0};
  double size_ = 1.0;
};

// lambda(h(u0), h(u1)) = sqrt(-<u0,u1>). CommonRay if the pairing is not
// negative, i.e. the points sit over one boundary point.
double lambda_lightcone(const LightConePoint& u0, const LightConePoint& u1);

// Intro formula sqrt(2/(c d))|u - v| for finite centers; the center-at-
// infinity rule sqrt(2 H / d) is pinned to the light-cone oracle.
double lambda_halfplane(const Horocycle& h0, const Horocycle& h1);

// Model-independent route through affine duality.
double lambda_length(const Horocycle& h0, const Horocycle& h1);

// lambda = sqrt(2 exp(delta)); delta > 0 iff the horocycles are disjoint.
double lambda_from_delta(double delta);
// Inverse transform, the signed distance realized by a given lambda length.
double delta_from_lambda(double lambda);

// Affine duality u <-> h(u), mutually inverse bijections; the horocycle's
// center is the boundary projection of u.
Horocycle duality_to_horocycle(const LightConePoint& u, Model model);
LightConePoint duality_from_horocycle(const Horocycle& h);

// Unordered pair of horocycles with distinct centers.
struct DecoratedGeodesic {
  Horocycle h0, h1;

  DecoratedGeodesic(const Horocycle& a, const Horocycle& b);
  double lambda() const { return lambda_length(h0, h1); }
  double delta() const { return delta_from_lambda(lambda()); }
};

// Fixed boundary identification C(x) = (x - i)/(x + i); sends inf, 0, 1 to
// +1, -1, -i. Exact on rationals: C(p/q) = ((p^2 - q^2) - 2pq i)/(p^2 + q^2).
std::complex<double> boundary_transport(const Rational& x);
std::complex<double> boundary_transport(double x, bool at_infinity = false);

// Direction of the light-cone ray over a boundary point of the half-plane.
Vec3 ray_over_boundary(const Rational& x);
Vec3 ray_over_boundary(double x, bool at_infinity = false);

}  // namespace horo
