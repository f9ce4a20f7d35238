#pragma once

#include <array>

#include "horo/minkowski.hpp"
#include "horo/psl2.hpp"

namespace horo {

// Extended real: boundary point of the half-plane.
struct BoundaryPoint {
  double value = 0;
  bool infinite = false;

  static BoundaryPoint inf() { return {0, true}; }
  static BoundaryPoint at(double v) { return {v, false}; }
  bool operator==(const BoundaryPoint&) const = default;
};

// Real fractional linear transformation with det 1, up to sign; the sign
// representative makes the first entry of largest magnitude positive.
class Mobius {
 public:
  Mobius() : a_(1), b_(0), c_(0), d_(1) {}
  Mobius(double a, double b, double c, double d, double tol = kValidationTol);

  static Mobius identity() { return Mobius(); }
  static Mobius from_integer(const PSL2Mat& m);

  // The unique map sending (0, inf, 1) to (x0, x1, x2).
  static Mobius from_base_triple(const BoundaryPoint& x0, const BoundaryPoint& x1,
                                 const BoundaryPoint& x2);
  // The unique map sending one distinct triple to another.
  static Mobius from_triples(const std::array<BoundaryPoint, 3>& src,
                             const std::array<BoundaryPoint, 3>& dst);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  double trace() const { return a_ + d_; }

  Mobius operator*(const Mobius& o) const;  // composition, left acts after right
  Mobius inverse() const;

  BoundaryPoint apply(const BoundaryPoint& x) const;
  double apply_finite(double x) const;  // caller promises the image is finite

  // Induced Minkowski isometry on L+ (conjugation of the symmetric-matrix
  // model); preserves lambda lengths.
  LightConePoint apply(const LightConePoint& u) const;
  Horocycle apply(const Horocycle& h) const;

 private:
  void canonicalize();
  double a_, b_, c_, d_;
};

// Frobenius distance up to the PSL sign: min(|A - B|, |A + B|).
double psl_distance(const Mobius& A, const Mobius& B);

// Action of an integer matrix on horocycles and light cone points.
inline LightConePoint apply_mat(const PSL2Mat& m, const LightConePoint& u) {
  return Mobius::from_integer(m).apply(u);
}
inline Horocycle apply_mat(const PSL2Mat& m, const Horocycle& h) {
  return Mobius::from_integer(m).apply(h);
}

}  // namespace horo
