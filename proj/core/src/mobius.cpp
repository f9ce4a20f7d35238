#include "horo/mobius.hpp"

#include <cmath>

namespace horo {

Mobius::Mobius(double a, double b, double c, double d, double tol) : a_(a), b_(b), c_(c), d_(d) {
  double det = a_ * d_ - b_ * c_;
  if (!std::isfinite(det) || det <= 0)
    fail(errc::parse_error, "Mobius wants positive determinant (orientation-preserving)");
  if (std::abs(det - 1.0) > tol) {
    double s = 1.0 / std::sqrt(det);
    a_ *= s;
    b_ *= s;
    c_ *= s;
    d_ *= s;
  }
  canonicalize();
}

void Mobius::canonicalize() {
  double m = std::abs(a_);
  double lead = a_;
  for (double e : {b_, c_, d_}) {
    if (std::abs(e) > m) {
      m = std::abs(e);
      lead = e;
    }
  }
  if (lead < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

Mobius Mobius::from_integer(const PSL2Mat& m) {
  return Mobius(m.a().convert_to<double>(), m.b().convert_to<double>(),
                m.c().convert_to<double>(), m.d().convert_to<double>());
}

Mobius Mobius::from_base_triple(const BoundaryPoint& x0, const BoundaryPoint& x1,
                                const BoundaryPoint& x2) {
  // The inverse of the standard (x0,x1,x2) -> (0,inf,1) map; requires the
  // triple to share the cyclic orientation of (0, inf, 1).
  return from_triples({BoundaryPoint::at(0), BoundaryPoint::inf(), BoundaryPoint::at(1)},
                      {x0, x1, x2});
}

namespace {

// Raw coefficients of the map sending (y0, y1, y2) to (0, inf, 1); the
// determinant is negative when the triple is counterclockwise.
struct RawMap {
  double p, q, r, s;
};

RawMap to_standard(const std::array<BoundaryPoint, 3>& y) {
  if (y[0].infinite) return {0, y[2].value - y[1].value, 1, -y[1].value};
  if (y[1].infinite) return {1, -y[0].value, 0, y[2].value - y[0].value};
  if (y[2].infinite) return {1, -y[0].value, 1, -y[1].value};
  double A = y[2].value - y[1].value, B = y[2].value - y[0].value;
  return {A, -y[0].value * A, B, -y[1].value * B};
}

}  // namespace

Mobius Mobius::from_triples(const std::array<BoundaryPoint, 3>& src,
                            const std::array<BoundaryPoint, 3>& dst) {
  // g_dst^{-1} g_src; same-orientation triples make the determinant
  // positive even when each factor reverses.
  RawMap gs = to_standard(src), gd = to_standard(dst);
  double ia = gd.s, ib = -gd.q, ic = -gd.r, id = gd.p;
  return Mobius(ia * gs.p + ib * gs.r, ia * gs.q + ib * gs.s, ic * gs.p + id * gs.r,
                ic * gs.q + id * gs.s);
}

Mobius Mobius::operator*(const Mobius& o) const {
  return Mobius(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
                c_ * o.b_ + d_ * o.d_);
}

Mobius Mobius::inverse() const { return Mobius(d_, -b_, -c_, a_); }

BoundaryPoint Mobius::apply(const BoundaryPoint& x) const {
  if (x.infinite) {
    if (c_ == 0) return BoundaryPoint::inf();
    return BoundaryPoint::at(a_ / c_);
  }
  double den = c_ * x.value + d_;
  if (den == 0) return BoundaryPoint::inf();
  return BoundaryPoint::at((a_ * x.value + b_) / den);
}

double Mobius::apply_finite(double x) const {
  double den = c_ * x + d_;
  if (den == 0) fail(errc::numeric_blowup, "image at infinity");
  return (a_ * x + b_) / den;
}

LightConePoint Mobius::apply(const LightConePoint& u) const {
  // Symmetric matrix model M(u) = [z+x, y; y, z-x], action M -> A M A^T.
  double m00 = u.v.z + u.v.x, m01 = u.v.y, m11 = u.v.z - u.v.x;
  double n00 = a_ * (a_ * m00 + b_ * m01) + b_ * (a_ * m01 + b_ * m11);
  double n01 = c_ * (a_ * m00 + b_ * m01) + d_ * (a_ * m01 + b_ * m11);
  double n11 = c_ * (c_ * m00 + d_ * m01) + d_ * (c_ * m01 + d_ * m11);
  Vec3 w{(n00 - n11) / 2.0, n01, (n00 + n11) / 2.0};
  return LightConePoint(w, 1e-7);
}

Horocycle Mobius::apply(const Horocycle& h) const {
  return duality_to_horocycle(apply(duality_from_horocycle(h)), h.model());
}

double psl_distance(const Mobius& A, const Mobius& B) {
  double dm = 0, dp = 0;
  double da[4] = {A.a() - B.a(), A.b() - B.b(), A.c() - B.c(), A.d() - B.d()};
  double sa[4] = {A.a() + B.a(), A.b() + B.b(), A.c() + B.c(), A.d() + B.d()};
  for (int i = 0; i < 4; ++i) {
    dm += da[i] * da[i];
    dp += sa[i] * sa[i];
  }
  return std::sqrt(std::min(dm, dp));
}

}  // namespace horo
