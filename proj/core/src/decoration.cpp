#include "horo/decoration.hpp"

#include <algorithm>
#include <cmath>

namespace horo {

namespace {

const Rational kZero(0, 1);
const Rational kOne(1, 1);
const Rational kInf = Rational::infinity();

// Lemma-1 lift of the base triangle (inf, 0, 1).
void lift_base(const LambdaAssignment& l, Decoration& d) {
  auto pts = realize_triangle(ray_over_boundary(kInf), ray_over_boundary(kZero),
                              ray_over_boundary(kOne), l.at(kZero, kOne), l.at(kOne, kInf),
                              l.at(kZero, kInf));
  d.points.emplace(kInf, pts[0]);
  d.points.emplace(kZero, pts[1]);
  d.points.emplace(kOne, pts[2]);
}

void check_cap(const LightConePoint& u) {
  if (u.v.z > kCoordinateCap) fail(errc::numeric_blowup, "decoration coordinate exceeded 1e300");
}

void rescale_heights(Decoration& d) {
  for (auto& [v, u] : d.points) {
    double h = static_cast<double>(farey_generation(v) + 1);
    u = u.scaled(h / u.v.z);
  }
}

// Some Farey neighbor of a finite rational: u/v with p v - s u = 1.
Rational farey_neighbor_of(const Rational& q) {
  const BigInt& p = q.num();
  const BigInt& s = q.den();
  if (s == 1) return kInf;  // integers neighbor infinity
  // Extended Euclid for v = p^{-1} mod s.
  BigInt a = p % s, m = s, x0 = 0, x1 = 1;
  if (a < 0) a += s;
  BigInt r0 = m, r1 = a;
  while (r1 != 0) {
    BigInt qq = r0 / r1;
    BigInt r2 = r0 - qq * r1;
    BigInt x2 = x0 - qq * x1;
    r0 = r1;
    r1 = r2;
    x0 = x1;
    x1 = x2;
  }
  BigInt v = x0 % s;
  if (v < 0) v += s;  // now p v = 1 mod s, 0 < v < s
  BigInt u = (p * v - 1) / s;
  return Rational(u, v);
}

}  // namespace

const LightConePoint& Decoration::at(const Rational& v) const {
  auto it = points.find(v);
  if (it == points.end()) fail(errc::parse_error, "vertex " + v.str() + " is not decorated");
  return it->second;
}

BoundaryPoint Decoration::center(const Rational& v) const {
  Horocycle h = duality_to_horocycle(at(v), Model::half_plane);
  return h.at_infinity() ? BoundaryPoint::inf() : BoundaryPoint::at(h.center_real());
}

Decoration build_decoration(const LambdaAssignment& l, int generation, HeightMode mode) {
  if (generation < 0) fail(errc::depth_limit, "generation must be >= 0");
  if (generation > kDecorationDepthGuard)
    fail(errc::depth_limit, "generation capped at " + std::to_string(kDecorationDepthGuard));

  Decoration d;
  d.generation = generation;
  lift_base(l, d);

  // The doe's other triangle (inf, 0, -1), then the breadth-first
  // subdivision recorded by the Farey complex.
  const Rational minus_one(-1, 1);
  {
    LightConePoint u = extend_across(d.at(kZero), d.at(kInf), d.at(kOne),
                                     l.at(minus_one, kZero), l.at(minus_one, kInf));
    check_cap(u);
    d.points.emplace(minus_one, u);
  }
  FareyComplex fc = enumerate_edges(generation);
  for (const auto& step : fc.steps) {
    LightConePoint u =
        extend_across(d.at(step.base.lo), d.at(step.base.hi), d.at(step.witness),
                      l.at(step.base.lo, step.apex), l.at(step.base.hi, step.apex));
    check_cap(u);
    d.points.emplace(step.apex, u);
  }
  if (mode == HeightMode::farey_generation) rescale_heights(d);
  return d;
}

Decoration decorate_path(const LambdaAssignment& l, const std::vector<PSL2Mat>& path) {
  Decoration d;
  d.generation = -1;
  lift_base(l, d);

  std::array<Rational, 3> prev = {kZero, kOne, kInf};
  for (const PSL2Mat& W : path) {
    std::array<Rational, 3> cur = {W.apply(kZero), W.apply(kOne), W.apply(kInf)};
    const Rational* fresh = nullptr;
    std::vector<const Rational*> shared;
    for (const Rational& v : cur) {
      if (std::find(prev.begin(), prev.end(), v) != prev.end())
        shared.push_back(&v);
      else
        fresh = &v;
    }
    if (!fresh || shared.size() != 2)
      fail(errc::parse_error, "path triangles must advance across one edge at a time");
    if (!d.has(*fresh)) {
      const Rational* witness = nullptr;
      for (const Rational& v : prev)
        if (!(v == *shared[0]) && !(v == *shared[1])) witness = &v;
      LightConePoint u = extend_across(d.at(*shared[0]), d.at(*shared[1]), d.at(*witness),
                                       l.at(*shared[0], *fresh), l.at(*shared[1], *fresh));
      check_cap(u);
      d.points.emplace(*fresh, u);
    }
    prev = cur;
  }
  return d;
}

std::vector<CircleSample> circle_map_samples(const LambdaAssignment& l, int generation) {
  Decoration d = build_decoration(l, generation);
  std::vector<CircleSample> out;
  out.reserve(d.points.size());
  for (const auto& [v, u] : d.points) {
    if (v.is_infinity()) continue;
    out.push_back({v, d.center(v)});
  }
  std::sort(out.begin(), out.end(),
            [](const CircleSample& a, const CircleSample& b) { return a.x < b.x; });
  out.push_back({kInf, d.center(kInf)});
  return out;
}

bool circularly_monotone(const std::vector<CircleSample>& samples) {
  // x's are already in circular order with infinity last; monotone means
  // the finite y's strictly increase and only x = infinity maps to it.
  double prev = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    bool last = (i + 1 == samples.size());
    if (s.x.is_infinity() || s.y.infinite) {
      if (!(last && s.x.is_infinity() && s.y.infinite)) return false;
      continue;
    }
    if (!(s.y.value > prev)) return false;
    prev = s.y.value;
  }
  return true;
}

namespace {

// phi on the integer strip: phi[m] = center at +m (right) or at -m,
// negated (left), so the march is increasing either way.
std::vector<double> integer_strip(const LambdaAssignment& l, int len, Side side) {
  Decoration d;
  lift_base(l, d);
  int dir = side == Side::right ? 1 : -1;

  std::vector<double> phi{0.0};
  Rational prev = side == Side::right ? kZero : kOne;
  Rational cur = side == Side::right ? kOne : kZero;
  if (side == Side::right) phi.push_back(1.0);

  int first = side == Side::right ? 2 : 1;
  for (int m = first; m <= len + 1; ++m) {
    Rational next = Rational::from_integer(dir * m);
    LightConePoint u =
        extend_across(d.at(cur), d.at(kInf), d.at(prev), l.at(cur, next), l.at(next, kInf));
    check_cap(u);
    d.points.emplace(next, u);
    BoundaryPoint y = d.center(next);
    if (y.infinite) fail(errc::numeric_blowup, "strip point projected to infinity");
    phi.push_back(dir * y.value);
    prev = cur;
    cur = next;
  }
  return phi;
}

// Gaps below float resolution report as exactly zero: the averages have
// converged and residual noise carries no ordering information.
double clamp_gap(double gap, double scale) {
  return gap < 1e-11 * std::max(1.0, std::abs(scale)) ? 0.0 : gap;
}

DerivativeEstimate estimate_from_march(const std::vector<double>& phi, int n) {
  DerivativeEstimate out;
  out.estimate = phi[static_cast<std::size_t>(n)] / n;
  double gap = 0.0;
  for (int m = n + 1; m <= 2 * n && m < static_cast<int>(phi.size()); ++m)
    gap = std::max(gap, std::abs(out.estimate - phi[static_cast<std::size_t>(m)] / m));
  out.cauchy_gap = clamp_gap(gap, out.estimate);
  return out;
}

}  // namespace

DerivativeEstimate derivative_at_infinity(const LambdaAssignment& l, int n, Side side) {
  if (n < 1) fail(errc::depth_limit, "depth must be >= 1");
  if (n > 1000000) fail(errc::depth_limit, "strip depth capped at 1e6");
  return estimate_from_march(integer_strip(l, 2 * n, side), n);
}

DerivativeEstimate derivative_at_rational(const LambdaAssignment& l, const Rational& q, int n,
                                          Side side) {
  if (q.is_infinity()) return derivative_at_infinity(l, n, side);
  if (n < 1) fail(errc::depth_limit, "depth must be >= 1");

  // A(inf) = q; the fan A T^{+-m} sweeps the triangles around q, and
  // A(m) -> q with A(m) - q = -1/(c (c m + d)).
  PSL2Mat A = mat_of_edge(OrientedEdge(farey_neighbor_of(q), q));
  std::vector<PSL2Mat> path;
  PSL2Mat W;
  PSL2Word word = word_of_mat(A);
  for (Gen g : word.letters()) {
    W = W * PSL2Mat::generator(g);
    path.push_back(W);
  }
  const PSL2Mat step = side == Side::right ? PSL2Mat::T() : PSL2Mat::T().inverse();
  const double sigma = side == Side::right ? 1.0 : -1.0;
  PSL2Mat F = A;
  std::vector<Rational> fan;  // fan[m] = A(sigma m), m >= 1
  for (int m = 1; m <= 2 * n + 1; ++m) {
    F = F * step;
    path.push_back(F);
    fan.push_back(F.apply(kZero));
  }

  Decoration d = decorate_path(l, path);
  BoundaryPoint yq = d.center(q);
  if (yq.infinite) fail(errc::numeric_blowup, "image of q at infinity");

  // psi(m) = -sigma/(phi(A(sigma m)) - phi(q)) marches like
  // c^2 m / phi'(q) + const; difference quotients kill the constant.
  std::vector<double> psi{0.0};
  for (const Rational& x : fan) {
    BoundaryPoint y = d.center(x);
    if (y.infinite) fail(errc::numeric_blowup, "fan point at infinity");
    psi.push_back(-sigma / (y.value - yq.value));
  }
  auto diff = [&](int j) {
    return (psi[static_cast<std::size_t>(2 * j)] - psi[static_cast<std::size_t>(j)]) / j;
  };
  double raw = diff(n);
  double gap = 0.0;
  for (int j = std::max(1, n / 2); j < n; ++j) gap = std::max(gap, std::abs(diff(j) - raw));

  double c = A.c().convert_to<double>();
  DerivativeEstimate out;
  out.estimate = c * c / raw;
  out.cauchy_gap = clamp_gap(gap * std::abs(out.estimate / raw), out.estimate);
  return out;
}

LambdaAssignment counterexample_assignment(double r) {
  if (!(r >= 1.0) || r > 10.0) fail(errc::parse_error, "ratio must lie in [1, 10]");
  // Target circle map: phi(x) = x for x <= 1 and 1 + r (x - 1) beyond,
  // decorated with diameter slope/q^2 at p/q and height 1 at infinity;
  // lambda lengths read off the half-plane formula. Every edge inside one
  // linear piece keeps lambda sqrt(2); only edges at the crease deviate.
  auto phi = [r](const Rational& x) {
    double v = x.to_double();
    return v <= 1.0 ? v : 1.0 + r * (v - 1.0);
  };
  auto diam = [r](const Rational& x) {
    double qd = x.den().convert_to<double>();
    double slope = (x < Rational(1, 1)) ? 1.0 : r;
    return slope / (qd * qd);
  };
  return LambdaAssignment::procedural([phi, diam](const Edge& e) {
    if (e.hi.is_infinity()) return std::sqrt(2.0 / diam(e.lo));
    double du = diam(e.lo), dv = diam(e.hi);
    return std::sqrt(2.0 / (du * dv)) * std::abs(phi(e.lo) - phi(e.hi));
  });
}

H1Decoration h1_decoration(const LambdaAssignment& l, int generation, int fan_depth) {
  if (!is_pinched(l)) fail(errc::not_pinched, "assignment is not certified pinched");

  Decoration d = build_decoration(l, generation);
  H1Decoration out;
  out.right_at_infinity = derivative_at_infinity(l, fan_depth, Side::right);
  out.left_at_infinity = derivative_at_infinity(l, fan_depth, Side::left);
  out.infinity_mismatch = out.right_at_infinity.estimate / out.left_at_infinity.estimate;

  // The standard decoration puts height 1 at infinity; the derivative in
  // the inversion chart there is the reciprocal of the strip estimate.
  double est_inf = 0.5 * (out.right_at_infinity.estimate + out.left_at_infinity.estimate);
  out.derivative[kInf] = 1.0 / est_inf;
  out.horocycles.emplace(kInf, Horocycle::half_plane_infinity(1.0 / est_inf));

  for (const auto& [v, u] : d.points) {
    if (v.is_infinity()) continue;
    double deriv = derivative_at_rational(l, v, fan_depth).estimate;
    double qd = v.den().convert_to<double>();
    BoundaryPoint y = d.center(v);
    if (y.infinite) fail(errc::numeric_blowup, "image vertex at infinity");
    out.derivative[v] = deriv;
    out.horocycles.emplace(v, Horocycle::half_plane(y.value, std::abs(deriv) / (qd * qd)));
  }
  return out;
}

double other_diagonal_lambda(const Decoration& d, const Edge& e) {
  auto [m1, m2] = edge_apexes(e);
  return lambda_lightcone(d.at(m1), d.at(m2));
}

}  // namespace horo
