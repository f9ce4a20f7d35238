#include "horo/surface.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace horo {

namespace {
int mod3(int x) { return ((x % 3) + 3) % 3; }

void check_lambda(const IdealTriangulation& t, const SurfaceLambda& l) {
  if (static_cast<int>(l.size()) != t.num_edges())
    fail(errc::parse_error, "lambda vector size must match edge count");
  for (double v : l)
    if (!(v > 0) || !std::isfinite(v)) fail(errc::parse_error, "lambda lengths must be positive");
}
}  // namespace

IdealTriangulation::IdealTriangulation(int num_edges, std::vector<std::array<int, 3>> tri_edges,
                                       std::vector<Gluing> gluings)
    : num_edges_(num_edges), tri_edges_(std::move(tri_edges)), gluings_(std::move(gluings)) {
  const int F = static_cast<int>(tri_edges_.size());
  if (F == 0) fail(errc::parse_error, "no triangles");
  for (const auto& tri : tri_edges_)
    for (int e : tri)
      if (e < 0 || e >= num_edges_) fail(errc::parse_error, "edge id out of range");

  partner_.assign(static_cast<size_t>(F), {SideRef{}, SideRef{}, SideRef{}});
  auto side_ok = [&](const SideRef& s) {
    return s.tri >= 0 && s.tri < F && s.side >= 0 && s.side < 3;
  };
  int glued = 0;
  for (const Gluing& g : gluings_) {
    if (!side_ok(g.a) || !side_ok(g.b)) fail(errc::parse_error, "gluing side out of range");
    if (g.a == g.b) fail(errc::not_closed, "side glued to itself");
    for (const SideRef& s : {g.a, g.b}) {
      SideRef& slot = partner_[static_cast<size_t>(s.tri)][static_cast<size_t>(s.side)];
      if (slot.tri != -1) fail(errc::not_closed, "side glued twice");
    }
    if (edge(g.a.tri, g.a.side) != edge(g.b.tri, g.b.side))
      fail(errc::not_closed, "glued sides carry different edge ids");
    partner_[static_cast<size_t>(g.a.tri)][static_cast<size_t>(g.a.side)] = g.b;
    partner_[static_cast<size_t>(g.b.tri)][static_cast<size_t>(g.b.side)] = g.a;
    glued += 2;
  }
  if (glued != 3 * F) fail(errc::not_closed, "unglued sides remain");

  // Each edge id must be carried by exactly one gluing (two sides).
  std::vector<int> count(static_cast<size_t>(num_edges_), 0);
  for (const Gluing& g : gluings_) ++count[static_cast<size_t>(edge(g.a.tri, g.a.side))];
  for (int c : count)
    if (c != 1) fail(errc::not_closed, "every edge id wants exactly two side incidences");
}

SideRef IdealTriangulation::partner(const SideRef& s) const {
  return partner_[static_cast<size_t>(s.tri)][static_cast<size_t>(s.side)];
}

void IdealTriangulation::build_corner_classes() const {
  if (num_classes_ >= 0) return;
  const int F = num_triangles();
  corner_class_.assign(static_cast<size_t>(F), {-1, -1, -1});
  int cls = 0;
  for (int t = 0; t < F; ++t) {
    for (int j = 0; j < 3; ++j) {
      if (corner_class_[static_cast<size_t>(t)][static_cast<size_t>(j)] != -1) continue;
      // Rotate around the vertex: cross side j, land at corner j'+1.
      int ct = t, cj = j;
      while (corner_class_[static_cast<size_t>(ct)][static_cast<size_t>(cj)] == -1) {
        corner_class_[static_cast<size_t>(ct)][static_cast<size_t>(cj)] = cls;
        SideRef nxt = partner({ct, cj});
        ct = nxt.tri;
        cj = mod3(nxt.side + 1);
      }
      ++cls;
    }
  }
  num_classes_ = cls;
}

std::pair<int, int> IdealTriangulation::validate() const {
  for (const Gluing& g : gluings_)
    if (g.flip) fail(errc::not_orientable, "same-direction gluing");
  const int F = num_triangles();
  if (2 * num_edges_ != 3 * F) fail(errc::bad_euler, "2E != 3F");
  build_corner_classes();
  const int V = num_classes_;
  const int chi = V - num_edges_ + F;
  if (chi > 2 || (2 - chi) % 2 != 0) fail(errc::bad_euler, "Euler characteristic " + std::to_string(chi));
  const int g = (2 - chi) / 2;
  const int s = V;
  if (2 - 2 * g - s >= 0) fail(errc::not_hyperbolic, "2-2g-s must be negative");
  return {g, s};
}

int IdealTriangulation::vertex_class(int tri, int corner) const {
  build_corner_classes();
  return corner_class_[static_cast<size_t>(tri)][static_cast<size_t>(corner)];
}

int IdealTriangulation::num_vertex_classes() const {
  build_corner_classes();
  return num_classes_;
}

std::vector<SideRef> IdealTriangulation::corners_at(int vertex_cls) const {
  build_corner_classes();
  if (vertex_cls < 0 || vertex_cls >= num_classes_) fail(errc::parse_error, "no such puncture");
  // Walk the rotation orbit from the first matching corner.
  for (int t = 0; t < num_triangles(); ++t) {
    for (int j = 0; j < 3; ++j) {
      if (vertex_class(t, j) != vertex_cls) continue;
      std::vector<SideRef> orbit;
      int ct = t, cj = j;
      do {
        orbit.push_back({ct, cj});
        SideRef nxt = partner({ct, cj});
        ct = nxt.tri;
        cj = mod3(nxt.side + 1);
      } while (!(ct == t && cj == j));
      return orbit;
    }
  }
  fail(errc::parse_error, "no such puncture");
}

std::array<LightConePoint, 3> lift_triangle(const IdealTriangulation& t, const SurfaceLambda& l,
                                            int tri) {
  check_lambda(t, l);
  // Corner i over (inf, 0, 1); l_i in realize_triangle is the edge between
  // the other two corners: side 1, side 2, side 0 respectively.
  return realize_triangle(ray_over_boundary(Rational::infinity()),
                          ray_over_boundary(Rational(0, 1)), ray_over_boundary(Rational(1, 1)),
                          l[static_cast<size_t>(t.edge(tri, 1))],
                          l[static_cast<size_t>(t.edge(tri, 2))],
                          l[static_cast<size_t>(t.edge(tri, 0))]);
}

namespace {

// Lift of the neighbor across side j of a lifted triangle.
LiftedTriangle cross(const IdealTriangulation& t, const SurfaceLambda& l,
                     const LiftedTriangle& from, int j) {
  SideRef p = t.partner({from.tri, j});
  const LightConePoint& u_tail = from.corner[static_cast<size_t>(j)];
  const LightConePoint& u_head = from.corner[static_cast<size_t>(mod3(j + 1))];
  const LightConePoint& w = from.corner[static_cast<size_t>(mod3(j + 2))];

  // Side j' of the partner runs j' -> j'+1, matched reversed.
  int jp = p.side;
  LiftedTriangle out;
  out.tri = p.tri;
  out.parent_side = jp;
  out.depth = from.depth + 1;

  double l0 = l[static_cast<size_t>(t.edge(p.tri, mod3(jp + 2)))];  // new corner -> corner j'
  double l1 = l[static_cast<size_t>(t.edge(p.tri, mod3(jp + 1)))];  // corner j'+1 -> new corner
  LightConePoint fresh = extend_across(u_head, u_tail, w, l0, l1);
  if (fresh.v.z > kCoordinateCap) fail(errc::numeric_blowup, "development exceeded 1e300");

  out.corner[static_cast<size_t>(jp)] = u_head;
  out.corner[static_cast<size_t>(mod3(jp + 1))] = u_tail;
  out.corner[static_cast<size_t>(mod3(jp + 2))] = fresh;
  return out;
}

}  // namespace

DevelopedComplex develop(const IdealTriangulation& t, const SurfaceLambda& l, int depth,
                         int base_triangle) {
  check_lambda(t, l);
  if (depth < 0 || depth > 16) fail(errc::depth_limit, "development depth capped at 16");

  DevelopedComplex dc;
  LiftedTriangle base;
  base.tri = base_triangle;
  // lift_triangle puts corners (0, 1, 2) over (inf, 0, 1).
  auto pts = lift_triangle(t, l, base_triangle);
  base.corner = {pts[0], pts[1], pts[2]};
  dc.lifts.push_back(base);

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    if (dc.lifts[idx].depth >= depth) continue;
    for (int j = 0; j < 3; ++j) {
      if (j == dc.lifts[idx].parent_side && dc.lifts[idx].parent >= 0) continue;
      LiftedTriangle child = cross(t, l, dc.lifts[idx], j);
      child.parent = static_cast<int>(idx);
      dc.lifts.push_back(child);
      queue.push_back(dc.lifts.size() - 1);
    }
  }
  return dc;
}

Mobius holonomy(const IdealTriangulation& t, const SurfaceLambda& l,
                const std::vector<LoopStep>& loop) {
  check_lambda(t, l);
  if (loop.empty()) fail(errc::open_path, "empty loop");

  LiftedTriangle cur;
  cur.tri = loop.front().tri;
  auto pts = lift_triangle(t, l, cur.tri);
  cur.corner = {pts[0], pts[1], pts[2]};
  LiftedTriangle base = cur;

  for (std::size_t k = 0; k < loop.size(); ++k) {
    if (loop[k].tri != cur.tri)
      fail(errc::open_path, "step " + std::to_string(k) + " names triangle " +
                                std::to_string(loop[k].tri) + " but the path is at " +
                                std::to_string(cur.tri));
    if (loop[k].side < 0 || loop[k].side >= 3) fail(errc::open_path, "side out of range");
    LiftedTriangle next = cross(t, l, cur, loop[k].side);
    next.parent = -1;
    cur = next;
  }
  if (cur.tri != base.tri) fail(errc::open_path, "path does not close up");

  auto centers = [](const LiftedTriangle& lt) {
    std::array<BoundaryPoint, 3> c;
    for (int j = 0; j < 3; ++j) {
      Horocycle h = duality_to_horocycle(lt.corner[static_cast<size_t>(j)], Model::half_plane);
      c[static_cast<size_t>(j)] =
          h.at_infinity() ? BoundaryPoint::inf() : BoundaryPoint::at(h.center_real());
    }
    return c;
  };
  return Mobius::from_triples(centers(base), centers(cur));
}

std::vector<LoopStep> puncture_loop(const IdealTriangulation& t, int puncture) {
  std::vector<LoopStep> loop;
  for (const SideRef& c : t.corners_at(puncture)) loop.push_back({c.tri, c.side});
  return loop;
}

double puncture_trace(const IdealTriangulation& t, const SurfaceLambda& l, int puncture) {
  return std::abs(holonomy(t, l, puncture_loop(t, puncture)).trace());
}

double horocycle_length(const IdealTriangulation& t, const SurfaceLambda& l, int puncture) {
  check_lambda(t, l);
  double total = 0;
  for (const SideRef& c : t.corners_at(puncture)) {
    double opp = l[static_cast<size_t>(t.edge(c.tri, mod3(c.side + 1)))];
    double adj1 = l[static_cast<size_t>(t.edge(c.tri, c.side))];
    double adj2 = l[static_cast<size_t>(t.edge(c.tri, mod3(c.side + 2)))];
    total += 2.0 * opp / (adj1 * adj2);
  }
  return total;
}

double surface_wp(const IdealTriangulation& t, const SurfaceLambda& l,
                  const std::vector<double>& v1, const std::vector<double>& v2) {
  check_lambda(t, l);
  if (v1.size() != l.size() || v2.size() != l.size())
    fail(errc::parse_error, "tangent vectors must be edge-indexed");
  double total = 0;
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    std::size_t e0 = static_cast<size_t>(t.edge(tri, 0));
    std::size_t e1 = static_cast<size_t>(t.edge(tri, 1));
    std::size_t e2 = static_cast<size_t>(t.edge(tri, 2));
    total += omega_eval(l[e0], l[e1], l[e2], {v1[e0], v1[e1], v1[e2]}, {v2[e0], v2[e1], v2[e2]});
  }
  return total;
}

SurfaceFlip flip_edge(const IdealTriangulation& t, const SurfaceLambda& l, int e) {
  check_lambda(t, l);
  if (e < 0 || e >= t.num_edges()) fail(errc::parse_error, "edge id out of range");

  // The two incidences of e.
  SideRef s1{-1, -1};
  for (int tri = 0; tri < t.num_triangles() && s1.tri < 0; ++tri)
    for (int j = 0; j < 3; ++j)
      if (t.edge(tri, j) == e) {
        s1 = {tri, j};
        break;
      }
  SideRef s2 = t.partner(s1);
  if (s1.tri == s2.tri) fail(errc::self_folded, "both incidences in one triangle");

  int t1 = s1.tri, j1 = s1.side, t2 = s2.tri, j2 = s2.side;
  // Quad sides counterclockwise after the diagonal: p, q in t1; r, s in t2.
  SideRef sp{t1, mod3(j1 + 1)}, sq{t1, mod3(j1 + 2)};
  SideRef sr{t2, mod3(j2 + 1)}, ss{t2, mod3(j2 + 2)};
  int ep = t.edge(sp.tri, sp.side), eq = t.edge(sq.tri, sq.side);
  int er = t.edge(sr.tri, sr.side), es = t.edge(ss.tri, ss.side);

  double f = (l[static_cast<size_t>(ep)] * l[static_cast<size_t>(er)] +
              l[static_cast<size_t>(eq)] * l[static_cast<size_t>(es)]) /
             l[static_cast<size_t>(e)];

  // New triangles: t1' = (p, f, s), t2' = (q, r, f); the diagonal now
  // joins the two old apexes.
  std::vector<std::array<int, 3>> tri_edges = t.triangles();
  tri_edges[static_cast<size_t>(t1)] = {ep, e, es};
  tri_edges[static_cast<size_t>(t2)] = {eq, er, e};

  // Side positions of the quad boundary in the new complex.
  std::map<std::pair<int, int>, SideRef> moved;
  moved[{sp.tri, sp.side}] = {t1, 0};
  moved[{ss.tri, ss.side}] = {t1, 2};
  moved[{sq.tri, sq.side}] = {t2, 0};
  moved[{sr.tri, sr.side}] = {t2, 1};

  auto relocate = [&](const SideRef& s) {
    auto it = moved.find({s.tri, s.side});
    return it == moved.end() ? s : it->second;
  };

  std::vector<Gluing> gluings;
  gluings.push_back({{t1, 1}, {t2, 2}, false});  // the new diagonal
  for (const Gluing& g : t.gluings()) {
    bool touches_e = t.edge(g.a.tri, g.a.side) == e;
    if (touches_e) continue;  // replaced by the diagonal entry above
    gluings.push_back({relocate(g.a), relocate(g.b), g.flip});
  }

  SurfaceLambda lambdas = l;
  lambdas[static_cast<size_t>(e)] = f;

  SurfaceFlip out{IdealTriangulation(t.num_edges(), std::move(tri_edges), std::move(gluings)),
                  std::move(lambdas), ep, eq, er, es, e};
  return out;
}

std::vector<double> flip_pushforward_tangent(const SurfaceFlip& f, const SurfaceLambda& old_l,
                                             const std::vector<double>& v) {
  std::vector<double> out = v;
  double lp = old_l[static_cast<size_t>(f.p)], lq = old_l[static_cast<size_t>(f.q)];
  double lr = old_l[static_cast<size_t>(f.r)], ls = old_l[static_cast<size_t>(f.s)];
  double le = old_l[static_cast<size_t>(f.diagonal)];
  double lf = f.lambdas[static_cast<size_t>(f.diagonal)];
  out[static_cast<size_t>(f.diagonal)] =
      (lr * v[static_cast<size_t>(f.p)] + lp * v[static_cast<size_t>(f.r)] +
       ls * v[static_cast<size_t>(f.q)] + lq * v[static_cast<size_t>(f.s)] -
       lf * v[static_cast<size_t>(f.diagonal)]) /
      le;
  return out;
}

namespace fixtures {

IdealTriangulation once_punctured_torus() {
  return IdealTriangulation(3, {{0, 1, 2}, {0, 1, 2}},
                            {{{0, 0}, {1, 0}, false}, {{0, 1}, {1, 1}, false}, {{0, 2}, {1, 2}, false}});
}

IdealTriangulation thrice_punctured_sphere() {
  return IdealTriangulation(3, {{0, 1, 2}, {2, 1, 0}},
                            {{{0, 0}, {1, 2}, false}, {{0, 1}, {1, 1}, false}, {{0, 2}, {1, 0}, false}});
}

IdealTriangulation genus2_one_puncture() {
  // Octagon a b a^-1 b^-1 c d c^-1 d^-1 coned from one vertex: diagonals
  // 0..4, identified boundary pairs 5..8.
  std::vector<std::array<int, 3>> tris = {
      {5, 6, 0}, {0, 5, 1}, {1, 6, 2}, {2, 7, 3}, {3, 8, 4}, {4, 7, 8}};
  std::vector<Gluing> glue = {
      {{0, 2}, {1, 0}, false},  // diagonal 0
      {{1, 2}, {2, 0}, false},  // diagonal 1
      {{2, 2}, {3, 0}, false},  // diagonal 2
      {{3, 2}, {4, 0}, false},  // diagonal 3
      {{4, 2}, {5, 0}, false},  // diagonal 4
      {{0, 0}, {1, 1}, false},  // a
      {{0, 1}, {2, 1}, false},  // b
      {{3, 1}, {5, 1}, false},  // c
      {{4, 1}, {5, 2}, false},  // d
  };
  return IdealTriangulation(9, std::move(tris), std::move(glue));
}

}  // namespace fixtures

}  // namespace horo
