#pragma once

#include <vector>

#include "horo/mobius.hpp"
#include "horo/ptolemy.hpp"
#include "horo/realization.hpp"

namespace horo {

// Ideal triangulation of a punctured surface. Triangle sides are directed
// corner j -> corner j+1 (mod 3), all triangles counterclockwise; a gluing
// identifies two sides reversing direction (a same-direction gluing is
// recorded and rejected as non-orientable by validate).
struct SideRef {
  int tri = -1;
  int side = -1;
  bool operator==(const SideRef&) const = default;
};

struct Gluing {
  SideRef a, b;
  bool flip = false;  // true = same-direction identification (non-orientable)
};

class IdealTriangulation {
 public:
  IdealTriangulation(int num_edges, std::vector<std::array<int, 3>> tri_edges,
                     std::vector<Gluing> gluings);

  int num_edges() const { return num_edges_; }
  int num_triangles() const { return static_cast<int>(tri_edges_.size()); }
  int edge(int tri, int side) const { return tri_edges_[static_cast<size_t>(tri)][static_cast<size_t>(side)]; }
  const std::vector<std::array<int, 3>>& triangles() const { return tri_edges_; }
  const std::vector<Gluing>& gluings() const { return gluings_; }

  // Partner side across the gluing; available after construction.
  SideRef partner(const SideRef& s) const;

  // Checks closedness, orientability, the Euler count, hyperbolicity;
  // returns (genus, punctures).
  std::pair<int, int> validate() const;

  // Vertex class of each corner (t, j), indexed after validate().
  int vertex_class(int tri, int corner) const;
  int num_vertex_classes() const;
  // Corners around one puncture in rotation order.
  std::vector<SideRef> corners_at(int vertex_class) const;

 private:
  void build_corner_classes() const;

  int num_edges_;
  std::vector<std::array<int, 3>> tri_edges_;
  std::vector<Gluing> gluings_;
  std::vector<std::array<SideRef, 3>> partner_;  // [tri][side]
  mutable std::vector<std::array<int, 3>> corner_class_;
  mutable int num_classes_ = -1;
};

// Positive edge lengths indexed by edge id.
using SurfaceLambda = std::vector<double>;

struct LiftedTriangle {
  int tri = -1;
  std::array<LightConePoint, 3> corner;
  int parent = -1;     // index into DevelopedComplex::lifts
  int parent_side = -1;
  int depth = 0;
};

struct DevelopedComplex {
  std::vector<LiftedTriangle> lifts;
};

// Theorem-4 developing map: base triangle lifted over (inf, 0, 1), then
// breadth-first Lemma-2 extension through the face-pairing tree.
DevelopedComplex develop(const IdealTriangulation& t, const SurfaceLambda& l, int depth,
                         int base_triangle = 0);

// Canonical lift of one triangle: corner 0, 1, 2 over inf, 0, 1.
std::array<LightConePoint, 3> lift_triangle(const IdealTriangulation& t, const SurfaceLambda& l,
                                            int tri);

struct LoopStep {
  int tri = -1;
  int side = -1;
};

// Mobius map carrying the base lift of loop.front().tri to the lift
// reached by developing along the closed dual path.
Mobius holonomy(const IdealTriangulation& t, const SurfaceLambda& l,
                const std::vector<LoopStep>& loop);

// |trace| of the holonomy around one puncture; 2 for every positive l.
double puncture_trace(const IdealTriangulation& t, const SurfaceLambda& l, int puncture);

// The rotation loop used by puncture_trace.
std::vector<LoopStep> puncture_loop(const IdealTriangulation& t, int puncture);

// Total horocyclic length at a puncture: sum of 2 l_i/(l_j l_k) over
// incident corners, opposite edge on top.
double horocycle_length(const IdealTriangulation& t, const SurfaceLambda& l, int puncture);

// Weil-Petersson two-form: sum of omega over triangles in the orientation
// order, evaluated on edge-indexed tangent vectors.
double surface_wp(const IdealTriangulation& t, const SurfaceLambda& l,
                  const std::vector<double>& v1, const std::vector<double>& v2);

struct SurfaceFlip {
  IdealTriangulation triangulation;
  SurfaceLambda lambdas;
  // Quad around the flipped edge: side edge ids cyclically (p, q, r, s)
  // with the diagonal separating {p, q} from {r, s}.
  int p, q, r, s, diagonal;
};

// Diagonal exchange on an interior edge; the new value comes from the
// Ptolemy relation. Refuses self-folded quads.
SurfaceFlip flip_edge(const IdealTriangulation& t, const SurfaceLambda& l, int edge);

// Tangent transport through a flip (chain rule on ef = pr + qs).
std::vector<double> flip_pushforward_tangent(const SurfaceFlip& f, const SurfaceLambda& old_l,
                                             const std::vector<double>& v);

namespace fixtures {
IdealTriangulation once_punctured_torus();
IdealTriangulation thrice_punctured_sphere();
IdealTriangulation genus2_one_puncture();
}  // namespace fixtures

}  // namespace horo
