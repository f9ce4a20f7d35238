#pragma once

#include <map>
#include <set>
#include <vector>

#include "horo/psl2.hpp"

namespace horo {

// Oriented edge of the Farey tessellation; endpoints are always Farey
// neighbors. e_A = A(doe) identifies these with PSL2(Z).
struct OrientedEdge {
  Rational from, to;

  OrientedEdge(Rational f, Rational t);
  OrientedEdge reversed() const { return OrientedEdge(to, from); }
  bool operator==(const OrientedEdge& o) const { return from == o.from && to == o.to; }
  auto operator<=>(const OrientedEdge& o) const = default;
};

// Unoriented edge keyed by the canonically ordered endpoint pair
// (lambda lengths are symmetric, so assignments key on these).
struct Edge {
  Rational lo, hi;  // lo < hi in the extended-rational order

  Edge(const Rational& a, const Rational& b);
  bool operator==(const Edge& o) const { return lo == o.lo && hi == o.hi; }
  auto operator<=>(const Edge& o) const = default;

  std::string str() const { return lo.str() + "," + hi.str(); }
  static Edge parse(const std::string&);
};

inline OrientedEdge doe() { return OrientedEdge(Rational(0, 1), Rational::infinity()); }

// A(doe); bijection between PSL2(Z) and oriented edges.
OrientedEdge edge_of(const PSL2Mat& A);

// The matrix with edge_of(B) = e, i.e. B(0/1) = e.from, B(1/0) = e.to.
PSL2Mat mat_of_edge(const OrientedEdge& e);

// Triangle of the tessellation, vertices in no particular order.
struct FareyTriangle {
  Rational v0, v1, v2;
};

// All Farey edges with both endpoints of generation <= n, grown by mediant
// subdivision from the two triangles adjacent to the doe. Also exposes the
// triangles and per-vertex generations, which the decoration builder walks.
struct FareyComplex {
  int generation = 0;
  std::set<Edge> edges;
  std::map<Rational, int> vertex_generation;
  // Subdivision steps in deterministic (BFS) order: the triangle built
  // across `base` away from `witness`, creating vertex `apex`.
  struct Step {
    Edge base;
    Rational witness;
    Rational apex;
  };
  std::vector<Step> steps;
};

FareyComplex enumerate_edges(int generation);

// Minimal n with x a vertex of enumerate_edges(n); continued-fraction
// digit sum, no enumeration.
int farey_generation(const Rational& x);

// For a Farey edge, the apexes of its two adjacent triangles:
// (p+r)/(q+s) and (p-r)/(q-s).
std::pair<Rational, Rational> edge_apexes(const Edge& e);

}  // namespace horo
