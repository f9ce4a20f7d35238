#include "horo/farey.hpp"

#include <deque>

namespace horo {

OrientedEdge::OrientedEdge(Rational f, Rational t) : from(std::move(f)), to(std::move(t)) {
  if (Rational::farey_pairing(from, to) != 1)
    fail(errc::parse_error, "endpoints " + from.str() + ", " + to.str() + " are not Farey neighbors");
}

Edge::Edge(const Rational& a, const Rational& b) : lo(a), hi(b) {
  if (hi < lo) std::swap(lo, hi);
  if (Rational::farey_pairing(lo, hi) != 1)
    fail(errc::parse_error, "endpoints " + a.str() + ", " + b.str() + " are not Farey neighbors");
}

Edge Edge::parse(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) fail(errc::parse_error, "edge key wants 'p/q,r/s', got '" + s + "'");
  return Edge(Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1)));
}

OrientedEdge edge_of(const PSL2Mat& A) {
  return OrientedEdge(A.apply(Rational(0, 1)), A.apply(Rational::infinity()));
}

PSL2Mat mat_of_edge(const OrientedEdge& e) {
  // Columns (a,c) = to, (b,d) = from, sign of one column fixed by det = 1.
  BigInt a = e.to.num(), c = e.to.den();
  BigInt b = e.from.num(), d = e.from.den();
  if (a * d - b * c == 1) return PSL2Mat(a, b, c, d);
  return PSL2Mat(a, -b, c, -d);
}

std::pair<Rational, Rational> edge_apexes(const Edge& e) {
  return {Rational(e.lo.num() + e.hi.num(), e.lo.den() + e.hi.den()),
          Rational(e.lo.num() - e.hi.num(), e.lo.den() - e.hi.den())};
}

FareyComplex enumerate_edges(int generation) {
  if (generation < 0) fail(errc::depth_limit, "generation must be >= 0");
  if (generation > 64) fail(errc::depth_limit, "generation capped at 64");

  FareyComplex fc;
  fc.generation = generation;

  const Rational inf = Rational::infinity();
  const Rational zero(0, 1), one(1, 1), minus_one(-1, 1);
  for (const auto& v : {inf, zero, one, minus_one}) fc.vertex_generation[v] = 0;

  // Base quadrilateral: the two triangles adjacent to the doe.
  fc.edges.insert(Edge(zero, inf));
  fc.edges.insert(Edge(zero, one));
  fc.edges.insert(Edge(one, inf));
  fc.edges.insert(Edge(zero, minus_one));
  fc.edges.insert(Edge(minus_one, inf));

  // Frontier edges with the apex of the triangle already built on them.
  struct Frontier {
    Edge edge;
    Rational inner;
  };
  std::deque<Frontier> frontier;
  frontier.push_back({Edge(zero, one), inf});
  frontier.push_back({Edge(one, inf), zero});
  frontier.push_back({Edge(zero, minus_one), inf});
  frontier.push_back({Edge(minus_one, inf), zero});

  for (int gen = 1; gen <= generation; ++gen) {
    std::deque<Frontier> next;
    for (const auto& f : frontier) {
      auto [m1, m2] = edge_apexes(f.edge);
      Rational apex = (m1 == f.inner) ? m2 : m1;
      fc.vertex_generation.emplace(apex, gen);
      fc.edges.insert(Edge(f.edge.lo, apex));
      fc.edges.insert(Edge(f.edge.hi, apex));
      fc.steps.push_back({f.edge, f.inner, apex});
      next.push_back({Edge(f.edge.lo, apex), f.edge.hi});
      next.push_back({Edge(f.edge.hi, apex), f.edge.lo});
    }
    frontier = std::move(next);
  }
  return fc;
}

int farey_generation(const Rational& x) {
  if (x.is_infinity()) return 0;
  BigInt p = x.num(), q = x.den();
  if (p < 0) p = -p;  // the negative arc mirrors the positive one
  if (p == 0) return 0;
  // Sum of continued-fraction digits of p/q (plain Euclid ends with a
  // final digit >= 2 automatically), minus one.
  BigInt sum = 0;
  while (q != 0) {
    sum += p / q;
    BigInt r = p % q;
    p = q;
    q = r;
  }
  return static_cast<int>(sum - 1);
}

}  // namespace horo
