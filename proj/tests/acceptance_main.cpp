// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are fixed here, not configurable.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include <boost/rational.hpp>

#include "horo/json_io.hpp"
#include "horo/solenoid.hpp"
#include "horo/surface.hpp"
#include "test_util.hpp"

using namespace horo;
using horo::test::random_pinched;
using horo::test::urand;

namespace {

int g_failures = 0;

void report(int number, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", number, name,
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---- 1. Ptolemy identity suite ------------------------------------------

void criterion_1() {
  std::mt19937 rng(101);
  using Rat = boost::rational<BigInt>;
  bool exact_ok = true;
  for (int i = 0; i < 10000 && exact_ok; ++i) {
    auto rnd = [&rng] {
      return Rat(BigInt(static_cast<int>(rng() % 500) + 1),
                 BigInt(static_cast<int>(rng() % 60) + 1));
    };
    QuadChart<Rat> q{rnd(), rnd(), rnd(), rnd(), rnd()};
    QuadChart<Rat> ff = flip(flip(q));
    exact_ok = ff.e == q.e && ff.a == q.c && ff.b == q.d && ff.c == q.a && ff.d == q.b;
  }

  double worst_float = 0;
  for (int i = 0; i < 10000; ++i) {
    QuadLambdas q{urand(rng, 0.1, 10), urand(rng, 0.1, 10), urand(rng, 0.1, 10),
                  urand(rng, 0.1, 10), urand(rng, 0.1, 10)};
    worst_float = std::max(worst_float, std::abs(flip(flip(q)).e - q.e));
  }

  // Geometric cross-check: built decorations against the flip prediction.
  double worst_geo = 0;
  int quads = 0;
  while (quads < 1000) {
    LambdaAssignment l = random_pinched(rng, 12);
    Decoration d = build_decoration(l, 6);
    FareyComplex fc = enumerate_edges(4);
    for (const Edge& e : fc.edges) {
      if (quads >= 1000) break;
      auto [m1, m2] = edge_apexes(e);
      if (!d.has(m1) || !d.has(m2)) continue;
      double geometric = other_diagonal_lambda(d, e);
      double predicted =
          (l(Edge(e.lo, m1)) * l(Edge(e.hi, m2)) + l(Edge(m1, e.hi)) * l(Edge(m2, e.lo))) / l(e);
      worst_geo = std::max(worst_geo, std::abs(geometric - predicted));
      ++quads;
    }
  }

  bool pass = exact_ok && worst_float < 1e-12 && worst_geo < 1e-10;
  report(1, "Ptolemy identity suite", pass,
         "exact=" + std::string(exact_ok ? "yes" : "no") + " float=" + fmt(worst_float) +
             " geometric=" + fmt(worst_geo) + " over " + std::to_string(quads) + " quads");
}

// ---- 2. omega flip invariance -------------------------------------------

void criterion_2() {
  std::mt19937 rng(102);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    QuadLambdas q{urand(rng, 0.1, 10), urand(rng, 0.1, 10), urand(rng, 0.1, 10),
                  urand(rng, 0.1, 10), urand(rng, 0.1, 10)};
    QuadTangent v1{urand(rng, -2, 2), urand(rng, -2, 2), urand(rng, -2, 2), urand(rng, -2, 2),
                   urand(rng, -2, 2)};
    QuadTangent v2{urand(rng, -2, 2), urand(rng, -2, 2), urand(rng, -2, 2), urand(rng, -2, 2),
                   urand(rng, -2, 2)};
    worst = std::max(worst, check_omega_invariance(q, v1, v2));
  }
  report(2, "omega flip invariance", worst < 1e-10, "max residual " + fmt(worst) + " over 1e4");
}

// ---- 3. Lemma 1/2 reconstruction ----------------------------------------

void criterion_3() {
  std::mt19937 rng(103);
  double worst = 0;
  bool side_ok = true;
  int done = 0;
  while (done < 1000) {
    double x0 = urand(rng, -5, 5), x1 = urand(rng, -5, 5), x2 = urand(rng, -5, 5);
    if (std::abs(x0 - x1) < 1e-2 || std::abs(x1 - x2) < 1e-2 || std::abs(x0 - x2) < 1e-2) continue;
    Vec3 r0 = ray_over_boundary(x0) * urand(rng, 0.2, 5.0);
    Vec3 r1 = ray_over_boundary(x1) * urand(rng, 0.2, 5.0);
    Vec3 r2 = ray_over_boundary(x2) * urand(rng, 0.2, 5.0);
    double l0 = urand(rng, 0.1, 10), l1 = urand(rng, 0.1, 10), l2 = urand(rng, 0.1, 10);
    auto u = realize_triangle(r0, r1, r2, l0, l1, l2);
    worst = std::max({worst, std::abs(lambda_lightcone(u[1], u[2]) - l0),
                      std::abs(lambda_lightcone(u[2], u[0]) - l1),
                      std::abs(lambda_lightcone(u[0], u[1]) - l2)});

    double le0 = urand(rng, 0.1, 10), le1 = urand(rng, 0.1, 10);
    LightConePoint v = extend_across(u[0], u[1], u[2], le0, le1);
    worst = std::max({worst, std::abs(lambda_lightcone(v, u[0]) - le0),
                      std::abs(lambda_lightcone(v, u[1]) - le1)});
    side_ok = side_ok && mink_det(u[0].v, u[1].v, v.v) * mink_det(u[0].v, u[1].v, u[2].v) < 0;
    ++done;
  }
  report(3, "Lemma 1/2 reconstruction", worst < 1e-10 && side_ok,
         "max error " + fmt(worst) + ", side contract " + (side_ok ? "held" : "BROKE"));
}

// ---- 4. Theorem 6 identity case -----------------------------------------

void criterion_4() {
  Decoration d = build_decoration(LambdaAssignment(), 10);
  double worst_map = 0, worst_diam = 0;
  for (const auto& [v, u] : d.points) {
    Horocycle h = duality_to_horocycle(u, Model::half_plane);
    if (v.is_infinity()) {
      worst_diam = std::max(worst_diam, std::abs(h.size() - 1.0));
      continue;
    }
    double q = v.den().convert_to<double>();
    worst_map = std::max(worst_map, std::abs(h.center_real() - v.to_double()));
    worst_diam = std::max(worst_diam, std::abs(h.size() - 1.0 / (q * q)));
  }
  bool pass = worst_map < 1e-12 && worst_diam < 1e-12;
  report(4, "Theorem 6 identity case", pass,
         "generation 10, map dev " + fmt(worst_map) + ", diameter dev " + fmt(worst_diam));
}

// ---- 5. Theorem 6 monotonicity ------------------------------------------

void criterion_5() {
  std::mt19937 rng(105);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    LambdaAssignment l = random_pinched(rng, 20, 0.5, 2.0);
    if (!circularly_monotone(circle_map_samples(l, 8))) ++failures;
  }
  report(5, "Theorem 6 monotonicity", failures == 0,
         std::to_string(100 - failures) + "/100 assignments monotone at generation 8");
}

// ---- 6. Theorem 4 parabolicity ------------------------------------------

void criterion_6() {
  std::mt19937 rng(106);
  auto torus = fixtures::once_punctured_torus();
  auto sphere = fixtures::thrice_punctured_sphere();
  double worst = 0, worst_flip = 0;
  for (int trial = 0; trial < 100; ++trial) {
    SurfaceLambda lt{urand(rng, 0.3, 3), urand(rng, 0.3, 3), urand(rng, 0.3, 3)};
    worst = std::max(worst, std::abs(puncture_trace(torus, lt, 0) - 2.0));
    SurfaceFlip ft = flip_edge(torus, lt, static_cast<int>(rng() % 3));
    worst_flip =
        std::max(worst_flip, std::abs(puncture_trace(ft.triangulation, ft.lambdas, 0) - 2.0));

    SurfaceLambda ls{urand(rng, 0.3, 3), urand(rng, 0.3, 3), urand(rng, 0.3, 3)};
    for (int p = 0; p < 3; ++p)
      worst = std::max(worst, std::abs(puncture_trace(sphere, ls, p) - 2.0));
    SurfaceFlip fs = flip_edge(sphere, ls, static_cast<int>(rng() % 3));
    for (int p = 0; p < 3; ++p)
      worst_flip =
          std::max(worst_flip, std::abs(puncture_trace(fs.triangulation, fs.lambdas, p) - 2.0));
  }
  bool pass = worst < 1e-8 && worst_flip < 1e-8;
  report(6, "Theorem 4 parabolicity", pass,
         "trace dev " + fmt(worst) + ", after flips " + fmt(worst_flip));
}

// ---- 7. Proposition 12 numerics -----------------------------------------

void criterion_7() {
  auto lvl = FiniteLevel::congruence(2);
  bool mono_ok = true, range_ok = true;
  double worst_gap = 0;
  for (unsigned seed = 1; seed <= 20; ++seed) {
    auto d = TransverseLambda::random_equivariant(lvl, 0.5, 2.0, seed);
    double K = pinch_bound(d);
    for (int c = 0; c < lvl->index(); ++c) {
      LambdaAssignment l = d.leaf_assignment(c);
      auto e8 = derivative_at_infinity(l, 8);
      auto e16 = derivative_at_infinity(l, 16);
      auto e32 = derivative_at_infinity(l, 32);
      // Non-increasing; gaps below float resolution count as converged 0.
      mono_ok = mono_ok && e8.cauchy_gap >= e16.cauchy_gap && e16.cauchy_gap >= e32.cauchy_gap;
      range_ok = range_ok && e32.estimate >= 1.0 / (K * K) && e32.estimate <= K * K;
      worst_gap = std::max(worst_gap, e32.cauchy_gap);
    }
  }
  report(7, "Proposition 12 numerics", mono_ok && range_ok,
         std::string("gaps ") + (mono_ok ? "non-increasing" : "INCREASED") + ", estimates " +
             (range_ok ? "inside" : "OUTSIDE") + " [K^-2, K^2], final gap " + fmt(worst_gap));
}

// ---- 8. post-Theorem-8 counterexample ------------------------------------

void criterion_8() {
  LambdaAssignment ce = counterexample_assignment(2.0);
  auto pinch = is_pinched(ce);
  bool pinched = pinch.has_value();
  auto right = derivative_at_infinity(ce, 32, Side::right);
  auto left = derivative_at_infinity(ce, 32, Side::left);
  double ratio = right.estimate / left.estimate;
  bool pass = pinched && ratio >= 1.8 && ratio <= 2.2;
  report(8, "one-sided derivative counterexample", pass,
         std::string("pinched=") + (pinched ? "yes" : "no") + " K=" +
             (pinch ? fmt(pinch->k) : "-") + " right/left=" + fmt(ratio) + " at depth 32");
}

// ---- 9. Theorem 11 cocycle ------------------------------------------------

std::vector<PSL2Word> words_up_to(int max_len) {
  std::vector<PSL2Word> out{PSL2Word()};
  for (bool s_prefix : {false, true}) {
    for (int sign = 0; sign < 2; ++sign) {
      Gen a = sign ? Gen::Tinv : Gen::T;
      Gen b = sign ? Gen::Uinv : Gen::U;
      int body = max_len - (s_prefix ? 1 : 0);
      std::vector<std::vector<Gen>> cur{{}};
      for (int len = 1; len <= body; ++len) {
        std::vector<std::vector<Gen>> next;
        for (const auto& w : cur)
          for (Gen g : {a, b}) {
            auto v = w;
            v.push_back(g);
            next.push_back(v);
            auto full = v;
            if (s_prefix) full.insert(full.begin(), Gen::S);
            out.emplace_back(full);
          }
        cur = std::move(next);
      }
    }
    if (s_prefix) out.emplace_back(std::vector<Gen>{Gen::S});
  }
  return out;
}

void criterion_9() {
  auto lvl = FiniteLevel::congruence(2);
  auto words = words_up_to(4);
  double worst = 0;
  for (unsigned seed = 1; seed <= 20; ++seed) {
    RhoCocycle R(TransverseLambda::random_equivariant(lvl, 0.5, 2.0, seed));
    for (const PSL2Word& w1 : words) {
      PSL2Mat m1 = mat_of_word(w1);
      PSL2Word n1 = word_of_mat(m1);
      for (const PSL2Word& w2 : words) {
        PSL2Mat m2 = mat_of_word(w2);
        PSL2Word n2 = word_of_mat(m2);
        PSL2Word prod = word_of_mat(m1 * m2);
        for (int c = 0; c < lvl->index(); ++c) {
          int twisted = lvl->act_mat(c, m2.inverse());
          worst = std::max(worst, psl_distance(R(prod, c), R(n1, twisted) * R(n2, c)));
        }
      }
    }
  }

  // Degenerate oracle: constant sqrt(2) data embeds the modular group.
  auto lvl3 = FiniteLevel::congruence(3);
  RhoCocycle Rc(TransverseLambda::constant(lvl3, kSqrt2));
  double worst_const = 0;
  for (const PSL2Word& w : words) {
    Mobius want = Mobius::from_integer(mat_of_word(w));
    for (int c = 0; c < lvl3->index(); ++c)
      worst_const = std::max(worst_const, psl_distance(Rc(w, c), want));
  }

  bool pass = worst < 1e-8 && worst_const < 1e-9;
  report(9, "Theorem 11 cocycle", pass,
         "residual " + fmt(worst) + " over 20 data sets x " + std::to_string(words.size()) +
             "^2 word pairs x 6 cosets; constant-data deviation " + fmt(worst_const));
}

// ---- 10. pinching and flip/refine stability -------------------------------

void criterion_10() {
  auto lvl = FiniteLevel::congruence(2);
  auto lvl3 = FiniteLevel::congruence(3);
  bool pass = true;
  std::string why = "all bounds finite and refine-invariant";
  for (unsigned seed = 1; seed <= 20 && pass; ++seed) {
    auto d = TransverseLambda::random_equivariant(lvl, 0.5, 2.0, seed);
    double k = pinch_bound(d);
    if (!std::isfinite(k)) {
      pass = false;
      why = "non-finite pinch bound";
      break;
    }
    TransverseLambda fine = refine(d, 2);
    if (std::abs(pinch_bound(fine) - k) > 1e-14) {
      pass = false;
      why = "refine moved the pinch bound";
      break;
    }
    if (validate_equivariance(d, 3) != 0.0 || validate_equivariance(fine, 3) != 0.0) {
      pass = false;
      why = "equivariance violated";
      break;
    }
    // Flips at level 3 (level 2 orbits conflict): equivariance exact after.
    auto d3 = TransverseLambda::random_equivariant(lvl3, 0.5, 2.0, seed);
    TransverseLambda flipped = equivariant_flip(d3, Edge(Rational(0, 1), Rational::infinity()));
    if (validate_equivariance(flipped, 3) != 0.0 || !std::isfinite(pinch_bound(flipped))) {
      pass = false;
      why = "flip broke equivariance or pinching";
      break;
    }
  }
  report(10, "Theorem 11 pinching claim", pass, why);
}

// ---- 11. CLI determinism ---------------------------------------------------

void criterion_11() {
  namespace fs = std::filesystem;
  const std::string cli = HORO_CLI_PATH;
  const fs::path fixtures = HORO_FIXTURES;
  const fs::path tmp = fs::path(HORO_TEST_TMP) / "acceptance";
  fs::create_directories(tmp);

  std::vector<std::string> invocations = {
      "validate " + (fixtures / "torus.json").string(),
      "validate " + (fixtures / "sphere.json").string(),
      "validate " + (fixtures / "genus2.json").string(),
      "validate " + (fixtures / "level2.json").string(),
      "validate " + (fixtures / "assignment.json").string(),
      "validate " + (fixtures / "identity.json").string(),
      "render " + (fixtures / "assignment.json").string() + " -d 4 --horocycles",
      "render " + (fixtures / "identity.json").string() + " -d 4",
      "circlemap " + (fixtures / "assignment.json").string() + " -d 6",
      "circlemap " + (fixtures / "identity.json").string() + " -d 6",
      "holonomy " + (fixtures / "torus.json").string() + " " +
          (fixtures / "loops_torus.json").string(),
      "solenoid " + (fixtures / "level2.json").string() + " -w S,T,UT,Stt",
      "solenoid " + (fixtures / "level3const.json").string() + " -w ST",
      "flip " + (fixtures / "torus.json").string() + " -e 2",
      "flip " + (fixtures / "identity.json").string() + " -e 0/1,1/0",
      "flip " + (fixtures / "level3const.json").string() + " -e 0/1,1/0 --orbit",
  };

  bool pass = true;
  int idx = 0;
  for (const std::string& args : invocations) {
    fs::path o1 = tmp / ("run" + std::to_string(idx) + "a");
    fs::path o2 = tmp / ("run" + std::to_string(idx) + "b");
    std::string c1 = cli + " " + args + " > " + o1.string() + " 2>&1";
    std::string c2 = cli + " " + args + " > " + o2.string() + " 2>&1";
    int r1 = std::system(c1.c_str());
    int r2 = std::system(c2.c_str());
    auto slurp = [](const fs::path& p) {
      std::ifstream in(p, std::ios::binary);
      return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    };
    std::string b1 = slurp(o1), b2 = slurp(o2);
    if (r1 != 0 || r2 != 0 || b1.empty() || b1 != b2) pass = false;
    ++idx;
  }
  report(11, "CLI determinism", pass,
         std::to_string(invocations.size()) + " invocations run twice, byte-compared");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (g_failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
  } else {
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
