#include <doctest.h>

#include "horo/solenoid.hpp"
#include "test_util.hpp"

using namespace horo;

namespace {

const Edge kDoe{Rational(0, 1), Rational::infinity()};

std::vector<PSL2Word> words_up_to(int max_len) {
  std::vector<PSL2Word> out{PSL2Word()};
  std::vector<std::vector<Gen>> layer{{}};
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

}  // namespace

TEST_CASE("congruence level indices") {
  CHECK(FiniteLevel::congruence(2)->index() == 6);
  CHECK(FiniteLevel::congruence(3)->index() == 12);
  CHECK(FiniteLevel::congruence(4)->index() == 24);
  CHECK(FiniteLevel::congruence(5)->index() == 60);
  CHECK_THROWS_WITH_AS(FiniteLevel::congruence(14), doctest::Contains("LevelTooLarge"), Error);
  CHECK_THROWS_WITH_AS(FiniteLevel::congruence(1), doctest::Contains("LevelTooLarge"), Error);
}

TEST_CASE("action tables are consistent permutations") {
  auto lvl = FiniteLevel::congruence(3);
  for (int c = 0; c < lvl->index(); ++c) {
    CHECK(lvl->act(lvl->act(c, Gen::S), Gen::S) == c);                  // S involutive
    CHECK(lvl->act(lvl->act(c, Gen::T), Gen::Tinv) == c);               // inverses
    CHECK(lvl->act_mat(c, PSL2Mat::S() * PSL2Mat::T()) ==
          lvl->act(lvl->act(c, Gen::S), Gen::T));                       // word = matrix
  }
  // Rebuild the level from its own raw tables; identity must sit at 0.
  int id = lvl->identity_coset();
  std::vector<int> relabel(static_cast<size_t>(lvl->index()));
  for (int c = 0; c < lvl->index(); ++c)
    relabel[static_cast<size_t>(c)] = c == id ? 0 : (c == 0 ? id : c);
  auto perm = [&](Gen g) {
    std::vector<int> p(static_cast<size_t>(lvl->index()));
    for (int c = 0; c < lvl->index(); ++c)
      p[static_cast<size_t>(relabel[static_cast<size_t>(c)])] =
          relabel[static_cast<size_t>(lvl->act(c, g))];
    return p;
  };
  auto custom = FiniteLevel::from_tables(perm(Gen::S), perm(Gen::T), perm(Gen::U));
  CHECK(custom->index() == lvl->index());
  CHECK(custom->identity_coset() == 0);
  // Same permutation group, relabeled.
  for (int c = 0; c < lvl->index(); ++c)
    CHECK(custom->act(relabel[static_cast<size_t>(c)], Gen::U) ==
          relabel[static_cast<size_t>(lvl->act(c, Gen::U))]);

  // Broken tables are rejected.
  auto bad = perm(Gen::S);
  std::swap(bad[0], bad[1]);
  CHECK_THROWS_AS(FiniteLevel::from_tables(bad, perm(Gen::T), perm(Gen::U)), Error);
}

TEST_CASE("equivariance holds exactly for generated data") {
  auto lvl = FiniteLevel::congruence(2);
  CHECK(validate_equivariance(TransverseLambda::constant(lvl, kSqrt2), 3) == 0.0);
  for (unsigned seed : {1u, 2u, 3u})
    CHECK(validate_equivariance(TransverseLambda::random_equivariant(lvl, 0.5, 2.0, seed), 3) ==
          0.0);
}

TEST_CASE("perturbations surface as their own size") {
  auto lvl = FiniteLevel::congruence(2);
  auto d = TransverseLambda::random_equivariant(lvl, 0.5, 2.0, 4);
  Edge e(Rational(0, 1), Rational(1, 1));
  double base = d.leaf_value(2, e);
  TransverseLambda p = d.perturb(2, e, base + 0.25);
  CHECK(validate_equivariance(p, 3) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("pinch bounds") {
  auto lvl = FiniteLevel::congruence(3);
  CHECK(pinch_bound(TransverseLambda::constant(lvl, kSqrt2)) == doctest::Approx(kSqrt2));
  auto d = TransverseLambda::random_equivariant(lvl, 0.5, 2.0, 5);
  CHECK(pinch_bound(d) <= 2.0 + 1e-12);
  CHECK(pinch_bound(d) >= 1.0);
  auto flipped = equivariant_flip(d, kDoe);
  CHECK(std::isfinite(pinch_bound(flipped)));
}

TEST_CASE("rho anchors") {
  auto lvl = FiniteLevel::congruence(2);
  auto d = TransverseLambda::random_equivariant(lvl, 0.5, 2.0, 6);
  for (int c = 0; c < lvl->index(); ++c) {
    CHECK(psl_distance(rho(d, PSL2Word(), c), Mobius::identity()) == 0.0);
    Mobius s = rho(d, PSL2Word::parse("S"), c);
    Mobius s2 = s * s;
    CHECK(psl_distance(s2, Mobius::identity()) < 1e-9);  // involutive
  }
  CHECK_THROWS_WITH_AS(rho(d, PSL2Word::parse("TS"), 0), doctest::Contains("BadNormalForm"),
                       Error);
}

TEST_CASE("constant data degenerates rho to the integer inclusion") {
  auto lvl = FiniteLevel::congruence(3);
  auto d = TransverseLambda::constant(lvl, kSqrt2);
  RhoCocycle R(d);
  for (const PSL2Word& w : words_up_to(6)) {
    Mobius want = Mobius::from_integer(mat_of_word(w));
    for (int c = 0; c < lvl->index(); c += 5) CHECK(psl_distance(R(w, c), want) < 1e-9);
  }
}

TEST_CASE("cocycle identity") {
  auto lvl = FiniteLevel::congruence(2);
  for (unsigned seed : {7u, 8u}) {
    auto d = TransverseLambda::random_equivariant(lvl, 0.5, 2.0, seed);
    auto words = words_up_to(3);
    double worst = 0;
    for (const auto& w1 : words)
      for (const auto& w2 : words)
        for (int c = 0; c < lvl->index(); ++c)
          worst = std::max(worst, check_cocycle(d, w1, w2, c));
    CHECK(worst < 1e-8);

    // w2 = I: both sides are literally the same evaluation.
    CHECK(check_cocycle(d, PSL2Word::parse("SUT"), PSL2Word(), 3) < 1e-12);
    // S twice: rho(S, tS) rho(S, t) = identity.
    Mobius prod = rho(d, PSL2Word::parse("S"), lvl->act(1, Gen::S)) * rho(d, PSL2Word::parse("S"), 1);
    CHECK(psl_distance(prod, Mobius::identity()) < 1e-9);
  }
}

TEST_CASE("equivariant flips") {
  auto lvl = FiniteLevel::congruence(3);
  auto d = TransverseLambda::constant(lvl, kSqrt2);
  TransverseLambda f = equivariant_flip(d, kDoe);
  int slot = f.slot_of(lvl->identity_coset(), kDoe);
  CHECK(f.slot_flipped(slot));
  CHECK(f.slot_value(slot) == doctest::Approx(2 * kSqrt2).epsilon(1e-12));
  CHECK(validate_equivariance(f, 3) == 0.0);

  TransverseLambda ff = equivariant_flip(f, kDoe);
  CHECK(!ff.slot_flipped(slot));
  CHECK(ff.slot_value(slot) == doctest::Approx(kSqrt2).epsilon(1e-12));

  // Random data: involution to 1e-12 on every slot.
  auto r = TransverseLambda::random_equivariant(lvl, 0.5, 2.0, 11);
  auto rf = equivariant_flip(equivariant_flip(r, kDoe), kDoe);
  for (int s : r.slots()) CHECK(rf.slot_value(s) == doctest::Approx(r.slot_value(s)).epsilon(1e-12));

  // Overlapping quad orbits at level 2: U^2 = I mod 2.
  auto lvl2 = FiniteLevel::congruence(2);
  CHECK_THROWS_WITH_AS(equivariant_flip(TransverseLambda::constant(lvl2, kSqrt2), kDoe),
                       doctest::Contains("OrbitConflict"), Error);

  // A side of an already-flipped orbit cannot flip.
  Edge side(Rational(0, 1), Rational(1, 1));
  CHECK_THROWS_WITH_AS(equivariant_flip(f, side), doctest::Contains("OrbitConflict"), Error);
}

TEST_CASE("refinement is a pullback") {
  auto lvl = FiniteLevel::congruence(2);
  auto d = TransverseLambda::random_equivariant(lvl, 0.5, 2.0, 12);
  TransverseLambda fine = refine(d, 2);
  CHECK(fine.level().congruence_modulus() == 4);
  CHECK(fine.level().index() == 24);
  CHECK(validate_equivariance(fine, 3) == 0.0);
  CHECK(pinch_bound(fine) == doctest::Approx(pinch_bound(d)).epsilon(1e-15));

  // Value sets match exactly.
  std::set<double> coarse_vals, fine_vals;
  for (int s : d.slots()) coarse_vals.insert(d.slot_value(s));
  for (int s : fine.slots()) fine_vals.insert(fine.slot_value(s));
  CHECK(coarse_vals == fine_vals);

  // rho commutes with refinement on corresponding cosets.
  for (const PSL2Word& w : {PSL2Word::parse("S"), PSL2Word::parse("UT"), PSL2Word::parse("Stt")}) {
    for (int cf = 0; cf < fine.level().index(); cf += 7) {
      auto r = fine.level().rep(cf);
      int cc = d.level().coset_of_key(std::to_string(r[0]) + "," + std::to_string(r[1]) + "," +
                                      std::to_string(r[2]) + "," + std::to_string(r[3]));
      CHECK(psl_distance(rho(fine, w, cf), rho(d, w, cc)) < 1e-12);
    }
  }

  // Constant data refines to constant data; flips pull back.
  auto c3 = TransverseLambda::constant(FiniteLevel::congruence(3), kSqrt2);
  auto flipped = equivariant_flip(c3, kDoe);
  TransverseLambda fr = refine(flipped, 2);
  int fslot = fr.slot_of(fr.level().identity_coset(), kDoe);
  CHECK(fr.slot_flipped(fslot));
  CHECK(fr.slot_value(fslot) == doctest::Approx(2 * kSqrt2).epsilon(1e-14));
  CHECK_THROWS_WITH_AS(refine(d, 64), doctest::Contains("LevelTooLarge"), Error);
}

TEST_CASE("leaf circle maps") {
  auto lvl = FiniteLevel::congruence(2);
  auto consts = TransverseLambda::constant(lvl, kSqrt2);
  for (int c = 0; c < lvl->index(); c += 2) {
    auto samples = leaf_circle_map(consts, c, 5);
    CHECK(circularly_monotone(samples));
    for (const auto& s : samples)
      if (!s.x.is_infinity()) CHECK(std::abs(s.y.value - s.x.to_double()) < 1e-12);
  }

  // Leaves related by gamma transport through rho (Property 6 downstream).
  auto d = TransverseLambda::random_equivariant(lvl, 0.5, 2.0, 13);
  PSL2Word w = PSL2Word::parse("T");
  PSL2Mat gamma = mat_of_word(w);
  int t = 4;
  int t_twisted = lvl->act_mat(t, gamma.inverse());
  Mobius m = rho(d, w, t);
  auto base = leaf_circle_map(d, t, 5);
  std::map<std::string, double> twisted_centers;
  for (const auto& s : leaf_circle_map(d, t_twisted, 6))
    twisted_centers[s.x.str()] = s.y.infinite ? std::numeric_limits<double>::infinity()
                                              : s.y.value;
  int checked = 0;
  for (const auto& s : base) {
    if (s.x.is_infinity() || s.y.infinite) continue;
    Rational gx = gamma.apply(s.x);
    auto it = twisted_centers.find(gx.str());
    if (it == twisted_centers.end() || !std::isfinite(it->second)) continue;
    BoundaryPoint img = m.apply(BoundaryPoint::at(s.y.value));
    if (img.infinite) continue;
    CHECK(img.value == doctest::Approx(it->second).epsilon(1e-9));
    ++checked;
  }
  CHECK(checked > 20);

  // Per-leaf derivative diagnostics converge.
  for (int c = 0; c < lvl->index(); c += 3) {
    auto l = d.leaf_assignment(c);
    auto e8 = derivative_at_infinity(l, 8);
    auto e32 = derivative_at_infinity(l, 32);
    CHECK(e32.cauchy_gap <= e8.cauchy_gap);
    double K = pinch_bound(d);
    CHECK(e32.estimate >= 1.0 / (K * K));
    CHECK(e32.estimate <= K * K);
  }
}

TEST_CASE("rho refuses flipped data, leaf values refuse flipped edges") {
  auto lvl = FiniteLevel::congruence(3);
  auto f = equivariant_flip(TransverseLambda::constant(lvl, kSqrt2), kDoe);
  CHECK_THROWS_AS(rho(f, PSL2Word::parse("T"), 0), Error);
  CHECK_THROWS_AS(f.leaf_value(lvl->identity_coset(), kDoe), Error);
}
