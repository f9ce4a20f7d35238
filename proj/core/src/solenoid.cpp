#include "horo/solenoid.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace horo {

namespace {

const Rational kZero(0, 1);
const Rational kInf = Rational::infinity();

std::array<int, 4> canonical_mod(std::array<long long, 4> m, int k) {
  std::array<int, 4> a{}, b{};
  for (int i = 0; i < 4; ++i) {
    long long v = ((m[static_cast<size_t>(i)] % k) + k) % k;
    a[static_cast<size_t>(i)] = static_cast<int>(v);
    b[static_cast<size_t>(i)] = static_cast<int>((k - v) % k);
  }
  return std::min(a, b);  // PSL representative
}

std::array<long long, 4> mat_to_ll(const PSL2Mat& m, int k) {
  auto red = [k](const BigInt& x) {
    BigInt r = x % k;
    if (r < 0) r += k;
    return r.convert_to<long long>();
  };
  return {red(m.a()), red(m.b()), red(m.c()), red(m.d())};
}

}  // namespace

std::shared_ptr<const FiniteLevel> FiniteLevel::congruence(int k) {
  if (k < 2 || k > 13) fail(errc::level_too_large, "congruence level wants 2 <= k <= 13");
  auto level = std::shared_ptr<FiniteLevel>(new FiniteLevel());
  level->k_ = k;

  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          if (((a * d - b * c) % k + k) % k != 1) continue;
          std::array<int, 4> rep = canonical_mod({a, b, c, d}, k);
          if (level->lookup_.emplace(rep, 0).second) level->reps_.push_back(rep);
        }
  std::sort(level->reps_.begin(), level->reps_.end());
  for (int i = 0; i < static_cast<int>(level->reps_.size()); ++i)
    level->lookup_[level->reps_[static_cast<size_t>(i)]] = i;

  auto act_by = [&](const PSL2Mat& g) {
    std::vector<int> perm(level->reps_.size());
    auto gm = mat_to_ll(g, k);
    for (std::size_t i = 0; i < level->reps_.size(); ++i) {
      const auto& r = level->reps_[i];
      std::array<long long, 4> prod = {
          r[0] * gm[0] + r[1] * gm[2], r[0] * gm[1] + r[1] * gm[3],
          r[2] * gm[0] + r[3] * gm[2], r[2] * gm[1] + r[3] * gm[3]};
      perm[i] = level->lookup_.at(canonical_mod(prod, k));
    }
    return perm;
  };
  level->perm_s_ = act_by(PSL2Mat::S());
  level->perm_t_ = act_by(PSL2Mat::T());
  level->perm_u_ = act_by(PSL2Mat::U());
  level->perm_tinv_ = act_by(PSL2Mat::T().inverse());
  level->perm_uinv_ = act_by(PSL2Mat::U().inverse());
  level->identity_ = level->lookup_.at(canonical_mod({1, 0, 0, 1}, k));
  level->validate_tables();
  return level;
}

std::shared_ptr<const FiniteLevel> FiniteLevel::from_tables(std::vector<int> s, std::vector<int> t,
                                                            std::vector<int> u) {
  auto level = std::shared_ptr<FiniteLevel>(new FiniteLevel());
  const std::size_t n = s.size();
  if (t.size() != n || u.size() != n || n == 0)
    fail(errc::parse_error, "action tables must have a common positive size");
  auto invert = [n](const std::vector<int>& p) {
    std::vector<int> inv(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      int v = p[i];
      if (v < 0 || v >= static_cast<int>(n) || inv[static_cast<size_t>(v)] != -1)
        fail(errc::parse_error, "action table is not a permutation");
      inv[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    return inv;
  };
  level->perm_tinv_ = invert(t);
  level->perm_uinv_ = invert(u);
  invert(s);  // permutation check
  level->perm_s_ = std::move(s);
  level->perm_t_ = std::move(t);
  level->perm_u_ = std::move(u);
  level->identity_ = 0;
  level->validate_tables();
  return level;
}

void FiniteLevel::validate_tables() const {
  const int n = index();
  for (int c = 0; c < n; ++c) {
    if (act(act(c, Gen::S), Gen::S) != c) fail(errc::parse_error, "S table is not an involution");
    // U = S T^-1 S as a right action.
    int via = act(act(act(c, Gen::S), Gen::Tinv), Gen::S);
    if (via != act(c, Gen::U)) fail(errc::parse_error, "tables violate U = S T^-1 S");
    int st = act(act(c, Gen::S), Gen::T);
    int st3 = act(act(act(act(st, Gen::S), Gen::T), Gen::S), Gen::T);
    if (st3 != c) fail(errc::parse_error, "tables violate (ST)^3 = id");
  }
}

int FiniteLevel::act(int coset, Gen g) const {
  const std::vector<int>* p = nullptr;
  switch (g) {
    case Gen::S: p = &perm_s_; break;
    case Gen::T: p = &perm_t_; break;
    case Gen::U: p = &perm_u_; break;
    case Gen::Tinv: p = &perm_tinv_; break;
    case Gen::Uinv: p = &perm_uinv_; break;
  }
  return (*p)[static_cast<size_t>(coset)];
}

int FiniteLevel::act_word(int coset, const PSL2Word& w) const {
  int c = coset;
  for (Gen g : w.letters()) c = act(c, g);
  return c;
}

int FiniteLevel::act_mat(int coset, const PSL2Mat& m) const {
  if (k_ > 0) {
    const auto& r = reps_[static_cast<size_t>(coset)];
    auto gm = mat_to_ll(m, k_);
    std::array<long long, 4> prod = {
        r[0] * gm[0] + r[1] * gm[2], r[0] * gm[1] + r[1] * gm[3],
        r[2] * gm[0] + r[3] * gm[2], r[2] * gm[1] + r[3] * gm[3]};
    return lookup_.at(canonical_mod(prod, k_));
  }
  return act_word(coset, word_of_mat(m));
}

std::array<int, 4> FiniteLevel::rep(int coset) const {
  if (k_ == 0) fail(errc::parse_error, "custom levels have no matrix representatives");
  return reps_[static_cast<size_t>(coset)];
}

std::string FiniteLevel::coset_key(int coset) const {
  auto r = rep(coset);
  return std::to_string(r[0]) + "," + std::to_string(r[1]) + "," + std::to_string(r[2]) + "," +
         std::to_string(r[3]);
}

int FiniteLevel::coset_of_key(const std::string& key) const {
  if (k_ == 0) fail(errc::parse_error, "custom levels have no matrix representatives");
  std::array<long long, 4> v{};
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t next = key.find(',', pos);
    std::string tok = key.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      v[static_cast<size_t>(i)] = std::stoll(tok);
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad coset key '" + key + "'");
    }
    pos = next == std::string::npos ? key.size() : next + 1;
  }
  auto it = lookup_.find(canonical_mod(v, k_));
  if (it == lookup_.end()) fail(errc::parse_error, "coset key '" + key + "' is not unimodular");
  return it->second;
}

TransverseLambda TransverseLambda::constant(std::shared_ptr<const FiniteLevel> level,
                                            double value) {
  if (!(value > 0)) fail(errc::parse_error, "lambda value must be positive");
  TransverseLambda d;
  d.level_ = std::move(level);
  d.value_.assign(static_cast<size_t>(d.level_->index()), value);
  d.flipped_.assign(static_cast<size_t>(d.level_->index()), 0);
  return d;
}

TransverseLambda TransverseLambda::random_equivariant(std::shared_ptr<const FiniteLevel> level,
                                                      double lo, double hi, unsigned seed) {
  if (!(lo > 0) || !(hi >= lo)) fail(errc::parse_error, "bad value range");
  TransverseLambda d = constant(std::move(level), lo);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  for (int c = 0; c < d.level_->index(); ++c) {
    if (d.slot_of_coset(c) != c) continue;  // one draw per slot
    double v = dist(rng);
    d.value_[static_cast<size_t>(c)] = v;
    d.value_[static_cast<size_t>(d.level_->act(c, Gen::S))] = v;
  }
  return d;
}

int TransverseLambda::slot_of_coset(int c) const { return std::min(c, level_->act(c, Gen::S)); }

int TransverseLambda::slot_of(int coset, const Edge& e) const {
  PSL2Mat B = mat_of_edge(OrientedEdge(e.lo, e.hi));
  return slot_of_coset(level_->act_mat(coset, B));
}

bool TransverseLambda::any_flipped() const {
  return std::any_of(flipped_.begin(), flipped_.end(), [](char f) { return f != 0; });
}

std::vector<int> TransverseLambda::slots() const {
  std::vector<int> out;
  for (int c = 0; c < level_->index(); ++c)
    if (slot_of_coset(c) == c) out.push_back(c);
  return out;
}

double TransverseLambda::leaf_value(int coset, const Edge& e) const {
  auto ov = overrides_.find({coset, e.str()});
  if (ov != overrides_.end()) return ov->second;
  int slot = slot_of(coset, e);
  if (flipped_[static_cast<size_t>(slot)])
    fail(errc::parse_error, "edge " + e.str() + " is flipped out of the leaf tessellation");
  return value_[static_cast<size_t>(slot)];
}

LambdaAssignment TransverseLambda::leaf_assignment(int coset) const {
  TransverseLambda copy = *this;
  return LambdaAssignment::procedural(
      [copy, coset](const Edge& e) { return copy.leaf_value(coset, e); });
}

TransverseLambda TransverseLambda::perturb(int coset, const Edge& e, double value) const {
  if (!(value > 0)) fail(errc::parse_error, "lambda value must be positive");
  TransverseLambda out = *this;
  out.overrides_[{coset, e.str()}] = value;
  return out;
}

void TransverseLambda::set_slot_value(int slot, double value) {
  if (!(value > 0) || !std::isfinite(value)) fail(errc::parse_error, "lambda value must be positive");
  if (slot_of_coset(slot) != slot) fail(errc::parse_error, "not a slot representative");
  value_[static_cast<size_t>(slot)] = value;
  value_[static_cast<size_t>(level_->act(slot, Gen::S))] = value;
}

double validate_equivariance(const TransverseLambda& d, int depth) {
  const FiniteLevel& level = d.level();
  FareyComplex fc = enumerate_edges(depth);
  double worst = 0;

  auto value_at = [&](int coset, const Edge& e) {
    auto ov = d.overrides().find({coset, e.str()});
    if (ov != d.overrides().end()) return ov->second;
    int slot = d.slot_of(coset, e);
    // Flip parity is orbit data, so both sides of the identity read the
    // same slot; compare current values regardless of parity.
    return d.slot_value(slot);
  };

  const PSL2Mat gens[2] = {PSL2Mat::S(), PSL2Mat::T()};
  for (const Edge& e : fc.edges) {
    for (const PSL2Mat& g : gens) {
      Edge ge(g.apply(e.lo), g.apply(e.hi));
      for (int t = 0; t < level.index(); ++t) {
        int tg = level.act_mat(t, g.inverse());
        worst = std::max(worst, std::abs(value_at(t, e) - value_at(tg, ge)));
      }
    }
  }
  return worst;
}

double pinch_bound(const TransverseLambda& d) {
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (int slot : d.slots()) {
    lo = std::min(lo, d.slot_value(slot));
    hi = std::max(hi, d.slot_value(slot));
  }
  for (const auto& [key, v] : d.overrides()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return std::max(hi, 1.0 / lo);
}

RhoCocycle::RhoCocycle(TransverseLambda data) : data_(std::move(data)) {}

Mobius RhoCocycle::operator()(const PSL2Word& w, int coset) const {
  if (!w.is_normal_form()) fail(errc::bad_normal_form, "rho wants normal-form words");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({w.str(), coset});
    if (it != memo_.end()) return it->second;
  }
  Mobius m = rho(data_, w, coset);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(std::make_pair(w.str(), coset), m);
  return m;
}

Mobius rho(const TransverseLambda& d, const PSL2Word& w, int coset) {
  if (!w.is_normal_form()) fail(errc::bad_normal_form, "rho wants normal-form words");
  if (d.any_flipped()) fail(errc::parse_error, "rho wants unflipped transverse data");
  if (w.empty()) return Mobius::identity();

  PSL2Mat gamma = mat_of_word(w);
  int leaf = d.level().act_mat(coset, gamma.inverse());
  LambdaAssignment l = d.leaf_assignment(leaf);

  std::vector<PSL2Mat> path;
  PSL2Mat W;
  for (Gen g : w.letters()) {
    W = W * PSL2Mat::generator(g);
    path.push_back(W);
  }
  Decoration dev = decorate_path(l, path);

  const Rational kOne(1, 1);
  std::array<BoundaryPoint, 3> dst = {dev.center(gamma.apply(kZero)),
                                      dev.center(gamma.apply(kInf)),
                                      dev.center(gamma.apply(kOne))};
  std::array<BoundaryPoint, 3> src = {BoundaryPoint::at(0), BoundaryPoint::inf(),
                                      BoundaryPoint::at(1)};
  return Mobius::from_triples(src, dst);
}

double check_cocycle(const TransverseLambda& d, const PSL2Word& w1, const PSL2Word& w2,
                     int coset) {
  PSL2Mat m1 = mat_of_word(w1), m2 = mat_of_word(w2);
  PSL2Word product = word_of_mat(m1 * m2);
  Mobius lhs = rho(d, product, coset);
  int twisted = d.level().act_mat(coset, m2.inverse());
  Mobius rhs = rho(d, word_of_mat(m1), twisted) * rho(d, word_of_mat(m2), coset);
  return psl_distance(lhs, rhs);
}

namespace {

// Conflict probe: words W with slot(c W) = slot(c) would place two quads
// of one orbit so that they share an edge (or a diagonal lies on a side).
std::vector<PSL2Mat> conflict_words() {
  std::vector<PSL2Mat> out;
  const PSL2Mat letters[4] = {PSL2Mat::U(), PSL2Mat::T(), PSL2Mat::U().inverse(),
                              PSL2Mat::T().inverse()};
  const PSL2Mat I, S = PSL2Mat::S();
  auto push = [&](const PSL2Mat& w) {
    if (w == I || w == S) return;
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  };
  for (const PSL2Mat& x : letters) {
    for (const PSL2Mat& z : {I, S}) {
      push(x * z);
      for (const PSL2Mat& y : letters) push(x * z * y.inverse());
    }
  }
  return out;
}

}  // namespace

TransverseLambda equivariant_flip(const TransverseLambda& d, const Edge& e, int leaf) {
  if (!d.overrides().empty())
    fail(errc::parse_error, "equivariant flips want unperturbed data");
  const FiniteLevel& level = d.level();
  if (leaf < 0) leaf = level.identity_coset();
  int slot = d.slot_of(leaf, e);

  // Overlapping quads inside one orbit make the simultaneous move
  // ill-defined.
  for (const PSL2Mat& wmat : conflict_words()) {
    for (int c : {slot, level.act(slot, Gen::S)}) {
      int cw = level.act_mat(c, wmat);
      if (d.slot_of_coset(cw) == slot)
        fail(errc::orbit_conflict, "orbit quads overlap (witness word " + word_of_mat(wmat).str() + ")");
    }
  }

  // Five-edge neighborhood: the four side slots must be unflipped.
  TransverseLambda out = d;
  int c = slot;
  int a_ = level.act(c, Gen::T), b_ = level.act(c, Gen::Tinv);
  int c_ = level.act(c, Gen::Uinv), dd = level.act(c, Gen::U);
  for (int side : {a_, b_, c_, dd}) {
    if (d.slot_flipped(d.slot_of_coset(side)))
      fail(errc::orbit_conflict, "a side of the quad orbit is itself flipped");
  }

  // Ptolemy with opposite pairs {T, U^-1} and {T^-1, U}.
  double f = (d.slot_value(d.slot_of_coset(a_)) * d.slot_value(d.slot_of_coset(c_)) +
              d.slot_value(d.slot_of_coset(b_)) * d.slot_value(d.slot_of_coset(dd))) /
             d.slot_value(slot);
  out.value_[static_cast<size_t>(slot)] = f;
  out.value_[static_cast<size_t>(level.act(slot, Gen::S))] = f;
  char parity = out.flipped_[static_cast<size_t>(slot)] ^ 1;
  out.flipped_[static_cast<size_t>(slot)] = parity;
  out.flipped_[static_cast<size_t>(level.act(slot, Gen::S))] = parity;
  return out;
}

TransverseLambda refine(const TransverseLambda& d, int factor) {
  const FiniteLevel& level = d.level();
  if (level.congruence_modulus() == 0)
    fail(errc::parse_error, "refine wants a congruence level");
  if (factor < 2) fail(errc::parse_error, "refinement factor must be >= 2");
  int km = level.congruence_modulus() * factor;
  auto fine = FiniteLevel::congruence(km);  // guards the level size

  // Projection: a fine representative, read as an integer matrix, reduces
  // to its coset at the coarse level.
  auto project = [&](int c) {
    auto r = fine->rep(c);
    return level.coset_of_key(std::to_string(r[0]) + "," + std::to_string(r[1]) + "," +
                              std::to_string(r[2]) + "," + std::to_string(r[3]));
  };

  TransverseLambda out = TransverseLambda::constant(fine, 1.0);
  for (int c = 0; c < fine->index(); ++c) {
    int coarse_slot = d.slot_of_coset(project(c));
    out.value_[static_cast<size_t>(c)] = d.slot_value(coarse_slot);
    out.flipped_[static_cast<size_t>(c)] = d.slot_flipped(coarse_slot) ? 1 : 0;
  }
  for (const auto& [key, value] : d.overrides()) {
    for (int c = 0; c < fine->index(); ++c)
      if (project(c) == key.first) out.overrides_[{c, key.second}] = value;
  }
  return out;
}

std::vector<CircleSample> leaf_circle_map(const TransverseLambda& d, int coset, int generation) {
  return circle_map_samples(d.leaf_assignment(coset), generation);
}

}  // namespace horo
