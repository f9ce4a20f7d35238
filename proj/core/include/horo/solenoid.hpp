#pragma once

#include <memory>
#include <mutex>
#include <set>

#include "horo/decoration.hpp"

namespace horo {

// Finite-index level standing in for the profinite completion: cosets of
// a finite-index subgroup of PSL2(Z) with right-multiplication action
// tables for the generators. Principal congruence subgroups are built in;
// arbitrary subgroups may be supplied as raw tables.
class FiniteLevel {
 public:
  // Cosets of Gamma(k), enumerated as PSL2(Z/k); 2 <= k <= 13.
  static std::shared_ptr<const FiniteLevel> congruence(int k);
  // Custom level from right-action permutations of S, T, U; coset 0 is
  // the identity coset. Validates S^2 = id, (ST)^3 = id and U = S T^-1 S.
  static std::shared_ptr<const FiniteLevel> from_tables(std::vector<int> s, std::vector<int> t,
                                                        std::vector<int> u);

  int index() const { return static_cast<int>(perm_s_.size()); }
  int congruence_modulus() const { return k_; }  // 0 for custom levels
  int identity_coset() const { return identity_; }

  int act(int coset, Gen g) const;
  int act_word(int coset, const PSL2Word& w) const;
  int act_mat(int coset, const PSL2Mat& m) const;

  // Canonical matrix representative mod k (congruence levels only).
  std::array<int, 4> rep(int coset) const;
  std::string coset_key(int coset) const;  // "a,b,c,d" of the representative
  int coset_of_key(const std::string&) const;

 private:
  FiniteLevel() = default;
  void validate_tables() const;

  int k_ = 0;
  int identity_ = 0;
  std::vector<int> perm_s_, perm_t_, perm_u_, perm_tinv_, perm_uinv_;
  std::vector<std::array<int, 4>> reps_;
  std::map<std::array<int, 4>, int> lookup_;
};

// Equivariant transverse lambda data at a finite level. Exact equivariance
// lambda_t(e) = lambda_{t gamma^-1}(gamma e) forces the whole family to be
// the pullback of one S-symmetric value table on cosets: lambda_t(e) =
// V(t B_e), B_e the matrix carrying the doe to e. Values live on "slots"
// (coset pairs {c, cS}); equivariant Ptolemy moves toggle slots.
class TransverseLambda {
 public:
  static TransverseLambda constant(std::shared_ptr<const FiniteLevel> level, double value);
  // Independent values per slot, uniform in [lo, hi]; deterministic seed.
  static TransverseLambda random_equivariant(std::shared_ptr<const FiniteLevel> level, double lo,
                                             double hi, unsigned seed);

  const FiniteLevel& level() const { return *level_; }
  std::shared_ptr<const FiniteLevel> level_ptr() const { return level_; }

  int slot_of_coset(int c) const;  // representative min(c, cS)
  int slot_of(int coset, const Edge& e) const;
  double slot_value(int slot) const { return value_[static_cast<size_t>(slot)]; }
  bool slot_flipped(int slot) const { return flipped_[static_cast<size_t>(slot)] != 0; }
  bool any_flipped() const;
  std::vector<int> slots() const;  // slot representatives

  // Value of edge e on leaf t, overrides included; wants unflipped data.
  double leaf_value(int coset, const Edge& e) const;
  LambdaAssignment leaf_assignment(int coset) const;

  // Copy with one explicit (coset, edge) override, breaking equivariance.
  TransverseLambda perturb(int coset, const Edge& e, double value) const;
  const std::map<std::pair<int, std::string>, double>& overrides() const { return overrides_; }

  // Set a slot value directly (used by deserialization).
  void set_slot_value(int slot, double value);

 private:
  friend TransverseLambda equivariant_flip(const TransverseLambda&, const Edge&, int);
  friend TransverseLambda refine(const TransverseLambda&, int);

  std::shared_ptr<const FiniteLevel> level_;
  std::vector<double> value_;    // indexed by slot representative coset
  std::vector<char> flipped_;    // Ptolemy parity per slot
  std::map<std::pair<int, std::string>, double> overrides_;  // (coset, edge key)
};

// Max violation of lambda_t(e) = lambda_{t gamma^-1}(gamma e) over
// gamma in {S, T}, all cosets, edges of generation <= depth. Exactly 0
// for pullback data; perturbations surface here.
double validate_equivariance(const TransverseLambda& d, int depth);

// Exact K = max(sup, 1/inf) over the finite value set; always finite.
double pinch_bound(const TransverseLambda& d);

// Theorem-11 rho: the Mobius map carrying the base flag (0, inf, 1) to
// the developed flag of gamma = mat_of_word(w) in the leaf-t picture
// (development of the leaf t gamma^-1 assignment along w's prefix path).
// Satisfies rho(g1 g2, t) = rho(g1, t g2^-1) rho(g2, t).
class RhoCocycle {
 public:
  explicit RhoCocycle(TransverseLambda data);

  const TransverseLambda& data() const { return data_; }
  Mobius operator()(const PSL2Word& w, int coset) const;

 private:
  TransverseLambda data_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::string, int>, Mobius> memo_;
};

Mobius rho(const TransverseLambda& d, const PSL2Word& w, int coset);

// PSL-distance between rho(w1 w2, t) and rho(w1, t w2^-1) rho(w2, t).
double check_cocycle(const TransverseLambda& d, const PSL2Word& w1, const PSL2Word& w2, int coset);

// Simultaneous Ptolemy flip across the full group orbit of (leaf, e):
// one slot toggles. OrbitConflict when the orbit's quads overlap.
TransverseLambda equivariant_flip(const TransverseLambda& d, const Edge& e, int leaf = -1);

// Pullback along Gamma(k m) -> Gamma(k); values, parities and overrides
// transport; rho and pinch_bound commute with it.
TransverseLambda refine(const TransverseLambda& d, int factor);

// Circle map samples of one leaf (universal_embed on lambda_t).
std::vector<CircleSample> leaf_circle_map(const TransverseLambda& d, int coset, int generation);

}  // namespace horo
