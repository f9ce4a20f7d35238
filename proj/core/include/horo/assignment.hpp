#pragma once

#include <functional>
#include <map>
#include <optional>

#include "horo/farey.hpp"

namespace horo {

inline const double kSqrt2 = 1.4142135623730951;

// Positive function on the edges of the Farey tessellation: a default
// value plus finite overrides, or a procedural rule. The rule must be a
// pure function of the edge.
class LambdaAssignment {
 public:
  using Rule = std::function<double(const Edge&)>;

  LambdaAssignment() : default_(kSqrt2) {}
  explicit LambdaAssignment(double default_value);
  LambdaAssignment(double default_value, std::map<Edge, double> overrides);
  static LambdaAssignment procedural(Rule rule);

  double operator()(const Edge& e) const;
  double at(const Rational& a, const Rational& b) const { return (*this)(Edge(a, b)); }

  bool is_procedural() const { return static_cast<bool>(rule_); }
  double default_value() const { return default_; }
  const std::map<Edge, double>& overrides() const { return overrides_; }

  LambdaAssignment with_override(const Edge& e, double value) const;

 private:
  double default_;
  std::map<Edge, double> overrides_;
  Rule rule_;
};

struct PinchBound {
  double k = 1.0;   // best bound found: k^-1 <= lambda <= k
  bool exact = false;  // true for the finite-overrides form
};

// Exact minimal K for finite data. Procedural rules are probed on edges of
// generation <= probe_depth; no value is returned when the probe is still
// growing, i.e. the data is not certified pinched at any sampled K.
std::optional<PinchBound> is_pinched(const LambdaAssignment& l, int probe_depth = 8);

}  // namespace horo
