#include "horo/assignment.hpp"

#include <cmath>

namespace horo {

namespace {
void check_value(double v, const Edge* e) {
  if (!(v > 0) || !std::isfinite(v))
    fail(errc::parse_error,
         "lambda value must be positive" + (e ? " (edge " + e->str() + ")" : std::string()));
}
}  // namespace

LambdaAssignment::LambdaAssignment(double default_value) : default_(default_value) {
  check_value(default_, nullptr);
}

LambdaAssignment::LambdaAssignment(double default_value, std::map<Edge, double> overrides)
    : default_(default_value), overrides_(std::move(overrides)) {
  check_value(default_, nullptr);
  for (const auto& [e, v] : overrides_) check_value(v, &e);
}

LambdaAssignment LambdaAssignment::procedural(Rule rule) {
  LambdaAssignment l;
  l.rule_ = std::move(rule);
  return l;
}

double LambdaAssignment::operator()(const Edge& e) const {
  if (rule_) {
    double v = rule_(e);
    check_value(v, &e);
    return v;
  }
  auto it = overrides_.find(e);
  return it == overrides_.end() ? default_ : it->second;
}

LambdaAssignment LambdaAssignment::with_override(const Edge& e, double value) const {
  check_value(value, &e);
  if (rule_) {
    LambdaAssignment out;
    out.rule_ = [base = rule_, e, value](const Edge& q) { return q == e ? value : base(q); };
    return out;
  }
  LambdaAssignment out = *this;
  out.overrides_[e] = value;
  return out;
}

std::optional<PinchBound> is_pinched(const LambdaAssignment& l, int probe_depth) {
  if (!l.is_procedural()) {
    double lo = l.default_value(), hi = l.default_value();
    for (const auto& [e, v] : l.overrides()) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return PinchBound{std::max(hi, 1.0 / lo), true};
  }
  // Probe edges by generation; accept only once the running bound stops
  // moving (a lower bound on the true K, never a certificate).
  double prev = 0.0, k = 1.0;
  FareyComplex fc = enumerate_edges(std::max(probe_depth, 2));
  std::map<int, double> k_at_gen;
  for (const Edge& e : fc.edges) {
    double v = l(e);
    int gen = std::max(farey_generation(e.lo), farey_generation(e.hi));
    double& slot = k_at_gen[gen];
    slot = std::max({slot, v, 1.0 / v});
  }
  for (auto& [gen, kg] : k_at_gen) {
    prev = k;
    k = std::max(k, kg);
  }
  if (k > prev * (1.0 + 1e-12)) return std::nullopt;  // still growing at the frontier
  return PinchBound{k, false};
}

}  // namespace horo
