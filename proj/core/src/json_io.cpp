#include "horo/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace horo {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& ex) {
    fail(errc::parse_error, path + ": " + ex.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(errc::io_error, "short write to " + path);
}

Json assignment_to_json(const LambdaAssignment& l) {
  if (l.is_procedural())
    fail(errc::parse_error, "procedural assignments have no finite serialization");
  Json j;
  j["default"] = l.default_value();
  Json ov = Json::object();
  for (const auto& [e, v] : l.overrides()) ov[e.str()] = v;
  j["overrides"] = ov;
  return j;
}

LambdaAssignment assignment_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("default"))
    fail(errc::parse_error, "assignment wants {\"default\": ..., \"overrides\": {...}}");
  double def = j.at("default").get<double>();
  std::map<Edge, double> overrides;
  if (j.contains("overrides")) {
    for (const auto& [key, value] : j.at("overrides").items())
      overrides.emplace(Edge::parse(key), value.get<double>());
  }
  return LambdaAssignment(def, std::move(overrides));
}

Json surface_to_json(const IdealTriangulation& t, const SurfaceLambda& l) {
  Json j;
  j["triangles"] = Json::array();
  for (const auto& tri : t.triangles()) j["triangles"].push_back({tri[0], tri[1], tri[2]});
  j["gluing"] = Json::array();
  for (const Gluing& g : t.gluings()) {
    Json entry = {g.a.tri, g.a.side, g.b.tri, g.b.side};
    if (g.flip) entry.push_back(1);
    j["gluing"].push_back(entry);
  }
  j["lambdas"] = l;
  return j;
}

std::pair<IdealTriangulation, SurfaceLambda> surface_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("triangles") || !j.contains("gluing"))
    fail(errc::parse_error, "surface wants {\"triangles\": ..., \"gluing\": ..., \"lambdas\": ...}");
  std::vector<std::array<int, 3>> tris;
  int max_edge = -1;
  for (const auto& row : j.at("triangles")) {
    if (!row.is_array() || row.size() != 3) fail(errc::parse_error, "triangle wants 3 edge ids");
    std::array<int, 3> tri{row[0].get<int>(), row[1].get<int>(), row[2].get<int>()};
    for (int e : tri) max_edge = std::max(max_edge, e);
    tris.push_back(tri);
  }
  std::vector<Gluing> glue;
  for (const auto& row : j.at("gluing")) {
    if (!row.is_array() || row.size() < 4) fail(errc::parse_error, "gluing wants [t,s,t,s]");
    Gluing g;
    g.a = {row[0].get<int>(), row[1].get<int>()};
    g.b = {row[2].get<int>(), row[3].get<int>()};
    g.flip = row.size() > 4 && row[4].get<int>() != 0;
    glue.push_back(g);
  }
  IdealTriangulation t(max_edge + 1, std::move(tris), std::move(glue));
  SurfaceLambda l;
  if (j.contains("lambdas")) {
    l = j.at("lambdas").get<std::vector<double>>();
  } else {
    l.assign(static_cast<size_t>(t.num_edges()), kSqrt2);
  }
  return {std::move(t), std::move(l)};
}

Json level_to_json(const TransverseLambda& d) {
  if (d.level().congruence_modulus() == 0)
    fail(errc::parse_error, "only congruence levels serialize");
  if (d.any_flipped()) fail(errc::parse_error, "flipped level data has no tessellation keys");
  Json j;
  j["congruence_k"] = d.level().congruence_modulus();
  Json lam = Json::object();
  const std::string doe_key = Edge(Rational(0, 1), Rational::infinity()).str();
  for (int c = 0; c < d.level().index(); ++c) {
    Json per = Json::object();
    per[doe_key] = d.slot_value(d.slot_of_coset(c));
    lam[d.level().coset_key(c)] = per;
  }
  j["lambdas"] = lam;
  return j;
}

TransverseLambda level_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("congruence_k"))
    fail(errc::parse_error, "level data wants {\"congruence_k\": k, \"lambdas\": {...}}");
  int k = j.at("congruence_k").get<int>();
  auto level = FiniteLevel::congruence(k);
  double def = j.contains("default") ? j.at("default").get<double>() : kSqrt2;
  TransverseLambda d = TransverseLambda::constant(level, def);

  if (j.contains("lambdas")) {
    std::map<int, double> pinned;
    for (const auto& [coset_key, edges] : j.at("lambdas").items()) {
      int coset = level->coset_of_key(coset_key);
      for (const auto& [edge_key, value] : edges.items()) {
        Edge e = Edge::parse(edge_key);
        int slot = d.slot_of(coset, e);
        double v = value.get<double>();
        auto [it, fresh] = pinned.emplace(slot, v);
        if (!fresh && std::abs(it->second - v) > 0)
          fail(errc::parse_error, "conflicting values for one equivariance orbit (coset " +
                                      coset_key + ", edge " + edge_key + ")");
        d.set_slot_value(slot, v);
      }
    }
  }
  return d;
}

std::vector<std::pair<std::string, std::vector<LoopStep>>> loops_from_json(const Json& j) {
  if (!j.is_array()) fail(errc::parse_error, "loops file wants a list");
  std::vector<std::pair<std::string, std::vector<LoopStep>>> out;
  for (const auto& entry : j) {
    std::string name = entry.contains("name") ? entry.at("name").get<std::string>()
                                              : "loop" + std::to_string(out.size());
    std::vector<LoopStep> steps;
    for (const auto& step : entry.at("steps"))
      steps.push_back({step[0].get<int>(), step[1].get<int>()});
    out.emplace_back(std::move(name), std::move(steps));
  }
  return out;
}

}  // namespace horo
