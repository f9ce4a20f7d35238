// horo: lambda-length geometry on the command line.
//
// Subcommands: validate, render, circlemap, holonomy, solenoid, flip.
// Exit codes: 0 ok, 1 validation failure, 2 numeric failure, 3 i/o.

#include <iostream>

#include <CLI11.hpp>

#include "horo/json_io.hpp"
#include "horo/svg.hpp"

namespace {

using namespace horo;

enum ExitCode { kOk = 0, kValidation = 1, kNumeric = 2, kIo = 3 };

// The input kind is decided by shape, so one `validate` serves all files.
enum class FileKind { assignment, surface, level };

FileKind sniff(const Json& j) {
  if (j.contains("triangles")) return FileKind::surface;
  if (j.contains("congruence_k")) return FileKind::level;
  if (j.contains("default")) return FileKind::assignment;
  fail(errc::parse_error, "unrecognized input shape (wants triangles/congruence_k/default)");
}

std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_text_file(out_path, text);
}

int cmd_validate(const std::string& path) {
  Json input = load_json_file(path);
  Json report;
  report["file"] = path;
  switch (sniff(input)) {
    case FileKind::surface: {
      auto [tri, lambdas] = surface_from_json(input);
      auto [g, s] = tri.validate();
      report["kind"] = "surface";
      report["genus"] = g;
      report["punctures"] = s;
      Json traces = Json::array();
      for (int p = 0; p < s; ++p) traces.push_back(format_double(puncture_trace(tri, lambdas, p)));
      report["puncture_traces"] = traces;
      break;
    }
    case FileKind::level: {
      TransverseLambda d = level_from_json(input);
      report["kind"] = "level";
      report["congruence_k"] = d.level().congruence_modulus();
      report["index"] = d.level().index();
      report["equivariance_violation"] = format_double(validate_equivariance(d, 3));
      report["pinch_bound"] = format_double(pinch_bound(d));
      break;
    }
    case FileKind::assignment: {
      LambdaAssignment l = assignment_from_json(input);
      report["kind"] = "assignment";
      auto pinch = is_pinched(l);
      if (pinch) {
        report["pinched"] = true;
        report["k"] = format_double(pinch->k);
        report["exact"] = pinch->exact;
      } else {
        report["pinched"] = false;
      }
      break;
    }
  }
  report["ok"] = true;
  std::cout << json_dump(report);
  return kOk;
}

int cmd_render(const std::string& path, int depth, bool horocycles, bool labels,
               const std::string& out) {
  LambdaAssignment l = assignment_from_json(load_json_file(path));
  RenderOptions opt;
  opt.horocycles = horocycles;
  opt.labels = labels;
  emit(out, render_svg(l, depth, opt));
  return kOk;
}

int cmd_circlemap(const std::string& path, int depth, const std::string& out) {
  LambdaAssignment l = assignment_from_json(load_json_file(path));
  std::string csv = "x_num,x_den,y\n";
  for (const CircleSample& s : circle_map_samples(l, depth)) {
    csv += s.x.num().str() + "," + s.x.den().str() + ",";
    csv += s.y.infinite ? "inf" : format_double(s.y.value);
    csv += "\n";
  }
  emit(out, csv);
  return kOk;
}

int cmd_holonomy(const std::string& surface_path, const std::string& loops_path,
                 const std::string& out) {
  auto [tri, lambdas] = surface_from_json(load_json_file(surface_path));
  tri.validate();
  Json result = Json::object();
  for (const auto& [name, steps] : loops_from_json(load_json_file(loops_path))) {
    Mobius m = holonomy(tri, lambdas, steps);
    Json entry;
    entry["matrix"] = {format_double(m.a()), format_double(m.b()), format_double(m.c()),
                       format_double(m.d())};
    entry["trace"] = format_double(m.trace());
    result[name] = entry;
  }
  emit(out, json_dump(result));
  return kOk;
}

int cmd_solenoid(const std::string& level_path, const std::string& words_csv,
                 const std::string& out) {
  TransverseLambda d = level_from_json(load_json_file(level_path));
  std::vector<PSL2Word> words;
  std::string tok;
  for (char c : words_csv + ",") {
    if (c == ',') {
      if (!tok.empty()) words.push_back(word_of_mat(mat_of_word(PSL2Word::parse(tok))));
      tok.clear();
    } else {
      tok += c;
    }
  }
  Json result = Json::object();
  for (const PSL2Word& w : words) {
    Json per = Json::object();
    for (int c = 0; c < d.level().index(); ++c) {
      Mobius m = rho(d, w, c);
      per[d.level().coset_key(c)] = {format_double(m.a()), format_double(m.b()),
                                     format_double(m.c()), format_double(m.d())};
    }
    result[w.str()] = per;
  }
  emit(out, json_dump(result));
  return kOk;
}

int cmd_flip(const std::string& path, const std::string& edge, bool orbit, int leaf,
             const std::string& out) {
  Json input = load_json_file(path);
  switch (sniff(input)) {
    case FileKind::surface: {
      auto [tri, lambdas] = surface_from_json(input);
      int e = std::stoi(edge);
      SurfaceFlip f = flip_edge(tri, lambdas, e);
      emit(out, json_dump(surface_to_json(f.triangulation, f.lambdas)));
      return kOk;
    }
    case FileKind::level: {
      TransverseLambda d = level_from_json(input);
      if (!orbit) fail(errc::parse_error, "level flips act on orbits; pass --orbit");
      TransverseLambda flipped = equivariant_flip(d, Edge::parse(edge), leaf);
      // Flipped data no longer keys on tessellation edges; report the
      // slot table instead of the standard level schema.
      Json j;
      j["congruence_k"] = flipped.level().congruence_modulus();
      Json slots = Json::object();
      for (int slot : flipped.slots()) {
        Json entry;
        entry["value"] = format_double(flipped.slot_value(slot));
        entry["flipped"] = flipped.slot_flipped(slot);
        slots[flipped.level().coset_key(slot)] = entry;
      }
      j["slots"] = slots;
      emit(out, json_dump(j));
      return kOk;
    }
    case FileKind::assignment: {
      LambdaAssignment l = assignment_from_json(input);
      Edge e = Edge::parse(edge);
      auto [m1, m2] = edge_apexes(e);
      QuadLambdas q{l(Edge(e.lo, m1)), l(Edge(m1, e.hi)), l(Edge(e.hi, m2)), l(Edge(m2, e.lo)),
                    l(e)};
      Json j;
      j["edge"] = e.str();
      j["quad"] = {format_double(q.a), format_double(q.b), format_double(q.c),
                   format_double(q.d)};
      j["old_value"] = format_double(q.e);
      j["flipped_value"] = format_double(flip_value(q));
      emit(out, json_dump(j));
      return kOk;
    }
  }
  return kValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda lengths, Farey tessellations, flips, holonomy, solenoid levels"};
  app.require_subcommand(1);

  std::string input, out, edge, loops, words;
  int depth = 4, leaf = -1;
  bool horocycles = false, labels = false, orbit = false;

  auto* validate = app.add_subcommand("validate", "check a JSON input and report invariants");
  validate->add_option("input", input)->required();

  auto* render = app.add_subcommand("render", "Poincare-disk SVG of a decorated tessellation");
  render->add_option("input", input)->required();
  render->add_option("-o,--out", out);
  render->add_option("-d,--depth", depth);
  render->add_flag("--horocycles", horocycles);
  render->add_flag("--labels", labels);

  auto* circlemap = app.add_subcommand("circlemap", "CSV samples of the boundary circle map");
  circlemap->add_option("input", input)->required();
  circlemap->add_option("-o,--out", out);
  circlemap->add_option("-d,--depth", depth);

  auto* holonomy_cmd = app.add_subcommand("holonomy", "holonomy matrices along dual loops");
  holonomy_cmd->add_option("surface", input)->required();
  holonomy_cmd->add_option("loops", loops)->required();
  holonomy_cmd->add_option("-o,--out", out);

  auto* solenoid_cmd = app.add_subcommand("solenoid", "rho matrices of level data");
  solenoid_cmd->add_option("level", input)->required();
  solenoid_cmd->add_option("-w,--words", words)->required();
  solenoid_cmd->add_option("-o,--out", out);

  auto* flip_cmd = app.add_subcommand("flip", "Ptolemy flip of an edge (or edge orbit)");
  flip_cmd->add_option("input", input)->required();
  flip_cmd->add_option("-e,--edge", edge)->required();
  flip_cmd->add_flag("--orbit", orbit);
  flip_cmd->add_option("--leaf", leaf);
  flip_cmd->add_option("-o,--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(input);
    if (render->parsed()) return cmd_render(input, depth, horocycles, labels, out);
    if (circlemap->parsed()) return cmd_circlemap(input, depth, out);
    if (holonomy_cmd->parsed()) return cmd_holonomy(input, loops, out);
    if (solenoid_cmd->parsed()) return cmd_solenoid(input, words, out);
    if (flip_cmd->parsed()) return cmd_flip(input, edge, orbit, leaf, out);
  } catch (const horo::Error& ex) {
    horo::Json err;
    err["ok"] = false;
    err["error"] = horo::errc_name(ex.code());
    err["detail"] = ex.what();
    std::cerr << err.dump(2) << "\n";
    if (ex.code() == horo::errc::io_error) return kIo;
    return horo::errc_is_numeric(ex.code()) ? kNumeric : kValidation;
  } catch (const std::exception& ex) {
    std::cerr << "{\"ok\": false, \"error\": \"Internal\", \"detail\": \"" << ex.what()
              << "\"}\n";
    return kNumeric;
  }
  return kOk;
}
