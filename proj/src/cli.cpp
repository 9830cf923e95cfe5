#include "flattorus/cli.hpp"

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flattorus/atlas_json.hpp"
#include "flattorus/crease_svg.hpp"
#include "flattorus/errors.hpp"
#include "flattorus/game.hpp"
#include "flattorus/obj.hpp"
#include "flattorus/reports.hpp"
#include "flattorus/service.hpp"
#include "flattorus/seven_color.hpp"
#include "json.hpp"

namespace flattorus {

namespace {

struct Options {
  std::string model = "box";
  int n = 4;
  double size = 4.0;
  double eps = 0.0;
  std::string stage = "C";
  double t = 1.0;
  std::uint64_t seed = 1;
  std::string script;
  std::string out;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string static_dir;
  std::string from = "0,0";
  std::string to;
  std::string delta;
  int samples = 0;
  int segments = 32;
  int resolution = 512;
  std::string projection;
  double d = 3.0;
  std::string format;
  std::uint64_t ticks = 600;
};

Point2 parse_pair(const std::string& text, const std::string& flag) {
  std::istringstream in(text);
  Point2 p;
  char comma = 0;
  std::string rest;
  if (!(in >> p.u >> comma >> p.v) || comma != ',' || (in >> rest)) {
    throw InvalidArgument(flag + " expects 'x,y', got '" + text + "'");
  }
  return p;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open '" + o.out + "' for writing");
  file << text;
}

ModelSpec spec_of(const Options& o) { return {o.model, o.n, o.size}; }

std::optional<ProjectionSpec> projection_of(const Options& o) {
  if (o.projection.empty()) return std::nullopt;
  return ProjectionSpec{parse_projection_mode(o.projection), o.d};
}

std::string cmd_build(const Options& o) {
  const Model model = build_model(spec_of(o));
  if (const auto* pl = std::get_if<PLEmbedding>(&model)) return export_atlas_json(*pl);
  return smooth_embedding_json(std::get<SmoothEmbedding>(model));
}

std::string cmd_verify(const Options& o) {
  VerifyOptions v;
  v.seed = o.seed;
  if (o.samples > 0) v.pairs = o.samples;
  return verify_report_json(build_model(spec_of(o)), v);
}

std::string cmd_geodesic(const Options& o) {
  const Model model = build_model(spec_of(o));
  const FlatTorus torus = std::visit([](const auto& e) { return e.torus; }, model);
  const TorusPoint a = canonicalize(parse_pair(o.from, "--from"), torus);
  TorusVector delta;
  if (!o.delta.empty()) {
    if (!o.to.empty()) throw InvalidArgument("give either --to or --delta, not both");
    const Point2 d = parse_pair(o.delta, "--delta");
    delta = {d.u, d.v};
  } else {
    if (o.to.empty()) throw InvalidArgument("geodesic needs --to or --delta");
    delta = minimal_displacement(a, canonicalize(parse_pair(o.to, "--to"), torus), torus);
  }
  return geodesic_json(model, a, delta, o.samples > 0 ? o.samples : 10000);
}

std::string cmd_fold(const Options& o) {
  const FoldFrame frame(parse_stage(o.stage), o.t, FlatTorus(o.size));
  const int samples = o.samples > 0 ? o.samples : 16;
  if (o.format.empty() || o.format == "json") return fold_frame_json(frame, samples);
  if (o.format == "obj") return export_obj(frame, samples, o.eps);
  throw InvalidArgument("fold --format must be json or obj");
}

std::string cmd_export(const Options& o) {
  const std::string format = o.format.empty() ? "obj" : o.format;
  const ModelSpec spec = spec_of(o);
  if (format == "svg") {
    const FlatTorus torus(spec.size);
    if (spec.name == "box") return crease_svg(box_crease_pattern(torus), torus);
    if (spec.name == "prism") return crease_svg(prism_crease_pattern(spec.n, torus), torus);
    if (spec.name == "flatfold") return crease_svg(flatfold_crease_pattern(torus), torus);
    throw InvalidArgument("model '" + spec.name + "' has no crease pattern");
  }
  const Model model = build_model(spec);
  if (format == "json") {
    const auto* pl = std::get_if<PLEmbedding>(&model);
    if (!pl) throw InvalidArgument("model '" + spec.name + "' has no PL atlas");
    return export_atlas_json(*pl);
  }
  if (format != "obj") throw InvalidArgument("export --format must be obj, json or svg");
  if (const auto* pl = std::get_if<PLEmbedding>(&model)) return export_obj(*pl, o.eps, projection_of(o));
  return export_obj(std::get<SmoothEmbedding>(model), o.segments, o.eps, projection_of(o));
}

std::string cmd_seven(const Options& o) {
  const SevenColorTexture texture = seven_color_texture(FlatTorus(o.size), o.resolution);
  if (o.format.empty() || o.format == "svg") return texture.svg;
  if (o.format != "json") throw InvalidArgument("seven --format must be svg or json");
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : texture.report.adjacent_pairs) pairs.push_back({a, b});
  const nlohmann::json report = {{"regions", texture.report.regions},
                                 {"resolution", o.resolution},
                                 {"adjacent_pairs", pairs},
                                 {"complete_graph", texture.report.complete_graph()}};
  return report.dump(2) + "\n";
}

std::string hex64(std::uint64_t h) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string cmd_sim(const Options& o) {
  game::InputScript script;
  if (!o.script.empty()) {
    std::ifstream in(o.script);
    if (!in) throw InvalidArgument("cannot read script '" + o.script + "'");
    script = game::parse_input_script(in);
  }
  const std::string format = o.format.empty() ? "state" : o.format;
  if (format != "state" && format != "hash" && format != "trace") {
    throw InvalidArgument("sim --format must be state, hash or trace");
  }
  const game::GameConfig cfg;
  std::string trace;
  const game::GameState final_state = game::run_script(cfg, o.seed, script, o.ticks, [&](const game::GameState& s) {
    if (format == "trace") trace += std::to_string(s.tick) + " " + hex64(game::state_hash(s)) + "\n";
  });
  if (format == "trace") return trace;
  if (format == "hash") return hex64(game::state_hash(final_state)) + "\n";
  return game::canonical_state(final_state) + "\n";
}

int cmd_serve(const Options& o, std::ostream& out) {
  HttpService service({o.host, o.port, o.static_dir});
  const int port = service.bind();
  out << "serving on http://" << o.host << ":" << port << "/" << std::endl;
  service.run();
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flat square torus workbench: embeddings, verification, folding and toroidal Asteroids", "flattorus"};
  app.require_subcommand(1);
  Options o;

  auto add_model = [&o](CLI::App* c) {
    c->add_option("--model", o.model, "box, prism, cylinder, clifford, tesseract or flatfold")->capture_default_str();
    c->add_option("--n", o.n, "prism side count N >= 3")->capture_default_str();
    c->add_option("--size", o.size, "torus side S")->capture_default_str();
  };
  auto add_out = [&o](CLI::App* c) { c->add_option("--out", o.out, "write to FILE instead of stdout"); };

  CLI::App* build = app.add_subcommand("build", "print the chart atlas of a model as JSON");
  add_model(build);
  add_out(build);

  CLI::App* verify = app.add_subcommand("verify", "check topology, curvature, seams and isometry; JSON report");
  add_model(verify);
  verify->add_option("--seed", o.seed, "RNG seed for sampled checks")->capture_default_str();
  verify->add_option("--samples", o.samples, "random geodesic pairs (default 10000)");
  add_out(verify);

  CLI::App* geodesic = app.add_subcommand("geodesic", "trace a geodesic and map it into the model");
  add_model(geodesic);
  geodesic->add_option("--from", o.from, "start point u,v")->capture_default_str();
  geodesic->add_option("--to", o.to, "end point u,v (shortest path)");
  geodesic->add_option("--delta", o.delta, "lifted displacement du,dv (e.g. 4,0 for a closed loop)");
  geodesic->add_option("--samples", o.samples, "chords for smooth models (default 10000)");
  add_out(geodesic);

  CLI::App* fold = app.add_subcommand("fold", "sample a frame of the fold sequence");
  fold->add_option("--stage", o.stage, "A, B or C")->capture_default_str();
  fold->add_option("--t", o.t, "stage parameter in [0, 1]")->capture_default_str();
  fold->add_option("--size", o.size, "torus side S")->capture_default_str();
  fold->add_option("--samples", o.samples, "grid cells per side (default 16)");
  fold->add_option("--format", o.format, "json or obj");
  fold->add_option("--eps", o.eps, "interior offset for obj")->capture_default_str();
  add_out(fold);

  CLI::App* exporter = app.add_subcommand("export", "write OBJ mesh, atlas JSON or crease-pattern SVG");
  add_model(exporter);
  exporter->add_option("--format", o.format, "obj (default), json or svg");
  exporter->add_option("--eps", o.eps, "interior face offset")->capture_default_str();
  exporter->add_option("--segments", o.segments, "grid cells per chart side for smooth models")->capture_default_str();
  exporter->add_option("--projection", o.projection, "orthographic or perspective (4D models)");
  exporter->add_option("--d", o.d, "perspective eye distance")->capture_default_str();
  add_out(exporter);

  CLI::App* seven = app.add_subcommand("seven", "seven-colour map on the torus");
  seven->add_option("--size", o.size, "torus side S")->capture_default_str();
  seven->add_option("--resolution", o.resolution, "raster size of the adjacency scan")->capture_default_str();
  seven->add_option("--format", o.format, "svg (default) or json adjacency report");
  add_out(seven);

  CLI::App* serve = app.add_subcommand("serve", "run the local HTTP service");
  serve->add_option("--port", o.port, "TCP port, 0 for any free port")->capture_default_str();
  serve->add_option("--host", o.host, "bind address")->capture_default_str();
  serve->add_option("--static", o.static_dir, "directory served at /");

  CLI::App* sim = app.add_subcommand("sim", "run the Asteroids simulation headless");
  sim->add_option("--seed", o.seed, "game seed")->capture_default_str();
  sim->add_option("--script", o.script, "input script FILE (tick turn thrust fire per line)");
  sim->add_option("--ticks", o.ticks, "ticks to run")->capture_default_str();
  sim->add_option("--format", o.format, "state (default), hash or trace");
  add_out(sim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*serve) return cmd_serve(o, out);
    std::string text;
    if (*build) text = cmd_build(o);
    if (*verify) text = cmd_verify(o);
    if (*geodesic) text = cmd_geodesic(o);
    if (*fold) text = cmd_fold(o);
    if (*exporter) text = cmd_export(o);
    if (*seven) text = cmd_seven(o);
    if (*sim) text = cmd_sim(o);
    emit(o, out, text);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace flattorus
