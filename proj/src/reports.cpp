#include "flattorus/reports.hpp"

#include <algorithm>
#include <cmath>

#include "flattorus/atlas_json.hpp"
#include "flattorus/verify.hpp"
#include "json.hpp"

namespace flattorus {

using nlohmann::json;

namespace {

json to_json(const Ambient& a) {
  json out = json::array();
  for (Eigen::Index i = 0; i < a.size(); ++i) out.push_back(a(i));
  return out;
}

json to_json(const Rect& r) { return {{"u0", r.u0}, {"v0", r.v0}, {"u1", r.u1}, {"v1", r.v1}}; }

const FlatTorus& torus_of(const Model& m) {
  return std::visit([](const auto& e) -> const FlatTorus& { return e.torus; }, m);
}

}  // namespace

std::string models_json() {
  json list = json::array();
  for (const ModelInfo& m : model_catalog()) {
    list.push_back({{"name", m.name},
                    {"kind", m.piecewise_linear ? "pl" : "smooth"},
                    {"ambient_dim", m.ambient_dim},
                    {"params", m.params}});
  }
  return json{{"schema_version", kAtlasSchemaVersion}, {"models", list}}.dump(2) + "\n";
}

std::string fold_frame_json(const FoldFrame& frame, int samples) {
  const QuadMesh mesh = frame.sample_mesh(samples);
  json vertices = json::array();
  json uv = json::array();
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const Eigen::Vector3d& p = mesh.vertices[i];
    vertices.push_back({p.x(), p.y(), p.z()});
    uv.push_back({mesh.uv[i].u, mesh.uv[i].v});
  }
  json quads = json::array();
  json sides = json::array();
  for (std::size_t q = 0; q < mesh.quads.size(); ++q) {
    quads.push_back(mesh.quads[q]);
    sides.push_back(side_tag_name(mesh.quad_sides[q]));
  }
  json panels = json::array();
  for (const PanelPlacement& p : frame.panels()) {
    json rotation = json::array();
    for (int r = 0; r < 3; ++r) rotation.push_back({p.rotation(r, 0), p.rotation(r, 1), p.rotation(r, 2)});
    panels.push_back({{"domain", to_json(p.domain)},
                      {"rotation", rotation},
                      {"translation", {p.translation.x(), p.translation.y(), p.translation.z()}}});
  }
  const json doc = {{"schema_version", kAtlasSchemaVersion},
                    {"stage", std::string(1, stage_letter(frame.stage()))},
                    {"t", frame.t()},
                    {"side", frame.torus().side()},
                    {"samples", samples},
                    {"vertices", vertices},
                    {"uv", uv},
                    {"quads", quads},
                    {"sides", sides},
                    {"panels", panels},
                    {"creases_u", frame.creases_u()},
                    {"creases_v", frame.creases_v()}};
  return doc.dump() + "\n";
}

std::string smooth_embedding_json(const SmoothEmbedding& e) {
  json charts = json::array();
  for (const SmoothChart& c : e.charts) {
    charts.push_back({{"id", c.id},
                      {"kind", c.kind == SmoothKind::kCylinder ? "cylinder" : "clifford"},
                      {"radius", c.radius},
                      {"height", c.height},
                      {"domain", to_json(c.domain)},
                      {"side_tag", side_tag_name(c.side)}});
  }
  const json doc = {{"schema_version", kAtlasSchemaVersion},
                    {"model", e.model},
                    {"side", e.torus.side()},
                    {"ambient_dim", e.ambient_dim},
                    {"smooth_charts", charts}};
  return doc.dump(2) + "\n";
}

namespace {

json verify_pl(const PLEmbedding& e, const VerifyOptions& o) {
  json report = {{"model", e.model}, {"side", e.torus.side()}, {"ambient_dim", e.ambient_dim}};
  const TopologyReport t = topology_report(e);
  report["topology"] = {{"F", t.faces}, {"E", t.edges}, {"V", t.vertices}, {"chi", t.chi}, {"genus", t.genus}};
  double worst_deficit = 0.0;
  for (const VertexCurvatureReport& v : angle_deficits(e)) worst_deficit = std::max(worst_deficit, std::fabs(v.deficit));
  report["max_abs_angle_deficit"] = worst_deficit;
  if (e.ambient_dim == 3) {
    std::vector<double> spectrum;
    for (const DihedralReport& d : dihedral_report(e)) {
      const bool seen = std::any_of(spectrum.begin(), spectrum.end(),
                                    [&](double x) { return std::fabs(x - d.degrees) <= 1e-9; });
      if (!seen) spectrum.push_back(d.degrees);
    }
    std::sort(spectrum.begin(), spectrum.end());
    report["dihedral_spectrum_degrees"] = spectrum;
  }
  report["max_seam_gap"] = continuity_check(e);
  report["isometry"] = {{"pairs", o.pairs}, {"seed", o.seed}, {"max_relative_error", isometry_check(e, o.pairs, o.seed)}};
  return report;
}

json verify_smooth(const SmoothEmbedding& e, const VerifyOptions& o) {
  json report = {{"model", e.model}, {"side", e.torus.side()}, {"ambient_dim", e.ambient_dim},
                 {"radius", e.charts.front().radius}};
  report["max_seam_gap"] = continuity_check(e);
  report["isometry"] = {{"pairs", o.pairs},
                        {"seed", o.seed},
                        {"subdivisions", o.subdivisions},
                        {"max_relative_error", isometry_check(e, o.pairs, o.seed, o.subdivisions)}};
  double metric = 0.0;
  for (const SmoothChart& c : e.charts) metric = std::max(metric, metric_check(c, o.metric_grid, o.metric_step));
  report["metric"] = {{"grid", o.metric_grid}, {"step", o.metric_step}, {"max_deviation", metric}};
  return report;
}

}  // namespace

std::string verify_report_json(const Model& model, const VerifyOptions& options) {
  const json report = std::visit(
      [&](const auto& e) {
        if constexpr (std::is_same_v<std::decay_t<decltype(e)>, PLEmbedding>) {
          return verify_pl(e, options);
        } else {
          return verify_smooth(e, options);
        }
      },
      model);
  return report.dump(2) + "\n";
}

std::string geodesic_json(const Model& model, TorusPoint from, TorusVector delta, int subdivisions) {
  const FlatTorus& torus = torus_of(model);
  const TorusPolyline line = trace_geodesic(from, delta, torus);
  json pieces = json::array();
  for (const PolylinePiece& p : line.pieces) {
    pieces.push_back({{"start", {p.start.u, p.start.v}},
                      {"end", {p.end.u, p.end.v}},
                      {"wraps_u", p.wraps_u},
                      {"wraps_v", p.wraps_v}});
  }
  json doc = {{"from", {from.u, from.v}}, {"delta", {delta.du, delta.dv}}, {"intrinsic_length", line.length},
              {"pieces", pieces}};
  if (const auto* pl = std::get_if<PLEmbedding>(&model)) {
    const AmbientPolyline a = map_polyline(*pl, line);
    json points = json::array();
    for (const Ambient& x : a.points) points.push_back(to_json(x));
    json sides = json::array();
    for (SideTag s : a.sides) sides.push_back(side_tag_name(s));
    doc["ambient"] = {{"length", a.length}, {"points", points}, {"segment_sides", sides}};
  } else {
    doc["ambient"] = {{"length", ambient_length(std::get<SmoothEmbedding>(model), line, subdivisions)},
                      {"subdivisions", subdivisions}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace flattorus
