#include "flattorus/atlas_json.hpp"

#include <bit>
#include <cstdio>
#include <random>

#include "flattorus/errors.hpp"
#include "json.hpp"

namespace flattorus {

AtlasDocument make_atlas_document(const PLEmbedding& e, int test_vectors, std::uint64_t seed) {
  AtlasDocument doc;
  doc.model = e.model;
  doc.side = e.torus.side();
  doc.ambient_dim = e.ambient_dim;
  doc.charts = e.charts;
  for (const Vertex& v : e.vertices) {
    AtlasVertex av{v.id, v.uv, v.position, {}};
    for (const VertexCorner& c : v.corners) av.faces.push_back(c.face);
    doc.vertices.push_back(std::move(av));
  }
  for (const Edge& ed : e.edges) {
    AtlasEdge ae{ed.id, ed.v0, ed.v1, {}};
    for (const EdgeSide& s : ed.sides) ae.faces.push_back(s.face);
    doc.edges.push_back(std::move(ae));
  }
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < test_vectors; ++i) {
    const double u = unit() * doc.side;
    const double v = unit() * doc.side;
    const TorusPoint p = canonicalize(u, v, e.torus);
    const AmbientPoint a = map_point(e, p);
    doc.test_vectors.push_back({p, a.x, a.chart, a.side});
  }
  return doc;
}

namespace {

void num(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void vec(std::string& out, const Ambient& a) {
  out += '[';
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    num(out, a(i));
  }
  out += ']';
}

void ints(std::string& out, const std::vector<int>& xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  out += ']';
}

void uv(std::string& out, TorusPoint p) {
  out += "\"uv\":[";
  num(out, p.u);
  out += ',';
  num(out, p.v);
  out += ']';
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

std::string emit_atlas_json(const AtlasDocument& doc) {
  std::string out = "{\"schema_version\":" + quoted(doc.schema_version) + ",\"model\":" + quoted(doc.model) +
                    ",\"side\":";
  num(out, doc.side);
  out += ",\"ambient_dim\":" + std::to_string(doc.ambient_dim) + ",\n\"charts\":[";
  for (std::size_t i = 0; i < doc.charts.size(); ++i) {
    const FaceChart& c = doc.charts[i];
    out += i ? ",\n" : "\n";
    out += "{\"id\":" + std::to_string(c.id) + ",\"domain\":{\"u0\":";
    num(out, c.domain.u0);
    out += ",\"v0\":";
    num(out, c.domain.v0);
    out += ",\"u1\":";
    num(out, c.domain.u1);
    out += ",\"v1\":";
    num(out, c.domain.v1);
    out += "},\"origin\":";
    vec(out, c.origin);
    out += ",\"frame_u\":";
    vec(out, c.frame_u);
    out += ",\"frame_v\":";
    vec(out, c.frame_v);
    out += ",\"side_tag\":\"" + std::string(side_tag_name(c.side)) + "\"}";
  }
  out += "],\n\"vertices\":[";
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
    const AtlasVertex& v = doc.vertices[i];
    out += i ? ",\n" : "\n";
    out += "{\"id\":" + std::to_string(v.id) + ",";
    uv(out, v.uv);
    out += ",\"position\":";
    vec(out, v.position);
    out += ",\"faces\":";
    ints(out, v.faces);
    out += '}';
  }
  out += "],\n\"edges\":[";
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const AtlasEdge& ed = doc.edges[i];
    out += i ? ",\n" : "\n";
    out += "{\"id\":" + std::to_string(ed.id) + ",\"v0\":" + std::to_string(ed.v0) +
           ",\"v1\":" + std::to_string(ed.v1) + ",\"faces\":";
    ints(out, ed.faces);
    out += '}';
  }
  out += "],\n\"test_vectors\":[";
  for (std::size_t i = 0; i < doc.test_vectors.size(); ++i) {
    const AtlasTestVector& t = doc.test_vectors[i];
    out += i ? ",\n" : "\n";
    out += '{';
    uv(out, t.uv);
    out += ",\"x\":";
    vec(out, t.x);
    out += ",\"chart\":" + std::to_string(t.chart) + ",\"side_tag\":\"" + side_tag_name(t.side) + "\"}";
  }
  out += "]}\n";
  return out;
}

namespace {

using nlohmann::json;

Ambient read_vec(const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw InvalidArgument("atlas vector must have ambient_dim components");
  }
  Ambient a(dim);
  for (int i = 0; i < dim; ++i) a(i) = j.at(i).get<double>();
  return a;
}

TorusPoint read_uv(const json& j) {
  const json& p = j.at("uv");
  if (!p.is_array() || p.size() != 2) throw InvalidArgument("uv must have 2 components");
  return {p.at(0).get<double>(), p.at(1).get<double>()};
}

}  // namespace

AtlasDocument parse_atlas_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("atlas JSON does not parse: ") + e.what());
  }
  try {
    AtlasDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != kAtlasSchemaVersion) {
      throw InvalidArgument("unsupported atlas schema_version '" + doc.schema_version + "'");
    }
    doc.model = j.at("model").get<std::string>();
    doc.side = j.at("side").get<double>();
    doc.ambient_dim = j.at("ambient_dim").get<int>();
    if (doc.ambient_dim != 3 && doc.ambient_dim != 4) throw InvalidArgument("ambient_dim must be 3 or 4");
    for (const json& c : j.at("charts")) {
      FaceChart chart;
      chart.id = c.at("id").get<int>();
      const json& d = c.at("domain");
      chart.domain = {d.at("u0").get<double>(), d.at("v0").get<double>(), d.at("u1").get<double>(),
                      d.at("v1").get<double>()};
      chart.origin = read_vec(c.at("origin"), doc.ambient_dim);
      chart.frame_u = read_vec(c.at("frame_u"), doc.ambient_dim);
      chart.frame_v = read_vec(c.at("frame_v"), doc.ambient_dim);
      chart.side = parse_side_tag(c.at("side_tag").get<std::string>());
      doc.charts.push_back(std::move(chart));
    }
    for (const json& v : j.at("vertices")) {
      doc.vertices.push_back({v.at("id").get<int>(), read_uv(v), read_vec(v.at("position"), doc.ambient_dim),
                              v.at("faces").get<std::vector<int>>()});
    }
    for (const json& ed : j.at("edges")) {
      doc.edges.push_back({ed.at("id").get<int>(), ed.at("v0").get<int>(), ed.at("v1").get<int>(),
                           ed.at("faces").get<std::vector<int>>()});
    }
    for (const json& t : j.at("test_vectors")) {
      doc.test_vectors.push_back({read_uv(t), read_vec(t.at("x"), doc.ambient_dim), t.at("chart").get<int>(),
                                  parse_side_tag(t.at("side_tag").get<std::string>())});
    }
    return doc;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed atlas document: ") + e.what());
  }
}

namespace {

bool same(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

bool same(const Ambient& a, const Ambient& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!same(a(i), b(i))) return false;
  }
  return true;
}

bool same(TorusPoint a, TorusPoint b) { return same(a.u, b.u) && same(a.v, b.v); }

}  // namespace

bool identical(const AtlasDocument& a, const AtlasDocument& b) {
  if (a.schema_version != b.schema_version || a.model != b.model || !same(a.side, b.side) ||
      a.ambient_dim != b.ambient_dim || a.charts.size() != b.charts.size() || a.vertices.size() != b.vertices.size() ||
      a.edges.size() != b.edges.size() || a.test_vectors.size() != b.test_vectors.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.charts.size(); ++i) {
    const FaceChart& x = a.charts[i];
    const FaceChart& y = b.charts[i];
    if (x.id != y.id || x.side != y.side || !same(x.domain.u0, y.domain.u0) || !same(x.domain.v0, y.domain.v0) ||
        !same(x.domain.u1, y.domain.u1) || !same(x.domain.v1, y.domain.v1) || !same(x.origin, y.origin) ||
        !same(x.frame_u, y.frame_u) || !same(x.frame_v, y.frame_v)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    const AtlasVertex& x = a.vertices[i];
    const AtlasVertex& y = b.vertices[i];
    if (x.id != y.id || !same(x.uv, y.uv) || !same(x.position, y.position) || x.faces != y.faces) return false;
  }
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    const AtlasEdge& x = a.edges[i];
    const AtlasEdge& y = b.edges[i];
    if (x.id != y.id || x.v0 != y.v0 || x.v1 != y.v1 || x.faces != y.faces) return false;
  }
  for (std::size_t i = 0; i < a.test_vectors.size(); ++i) {
    const AtlasTestVector& x = a.test_vectors[i];
    const AtlasTestVector& y = b.test_vectors[i];
    if (!same(x.uv, y.uv) || !same(x.x, y.x) || x.chart != y.chart || x.side != y.side) return false;
  }
  return true;
}

}  // namespace flattorus
