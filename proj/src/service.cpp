#include "flattorus/service.hpp"

#include <charconv>
#include <cmath>

#include "flattorus/atlas_json.hpp"
#include "flattorus/crease_svg.hpp"
#include "flattorus/errors.hpp"
#include "flattorus/obj.hpp"
#include "flattorus/reports.hpp"
#include "flattorus/seven_color.hpp"
#include "httplib.h"
#include "json.hpp"

namespace flattorus {

namespace {

HttpResponse error_response(int status, const std::string& reason) {
  const char* kind = status == 404 ? "not_found" : status == 400 ? "bad_request" : "internal_error";
  const nlohmann::json body = {{"error", kind}, {"reason", reason}};
  return {status, "application/json", body.dump() + "\n"};
}

struct NotFound : Error {
  using Error::Error;
};

const std::string* find(const QueryParams& q, const std::string& key) {
  const auto it = q.find(key);
  return it == q.end() ? nullptr : &it->second;
}

double number(const QueryParams& q, const std::string& key, double fallback) {
  const std::string* text = find(q, key);
  if (!text) return fallback;
  double x = 0.0;
  const auto [end, ec] = std::from_chars(text->data(), text->data() + text->size(), x);
  if (ec != std::errc() || end != text->data() + text->size() || !std::isfinite(x)) {
    throw InvalidArgument("query parameter '" + key + "' must be a number");
  }
  return x;
}

int integer(const QueryParams& q, const std::string& key, int fallback) {
  const std::string* text = find(q, key);
  if (!text) return fallback;
  int x = 0;
  const auto [end, ec] = std::from_chars(text->data(), text->data() + text->size(), x);
  if (ec != std::errc() || end != text->data() + text->size()) {
    throw InvalidArgument("query parameter '" + key + "' must be an integer");
  }
  return x;
}

ModelSpec model_spec(const QueryParams& q) {
  const std::string* name = find(q, "model");
  if (!name) throw InvalidArgument("query parameter 'model' is required");
  if (!is_known_model(*name)) throw NotFound("unknown model '" + *name + "'");
  return {*name, integer(q, "n", 4), number(q, "size", 4.0)};
}

ProjectionSpec projection_spec(const QueryParams& q) {
  ProjectionSpec p;
  if (const std::string* mode = find(q, "projection")) p.mode = parse_projection_mode(*mode);
  p.d = number(q, "d", p.d);
  return p;
}

HttpResponse atlas(const QueryParams& q) {
  const Model model = build_model(model_spec(q));
  const auto* pl = std::get_if<PLEmbedding>(&model);
  if (!pl) throw InvalidArgument("model '" + std::get<SmoothEmbedding>(model).model + "' has no PL atlas");
  return {200, "application/json", export_atlas_json(*pl)};
}

HttpResponse fold(const QueryParams& q) {
  const std::string* stage = find(q, "stage");
  const FoldFrame frame(parse_stage(stage ? *stage : "C"), number(q, "t", 1.0), FlatTorus(number(q, "size", 4.0)));
  const int samples = integer(q, "samples", 64);
  if (samples < 1 || samples > 512) throw InvalidArgument("samples must lie in [1, 512]");
  return {200, "application/json", fold_frame_json(frame, samples)};
}

HttpResponse mesh(const QueryParams& q) {
  const Model model = build_model(model_spec(q));
  const double eps = number(q, "eps", 0.0);
  const ProjectionSpec projection = projection_spec(q);
  std::string body;
  if (const auto* pl = std::get_if<PLEmbedding>(&model)) {
    body = export_obj(*pl, eps, projection);
  } else {
    const int segments = integer(q, "segments", 32);
    if (segments < 1 || segments > 1024) throw InvalidArgument("segments must lie in [1, 1024]");
    body = export_obj(std::get<SmoothEmbedding>(model), segments, eps, projection);
  }
  return {200, "text/plain", body};
}

HttpResponse crease(const QueryParams& q) {
  const ModelSpec spec = model_spec(q);
  const FlatTorus torus(spec.size);
  CreasePattern pattern;
  if (spec.name == "box") {
    pattern = box_crease_pattern(torus);
  } else if (spec.name == "prism") {
    pattern = prism_crease_pattern(spec.n, torus);
  } else if (spec.name == "flatfold") {
    pattern = flatfold_crease_pattern(torus);
  } else {
    throw InvalidArgument("model '" + spec.name + "' has no crease pattern");
  }
  return {200, "image/svg+xml", crease_svg(pattern, torus)};
}

}  // namespace

HttpResponse handle_request(const std::string& path, const QueryParams& query) {
  try {
    if (path == "/api/models") return {200, "application/json", models_json()};
    if (path == "/api/atlas") return atlas(query);
    if (path == "/api/fold") return fold(query);
    if (path == "/api/mesh") return mesh(query);
    if (path == "/api/crease") return crease(query);
    if (path == "/api/seven") {
      return {200, "image/svg+xml", seven_color_texture(FlatTorus(number(query, "size", 4.0))).svg};
    }
    return error_response(404, "no route for '" + path + "'");
  } catch (const NotFound& e) {
    return error_response(404, e.what());
  } catch (const InvalidArgument& e) {
    return error_response(400, e.what());
  } catch (const UnsupportedDimension& e) {
    return error_response(400, e.what());
  } catch (const Error& e) {
    return error_response(500, e.what());
  }
}

struct HttpService::Impl {
  ServiceConfig config;
  httplib::Server server;
};

HttpService::HttpService(ServiceConfig config) : impl_(std::make_unique<Impl>()) {
  impl_->config = std::move(config);
  impl_->server.Get(R"(/api/.*)", [](const httplib::Request& req, httplib::Response& res) {
    QueryParams query;
    for (const auto& [key, value] : req.params) query.emplace(key, value);
    const HttpResponse r = handle_request(req.path, query);
    res.status = r.status;
    if (r.status == 200) res.set_header("Cache-Control", "public, max-age=3600");
    res.set_content(r.body, r.content_type);
  });
  if (!impl_->config.static_dir.empty() && !impl_->server.set_mount_point("/", impl_->config.static_dir)) {
    throw ConfigError("static directory '" + impl_->config.static_dir + "' does not exist");
  }
}

HttpService::~HttpService() = default;

int HttpService::bind() {
  const ServiceConfig& c = impl_->config;
  const int port = c.port == 0 ? impl_->server.bind_to_any_port(c.host)
                               : (impl_->server.bind_to_port(c.host, c.port) ? c.port : -1);
  if (port < 0) throw ConfigError("cannot bind " + c.host + ":" + std::to_string(c.port));
  return port;
}

void HttpService::run() { impl_->server.listen_after_bind(); }

void HttpService::stop() { impl_->server.stop(); }

}  // namespace flattorus
