#pragma once

// Local HTTP service feeding the viewer. Routing lives in handle_request, a
// pure function of path and query, so it can be tested without sockets.

#include <map>
#include <memory>
#include <string>

namespace flattorus {

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

using QueryParams = std::map<std::string, std::string>;

/// GET /api/models, /api/atlas, /api/fold, /api/mesh, /api/crease, /api/seven.
/// Bad queries give 400 and unknown models or paths 404, both with a JSON
/// body {"error": ..., "reason": ...}.
HttpResponse handle_request(const std::string& path, const QueryParams& query);

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string static_dir;  // mounted at / when non-empty
};

class HttpService {
 public:
  explicit HttpService(ServiceConfig config);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds the socket and returns the port. Throws ConfigError if binding fails.
  int bind();
  /// Serves until stop(); call bind() first.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace flattorus
