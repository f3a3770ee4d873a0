#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cq/cluster.hpp"
#include "cq/graph.hpp"

namespace cq {

struct HttpResult {
  int status = 200;
  nlohmann::json body;
};

enum class Frame { plain, x, z };

/// One exploration: a start seed plus the committed mutation history.
struct Session {
  std::string id;
  std::optional<BipartiteGraph> graph;  // absent for sessions opened on a raw quiver
  Frame frame = Frame::plain;
  Seed initial;
  Seed current;
  std::vector<std::string> history;
  std::map<std::string, nlohmann::json> analyses;  // keyed by vertex and history
  std::mutex lock;
};

/// In-memory session store behind the HTTP endpoints. Requests on one
/// session are serialized; different sessions proceed independently.
class ExplorerService {
 public:
  explicit ExplorerService(std::optional<std::filesystem::path> state_dir = std::nullopt);

  /// Routes a request. Errors come back as {"error": message} with 400 (bad
  /// JSON), 404 (unknown route, session or vertex), 409 (frozen vertex or
  /// empty history) or 422 (invalid graph or quiver).
  HttpResult handle(const std::string& method, const std::string& path, const std::string& body);

  static nlohmann::json openapi();
  std::size_t session_count() const;

 private:
  HttpResult create(const std::string& body);
  HttpResult show(Session& s);
  HttpResult mutate(Session& s, const std::string& body);
  HttpResult undo(Session& s);
  HttpResult variable(Session& s, const std::string& vertex);
  HttpResult whatif(Session& s, const std::string& vertex);

  std::shared_ptr<Session> find(const std::string& id) const;
  void persist(const Session& s) const;
  void restore();

  std::optional<std::filesystem::path> state_dir_;
  mutable std::mutex store_lock_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_id_ = 1;
};

/// HTTP front end for an ExplorerService.
class ExplorerHttpServer {
 public:
  explicit ExplorerHttpServer(ExplorerService& service);
  ~ExplorerHttpServer();

  /// Port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called.
  bool run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Blocks serving the explorer on host:port.
int serve_explorer(ExplorerService& service, const std::string& host, int port);

}  // namespace cq
