#include "cq/explorer.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <httplib.h>

#include "cq/verifier.hpp"

namespace cq {

namespace {

using nlohmann::json;

HttpResult error(int status, const std::string& message) { return {status, {{"error", message}}}; }

const char* frame_name(Frame f) {
  switch (f) {
    case Frame::plain: return "plain";
    case Frame::x: return "x";
    case Frame::z: return "z";
  }
  return "plain";
}

Frame parse_frame(const std::string& s) {
  if (s == "plain") return Frame::plain;
  if (s == "x") return Frame::x;
  if (s == "z") return Frame::z;
  throw std::invalid_argument("unknown frame '" + s + "' (expected plain, x or z)");
}

std::vector<std::string> split_parts(const json& parts) {
  if (parts.is_array()) return parts.get<std::vector<std::string>>();
  std::vector<std::string> out;
  std::stringstream ss(parts.get<std::string>());
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

BipartiteGraph graph_from_request(const json& req) {
  std::optional<std::vector<std::string>> part0;
  if (req.contains("parts") && !req["parts"].is_null()) part0 = split_parts(req["parts"]);
  const json& g = req.at("graph");
  if (g.is_string()) return builtin_graph(g.get<std::string>(), part0);
  BipartiteGraph parsed = BipartiteGraph::from_json(g);
  if (!part0) return parsed;
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [i, j] : parsed.edges()) edges.emplace_back(parsed.id(i), parsed.id(j));
  return BipartiteGraph(parsed.vertices(), edges, part0);
}

Seed frame_seed(const BipartiteGraph& g, Frame f) {
  switch (f) {
    case Frame::plain: return initial_seed(plain_quiver(g));
    case Frame::x: return initial_seed(build_x_quiver(g));
    case Frame::z: return z_seed(g);
  }
  return {};
}

bool is_mutable(const Seed& s, const std::string& vertex) { return s.matrix.is_column(vertex); }

bool has_row(const Seed& s, const std::string& vertex) { return s.variables.count(vertex) > 0; }

json seed_diff(const Seed& before, const Seed& after, const std::string& k) {
  json changes = json::array();
  const auto& b = before.matrix;
  const auto& a = after.matrix;
  for (std::size_t r = 0; r < b.row_count(); ++r)
    for (std::size_t c = 0; c < b.column_count(); ++c)
      if (b.at(r, c) != a.at(r, c))
        changes.push_back({{"row", b.rows()[r].id}, {"column", b.columns()[c]}, {"before", b.at(r, c)},
                           {"after", a.at(r, c)}});
  const LaurentPoly& fresh = after.variable(k);
  return {{"vertex", k},
          {"variable",
           {{"before", before.variable(k).to_string()},
            {"after", fresh.to_string()},
            {"fraction", fraction_text(fresh)}}},
          {"matrix", changes}};
}

Seed replay(const Seed& initial, const std::vector<std::string>& history) { return mutate_along(initial, history); }

std::string analysis_key(const std::string& vertex, const std::vector<std::string>& history) {
  std::string key = vertex + "@";
  for (const auto& h : history) key += h + "/";
  return key;
}

}  // namespace

ExplorerService::ExplorerService(std::optional<std::filesystem::path> state_dir)
    : state_dir_(std::move(state_dir)) {
  if (state_dir_) {
    std::filesystem::create_directories(*state_dir_);
    restore();
  }
}

std::size_t ExplorerService::session_count() const {
  std::lock_guard<std::mutex> guard(store_lock_);
  return sessions_.size();
}

std::shared_ptr<Session> ExplorerService::find(const std::string& id) const {
  std::lock_guard<std::mutex> guard(store_lock_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

HttpResult ExplorerService::handle(const std::string& method, const std::string& path, const std::string& body) {
  static const std::regex session_route(R"(^/session/([^/]+)(?:/(mutate|undo|variable|whatif)(?:/([^/]+))?)?/?$)");
  try {
    if (path == "/api" && method == "GET") return {200, openapi()};
    if ((path == "/session" || path == "/session/") && method == "POST") return create(body);

    std::smatch m;
    if (!std::regex_match(path, m, session_route)) return error(404, "no route for " + method + " " + path);
    const std::string id = m[1];
    const std::string action = m[2];
    const std::string vertex = m[3];
    auto session = find(id);
    if (!session) return error(404, "unknown session '" + id + "'");
    std::lock_guard<std::mutex> guard(session->lock);

    if (action.empty() && method == "GET") return show(*session);
    if (action == "mutate" && vertex.empty() && method == "POST") return mutate(*session, body);
    if (action == "undo" && vertex.empty() && method == "POST") return undo(*session);
    if (action == "variable" && !vertex.empty() && method == "GET") return variable(*session, vertex);
    if (action == "whatif" && !vertex.empty() && method == "GET") return whatif(*session, vertex);
    return error(404, "no route for " + method + " " + path);
  } catch (const json::exception& e) {
    return error(400, std::string("bad request body: ") + e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

HttpResult ExplorerService::create(const std::string& body) {
  json req;
  try {
    req = json::parse(body.empty() ? "{}" : body);
  } catch (const json::exception& e) {
    return error(400, std::string("malformed JSON: ") + e.what());
  }
  if (!req.is_object()) return error(400, "request body must be a JSON object");

  auto s = std::make_shared<Session>();
  try {
    if (req.contains("quiver")) {
      s->initial = initial_seed(Quiver::from_json(req["quiver"]));
    } else if (req.contains("graph")) {
      s->frame = parse_frame(req.value("frame", std::string("plain")));
      s->graph = graph_from_request(req);
      s->initial = frame_seed(*s->graph, s->frame);
    } else {
      return error(422, "request needs a graph or a quiver");
    }
  } catch (const json::exception& e) {
    return error(422, std::string("invalid graph: ") + e.what());
  } catch (const std::exception& e) {
    return error(422, std::string("invalid graph: ") + e.what());
  }
  s->current = s->initial;
  {
    std::lock_guard<std::mutex> guard(store_lock_);
    s->id = "s" + std::to_string(next_id_++);
    sessions_[s->id] = s;
  }
  persist(*s);
  return {201, {{"id", s->id}, {"seed", s->current.to_json()}}};
}

HttpResult ExplorerService::show(Session& s) {
  json out = {{"id", s.id}, {"seed", s.current.to_json()}, {"history", s.history}};
  if (s.graph) {
    out["graph"] = s.graph->to_json();
    out["frame"] = frame_name(s.frame);
  }
  return {200, out};
}

HttpResult ExplorerService::mutate(Session& s, const std::string& body) {
  json req;
  try {
    req = json::parse(body);
  } catch (const json::exception& e) {
    return error(400, std::string("malformed JSON: ") + e.what());
  }
  if (!req.is_object() || !req.contains("vertex")) return error(400, "expected {\"vertex\": id}");
  const std::string k = req["vertex"].is_string() ? req["vertex"].get<std::string>() : req["vertex"].dump();
  if (!has_row(s.current, k)) return error(404, "unknown vertex '" + k + "'");
  if (!is_mutable(s.current, k)) return error(409, "vertex '" + k + "' is frozen");
  const Seed before = s.current;
  s.current = mutate_seed(before, k);
  s.history.push_back(k);
  persist(s);
  return {200, {{"seed", s.current.to_json()}, {"diff", seed_diff(before, s.current, k)}, {"history", s.history}}};
}

HttpResult ExplorerService::undo(Session& s) {
  if (s.history.empty()) return error(409, "nothing to undo");
  const std::string k = s.history.back();
  const Seed before = s.current;
  s.history.pop_back();
  s.current = replay(s.initial, s.history);
  persist(s);
  return {200, {{"seed", s.current.to_json()}, {"diff", seed_diff(before, s.current, k)}, {"history", s.history}}};
}

HttpResult ExplorerService::whatif(Session& s, const std::string& vertex) {
  if (!has_row(s.current, vertex)) return error(404, "unknown vertex '" + vertex + "'");
  if (!is_mutable(s.current, vertex)) return error(409, "vertex '" + vertex + "' is frozen");
  const Seed preview = mutate_seed(s.current, vertex);
  return {200, {{"seed", preview.to_json()}, {"diff", seed_diff(s.current, preview, vertex)}, {"committed", false}}};
}

HttpResult ExplorerService::variable(Session& s, const std::string& vertex) {
  if (!has_row(s.current, vertex)) return error(404, "unknown vertex '" + vertex + "'");
  const std::string key = analysis_key(vertex, s.history);
  auto cached = s.analyses.find(key);
  if (cached != s.analyses.end()) return {200, cached->second};

  const LaurentPoly& value = s.current.variable(vertex);
  json out = {{"vertex", vertex},
              {"frozen", !is_mutable(s.current, vertex)},
              {"laurent", value.to_string()},
              {"fraction", fraction_text(value)}};

  if (is_mutable(s.current, vertex)) {
    const Seed principal = principal_seed(s.initial.matrix);
    const LaurentPoly with_coefficients = replay(principal, s.history).variable(vertex);
    out["f_polynomial"] = f_polynomial(principal, with_coefficients).to_string();
    out["g_vector"] = g_vector(principal, with_coefficients);
  } else {
    out["f_polynomial"] = "1";
    out["g_vector"] = nullptr;
  }

  out["character"] = nullptr;
  if (s.graph) {
    // the same mutation sequence read in the z-seed, whose variables carry characters
    const BipartiteGraph& g = *s.graph;
    MutationPath path;
    if (s.frame == Frame::plain || s.frame == Frame::x)
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g.parity(i) == 1) path.push_back(g.id(i));
    path.insert(path.end(), s.history.begin(), s.history.end());
    const Seed zs = z_seed(g);
    std::string z_vertex = vertex;
    if (!has_row(zs, z_vertex)) {
      // frozen rows exist only in the x and z frames
      z_vertex.clear();
    }
    if (!z_vertex.empty()) {
      const QCharacter chi{substitute(mutate_along(zs, path).variable(z_vertex), z_seed_characters(g))};
      json c = chi.to_json();
      if (is_mutable(s.current, vertex)) {
        const Seed zp = principal_seed(zs.matrix);
        const auto gz = g_vector(zp, mutate_along(zp, path).variable(z_vertex));
        const auto w = module_for_g_vector(g, gz);
        c["module"] = w ? w->to_json() : json(nullptr);
      }
      out["character"] = c;
    }
  }
  s.analyses[key] = out;
  return {200, out};
}

void ExplorerService::persist(const Session& s) const {
  if (!state_dir_) return;
  json snap = {{"id", s.id}, {"history", s.history}, {"initial", s.initial.to_json()}};
  if (s.graph) {
    snap["graph"] = s.graph->to_json();
    snap["frame"] = frame_name(s.frame);
  }
  const auto path = *state_dir_ / (s.id + ".json");
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << snap.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

void ExplorerService::restore() {
  for (const auto& entry : std::filesystem::directory_iterator(*state_dir_)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    const json snap = json::parse(in);
    auto s = std::make_shared<Session>();
    s->id = snap.at("id").get<std::string>();
    s->initial = Seed::from_json(snap.at("initial"));
    if (snap.contains("graph")) {
      s->graph = BipartiteGraph::from_json(snap["graph"]);
      s->frame = parse_frame(snap.at("frame").get<std::string>());
    }
    s->history = snap.at("history").get<std::vector<std::string>>();
    s->current = replay(s->initial, s->history);
    if (s->id.size() > 1 && s->id[0] == 's')
      next_id_ = std::max(next_id_, std::stoul(s->id.substr(1)) + 1);
    sessions_[s->id] = s;
  }
}

json ExplorerService::openapi() {
  auto id_param = json{{"name", "id"}, {"in", "path"}, {"required", true}, {"schema", {{"type", "string"}}}};
  auto vertex_param = json{{"name", "vertex"}, {"in", "path"}, {"required", true}, {"schema", {{"type", "string"}}}};
  auto reply = [](const std::string& text) { return json{{"description", text}}; };
  return {
      {"openapi", "3.0.3"},
      {"info", {{"title", "cq explorer"}, {"version", "1.0.0"}}},
      {"paths",
       {{"/session",
         {{"post",
           {{"summary", "Open a session on a built-in or custom bipartite graph, or on a raw quiver"},
            {"requestBody",
             {{"content",
               {{"application/json",
                 {{"schema",
                   {{"type", "object"},
                    {"properties",
                     {{"graph", {{"oneOf", json::array({{{"type", "string"}}, {{"type", "object"}}})}}},
                      {"parts", {{"oneOf", json::array({{{"type", "string"}}, {{"type", "array"}}})}}},
                      {"frame", {{"type", "string"}, {"enum", {"plain", "x", "z"}}}},
                      {"quiver", {{"type", "object"}}}}}}}}}}}}},
            {"responses", {{"201", reply("{id, seed}")}, {"400", reply("malformed JSON")},
                           {"422", reply("invalid graph")}}}}}}},
        {"/session/{id}",
         {{"get",
           {{"summary", "Current seed and history"},
            {"parameters", {id_param}},
            {"responses", {{"200", reply("{id, seed, history}")}, {"404", reply("unknown session")}}}}}}},
        {"/session/{id}/mutate",
         {{"post",
           {{"summary", "Mutate at a vertex and commit"},
            {"parameters", {id_param}},
            {"requestBody",
             {{"content",
               {{"application/json",
                 {{"schema", {{"type", "object"}, {"properties", {{"vertex", {{"type", "string"}}}}}}}}}}}}},
            {"responses", {{"200", reply("{seed, diff, history}")}, {"404", reply("unknown session or vertex")},
                           {"409", reply("frozen vertex")}}}}}}},
        {"/session/{id}/undo",
         {{"post",
           {{"summary", "Revert the last committed mutation"},
            {"parameters", {id_param}},
            {"responses", {{"200", reply("{seed, diff, history}")}, {"409", reply("empty history")}}}}}}},
        {"/session/{id}/variable/{vertex}",
         {{"get",
           {{"summary", "Laurent expansion, F-polynomial, g-vector and truncated character"},
            {"parameters", {id_param, vertex_param}},
            {"responses", {{"200", reply("{laurent, fraction, f_polynomial, g_vector, character}")},
                           {"404", reply("unknown session or vertex")}}}}}}},
        {"/session/{id}/whatif/{vertex}",
         {{"get",
           {{"summary", "Preview a mutation without committing it"},
            {"parameters", {id_param, vertex_param}},
            {"responses", {{"200", reply("{seed, diff, committed: false}")},
                           {"404", reply("unknown session or vertex")}, {"409", reply("frozen vertex")}}}}}}},
        {"/api", {{"get", {{"summary", "This document"}, {"responses", {{"200", reply("OpenAPI 3")}}}}}}}}}};
}

struct ExplorerHttpServer::Impl {
  httplib::Server server;
};

ExplorerHttpServer::ExplorerHttpServer(ExplorerService& service) : impl_(std::make_unique<Impl>()) {
  auto route = [&service](const httplib::Request& req, httplib::Response& res) {
    const HttpResult r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  impl_->server.Get(".*", route);
  impl_->server.Post(".*", route);
}

ExplorerHttpServer::~ExplorerHttpServer() = default;

int ExplorerHttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool ExplorerHttpServer::run() { return impl_->server.listen_after_bind(); }

void ExplorerHttpServer::stop() { impl_->server.stop(); }

int serve_explorer(ExplorerService& service, const std::string& host, int port) {
  ExplorerHttpServer server(service);
  if (server.bind(host, port) < 0) return 1;
  return server.run() ? 0 : 1;
}

}  // namespace cq
