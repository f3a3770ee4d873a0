#include "cq/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace cq {

BipartiteGraph::BipartiteGraph(std::vector<std::string> vertices,
                               const std::vector<std::pair<std::string, std::string>>& edges,
                               const std::optional<std::vector<std::string>>& part0)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n == 0) throw QuiverError("graph has no vertices");
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (v.empty() || v.back() == '\'') throw QuiverError("invalid vertex id '" + v + "'");
    if (!seen.insert(v).second) throw QuiverError("duplicate vertex id '" + v + "'");
  }
  adjacency_.assign(n, std::vector<int>(n, 0));
  for (const auto& [a, b] : edges) {
    const auto i = index_of(a);
    const auto j = index_of(b);
    if (i == j) throw QuiverError("loop at vertex '" + a + "'");
    ++adjacency_[i][j];
    ++adjacency_[j][i];
  }

  parity_.assign(n, -1);
  if (part0) {
    for (auto& p : parity_) p = 1;
    for (const auto& id : *part0) parity_[index_of(id)] = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (adjacency_[i][j] > 0 && parity_[i] == parity_[j])
          throw QuiverError("bipartition violated by edge " + vertices_[i] + "-" + vertices_[j]);
    return;
  }
  for (std::size_t start = 0; start < n; ++start) {
    if (parity_[start] >= 0) continue;
    parity_[start] = 0;
    std::queue<std::size_t> todo;
    todo.push(start);
    while (!todo.empty()) {
      auto v = todo.front();
      todo.pop();
      for (std::size_t w = 0; w < n; ++w) {
        if (adjacency_[v][w] == 0) continue;
        if (parity_[w] < 0) {
          parity_[w] = 1 - parity_[v];
          todo.push(w);
        } else if (parity_[w] == parity_[v]) {
          throw QuiverError("graph is not bipartite");
        }
      }
    }
  }
}

std::size_t BipartiteGraph::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == id) return i;
  throw QuiverError("unknown vertex '" + std::string(id) + "'");
}

std::vector<std::size_t> BipartiteGraph::neighbours(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (adjacency_[i][j] > 0) out.push_back(j);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> BipartiteGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      for (int k = 0; k < adjacency_[i][j]; ++k) out.emplace_back(i, j);
  return out;
}

nlohmann::json BipartiteGraph::to_json() const {
  nlohmann::json edges_json = nlohmann::json::array();
  for (auto [i, j] : edges()) edges_json.push_back({vertices_[i], vertices_[j]});
  std::vector<std::string> p0;
  for (std::size_t i = 0; i < size(); ++i)
    if (parity_[i] == 0) p0.push_back(vertices_[i]);
  return {{"vertices", vertices_}, {"edges", edges_json}, {"parts", p0}};
}

BipartiteGraph BipartiteGraph::from_json(const nlohmann::json& j) {
  try {
    auto vs = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw QuiverError("edge must be a pair");
      es.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    std::optional<std::vector<std::string>> p0;
    if (j.contains("parts") && !j["parts"].is_null()) p0 = j["parts"].get<std::vector<std::string>>();
    return BipartiteGraph(std::move(vs), es, p0);
  } catch (const nlohmann::json::exception& e) {
    throw QuiverError(std::string("malformed graph JSON: ") + e.what());
  }
}

namespace {

std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

std::vector<std::string> builtin_graph_names() {
  return {"a2", "a3", "a4", "d4", "d5", "e6", "kronecker"};
}

BipartiteGraph builtin_graph(std::string_view name,
                             const std::optional<std::vector<std::string>>& part0) {
  using E = std::vector<std::pair<std::string, std::string>>;
  if (name == "a2") return {numbered(2), E{{"1", "2"}}, part0};
  if (name == "a3") return {numbered(3), E{{"1", "2"}, {"2", "3"}}, part0};
  if (name == "a4") return {numbered(4), E{{"1", "2"}, {"2", "3"}, {"3", "4"}}, part0};
  if (name == "d4") return {numbered(4), E{{"1", "2"}, {"2", "3"}, {"2", "4"}}, part0};
  if (name == "d5") return {numbered(5), E{{"1", "2"}, {"2", "3"}, {"3", "4"}, {"3", "5"}}, part0};
  if (name == "e6")
    return {numbered(6), E{{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"3", "6"}}, part0};
  if (name == "kronecker") return {numbered(2), E{{"1", "2"}, {"1", "2"}}, part0};
  throw QuiverError("unknown graph '" + std::string(name) + "'");
}

std::string frozen_id(std::string_view id) { return std::string(id) + "'"; }

namespace {

using ArrowList = std::vector<std::pair<std::string, std::string>>;

std::vector<Vertex> decorated_vertices(const BipartiteGraph& g, bool with_frozen) {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < g.size(); ++i) vs.push_back({g.id(i), false, g.parity(i)});
  if (with_frozen)
    for (std::size_t i = 0; i < g.size(); ++i) vs.push_back({frozen_id(g.id(i)), true, std::nullopt});
  return vs;
}

// one arrow per edge, oriented from the given parity to the other
void add_principal(const BipartiteGraph& g, int from_parity, ArrowList& out) {
  for (auto [i, j] : g.edges()) {
    if (g.parity(i) == from_parity)
      out.emplace_back(g.id(i), g.id(j));
    else
      out.emplace_back(g.id(j), g.id(i));
  }
}

}  // namespace

Quiver build_decorated(const BipartiteGraph& g) {
  ArrowList arrows;
  add_principal(g, 1, arrows);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.parity(i) == 0)
      arrows.emplace_back(frozen_id(g.id(i)), g.id(i));
    else
      arrows.emplace_back(g.id(i), frozen_id(g.id(i)));
  }
  return Quiver(decorated_vertices(g, true), arrows);
}

Quiver build_principal_decoration(const BipartiteGraph& g) {
  ArrowList arrows;
  add_principal(g, 1, arrows);
  for (std::size_t i = 0; i < g.size(); ++i) arrows.emplace_back(g.id(i), frozen_id(g.id(i)));
  return Quiver(decorated_vertices(g, true), arrows);
}

Quiver build_x_quiver(const BipartiteGraph& g) {
  ArrowList arrows;
  add_principal(g, 0, arrows);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.parity(i) == 0)
      arrows.emplace_back(frozen_id(g.id(i)), g.id(i));
    else
      arrows.emplace_back(g.id(i), frozen_id(g.id(i)));
  }
  return Quiver(decorated_vertices(g, true), arrows);
}

Quiver build_z_quiver(const BipartiteGraph& g) {
  ExchangeMatrix b = to_matrix(build_x_quiver(g));
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.parity(i) == 1) b = mutate_matrix(b, g.id(i));
  return from_matrix(b);
}

Quiver principal_decorated_part(const BipartiteGraph& g) {
  ArrowList arrows;
  add_principal(g, 1, arrows);
  return Quiver(decorated_vertices(g, false), arrows);
}

Quiver plain_quiver(const BipartiteGraph& g) {
  ArrowList arrows;
  add_principal(g, 0, arrows);
  return Quiver(decorated_vertices(g, false), arrows);
}

}  // namespace cq
