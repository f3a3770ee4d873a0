#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cq/quiver.hpp"

namespace cq {

/// Undirected multigraph without loops, with a bipartition into I0
/// (parity 0) and I1 (parity 1).
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// With no explicit I0 list, each connected component is 2-coloured
  /// starting from its first vertex in parity 0.
  BipartiteGraph(std::vector<std::string> vertices,
                 const std::vector<std::pair<std::string, std::string>>& edges,
                 const std::optional<std::vector<std::string>>& part0 = std::nullopt);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& id(std::size_t i) const { return vertices_.at(i); }
  std::size_t index_of(std::string_view id) const;

  int adjacency(std::size_t i, std::size_t j) const { return adjacency_[i][j]; }
  int parity(std::size_t i) const { return parity_[i]; }
  /// (-1)^parity
  int sign(std::size_t i) const { return parity_[i] == 0 ? 1 : -1; }
  std::vector<std::size_t> neighbours(std::size_t i) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // i < j, with multiplicity

  /// Cartan matrix 2I - A.
  int cartan(std::size_t i, std::size_t j) const {
    return (i == j ? 2 : 0) - adjacency_[i][j];
  }

  nlohmann::json to_json() const;
  static BipartiteGraph from_json(const nlohmann::json& j);

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> parity_;
};

/// a2, a3, a4, d4, d5, e6, kronecker. Vertex ids are "1".."n".
BipartiteGraph builtin_graph(std::string_view name,
                             const std::optional<std::vector<std::string>>& part0 = std::nullopt);
std::vector<std::string> builtin_graph_names();

/// Frozen copy of a principal vertex: "3" -> "3'".
std::string frozen_id(std::string_view id);

/// I0 vertices are sinks; frozen i' -> i on I0 and i -> i' on I1.
Quiver build_decorated(const BipartiteGraph& g);
/// All frozen arrows i -> i'; principal arrows run from I1 to I0.
Quiver build_principal_decoration(const BipartiteGraph& g);
/// Principal arrows run from I0 to I1; frozen f_i -> x_i on I0, x_i -> f_i on I1.
Quiver build_x_quiver(const BipartiteGraph& g);
/// The x-quiver mutated once at every I1 vertex.
Quiver build_z_quiver(const BipartiteGraph& g);
/// Principal part of the decorated quiver (arrows from I1 to I0), no frozen vertices.
Quiver principal_decorated_part(const BipartiteGraph& g);
/// Principal part of the x-quiver, no frozen vertices.
Quiver plain_quiver(const BipartiteGraph& g);

}  // namespace cq
