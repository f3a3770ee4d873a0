#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cq/laurent.hpp"
#include "cq/quiver.hpp"

namespace cq {

using MutationPath = std::vector<std::string>;

/// Exchange matrix together with one cluster variable per row vertex.
struct Seed {
  ExchangeMatrix matrix;
  std::map<std::string, LaurentPoly> variables;  // keyed by vertex id

  const LaurentPoly& variable(std::string_view vertex) const;
  /// Sorted canonical texts of the principal variables.
  std::vector<std::string> cluster_key() const;

  nlohmann::json to_json() const;
  static Seed from_json(const nlohmann::json& j);
};

/// "x" + id for principal vertices; frozen "3'" becomes "f3".
std::string default_variable_name(const Vertex& v);

Seed initial_seed(const Quiver& q);
Seed initial_seed(const ExchangeMatrix& b);

Seed mutate_seed(const Seed& s, std::string_view k);
Seed mutate_along(const Seed& s, const MutationPath& path);

struct VariableLocation {
  MutationPath path;   // from the start seed
  std::string vertex;  // where the variable sits after the path
};

struct ClusterEnumeration {
  std::vector<std::vector<std::string>> clusters;  // cluster keys, discovery order
  std::vector<MutationPath> cluster_paths;         // shortest path to each cluster
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // one per mutation, i < j
  std::map<std::string, VariableLocation> variables;  // principal variable text
  std::vector<std::string> frozen_variables;
  bool closed = false;
};

/// Breadth-first enumeration of seeds up to max_seeds distinct clusters.
/// closed is set when the exchange graph was exhausted within the budget.
ClusterEnumeration enumerate_clusters(const Seed& start, std::size_t max_seeds);

/// Principal coefficients on the principal part of b: variables u<id> and
/// f<id>, frozen rows <id>' carrying the identity block.
Seed principal_seed(const ExchangeMatrix& b);

/// Sets every u variable of the principal seed to 1.
LaurentPoly f_polynomial(const Seed& principal_initial, const LaurentPoly& variable);

/// Degree under deg u_i = e_i, deg f_j = -sum_i b_ij e_i, ordered by the
/// principal columns. Throws std::domain_error if not homogeneous.
std::vector<int> g_vector(const Seed& principal_initial, const LaurentPoly& variable);

/// Rebuilds a cluster variable of the target seed's algebra from its
/// F-polynomial (written in the principal seed's f variables) and g-vector.
LaurentPoly reconstruct_variable(const LaurentPoly& f_poly, const std::vector<int>& g,
                                 const Seed& target_initial, const Seed& principal_initial);

}  // namespace cq
