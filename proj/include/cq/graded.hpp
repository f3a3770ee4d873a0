#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cq/graph.hpp"
#include "cq/rep.hpp"

namespace cq {

/// Dimensions of an I x Z graded vector space, keyed by (vertex id, n) where
/// n is the power of q. Zero entries are not stored.
class GradedDim {
 public:
  using Key = std::pair<std::string, int>;

  GradedDim() = default;

  int at(const std::string& vertex, int n) const;
  void set(const std::string& vertex, int n, int value);
  void add(const std::string& vertex, int n, int value) { set(vertex, n, at(vertex, n) + value); }
  const std::map<Key, int>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  GradedDim operator+(const GradedDim& o) const;
  bool operator==(const GradedDim&) const = default;
  auto operator<=>(const GradedDim&) const = default;

  /// {"i:n": dim, ...}
  nlohmann::json to_json() const;
  static GradedDim from_json(const nlohmann::json& j);
  std::string to_string() const;

 private:
  std::map<Key, int> entries_;
};

/// Slot of W_i: n = 3 * parity. Slot of W_{i'}: n = 2 - parity.
int principal_slot(const BipartiteGraph& g, std::size_t i);
int frozen_slot(const BipartiteGraph& g, std::size_t i);
/// Slot carrying V_i: n = parity + 1.
int middle_slot(const BipartiteGraph& g, std::size_t i);

/// Throws std::invalid_argument unless W is supported on the slots above.
void check_two_slot(const BipartiteGraph& g, const GradedDim& w);

/// Dimension vector on the decorated vertex order (principal, then frozen).
DimVector to_decorated_dims(const BipartiteGraph& g, const GradedDim& w);
GradedDim from_decorated_dims(const BipartiteGraph& g, const DimVector& d);
/// Only the principal slots, indexed by graph vertex.
DimVector principal_dims(const BipartiteGraph& g, const GradedDim& w);
GradedDim from_principal_dims(const BipartiteGraph& g, const DimVector& d);
bool is_principal(const BipartiteGraph& g, const GradedDim& w);

GradedDim kr_module(const BipartiteGraph& g, std::size_t i);         // f_i
GradedDim frozen_simple(const BipartiteGraph& g, std::size_t i);     // x_i
GradedDim principal_simple(const BipartiteGraph& g, std::size_t i);  // x_i'

/// Only the I1 principal slots change:
/// max(W_{i'} + sum_j a_ij W_j - W_i, 0).
GradedDim sigma_dim(const BipartiteGraph& g, const GradedDim& w);

struct PhiSplit {
  GradedDim reduced;              // W with every KR pair removed
  std::vector<int> kr_multiplicity;  // min(W_i, W_{i'}) per vertex
};
PhiSplit phi_dim(const BipartiteGraph& g, const GradedDim& w);

/// From a representation of the decorated quiver to one of the principally
/// decorated quiver: dualize, then reflect at every I1 vertex.
FpRep sigma_rep(const BipartiteGraph& g, const FpRep& decorated);

/// Full dimension vector for the Grassmannian of sigma W: v on principal
/// vertices, 0 on frozen I0 copies, everything on frozen I1 copies.
DimVector extend_subdimension(const BipartiteGraph& g, const DimVector& sigma_dims,
                              const DimVector& principal_v);

}  // namespace cq
