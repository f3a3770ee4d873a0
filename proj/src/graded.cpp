#include "cq/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace cq {

int GradedDim::at(const std::string& vertex, int n) const {
  auto it = entries_.find({vertex, n});
  return it == entries_.end() ? 0 : it->second;
}

void GradedDim::set(const std::string& vertex, int n, int value) {
  if (value < 0) throw std::invalid_argument("negative graded dimension at " + vertex);
  if (value == 0)
    entries_.erase({vertex, n});
  else
    entries_[{vertex, n}] = value;
}

GradedDim GradedDim::operator+(const GradedDim& o) const {
  GradedDim out = *this;
  for (const auto& [k, v] : o.entries_) out.add(k.first, k.second, v);
  return out;
}

nlohmann::json GradedDim::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : entries_) j[k.first + ":" + std::to_string(k.second)] = v;
  return j;
}

GradedDim GradedDim::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("graded dimension must be an object");
  GradedDim w;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const auto colon = key.rfind(':');
    if (colon == std::string::npos || colon == 0)
      throw std::invalid_argument("graded dimension key must look like i:n, got '" + key + "'");
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(key.substr(colon + 1), &used);
      if (used != key.size() - colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad degree in key '" + key + "'");
    }
    w.add(key.substr(0, colon), n, it.value().get<int>());
  }
  return w;
}

std::string GradedDim::to_string() const { return to_json().dump(); }

int principal_slot(const BipartiteGraph& g, std::size_t i) { return 3 * g.parity(i); }
int frozen_slot(const BipartiteGraph& g, std::size_t i) { return 2 - g.parity(i); }
int middle_slot(const BipartiteGraph& g, std::size_t i) { return g.parity(i) + 1; }

void check_two_slot(const BipartiteGraph& g, const GradedDim& w) {
  for (const auto& [key, value] : w.entries()) {
    const auto i = g.index_of(key.first);
    if (key.second != principal_slot(g, i) && key.second != frozen_slot(g, i))
      throw std::invalid_argument("graded dimension has support at " + key.first + ":" +
                                  std::to_string(key.second) + " outside the two allowed degrees");
  }
}

DimVector to_decorated_dims(const BipartiteGraph& g, const GradedDim& w) {
  check_two_slot(g, w);
  const std::size_t n = g.size();
  DimVector d(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = w.at(g.id(i), principal_slot(g, i));
    d[n + i] = w.at(g.id(i), frozen_slot(g, i));
  }
  return d;
}

GradedDim from_decorated_dims(const BipartiteGraph& g, const DimVector& d) {
  const std::size_t n = g.size();
  if (d.size() != 2 * n) throw std::invalid_argument("decorated dimension vector has wrong length");
  GradedDim w;
  for (std::size_t i = 0; i < n; ++i) {
    w.set(g.id(i), principal_slot(g, i), d[i]);
    w.set(g.id(i), frozen_slot(g, i), d[n + i]);
  }
  return w;
}

DimVector principal_dims(const BipartiteGraph& g, const GradedDim& w) {
  DimVector d(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) d[i] = w.at(g.id(i), principal_slot(g, i));
  return d;
}

GradedDim from_principal_dims(const BipartiteGraph& g, const DimVector& d) {
  if (d.size() != g.size()) throw std::invalid_argument("principal dimension vector has wrong length");
  GradedDim w;
  for (std::size_t i = 0; i < g.size(); ++i) w.set(g.id(i), principal_slot(g, i), d[i]);
  return w;
}

bool is_principal(const BipartiteGraph& g, const GradedDim& w) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (w.at(g.id(i), frozen_slot(g, i)) != 0) return false;
  return true;
}

GradedDim kr_module(const BipartiteGraph& g, std::size_t i) {
  GradedDim w;
  w.set(g.id(i), principal_slot(g, i), 1);
  w.set(g.id(i), frozen_slot(g, i), 1);
  return w;
}

GradedDim frozen_simple(const BipartiteGraph& g, std::size_t i) {
  GradedDim w;
  w.set(g.id(i), frozen_slot(g, i), 1);
  return w;
}

GradedDim principal_simple(const BipartiteGraph& g, std::size_t i) {
  GradedDim w;
  w.set(g.id(i), principal_slot(g, i), 1);
  return w;
}

GradedDim sigma_dim(const BipartiteGraph& g, const GradedDim& w) {
  check_two_slot(g, w);
  GradedDim out = w;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.parity(i) != 1) continue;
    int source = w.at(g.id(i), frozen_slot(g, i));
    for (std::size_t j = 0; j < g.size(); ++j)
      source += g.adjacency(i, j) * w.at(g.id(j), principal_slot(g, j));
    out.set(g.id(i), principal_slot(g, i), std::max(source - w.at(g.id(i), principal_slot(g, i)), 0));
  }
  return out;
}

PhiSplit phi_dim(const BipartiteGraph& g, const GradedDim& w) {
  check_two_slot(g, w);
  PhiSplit out;
  out.kr_multiplicity.assign(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const int a = w.at(g.id(i), principal_slot(g, i));
    const int b = w.at(g.id(i), frozen_slot(g, i));
    out.kr_multiplicity[i] = std::min(a, b);
    out.reduced.set(g.id(i), principal_slot(g, i), std::max(a - b, 0));
    out.reduced.set(g.id(i), frozen_slot(g, i), std::max(b - a, 0));
  }
  return out;
}

FpRep sigma_rep(const BipartiteGraph& g, const FpRep& decorated) {
  if (!(decorated.quiver() == build_decorated(g)))
    throw RepError("sigma_rep expects a representation of the decorated quiver");
  FpRep m = dual(decorated);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.parity(i) == 1) m = reflect(m, i);
  return m;
}

DimVector extend_subdimension(const BipartiteGraph& g, const DimVector& sigma_dims,
                              const DimVector& principal_v) {
  const std::size_t n = g.size();
  DimVector v(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = principal_v.at(i);
    v[n + i] = g.parity(i) == 1 ? sigma_dims.at(n + i) : 0;
  }
  return v;
}

}  // namespace cq
