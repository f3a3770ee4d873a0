#include "cq/cluster.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cq/graph.hpp"

namespace cq {

namespace {

// The name of a seed variable that is a bare variable.
std::string variable_name(const LaurentPoly& p) {
  if (!p.is_monomial() || p.terms().begin()->second != 1 ||
      p.terms().begin()->first.entries().size() != 1 ||
      p.terms().begin()->first.entries()[0].second != 1)
    throw std::invalid_argument("seed variable is not a bare variable: " + p.to_string());
  return p.terms().begin()->first.entries()[0].first;
}

}  // namespace

const LaurentPoly& Seed::variable(std::string_view vertex) const {
  auto it = variables.find(std::string(vertex));
  if (it == variables.end()) throw QuiverError("unknown vertex '" + std::string(vertex) + "'");
  return it->second;
}

std::vector<std::string> Seed::cluster_key() const {
  std::vector<std::string> key;
  for (const auto& c : matrix.columns()) key.push_back(variables.at(c).to_string());
  std::sort(key.begin(), key.end());
  return key;
}

nlohmann::json Seed::to_json() const {
  nlohmann::json vars = nlohmann::json::object();
  for (const auto& row : matrix.rows()) vars[row.id] = variables.at(row.id).to_string();
  return {{"matrix", matrix.to_json()}, {"variables", vars}};
}

Seed Seed::from_json(const nlohmann::json& j) {
  Seed s;
  s.matrix = ExchangeMatrix::from_json(j.at("matrix"));
  for (const auto& row : s.matrix.rows())
    s.variables[row.id] = LaurentPoly::parse(j.at("variables").at(row.id).get<std::string>());
  return s;
}

std::string default_variable_name(const Vertex& v) {
  if (!v.frozen) return "x" + v.id;
  std::string base = v.id;
  if (!base.empty() && base.back() == '\'') base.pop_back();
  return "f" + base;
}

Seed initial_seed(const ExchangeMatrix& b) {
  Seed s;
  s.matrix = b;
  for (const auto& row : b.rows())
    s.variables[row.id] = LaurentPoly::variable(default_variable_name(row));
  return s;
}

Seed initial_seed(const Quiver& q) { return initial_seed(to_matrix(q)); }

Seed mutate_seed(const Seed& s, std::string_view k) {
  const std::size_t kc = s.matrix.column_of(k);
  LaurentPoly positive(1);
  LaurentPoly negative(1);
  for (std::size_t i = 0; i < s.matrix.row_count(); ++i) {
    const int b = s.matrix.at(i, kc);
    if (b == 0) continue;
    const LaurentPoly& x = s.variables.at(s.matrix.rows()[i].id);
    if (b > 0)
      positive *= x.pow(b);
    else
      negative *= x.pow(-b);
  }
  Seed out;
  out.matrix = mutate_matrix(s.matrix, k);
  out.variables = s.variables;
  out.variables[std::string(k)] = exact_div(positive + negative, s.variables.at(std::string(k)));
  return out;
}

Seed mutate_along(const Seed& s, const MutationPath& path) {
  Seed cur = s;
  for (const auto& k : path) cur = mutate_seed(cur, k);
  return cur;
}

ClusterEnumeration enumerate_clusters(const Seed& start, std::size_t max_seeds) {
  ClusterEnumeration out;
  std::map<std::vector<std::string>, std::size_t> index;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::deque<std::pair<Seed, std::size_t>> queue;
  bool truncated = false;

  for (const auto& row : start.matrix.rows())
    if (row.frozen) out.frozen_variables.push_back(start.variables.at(row.id).to_string());

  auto record = [&](const Seed& s, MutationPath path) {
    const std::size_t id = out.clusters.size();
    auto key = s.cluster_key();
    index.emplace(key, id);
    out.clusters.push_back(std::move(key));
    for (const auto& c : s.matrix.columns()) {
      auto text = s.variables.at(c).to_string();
      if (!out.variables.count(text)) out.variables[text] = {path, c};
    }
    out.cluster_paths.push_back(std::move(path));
    queue.emplace_back(s, id);
  };

  if (max_seeds == 0) return out;
  record(start, {});
  while (!queue.empty()) {
    auto [seed, id] = std::move(queue.front());
    queue.pop_front();
    for (const auto& k : seed.matrix.columns()) {
      Seed next = mutate_seed(seed, k);
      auto it = index.find(next.cluster_key());
      std::size_t other;
      if (it != index.end()) {
        other = it->second;
      } else if (out.clusters.size() >= max_seeds) {
        truncated = true;
        continue;
      } else {
        other = out.clusters.size();
        MutationPath path = out.cluster_paths[id];
        path.push_back(k);
        record(next, std::move(path));
      }
      edges.insert({std::min(id, other), std::max(id, other)});
    }
  }
  out.edges.assign(edges.begin(), edges.end());
  out.closed = !truncated;
  return out;
}

Seed principal_seed(const ExchangeMatrix& b) {
  const std::size_t n = b.column_count();
  std::vector<Vertex> rows;
  for (std::size_t c = 0; c < n; ++c) rows.push_back(b.rows()[b.row_of_column(c)]);
  for (std::size_t c = 0; c < n; ++c) rows.push_back({frozen_id(b.columns()[c]), true, std::nullopt});
  std::vector<int> entries(2 * n * n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) entries[r * n + c] = b.at(b.row_of_column(r), c);
  for (std::size_t c = 0; c < n; ++c) entries[(n + c) * n + c] = 1;

  Seed s;
  s.matrix = ExchangeMatrix(std::move(rows), b.columns(), std::move(entries));
  for (std::size_t c = 0; c < n; ++c) {
    s.variables[b.columns()[c]] = LaurentPoly::variable("u" + b.columns()[c]);
    s.variables[frozen_id(b.columns()[c])] = LaurentPoly::variable("f" + b.columns()[c]);
  }
  return s;
}

LaurentPoly f_polynomial(const Seed& principal_initial, const LaurentPoly& variable) {
  std::map<std::string, LaurentPoly> ones;
  for (const auto& c : principal_initial.matrix.columns())
    ones[variable_name(principal_initial.variables.at(c))] = LaurentPoly(1);
  return substitute(variable, ones);
}

std::vector<int> g_vector(const Seed& principal_initial, const LaurentPoly& variable) {
  const auto& b = principal_initial.matrix;
  const std::size_t n = b.column_count();
  std::map<std::string, std::vector<int>> degree;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<int> e(n, 0);
    e[c] = 1;
    degree[variable_name(principal_initial.variables.at(b.columns()[c]))] = e;
    std::vector<int> d(n, 0);
    for (std::size_t r = 0; r < n; ++r) d[r] = -b.at(b.row_of_column(r), c);
    degree[variable_name(principal_initial.variables.at(frozen_id(b.columns()[c])))] = d;
  }
  if (variable.is_zero()) throw std::domain_error("g-vector of zero");
  std::vector<int> result;
  bool first = true;
  for (const auto& [m, coeff] : variable.terms()) {
    std::vector<int> d(n, 0);
    for (const auto& [name, e] : m.entries()) {
      auto it = degree.find(name);
      if (it == degree.end()) throw std::domain_error("variable " + name + " has no degree");
      for (std::size_t i = 0; i < n; ++i) d[i] += e * it->second[i];
    }
    if (first)
      result = d;
    else if (d != result)
      throw std::domain_error("not homogeneous: " + variable.to_string());
    first = false;
  }
  return result;
}

LaurentPoly reconstruct_variable(const LaurentPoly& f_poly, const std::vector<int>& g,
                                 const Seed& target_initial, const Seed& principal_initial) {
  const auto& bt = target_initial.matrix;
  const auto& cols = principal_initial.matrix.columns();
  if (bt.columns() != cols) throw std::invalid_argument("target and principal seeds disagree on columns");
  if (g.size() != cols.size()) throw std::invalid_argument("g-vector has wrong length");

  std::map<std::string, LaurentPoly> hat_y;
  std::map<std::string, TropicalMonomial> trop_y;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::map<std::string, int> frozen_part;
    LaurentPoly yhat(1);
    for (std::size_t i = 0; i < bt.row_count(); ++i) {
      const int b = bt.at(i, j);
      if (b == 0) continue;
      const std::string x = variable_name(target_initial.variables.at(bt.rows()[i].id));
      yhat *= LaurentPoly::variable(x, b);
      if (bt.rows()[i].frozen) frozen_part[x] += b;
    }
    const std::string f = variable_name(principal_initial.variables.at(frozen_id(cols[j])));
    hat_y[f] = yhat;
    trop_y[f] = TropicalMonomial(frozen_part);
  }

  Monomial xg;
  for (std::size_t j = 0; j < cols.size(); ++j)
    xg = xg * Monomial::variable(variable_name(target_initial.variables.at(cols[j])), g[j]);

  const LaurentPoly numerator = substitute(f_poly, hat_y);
  const Monomial denominator = tropical_eval(f_poly, trop_y).to_monomial();
  return numerator * LaurentPoly::term(xg * denominator.inverse());
}

}  // namespace cq
