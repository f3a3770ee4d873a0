#include "cq/quiver.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace cq {

namespace {

void check_vertex_ids(const std::vector<Vertex>& vs) {
  std::set<std::string> seen;
  for (const auto& v : vs) {
    if (v.id.empty()) throw QuiverError("empty vertex id");
    if (!seen.insert(v.id).second) throw QuiverError("duplicate vertex id '" + v.id + "'");
    if (v.parity && *v.parity != 0 && *v.parity != 1)
      throw QuiverError("parity of '" + v.id + "' must be 0 or 1");
  }
}

}  // namespace

Quiver::Quiver(std::vector<Vertex> vertices,
               const std::vector<std::pair<std::string, std::string>>& arrows)
    : vertices_(std::move(vertices)) {
  check_vertex_ids(vertices_);
  for (const auto& [from, to] : arrows) {
    auto a = find(from);
    auto b = find(to);
    if (!a) throw QuiverError("arrow references unknown vertex '" + from + "'");
    if (!b) throw QuiverError("arrow references unknown vertex '" + to + "'");
    ++arrows_[{*a, *b}];
  }
  validate();
}

void Quiver::validate() const {
  for (const auto& [key, count] : arrows_) {
    const auto [a, b] = key;
    if (count <= 0) throw QuiverError("nonpositive arrow multiplicity");
    if (a == b) throw QuiverError("loop at vertex '" + vertices_[a].id + "'");
    if (arrows_.count({b, a}))
      throw QuiverError("2-cycle between '" + vertices_[a].id + "' and '" + vertices_[b].id + "'");
    if (vertices_[a].frozen && vertices_[b].frozen)
      throw QuiverError("arrow between frozen vertices '" + vertices_[a].id + "' and '" +
                        vertices_[b].id + "'");
  }
}

std::optional<std::size_t> Quiver::find(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

std::size_t Quiver::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) throw QuiverError("unknown vertex '" + std::string(id) + "'");
  return *i;
}

int Quiver::arrows_between(std::size_t from, std::size_t to) const {
  auto it = arrows_.find({from, to});
  return it == arrows_.end() ? 0 : it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> Quiver::arrow_list() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [key, count] : arrows_)
    for (int c = 0; c < count; ++c) out.push_back(key);
  return out;
}

std::size_t Quiver::arrow_total() const {
  std::size_t n = 0;
  for (const auto& [key, count] : arrows_) n += static_cast<std::size_t>(count);
  return n;
}

std::vector<std::size_t> Quiver::principal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!vertices_[i].frozen) out.push_back(i);
  return out;
}

std::vector<std::size_t> Quiver::frozen_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].frozen) out.push_back(i);
  return out;
}

std::vector<std::size_t> Quiver::topological_order() const {
  std::vector<int> indegree(vertices_.size(), 0);
  for (const auto& [key, count] : arrows_) indegree[key.second] += 1;
  std::queue<std::size_t> ready;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (indegree[i] == 0) ready.push(i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    auto v = ready.front();
    ready.pop();
    order.push_back(v);
    for (const auto& [key, count] : arrows_) {
      if (key.first != v) continue;
      if (--indegree[key.second] == 0) ready.push(key.second);
    }
  }
  if (order.size() != vertices_.size()) throw QuiverError("quiver has an oriented cycle");
  return order;
}

bool Quiver::is_acyclic() const {
  try {
    topological_order();
    return true;
  } catch (const QuiverError&) {
    return false;
  }
}

bool Quiver::is_sink(std::size_t i) const {
  return std::none_of(arrows_.begin(), arrows_.end(),
                      [i](const auto& kv) { return kv.first.first == i; });
}

bool Quiver::is_source(std::size_t i) const {
  return std::none_of(arrows_.begin(), arrows_.end(),
                      [i](const auto& kv) { return kv.first.second == i; });
}

Quiver Quiver::opposite() const {
  Quiver q;
  q.vertices_ = vertices_;
  for (const auto& [key, count] : arrows_) q.arrows_[{key.second, key.first}] = count;
  return q;
}

Quiver Quiver::reflected_at(std::size_t i) const {
  Quiver q;
  q.vertices_ = vertices_;
  for (const auto& [key, count] : arrows_) {
    if (key.first == i || key.second == i)
      q.arrows_[{key.second, key.first}] = count;
    else
      q.arrows_[key] = count;
  }
  return q;
}

nlohmann::json Quiver::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : vertices_) {
    nlohmann::json jv = {{"id", v.id}, {"frozen", v.frozen}};
    jv["parity"] = v.parity ? nlohmann::json(*v.parity) : nlohmann::json(nullptr);
    vs.push_back(jv);
  }
  nlohmann::json as = nlohmann::json::array();
  for (auto [a, b] : arrow_list()) as.push_back({vertices_[a].id, vertices_[b].id});
  return {{"vertices", vs}, {"arrows", as}};
}

Quiver Quiver::from_json(const nlohmann::json& j) {
  try {
    std::vector<Vertex> vs;
    for (const auto& jv : j.at("vertices")) {
      Vertex v;
      v.id = jv.at("id").get<std::string>();
      v.frozen = jv.value("frozen", false);
      if (jv.contains("parity") && !jv["parity"].is_null()) v.parity = jv["parity"].get<int>();
      vs.push_back(v);
    }
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& ja : j.at("arrows")) {
      if (!ja.is_array() || ja.size() != 2) throw QuiverError("arrow must be a [from, to] pair");
      arrows.emplace_back(ja[0].get<std::string>(), ja[1].get<std::string>());
    }
    return Quiver(std::move(vs), arrows);
  } catch (const nlohmann::json::exception& e) {
    throw QuiverError(std::string("malformed quiver JSON: ") + e.what());
  }
}

bool Quiver::operator==(const Quiver& other) const {
  return vertices_ == other.vertices_ && arrows_ == other.arrows_;
}

// ---------------------------------------------------------------------------

ExchangeMatrix::ExchangeMatrix(std::vector<Vertex> rows, std::vector<std::string> columns,
                               std::vector<int> entries)
    : rows_(std::move(rows)), columns_(std::move(columns)), entries_(std::move(entries)) {
  check_vertex_ids(rows_);
  if (entries_.size() != rows_.size() * columns_.size())
    throw QuiverError("exchange matrix has wrong number of entries");
  for (const auto& c : columns_) {
    auto it = std::find_if(rows_.begin(), rows_.end(), [&](const Vertex& v) { return v.id == c; });
    if (it == rows_.end()) throw QuiverError("column '" + c + "' has no row");
    if (it->frozen) throw QuiverError("column '" + c + "' is a frozen vertex");
    column_rows_.push_back(static_cast<std::size_t>(it - rows_.begin()));
  }
  for (const auto& r : rows_)
    if (!r.frozen && std::find(columns_.begin(), columns_.end(), r.id) == columns_.end())
      throw QuiverError("principal row '" + r.id + "' has no column");
  for (std::size_t a = 0; a < columns_.size(); ++a)
    for (std::size_t b = 0; b < columns_.size(); ++b)
      if (at(column_rows_[a], b) != -at(column_rows_[b], a))
        throw QuiverError("principal part is not skew-symmetric");
}

std::size_t ExchangeMatrix::row_of(std::string_view id) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].id == id) return i;
  throw QuiverError("unknown vertex '" + std::string(id) + "'");
}

std::size_t ExchangeMatrix::column_of(std::string_view id) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i] == id) return i;
  for (const auto& r : rows_)
    if (r.id == id) throw QuiverError("vertex '" + std::string(id) + "' is frozen");
  throw QuiverError("unknown vertex '" + std::string(id) + "'");
}

bool ExchangeMatrix::is_column(std::string_view id) const {
  return std::find(columns_.begin(), columns_.end(), id) != columns_.end();
}

int ExchangeMatrix::at(std::string_view row_id, std::string_view col_id) const {
  return at(row_of(row_id), column_of(col_id));
}

nlohmann::json ExchangeMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json parity = nlohmann::json::array();
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    rows.push_back(rows_[i].id);
    parity.push_back(rows_[i].parity ? nlohmann::json(*rows_[i].parity) : nlohmann::json(nullptr));
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < columns_.size(); ++j) row.push_back(at(i, j));
    entries.push_back(row);
  }
  return {{"rows", rows}, {"columns", columns_}, {"parity", parity}, {"entries", entries}};
}

ExchangeMatrix ExchangeMatrix::from_json(const nlohmann::json& j) {
  try {
    auto row_ids = j.at("rows").get<std::vector<std::string>>();
    auto cols = j.at("columns").get<std::vector<std::string>>();
    std::vector<Vertex> rows;
    for (std::size_t i = 0; i < row_ids.size(); ++i) {
      Vertex v{row_ids[i], std::find(cols.begin(), cols.end(), row_ids[i]) == cols.end(), {}};
      if (j.contains("parity") && i < j["parity"].size() && !j["parity"][i].is_null())
        v.parity = j["parity"][i].get<int>();
      rows.push_back(v);
    }
    std::vector<int> entries;
    const auto& je = j.at("entries");
    if (je.size() != rows.size()) throw QuiverError("entries row count mismatch");
    for (const auto& row : je) {
      if (row.size() != cols.size()) throw QuiverError("entries column count mismatch");
      for (const auto& x : row) entries.push_back(x.get<int>());
    }
    return ExchangeMatrix(std::move(rows), std::move(cols), std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw QuiverError(std::string("malformed matrix JSON: ") + e.what());
  }
}

ExchangeMatrix to_matrix(const Quiver& q) {
  std::vector<std::string> cols;
  std::vector<std::size_t> col_idx = q.principal_indices();
  for (auto c : col_idx) cols.push_back(q.vertex(c).id);
  std::vector<int> entries(q.size() * cols.size(), 0);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t c = 0; c < col_idx.size(); ++c)
      entries[i * cols.size() + c] = q.arrows_between(col_idx[c], i) - q.arrows_between(i, col_idx[c]);
  return ExchangeMatrix(q.vertices(), std::move(cols), std::move(entries));
}

Quiver from_matrix(const ExchangeMatrix& b) {
  std::vector<std::pair<std::string, std::string>> arrows;
  for (std::size_t i = 0; i < b.row_count(); ++i) {
    for (std::size_t c = 0; c < b.column_count(); ++c) {
      const int v = b.at(i, c);
      const std::string& col_id = b.columns()[c];
      // principal pairs appear twice; take each once from the positive side
      if (v > 0)
        for (int k = 0; k < v; ++k) arrows.emplace_back(col_id, b.rows()[i].id);
      else if (v < 0 && b.rows()[i].frozen)
        for (int k = 0; k < -v; ++k) arrows.emplace_back(b.rows()[i].id, col_id);
    }
  }
  return Quiver(b.rows(), arrows);
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::string_view k) {
  const std::size_t kc = b.column_of(k);
  const std::size_t kr = b.row_of_column(kc);
  ExchangeMatrix out = b;
  for (std::size_t i = 0; i < b.row_count(); ++i) {
    for (std::size_t j = 0; j < b.column_count(); ++j) {
      if (i == kr || j == kc) {
        out.at(i, j) = -b.at(i, j);
        continue;
      }
      const int bik = b.at(i, kc);
      const int bkj = b.at(kr, j);
      const int sign = (bik > 0) - (bik < 0);
      out.at(i, j) = b.at(i, j) + sign * std::max(bik * bkj, 0);
    }
  }
  return out;
}

}  // namespace cq
