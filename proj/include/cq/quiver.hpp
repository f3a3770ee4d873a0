#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cq {

class QuiverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Vertex {
  std::string id;
  bool frozen = false;
  std::optional<int> parity;  // 0 or 1 on bipartite graphs

  bool operator==(const Vertex&) const = default;
};

/// Finite quiver with integer arrow multiplicities. Loops and 2-cycles are
/// rejected on construction, as are arrows between two frozen vertices.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<Vertex> vertices,
         const std::vector<std::pair<std::string, std::string>>& arrows);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }

  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;  // throws QuiverError

  int arrows_between(std::size_t from, std::size_t to) const;
  /// (source, target) -> multiplicity, nonzero entries only.
  const std::map<std::pair<std::size_t, std::size_t>, int>& arrow_counts() const { return arrows_; }
  /// Arrows expanded by multiplicity, ordered by (source, target).
  std::vector<std::pair<std::size_t, std::size_t>> arrow_list() const;
  std::size_t arrow_total() const;

  std::vector<std::size_t> principal_indices() const;
  std::vector<std::size_t> frozen_indices() const;

  bool is_acyclic() const;
  /// Sources first. Throws QuiverError on a directed cycle.
  std::vector<std::size_t> topological_order() const;
  bool is_sink(std::size_t i) const;
  bool is_source(std::size_t i) const;

  /// Same vertices, every arrow reversed.
  Quiver opposite() const;
  /// Reverses the arrows incident to vertex i.
  Quiver reflected_at(std::size_t i) const;

  nlohmann::json to_json() const;
  static Quiver from_json(const nlohmann::json& j);

  bool operator==(const Quiver& other) const;

 private:
  void validate() const;

  std::vector<Vertex> vertices_;
  std::map<std::pair<std::size_t, std::size_t>, int> arrows_;
};

/// Extended skew-symmetric exchange matrix. Rows are all vertices, columns
/// the principal ones; entry (i, j) is #(j -> i) - #(i -> j).
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  ExchangeMatrix(std::vector<Vertex> rows, std::vector<std::string> columns,
                 std::vector<int> entries);

  const std::vector<Vertex>& rows() const { return rows_; }
  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return columns_.size(); }

  int at(std::size_t row, std::size_t col) const { return entries_[row * columns_.size() + col]; }
  int& at(std::size_t row, std::size_t col) { return entries_[row * columns_.size() + col]; }
  int at(std::string_view row_id, std::string_view col_id) const;

  std::size_t row_of(std::string_view id) const;
  std::size_t column_of(std::string_view id) const;
  /// Row index of each column vertex.
  std::size_t row_of_column(std::size_t col) const { return column_rows_[col]; }
  bool is_column(std::string_view id) const;

  nlohmann::json to_json() const;
  static ExchangeMatrix from_json(const nlohmann::json& j);

  bool operator==(const ExchangeMatrix&) const = default;

 private:
  std::vector<Vertex> rows_;
  std::vector<std::string> columns_;
  std::vector<std::size_t> column_rows_;
  std::vector<int> entries_;
};

ExchangeMatrix to_matrix(const Quiver& q);
Quiver from_matrix(const ExchangeMatrix& b);

/// Matrix mutation at a principal vertex.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::string_view k);

}  // namespace cq
