#include "cq/fp_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cq {

namespace {

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t submod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

void check_same_shape(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.prime() != b.prime())
    throw std::invalid_argument("matrix shape or field mismatch");
}

}  // namespace

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::random(std::size_t rows, std::size_t cols, std::uint32_t p, Rng& rng) {
  FpMatrix m(rows, cols, p);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (auto& x : m.data_) x = dist(rng);
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols,
                             std::uint32_t p) {
  FpMatrix m(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      std::int64_t v = rows[r][c] % static_cast<std::int64_t>(p);
      if (v < 0) v += p;
      m(r, c) = static_cast<std::uint32_t>(v);
    }
  }
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix product shape mismatch");
  FpMatrix out(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out(i, j) = static_cast<std::uint32_t>((out(i, j) + static_cast<std::uint64_t>(a) * o(k, j)) % p_);
    }
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  check_same_shape(*this, o);
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + o.data_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  check_same_shape(*this, o);
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = submod(data_[i], o.data_[i], p_);
  return out;
}

FpMatrix FpMatrix::scaled(std::uint32_t s) const {
  FpMatrix out = *this;
  for (auto& x : out.data_) x = mulmod(x, s % p_, p_);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

FpMatrix FpMatrix::power(unsigned e) const {
  if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
  FpMatrix result = identity(rows_, p_);
  FpMatrix base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

FpMatrix FpMatrix::block(std::size_t r0, std::size_t c0, std::size_t n, std::size_t m) const {
  if (r0 + n > rows_ || c0 + m > cols_) throw std::out_of_range("matrix block out of range");
  FpMatrix out(n, m, p_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void FpMatrix::set_block(std::size_t r0, std::size_t c0, const FpMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("matrix block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

FpMatrix FpMatrix::hstack(const std::vector<FpMatrix>& parts, std::size_t rows, std::uint32_t p) {
  std::size_t cols = 0;
  for (const auto& m : parts) cols += m.cols();
  FpMatrix out(rows, cols, p);
  std::size_t c = 0;
  for (const auto& m : parts) {
    out.set_block(0, c, m);
    c += m.cols();
  }
  return out;
}

FpMatrix FpMatrix::vstack(const std::vector<FpMatrix>& parts, std::size_t cols, std::uint32_t p) {
  std::size_t rows = 0;
  for (const auto& m : parts) rows += m.rows();
  FpMatrix out(rows, cols, p);
  std::size_t r = 0;
  for (const auto& m : parts) {
    out.set_block(r, 0, m);
    r += m.rows();
  }
  return out;
}

bool FpMatrix::is_zero() const {
  for (auto x : data_)
    if (x) return false;
  return true;
}

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::vector<std::size_t> rref(FpMatrix& m) {
  const std::uint32_t p = m.prime();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const std::uint32_t inv = fp_inverse(m(row, col), p);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = mulmod(m(row, j), inv, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const std::uint32_t f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = submod(m(i, j), mulmod(f, m(row, j), p), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const FpMatrix& m) {
  FpMatrix copy = m;
  return rref(copy).size();
}

FpMatrix nullspace(const FpMatrix& m) {
  FpMatrix r = m;
  const auto pivots = rref(r);
  const std::uint32_t p = m.prime();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FpMatrix basis(m.cols(), free_cols.size(), p);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis(pivots[i], k) = r(i, free_cols[k]) == 0 ? 0 : p - r(i, free_cols[k]);
  }
  return basis;
}

FpMatrix left_nullspace(const FpMatrix& m) { return nullspace(m.transpose()).transpose(); }

FpMatrix column_space(const FpMatrix& m) {
  FpMatrix r = m;
  const auto pivots = rref(r);
  FpMatrix out(m.rows(), pivots.size(), m.prime());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, pivots[k]);
  return out;
}

bool is_invertible(const FpMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

FpMatrix left_inverse(const FpMatrix& b) {
  // rref of [B | I] puts a left inverse in the top-right block
  const std::size_t n = b.rows();
  const std::size_t k = b.cols();
  FpMatrix aug(n, k + n, b.prime());
  aug.set_block(0, 0, b);
  aug.set_block(0, k, FpMatrix::identity(n, b.prime()));
  const auto pivots = rref(aug);
  if (pivots.size() < k || (k > 0 && pivots[k - 1] >= k))
    throw std::domain_error("left inverse of a matrix without full column rank");
  return aug.block(0, k, k, n);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace cq
