#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace cq {

using Rng = std::mt19937_64;

/// Dense matrix over F_p, row-major. The prime is carried alongside.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  static FpMatrix identity(std::size_t n, std::uint32_t p);
  static FpMatrix random(std::size_t rows, std::size_t cols, std::uint32_t p, Rng& rng);
  static FpMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols,
                            std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix scaled(std::uint32_t s) const;
  FpMatrix transpose() const;
  FpMatrix power(unsigned e) const;

  /// Rows [r0, r0+n) and columns [c0, c0+m).
  FpMatrix block(std::size_t r0, std::size_t c0, std::size_t n, std::size_t m) const;
  void set_block(std::size_t r0, std::size_t c0, const FpMatrix& b);
  static FpMatrix hstack(const std::vector<FpMatrix>& parts, std::size_t rows, std::uint32_t p);
  static FpMatrix vstack(const std::vector<FpMatrix>& parts, std::size_t cols, std::uint32_t p);

  bool is_zero() const;
  bool operator==(const FpMatrix& o) const = default;

  const std::vector<std::uint32_t>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> data_;
};

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(FpMatrix& m);
std::size_t rank(const FpMatrix& m);
/// Columns form a basis of the kernel (cols x k).
FpMatrix nullspace(const FpMatrix& m);
/// Rows form a basis of the left kernel: K * m = 0.
FpMatrix left_nullspace(const FpMatrix& m);
/// Columns form a basis of the column space.
FpMatrix column_space(const FpMatrix& m);
bool is_invertible(const FpMatrix& m);
/// For full column rank B, some L with L * B = I.
FpMatrix left_inverse(const FpMatrix& b);

bool is_prime(std::uint64_t n);

}  // namespace cq
