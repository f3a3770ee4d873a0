#include <doctest.h>

#include "cq/fp_matrix.hpp"

using namespace cq;

TEST_SUITE("fp_matrix") {
  TEST_CASE("inverse modulo p") {
    for (std::uint32_t p : {2u, 3u, 101u, 65521u})
      for (std::uint32_t a = 1; a < std::min(p, 200u); ++a) CHECK((static_cast<std::uint64_t>(a) * fp_inverse(a, p)) % p == 1);
  }

  TEST_CASE("rank and rref") {
    FpMatrix m = FpMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 3, 7);
    CHECK(rank(m) == 2);
    const auto pivots = rref(m);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 0) == 0);
    CHECK(m(2, 2) == 0);
    CHECK(rank(FpMatrix(0, 4, 5)) == 0);
  }

  TEST_CASE("negative entries reduce") {
    const FpMatrix m = FpMatrix::from_rows({{-1}}, 1, 5);
    CHECK(m(0, 0) == 4);
  }

  TEST_CASE("kernel, image and inverses on random matrices") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      const std::uint32_t p = trial % 2 ? 3 : 11;
      const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
      const FpMatrix m = FpMatrix::random(r, c, p, rng);
      const FpMatrix k = nullspace(m);
      CHECK(k.cols() == c - rank(m));
      CHECK((m * k).is_zero());
      const FpMatrix l = left_nullspace(m);
      CHECK(l.rows() == r - rank(m));
      CHECK((l * m).is_zero());
      CHECK(column_space(m).cols() == rank(m));
      if (rank(m) == c) {
        const FpMatrix li = left_inverse(m);
        CHECK(li * m == FpMatrix::identity(c, p));
      }
    }
  }

  TEST_CASE("identity, power and stacking") {
    const FpMatrix n = FpMatrix::from_rows({{0, 1}, {0, 0}}, 2, 13);
    CHECK(n.power(2).is_zero());
    CHECK(n.power(0) == FpMatrix::identity(2, 13));
    CHECK(is_invertible(FpMatrix::identity(3, 2)));
    CHECK_FALSE(is_invertible(n));
    const FpMatrix h = FpMatrix::hstack({n, FpMatrix::identity(2, 13)}, 2, 13);
    CHECK(h.cols() == 4);
    CHECK(h.block(0, 2, 2, 2) == FpMatrix::identity(2, 13));
    const FpMatrix v = FpMatrix::vstack({n, n}, 2, 13);
    CHECK(v.rows() == 4);
    CHECK(n.transpose()(1, 0) == 1);
    CHECK(n.scaled(3)(0, 1) == 3);
  }

  TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
  }
}
