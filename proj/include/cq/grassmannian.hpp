#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cq/laurent.hpp"
#include "cq/rep.hpp"

namespace cq {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, BigInt bound)
      : std::runtime_error(what), search_bound(std::move(bound)) {}
  BigInt search_bound;
};

class NonPolynomial : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of k-dimensional subspaces of F_q^m.
BigInt gaussian_binomial(int m, int k, const BigInt& q);

/// Allowed subdimensions per vertex.
using SubdimensionRange = std::vector<std::vector<int>>;

SubdimensionRange full_range(const DimVector& d);
SubdimensionRange single(const DimVector& v);

/// Counts subrepresentations of M for every dimension vector in the range.
/// Subspaces are enumerated at vertices with incoming arrows; sources are
/// closed off with Gaussian binomials.
std::map<DimVector, BigInt> count_all_subreps(const FpRep& m, const SubdimensionRange& range,
                                              const BigInt& budget = BigInt(20000000));
BigInt count_subreps(const FpRep& m, const DimVector& v, const BigInt& budget = BigInt(20000000));

/// Upper bound on the Grassmannian dimension used for interpolation.
int degree_bound(const DimVector& d, const DimVector& v);

/// Polynomial in q with integer coefficients, lowest degree first.
struct CountingPolynomial {
  std::vector<BigInt> coefficients;
  int bound = 0;
  std::vector<std::pair<std::uint32_t, BigInt>> samples;

  BigInt evaluate(const BigInt& q) const;
  BigInt euler_number() const { return evaluate(1); }
  bool nonnegative() const;
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  std::string to_string() const;
  nlohmann::json to_json() const;
};

/// Interpolates exact samples (prime, count) with a polynomial of degree at
/// most `bound`; throws NonPolynomial when no integer polynomial fits.
CountingPolynomial interpolate_counts(const std::vector<std::pair<std::uint32_t, BigInt>>& samples, int bound);

struct CountingOptions {
  std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  int resamples = 2;        // independent generic draws per prime
  int attempts = 48;        // random draws per generic representation
  std::uint64_t seed = 1;
  BigInt budget = 20000000;
};

/// First n primes.
std::vector<std::uint32_t> first_primes(std::size_t n);

/// Counting polynomials of Gr_v(M) for a generic M of dimension d over each
/// prime, for every v in the range. Requires more primes than the degree
/// bound of every v.
std::map<DimVector, CountingPolynomial> counting_polynomials(const Quiver& q, const DimVector& d,
                                                             const SubdimensionRange& range,
                                                             const CountingOptions& opts);
CountingPolynomial counting_polynomial(const Quiver& q, const DimVector& d, const DimVector& v,
                                       const CountingOptions& opts);

/// sum_k a_k t^(2k + shift) for c = sum_k a_k q^k, in the variable "t".
LaurentPoly poincare_polynomial(const CountingPolynomial& c, int shift = 0);

}  // namespace cq
