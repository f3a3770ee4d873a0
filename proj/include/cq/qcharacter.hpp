#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cq/graded.hpp"
#include "cq/grassmannian.hpp"
#include "cq/laurent.hpp"

namespace cq {

/// "Y[i,n]"
std::string y_name(const std::string& vertex, int n);

/// Truncated q,t-character: a Laurent polynomial in the Y[i,n] and t.
struct QCharacter {
  LaurentPoly poly;

  QCharacter at_t1() const;
  /// "Y[1,0]*Y[1,2] + ..." in canonical order.
  std::string to_string() const { return poly.to_string(); }
  /// Y_{i,q^n} notation.
  std::string pretty() const;
  nlohmann::json to_json() const;

  QCharacter operator*(const QCharacter& o) const { return {poly * o.poly}; }
  QCharacter operator+(const QCharacter& o) const { return {poly + o.poly}; }
  bool operator==(const QCharacter&) const = default;
};

LaurentPoly e_w(const GradedDim& w);
/// V_{i,a} = Y_{i,a-1}^-1 Y_{i,a+1}^-1 prod_j Y_{j,a}^{a_ij}
LaurentPoly v_monomial(const BipartiteGraph& g, std::size_t i, int a);
LaurentPoly e_v(const BipartiteGraph& g, const GradedDim& v);

/// Place a principal subdimension at degrees parity+1.
GradedDim v_grading(const BipartiteGraph& g, const DimVector& v);

/// <V, (q + q^-1) W - q^-1 C_q V>
int dim_m_bullet(const BipartiteGraph& g, const GradedDim& v, const GradedDim& w);
bool is_l_dominant(const BipartiteGraph& g, const GradedDim& v, const GradedDim& w);

/// -gamma_i - sum_j c_ij max(0, gamma_j) on I1, gamma_i on I0.
std::vector<int> tau_minus(const BipartiteGraph& g, const std::vector<int>& gamma);

enum class CharacterMode {
  t_equals_1,    // Euler numbers
  normalized_t,  // Poincare polynomials shifted by t^(-dim M(V, W))
  raw_t,         // unshifted Poincare polynomials
};

struct CharacterOptions {
  std::uint64_t seed = 7;
  int resamples = 2;
  int attempts = 48;
  std::size_t min_primes = 3;
  BigInt budget = 20000000;
};

struct GrassmannianTerm {
  DimVector v;  // principal subdimension
  CountingPolynomial count;
};

/// Counting polynomials of every Gr_V(sigma W) for a generic sigma W.
struct GrassmannianData {
  GradedDim w;
  GradedDim sigma;
  std::vector<GrassmannianTerm> terms;
};

GrassmannianData grassmannian_data(const BipartiteGraph& g, const GradedDim& w,
                                   const CharacterOptions& opts = {});
QCharacter character_from_data(const BipartiteGraph& g, const GrassmannianData& data, CharacterMode mode);
QCharacter truncated_character(const BipartiteGraph& g, const GradedDim& w,
                               CharacterMode mode = CharacterMode::t_equals_1,
                               const CharacterOptions& opts = {});

/// sum_V e(Gr_V(sigma W)) prod_i f<i>^{v_i}
LaurentPoly euler_generating_function(const BipartiteGraph& g, const GrassmannianData& data);

/// chi(W) against chi(phi W) times the KR characters for the removed pairs.
struct KrCheck {
  bool holds = false;
  QCharacter lhs;
  QCharacter rhs;
};
KrCheck verify_kr_factorization(const BipartiteGraph& g, const GradedDim& w, CharacterMode mode,
                                const CharacterOptions& opts = {});

struct TensorFactor {
  enum class Kind { kr, frozen_simple, canonical };
  Kind kind;
  GradedDim w;
};

struct TensorFactorization {
  std::vector<TensorFactor> factors;
  bool condition_c = true;  // every canonical factor is a real Schur root
};

/// KR pairs, then frozen simples of phi W, then the canonical decomposition
/// of the principal part of phi W.
TensorFactorization tensor_factorize(const BipartiteGraph& g, const GradedDim& w,
                                     std::uint64_t seed = 11, std::uint32_t p = 101, int samples = 5);
bool condition_c(const BipartiteGraph& g, const GradedDim& w, std::uint64_t seed = 11);

struct FactorizationCheck {
  bool holds = false;
  TensorFactorization factorization;
  QCharacter lhs;
  QCharacter rhs;
};
/// Product of factor characters against chi(W), at t = 1.
FactorizationCheck verify_tensor_factorization(const BipartiteGraph& g, const GradedDim& w,
                                               const CharacterOptions& opts = {});

}  // namespace cq
