#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cq/fp_matrix.hpp"
#include "cq/quiver.hpp"

namespace cq {

/// Dimension vector indexed by quiver vertex position.
using DimVector = std::vector<int>;

class RepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Representation of an acyclic quiver over F_p. One matrix per expanded
/// arrow (see Quiver::arrow_list), of shape dim(target) x dim(source).
class FpRep {
 public:
  FpRep() = default;
  FpRep(Quiver q, std::uint32_t p, DimVector dims, std::vector<FpMatrix> maps);

  const Quiver& quiver() const { return quiver_; }
  std::uint32_t prime() const { return p_; }
  const DimVector& dims() const { return dims_; }
  int dim(std::size_t v) const { return dims_[v]; }
  int total_dim() const;
  const std::vector<std::pair<std::size_t, std::size_t>>& arrows() const { return arrows_; }
  const FpMatrix& map(std::size_t arrow) const { return maps_.at(arrow); }
  const std::vector<FpMatrix>& maps() const { return maps_; }

  nlohmann::json to_json() const;
  static FpRep from_json(const nlohmann::json& j);

 private:
  Quiver quiver_;
  std::uint32_t p_ = 2;
  DimVector dims_;
  std::vector<std::pair<std::size_t, std::size_t>> arrows_;
  std::vector<FpMatrix> maps_;
};

/// Per-vertex linear maps between two representations.
using RepMorphism = std::vector<FpMatrix>;

FpRep random_rep(const Quiver& q, const DimVector& d, std::uint32_t p, Rng& rng);
FpRep zero_rep(const Quiver& q, std::uint32_t p);
FpRep direct_sum(const FpRep& a, const FpRep& b);

/// sum d_i e_i - sum over arrows d_source e_target.
int euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

/// Basis of Hom(M, N).
std::vector<RepMorphism> hom_basis(const FpRep& m, const FpRep& n);
int hom_dim(const FpRep& m, const FpRep& n);
/// Cokernel of the standard map sum_i Hom(M_i, N_i) -> sum_h Hom(M_s(h), N_t(h)).
int ext1_dim(const FpRep& m, const FpRep& n);

int generic_ext(const Quiver& q, const DimVector& d, const DimVector& e, std::uint32_t p,
                int samples, Rng& rng);
int generic_hom(const Quiver& q, const DimVector& d, const DimVector& e, std::uint32_t p,
                int samples, Rng& rng);
/// Ext^1(M, M) of a single generic M. Zero exactly when d is rigid; generic_ext(d, d)
/// samples two independent modules and can vanish on non-rigid d.
int generic_self_ext(const Quiver& q, const DimVector& d, std::uint32_t p, int samples, Rng& rng);

/// Restriction to a subrepresentation given by per-vertex basis columns.
FpRep restrict_to(const FpRep& m, const std::vector<FpMatrix>& bases);
bool is_subrep(const FpRep& m, const std::vector<FpMatrix>& bases);

/// Krull-Schmidt decomposition over F_p by splitting along generalized
/// eigenspaces of random endomorphisms. Summands are indecomposable over
/// F_p with high probability.
std::vector<FpRep> decompose_indecomposables(const FpRep& m, Rng& rng, int attempts = 24);

/// dim of End(M)/rad End(M), via the rank of the trace form on End(M).
/// For an F_p-indecomposable M this is the number of summands M splits into
/// over the algebraic closure. Needs p > total dimension.
int absolute_splitting_degree(const FpRep& m);

bool is_isomorphic(const FpRep& a, const FpRep& b, Rng& rng, int attempts = 8);

/// Over the algebraic closure: the modal multiset of summand dimension
/// vectors of random representations, sorted.
std::vector<DimVector> canonical_decomposition(const Quiver& q, const DimVector& d,
                                               std::uint32_t p, int samples, Rng& rng);

bool is_schur_root(const Quiver& q, const DimVector& d, std::uint32_t p, int samples, Rng& rng);
bool is_real_schur(const Quiver& q, const DimVector& d, std::uint32_t p, int samples, Rng& rng);

/// Reflection functor at a sink (kernel construction) or a source
/// (cokernel construction). The result lives on Quiver::reflected_at(i).
FpRep reflect(const FpRep& m, std::size_t i);
/// Transposed maps on the opposite quiver.
FpRep dual(const FpRep& m);

/// Among up to `attempts` random representations, one with the least
/// ext1(M, M), preferring representations whose F_p-summands stay
/// indecomposable over the algebraic closure. Over small fields random draws
/// rarely hit the open orbit, so when every canonical summand of d is a real
/// root the search also tries direct sums of generic summands.
FpRep generic_rep(const Quiver& q, const DimVector& d, std::uint32_t p, Rng& rng, int attempts = 48);

std::string dim_to_string(const DimVector& d);

}  // namespace cq
