#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cq/cluster.hpp"
#include "cq/graph.hpp"
#include "cq/qcharacter.hpp"

namespace cq {

enum class Status { pass, fail, info };

struct CaseResult {
  std::string name;
  Status status = Status::pass;
  std::string detail;
  nlohmann::json witness;
};

struct Report {
  std::string suite;
  std::string subject;
  std::uint64_t seed = 0;
  double seconds = 0;
  std::vector<CaseResult> cases;

  bool passed() const;
  std::size_t count(Status s) const;
  void add(std::string name, bool ok, std::string detail = {}, nlohmann::json witness = nullptr);
  void info(std::string name, std::string detail, nlohmann::json witness = nullptr);
  /// Without timing the output is byte-stable for a fixed seed.
  nlohmann::json to_json(bool with_timing = true) const;
  std::string to_table(bool with_timing = true) const;
};

struct VerifyOptions {
  std::uint64_t seed = 2024;
  std::size_t max_seeds = 5000;
  std::size_t pair_budget = 5000;
  std::uint32_t field = 101;  // for generic ext and decompositions
  int samples = 5;
  CharacterOptions character{};
};

/// x_i x_i' = f_i + prod_j x_j^{a_ij} at t = 1, one case per vertex.
Report verify_t_system(const BipartiteGraph& g, const VerifyOptions& opts = {});
using CharacterFn = std::function<QCharacter(const GradedDim&)>;
Report verify_t_system_with(const BipartiteGraph& g, const CharacterFn& character);

/// Cluster variables with principal coefficients on the z-quiver against
/// Grassmannians of sigma W: F-polynomials, g-vectors, reconstruction in the
/// z-seed and the character after substituting Y-monomials.
Report verify_hl_correspondence(const BipartiteGraph& g, const VerifyOptions& opts = {});

/// Compatibility in the exchange graph against vanishing of extensions.
Report verify_common_cluster(const BipartiteGraph& g, const VerifyOptions& opts = {});

/// Counting polynomials of Gr_v(M) for each listed (rigid) dimension vector
/// and every v <= d: integer, nonnegative, consistent across primes.
Report verify_odd_vanishing(const Quiver& q, const std::vector<DimVector>& dims,
                            const std::vector<std::uint32_t>& primes, const VerifyOptions& opts = {});
/// All rigid dimension vectors with entries up to `max_entry`.
Report verify_odd_vanishing(const Quiver& q, int max_entry, const std::vector<std::uint32_t>& primes,
                            const VerifyOptions& opts = {});

/// Every cluster variable reachable from the plain, x- and principal seeds
/// has nonnegative coefficients.
Report verify_positivity(const BipartiteGraph& g, const VerifyOptions& opts = {});

/// KR factorization (t = 1 and unshifted t) and the canonical tensor
/// factorization (t = 1) on random W with entries up to max_entry.
Report verify_factorizations(const BipartiteGraph& g, int cases, int max_entry,
                             const VerifyOptions& opts = {});

/// Seeds used by the checks above.
Seed z_seed(const BipartiteGraph& g);
/// Image of each z-seed variable under the character map at t = 1.
std::map<std::string, LaurentPoly> z_seed_characters(const BipartiteGraph& g);

/// W for a cluster variable with principal coefficients on the z-quiver,
/// read off its g-vector; nullopt if no module matches.
std::optional<GradedDim> module_for_g_vector(const BipartiteGraph& g, const std::vector<int>& gvec);

}  // namespace cq
