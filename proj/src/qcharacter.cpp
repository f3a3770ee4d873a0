#include "cq/qcharacter.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace cq {

std::string y_name(const std::string& vertex, int n) {
  return "Y[" + vertex + "," + std::to_string(n) + "]";
}

QCharacter QCharacter::at_t1() const { return {substitute(poly, {{"t", LaurentPoly(1)}})}; }

std::string QCharacter::pretty() const {
  static const std::regex y(R"(Y\[([^,\]]+),(-?\d+)\])");
  std::string text = poly.to_string();
  std::string out;
  auto begin = std::sregex_iterator(text.begin(), text.end(), y);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    out += text.substr(last, static_cast<std::size_t>(m.position()) - last);
    const int n = std::stoi(m[2].str());
    const std::string q = n == 0 ? "1" : n == 1 ? "q" : "q^" + std::to_string(n);
    out += "Y_{" + m[1].str() + "," + q + "}";
    last = static_cast<std::size_t>(m.position() + m.length());
  }
  out += text.substr(last);
  return out;
}

nlohmann::json QCharacter::to_json() const {
  return {{"text", to_string()}, {"pretty", pretty()}, {"terms", poly.to_json()["terms"]}};
}

LaurentPoly e_w(const GradedDim& w) {
  Monomial m;
  for (const auto& [key, d] : w.entries()) m = m * Monomial::variable(y_name(key.first, key.second), d);
  return LaurentPoly::term(m);
}

LaurentPoly v_monomial(const BipartiteGraph& g, std::size_t i, int a) {
  Monomial m = Monomial::variable(y_name(g.id(i), a - 1), -1) * Monomial::variable(y_name(g.id(i), a + 1), -1);
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g.adjacency(i, j) > 0) m = m * Monomial::variable(y_name(g.id(j), a), g.adjacency(i, j));
  return LaurentPoly::term(m);
}

LaurentPoly e_v(const BipartiteGraph& g, const GradedDim& v) {
  LaurentPoly out(1);
  for (const auto& [key, d] : v.entries()) out *= v_monomial(g, g.index_of(key.first), key.second).pow(d);
  return out;
}

GradedDim v_grading(const BipartiteGraph& g, const DimVector& v) {
  GradedDim out;
  for (std::size_t i = 0; i < g.size(); ++i) out.set(g.id(i), middle_slot(g, i), v.at(i));
  return out;
}

int dim_m_bullet(const BipartiteGraph& g, const GradedDim& v, const GradedDim& w) {
  int total = 0;
  for (const auto& [key, vd] : v.entries()) {
    const auto& [id, a] = key;
    const std::size_t i = g.index_of(id);
    int inner = w.at(id, a + 1) + w.at(id, a - 1) - v.at(id, a) - v.at(id, a - 2);
    for (std::size_t j = 0; j < g.size(); ++j) inner += g.adjacency(i, j) * v.at(g.id(j), a - 1);
    total += vd * inner;
  }
  return total;
}

bool is_l_dominant(const BipartiteGraph& g, const GradedDim& v, const GradedDim& w) {
  int lo = 0;
  int hi = 0;
  for (const auto* d : {&v, &w})
    for (const auto& [key, x] : d->entries()) {
      lo = std::min(lo, key.second);
      hi = std::max(hi, key.second);
    }
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& id = g.id(i);
    for (int a = lo - 2; a <= hi + 2; ++a) {
      int u = w.at(id, a) - v.at(id, a + 1) - v.at(id, a - 1);
      for (std::size_t j = 0; j < g.size(); ++j) u += g.adjacency(i, j) * v.at(g.id(j), a);
      if (u < 0) return false;
    }
  }
  return true;
}

std::vector<int> tau_minus(const BipartiteGraph& g, const std::vector<int>& gamma) {
  if (gamma.size() != g.size()) throw std::invalid_argument("gamma has wrong length");
  std::vector<int> out = gamma;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.parity(i) != 1) continue;
    int s = -gamma[i];
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) s -= g.cartan(i, j) * std::max(0, gamma[j]);
    out[i] = s;
  }
  return out;
}

// ------------------------------------------------------------ characters

GrassmannianData grassmannian_data(const BipartiteGraph& g, const GradedDim& w, const CharacterOptions& opts) {
  check_two_slot(g, w);
  GrassmannianData data;
  data.w = w;
  data.sigma = sigma_dim(g, w);
  const Quiver q = build_principal_decoration(g);
  const DimVector dims = to_decorated_dims(g, data.sigma);
  const std::size_t n = g.size();

  SubdimensionRange range(2 * n);
  int max_bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k <= dims[i]; ++k) range[i].push_back(k);
    range[n + i] = {g.parity(i) == 1 ? dims[n + i] : 0};
    max_bound += (dims[i] / 2) * (dims[i] - dims[i] / 2);
  }

  CountingOptions copts;
  copts.primes = first_primes(std::max<std::size_t>(static_cast<std::size_t>(max_bound) + 2, opts.min_primes));
  copts.resamples = opts.resamples;
  copts.attempts = opts.attempts;
  copts.seed = opts.seed;
  copts.budget = opts.budget;
  for (auto& [v, c] : counting_polynomials(q, dims, range, copts)) {
    DimVector principal(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
    data.terms.push_back({principal, std::move(c)});
  }
  return data;
}

QCharacter character_from_data(const BipartiteGraph& g, const GrassmannianData& data, CharacterMode mode) {
  const LaurentPoly top = e_w(data.w);
  LaurentPoly total;
  for (const auto& term : data.terms) {
    if (term.count.coefficients.size() == 1 && term.count.coefficients[0] == 0) continue;
    const GradedDim v = v_grading(g, term.v);
    LaurentPoly coeff;
    switch (mode) {
      case CharacterMode::t_equals_1:
        coeff = LaurentPoly(term.count.euler_number());
        break;
      case CharacterMode::normalized_t:
        coeff = poincare_polynomial(term.count, -dim_m_bullet(g, v, data.w));
        break;
      case CharacterMode::raw_t:
        coeff = poincare_polynomial(term.count);
        break;
    }
    total += coeff * top * e_v(g, v);
  }
  return {total};
}

QCharacter truncated_character(const BipartiteGraph& g, const GradedDim& w, CharacterMode mode,
                               const CharacterOptions& opts) {
  return character_from_data(g, grassmannian_data(g, w, opts), mode);
}

LaurentPoly euler_generating_function(const BipartiteGraph& g, const GrassmannianData& data) {
  LaurentPoly out;
  for (const auto& term : data.terms) {
    Monomial m;
    for (std::size_t i = 0; i < g.size(); ++i) m = m * Monomial::variable("f" + g.id(i), term.v[i]);
    out += LaurentPoly::term(m, term.count.euler_number());
  }
  return out;
}

KrCheck verify_kr_factorization(const BipartiteGraph& g, const GradedDim& w, CharacterMode mode,
                                const CharacterOptions& opts) {
  const PhiSplit split = phi_dim(g, w);
  KrCheck out;
  out.lhs = truncated_character(g, w, mode, opts);
  out.rhs = truncated_character(g, split.reduced, mode, opts);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (split.kr_multiplicity[i] == 0) continue;
    const QCharacter kr = truncated_character(g, kr_module(g, i), mode, opts);
    out.rhs.poly *= kr.poly.pow(split.kr_multiplicity[i]);
  }
  out.holds = out.lhs == out.rhs;
  return out;
}

TensorFactorization tensor_factorize(const BipartiteGraph& g, const GradedDim& w, std::uint64_t seed,
                                     std::uint32_t p, int samples) {
  const PhiSplit split = phi_dim(g, w);
  TensorFactorization out;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (int k = 0; k < split.kr_multiplicity[i]; ++k)
      out.factors.push_back({TensorFactor::Kind::kr, kr_module(g, i)});
  for (std::size_t i = 0; i < g.size(); ++i)
    for (int k = 0; k < split.reduced.at(g.id(i), frozen_slot(g, i)); ++k)
      out.factors.push_back({TensorFactor::Kind::frozen_simple, frozen_simple(g, i)});

  const Quiver principal = principal_decorated_part(g);
  Rng rng(seed);
  for (const auto& d : canonical_decomposition(principal, principal_dims(g, split.reduced), p, samples, rng)) {
    if (euler_form(principal, d, d) != 1) out.condition_c = false;
    out.factors.push_back({TensorFactor::Kind::canonical, from_principal_dims(g, d)});
  }
  return out;
}

bool condition_c(const BipartiteGraph& g, const GradedDim& w, std::uint64_t seed) {
  return tensor_factorize(g, w, seed).condition_c;
}

FactorizationCheck verify_tensor_factorization(const BipartiteGraph& g, const GradedDim& w,
                                               const CharacterOptions& opts) {
  FactorizationCheck out;
  out.factorization = tensor_factorize(g, w, opts.seed);
  out.lhs = truncated_character(g, w, CharacterMode::t_equals_1, opts);
  out.rhs = QCharacter{LaurentPoly(1)};
  for (const auto& f : out.factorization.factors)
    out.rhs = out.rhs * truncated_character(g, f.w, CharacterMode::t_equals_1, opts);
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace cq
