#include "cq/grassmannian.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include <boost/multiprecision/cpp_int.hpp>

#include "cq/parallel.hpp"

namespace cq {

using Rational = boost::multiprecision::cpp_rational;

BigInt gaussian_binomial(int m, int k, const BigInt& q) {
  if (k < 0 || k > m) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(q, static_cast<unsigned>(m - i)) - 1;
    den *= boost::multiprecision::pow(q, static_cast<unsigned>(i + 1)) - 1;
  }
  if (den == 0) return q == 1 ? BigInt(1) : BigInt(0);
  return num / den;
}

SubdimensionRange full_range(const DimVector& d) {
  SubdimensionRange r;
  for (int x : d) {
    std::vector<int> ks;
    for (int k = 0; k <= x; ++k) ks.push_back(k);
    r.push_back(std::move(ks));
  }
  return r;
}

SubdimensionRange single(const DimVector& v) {
  SubdimensionRange r;
  for (int x : v) r.push_back({x});
  return r;
}

int degree_bound(const DimVector& d, const DimVector& v) {
  int b = 0;
  for (std::size_t i = 0; i < d.size(); ++i) b += v[i] * std::max(d[i] - v[i], 0);
  return b;
}

namespace {

// Calls fn(R) for every k x m matrix R in reduced row echelon form of rank k.
void for_each_subspace(int m, int k, std::uint32_t p, const std::function<void(const FpMatrix&)>& fn) {
  if (k == 0) {
    fn(FpMatrix(0, m, p));
    return;
  }
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < k; ++r)
      for (int c = pivots[r] + 1; c < m; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
    FpMatrix r(k, m, p);
    for (int i = 0; i < k; ++i) r(i, pivots[i]) = 1;
    std::vector<std::uint32_t> digits(free.size(), 0);
    while (true) {
      for (std::size_t f = 0; f < free.size(); ++f) r(free[f].first, free[f].second) = digits[f];
      fn(r);
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
    int i = k - 1;
    while (i >= 0 && pivots[i] == m - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

class SubrepCounter {
 public:
  SubrepCounter(const FpRep& m, const SubdimensionRange& range) : m_(m), range_(range) {
    const auto& q = m.quiver();
    if (range.size() != q.size()) throw RepError("subdimension range has wrong length");
    auto topo = q.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
      (q.is_source(*it) ? sources_ : inner_).push_back(*it);
    chosen_.resize(q.size());
    annihilator_.resize(q.size());
    choice_.assign(q.size(), 0);
  }

  BigInt search_bound() const {
    BigInt bound = 1;
    for (auto v : inner_) {
      BigInt s = 0;
      for (int k : range_[v]) s += gaussian_binomial(m_.dim(v), k, m_.prime());
      bound *= s;
    }
    return bound;
  }

  std::map<DimVector, BigInt> run() {
    DimVector v(m_.quiver().size(), 0);
    seed_table(0, v);
    descend(0);
    return std::move(table_);
  }

 private:
  void seed_table(std::size_t i, DimVector& v) {
    if (i == v.size()) {
      table_[v] = 0;
      return;
    }
    for (int k : range_[i]) {
      v[i] = k;
      seed_table(i + 1, v);
    }
  }

  // subspace of M_s mapped into the chosen subspaces of all its targets
  FpMatrix allowed_subspace(std::size_t s) const {
    const std::uint32_t p = m_.prime();
    std::vector<FpMatrix> parts;
    for (std::size_t h = 0; h < m_.arrows().size(); ++h) {
      const auto [from, to] = m_.arrows()[h];
      if (from != s) continue;
      if (annihilator_[to].rows() == 0) continue;
      parts.push_back(annihilator_[to] * m_.map(h));
    }
    if (parts.empty()) return FpMatrix::identity(m_.dim(s), p);
    return nullspace(FpMatrix::vstack(parts, m_.dim(s), p));
  }

  void descend(std::size_t depth) {
    if (depth == inner_.size()) {
      close_sources();
      return;
    }
    const std::size_t s = inner_[depth];
    const FpMatrix u = allowed_subspace(s);
    const int dim_u = static_cast<int>(u.cols());
    for (int k : range_[s]) {
      if (k > dim_u) continue;
      choice_[s] = k;
      for_each_subspace(dim_u, k, m_.prime(), [&](const FpMatrix& r) {
        chosen_[s] = u * r.transpose();
        annihilator_[s] = left_nullspace(chosen_[s]);
        descend(depth + 1);
      });
    }
  }

  BigInt binomial(int m, int k) {
    auto key = std::make_pair(m, k);
    auto it = binomials_.find(key);
    if (it == binomials_.end()) it = binomials_.emplace(key, gaussian_binomial(m, k, m_.prime())).first;
    return it->second;
  }

  void close_sources() {
    std::vector<int> free_dims;
    for (auto s : sources_) free_dims.push_back(static_cast<int>(allowed_subspace(s).cols()));
    DimVector v = choice_;
    combine(0, free_dims, v, BigInt(1));
  }

  void combine(std::size_t idx, const std::vector<int>& free_dims, DimVector& v, const BigInt& acc) {
    if (idx == sources_.size()) {
      table_[v] += acc;
      return;
    }
    const std::size_t s = sources_[idx];
    for (int k : range_[s]) {
      if (k > free_dims[idx]) continue;
      v[s] = k;
      combine(idx + 1, free_dims, v, acc * binomial(free_dims[idx], k));
    }
  }

  const FpRep& m_;
  const SubdimensionRange& range_;
  std::vector<std::size_t> inner_;
  std::vector<std::size_t> sources_;
  std::vector<FpMatrix> chosen_;
  std::vector<FpMatrix> annihilator_;
  DimVector choice_;
  std::map<DimVector, BigInt> table_;
  std::map<std::pair<int, int>, BigInt> binomials_;
};

}  // namespace

std::map<DimVector, BigInt> count_all_subreps(const FpRep& m, const SubdimensionRange& range,
                                              const BigInt& budget) {
  for (std::size_t i = 0; i < range.size(); ++i)
    for (int k : range[i])
      if (k < 0 || k > m.dim(i)) throw RepError("subdimension outside the representation");
  SubrepCounter counter(m, range);
  const BigInt bound = counter.search_bound();
  if (bound > budget)
    throw BudgetExceeded("subspace search of size " + bound.str() + " exceeds budget " + budget.str(), bound);
  return counter.run();
}

BigInt count_subreps(const FpRep& m, const DimVector& v, const BigInt& budget) {
  const auto table = count_all_subreps(m, single(v), budget);
  return table.at(v);
}

// ------------------------------------------------------------ polynomials

BigInt CountingPolynomial::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * q + *it;
  return acc;
}

bool CountingPolynomial::nonnegative() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const BigInt& c) { return c >= 0; });
}

std::string CountingPolynomial::to_string() const {
  LaurentPoly p;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    p += LaurentPoly::term(Monomial::variable("q", static_cast<int>(k)), coefficients[k]);
  return p.to_string();
}

nlohmann::json CountingPolynomial::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coefficients) coeffs.push_back(c.str());
  nlohmann::json samples_json = nlohmann::json::array();
  for (const auto& [p, c] : samples) samples_json.push_back({{"p", p}, {"count", c.str()}});
  return {{"coefficients", coeffs}, {"text", to_string()}, {"degree_bound", bound},
          {"samples", samples_json}};
}

CountingPolynomial interpolate_counts(const std::vector<std::pair<std::uint32_t, BigInt>>& samples, int bound) {
  if (static_cast<int>(samples.size()) <= bound)
    throw std::invalid_argument("need more primes (" + std::to_string(samples.size()) +
                                ") than the degree bound (" + std::to_string(bound) + ")");
  const std::size_t n = samples.size();
  // Newton divided differences
  std::vector<Rational> x(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = Rational(samples[i].first);
    c[i] = Rational(samples[i].second);
  }
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) c[i] = (c[i] - c[i - 1]) / (x[i] - x[i - level]);
  // expand to the monomial basis
  std::vector<Rational> poly(1, c[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * x[k];
    }
    next[0] += c[k];
    poly = std::move(next);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();

  auto describe = [&] {
    std::string s;
    for (const auto& [p, cnt] : samples) s += " F_" + std::to_string(p) + ":" + cnt.str();
    return s;
  };
  if (static_cast<int>(poly.size()) - 1 > bound)
    throw NonPolynomial("counts exceed the degree bound " + std::to_string(bound) + ":" + describe());
  CountingPolynomial out;
  out.bound = bound;
  out.samples = samples;
  for (const auto& r : poly) {
    if (boost::multiprecision::denominator(r) != 1)
      throw NonPolynomial("interpolant has non-integer coefficients:" + describe());
    out.coefficients.push_back(boost::multiprecision::numerator(r));
  }
  return out;
}

std::vector<std::uint32_t> first_primes(std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 2; out.size() < n; ++k)
    if (is_prime(k)) out.push_back(k);
  return out;
}

std::map<DimVector, CountingPolynomial> counting_polynomials(const Quiver& q, const DimVector& d,
                                                             const SubdimensionRange& range,
                                                             const CountingOptions& opts) {
  std::vector<std::map<DimVector, BigInt>> tables(opts.primes.size());
  std::vector<std::string> inconsistent(opts.primes.size());
  parallel_for(opts.primes.size(), [&](std::size_t idx) {
    const std::uint32_t p = opts.primes[idx];
    for (int r = 0; r < std::max(opts.resamples, 1); ++r) {
      Rng rng(derive_seed(opts.seed, {p, static_cast<std::uint64_t>(r)}));
      const FpRep m = generic_rep(q, d, p, rng, opts.attempts);
      auto table = count_all_subreps(m, range, opts.budget);
      if (r == 0) {
        tables[idx] = std::move(table);
      } else if (table != tables[idx]) {
        inconsistent[idx] = "counts over F_" + std::to_string(p) + " differ between generic draws";
      }
    }
  });
  for (const auto& msg : inconsistent)
    if (!msg.empty()) throw NonPolynomial(msg + " for dimension " + dim_to_string(d));

  std::map<DimVector, CountingPolynomial> out;
  for (const auto& [v, unused] : tables.front()) {
    std::vector<std::pair<std::uint32_t, BigInt>> samples;
    for (std::size_t idx = 0; idx < opts.primes.size(); ++idx)
      samples.emplace_back(opts.primes[idx], tables[idx].at(v));
    try {
      out.emplace(v, interpolate_counts(samples, degree_bound(d, v)));
    } catch (const NonPolynomial& e) {
      throw NonPolynomial("Gr" + dim_to_string(v) + " of " + dim_to_string(d) + ": " + e.what());
    }
  }
  return out;
}

CountingPolynomial counting_polynomial(const Quiver& q, const DimVector& d, const DimVector& v,
                                       const CountingOptions& opts) {
  return counting_polynomials(q, d, single(v), opts).at(v);
}

LaurentPoly poincare_polynomial(const CountingPolynomial& c, int shift) {
  LaurentPoly p;
  for (std::size_t k = 0; k < c.coefficients.size(); ++k)
    p += LaurentPoly::term(Monomial::variable("t", 2 * static_cast<int>(k) + shift), c.coefficients[k]);
  return p;
}

}  // namespace cq
