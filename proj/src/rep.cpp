#include "cq/rep.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace cq {

// ------------------------------------------------------------------ FpRep

FpRep::FpRep(Quiver q, std::uint32_t p, DimVector dims, std::vector<FpMatrix> maps)
    : quiver_(std::move(q)), p_(p), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!is_prime(p_)) throw RepError("field size " + std::to_string(p_) + " is not prime");
  if (dims_.size() != quiver_.size()) throw RepError("dimension vector has wrong length");
  for (int d : dims_)
    if (d < 0) throw RepError("negative dimension");
  arrows_ = quiver_.arrow_list();
  if (maps_.size() != arrows_.size()) throw RepError("one matrix per arrow expected");
  for (std::size_t h = 0; h < arrows_.size(); ++h) {
    const auto [s, t] = arrows_[h];
    const auto& m = maps_[h];
    if (m.rows() != static_cast<std::size_t>(dims_[t]) || m.cols() != static_cast<std::size_t>(dims_[s]) ||
        m.prime() != p_)
      throw RepError("matrix for arrow " + std::to_string(h) + " has the wrong shape");
  }
}

int FpRep::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

nlohmann::json FpRep::to_json() const {
  nlohmann::json dims = nlohmann::json::object();
  for (std::size_t i = 0; i < dims_.size(); ++i) dims[quiver_.vertex(i).id] = dims_[i];
  nlohmann::json maps = nlohmann::json::object();
  for (std::size_t h = 0; h < maps_.size(); ++h) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < maps_[h].rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < maps_[h].cols(); ++c) row.push_back(maps_[h](r, c));
      rows.push_back(row);
    }
    maps[std::to_string(h)] = rows;
  }
  return {{"p", p_}, {"quiver", quiver_.to_json()}, {"dims", dims}, {"maps", maps}};
}

FpRep FpRep::from_json(const nlohmann::json& j) {
  try {
    Quiver q = Quiver::from_json(j.at("quiver"));
    const auto p = j.at("p").get<std::uint32_t>();
    DimVector d(q.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) d[i] = j.at("dims").value(q.vertex(i).id, 0);
    const auto arrows = q.arrow_list();
    std::vector<FpMatrix> maps;
    for (std::size_t h = 0; h < arrows.size(); ++h) {
      const auto [s, t] = arrows[h];
      std::vector<std::vector<std::int64_t>> rows;
      const auto key = std::to_string(h);
      if (j.at("maps").contains(key))
        rows = j["maps"][key].get<std::vector<std::vector<std::int64_t>>>();
      if (rows.empty() && d[t] > 0) throw RepError("missing matrix for arrow " + key);
      maps.push_back(d[t] == 0 ? FpMatrix(0, d[s], p) : FpMatrix::from_rows(rows, d[s], p));
    }
    return FpRep(std::move(q), p, std::move(d), std::move(maps));
  } catch (const nlohmann::json::exception& e) {
    throw RepError(std::string("malformed representation JSON: ") + e.what());
  }
}

// ---------------------------------------------------------- constructions

FpRep random_rep(const Quiver& q, const DimVector& d, std::uint32_t p, Rng& rng) {
  if (!q.is_acyclic()) throw RepError("representations need an acyclic quiver");
  std::vector<FpMatrix> maps;
  for (auto [s, t] : q.arrow_list()) maps.push_back(FpMatrix::random(d.at(t), d.at(s), p, rng));
  return FpRep(q, p, d, std::move(maps));
}

FpRep zero_rep(const Quiver& q, std::uint32_t p) {
  std::vector<FpMatrix> maps;
  for (std::size_t h = 0; h < q.arrow_total(); ++h) maps.emplace_back(0, 0, p);
  return FpRep(q, p, DimVector(q.size(), 0), std::move(maps));
}

FpRep direct_sum(const FpRep& a, const FpRep& b) {
  if (!(a.quiver() == b.quiver()) || a.prime() != b.prime()) throw RepError("direct sum across quivers");
  DimVector d(a.dims().size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.dim(i) + b.dim(i);
  std::vector<FpMatrix> maps;
  for (std::size_t h = 0; h < a.arrows().size(); ++h) {
    const auto& ma = a.map(h);
    const auto& mb = b.map(h);
    FpMatrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols(), a.prime());
    m.set_block(0, 0, ma);
    m.set_block(ma.rows(), ma.cols(), mb);
    maps.push_back(std::move(m));
  }
  return FpRep(a.quiver(), a.prime(), std::move(d), std::move(maps));
}

int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  int s = 0;
  for (std::size_t i = 0; i < q.size(); ++i) s += d.at(i) * e.at(i);
  for (auto [a, b] : q.arrow_list()) s -= d.at(a) * e.at(b);
  return s;
}

// ------------------------------------------------------------ hom and ext

namespace {

// Rows: one per entry of Hom(M_s, N_t) over arrows; columns: entries of the
// per-vertex maps phi_i : M_i -> N_i, each stored row-major.
FpMatrix hom_constraint_matrix(const FpRep& m, const FpRep& n, std::vector<std::size_t>& offsets) {
  const auto& q = m.quiver();
  const std::uint32_t p = m.prime();
  offsets.assign(q.size() + 1, 0);
  for (std::size_t i = 0; i < q.size(); ++i)
    offsets[i + 1] = offsets[i] + static_cast<std::size_t>(n.dim(i) * m.dim(i));
  std::size_t rows = 0;
  for (auto [s, t] : m.arrows()) rows += static_cast<std::size_t>(n.dim(t) * m.dim(s));
  FpMatrix e(rows, offsets.back(), p);
  std::size_t row = 0;
  for (std::size_t h = 0; h < m.arrows().size(); ++h) {
    const auto [s, t] = m.arrows()[h];
    const auto& nh = n.map(h);
    const auto& mh = m.map(h);
    const int ms = m.dim(s), mt = m.dim(t), ns = n.dim(s), nt = n.dim(t);
    // (N_h phi_s - phi_t M_h)(a, b)
    for (int a = 0; a < nt; ++a) {
      for (int b = 0; b < ms; ++b, ++row) {
        for (int c = 0; c < ns; ++c)
          e(row, offsets[s] + static_cast<std::size_t>(c * ms + b)) = nh(a, c);
        for (int c = 0; c < mt; ++c) {
          const std::uint32_t v = mh(c, b);
          if (v == 0) continue;
          auto& slot = e(row, offsets[t] + static_cast<std::size_t>(a * mt + c));
          slot = (slot + p - v) % p;
        }
      }
    }
  }
  return e;
}

void check_compatible(const FpRep& m, const FpRep& n) {
  if (!(m.quiver() == n.quiver()) || m.prime() != n.prime())
    throw RepError("representations of different quivers or fields");
}

}  // namespace

std::vector<RepMorphism> hom_basis(const FpRep& m, const FpRep& n) {
  check_compatible(m, n);
  std::vector<std::size_t> offsets;
  const FpMatrix e = hom_constraint_matrix(m, n, offsets);
  const FpMatrix kernel = nullspace(e);
  std::vector<RepMorphism> basis;
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    RepMorphism phi;
    for (std::size_t i = 0; i < m.quiver().size(); ++i) {
      FpMatrix f(n.dim(i), m.dim(i), m.prime());
      for (int r = 0; r < n.dim(i); ++r)
        for (int c = 0; c < m.dim(i); ++c)
          f(r, c) = kernel(offsets[i] + static_cast<std::size_t>(r * m.dim(i) + c), k);
      phi.push_back(std::move(f));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

int hom_dim(const FpRep& m, const FpRep& n) {
  check_compatible(m, n);
  std::vector<std::size_t> offsets;
  const FpMatrix e = hom_constraint_matrix(m, n, offsets);
  return static_cast<int>(e.cols() - rank(e));
}

int ext1_dim(const FpRep& m, const FpRep& n) {
  check_compatible(m, n);
  std::vector<std::size_t> offsets;
  const FpMatrix e = hom_constraint_matrix(m, n, offsets);
  return static_cast<int>(e.rows() - rank(e));
}

int generic_ext(const Quiver& q, const DimVector& d, const DimVector& e, std::uint32_t p,
                int samples, Rng& rng) {
  int best = -1;
  for (int s = 0; s < std::max(samples, 1); ++s) {
    const int v = ext1_dim(random_rep(q, d, p, rng), random_rep(q, e, p, rng));
    best = best < 0 ? v : std::min(best, v);
    if (best == 0) break;
  }
  return best;
}

int generic_hom(const Quiver& q, const DimVector& d, const DimVector& e, std::uint32_t p,
                int samples, Rng& rng) {
  int best = -1;
  for (int s = 0; s < std::max(samples, 1); ++s) {
    const int v = hom_dim(random_rep(q, d, p, rng), random_rep(q, e, p, rng));
    best = best < 0 ? v : std::min(best, v);
    if (best == 0) break;
  }
  return best;
}

int generic_self_ext(const Quiver& q, const DimVector& d, std::uint32_t p, int samples, Rng& rng) {
  int best = -1;
  for (int s = 0; s < std::max(samples, 1); ++s) {
    const FpRep m = random_rep(q, d, p, rng);
    const int v = ext1_dim(m, m);
    best = best < 0 ? v : std::min(best, v);
    if (best == 0) break;
  }
  return best;
}

// --------------------------------------------------------- subrepresentations

FpRep restrict_to(const FpRep& m, const std::vector<FpMatrix>& bases) {
  const auto& q = m.quiver();
  if (bases.size() != q.size()) throw RepError("one basis per vertex expected");
  DimVector d(q.size());
  std::vector<FpMatrix> lefts;
  for (std::size_t i = 0; i < q.size(); ++i) {
    d[i] = static_cast<int>(bases[i].cols());
    lefts.push_back(left_inverse(bases[i]));
  }
  std::vector<FpMatrix> maps;
  for (std::size_t h = 0; h < m.arrows().size(); ++h) {
    const auto [s, t] = m.arrows()[h];
    maps.push_back(lefts[t] * (m.map(h) * bases[s]));
  }
  return FpRep(q, m.prime(), std::move(d), std::move(maps));
}

bool is_subrep(const FpRep& m, const std::vector<FpMatrix>& bases) {
  for (std::size_t h = 0; h < m.arrows().size(); ++h) {
    const auto [s, t] = m.arrows()[h];
    const FpMatrix image = m.map(h) * bases[s];
    const FpMatrix both = FpMatrix::hstack({bases[t], image}, bases[t].rows(), m.prime());
    if (rank(both) != rank(bases[t])) return false;
  }
  return true;
}

// ---------------------------------------------------------- decomposition

namespace {

RepMorphism random_combination(const std::vector<RepMorphism>& basis, std::uint32_t p, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  RepMorphism phi;
  for (const auto& f : basis[0]) phi.emplace_back(f.rows(), f.cols(), p);
  for (const auto& b : basis) {
    const std::uint32_t c = dist(rng);
    if (c == 0) continue;
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = phi[i] + b[i].scaled(c);
  }
  return phi;
}

struct Split {
  std::vector<FpMatrix> first;
  std::vector<FpMatrix> second;
};

// Fitting decomposition along the generalized eigenspace of one eigenvalue.
std::optional<Split> try_split(const FpRep& m, const RepMorphism& phi) {
  const std::uint32_t p = m.prime();
  const std::size_t n = m.quiver().size();
  const int total = m.total_dim();
  for (std::uint32_t lambda = 0; lambda < p; ++lambda) {
    bool eigen = false;
    for (std::size_t i = 0; i < n && !eigen; ++i) {
      if (m.dim(i) == 0) continue;
      const FpMatrix shifted = phi[i] - FpMatrix::identity(m.dim(i), p).scaled(lambda);
      eigen = rank(shifted) < static_cast<std::size_t>(m.dim(i));
    }
    if (!eigen) continue;
    Split split;
    int kernel_total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const FpMatrix shifted = phi[i] - FpMatrix::identity(m.dim(i), p).scaled(lambda);
      const FpMatrix power = shifted.power(static_cast<unsigned>(m.dim(i)));
      split.first.push_back(nullspace(power));
      split.second.push_back(column_space(power));
      kernel_total += static_cast<int>(split.first.back().cols());
    }
    if (kernel_total > 0 && kernel_total < total) return split;
  }
  return std::nullopt;
}

void decompose_into(const FpRep& m, Rng& rng, int attempts, std::vector<FpRep>& out) {
  if (m.total_dim() == 0) return;
  const auto end = hom_basis(m, m);
  if (end.size() > 1) {
    for (int a = 0; a < attempts; ++a) {
      auto split = try_split(m, random_combination(end, m.prime(), rng));
      if (!split) continue;
      decompose_into(restrict_to(m, split->first), rng, attempts, out);
      decompose_into(restrict_to(m, split->second), rng, attempts, out);
      return;
    }
  }
  out.push_back(m);
}

}  // namespace

std::vector<FpRep> decompose_indecomposables(const FpRep& m, Rng& rng, int attempts) {
  std::vector<FpRep> out;
  decompose_into(m, rng, attempts, out);
  return out;
}

int absolute_splitting_degree(const FpRep& m) {
  if (static_cast<std::uint32_t>(m.total_dim()) >= m.prime())
    throw RepError("trace form test needs p > total dimension");
  const auto end = hom_basis(m, m);
  const std::uint32_t p = m.prime();
  FpMatrix gram(end.size(), end.size(), p);
  for (std::size_t a = 0; a < end.size(); ++a) {
    for (std::size_t b = a; b < end.size(); ++b) {
      std::uint64_t tr = 0;
      for (std::size_t i = 0; i < end[a].size(); ++i) {
        const FpMatrix prod = end[a][i] * end[b][i];
        for (std::size_t r = 0; r < prod.rows(); ++r) tr += prod(r, r);
      }
      gram(a, b) = gram(b, a) = static_cast<std::uint32_t>(tr % p);
    }
  }
  return static_cast<int>(rank(gram));
}

bool is_isomorphic(const FpRep& a, const FpRep& b, Rng& rng, int attempts) {
  check_compatible(a, b);
  if (a.dims() != b.dims()) return false;
  if (a.total_dim() == 0) return true;
  const auto basis = hom_basis(a, b);
  if (basis.empty()) return false;
  for (int k = 0; k < attempts; ++k) {
    const auto phi = random_combination(basis, a.prime(), rng);
    bool ok = true;
    for (std::size_t i = 0; i < phi.size() && ok; ++i)
      if (a.dim(i) > 0) ok = is_invertible(phi[i]);
    if (ok) return true;
  }
  return false;
}

std::string dim_to_string(const DimVector& d) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ')';
  return os.str();
}

std::vector<DimVector> canonical_decomposition(const Quiver& q, const DimVector& d, std::uint32_t p,
                                               int samples, Rng& rng) {
  if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; })) return {};
  std::map<std::vector<DimVector>, int> tally;
  for (int s = 0; s < std::max(samples, 1); ++s) {
    std::vector<DimVector> parts;
    for (const auto& summand : decompose_indecomposables(random_rep(q, d, p, rng), rng)) {
      const int k = absolute_splitting_degree(summand);
      DimVector e = summand.dims();
      for (auto& x : e) {
        if (x % k != 0) throw RepError("summand dimension not divisible by its splitting degree");
        x /= k;
      }
      for (int c = 0; c < k; ++c) parts.push_back(e);
    }
    std::sort(parts.begin(), parts.end());
    ++tally[parts];
  }
  auto mode = tally.begin();
  int ties = 0;
  for (auto it = tally.begin(); it != tally.end(); ++it) {
    if (it->second > mode->second) {
      mode = it;
      ties = 0;
    } else if (it != mode && it->second == mode->second) {
      ++ties;
    }
  }
  if (ties > 0) {
    std::string msg = "unstable decomposition of " + dim_to_string(d) + ":";
    for (const auto& [parts, count] : tally) {
      msg += " [";
      for (const auto& e : parts) msg += dim_to_string(e);
      msg += "]x" + std::to_string(count);
    }
    throw RepError(msg);
  }
  const auto& parts = mode->first;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    if (!is_schur_root(q, parts[a], p, samples, rng))
      throw RepError("decomposition factor " + dim_to_string(parts[a]) + " is not a Schur root");
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      if (generic_ext(q, parts[a], parts[b], p, samples, rng) != 0 ||
          generic_ext(q, parts[b], parts[a], p, samples, rng) != 0)
        throw RepError("decomposition factors " + dim_to_string(parts[a]) + " and " +
                       dim_to_string(parts[b]) + " have extensions");
  }
  return parts;
}

bool is_schur_root(const Quiver& q, const DimVector& d, std::uint32_t p, int samples, Rng& rng) {
  if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; })) return false;
  int best = -1;
  for (int s = 0; s < std::max(samples, 1); ++s) {
    const FpRep m = random_rep(q, d, p, rng);
    const int v = hom_dim(m, m);
    best = best < 0 ? v : std::min(best, v);
    if (best == 1) break;
  }
  return best == 1;
}

bool is_real_schur(const Quiver& q, const DimVector& d, std::uint32_t p, int samples, Rng& rng) {
  return euler_form(q, d, d) == 1 && is_schur_root(q, d, p, samples, rng);
}

// ------------------------------------------------------------- functors

namespace {

// new arrow index -> (old arrow index), matching the k-th copy of a pair in
// the new quiver with the k-th copy of `old_pair(new_pair)` in the old one
template <typename OldPair>
std::vector<std::size_t> arrow_correspondence(const std::vector<std::pair<std::size_t, std::size_t>>& old_arrows,
                                              const std::vector<std::pair<std::size_t, std::size_t>>& new_arrows,
                                              OldPair old_pair) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_pair;
  for (std::size_t h = 0; h < old_arrows.size(); ++h) by_pair[old_arrows[h]].push_back(h);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> used;
  std::vector<std::size_t> out;
  for (const auto& a : new_arrows) {
    const auto key = old_pair(a);
    out.push_back(by_pair.at(key).at(used[key]++));
  }
  return out;
}

}  // namespace

FpRep dual(const FpRep& m) {
  const Quiver op = m.quiver().opposite();
  const auto new_arrows = op.arrow_list();
  const auto corr = arrow_correspondence(m.arrows(), new_arrows, [](auto a) {
    return std::make_pair(a.second, a.first);
  });
  std::vector<FpMatrix> maps;
  for (std::size_t h = 0; h < new_arrows.size(); ++h) maps.push_back(m.map(corr[h]).transpose());
  return FpRep(op, m.prime(), m.dims(), std::move(maps));
}

FpRep reflect(const FpRep& m, std::size_t i) {
  const Quiver& q = m.quiver();
  const std::uint32_t p = m.prime();
  const bool sink = q.is_sink(i);
  if (!sink && !q.is_source(i))
    throw RepError("vertex '" + q.vertex(i).id + "' is neither a sink nor a source");

  std::vector<std::size_t> incident;
  for (std::size_t h = 0; h < m.arrows().size(); ++h)
    if (m.arrows()[h].first == i || m.arrows()[h].second == i) incident.push_back(h);

  // other end of each incident arrow, and the map into or out of that block
  std::map<std::size_t, FpMatrix> new_incident;
  int new_dim = 0;
  if (sink) {
    std::vector<FpMatrix> parts;
    for (auto h : incident) parts.push_back(m.map(h));
    const FpMatrix phi = FpMatrix::hstack(parts, m.dim(i), p);
    const FpMatrix kernel = nullspace(phi);
    new_dim = static_cast<int>(kernel.cols());
    std::size_t row = 0;
    for (auto h : incident) {
      const int ds = m.dim(m.arrows()[h].first);
      new_incident[h] = kernel.block(row, 0, ds, kernel.cols());
      row += ds;
    }
  } else {
    std::vector<FpMatrix> parts;
    for (auto h : incident) parts.push_back(m.map(h));
    const FpMatrix psi = FpMatrix::vstack(parts, m.dim(i), p);
    const FpMatrix coker = left_nullspace(psi);
    new_dim = static_cast<int>(coker.rows());
    std::size_t col = 0;
    for (auto h : incident) {
      const int dt = m.dim(m.arrows()[h].second);
      new_incident[h] = coker.block(0, col, coker.rows(), dt);
      col += dt;
    }
  }

  const Quiver rq = q.reflected_at(i);
  const auto new_arrows = rq.arrow_list();
  const auto corr = arrow_correspondence(m.arrows(), new_arrows, [i](auto a) {
    return (a.first == i || a.second == i) ? std::make_pair(a.second, a.first) : a;
  });
  std::vector<FpMatrix> maps;
  for (std::size_t h = 0; h < new_arrows.size(); ++h) {
    auto it = new_incident.find(corr[h]);
    maps.push_back(it != new_incident.end() ? it->second : m.map(corr[h]));
  }
  DimVector d = m.dims();
  d[i] = new_dim;
  return FpRep(rq, p, std::move(d), std::move(maps));
}

namespace {

constexpr std::uint32_t kDecompositionPrime = 101;

// Exceptional module of dimension d built from a simple by a chain of
// sink/source reflections, found breadth-first over (orientation, dimension).
// Exact over any field; empty when no chain exists within the state budget.
std::optional<FpRep> reflected_exceptional(const Quiver& q, const DimVector& d, std::uint32_t p, Rng& rng) {
  struct State {
    Quiver quiver;
    DimVector dims;
    std::size_t parent;
    std::size_t vertex;  // reflection taking this state back to its parent
  };
  constexpr std::size_t kStateBudget = 2000;
  std::vector<State> states{{q, d, 0, 0}};
  std::set<std::pair<std::map<std::pair<std::size_t, std::size_t>, int>, DimVector>> seen{{q.arrow_counts(), d}};
  for (std::size_t at = 0; at < states.size() && states.size() < kStateBudget; ++at) {
    const DimVector cur = states[at].dims;
    if (std::accumulate(cur.begin(), cur.end(), 0) == 1) {
      FpRep m = random_rep(states[at].quiver, cur, p, rng);
      for (std::size_t s = at; s != 0; s = states[s].parent) m = reflect(m, states[s].vertex);
      if (m.dims() == d) return m;
      return std::nullopt;
    }
    const Quiver here = states[at].quiver;
    for (std::size_t i = 0; i < here.size(); ++i) {
      if (!(here.is_sink(i) || here.is_source(i))) continue;
      DimVector next = cur;
      next[i] = -cur[i];
      for (const auto& [arrow, count] : here.arrow_counts()) {
        if (arrow.first == i) next[i] += count * cur[arrow.second];
        if (arrow.second == i) next[i] += count * cur[arrow.first];
      }
      if (next[i] < 0) continue;
      Quiver other = here.reflected_at(i);
      if (!seen.insert({other.arrow_counts(), next}).second) continue;
      states.push_back({std::move(other), next, at, i});
    }
  }
  return std::nullopt;
}

// The reflection search runs on the support of d, which is often Dynkin even
// when the whole quiver is not; the result is extended by zero.
std::optional<FpRep> exceptional_on_support(const Quiver& q, const DimVector& d, std::uint32_t p, Rng& rng) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (d[i] > 0) support.push_back(i);
  if (support.size() == q.size()) return reflected_exceptional(q, d, p, rng);
  std::vector<Vertex> vertices;
  DimVector sub_dims;
  for (std::size_t i : support) {
    vertices.push_back(q.vertex(i));
    sub_dims.push_back(d[i]);
  }
  std::vector<std::pair<std::string, std::string>> arrows;
  for (const auto& [a, b] : q.arrow_list())
    if (d[a] > 0 && d[b] > 0) arrows.emplace_back(q.vertex(a).id, q.vertex(b).id);
  const auto sub = reflected_exceptional(Quiver(vertices, arrows), sub_dims, p, rng);
  if (!sub) return std::nullopt;
  std::vector<FpMatrix> maps;
  std::size_t k = 0;
  for (const auto& [a, b] : q.arrow_list()) {
    if (d[a] > 0 && d[b] > 0) maps.push_back(sub->map(k++));
    else maps.emplace_back(static_cast<std::size_t>(d[b]), static_cast<std::size_t>(d[a]), p);
  }
  return FpRep(q, p, d, std::move(maps));
}

}  // namespace

FpRep generic_rep(const Quiver& q, const DimVector& d, std::uint32_t p, Rng& rng, int attempts) {
  std::optional<FpRep> best;
  int best_ext = -1;
  int best_parts = -1;
  for (int a = 0; a < std::max(attempts, 1); ++a) {
    FpRep m = random_rep(q, d, p, rng);
    const int e = ext1_dim(m, m);
    if (e == 0) return m;
    if (best_ext >= 0 && e > best_ext) continue;
    const int parts = static_cast<int>(decompose_indecomposables(m, rng).size());
    if (best_ext < 0 || e < best_ext || parts > best_parts) {
      best = std::move(m);
      best_ext = e;
      best_parts = parts;
    }
  }
  if (best_ext == 0) return *best;

  // the canonical decomposition does not depend on the field, so read it off a large one
  std::vector<DimVector> summands;
  try {
    summands = canonical_decomposition(q, d, kDecompositionPrime, 5, rng);
  } catch (const RepError&) {
    return *best;
  }
  const bool rigid = std::all_of(summands.begin(), summands.end(), [&](const DimVector& e) {
                       return euler_form(q, e, e) == 1;
                     });
  if (!rigid) return *best;
  bool sampled = false;
  auto summand = [&](const DimVector& e) {
    if (auto m = exceptional_on_support(q, e, p, rng)) return *m;
    sampled = true;
    return e == d ? *best : generic_rep(q, e, p, rng, attempts);
  };
  for (int a = 0; a < std::max(attempts, 1); ++a) {
    sampled = false;
    FpRep m = summand(summands.front());
    for (std::size_t k = 1; k < summands.size(); ++k) m = direct_sum(m, summand(summands[k]));
    const int e = ext1_dim(m, m);
    if (e == 0) return m;
    if (e < best_ext) {
      best = std::move(m);
      best_ext = e;
    }
    if (!sampled) break;
  }
  return *best;
}

}  // namespace cq
