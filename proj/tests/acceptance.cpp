// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cq/parallel.hpp"
#include "cq/verifier.hpp"

using namespace cq;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!o.ok) ++failures;
  std::ostringstream line;
  line.precision(3);
  line << (o.ok ? "PASS" : "FAIL") << " [" << number << "] " << title << " (" << secs << " s)";
  if (!o.detail.empty()) line << ": " << o.detail;
  std::cout << line.str() << std::endl;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string failed_cases(const Report& r) {
  std::string out;
  for (const auto& c : r.cases)
    if (c.status == Status::fail) out += " {" + c.name + ": " + c.detail + "}";
  return out;
}

LaurentPoly Y(const std::string& i, int n, int e = 1) { return LaurentPoly::variable(y_name(i, n), e); }

// V_{i,a} = Y_{i,a-1}^-1 Y_{i,a+1}^-1 prod_j Y_{j,a}^{a_ij}, written against the adjacency directly
LaurentPoly V(const BipartiteGraph& g, std::size_t i, int a) {
  LaurentPoly out = Y(g.id(i), a - 1, -1) * Y(g.id(i), a + 1, -1);
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g.adjacency(i, j)) out *= Y(g.id(j), a, g.adjacency(i, j));
  return out;
}

}  // namespace

int main() {
  criterion(1, "T-system on A2, A3, A4, D4 under 10 s", [] {
    const auto start = Clock::now();
    Outcome o;
    for (const char* name : {"a2", "a3", "a4", "d4"}) {
      const Report r = verify_t_system(builtin_graph(name));
      if (!r.passed()) o = {false, std::string(name) + failed_cases(r)};
    }
    const double t = seconds_since(start);
    if (t >= 10) o = {false, "took " + std::to_string(t) + " s"};
    return o;
  });

  criterion(2, "KR, frozen and principal simple characters on A3", [] {
    const BipartiteGraph g = builtin_graph("a3", std::vector<std::string>{"1", "3"});
    int checked = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::string& id = g.id(i);
      const int xi = g.parity(i);
      const LaurentPoly f = Y(id, xi) * Y(id, xi + 2);
      const LaurentPoly x = xi == 0 ? Y(id, 2) : Y(id, 1) * (1 + V(g, i, 2));
      LaurentPoly xp = Y(id, 3);
      if (xi == 0) {
        LaurentPoly inner = V(g, i, 1);
        for (std::size_t j = 0; j < g.size(); ++j)
          if (g.adjacency(i, j)) inner *= (1 + V(g, j, 2)).pow(g.adjacency(i, j));
        xp = Y(id, 0) * (1 + inner);
      }
      const std::vector<std::pair<std::string, std::pair<GradedDim, LaurentPoly>>> cases = {
          {"f" + id, {kr_module(g, i), f}},
          {"x" + id, {frozen_simple(g, i), x}},
          {"x" + id + "'", {principal_simple(g, i), xp}}};
      for (const auto& [label, pair] : cases) {
        const QCharacter chi = truncated_character(g, pair.first);
        if (chi.poly != pair.second)
          return Outcome{false, label + " gave " + chi.to_string() + ", expected " + pair.second.to_string()};
        ++checked;
      }
    }
    return Outcome{true, std::to_string(checked) + " characters"};
  });

  criterion(3, "HL correspondence on A2, A3, D4 under 5 min", [] {
    const auto start = Clock::now();
    Outcome o;
    const std::vector<std::pair<std::string, std::size_t>> expected = {{"a2", 3}, {"a3", 6}, {"d4", 12}};
    for (const auto& [name, variables] : expected) {
      const Report r = verify_hl_correspondence(builtin_graph(name));
      // one case per non-initial variable plus the closure check
      if (!r.passed() || r.count(Status::pass) != variables + 1)
        o = {false, name + ": " + std::to_string(r.count(Status::pass)) + " passed" + failed_cases(r)};
      o.detail += (o.detail.empty() ? "" : ", ") + name + " " + std::to_string(variables) + " variables";
    }
    const double t = seconds_since(start);
    if (t >= 300) o = {false, "took " + std::to_string(t) + " s"};
    return o;
  });

  criterion(4, "Cluster census: A2 5 variables / 5 clusters, A3 9 variables", [] {
    const auto a2 = enumerate_clusters(initial_seed(plain_quiver(builtin_graph("a2"))), 100);
    const auto a3 = enumerate_clusters(initial_seed(build_x_quiver(builtin_graph("a3"))), 100);
    const bool ok = a2.closed && a2.variables.size() == 5 && a2.clusters.size() == 5 && a3.closed &&
                    a3.variables.size() == 9 && a3.clusters.size() == 14;
    return Outcome{ok, "A2 " + std::to_string(a2.variables.size()) + "/" + std::to_string(a2.clusters.size()) +
                           ", A3 " + std::to_string(a3.variables.size()) + " variables in " +
                           std::to_string(a3.clusters.size()) + " clusters"};
  });

  criterion(5, "Odd vanishing for every indecomposable A3 module", [] {
    const Quiver q = principal_decorated_part(builtin_graph("a3"));
    const std::vector<DimVector> roots = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
    const Report r = verify_odd_vanishing(q, roots, {2, 3, 5, 7, 11, 13});
    return Outcome{r.passed() && r.count(Status::pass) == roots.size(),
                   std::to_string(r.count(Status::pass)) + " roots" + failed_cases(r)};
  });

  criterion(6, "Kronecker: 2 delta splits, two (1,1) subrepresentations, chi(2 delta) = chi(delta)^2", [] {
    const BipartiteGraph g = builtin_graph("kronecker");
    const Quiver k = principal_decorated_part(g);
    Rng rng(11);
    const auto parts = canonical_decomposition(k, {2, 2}, 101, 5, rng);
    if (parts != std::vector<DimVector>{{1, 1}, {1, 1}}) return Outcome{false, "canonical decomposition differs"};
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      Rng r2(derive_seed(5, {p}));
      const BigInt n = count_subreps(generic_rep(k, {2, 2}, p, r2), {1, 1});
      if (n != 2) return Outcome{false, "p=" + std::to_string(p) + " gives " + n.str()};
    }
    const QCharacter delta = truncated_character(g, from_principal_dims(g, {1, 1}));
    const QCharacter twice = truncated_character(g, from_principal_dims(g, {2, 2}));
    if (twice.poly != delta.poly * delta.poly) return Outcome{false, "chi(2 delta) = " + twice.to_string()};
    return Outcome{true, "chi(delta) = " + delta.pretty()};
  });

  criterion(7, "KR and tensor factorizations on 50 random A3 W with entries <= 2", [] {
    const Report r = verify_factorizations(builtin_graph("a3"), 50, 2);
    return Outcome{r.passed() && r.cases.size() == 50,
                   std::to_string(r.count(Status::pass)) + "/50" + failed_cases(r)};
  });

  criterion(8, "Positivity of every A2, A3, D4 cluster variable", [] {
    Outcome o;
    for (const char* name : {"a2", "a3", "d4"}) {
      const Report r = verify_positivity(builtin_graph(name));
      if (!r.passed()) o = {false, std::string(name) + failed_cases(r)};
    }
    return o;
  });

  criterion(9, "Structural invariants on 1000 random cases", [] {
    Rng rng(909);
    int cases = 0;
    std::uniform_int_distribution<int> small(-2, 2), dim(0, 2);
    // mutation involution
    for (int t = 0; t < 250; ++t, ++cases) {
      const int n = 2 + t % 3;
      std::vector<Vertex> rows;
      std::vector<std::string> cols;
      for (int i = 0; i < n; ++i) {
        rows.push_back({std::to_string(i)});
        cols.push_back(std::to_string(i));
      }
      rows.push_back({"c", true});
      std::vector<int> e(rows.size() * cols.size(), 0);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          e[i * n + j] = small(rng);
          e[j * n + i] = -e[i * n + j];
        }
      for (int j = 0; j < n; ++j) e[n * n + j] = small(rng);
      const ExchangeMatrix b(rows, cols, e);
      const std::string k = cols[static_cast<std::size_t>(t % n)];
      if (mutate_matrix(mutate_matrix(b, k), k) != b) return Outcome{false, "mutation case " + std::to_string(t)};
    }
    // Laurent division exactness
    for (int t = 0; t < 250; ++t, ++cases) {
      LaurentPoly a, b;
      for (int s = 0; s < 3; ++s) {
        a += LaurentPoly::term(Monomial::variable("x", small(rng)) * Monomial::variable("y", small(rng)), small(rng));
        b += LaurentPoly::term(Monomial::variable("x", small(rng)) * Monomial::variable("z", small(rng)), small(rng));
      }
      if (b.is_zero()) b = LaurentPoly(1);
      if (exact_div(a * b, b) != a) return Outcome{false, "division case " + std::to_string(t)};
    }
    // tau minus involution
    const BipartiteGraph d4 = builtin_graph("d4");
    for (int t = 0; t < 250; ++t, ++cases) {
      std::vector<int> gamma(d4.size());
      for (auto& x : gamma) x = small(rng) * 2;
      if (tau_minus(d4, tau_minus(d4, gamma)) != gamma) return Outcome{false, "tau case " + std::to_string(t)};
    }
    // hom - ext = Euler form
    const Quiver k = principal_decorated_part(builtin_graph("kronecker"));
    const Quiver a3 = principal_decorated_part(builtin_graph("a3"));
    for (int t = 0; t < 250; ++t, ++cases) {
      const Quiver& q = t % 2 ? k : a3;
      DimVector d(q.size()), e(q.size());
      for (auto& x : d) x = dim(rng);
      for (auto& x : e) x = dim(rng);
      const FpRep m = random_rep(q, d, 5, rng);
      const FpRep n = random_rep(q, e, 5, rng);
      if (hom_dim(m, n) - ext1_dim(m, n) != euler_form(q, d, e))
        return Outcome{false, "hom/ext case " + std::to_string(t)};
    }
    return Outcome{true, std::to_string(cases) + " cases"};
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
