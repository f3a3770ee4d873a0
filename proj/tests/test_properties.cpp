#include <doctest.h>

#include <random>

#include "cq/explorer.hpp"
#include "cq/graded.hpp"
#include "cq/qcharacter.hpp"
#include "cq/rep.hpp"

using namespace cq;

// Randomized invariants. Every generator is seeded so failures replay.

namespace {

ExchangeMatrix random_matrix(Rng& rng, int n, int frozen) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<Vertex> rows;
  std::vector<std::string> cols;
  for (int i = 0; i < n; ++i) {
    rows.push_back({std::to_string(i + 1)});
    cols.push_back(std::to_string(i + 1));
  }
  for (int i = 0; i < frozen; ++i) rows.push_back({std::to_string(i + 1) + "'", true});
  std::vector<int> e(rows.size() * cols.size(), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int v = entry(rng);
      e[i * n + j] = v;
      e[j * n + i] = -v;
    }
  for (int r = n; r < n + frozen; ++r)
    for (int c = 0; c < n; ++c) e[r * n + c] = entry(rng);
  return ExchangeMatrix(rows, cols, e);
}

LaurentPoly random_poly(Rng& rng, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-2, 2), var(0, 2);
  LaurentPoly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int k = 0; k < 2; ++k) m = m * Monomial::variable("x" + std::to_string(var(rng)), expo(rng));
    p += LaurentPoly::term(m, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("matrix mutation is an involution (300 cases)") {
    Rng rng(101);
    for (int t = 0; t < 300; ++t) {
      const int n = 2 + t % 4;
      const ExchangeMatrix b = random_matrix(rng, n, t % 3);
      const std::string k = std::to_string(1 + t % n);
      const ExchangeMatrix m = mutate_matrix(b, k);
      REQUIRE_MESSAGE(mutate_matrix(m, k) == b, "case ", t);
      // skew-symmetry survives
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) REQUIRE(m.at(i, j) == -m.at(j, i));
    }
  }

  TEST_CASE("seed mutation is an involution (150 cases)") {
    Rng rng(7);
    const std::vector<Quiver> quivers = {build_x_quiver(builtin_graph("a3")), build_z_quiver(builtin_graph("d4")),
                                         plain_quiver(builtin_graph("kronecker"))};
    for (int t = 0; t < 150; ++t) {
      Seed s = initial_seed(quivers[t % 3]);
      const auto& cols = s.matrix.columns();
      std::uniform_int_distribution<std::size_t> pick(0, cols.size() - 1);
      for (int step = 0; step < 3; ++step) s = mutate_seed(s, cols[pick(rng)]);
      const std::string k = cols[pick(rng)];
      const Seed back = mutate_seed(mutate_seed(s, k), k);
      REQUIRE_MESSAGE(back.variables == s.variables, "case ", t);
      REQUIRE(back.matrix == s.matrix);
    }
  }

  TEST_CASE("Laurent division is exact on products (300 cases)") {
    Rng rng(202);
    for (int t = 0; t < 300; ++t) {
      const LaurentPoly a = random_poly(rng, 1 + t % 4);
      LaurentPoly b = random_poly(rng, 1 + t % 3);
      if (b.is_zero()) b = LaurentPoly(1);
      const LaurentPoly prod = a * b;
      REQUIRE_MESSAGE(exact_div(prod, b) == a, "a=", a.to_string(), " b=", b.to_string());
      REQUIRE(LaurentPoly::parse(prod.to_string()) == prod);
    }
  }

  TEST_CASE("tau minus is an involution (300 cases)") {
    Rng rng(303);
    std::uniform_int_distribution<int> entry(-4, 4);
    const std::vector<BipartiteGraph> graphs = {builtin_graph("a3"), builtin_graph("d4"), builtin_graph("e6"),
                                                builtin_graph("kronecker")};
    for (int t = 0; t < 300; ++t) {
      const BipartiteGraph& g = graphs[t % graphs.size()];
      std::vector<int> gamma(g.size());
      for (auto& x : gamma) x = entry(rng);
      REQUIRE(tau_minus(g, tau_minus(g, gamma)) == gamma);
    }
  }

  TEST_CASE("tau minus positive part is sigma of phi (150 cases)") {
    Rng rng(404);
    std::uniform_int_distribution<int> entry(0, 3);
    const std::vector<BipartiteGraph> graphs = {builtin_graph("a3"), builtin_graph("d4"), builtin_graph("a4")};
    for (int t = 0; t < 150; ++t) {
      const BipartiteGraph& g = graphs[t % graphs.size()];
      GradedDim w;
      std::vector<int> gamma(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        const int a = entry(rng), b = entry(rng);
        w.set(g.id(i), principal_slot(g, i), a);
        w.set(g.id(i), frozen_slot(g, i), b);
        gamma[i] = a - b;
      }
      const DimVector lhs = principal_dims(g, sigma_dim(g, phi_dim(g, w).reduced));
      std::vector<int> rhs = tau_minus(g, gamma);
      for (auto& x : rhs) x = std::max(x, 0);
      REQUIRE_MESSAGE(lhs == rhs, "W=", w.to_string());
    }
  }

  TEST_CASE("hom minus ext equals the Euler form (200 cases)") {
    Rng rng(505);
    std::uniform_int_distribution<int> entry(0, 2);
    const std::vector<Quiver> quivers = {principal_decorated_part(builtin_graph("kronecker")),
                                         principal_decorated_part(builtin_graph("a3")),
                                         build_principal_decoration(builtin_graph("a2"))};
    for (int t = 0; t < 200; ++t) {
      const Quiver& q = quivers[t % quivers.size()];
      DimVector d(q.size()), e(q.size());
      for (auto& x : d) x = entry(rng);
      for (auto& x : e) x = entry(rng);
      const std::uint32_t p = t % 2 ? 3 : 7;
      const FpRep m = random_rep(q, d, p, rng);
      const FpRep n = random_rep(q, e, p, rng);
      REQUIRE_MESSAGE(hom_dim(m, n) - ext1_dim(m, n) == euler_form(q, d, e), "d=", dim_to_string(d),
                      " e=", dim_to_string(e));
    }
  }

  TEST_CASE("explorer state is the fold of committed mutations (100 sessions)") {
    Rng rng(606);
    ExplorerService svc;
    const std::vector<std::string> graphs = {"a2", "a3", "d4"};
    for (int t = 0; t < 100; ++t) {
      const std::string name = graphs[t % graphs.size()];
      const auto created = svc.handle("POST", "/session", nlohmann::json{{"graph", name}, {"frame", "x"}}.dump());
      REQUIRE(created.status == 201);
      const std::string id = created.body["id"];
      const Seed initial = initial_seed(build_x_quiver(builtin_graph(name)));
      std::vector<std::string> committed;
      const auto& cols = initial.matrix.columns();
      std::uniform_int_distribution<std::size_t> pick(0, cols.size() - 1);
      std::uniform_int_distribution<int> action(0, 3);
      for (int step = 0; step < 8; ++step) {
        const std::string v = cols[pick(rng)];
        switch (action(rng)) {
          case 0:
          case 1:
            REQUIRE(svc.handle("POST", "/session/" + id + "/mutate", nlohmann::json{{"vertex", v}}.dump()).status == 200);
            committed.push_back(v);
            break;
          case 2:
            REQUIRE(svc.handle("GET", "/session/" + id + "/whatif/" + v, "").status == 200);
            break;
          default: {
            const auto r = svc.handle("POST", "/session/" + id + "/undo", "");
            REQUIRE(r.status == (committed.empty() ? 409 : 200));
            if (!committed.empty()) committed.pop_back();
          }
        }
      }
      const auto shown = svc.handle("GET", "/session/" + id, "");
      REQUIRE(shown.body["seed"] == mutate_along(initial, committed).to_json());
      REQUIRE(shown.body["history"] == nlohmann::json(committed));
    }
  }
}
