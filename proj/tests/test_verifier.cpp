#include <doctest.h>

#include "cq/verifier.hpp"

using namespace cq;

TEST_SUITE("verifier") {
  TEST_CASE("t-system on small types") {
    for (const char* name : {"a2", "a3", "a4", "d4", "kronecker"}) {
      const Report r = verify_t_system(builtin_graph(name));
      CHECK_MESSAGE(r.passed(), r.to_table());
      CHECK(r.count(Status::pass) == builtin_graph(name).size());
    }
  }

  TEST_CASE("t-system on an edgeless graph") {
    const BipartiteGraph g({"a", "b"}, {});
    const Report r = verify_t_system(g);
    CHECK(r.passed());
    CHECK(r.cases.size() == 2);
  }

  TEST_CASE("corrupted character is caught with a witness") {
    const BipartiteGraph g = builtin_graph("a2");
    const Report r = verify_t_system_with(g, [&](const GradedDim& w) {
      QCharacter chi = truncated_character(g, w);
      if (w == kr_module(g, 0)) chi.poly += LaurentPoly(1);
      return chi;
    });
    CHECK_FALSE(r.passed());
    CHECK(r.count(Status::fail) == 1);
    const auto& bad = r.cases.front();
    CHECK(bad.status == Status::fail);
    CHECK(bad.witness.contains("lhs"));
    CHECK(bad.witness.contains("rhs"));
  }

  TEST_CASE("module lookup from g-vectors") {
    const BipartiteGraph g = builtin_graph("a3");
    CHECK(module_for_g_vector(g, {-1, 0, 0}) == from_principal_dims(g, {1, 0, 0}));
    CHECK(module_for_g_vector(g, {0, 1, 0}) == from_principal_dims(g, {0, 1, 0}));
    CHECK(module_for_g_vector(g, {0, -1, 0}) == frozen_simple(g, 1));
    CHECK_FALSE(module_for_g_vector(g, {1, 0, 0}).has_value());
  }

  TEST_CASE("z-seed images are the expected characters") {
    const BipartiteGraph g = builtin_graph("a3");
    const auto images = z_seed_characters(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const GradedDim w = g.parity(i) == 0 ? frozen_simple(g, i) : principal_simple(g, i);
      CHECK(images.at("z" + g.id(i)) == truncated_character(g, w).poly);
      CHECK(images.at("f" + g.id(i)) == truncated_character(g, kr_module(g, i)).poly);
    }
  }

  TEST_CASE("HL correspondence on A2") {
    const Report r = verify_hl_correspondence(builtin_graph("a2"));
    CHECK_MESSAGE(r.passed(), r.to_table());
    CHECK(r.count(Status::pass) == 4);  // closure plus three variables
  }

  TEST_CASE("common clusters on A2 and A3") {
    for (const char* name : {"a2", "a3"}) {
      const Report r = verify_common_cluster(builtin_graph(name));
      CHECK_MESSAGE(r.passed(), r.to_table());
    }
  }

  TEST_CASE("positivity on A2") {
    const Report r = verify_positivity(builtin_graph("a2"));
    CHECK(r.passed());
    CHECK(r.cases.size() == 3);
  }

  TEST_CASE("odd vanishing on Kronecker real roots") {
    const Quiver k = principal_decorated_part(builtin_graph("kronecker"));
    const Report r = verify_odd_vanishing(k, {{0, 1}, {1, 2}, {2, 3}, {1, 0}, {2, 1}, {3, 2}}, {2, 3, 5, 7, 11, 13});
    CHECK_MESSAGE(r.passed(), r.to_table());
    CHECK(r.cases.size() == 6);
  }

  TEST_CASE("non-rigid dimensions are reported, not checked") {
    const Quiver k = principal_decorated_part(builtin_graph("kronecker"));
    const Report r = verify_odd_vanishing(k, 1, {2, 3, 5, 7});
    CHECK(r.passed());
    REQUIRE(r.count(Status::info) == 1);
    CHECK(r.cases.back().detail.find("(1,1)") != std::string::npos);
  }

  TEST_CASE("factorizations on a few random W") {
    const Report r = verify_factorizations(builtin_graph("a2"), 5, 1);
    CHECK_MESSAGE(r.passed(), r.to_table());
    CHECK(r.cases.size() == 5);
  }

  TEST_CASE("reports are stable for a fixed seed") {
    const BipartiteGraph g = builtin_graph("a2");
    const std::string a = verify_factorizations(g, 3, 1).to_json(false).dump();
    const std::string b = verify_factorizations(g, 3, 1).to_json(false).dump();
    CHECK(a == b);
    CHECK(verify_t_system(g).to_table(false) == verify_t_system(g).to_table(false));
    const nlohmann::json j = verify_t_system(g).to_json();
    CHECK(j["status"] == "PASS");
    CHECK(j.contains("seconds"));
  }
}
