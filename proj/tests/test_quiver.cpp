#include <doctest.h>

#include <algorithm>
#include <set>

#include "cq/graph.hpp"
#include "cq/quiver.hpp"

using namespace cq;

namespace {

std::set<std::pair<std::string, std::string>> arrow_ids(const Quiver& q) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [a, b] : q.arrow_list()) out.emplace(q.vertex(a).id, q.vertex(b).id);
  return out;
}

Quiver a2() { return Quiver({{"1"}, {"2"}}, {{"1", "2"}}); }

}  // namespace

TEST_SUITE("quiver") {
  TEST_CASE("exchange matrix sign convention") {
    const ExchangeMatrix b = to_matrix(a2());
    CHECK(b.at("2", "1") == 1);
    CHECK(b.at("1", "2") == -1);
    CHECK(b.at("1", "1") == 0);
  }

  TEST_CASE("matrix round trip keeps the x-quiver") {
    const Quiver q = build_x_quiver(builtin_graph("a3"));
    CHECK(from_matrix(to_matrix(q)) == q);
    CHECK(to_matrix(q).row_count() == 6);
    CHECK(to_matrix(q).column_count() == 3);
  }

  TEST_CASE("non-skew principal block is rejected") {
    CHECK_THROWS_AS(ExchangeMatrix({{"1"}, {"2"}}, {"1", "2"}, {0, 1, 1, 0}), QuiverError);
  }

  TEST_CASE("A2 mutation flips every sign") {
    const ExchangeMatrix b = to_matrix(a2());
    const ExchangeMatrix m = mutate_matrix(b, "1");
    CHECK(m.at("2", "1") == -1);
    CHECK(m.at("1", "2") == 1);
  }

  TEST_CASE("mutation through a vertex adds the composite arrow") {
    const Quiver q({{"i"}, {"k"}, {"j"}}, {{"i", "k"}, {"k", "j"}});
    const Quiver m = from_matrix(mutate_matrix(to_matrix(q), "k"));
    CHECK(arrow_ids(m) == std::set<std::pair<std::string, std::string>>{{"k", "i"}, {"j", "k"}, {"i", "j"}});
  }

  TEST_CASE("composite arrow cancels an opposite arrow") {
    const Quiver q({{"i"}, {"k"}, {"j"}}, {{"i", "k"}, {"k", "j"}, {"j", "i"}});
    const Quiver m = from_matrix(mutate_matrix(to_matrix(q), "k"));
    CHECK(m.arrows_between(m.index_of("i"), m.index_of("j")) == 0);
    CHECK(m.arrows_between(m.index_of("j"), m.index_of("i")) == 0);
  }

  TEST_CASE("mutation at a frozen vertex is rejected") {
    const ExchangeMatrix b = to_matrix(build_x_quiver(builtin_graph("a2")));
    CHECK_THROWS(mutate_matrix(b, "1'"));
  }

  TEST_CASE("invalid quivers") {
    CHECK_THROWS_AS(Quiver({{"1"}}, {{"1", "1"}}), QuiverError);
    CHECK_THROWS_AS(Quiver({{"1"}, {"2"}}, {{"1", "2"}, {"2", "1"}}), QuiverError);
    CHECK_THROWS_AS(Quiver({{"a", true}, {"b", true}}, {{"a", "b"}}), QuiverError);
    CHECK_THROWS_AS(Quiver({{"1"}}, {{"1", "9"}}), QuiverError);
    CHECK_THROWS_AS(Quiver({{"1"}, {"1"}}, {}), QuiverError);
  }

  TEST_CASE("multiplicities and topological order") {
    const Quiver k({{"1"}, {"2"}}, {{"2", "1"}, {"2", "1"}});
    CHECK(k.arrows_between(1, 0) == 2);
    CHECK(k.arrow_total() == 2);
    CHECK(k.topological_order() == std::vector<std::size_t>{1, 0});
    CHECK(k.is_sink(0));
    CHECK(k.is_source(1));
    const Quiver cyc({{"1"}, {"2"}, {"3"}}, {{"1", "2"}, {"2", "3"}, {"3", "1"}});
    CHECK_FALSE(cyc.is_acyclic());
    CHECK_THROWS_AS(cyc.topological_order(), QuiverError);
  }

  TEST_CASE("bipartition by 2-colouring") {
    const BipartiteGraph a3 = builtin_graph("a3");
    CHECK(a3.parity(0) == 0);
    CHECK(a3.parity(1) == 1);
    CHECK(a3.parity(2) == 0);
    const BipartiteGraph flipped = builtin_graph("a3", std::vector<std::string>{"2"});
    CHECK(flipped.parity(1) == 0);
    CHECK(flipped.parity(0) == 1);
    CHECK_THROWS(BipartiteGraph({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"3", "1"}}));
    CHECK_THROWS(builtin_graph("a3", std::vector<std::string>{"1", "2"}));
    CHECK_THROWS(builtin_graph("x9"));
  }

  TEST_CASE("kronecker and d4 shapes") {
    const BipartiteGraph k = builtin_graph("kronecker");
    CHECK(k.adjacency(0, 1) == 2);
    CHECK(k.cartan(0, 1) == -2);
    const BipartiteGraph d4 = builtin_graph("d4");
    CHECK(d4.neighbours(1).size() == 3);
    CHECK(d4.edges().size() == 3);
  }

  TEST_CASE("decorated quiver of A3") {
    const Quiver q = build_decorated(builtin_graph("a3", std::vector<std::string>{"1", "3"}));
    CHECK(arrow_ids(q) == std::set<std::pair<std::string, std::string>>{
                              {"2", "1"}, {"2", "3"}, {"1'", "1"}, {"3'", "3"}, {"2", "2'"}});
    CHECK(q.size() == 6);
    CHECK(q.vertex(3).frozen);
  }

  TEST_CASE("x-quiver and z-quiver of A3") {
    const BipartiteGraph g = builtin_graph("a3");
    CHECK(arrow_ids(build_x_quiver(g)) == std::set<std::pair<std::string, std::string>>{
                                             {"1", "2"}, {"3", "2"}, {"1'", "1"}, {"3'", "3"}, {"2", "2'"}});
    CHECK(arrow_ids(build_z_quiver(g)) ==
          std::set<std::pair<std::string, std::string>>{
              {"1", "2'"}, {"2", "1"}, {"2", "3"}, {"3", "2'"}, {"1'", "1"}, {"2'", "2"}, {"3'", "3"}});
    CHECK(arrow_ids(build_principal_decoration(g)) ==
          std::set<std::pair<std::string, std::string>>{
              {"2", "1"}, {"2", "3"}, {"1", "1'"}, {"2", "2'"}, {"3", "3'"}});
  }

  TEST_CASE("json round trips") {
    const Quiver q = build_z_quiver(builtin_graph("d4"));
    CHECK(Quiver::from_json(q.to_json()) == q);
    const ExchangeMatrix b = to_matrix(q);
    CHECK(ExchangeMatrix::from_json(b.to_json()) == b);
    const BipartiteGraph g = builtin_graph("kronecker");
    const BipartiteGraph back = BipartiteGraph::from_json(g.to_json());
    CHECK(back.adjacency(0, 1) == 2);
    CHECK(back.parity(1) == 1);
  }

  TEST_CASE("reflection and opposite") {
    const Quiver q = principal_decorated_part(builtin_graph("a3"));
    const Quiver r = q.reflected_at(1);
    CHECK(r.is_sink(1));
    CHECK(q.opposite().opposite() == q);
  }
}
