#include <doctest.h>

#include <algorithm>

#include "cq/graded.hpp"
#include "cq/graph.hpp"
#include "cq/rep.hpp"

using namespace cq;

namespace {

std::vector<DimVector> sorted(std::vector<DimVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// 2 -> 1 twice
Quiver kronecker() { return principal_decorated_part(builtin_graph("kronecker")); }

}  // namespace

TEST_SUITE("rep") {
  TEST_CASE("euler form") {
    const Quiver k = kronecker();
    CHECK(euler_form(k, {1, 1}, {1, 1}) == 0);
    CHECK(euler_form(k, {1, 2}, {1, 2}) == 1);
    const Quiver a2({{"1"}, {"2"}}, {{"1", "2"}});
    CHECK(euler_form(a2, {1, 0}, {0, 1}) == -1);
    CHECK(euler_form(a2, {0, 1}, {1, 0}) == 0);
  }

  TEST_CASE("hom and ext between simples of 1 -> 2") {
    const Quiver q({{"1"}, {"2"}}, {{"1", "2"}});
    Rng rng(1);
    const FpRep s1 = random_rep(q, {1, 0}, 5, rng);
    const FpRep s2 = random_rep(q, {0, 1}, 5, rng);
    CHECK(hom_dim(s1, s2) == 0);
    CHECK(ext1_dim(s1, s2) == 1);
    CHECK(ext1_dim(s2, s1) == 0);
    CHECK(hom_dim(s1, s1) == 1);
  }

  TEST_CASE("generic ext and hom on the Kronecker quiver") {
    Rng rng(3);
    const Quiver k = kronecker();
    // two generic regular modules sit at different points of the projective line
    CHECK(generic_ext(k, {1, 1}, {1, 1}, 101, 5, rng) == 0);
    CHECK(generic_hom(k, {1, 1}, {1, 1}, 101, 5, rng) == 0);
    CHECK(generic_self_ext(k, {1, 1}, 101, 5, rng) == 1);
    CHECK(generic_ext(k, {1, 2}, {1, 2}, 101, 5, rng) == 0);
    CHECK(generic_self_ext(k, {1, 2}, 101, 5, rng) == 0);
    // vertex 1 is the sink, so its simple is projective
    CHECK(generic_hom(k, {1, 0}, {1, 1}, 101, 5, rng) == 1);
    CHECK(generic_hom(k, {1, 1}, {1, 0}, 101, 5, rng) == 0);
  }

  TEST_CASE("generic representations over F_2 reach the open orbit") {
    // fewer than one random draw in a hundred is rigid here
    const Quiver q = build_principal_decoration(builtin_graph("a3"));
    const Quiver d4 = build_principal_decoration(builtin_graph("d4"));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      Rng rng(seed);
      const FpRep m = generic_rep(q, {2, 4, 2, 2, 2, 2}, 2, rng);
      CHECK(ext1_dim(m, m) == 0);
      // a single real Schur root, reached only 4% of the time by random draws
      const FpRep root = generic_rep(q, {1, 2, 1, 1, 1, 0}, 2, rng);
      CHECK(ext1_dim(root, root) == 0);
      // real root of a wild decorated quiver, rigid over a large field
      const DimVector ones(8, 1);
      REQUIRE(euler_form(d4, ones, ones) == 1);
      REQUIRE(generic_self_ext(d4, ones, 101, 5, rng) == 0);
      const FpRep big = generic_rep(d4, ones, 2, rng);
      CHECK(ext1_dim(big, big) == 0);
      // Dynkin support inside the wild quiver
      const FpRep partial = generic_rep(d4, {1, 2, 1, 0, 1, 1, 0, 0}, 2, rng);
      CHECK(ext1_dim(partial, partial) == 0);
      CHECK(partial.dims() == DimVector{1, 2, 1, 0, 1, 1, 0, 0});
    }
  }

  TEST_CASE("canonical decompositions") {
    Rng rng(11);
    const Quiver k = kronecker();
    CHECK(canonical_decomposition(k, {2, 2}, 101, 5, rng) == std::vector<DimVector>{{1, 1}, {1, 1}});
    CHECK(canonical_decomposition(k, {1, 2}, 101, 5, rng) == std::vector<DimVector>{{1, 2}});
    CHECK(sorted(canonical_decomposition(k, {2, 1}, 101, 5, rng)) == std::vector<DimVector>{{2, 1}});
    CHECK(sorted(canonical_decomposition(k, {3, 1}, 101, 5, rng)) ==
          std::vector<DimVector>{{1, 0}, {2, 1}});
    const Quiver a3 = principal_decorated_part(builtin_graph("a3"));
    CHECK(canonical_decomposition(a3, {1, 1, 1}, 101, 5, rng) == std::vector<DimVector>{{1, 1, 1}});
    CHECK(sorted(canonical_decomposition(a3, {1, 0, 1}, 101, 5, rng)) ==
          std::vector<DimVector>{{0, 0, 1}, {1, 0, 0}});
    CHECK(sorted(canonical_decomposition(a3, {2, 1, 0}, 101, 5, rng)) ==
          std::vector<DimVector>{{1, 0, 0}, {1, 1, 0}});
  }

  TEST_CASE("schur roots") {
    Rng rng(2);
    const Quiver k = kronecker();
    CHECK(is_schur_root(k, {1, 1}, 101, 5, rng));
    CHECK_FALSE(is_real_schur(k, {1, 1}, 101, 5, rng));
    CHECK(is_real_schur(k, {2, 3}, 101, 5, rng));
    CHECK_FALSE(is_schur_root(k, {2, 2}, 101, 5, rng));
  }

  TEST_CASE("absolute splitting degree") {
    Rng rng(4);
    CHECK(absolute_splitting_degree(generic_rep(kronecker(), {1, 1}, 7, rng)) == 1);
    // maps I and the companion matrix of x^2 + 1, irreducible mod 7: one block over F_7, two over F_49
    const FpMatrix id = FpMatrix::identity(2, 7);
    const FpMatrix rot = FpMatrix::from_rows({{0, -1}, {1, 0}}, 2, 7);
    const FpRep m(kronecker(), 7, {2, 2}, {id, rot});
    CHECK(decompose_indecomposables(m, rng).size() == 1);
    CHECK(absolute_splitting_degree(m) == 2);
  }

  TEST_CASE("decomposition into indecomposables") {
    Rng rng(9);
    const Quiver k = kronecker();
    const FpRep a = generic_rep(k, {1, 2}, 13, rng);
    const FpRep b = generic_rep(k, {1, 0}, 13, rng);
    const auto parts = decompose_indecomposables(direct_sum(a, b), rng);
    std::vector<DimVector> dims;
    for (const auto& part : parts) dims.push_back(part.dims());
    CHECK(sorted(dims) == std::vector<DimVector>{{1, 0}, {1, 2}});
    CHECK(is_isomorphic(direct_sum(a, b), direct_sum(b, a), rng));
    CHECK_FALSE(is_isomorphic(a, direct_sum(b, generic_rep(k, {0, 2}, 13, rng)), rng));
  }

  TEST_CASE("reflection at a sink and a source") {
    Rng rng(6);
    const Quiver q = principal_decorated_part(builtin_graph("a3"));  // 2 -> 1, 2 -> 3
    const FpRep m = generic_rep(q, {1, 1, 0}, 11, rng);
    const FpRep r = reflect(m, 0);  // sink 1: kernel construction
    CHECK(r.dims() == DimVector{0, 1, 0});
    const FpRep s = reflect(generic_rep(q, {0, 1, 1}, 11, rng), 1);  // source 2: cokernel
    CHECK(s.dims() == DimVector{0, 0, 1});
    CHECK(r.quiver().is_source(0));
  }

  TEST_CASE("duality") {
    Rng rng(8);
    const FpRep m = generic_rep(kronecker(), {1, 2}, 5, rng);
    const FpRep d = dual(m);
    CHECK(d.dims() == m.dims());
    CHECK(d.quiver() == m.quiver().opposite());
    CHECK(hom_dim(dual(d), m) == 1);
  }

  TEST_CASE("subrepresentations and restriction") {
    Rng rng(12);
    const Quiver q({{"1"}, {"2"}}, {{"1", "2"}});
    const FpRep m = generic_rep(q, {1, 1}, 7, rng);
    const FpMatrix zero(1, 0, 7);
    const FpMatrix one = FpMatrix::identity(1, 7);
    CHECK(is_subrep(m, {zero, one}));
    CHECK_FALSE(is_subrep(m, {one, zero}));
    CHECK(restrict_to(m, {zero, one}).dims() == DimVector{0, 1});
  }

  TEST_CASE("json and validation") {
    Rng rng(1);
    const FpRep m = random_rep(kronecker(), {2, 1}, 5, rng);
    const FpRep back = FpRep::from_json(m.to_json());
    CHECK(back.maps() == m.maps());
    CHECK(back.dims() == m.dims());
    CHECK_THROWS(FpRep(kronecker(), 5, {1, 1}, {}));
    CHECK(dim_to_string({1, 2}) == "(1,2)");
  }

  TEST_CASE("sigma construction on representations") {
    const BipartiteGraph g = builtin_graph("a3");
    Rng rng(2);
    const DimVector d = to_decorated_dims(g, kr_module(g, 1));
    const FpRep m = generic_rep(build_decorated(g), d, 7, rng);
    const FpRep s = sigma_rep(g, m);
    CHECK(s.quiver() == build_principal_decoration(g));
    CHECK(s.dims() == to_decorated_dims(g, sigma_dim(g, kr_module(g, 1))));
  }
}
