#include <doctest.h>

#include "operadix/quadratic.hpp"

using namespace operadix;

namespace {
template <class S>
bool same_row_space(const quadratic_presentation<S>& a,
                    const quadratic_presentation<S>& b) {
  return a.relations == b.relations;  // both are rref-normalized
}
}  // namespace

TEST_CASE("ta presentation rows span the stated relations") {
  auto p = ta_presentation<rat>(3, 0);
  CHECK(p.gen.arity_n == 3);
  CHECK(p.gen.degree_d == 0);
  quadratic_presentation<rat> expected(
      p.gen, {{rat(1), rat(-1), rat(0)}, {rat(1), rat(0), rat(-1)}});
  CHECK(same_row_space(p, expected));

  auto classic = ta_presentation<rat>(2, 0);
  CHECK(classic.relations == std::vector<std::vector<rat>>{{rat(1), rat(-1)}});

  CHECK(ta_presentation<rat>(4, 0).relation_rank() == 3);
  CHECK_THROWS_AS(ta_presentation<rat>(1, 0), std::invalid_argument);
}

TEST_CASE("pa presentation carries the alternating sign row") {
  CHECK(pa_presentation<rat>(3, 1).relations ==
        std::vector<std::vector<rat>>{{rat(1), rat(1), rat(1)}});
  CHECK(pa_presentation<rat>(4, 2).relations ==
        std::vector<std::vector<rat>>{{rat(1), rat(-1), rat(1), rat(-1)}});
  CHECK(pa_presentation<rat>(2, 0).relations ==
        std::vector<std::vector<rat>>{{rat(1), rat(-1)}});
}

TEST_CASE("koszul dual of total associativity is partial associativity") {
  auto d3 = koszul_dual(ta_presentation<rat>(3, 0));
  CHECK(d3.gen.symbol == "mu*");
  CHECK(d3.gen.degree_d == 1);
  CHECK(d3.relations == std::vector<std::vector<rat>>{{rat(1), rat(1), rat(1)}});

  auto d4 = koszul_dual(ta_presentation<rat>(4, 0));
  CHECK(d4.gen.degree_d == 2);
  CHECK(d4.relations ==
        std::vector<std::vector<rat>>{{rat(1), rat(-1), rat(1), rat(-1)}});

  for (int n = 2; n <= 6; ++n)
    for (int d = 0; d <= 2; ++d) {
      auto dual = koszul_dual(ta_presentation<rat>(n, d));
      auto pa = pa_presentation<rat>(n, -d + n - 2);
      CHECK(dual.gen.degree_d == pa.gen.degree_d);
      CHECK(dual.relations == pa.relations);
    }
}

TEST_CASE("double dual restores the row space and degree") {
  for (int n : {2, 3, 4})
    for (int d : {0, 1}) {
      for (auto* fam : {"ta", "pa"}) {
        auto p = std::string(fam) == "ta" ? ta_presentation<rat>(n, d)
                                          : pa_presentation<rat>(n, d);
        auto dd = koszul_dual(koszul_dual(p));
        CHECK(dd.gen.degree_d == p.gen.degree_d);
        CHECK(dd.relations == p.relations);
      }
    }
}

TEST_CASE("relation rank and dual rank sum to n") {
  for (int n = 2; n <= 6; ++n)
    for (int d = 0; d <= 2; ++d) {
      for (auto* fam : {"ta", "pa"}) {
        auto p = std::string(fam) == "ta" ? ta_presentation<rat>(n, d)
                                          : pa_presentation<rat>(n, d);
        auto dual = koszul_dual(p);
        CHECK(p.relation_rank() + dual.relation_rank() == static_cast<std::size_t>(n));
      }
    }
}

TEST_CASE("dual relations are orthogonal to the primal ones") {
  for (int n = 2; n <= 5; ++n) {
    auto p = ta_presentation<rat>(n, 0);
    auto dual = koszul_dual(p);
    for (const auto& r_dual : dual.relation_elements())
      for (const auto& r : p.relation_elements())
        CHECK(pairing(r_dual, r) == rat(0));
  }
}

TEST_CASE("zero relation space dualizes to the full space") {
  generator_spec g("mu", 3, 0);
  quadratic_presentation<rat> free_pres(g, {});
  auto dual = koszul_dual(free_pres);
  CHECK(dual.relation_rank() == 3);
  CHECK(koszul_dual(dual).relation_rank() == 0);
}

TEST_CASE("presentations work over prime fields") {
  gf::scoped_modulus guard(3);
  auto p = ta_presentation<gf>(3, 0);
  auto dual = koszul_dual(p);
  CHECK(dual.relations == std::vector<std::vector<gf>>{{gf(1), gf(1), gf(1)}});
  // over GF(3) the pa row [1,1,1] equals [1,-2,1]; rank stays 1
  CHECK(pa_presentation<gf>(3, 1).relation_rank() == 1);
}
