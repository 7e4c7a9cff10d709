#include <doctest.h>

#include "operadix/element.hpp"

using namespace operadix;

namespace {
element<rat> gen_element(const generator_spec& g) {
  return element<rat>::from_monomial(g, planar_tree::corolla(g.arity_n));
}
}  // namespace

TEST_CASE("compose grafts monomials, sign-free in degree zero") {
  generator_spec mu("mu", 3, 0);
  auto g = gen_element(mu);
  auto cor = planar_tree::corolla(3);

  auto left = compose(g, 1, g);
  CHECK(left.term_count() == 1);
  CHECK(left.coeff(cor.graft(1, cor)) == rat(1));

  // every composition of even generators carries sign +1
  for (int i = 1; i <= 3; ++i) {
    auto e = compose(g, i, g);
    for (int j = 1; j <= e.arity(); ++j) {
      auto deeper = compose(e, j, g);
      for (const auto& [t, c] : deeper.terms()) CHECK(c == rat(1));
    }
  }

  CHECK_THROWS_AS(compose(g, 0, g), std::out_of_range);
  CHECK_THROWS_AS(compose(g, 4, g), std::out_of_range);
  generator_spec nu("nu", 4, 0);
  CHECK_THROWS_AS(compose(g, 1, gen_element(nu)), std::invalid_argument);
}

TEST_CASE("odd generators anticommute across disjoint slots") {
  generator_spec mus("mu*", 3, 1);
  auto g = gen_element(mus);
  auto lhs = compose(compose(g, 3, g), 1, g);
  auto rhs = compose(compose(g, 1, g), 5, g) * rat(-1);
  CHECK(lhs == rhs);
}

TEST_CASE("sequential and parallel axioms hold with Koszul signs") {
  for (int d : {0, 1, 2}) {
    generator_spec g("mu", 3, d);
    std::vector<element<rat>> mons;
    for (int w = 1; w <= 2; ++w)
      for (const auto& t : enumerate_trees(3, w))
        mons.push_back(element<rat>::from_monomial(g, t));

    for (const auto& a : mons)
      for (int i = 1; i <= a.arity(); ++i)
        for (const auto& b : mons) {
          for (int j = 1; j <= b.arity(); ++j)
            for (const auto& c : mons)
              CHECK(compose(compose(a, i, b), i + j - 1, c) ==
                    compose(a, i, compose(b, j, c)));
          for (int j = i + 1; j <= a.arity(); ++j)
            for (const auto& c : mons) {
              auto lhs = compose(compose(a, i, b), j + b.arity() - 1, c);
              auto rhs = compose(compose(a, j, c), i, b);
              bool negate =
                  d % 2 != 0 && (b.weight() * c.weight()) % 2 != 0;
              CHECK(lhs == (negate ? rhs * rat(-1) : rhs));
            }
        }
  }
}

TEST_CASE("elements form a vector space with canonical terms") {
  generator_spec mu("mu", 3, 0);
  auto cor = planar_tree::corolla(3);
  auto a = element<rat>::from_monomial(mu, cor.graft(1, cor), rat(2));
  auto b = element<rat>::from_monomial(mu, cor.graft(2, cor), rat(1, 3));

  auto s = a + b;
  CHECK(s.term_count() == 2);
  CHECK((s - a - b).is_zero());
  CHECK((a + (-a)).term_count() == 0);
  CHECK((a * rat(0)).is_zero());

  // terms iterate in ascending path glex order
  auto it = s.terms().begin();
  CHECK(it->first == cor.graft(1, cor));
  ++it;
  CHECK(it->first == cor.graft(2, cor));

  CHECK_THROWS_AS(a + element<rat>(mu, 3), std::invalid_argument);
}

TEST_CASE("pairing is the signed Kronecker delta on weight-2 monomials") {
  auto make = [](int n, int d, const char* sym, int slot) {
    generator_spec g(sym, n, d);
    auto cor = planar_tree::corolla(n);
    return element<rat>::from_monomial(g, cor.graft(slot, cor));
  };

  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(pairing(make(3, 1, "mu*", i), make(3, 0, "mu", j)) ==
            (i == j ? rat(1) : rat(0)));

  CHECK(pairing(make(4, 2, "mu*", 2), make(4, 0, "mu", 2)) == rat(-1));
  CHECK(pairing(make(4, 2, "mu*", 1), make(4, 0, "mu", 2)) == rat(0));

  for (int n : {3, 4, 5})
    for (int i = 1; i <= n; ++i) {
      rat v = pairing(make(n, n - 2, "mu*", i), make(n, 0, "mu", i));
      CHECK((v == rat(1) || v == rat(-1)));
      CHECK(v == rat(pairing_sign(n, i)));
    }

  // bilinearity
  auto d1 = make(3, 1, "mu*", 1) + make(3, 1, "mu*", 2) * rat(5);
  auto p1 = make(3, 0, "mu", 2) * rat(1, 2) - make(3, 0, "mu", 3);
  CHECK(pairing(d1, p1) == rat(5) * rat(1, 2));

  generator_spec mu("mu", 3, 0);
  auto bad = element<rat>::from_monomial(mu, planar_tree::corolla(3));
  CHECK_THROWS_AS(pairing(bad, bad), std::invalid_argument);
}
