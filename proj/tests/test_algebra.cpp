#include <doctest.h>

#include <random>

#include "edgereg/errors.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/ideal.hpp"
#include "oracles.hpp"

using namespace edgereg::algebra;
namespace graph = edgereg::graph;

namespace {

MonomialIdeal ideal(int vars, std::string_view text) { return parse_ideal(text, vars); }
Monomial mono(int vars, std::string_view text) { return parse_monomial(text, vars); }

}  // namespace

TEST_CASE("monomial syntax") {
  CHECK(mono(2, "x0^2*x1") == Monomial{2, 1});
  CHECK(mono(3, "1").is_unit());
  CHECK(Monomial{2, 1, 0}.to_string() == "x0^2*x1");
  CHECK(Monomial(3).to_string() == "1");
  CHECK(mono(3, " x2 * x0 ") == Monomial{1, 0, 1});
  CHECK(mono(2, "x0*x0") == Monomial{2, 0});
  CHECK_THROWS_AS(mono(2, "x2"), edgereg::ParseError);
  CHECK_THROWS_AS(mono(2, "y0"), edgereg::ParseError);
  CHECK_THROWS_AS(mono(2, "x0^"), edgereg::ParseError);
  CHECK_THROWS_AS(mono(2, ""), edgereg::ParseError);
  CHECK(max_variable_index_plus_one("x0^2, x7*x1") == 8);

  std::mt19937 rng(1);
  for (int t = 0; t < 100; ++t) {
    auto i = oracle::random_ideal(rng, 5, 4, 3);
    CHECK(parse_ideal(i.to_string(), i.variable_count()) == i);
  }
}

TEST_CASE("monomial arithmetic") {
  const Monomial a{2, 1, 0}, b{1, 3, 1};
  CHECK(a * b == Monomial{3, 4, 1});
  CHECK(lcm(a, b) == Monomial{2, 3, 1});
  CHECK(gcd(a, b) == Monomial{1, 1, 0});
  CHECK((a * b) / b == a);
  CHECK_THROWS_AS(a / b, std::invalid_argument);
  CHECK(Monomial{0, 1, 0}.as_variable() == 1);
  CHECK_FALSE(Monomial{1, 1, 0}.as_variable());
  CHECK(grlex_less(Monomial{0, 2}, Monomial{1, 1}));
  CHECK(grlex_less(Monomial{1, 0}, Monomial{0, 2}));
  CHECK_THROWS(Monomial{1, 0}.divides(Monomial{1, 0, 0}));
  CHECK(Monomial{1, 2}.embed(4) == Monomial{1, 2, 0, 0});
}

TEST_CASE("edge ideals") {
  CHECK(edge_ideal(graph::complete(2)) == ideal(2, "x0*x1"));
  const auto c4 = edge_ideal(graph::cycle(4));
  CHECK(c4.size() == 4);
  CHECK(c4 == ideal(4, "x0*x1, x1*x2, x2*x3, x0*x3"));
  CHECK(edge_ideal(graph::path(3)) == ideal(3, "x0*x1, x1*x2"));
  CHECK_THROWS_AS(edge_ideal(graph::empty_graph(3)), std::domain_error);
  // An isolated vertex only widens the ring.
  CHECK(edge_ideal(graph::Graph(3, {{0, 1}})).variable_count() == 3);
}

TEST_CASE("minimalization") {
  CHECK(ideal(2, "x0, x0*x1") == ideal(2, "x0"));
  CHECK(ideal(2, "x0^2, x0*x1, x0^2*x1").size() == 2);
  CHECK(MonomialIdeal(3, {}).is_zero());
  CHECK(ideal(2, "x0, 1").is_unit());
  CHECK(ideal(2, "(0)").is_zero());
}

TEST_CASE("sums, products, powers") {
  CHECK(power(edge_ideal(graph::complete(2)), 2) == ideal(2, "x0^2*x1^2"));
  CHECK(power(ideal(2, "x0, x1"), 2) == ideal(2, "x0^2, x0*x1, x1^2"));
  const auto p3 = power(edge_ideal(graph::path(3)), 2);
  CHECK(p3 == ideal(3, "x0^2*x1^2, x0*x1^2*x2, x1^2*x2^2"));
  CHECK(power(ideal(2, "x0"), 0).is_unit());
  CHECK(sum(ideal(3, "x0*x1"), ideal(3, "x0")) == ideal(3, "x0"));
  CHECK_THROWS(sum(ideal(2, "x0"), ideal(3, "x0")));

  std::mt19937 rng(2);
  for (int t = 0; t < 30; ++t) {
    auto g = oracle::random_graph(rng, 5, 0.5);
    if (g.edge_count() == 0) continue;
    const auto i = edge_ideal(g);
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; b <= 2; ++b) REQUIRE(power(i, a + b) == product(power(i, a), power(i, b)));
    }
  }
}

TEST_CASE("single degree") {
  CHECK(generated_in_single_degree(edge_ideal(graph::cycle(4))) == 2);
  CHECK(generated_in_single_degree(power(edge_ideal(graph::cycle(4)), 3)) == 6);
  CHECK_FALSE(generated_in_single_degree(ideal(2, "x0, x1^2")));
  CHECK_THROWS_AS(generated_in_single_degree(MonomialIdeal::zero(2)), std::domain_error);
}

TEST_CASE("colon ideals") {
  CHECK(colon(ideal(3, "x0*x1, x1*x2"), mono(3, "x1")) == ideal(3, "x0, x2"));
  CHECK(colon(ideal(2, "x0*x1"), mono(2, "x0*x1")).is_unit());
  CHECK(colon(ideal(3, "x0*x1"), mono(3, "x1*x2")) == ideal(3, "x0"));

  std::mt19937 rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto i = oracle::random_ideal(rng, 4, 5, 3);
    const int n = i.variable_count();
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n));
    for (auto& x : e) x = rng() % 3;
    const Monomial m(e);
    const auto q = colon(i, m);
    CHECK(q.is_unit() == i.contains(m));
    for (const auto& g : q.generators()) {
      REQUIRE(oracle::in_ideal(i.generators(), g * m));  // m (I : m) ⊆ I
    }
    // Every monomial u with u m in I is a multiple of a colon generator.
    for (const auto& u : oracle::monomials_up_to(n, 4)) {
      REQUIRE(oracle::in_ideal(i.generators(), u * m) == q.contains(u));
    }
  }
}

TEST_CASE("intersections") {
  CHECK(intersection(ideal(2, "x0"), ideal(2, "x1")) == ideal(2, "x0*x1"));
  CHECK(intersection(ideal(2, "x0^2"), ideal(2, "x0*x1, x1^2")) == ideal(2, "x0^2*x1"));
  const auto i = ideal(3, "x0*x1, x2^2");
  CHECK(intersection(i, MonomialIdeal::unit(3)) == i);

  SUBCASE("agrees with degree-bounded membership") {
    std::mt19937 rng(6);
    for (int t = 0; t < 60; ++t) {
      const auto a = oracle::random_ideal(rng, 4, 3, 2);
      auto b = oracle::random_ideal(rng, 4, 3, 2);
      if (b.variable_count() != a.variable_count()) b = b.embed(std::max(a.variable_count(), b.variable_count()));
      const auto a2 = a.embed(b.variable_count());
      const auto both = intersection(a2, b);
      for (const auto& m : oracle::monomials_up_to(b.variable_count(), 8)) {
        REQUIRE((oracle::in_ideal(a2.generators(), m) && oracle::in_ideal(b.generators(), m)) ==
                oracle::in_ideal(both.generators(), m));
      }
    }
  }
}

TEST_CASE("variable ideals") {
  CHECK(is_generated_by_variables(ideal(3, "x0, x2")));
  CHECK_FALSE(is_generated_by_variables(ideal(2, "x0*x1")));
  CHECK_FALSE(is_generated_by_variables(MonomialIdeal::unit(2)));
  CHECK_FALSE(is_generated_by_variables(MonomialIdeal::zero(2)));
  CHECK(variable_ideal(4, graph::VertexSet{1, 3}) == ideal(4, "x1, x3"));
}

TEST_CASE("colons of powers by their generators stay inside the colon") {
  for (const auto& g : {graph::cycle(5), graph::path(4), graph::anticycle(6)}) {
    for (int k = 1; k <= 3; ++k) {
      const auto ik = power(edge_ideal(g), k);
      for (const auto& l : ik.generators()) {
        const auto q = colon(ik, l);
        for (const auto& u : q.generators()) REQUIRE(ik.contains(u * l));
      }
    }
  }
}

TEST_CASE("ordered generators") {
  const auto i = ideal(3, "x0*x1, x1*x2, x0*x2");
  const auto canonical = ordered_generators(i);
  CHECK(canonical == std::vector<Monomial>{mono(3, "x0*x1"), mono(3, "x0*x2"), mono(3, "x1*x2")});
  const std::vector<Monomial> custom{mono(3, "x1*x2"), mono(3, "x0*x1"), mono(3, "x0*x2")};
  CHECK(ordered_generators(i, custom) == custom);
  const std::vector<Monomial> bad{mono(3, "x1*x2"), mono(3, "x0*x1")};
  CHECK_THROWS_AS(ordered_generators(i, bad), std::invalid_argument);
}
