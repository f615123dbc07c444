#include <doctest.h>

#include <random>

#include "edgereg/betti.hpp"
#include "edgereg/canonical.hpp"
#include "edgereg/errors.hpp"
#include "edgereg/ideal.hpp"
#include "edgereg/linalg.hpp"
#include "edgereg/linear_quotients.hpp"
#include "oracles.hpp"

using namespace edgereg::res;
using edgereg::algebra::edge_ideal;
using edgereg::algebra::parse_ideal;
using edgereg::algebra::parse_monomial;
namespace graph = edgereg::graph;

namespace {

const Field kQ = Field::rationals();
const Field kF2 = Field::prime_field(2);

BettiOptions over(const Field& f) {
  BettiOptions o;
  o.field = f;
  return o;
}

std::map<std::pair<int, int>, std::uint64_t> table_of(const graph::Graph& g, const Field& f) {
  return betti_table(edge_ideal(g), over(f)).entries();
}

}  // namespace

TEST_CASE("fields") {
  CHECK(Field::parse("Q").is_rationals());
  CHECK(Field::parse("QQ").is_rationals());
  CHECK(Field::parse("GF(2)") == kF2);
  CHECK(Field::parse("GF3").characteristic() == 3);
  CHECK(Field::parse("5").name() == "GF(5)");
  CHECK(kQ.name() == "Q");
  CHECK_THROWS(Field::parse("GF(4)"));
  CHECK_THROWS(Field::parse("R"));
  CHECK_THROWS_AS(Field::prime_field(1), std::invalid_argument);
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65523));
}

TEST_CASE("rank") {
  const std::vector<std::vector<std::int64_t>> m{{1, 1}, {1, -1}};
  CHECK(rank(m, kQ) == 2);
  CHECK(rank(m, kF2) == 1);
  CHECK(rank(std::vector<std::vector<std::int64_t>>{{0, 0}, {0, 0}}, kQ) == 0);
  CHECK(rank(std::vector<std::vector<std::int64_t>>{{2, 4}, {1, 2}}, kQ) == 1);
  CHECK(rank(std::vector<std::vector<std::int64_t>>{{3}}, Field::prime_field(3)) == 0);

  // Random small matrices against a naive rational elimination in doubles
  // with integer-valued entries kept small enough to stay exact.
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int t = 0; t < 100; ++t) {
    const int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(r), std::vector<std::int64_t>(static_cast<std::size_t>(c)));
    for (auto& row : a) {
      for (auto& x : row) x = entry(rng);
    }
    std::vector<std::vector<long double>> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i].assign(a[i].begin(), a[i].end());
    std::size_t naive = 0;
    for (int col = 0; col < c && naive < d.size(); ++col) {
      std::size_t piv = naive;
      while (piv < d.size() && std::abs(d[piv][static_cast<std::size_t>(col)]) < 1e-9) ++piv;
      if (piv == d.size()) continue;
      std::swap(d[piv], d[naive]);
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (i == naive) continue;
        const long double f = d[i][static_cast<std::size_t>(col)] / d[naive][static_cast<std::size_t>(col)];
        for (int k = 0; k < c; ++k) d[i][static_cast<std::size_t>(k)] -= f * d[naive][static_cast<std::size_t>(k)];
      }
      ++naive;
    }
    REQUIRE(rank(a, kQ) == naive);
    REQUIRE(rank(a, kF2) <= naive);
  }
}

TEST_CASE("reduced homology") {
  const auto two_points = SimplicialComplex::from_facets(2, {{0}, {1}});
  CHECK(reduced_homology_ranks(two_points, kQ) == std::map<int, std::size_t>{{0, 1}});
  const auto hollow = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(reduced_homology_ranks(hollow, kQ) == std::map<int, std::size_t>{{1, 1}});
  const auto filled = SimplicialComplex::from_facets(3, {{0, 1, 2}});
  CHECK(reduced_homology_ranks(filled, kQ).empty());
  CHECK(reduced_homology_ranks(SimplicialComplex::empty_complex(3), kQ) == std::map<int, std::size_t>{{-1, 1}});
  CHECK(reduced_homology_ranks(SimplicialComplex::void_complex(3), kQ).empty());
  CHECK(SimplicialComplex::empty_complex(2).dimension() == -1);
  CHECK(SimplicialComplex::void_complex(2).dimension() == -2);
  CHECK_THROWS_AS(SimplicialComplex::from_faces(3, {{0, 1}}), std::invalid_argument);

  SUBCASE("projective plane depends on the field") {
    const std::vector<Face> rp2{{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
    const auto c = SimplicialComplex::from_facets(6, rp2);
    CHECK(reduced_homology_ranks(c, kQ).empty());
    CHECK(reduced_homology_ranks(c, kF2) == std::map<int, std::size_t>{{1, 1}, {2, 1}});
    CHECK(reduced_homology_ranks(c, Field::prime_field(3)).empty());
  }
}

TEST_CASE("lcm lattice") {
  const auto i = parse_ideal("x0, x1", 2);
  const auto lat = LcmLattice::build(i, 100);
  CHECK(lat.size() == 4);
  const auto x0 = parse_monomial("x0", 2), x1 = parse_monomial("x1", 2), x0x1 = parse_monomial("x0*x1", 2);
  CHECK_FALSE(lat.meet(x0, x1));
  CHECK(lat.join(x0, x1) == x0x1);
  CHECK(lat.is_atom(x0));
  CHECK_FALSE(lat.is_atom(x0x1));
  CHECK(lat.coatoms_below(x0x1) == std::vector{x0, x1});
  CHECK(lat.coatoms_below(x0).empty());
  CHECK(lat.open_interval(x0x1).size() == 2);

  const auto p3 = LcmLattice::build(edge_ideal(graph::path(3)), 100);
  CHECK(p3.size() == 4);  // bottom, x0x1, x1x2, x0x1x2
  const auto c4 = LcmLattice::build(edge_ideal(graph::cycle(4)), 100);
  CHECK(c4.size() == 1 + 4 + 4 + 1);  // lcm of opposite edges coincide at the top
  CHECK(c4.meet(parse_monomial("x0*x1", 4), parse_monomial("x2*x3", 4)) == std::nullopt);
  CHECK(c4.meet(parse_monomial("x0*x1*x2", 4), parse_monomial("x1*x2*x3", 4)) == parse_monomial("x1*x2", 4));

  CHECK_THROWS_AS(LcmLattice::build(edge_ideal(graph::cycle(4)), 5), edgereg::CapExceeded);
  CHECK_THROWS_AS(LcmLattice::build(edgereg::algebra::MonomialIdeal::zero(2), 10), std::domain_error);
  CHECK_THROWS_AS(LcmLattice::build(edgereg::algebra::MonomialIdeal::unit(2), 10), std::domain_error);
}

TEST_CASE("betti tables of small ideals") {
  const auto xy = betti_table(parse_ideal("x0, x1", 2));
  CHECK(xy.entries() == std::map<std::pair<int, int>, std::uint64_t>{{{0, 1}, 2}, {{1, 2}, 1}});
  CHECK(xy.regularity() == 1);
  CHECK(xy.projective_dimension() == 1);

  const auto two_k2 = betti_table(edge_ideal(graph::Graph(4, {{0, 1}, {2, 3}})));
  CHECK(two_k2.at(0, 2) == 2);
  CHECK(two_k2.at(1, 4) == 1);
  CHECK(two_k2.entries().size() == 2);
  CHECK(two_k2.regularity() == 3);

  const auto c5 = betti_table(edge_ideal(graph::cycle(5)));
  CHECK(c5.entries() == std::map<std::pair<int, int>, std::uint64_t>{{{0, 2}, 5}, {{1, 3}, 5}, {{2, 5}, 1}});
  CHECK(c5.regularity() == 3);
  CHECK(c5.projective_dimension() == 2);

  CHECK(table_of(graph::path(3), kQ) == oracle::hochster_betti(graph::path(3), kQ));
  CHECK(betti_table(parse_ideal("x0^2*x1", 2)).entries() == std::map<std::pair<int, int>, std::uint64_t>{{{0, 3}, 1}});

  CHECK_THROWS_AS(regularity(edgereg::algebra::MonomialIdeal::zero(3)), std::domain_error);
  CHECK_THROWS_AS(projective_dimension(edgereg::algebra::MonomialIdeal::unit(3)), std::domain_error);
  CHECK_THROWS_AS(BettiTable().regularity(), std::domain_error);
}

TEST_CASE("multigraded refinement sums to the graded table") {
  std::mt19937 rng(13);
  for (int t = 0; t < 40; ++t) {
    const auto i = oracle::random_ideal(rng, 4, 5, 2);
    if (i.is_unit()) continue;
    BettiOptions o;
    o.multigraded = true;
    const auto table = betti_table(i, o);
    std::map<std::pair<int, int>, std::uint64_t> folded;
    for (const auto& [key, count] : table.multigraded()) folded[{key.first, key.second.degree()}] += count;
    REQUIRE(folded == table.entries());
    REQUIRE(table.graded_only() == betti_table(i));
  }
}

TEST_CASE("crosscut and order complex give the same tables") {
  std::mt19937 rng(17);
  BettiOptions order;
  order.method = IntervalMethod::order_complex;
  for (int t = 0; t < 60; ++t) {
    const auto i = oracle::random_ideal(rng, 4, 5, 2);
    if (i.is_unit()) continue;
    REQUIRE(betti_table(i) == betti_table(i, order));
  }
  for (const auto& g : {graph::cycle(5), graph::anticycle(6), graph::path(5)}) {
    CHECK(betti_table(edge_ideal(g)) == betti_table(edge_ideal(g), order));
  }
}

TEST_CASE("Hochster's formula on every edge ideal up to 6 vertices") {
  for (const auto& g : graph::enumerate_graphs(2, 6, true)) {
    REQUIRE(table_of(g, kQ) == oracle::hochster_betti(g, kQ));
    REQUIRE(table_of(g, kF2) == oracle::hochster_betti(g, kF2));
  }
}

TEST_CASE("Taylor oracle agrees on random ideals") {
  std::mt19937 rng(19);
  for (int t = 0; t < 80; ++t) {
    const auto i = oracle::random_ideal(rng, 5, 5, 2);
    if (i.is_unit()) continue;
    for (const auto& f : {kQ, kF2}) {
      BettiOptions o = over(f);
      o.multigraded = true;
      REQUIRE(betti_table(i, o) == taylor_betti_oracle(i, o));
    }
  }
  std::vector<edgereg::algebra::Monomial> many;
  for (int a = 0; a < 17; ++a) many.push_back(edgereg::algebra::Monomial{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(16 - a)});
  CHECK_THROWS_AS(taylor_betti_oracle(edgereg::algebra::MonomialIdeal(2, many)), edgereg::CapExceeded);
}

TEST_CASE("linear resolutions") {
  CHECK(has_linear_resolution(edge_ideal(graph::path(3))));
  CHECK_FALSE(has_linear_resolution(edge_ideal(graph::Graph(4, {{0, 1}, {2, 3}}))));
  CHECK(has_linear_resolution(parse_ideal("x0*x1", 2)));
  CHECK_THROWS_AS(has_linear_resolution(parse_ideal("x0, x1^2", 2)), std::invalid_argument);
  CHECK(is_linear(betti_table(edge_ideal(graph::complete(4))), 2));
  CHECK_FALSE(is_linear(betti_table(edge_ideal(graph::cycle(5))), 2));
}

TEST_CASE("linear quotients") {
  const auto p3 = has_linear_quotients(edge_ideal(graph::path(3)));
  REQUIRE(p3.status == QuotientsStatus::found);
  CHECK(is_linear_quotient_order(p3.order));

  CHECK(has_linear_quotients(edge_ideal(graph::Graph(4, {{0, 1}, {2, 3}}))).status == QuotientsStatus::none);
  CHECK(has_linear_quotients(parse_ideal("x0^2*x1", 2)).status == QuotientsStatus::found);
  CHECK_THROWS_AS(has_linear_quotients(edgereg::algebra::MonomialIdeal::unit(2)), std::domain_error);

  const std::vector bad{parse_monomial("x0*x1", 4), parse_monomial("x2*x3", 4), parse_monomial("x1*x2", 4)};
  CHECK_FALSE(is_linear_quotient_order(bad));
  const std::vector good{parse_monomial("x0*x1", 4), parse_monomial("x1*x2", 4), parse_monomial("x2*x3", 4)};
  CHECK(is_linear_quotient_order(good));

  EngineCaps tiny;
  tiny.linear_quotient_generators = 2;
  const auto capped = has_linear_quotients(edge_ideal(graph::path(4)), tiny);
  CHECK(capped.status == QuotientsStatus::unknown);
  CHECK_FALSE(capped.reason.empty());

  SUBCASE("an order implies a linear resolution, n <= 6") {
    for (const auto& g : graph::enumerate_graphs(2, 6, true)) {
      const auto i = edge_ideal(g);
      const auto lq = has_linear_quotients(i);
      REQUIRE(lq.status != QuotientsStatus::unknown);
      if (lq.status == QuotientsStatus::found) {
        REQUIRE(is_linear_quotient_order(lq.order));
        REQUIRE(has_linear_resolution(i));
      }
    }
  }
}
