// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "edgereg/canonical.hpp"
#include "edgereg/graph6.hpp"
#include "edgereg/linear_quotients.hpp"
#include "edgereg/scan.hpp"
#include "edgereg/verify.hpp"
#include "oracles.hpp"

using namespace edgereg;
using verify::Context;
using verify::Report;

namespace {

struct Tally {
  std::size_t instances = 0;
  std::size_t bad = 0;
  std::string first;

  void add(bool ok, const std::string& what) {
    ++instances;
    if (!ok && bad++ == 0) first = what;
  }
  void add(const Report& r) { add(r.passed(), verify::to_json_line(r)); }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Tally()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  std::string error;
  try {
    t = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = error.empty() && t.bad == 0 && t.instances > 0;
  if (!ok) ++failures;
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << t.instances << " instances, "
       << t.bad << " exceptions, " << std::fixed;
  line.precision(1);
  line << secs << "s)";
  std::cout << line.str() << '\n';
  if (!error.empty()) std::cout << "  error: " << error << '\n';
  if (t.bad > 0) std::cout << "  first: " << t.first << '\n';
  std::cout.flush();
}

}  // namespace

int main() {
  const Context ctx;
  const auto up_to_7 = graph::enumerate_graphs(2, 7, true);
  const auto up_to_6 = graph::enumerate_graphs(2, 6, true);

  criterion(1, "reg(I(G)) = 2 iff complement chordal, 2 <= n <= 7", [&] {
    Tally t;
    for (const auto& g : up_to_7) t.add(verify::check_froberg(g, ctx));
    return t;
  });

  criterion(2, "im(G) + 1 <= reg(I(G)) <= m(G) + 1, 2 <= n <= 7", [&] {
    Tally t;
    for (const auto& g : up_to_7) t.add(verify::check_matching_bounds(g, ctx));
    return t;
  });

  criterion(3, "reg(I(G)^k) >= 2k + im(G) - 1, n <= 6, k <= 3", [&] {
    Tally t;
    for (const auto& g : up_to_6) t.add(verify::check_bht(g, 3, ctx));
    return t;
  });

  criterion(4, "co-chordal n <= 6: reg(I^k) = 2k for k <= 3 and linear quotients", [&] {
    Tally t;
    for (const auto& g : up_to_6) {
      if (!graph::is_chordal(graph::complement(g))) continue;
      const std::string g6 = graph::to_graph6(g);
      for (int k = 1; k <= 3; ++k) t.add(ctx.edge_power_regularity(g, k) == 2 * k, g6 + " k=" + std::to_string(k));
      const auto lq = res::has_linear_quotients(algebra::edge_ideal(g), ctx.options.caps);
      t.add(lq.status == res::QuotientsStatus::found && res::is_linear_quotient_order(lq.order), g6 + " quotients");
      t.add(verify::check_hhz(g, 3, ctx));
    }
    return t;
  });

  criterion(5, "anticycle(5): reg of I, I^2, I^3 is 3, 4, 6", [&] {
    Tally t;
    const auto g = graph::anticycle(5);
    const int expected[] = {3, 4, 6};
    for (int k = 1; k <= 3; ++k) {
      const int reg = ctx.edge_power_regularity(g, k);
      t.add(reg == expected[k - 1], "k=" + std::to_string(k) + " reg=" + std::to_string(reg));
    }
    return t;
  });

  criterion(6, "lcm lattice tables equal the Taylor oracle, 200 random ideals over Q and GF(2)", [&] {
    Tally t;
    std::mt19937 rng(20240601);
    for (int n = 0; n < 200; ++n) {
      const auto ideal = oracle::random_ideal(rng, 5, 5, 2);
      for (const auto& field : {res::Field::rationals(), res::Field::prime_field(2)}) {
        res::BettiOptions o;
        o.field = field;
        o.multigraded = true;
        t.add(res::betti_table(ideal, o) == res::taylor_betti_oracle(ideal, o), ideal.to_string() + " over " + field.name());
      }
    }
    return t;
  });

  criterion(7, "S-suspensions of C4 and anticycle(5): splitting at k = 2, linear k = 2, 3, intersection", [&] {
    Tally t;
    for (const auto& g : {graph::cycle(4), graph::anticycle(5)}) {
      for (auto s : graph::independent_sets(g)) {
        if (s == g.vertices()) continue;
        t.add(verify::check_main1(g, s, 2, ctx));
        t.add(verify::check_main2(g, s, 3, ctx));
      }
    }
    return t;
  });

  criterion(8, "(U I^k : L) generated by variables, C4 C5 P4, minimal covers, k <= 2", [&] {
    Tally t;
    for (const auto& g : {graph::cycle(4), graph::cycle(5), graph::path(4)}) {
      for (auto u : graph::minimal_vertex_covers(g)) {
        for (int k = 0; k <= 2; ++k) t.add(verify::check_keylemma(g, u, k, ctx));
      }
    }
    return t;
  });

  criterion(9, "(x^2, xy, y^2) = (x^2, y^2) + (xy) is not a splitting, witness (1,4)", [&] {
    Tally t;
    const auto i = algebra::parse_ideal("x0^2, x0*x1, x1^2", 2);
    const auto r = verify::check_betti_splitting(i, algebra::parse_ideal("x0^2, x1^2", 2), algebra::parse_ideal("x0*x1", 2), ctx);
    t.add(r.failed() && r.witness["i"] == 1 && r.witness["j"] == 4, verify::to_json_line(r));
    return t;
  });

  criterion(10, "gap-free n <= 6 with reg 3: reg(I^2) = 4, no skips", [&] {
    Tally t;
    verify::ScanConfig cfg;
    cfg.conjecture = verify::Conjecture::np;
    cfg.k_max = 2;
    const auto result = verify::scan_conjecture(cfg, up_to_6, ctx);
    for (const auto& r : result.reports) t.add(r);
    t.add(result.reports.size() + result.filtered == up_to_6.size(), "scan lost graphs");
    return t;
  });

  return failures == 0 ? 0 : 1;
}
