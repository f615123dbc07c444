#include "edgereg/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "edgereg/errors.hpp"
#include "edgereg/graph6.hpp"
#include "edgereg/json_io.hpp"
#include "edgereg/linear_quotients.hpp"

namespace edgereg::verify {

using nlohmann::json;
using edgereg::to_json;
using res::BettiTable;

namespace {

Report make_report(const char* statement, json instance, const Context& ctx) {
  Report r;
  r.statement = statement;
  r.instance = std::move(instance);
  r.field = ctx.field_name();
  r.caps = ctx.caps_json();
  return r;
}

json graph_instance(const Graph& g) { return {{"graph6", graph::to_graph6(g)}, {"n", g.vertex_count()}}; }

json ideal_instance(const MonomialIdeal& i) { return {{"ideal", to_json(i)}, {"variables", i.variable_count()}}; }

void skip(Report& r, std::string reason) {
  r.verdict = Verdict::skipped;
  r.reason = std::move(reason);
  r.witness = nullptr;
}

void fail(Report& r, std::string reason, json witness) {
  r.verdict = Verdict::fail;
  r.reason = std::move(reason);
  r.witness = std::move(witness);
}

void pass(Report& r) {
  r.verdict = Verdict::pass;
  r.reason.clear();
  r.witness = nullptr;
}

// Cap overruns turn into skips so that a family run stays auditable.
template <class Body>
Report guarded(Report r, Body&& body) {
  try {
    body(r);
  } catch (const CapExceeded& e) {
    skip(r, std::string("cap exceeded: ") + e.what());
  }
  return r;
}

// reg of the unit ideal R is taken to be 0.
int reg_or_zero(const MonomialIdeal& i, const Context& ctx) {
  if (i.is_unit()) return 0;
  return ctx.table(i).regularity();
}

template <class Map, class Key>
std::uint64_t lookup(const Map& map, const Key& key) {
  auto it = map.find(key);
  return it == map.end() ? 0 : it->second;
}

void require_partition(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k) {
  if (i.variable_count() != j.variable_count() || i.variable_count() != k.variable_count()) {
    throw std::invalid_argument("ideals live in different polynomial rings");
  }
  if (j.is_zero() || k.is_zero()) throw std::invalid_argument("both parts of a splitting must be nonzero");
  std::vector<Monomial> joined = j.generators();
  joined.insert(joined.end(), k.generators().begin(), k.generators().end());
  std::sort(joined.begin(), joined.end());
  std::vector<Monomial> gi = i.generators();
  std::sort(gi.begin(), gi.end());
  if (std::adjacent_find(joined.begin(), joined.end()) != joined.end() || joined != gi) {
    throw std::invalid_argument("G(I) is not the disjoint union of G(J) and G(K)");
  }
}

bool linear_powers(const Graph& g, int from, int to, const Context& ctx, int& first_bad) {
  for (int k = from; k <= to; ++k) {
    if (!res::is_linear(ctx.edge_power_table(g, k), 2 * k)) {
      first_bad = k;
      return false;
    }
  }
  return true;
}

// Shared hypotheses of the two suspension theorems. Returns a reason when
// one fails.
std::optional<std::string> suspension_hypotheses(const Graph& g, VertexSet s, int k_top, const Context& ctx) {
  if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("S contains vertices outside G");
  if (g.edge_count() == 0) return "G has no edges";
  if (!graph::is_gap_free(g)) return "G is not gap-free";
  if (!graph::is_independent_set(g, s)) return "S is not an independent set of G";
  if (s == g.vertices()) return "S = V(G)";
  int bad = 0;
  if (!linear_powers(g, 2, std::max(k_top, 2), ctx, bad)) {
    return "I(G)^" + std::to_string(bad) + " does not have a linear resolution";
  }
  return std::nullopt;
}

void splitting_body(Report& r, const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                    const Context& ctx, bool multigraded) {
  auto options = ctx.options;
  options.multigraded = multigraded;
  const auto jk = algebra::intersection(j, k);
  const BettiTable ti = res::betti_table(i, options);
  const BettiTable tj = res::betti_table(j, options);
  const BettiTable tk = res::betti_table(k, options);
  const BettiTable tjk = res::betti_table(jk, options);

  json mismatches = json::array();
  std::set<std::pair<int, int>> keys;
  for (const auto* t : {&ti, &tj, &tk}) {
    for (const auto& [key, beta] : t->entries()) keys.insert(key);
  }
  for (const auto& [key, beta] : tjk.entries()) keys.insert({key.first + 1, key.second});
  for (const auto& key : keys) {
    const auto [hi, deg] = key;
    std::uint64_t left = ti.at(hi, deg);
    std::uint64_t right = tj.at(hi, deg) + tk.at(hi, deg) + (hi >= 1 ? tjk.at(hi - 1, deg) : 0);
    if (left != right) mismatches.push_back({{"i", hi}, {"j", deg}, {"left", left}, {"right", right}});
  }
  if (multigraded) {
    std::set<std::pair<int, Monomial>> mkeys;
    for (const auto* t : {&ti, &tj, &tk}) {
      for (const auto& [key, beta] : t->multigraded()) mkeys.insert(key);
    }
    for (const auto& [key, beta] : tjk.multigraded()) mkeys.insert({key.first + 1, key.second});
    for (const auto& key : mkeys) {
      std::uint64_t left = lookup(ti.multigraded(), key);
      std::uint64_t right = lookup(tj.multigraded(), key) + lookup(tk.multigraded(), key);
      if (key.first >= 1) right += lookup(tjk.multigraded(), std::pair{key.first - 1, key.second});
      if (left != right) {
        mismatches.push_back({{"i", key.first},
                              {"j", key.second.degree()},
                              {"multidegree", key.second.to_string()},
                              {"left", left},
                              {"right", right}});
      }
    }
  }

  r.details["J_cap_K"] = to_json(jk);
  r.details["reg"] = {{"I", ti.regularity()}, {"J", tj.regularity()}, {"K", tk.regularity()}, {"J_cap_K", tjk.regularity()}};
  r.details["pd"] = {{"I", ti.projective_dimension()},
                     {"J", tj.projective_dimension()},
                     {"K", tk.projective_dimension()},
                     {"J_cap_K", tjk.projective_dimension()}};
  if (!mismatches.empty()) {
    json witness = mismatches.front();
    witness["mismatches"] = mismatches;
    fail(r, "Betti numbers do not split", std::move(witness));
    return;
  }

  const int reg_expected = std::max({tj.regularity(), tk.regularity(), tjk.regularity() - 1});
  const int pd_expected = std::max({tj.projective_dimension(), tk.projective_dimension(), tjk.projective_dimension() + 1});
  if (ti.regularity() != reg_expected) {
    fail(r, "reg(I) differs from max{reg J, reg K, reg(J∩K) - 1}",
         {{"consequence", "reg"}, {"left", ti.regularity()}, {"right", reg_expected}});
    return;
  }
  if (ti.projective_dimension() != pd_expected) {
    fail(r, "pd(I) differs from max{pd J, pd K, pd(J∩K) + 1}",
         {{"consequence", "pd"}, {"left", ti.projective_dimension()}, {"right", pd_expected}});
    return;
  }
  pass(r);
}

}  // namespace

std::vector<std::string> statement_ids() {
  return {statement::froberg,   statement::hhz,       statement::matching_bounds, statement::bht,
          statement::banerjee,  statement::s_cc,      statement::betti_splitting, statement::doublelinear,
          statement::colon_reg, statement::abc,       statement::blemma,          statement::keylemma,
          statement::main1,     statement::main2};
}

MonomialIdeal suspension_join_ideal(const Graph& g, VertexSet s) {
  const int n = g.vertex_count();
  std::vector<Monomial> gens;
  for (int v = 0; v < n; ++v) {
    if (!s.contains(v)) {
      std::vector<int> support{v, n};
      gens.push_back(Monomial::squarefree(n + 1, support));
    }
  }
  return MonomialIdeal(n + 1, std::move(gens));
}

Report check_froberg(const Graph& g, const Context& ctx) {
  return guarded(make_report(statement::froberg, graph_instance(g), ctx), [&](Report& r) {
    if (g.edge_count() == 0) return skip(r, "G has no edges");
    const bool cochordal = graph::is_chordal(graph::complement(g));
    const int reg = ctx.edge_power_regularity(g, 1);
    r.details = {{"reg", reg}, {"complement_chordal", cochordal}};
    if ((reg == 2) != cochordal) {
      return fail(r, "reg(I(G)) = 2 disagrees with chordality of the complement", r.details);
    }
    pass(r);
  });
}

Report check_matching_bounds(const Graph& g, const Context& ctx) {
  return guarded(make_report(statement::matching_bounds, graph_instance(g), ctx), [&](Report& r) {
    if (g.edge_count() == 0) return skip(r, "G has no edges");
    const int im = graph::induced_matching_number(g);
    const int m = graph::matching_number(g);
    const int reg = ctx.edge_power_regularity(g, 1);
    r.details = {{"im", im}, {"m", m}, {"reg", reg}};
    if (reg < im + 1) {
      json w = r.details;
      w["induced_matching"] = json::array();
      for (const auto& e : graph::maximum_induced_matching(g)) w["induced_matching"].push_back({e.u, e.v});
      return fail(r, "reg(I(G)) < im(G) + 1", std::move(w));
    }
    if (reg > m + 1) return fail(r, "reg(I(G)) > m(G) + 1", r.details);
    pass(r);
  });
}

Report check_bht(const Graph& g, int k_max, const Context& ctx) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  json instance = graph_instance(g);
  instance["kmax"] = k_max;
  return guarded(make_report(statement::bht, std::move(instance), ctx), [&](Report& r) {
    if (g.edge_count() == 0) return skip(r, "G has no edges");
    const int im = graph::induced_matching_number(g);
    r.details["im"] = im;
    for (int k = 1; k <= k_max; ++k) {
      const int reg = ctx.edge_power_regularity(g, k);
      r.details["reg"][std::to_string(k)] = reg;
      if (reg < 2 * k + im - 1) {
        return fail(r, "reg(I(G)^k) < 2k + im(G) - 1", {{"k", k}, {"reg", reg}, {"bound", 2 * k + im - 1}});
      }
    }
    pass(r);
  });
}

Report check_hhz(const Graph& g, int k_max, const Context& ctx) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  json instance = graph_instance(g);
  instance["kmax"] = k_max;
  return guarded(make_report(statement::hhz, std::move(instance), ctx), [&](Report& r) {
    if (g.edge_count() == 0) return skip(r, "G has no edges");
    const bool cochordal = graph::is_chordal(graph::complement(g));
    bool powers_linear = true;
    int first_nonlinear = 0;
    for (int k = 1; k <= k_max; ++k) {
      const int reg = ctx.edge_power_regularity(g, k);
      r.details["reg"][std::to_string(k)] = reg;
      if (reg != 2 * k && powers_linear) {
        powers_linear = false;
        first_nonlinear = k;
      }
    }
    const auto ideal = algebra::edge_ideal(g);
    const auto lq = res::has_linear_quotients(ideal, ctx.options.caps);
    r.details["complement_chordal"] = cochordal;
    json witness = {{"complement_chordal", cochordal}, {"powers_linear", powers_linear}};
    if (!powers_linear) witness["k"] = first_nonlinear;
    if (cochordal != powers_linear) return fail(r, "co-chordality disagrees with linearity of powers", witness);

    switch (lq.status) {
      case res::QuotientsStatus::found: {
        json order = json::array();
        for (const auto& m : lq.order) order.push_back(m.to_string());
        r.details["linear_quotients"] = order;
        if (!res::is_linear_quotient_order(lq.order)) {
          witness["order"] = order;
          return fail(r, "returned linear quotient order does not re-verify", witness);
        }
        if (!cochordal) {
          witness["order"] = order;
          return fail(r, "linear quotients found for a graph that is not co-chordal", witness);
        }
        break;
      }
      case res::QuotientsStatus::none:
        r.details["linear_quotients"] = false;
        if (cochordal) return fail(r, "co-chordal graph without linear quotients", witness);
        break;
      case res::QuotientsStatus::unknown:
        // The linear-quotients leg is left unchecked; the rest still stands.
        r.details["linear_quotients"] = "unknown: " + lq.reason;
        break;
    }
    pass(r);
  });
}

Report check_banerjee(const Graph& g, int k_max, const Context& ctx) {
  json instance = graph_instance(g);
  instance["kmax"] = k_max;
  return guarded(make_report(statement::banerjee, std::move(instance), ctx), [&](Report& r) {
    if (g.edge_count() == 0) return skip(r, "G has no edges");
    if (!graph::is_gap_free(g)) return skip(r, "G is not gap-free");
    if (graph::has_induced_cricket(g)) return skip(r, "G contains an induced cricket");
    const int reg = ctx.edge_power_regularity(g, 1);
    r.details["reg"]["1"] = reg;
    if (reg > 3) return fail(r, "reg(I(G)) > 3", {{"k", 1}, {"reg", reg}});
    for (int k = 2; k <= k_max; ++k) {
      const int rk = ctx.edge_power_regularity(g, k);
      r.details["reg"][std::to_string(k)] = rk;
      if (rk != 2 * k) return fail(r, "reg(I(G)^k) != 2k", {{"k", k}, {"reg", rk}});
    }
    pass(r);
  });
}

Report check_s_suspension_invariance(const Graph& g, VertexSet s, const Context& ctx) {
  json instance = graph_instance(g);
  instance["S"] = to_json(s);
  return guarded(make_report(statement::s_cc, std::move(instance), ctx), [&](Report& r) {
    if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("S contains vertices outside G");
    if (g.edge_count() == 0) return skip(r, "G has no edges");
    if (!graph::is_independent_set(g, s)) return skip(r, "S is not an independent set of G");
    if (s == g.vertices()) return skip(r, "S = V(G)");
    const Graph gs = graph::s_suspension(g, s);
    const int im = graph::induced_matching_number(g);
    const int im_s = graph::induced_matching_number(gs);
    const int reg = ctx.edge_power_regularity(g, 1);
    const int reg_s = ctx.edge_power_regularity(gs, 1);
    r.details = {{"suspension", graph::to_graph6(gs)}, {"im", {im, im_s}}, {"reg", {reg, reg_s}}};
    if (im != im_s) return fail(r, "im(G^S) != im(G)", r.details);
    if (reg != reg_s) return fail(r, "reg(I(G^S)) != reg(I(G))", r.details);
    pass(r);
  });
}

Report check_betti_splitting(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                             const Context& ctx, bool multigraded) {
  require_partition(i, j, k);
  json instance = {{"I", to_json(i)}, {"J", to_json(j)}, {"K", to_json(k)}, {"variables", i.variable_count()}};
  if (multigraded) instance["multigraded"] = true;
  return guarded(make_report(statement::betti_splitting, std::move(instance), ctx),
                 [&](Report& r) { splitting_body(r, i, j, k, ctx, multigraded); });
}

Report check_doublelinear(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                          const Context& ctx) {
  require_partition(i, j, k);
  json instance = {{"I", to_json(i)}, {"J", to_json(j)}, {"K", to_json(k)}, {"variables", i.variable_count()}};
  return guarded(make_report(statement::doublelinear, std::move(instance), ctx), [&](Report& r) {
    for (const auto* part : {&j, &k}) {
      const auto d = algebra::generated_in_single_degree(*part);
      if (!d || part->is_unit() || !res::is_linear(ctx.table(*part), *d)) {
        return skip(r, (part == &j ? "J" : "K") + std::string(" does not have a linear resolution"));
      }
    }
    splitting_body(r, i, j, k, ctx, false);
  });
}

Report check_colon_reg_bound(const MonomialIdeal& i, const Monomial& m, const Context& ctx) {
  if (m.variable_count() != i.variable_count()) throw std::invalid_argument("monomial and ideal live in different rings");
  json instance = ideal_instance(i);
  instance["m"] = m.to_string();
  return guarded(make_report(statement::colon_reg, std::move(instance), ctx), [&](Report& r) {
    if (i.is_zero() || i.is_unit()) return skip(r, "I is the zero or unit ideal");
    const auto quotient = algebra::colon(i, m);
    const auto extended = algebra::with_generator(i, m);
    if (quotient.is_unit() && extended.is_unit()) return skip(r, "(I : m) and (I, m) are both the unit ideal");
    const int reg = ctx.table(i).regularity();
    const int colon_term = reg_or_zero(quotient, ctx) + m.degree();
    const int sum_term = reg_or_zero(extended, ctx);
    r.details = {{"reg", reg},
                 {"colon", to_json(quotient)},
                 {"colon_term", colon_term},
                 {"sum", to_json(extended)},
                 {"sum_term", sum_term}};
    if (reg > std::max(colon_term, sum_term)) {
      return fail(r, "reg(I) > max{reg(I : m) + deg m, reg(I, m)}", r.details);
    }
    if (auto x = m.as_variable()) {
      const bool appears = std::any_of(i.generators().begin(), i.generators().end(),
                                       [&](const Monomial& g) { return g[*x] > 0; });
      r.details["variable_in_I"] = appears;
      if (appears && reg != colon_term && reg != sum_term) {
        return fail(r, "reg(I) equals neither term for a variable appearing in I", r.details);
      }
    }
    pass(r);
  });
}

Report check_abc_bound(const MonomialIdeal& j, const MonomialIdeal& i, std::span<const Monomial> ordering,
                       const Context& ctx) {
  json instance = {{"J", to_json(j)}, {"I", to_json(i)}, {"variables", i.variable_count()}};
  if (!ordering.empty()) {
    instance["ordering"] = json::array();
    for (const auto& m : ordering) instance["ordering"].push_back(m.to_string());
  }
  return guarded(make_report(statement::abc, std::move(instance), ctx), [&](Report& r) {
    if (i.variable_count() != j.variable_count()) return skip(r, "I and J live in different rings");
    if (i.is_zero() || j.is_zero() || i.is_unit() || j.is_unit()) return skip(r, "I or J is zero or unit");
    const auto n1 = algebra::generated_in_single_degree(i);
    const auto n2 = algebra::generated_in_single_degree(j);
    if (!n1 || !n2) return skip(r, "I or J is not generated in a single degree");
    if (*n1 >= *n2) return skip(r, "degree of I is not smaller than degree of J");
    if (!i.contains(j)) return skip(r, "J is not contained in I");
    std::vector<Monomial> gens;
    try {
      gens = algebra::ordered_generators(i, ordering);
    } catch (const std::invalid_argument& e) {
      return skip(r, std::string("ordering: ") + e.what());
    }

    const int a = reg_or_zero(algebra::colon(j, gens.front()), ctx) + *n1;
    std::optional<int> b;
    MonomialIdeal prefix = j;
    for (std::size_t l = 1; l < gens.size(); ++l) {
      prefix = algebra::with_generator(prefix, gens[l - 1]);
      const int term = reg_or_zero(algebra::colon(prefix, gens[l]), ctx) + *n1;
      b = std::max(b.value_or(term), term);
    }
    const int c = ctx.table(i).regularity();
    const int reg_j = ctx.table(j).regularity();
    const int bound = std::max({a, b.value_or(a), c});
    r.details = {{"A", a}, {"B", b ? json(*b) : json(nullptr)}, {"C", c}, {"reg_J", reg_j}};
    if (reg_j > bound) return fail(r, "reg(J) > max{A, B, C}", r.details);
    pass(r);
  });
}

Report check_blemma_colon_structure(const Graph& g, int n, std::span<const Monomial> ordering, const Context& ctx) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  json instance = graph_instance(g);
  instance["power"] = n;
  if (!ordering.empty()) {
    instance["ordering"] = json::array();
    for (const auto& m : ordering) instance["ordering"].push_back(m.to_string());
  }
  return guarded(make_report(statement::blemma, std::move(instance), ctx), [&](Report& r) {
    if (g.edge_count() == 0) return skip(r, "G has no edges");
    const auto ideal = algebra::edge_ideal(g);
    const auto in = algebra::power(ideal, n);
    const auto in1 = algebra::power(ideal, n + 1);
    const auto gens = algebra::ordered_generators(in, ordering);
    json violations = json::array();
    std::size_t pairs_checked = 0;
    for (std::size_t k = 1; k < gens.size(); ++k) {
      const Monomial& next = gens[k];
      const auto target = algebra::colon(in1, next);
      std::vector<Monomial> quotients;
      for (std::size_t idx = 0; idx < k; ++idx) quotients.push_back(gens[idx] / gcd(gens[idx], next));
      for (std::size_t jdx = 0; jdx < k; ++jdx) {
        ++pairs_checked;
        if (target.contains(quotients[jdx])) continue;
        const bool covered = std::any_of(quotients.begin(), quotients.end(), [&](const Monomial& q) {
          return q.as_variable() && q.divides(quotients[jdx]);
        });
        if (!covered) {
          violations.push_back({{"j", jdx + 1},
                                {"k", k},
                                {"L_j", gens[jdx].to_string()},
                                {"L_k+1", next.to_string()},
                                {"colon", algebra::MonomialIdeal::principal(quotients[jdx]).to_string()}});
        }
      }
    }
    r.details = {{"generators", gens.size()}, {"pairs", pairs_checked}, {"violations", violations.size()}};
    const bool gap_free = graph::is_gap_free(g);
    if (!gap_free) {
      if (!violations.empty()) r.details["first_violation"] = violations.front();
      return skip(r, "G is not gap-free; outcome recorded only");
    }
    if (!violations.empty()) {
      json witness = violations.front();
      witness["count"] = violations.size();
      return fail(r, "no variable colon contains (L_j : L_k+1)", std::move(witness));
    }
    pass(r);
  });
}

Report check_keylemma(const Graph& g, VertexSet cover, int k, const Context& ctx) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  json instance = graph_instance(g);
  instance["U"] = to_json(cover);
  instance["k"] = k;
  return guarded(make_report(statement::keylemma, std::move(instance), ctx), [&](Report& r) {
    if (g.edge_count() == 0) return skip(r, "G has no edges");
    if (!graph::is_vertex_cover(g, cover)) return skip(r, "U is not a vertex cover of G");
    const auto ik = algebra::power(algebra::edge_ideal(g), k);
    const auto t = algebra::product(algebra::variable_ideal(g.vertex_count(), cover), ik);
    for (const auto& l : ik.generators()) {
      const auto c = algebra::colon(t, l);
      if (!algebra::is_generated_by_variables(c)) {
        return fail(r, "(U I(G)^k : L) is not generated by variables", {{"L", l.to_string()}, {"colon", to_json(c)}});
      }
    }
    r.details = {{"generators", ik.size()}};
    pass(r);
  });
}

Report check_main1(const Graph& g, VertexSet s, int k, const Context& ctx) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  json instance = graph_instance(g);
  instance["S"] = to_json(s);
  instance["k"] = k;
  return guarded(make_report(statement::main1, std::move(instance), ctx), [&](Report& r) {
    if (auto reason = suspension_hypotheses(g, s, k, ctx)) return skip(r, *reason);
    const Graph gs = graph::s_suspension(g, s);
    const int vars = gs.vertex_count();
    const auto whole = algebra::power(algebra::edge_ideal(gs), k);
    const auto base = algebra::power(algebra::edge_ideal(g), k).embed(vars);
    const auto joined = algebra::product(suspension_join_ideal(g, s), algebra::power(algebra::edge_ideal(gs), k - 1));
    r.details["suspension"] = graph::to_graph6(gs);
    try {
      require_partition(whole, base, joined);
    } catch (const std::invalid_argument& e) {
      return fail(r, e.what(), {{"I", to_json(whole)}, {"J", to_json(base)}, {"K", to_json(joined)}});
    }
    splitting_body(r, whole, base, joined, ctx, ctx.options.multigraded);
  });
}

Report check_main2(const Graph& g, VertexSet s, int k_max, const Context& ctx) {
  if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
  json instance = graph_instance(g);
  instance["S"] = to_json(s);
  instance["kmax"] = k_max;
  return guarded(make_report(statement::main2, std::move(instance), ctx), [&](Report& r) {
    if (auto reason = suspension_hypotheses(g, s, k_max, ctx)) return skip(r, *reason);
    const Graph gs = graph::s_suspension(g, s);
    const int vars = gs.vertex_count();
    const auto z = Monomial::variable(vars, g.vertex_count());
    const auto join = suspension_join_ideal(g, s);
    const auto edges_s = algebra::edge_ideal(gs);
    r.details["suspension"] = graph::to_graph6(gs);
    for (int k = 2; k <= k_max; ++k) {
      const auto table = ctx.edge_power_table(gs, k);
      r.details["reg"][std::to_string(k)] = table.regularity();
      if (!res::is_linear(table, 2 * k)) {
        return fail(r, "I(G^S)^k does not have a linear resolution", {{"k", k}, {"table", to_json(table)}});
      }
      const auto base = algebra::power(algebra::edge_ideal(g), k).embed(vars);
      const auto left = algebra::intersection(base, algebra::product(join, algebra::power(edges_s, k - 1)));
      const auto right = algebra::product(MonomialIdeal::principal(z), base);
      if (left != right) {
        return fail(r, "I(G)^k ∩ J I(G^S)^(k-1) differs from z I(G)^k",
                    {{"k", k}, {"left", to_json(left)}, {"right", to_json(right)}});
      }
    }
    pass(r);
  });
}

bool is_im_reg_invariant_extension(const Graph& g, const Graph& g_ext, const Context& ctx) {
  const int n = g.vertex_count();
  if (g_ext.vertex_count() != n + 1 || graph::induced_subgraph(g_ext, g.vertices()) != g) {
    throw std::invalid_argument("not a one-vertex extension of G");
  }
  if (g.edge_count() == 0) throw std::domain_error("G has no edges");
  return graph::induced_matching_number(g_ext) == graph::induced_matching_number(g) &&
         ctx.edge_power_regularity(g_ext, 1) == ctx.edge_power_regularity(g, 1);
}

std::vector<Graph> enumerate_im_reg_extensions(const Graph& g, const Context& ctx) {
  std::vector<Graph> out;
  for (auto& ext : graph::one_vertex_extensions(g)) {
    if (is_im_reg_invariant_extension(g, ext, ctx)) out.push_back(std::move(ext));
  }
  return out;
}

}  // namespace edgereg::verify
