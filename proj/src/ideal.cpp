#include "edgereg/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

#include "edgereg/errors.hpp"

namespace edgereg::algebra {

namespace {

void check_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.variable_count() != b.variable_count()) {
    throw std::invalid_argument("ambient mismatch: " + std::to_string(a.variable_count()) + " vs " +
                                std::to_string(b.variable_count()) + " variables");
  }
}

}  // namespace

MonomialIdeal minimalize(int variable_count, std::vector<Monomial> gens) {
  return MonomialIdeal(variable_count, std::move(gens));
}

MonomialIdeal::MonomialIdeal(int variable_count, std::vector<Monomial> generators) : vars_(variable_count) {
  if (variable_count < 0) throw std::invalid_argument("negative variable count");
  for (const auto& g : generators) {
    if (g.variable_count() != variable_count) throw std::invalid_argument("generator outside the ambient ring");
  }
  // Ascending degree: a divisor always precedes its multiples.
  std::sort(generators.begin(), generators.end(), grlex_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (auto& g : generators) {
    const bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end(), grlex_greater);
}

MonomialIdeal MonomialIdeal::zero(int variable_count) { return MonomialIdeal(variable_count, {}); }

MonomialIdeal MonomialIdeal::unit(int variable_count) {
  return MonomialIdeal(variable_count, {Monomial(variable_count)});
}

MonomialIdeal MonomialIdeal::principal(const Monomial& m) { return MonomialIdeal(m.variable_count(), {m}); }

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.variable_count() != vars_) throw std::invalid_argument("ambient mismatch in membership test");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& j) const {
  check_ambient(*this, j);
  return std::all_of(j.gens_.begin(), j.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::embed(int variable_count) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.embed(variable_count));
  return MonomialIdeal(variable_count, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_ambient(i, j);
  auto gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return MonomialIdeal(i.variable_count(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_ambient(i, j);
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> gens;
  for (const auto& a : i.generators()) {
    for (const auto& b : j.generators()) {
      auto m = a * b;
      if (seen.insert(m).second) gens.push_back(std::move(m));
    }
  }
  return MonomialIdeal(i.variable_count(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& i, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  MonomialIdeal result = MonomialIdeal::unit(i.variable_count());
  for (int step = 0; step < k; ++step) result = product(result, i);
  return result;
}

MonomialIdeal colon(const MonomialIdeal& i, const Monomial& m) {
  if (m.variable_count() != i.variable_count()) throw std::invalid_argument("ambient mismatch in colon");
  std::vector<Monomial> gens;
  gens.reserve(i.size());
  for (const auto& g : i.generators()) gens.push_back(g / gcd(g, m));
  return MonomialIdeal(i.variable_count(), std::move(gens));
}

MonomialIdeal intersection(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_ambient(i, j);
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> gens;
  for (const auto& a : i.generators()) {
    for (const auto& b : j.generators()) {
      auto m = lcm(a, b);
      if (seen.insert(m).second) gens.push_back(std::move(m));
    }
  }
  return MonomialIdeal(i.variable_count(), std::move(gens));
}

MonomialIdeal with_generator(const MonomialIdeal& i, const Monomial& m) {
  return sum(i, MonomialIdeal::principal(m));
}

MonomialIdeal variable_ideal(int variable_count, graph::VertexSet vars) {
  std::vector<Monomial> gens;
  for (int v : vars.to_vector()) gens.push_back(Monomial::variable(variable_count, v));
  return MonomialIdeal(variable_count, std::move(gens));
}

bool is_generated_by_variables(const MonomialIdeal& i) {
  if (i.is_zero()) return false;
  return std::all_of(i.generators().begin(), i.generators().end(),
                     [](const Monomial& g) { return g.degree() == 1; });
}

std::optional<int> generated_in_single_degree(const MonomialIdeal& i) {
  if (i.is_zero()) throw std::domain_error("the zero ideal has no generator degree");
  const int d = i.generators().front().degree();
  for (const auto& g : i.generators())
    if (g.degree() != d) return std::nullopt;
  return d;
}

MonomialIdeal edge_ideal(const graph::Graph& g) {
  if (g.edge_count() == 0) throw std::domain_error("edge ideal of an edgeless graph is the zero ideal");
  const int n = g.vertex_count();
  std::vector<Monomial> gens;
  for (const auto& e : g.edges()) {
    const int pair[2] = {e.u, e.v};
    gens.push_back(Monomial::squarefree(n, pair));
  }
  return MonomialIdeal(n, std::move(gens));
}

std::vector<Monomial> ordered_generators(const MonomialIdeal& i, std::span<const Monomial> order) {
  if (order.empty()) return i.generators();
  std::vector<Monomial> out(order.begin(), order.end());
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end(), grlex_greater);
  if (sorted != i.generators()) throw std::invalid_argument("ordering is not a permutation of G(I)");
  return out;
}

MonomialIdeal parse_ideal(std::string_view text, int variable_count) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parentheses in ideal");
    text = text.substr(1, text.size() - 2);
  }
  if (text.find_first_not_of(" \t0") == std::string_view::npos && text.find('0') != std::string_view::npos) {
    return MonomialIdeal::zero(variable_count);
  }
  std::vector<Monomial> gens;
  while (true) {
    const auto comma = text.find(',');
    const auto piece = text.substr(0, comma);
    if (piece.find_first_not_of(" \t") == std::string_view::npos) {
      if (comma == std::string_view::npos && gens.empty()) break;
      throw ParseError("empty generator in ideal");
    }
    gens.push_back(parse_monomial(piece, variable_count));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return MonomialIdeal(variable_count, std::move(gens));
}

}  // namespace edgereg::algebra
