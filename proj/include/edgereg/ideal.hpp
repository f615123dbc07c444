#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/monomial.hpp"

namespace edgereg::algebra {

/// Monomial ideal held as its minimal generating set G(I). Generators are
/// kept in descending graded lexicographic order, which is the canonical
/// ordering used wherever a result depends on an ordering of G(I).
/// The zero ideal has no generators; the unit ideal is {1}.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `generators`; every generator must live in `variable_count`
  /// variables.
  MonomialIdeal(int variable_count, std::vector<Monomial> generators);

  static MonomialIdeal zero(int variable_count);
  static MonomialIdeal unit(int variable_count);
  static MonomialIdeal principal(const Monomial& m);

  int variable_count() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }

  bool contains(const Monomial& m) const;
  /// Containment J ⊆ *this, checked generator by generator.
  bool contains(const MonomialIdeal& j) const;
  /// Appends zero exponents for new trailing variables.
  MonomialIdeal embed(int variable_count) const;
  /// "(x0*x1, x1*x2)"; "(0)" for the zero ideal.
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int vars_ = 0;
  std::vector<Monomial> gens_;
};

/// Drops every monomial divisible by another one in the set.
MonomialIdeal minimalize(int variable_count, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal product(const MonomialIdeal& i, const MonomialIdeal& j);
/// power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& i, int k);
/// (I : m) = ( g / gcd(g, m) : g ∈ G(I) ).
MonomialIdeal colon(const MonomialIdeal& i, const Monomial& m);
MonomialIdeal intersection(const MonomialIdeal& i, const MonomialIdeal& j);
/// (I, m).
MonomialIdeal with_generator(const MonomialIdeal& i, const Monomial& m);

MonomialIdeal variable_ideal(int variable_count, graph::VertexSet vars);
/// True iff every minimal generator is a variable. Zero and unit ideals are
/// not variable-generated.
bool is_generated_by_variables(const MonomialIdeal& i);
/// d if all minimal generators have degree d. Throws std::domain_error for
/// the zero ideal.
std::optional<int> generated_in_single_degree(const MonomialIdeal& i);

/// I(G) in vertex_count(g) variables. Throws std::domain_error if g has no
/// edges.
MonomialIdeal edge_ideal(const graph::Graph& g);

/// Generators sorted by an explicit order, or the canonical one.
std::vector<Monomial> ordered_generators(const MonomialIdeal& i, std::span<const Monomial> order = {});

/// Comma separated monomials, optionally wrapped in parentheses.
MonomialIdeal parse_ideal(std::string_view text, int variable_count);

}  // namespace edgereg::algebra
