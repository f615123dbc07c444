#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "edgereg/ideal.hpp"

namespace edgereg::res {

using algebra::Monomial;
using algebra::MonomialIdeal;

/// Lattice of least common multiples of nonempty subsets of G(I), with a
/// formal bottom element below every generator. Order is divisibility; join
/// is lcm; the meet of a and b is the lcm of the generators dividing
/// gcd(a, b), or bottom when there are none.
class LcmLattice {
 public:
  /// Throws std::domain_error for the zero or unit ideal and CapExceeded if
  /// the lattice (bottom included) would exceed `max_elements`.
  static LcmLattice build(const MonomialIdeal& ideal, std::size_t max_elements);

  const MonomialIdeal& ideal() const { return ideal_; }
  /// Elements above bottom, ordered by ascending degree (a divisor always
  /// precedes its multiples).
  const std::vector<Monomial>& elements() const { return elements_; }
  /// Element count including bottom.
  std::size_t size() const { return elements_.size() + 1; }

  std::optional<std::size_t> index_of(const Monomial& m) const;
  bool contains(const Monomial& m) const { return index_of(m).has_value(); }
  bool is_atom(const Monomial& m) const;

  /// std::nullopt stands for bottom.
  std::optional<Monomial> meet(const Monomial& a, const Monomial& b) const;
  Monomial join(const Monomial& a, const Monomial& b) const { return algebra::lcm(a, b); }

  /// Indices of lattice elements strictly between bottom and m.
  std::vector<std::size_t> open_interval(const Monomial& m) const;
  /// Coatoms of the interval [bottom, m]; empty when m is an atom.
  std::vector<Monomial> coatoms_below(const Monomial& m) const;

 private:
  MonomialIdeal ideal_;
  std::vector<Monomial> elements_;
  std::unordered_map<Monomial, std::size_t, algebra::MonomialHash> index_;
};

}  // namespace edgereg::res
