#include "edgereg/lcm_lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "edgereg/errors.hpp"

namespace edgereg::res {

LcmLattice LcmLattice::build(const MonomialIdeal& ideal, std::size_t max_elements) {
  if (ideal.is_zero()) throw std::domain_error("lcm lattice of the zero ideal");
  if (ideal.is_unit()) throw std::domain_error("lcm lattice of the unit ideal");
  LcmLattice lattice;
  lattice.ideal_ = ideal;
  std::unordered_set<Monomial, algebra::MonomialHash> seen;
  std::vector<Monomial> all;
  // Adding generators one at a time: new elements are g and lcm(g, e) for
  // every element e already present.
  for (const auto& g : ideal.generators()) {
    const std::size_t existing = all.size();
    if (seen.insert(g).second) all.push_back(g);
    for (std::size_t k = 0; k < existing; ++k) {
      auto m = algebra::lcm(g, all[k]);
      if (seen.insert(m).second) {
        all.push_back(std::move(m));
        if (all.size() + 1 > max_elements) {
          throw CapExceeded("lcm lattice exceeds the cap of " + std::to_string(max_elements) + " elements");
        }
      }
    }
    if (all.size() + 1 > max_elements) {
      throw CapExceeded("lcm lattice exceeds the cap of " + std::to_string(max_elements) + " elements");
    }
  }
  std::sort(all.begin(), all.end(), algebra::grlex_less);
  lattice.elements_ = std::move(all);
  for (std::size_t i = 0; i < lattice.elements_.size(); ++i) lattice.index_.emplace(lattice.elements_[i], i);
  return lattice;
}

std::optional<std::size_t> LcmLattice::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool LcmLattice::is_atom(const Monomial& m) const {
  const auto& gens = ideal_.generators();
  return std::find(gens.begin(), gens.end(), m) != gens.end();
}

std::optional<Monomial> LcmLattice::meet(const Monomial& a, const Monomial& b) const {
  const Monomial g = algebra::gcd(a, b);
  std::optional<Monomial> result;
  for (const auto& gen : ideal_.generators()) {
    if (!gen.divides(g)) continue;
    result = result ? algebra::lcm(*result, gen) : gen;
  }
  return result;
}

std::vector<std::size_t> LcmLattice::open_interval(const Monomial& m) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] != m && elements_[i].divides(m)) out.push_back(i);
  }
  return out;
}

std::vector<Monomial> LcmLattice::coatoms_below(const Monomial& m) const {
  // Every element strictly below m divides m / x_i for some x_i in supp(m),
  // and the largest such element is the lcm of the generators dividing
  // m / x_i. The coatoms are the maximal ones among these candidates.
  std::vector<Monomial> candidates;
  const int n = m.variable_count();
  for (int i : m.support()) {
    const Monomial reduced = m / Monomial::variable(n, i);
    std::optional<Monomial> top;
    for (const auto& gen : ideal_.generators()) {
      if (gen.divides(reduced)) top = top ? algebra::lcm(*top, gen) : gen;
    }
    if (top && std::find(candidates.begin(), candidates.end(), *top) == candidates.end()) {
      candidates.push_back(std::move(*top));
    }
  }
  std::vector<Monomial> coatoms;
  for (const auto& c : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                       [&](const Monomial& d) { return d != c && c.divides(d); });
    if (!dominated) coatoms.push_back(c);
  }
  std::sort(coatoms.begin(), coatoms.end(), algebra::grlex_greater);
  return coatoms;
}

}  // namespace edgereg::res
