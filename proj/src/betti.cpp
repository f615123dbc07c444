#include "edgereg/betti.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "edgereg/errors.hpp"
#include "edgereg/linalg.hpp"

namespace edgereg::res {

// ---------------------------------------------------------------------------
// BettiTable

void BettiTable::add(int i, int j, std::uint64_t count) {
  if (count == 0) return;
  graded_[{i, j}] += count;
}

void BettiTable::add(int i, const Monomial& multidegree, std::uint64_t count, bool keep_multigraded) {
  if (count == 0) return;
  add(i, multidegree.degree(), count);
  if (keep_multigraded) multi_[{i, multidegree}] += count;
}

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = graded_.find({i, j});
  return it == graded_.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
  if (graded_.empty()) throw std::domain_error("regularity of an empty Betti table");
  int reg = std::numeric_limits<int>::min();
  for (const auto& [key, value] : graded_) reg = std::max(reg, key.second - key.first);
  return reg;
}

int BettiTable::projective_dimension() const {
  if (graded_.empty()) throw std::domain_error("projective dimension of an empty Betti table");
  return graded_.rbegin()->first.first;
}

BettiTable BettiTable::graded_only() const {
  BettiTable out(field_);
  out.graded_ = graded_;
  return out;
}

// ---------------------------------------------------------------------------
// interval complexes

SimplicialComplex order_complex(const LcmLattice& lattice, const Monomial& m, std::size_t max_faces) {
  const auto below = lattice.open_interval(m);
  const auto& elements = lattice.elements();
  const int k = static_cast<int>(below.size());
  // cover[a] lists positions b > a (in the degree-sorted interval) with
  // element a strictly dividing element b.
  std::vector<std::vector<int>> above(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (elements[below[a]].divides(elements[below[b]])) above[a].push_back(b);
    }
  }
  std::vector<Face> faces{Face{}};
  Face chain;
  auto extend = [&](auto&& self, int last) -> void {
    for (int next : above[static_cast<std::size_t>(last)]) {
      chain.push_back(next);
      faces.push_back(chain);
      if (faces.size() > max_faces) {
        throw CapExceeded("order complex exceeds the cap of " + std::to_string(max_faces) + " faces");
      }
      self(self, next);
      chain.pop_back();
    }
  };
  for (int a = 0; a < k; ++a) {
    chain.assign(1, a);
    faces.push_back(chain);
    if (faces.size() > max_faces) {
      throw CapExceeded("order complex exceeds the cap of " + std::to_string(max_faces) + " faces");
    }
    extend(extend, a);
  }
  return SimplicialComplex::from_faces(k, std::move(faces));
}

namespace {

SimplicialComplex coatom_crosscut(const LcmLattice& lattice, const Monomial& m) {
  const auto coatoms = lattice.coatoms_below(m);
  const int c = static_cast<int>(coatoms.size());
  if (c == 0) return SimplicialComplex::empty_complex(0);
  if (c > 30) throw CapExceeded("too many coatoms for the crosscut complex");
  std::vector<Monomial> relevant;
  for (const auto& g : lattice.ideal().generators())
    if (g.divides(m)) relevant.push_back(g);

  std::vector<Face> faces{Face{}};
  std::vector<Monomial> meet_gcd(std::size_t{1} << c);
  std::vector<bool> alive(std::size_t{1} << c, false);
  meet_gcd[0] = m;
  alive[0] = true;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c); ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    if (!alive[rest]) continue;
    meet_gcd[mask] = algebra::gcd(meet_gcd[rest], coatoms[static_cast<std::size_t>(low)]);
    const bool above_bottom =
        std::any_of(relevant.begin(), relevant.end(), [&](const Monomial& g) { return g.divides(meet_gcd[mask]); });
    if (!above_bottom) continue;
    alive[mask] = true;
    Face f;
    for (int v = 0; v < c; ++v)
      if ((mask >> v) & 1U) f.push_back(v);
    faces.push_back(std::move(f));
  }
  return SimplicialComplex::from_faces(c, std::move(faces));
}

}  // namespace

SimplicialComplex interval_complex(const LcmLattice& lattice, const Monomial& m, IntervalMethod method,
                                   const EngineCaps& caps) {
  if (method == IntervalMethod::order_complex) return order_complex(lattice, m, caps.order_complex_faces);
  return coatom_crosscut(lattice, m);
}

// ---------------------------------------------------------------------------
// engines

namespace {

void require_proper(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("Betti numbers requested for the zero ideal");
  if (ideal.is_unit()) throw std::domain_error("Betti numbers requested for the unit ideal");
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options) {
  require_proper(ideal);
  const auto lattice = LcmLattice::build(ideal, options.caps.lattice_elements);
  BettiTable table(options.field);
  for (const auto& m : lattice.elements()) {
    const auto complex = interval_complex(lattice, m, options.method, options.caps);
    for (const auto& [dim, rank] : reduced_homology_ranks(complex, options.field)) {
      table.add(dim + 1, m, rank, options.multigraded);
    }
  }
  return table;
}

BettiTable taylor_betti_oracle(const MonomialIdeal& ideal, const BettiOptions& options) {
  require_proper(ideal);
  const auto& gens = ideal.generators();
  const std::size_t r = gens.size();
  if (r > options.caps.taylor_generators || r > 30) {
    throw CapExceeded("Taylor oracle limited to " + std::to_string(options.caps.taylor_generators) +
                      " generators, ideal has " + std::to_string(r));
  }
  const std::uint32_t subsets = std::uint32_t{1} << r;
  std::vector<Monomial> lcms(subsets);
  lcms[0] = Monomial(ideal.variable_count());
  std::unordered_map<Monomial, std::vector<std::uint32_t>, algebra::MonomialHash> strands;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    const int low = std::countr_zero(mask);
    lcms[mask] = algebra::lcm(lcms[mask & (mask - 1)], gens[static_cast<std::size_t>(low)]);
    strands[lcms[mask]].push_back(mask);
  }

  BettiTable table(options.field);
  for (const auto& [m, masks] : strands) {
    // Faces of the strand by size; the differential drops one generator and
    // survives only when the lcm is unchanged.
    std::vector<std::vector<std::uint32_t>> by_size(r + 2);
    for (auto mask : masks) by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    std::vector<std::unordered_map<std::uint32_t, std::size_t>> position(r + 2);
    for (std::size_t s = 0; s < by_size.size(); ++s)
      for (std::size_t k = 0; k < by_size[s].size(); ++k) position[s].emplace(by_size[s][k], k);

    std::vector<std::size_t> diff_rank(r + 3, 0);  // diff_rank[s]: size s -> size s-1
    for (std::size_t s = 2; s <= r; ++s) {
      SparseMatrix d;
      d.rows = by_size[s - 1].size();
      d.columns.resize(by_size[s].size());
      for (std::size_t k = 0; k < by_size[s].size(); ++k) {
        const auto mask = by_size[s][k];
        int sign_index = 0;
        for (int bit = 0; bit < static_cast<int>(r); ++bit) {
          if (!((mask >> bit) & 1U)) continue;
          const auto face = mask & ~(std::uint32_t{1} << bit);
          auto it = position[s - 1].find(face);
          if (it != position[s - 1].end()) d.columns[k].emplace_back(it->second, sign_index % 2 == 0 ? 1 : -1);
          ++sign_index;
        }
      }
      diff_rank[s] = rank(d, options.field);
    }
    for (std::size_t s = 1; s <= r; ++s) {
      const std::size_t homology = by_size[s].size() - diff_rank[s] - diff_rank[s + 1];
      table.add(static_cast<int>(s) - 1, m, homology, options.multigraded);
    }
  }
  return table;
}

int regularity(const MonomialIdeal& ideal, const BettiOptions& options) {
  return betti_table(ideal, options).regularity();
}

int projective_dimension(const MonomialIdeal& ideal, const BettiOptions& options) {
  return betti_table(ideal, options).projective_dimension();
}

bool is_linear(const BettiTable& table, int d) {
  return std::all_of(table.entries().begin(), table.entries().end(),
                     [d](const auto& entry) { return entry.first.second == entry.first.first + d; });
}

bool has_linear_resolution(const MonomialIdeal& ideal, const BettiOptions& options) {
  require_proper(ideal);
  const auto d = algebra::generated_in_single_degree(ideal);
  if (!d) throw std::invalid_argument("linear resolution needs generators of a single degree: " + ideal.to_string());
  return is_linear(betti_table(ideal, options), *d);
}

}  // namespace edgereg::res
