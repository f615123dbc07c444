#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>

#include "edgereg/field.hpp"
#include "edgereg/ideal.hpp"
#include "edgereg/lcm_lattice.hpp"
#include "edgereg/simplicial.hpp"

namespace edgereg::res {

/// Guardrails for the exponential parts of the engine. Every report carries
/// the caps it ran with.
struct EngineCaps {
  std::size_t lattice_elements = std::size_t{1} << 18;
  std::size_t order_complex_faces = std::size_t{1} << 22;
  std::size_t taylor_generators = 16;
  std::size_t linear_quotient_generators = 24;
  std::chrono::milliseconds linear_quotient_budget{10'000};

  friend bool operator==(const EngineCaps&, const EngineCaps&) = default;
};

/// How the open interval (bottom, m) of the lcm lattice is turned into a
/// simplicial complex. Both give complexes homotopy equivalent to the order
/// complex of the interval: `order_complex` materializes every chain,
/// `coatom_crosscut` uses the crosscut complex on the coatoms of [bottom, m]
/// (sets of coatoms whose meet is above bottom), which has at most as many
/// vertices as there are variables.
enum class IntervalMethod { coatom_crosscut, order_complex };

struct BettiOptions {
  Field field;
  EngineCaps caps;
  IntervalMethod method = IntervalMethod::coatom_crosscut;
  bool multigraded = false;
};

/// Graded Betti numbers beta_{i,j}, optionally refined by multidegree.
/// Only nonzero entries are stored.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(Field field) : field_(field) {}

  void add(int i, int j, std::uint64_t count);
  void add(int i, const Monomial& multidegree, std::uint64_t count, bool keep_multigraded);

  const Field& field() const { return field_; }
  std::uint64_t at(int i, int j) const;
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return graded_; }
  const std::map<std::pair<int, Monomial>, std::uint64_t>& multigraded() const { return multi_; }
  bool has_multigraded() const { return !multi_.empty(); }
  bool empty() const { return graded_.empty(); }

  /// max(j - i) over nonzero entries; std::domain_error when empty.
  int regularity() const;
  /// max i over nonzero entries; std::domain_error when empty.
  int projective_dimension() const;
  /// Copy without the multigraded refinement.
  BettiTable graded_only() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  Field field_;
  std::map<std::pair<int, int>, std::uint64_t> graded_;
  std::map<std::pair<int, Monomial>, std::uint64_t> multi_;
};

/// Complex whose reduced homology is that of the open interval (bottom, m).
SimplicialComplex interval_complex(const LcmLattice& lattice, const Monomial& m, IntervalMethod method,
                                   const EngineCaps& caps);
/// Order complex of (bottom, m): one face per chain, vertices indexed by
/// position in lattice.elements().
SimplicialComplex order_complex(const LcmLattice& lattice, const Monomial& m, std::size_t max_faces);

/// beta_{i,m}(I) = dim reduced H_{i-1} of the open interval (bottom, m) of the
/// lcm lattice, summed over multidegrees of total degree j.
BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options = {});

/// Independent route: Tor from the Taylor complex. The degree-m strand has a
/// basis of generator subsets with lcm exactly m and the differential keeps
/// only faces with the same lcm. Throws CapExceeded past
/// caps.taylor_generators generators.
BettiTable taylor_betti_oracle(const MonomialIdeal& ideal, const BettiOptions& options = {});

/// Throw std::domain_error for the zero and unit ideals.
int regularity(const MonomialIdeal& ideal, const BettiOptions& options = {});
int projective_dimension(const MonomialIdeal& ideal, const BettiOptions& options = {});
/// Throws std::invalid_argument when generators have mixed degrees.
bool has_linear_resolution(const MonomialIdeal& ideal, const BettiOptions& options = {});
/// The same test on an already computed table of an ideal generated in degree d.
bool is_linear(const BettiTable& table, int d);

}  // namespace edgereg::res
