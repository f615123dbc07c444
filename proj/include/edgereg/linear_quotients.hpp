#pragma once

#include <span>
#include <string>
#include <vector>

#include "edgereg/betti.hpp"
#include "edgereg/ideal.hpp"

namespace edgereg::res {

enum class QuotientsStatus { found, none, unknown };

struct LinearQuotientsResult {
  QuotientsStatus status = QuotientsStatus::unknown;
  std::vector<Monomial> order;  // set when found
  std::string reason;           // set when unknown
};

/// True iff ((m_1, ..., m_l) : m_{l+1}) is generated by variables for every
/// l >= 1.
bool is_linear_quotient_order(std::span<const Monomial> order);

/// Depth-first search over generator orderings, extending a prefix only by
/// generators whose colon is variable-generated. Prefixes are memoized as
/// sets since the admissible extensions depend only on the set. Returns
/// `unknown` past caps.linear_quotient_generators generators or when the
/// time budget runs out. Throws std::domain_error for zero/unit ideals.
LinearQuotientsResult has_linear_quotients(const MonomialIdeal& ideal, const EngineCaps& caps = {});

}  // namespace edgereg::res
