#include "edgereg/linear_quotients.hpp"

#include <chrono>
#include <stdexcept>
#include <unordered_set>

namespace edgereg::res {

namespace {

// Colon (prefix : m) is variable-generated iff every quotient g / gcd(g, m)
// is divisible by a variable that itself occurs as such a quotient.
bool colon_is_linear(std::span<const Monomial> prefix, const Monomial& m) {
  if (prefix.empty()) return true;
  std::vector<Monomial> quotients;
  quotients.reserve(prefix.size());
  std::vector<bool> linear_var(static_cast<std::size_t>(m.variable_count()), false);
  for (const auto& g : prefix) {
    auto q = g / algebra::gcd(g, m);
    if (q.is_unit()) return false;
    if (auto v = q.as_variable()) linear_var[static_cast<std::size_t>(*v)] = true;
    quotients.push_back(std::move(q));
  }
  for (const auto& q : quotients) {
    bool covered = false;
    for (int v : q.support()) {
      if (linear_var[static_cast<std::size_t>(v)]) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

struct QuotientSearch {
  const std::vector<Monomial>& gens;
  std::chrono::steady_clock::time_point deadline;
  std::unordered_set<std::uint64_t> dead;
  std::vector<Monomial> prefix;
  bool timed_out = false;
  std::size_t steps = 0;

  bool run(std::uint64_t used) {
    if (prefix.size() == gens.size()) return true;
    if (dead.contains(used)) return false;
    if ((++steps & 1023U) == 0 && std::chrono::steady_clock::now() > deadline) timed_out = true;
    if (timed_out) return false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if ((used >> k) & 1U) continue;
      if (!colon_is_linear(prefix, gens[k])) continue;
      prefix.push_back(gens[k]);
      if (run(used | (std::uint64_t{1} << k))) return true;
      prefix.pop_back();
      if (timed_out) return false;
    }
    dead.insert(used);
    return false;
  }
};

}  // namespace

bool is_linear_quotient_order(std::span<const Monomial> order) {
  for (std::size_t l = 1; l < order.size(); ++l) {
    if (!colon_is_linear(order.subspan(0, l), order[l])) return false;
  }
  return true;
}

LinearQuotientsResult has_linear_quotients(const MonomialIdeal& ideal, const EngineCaps& caps) {
  if (ideal.is_zero()) throw std::domain_error("linear quotients of the zero ideal");
  if (ideal.is_unit()) throw std::domain_error("linear quotients of the unit ideal");
  LinearQuotientsResult result;
  const auto& gens = ideal.generators();
  if (gens.size() > caps.linear_quotient_generators || gens.size() > 64) {
    result.reason = "generator count " + std::to_string(gens.size()) + " exceeds the cap of " +
                    std::to_string(caps.linear_quotient_generators);
    return result;
  }
  QuotientSearch search{gens, std::chrono::steady_clock::now() + caps.linear_quotient_budget, {}, {}};
  if (search.run(0)) {
    result.status = QuotientsStatus::found;
    result.order = std::move(search.prefix);
  } else if (search.timed_out) {
    result.reason = "time budget of " + std::to_string(caps.linear_quotient_budget.count()) + " ms exhausted";
  } else {
    result.status = QuotientsStatus::none;
  }
  return result;
}

}  // namespace edgereg::res
