#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edgereg::algebra {

using Exponent = std::uint32_t;

/// Exponent vector over a fixed number of variables x0..x{n-1}. The unit
/// monomial is the all-zero vector. Products overflowing an exponent throw
/// std::overflow_error.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int variable_count);
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  static Monomial variable(int variable_count, int index);
  /// Squarefree product of the listed variables.
  static Monomial squarefree(int variable_count, std::span<const int> indices);

  int variable_count() const { return static_cast<int>(exps_.size()); }
  Exponent operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  std::span<const Exponent> exponents() const { return exps_; }
  int degree() const;
  bool is_unit() const;
  /// Index of the variable if this monomial is a single variable.
  std::optional<int> as_variable() const;
  std::vector<int> support() const;

  bool divides(const Monomial& other) const;
  Monomial embed(int variable_count) const;
  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; throws std::invalid_argument if b does not divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic order on exponent vectors (for containers).
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Graded lexicographic order with x0 > x1 > ...: total degree first, then
/// the first differing exponent decides.
bool grlex_less(const Monomial& a, const Monomial& b);
inline bool grlex_greater(const Monomial& a, const Monomial& b) { return grlex_less(b, a); }

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Parses `x0^2*x1` style text; "1" is the unit. Variables beyond
/// `variable_count` are a ParseError.
Monomial parse_monomial(std::string_view text, int variable_count);
/// One more than the largest variable index mentioned, or 0.
int max_variable_index_plus_one(std::string_view text);

}  // namespace edgereg::algebra
