#include "edgereg/field.hpp"

#include <charconv>
#include <stdexcept>

#include "edgereg/errors.hpp"

namespace edgereg::res {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  // Products of two residues must fit in 64 bits.
  if (p >= (1U << 31)) throw std::invalid_argument("prime too large");
  Field f;
  f.kind_ = Kind::prime;
  f.prime_ = p;
  return f;
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ" || text == "rationals") return rationals();
  std::string_view digits = text;
  if (digits.starts_with("GF(") && digits.ends_with(")")) {
    digits = digits.substr(3, digits.size() - 4);
  } else if (digits.starts_with("GF")) {
    digits = digits.substr(2);
  }
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw ParseError("unknown field '" + std::string(text) + "' (expected Q or GF(p))");
  }
  try {
    return prime_field(p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string Field::name() const { return is_rationals() ? "Q" : "GF(" + std::to_string(prime_) + ")"; }

}  // namespace edgereg::res
