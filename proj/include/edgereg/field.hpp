#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace edgereg::res {

/// Coefficient field for homology: the rationals or GF(p).
class Field {
 public:
  enum class Kind { rationals, prime };

  Field() = default;
  static Field rationals() { return Field(); }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime_field(std::uint32_t p);
  /// "Q", "QQ", "GF(p)", "GFp" or a bare prime.
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return prime_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Kind kind_ = Kind::rationals;
  std::uint32_t prime_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace edgereg::res
