#include "edgereg/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <regex>
#include <stdexcept>

#include "edgereg/errors.hpp"

namespace edgereg::algebra {

Monomial::Monomial(int variable_count) {
  if (variable_count < 0) throw std::invalid_argument("negative variable count");
  exps_.assign(static_cast<std::size_t>(variable_count), 0);
}

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

Monomial::Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

Monomial Monomial::variable(int variable_count, int index) {
  if (index < 0 || index >= variable_count) throw std::invalid_argument("variable index out of range");
  Monomial m(variable_count);
  m.exps_[static_cast<std::size_t>(index)] = 1;
  return m;
}

Monomial Monomial::squarefree(int variable_count, std::span<const int> indices) {
  Monomial m(variable_count);
  for (int i : indices) {
    if (i < 0 || i >= variable_count) throw std::invalid_argument("variable index out of range");
    m.exps_[static_cast<std::size_t>(i)] = 1;
  }
  return m;
}

int Monomial::degree() const {
  std::uint64_t d = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  if (d > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) throw std::overflow_error("degree overflow");
  return static_cast<int>(d);
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::optional<int> Monomial::as_variable() const {
  if (degree() != 1) return std::nullopt;
  return static_cast<int>(std::find(exps_.begin(), exps_.end(), Exponent{1}) - exps_.begin());
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (int i = 0; i < variable_count(); ++i)
    if (exps_[i] != 0) out.push_back(i);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) throw std::invalid_argument("ambient mismatch between monomials");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::embed(int variable_count) const {
  if (variable_count < this->variable_count()) throw std::invalid_argument("cannot embed into fewer variables");
  auto exps = exps_;
  exps.resize(static_cast<std::size_t>(variable_count), 0);
  return Monomial(std::move(exps));
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < variable_count(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void check_ambient(const Monomial& a, const Monomial& b) {
  if (a.variable_count() != b.variable_count()) throw std::invalid_argument("ambient mismatch between monomials");
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_ambient(a, b);
  std::vector<Exponent> exps(a.exps_.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (a.exps_[i] > std::numeric_limits<Exponent>::max() - b.exps_[i]) throw std::overflow_error("exponent overflow");
    exps[i] = a.exps_[i] + b.exps_[i];
  }
  return Monomial(std::move(exps));
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::invalid_argument(b.to_string() + " does not divide " + a.to_string());
  std::vector<Exponent> exps(a.exps_.size());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = a.exps_[i] - b.exps_[i];
  return Monomial(std::move(exps));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_ambient(a, b);
  std::vector<Exponent> exps(static_cast<std::size_t>(a.variable_count()));
  for (int i = 0; i < a.variable_count(); ++i) exps[i] = std::max(a[i], b[i]);
  return Monomial(std::move(exps));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_ambient(a, b);
  std::vector<Exponent> exps(static_cast<std::size_t>(a.variable_count()));
  for (int i = 0; i < a.variable_count(); ++i) exps[i] = std::min(a[i], b[i]);
  return Monomial(std::move(exps));
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  check_ambient(a, b);
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  for (int i = 0; i < a.variable_count(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Exponent e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_number(std::string_view s, std::string_view whole) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("malformed monomial '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Monomial parse_monomial(std::string_view text, int variable_count) {
  const std::string_view whole = text;
  text = trim(text);
  Monomial result(variable_count);
  if (text == "1") return result;
  if (text.empty()) throw ParseError("empty monomial");
  std::vector<Exponent> exps(static_cast<std::size_t>(variable_count), 0);
  while (!text.empty()) {
    const auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    if (star != std::string_view::npos && trim(text).empty()) throw ParseError("dangling '*' in '" + std::string(whole) + "'");
    if (factor.size() < 2 || factor[0] != 'x') throw ParseError("malformed factor in '" + std::string(whole) + "'");
    const auto caret = factor.find('^');
    const auto index = parse_number(factor.substr(1, caret == std::string_view::npos ? factor.npos : caret - 1), whole);
    std::uint64_t power = 1;
    if (caret != std::string_view::npos) power = parse_number(factor.substr(caret + 1), whole);
    if (index >= static_cast<std::uint64_t>(variable_count)) {
      throw ParseError("variable x" + std::to_string(index) + " outside ambient of " + std::to_string(variable_count) +
                       " variables");
    }
    const std::uint64_t total = exps[index] + power;
    if (total > std::numeric_limits<Exponent>::max()) throw ParseError("exponent overflow");
    exps[index] = static_cast<Exponent>(total);
  }
  return Monomial(std::move(exps));
}

int max_variable_index_plus_one(std::string_view text) {
  static const std::regex var_re(R"(x(\d+))");
  int best = 0;
  const std::string s(text);
  for (auto it = std::sregex_iterator(s.begin(), s.end(), var_re); it != std::sregex_iterator(); ++it) {
    best = std::max(best, std::stoi((*it)[1]) + 1);
  }
  return best;
}

}  // namespace edgereg::algebra
