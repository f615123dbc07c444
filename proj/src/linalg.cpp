#include "edgereg/linalg.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace edgereg::res {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Column elimination keyed on the largest row index ("low") of each column.
// A column whose low row is not yet claimed becomes a pivot column.
template <typename Value, typename Reduce>
std::size_t column_rank(std::vector<std::map<std::size_t, Value>> columns, Reduce&& reduce) {
  std::unordered_map<std::size_t, std::size_t> pivot_for_row;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    auto& col = columns[j];
    while (!col.empty()) {
      const std::size_t low = col.rbegin()->first;
      auto it = pivot_for_row.find(low);
      if (it == pivot_for_row.end()) {
        pivot_for_row.emplace(low, j);
        ++rank;
        break;
      }
      reduce(col, columns[it->second], low);
    }
  }
  return rank;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  auto inverse = [p](std::uint64_t a) {
    std::uint64_t result = 1;
    std::uint64_t e = p - 2;
    while (e > 0) {
      if (e & 1U) result = result * a % p;
      a = a * a % p;
      e >>= 1U;
    }
    return result;
  };
  std::vector<std::map<std::size_t, std::uint64_t>> columns(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (auto [row, value] : m.columns[j]) {
      const auto r = static_cast<std::uint64_t>(((value % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                                static_cast<std::int64_t>(p));
      if (r != 0) columns[j][row] = r;
    }
  }
  return column_rank(std::move(columns), [&](auto& col, const auto& pivot, std::size_t low) {
    // col -= (col[low] / pivot[low]) * pivot
    const std::uint64_t factor = col.at(low) * inverse(pivot.at(low)) % p;
    for (auto [row, value] : pivot) {
      auto& entry = col[row];
      entry = (entry + p - factor * value % p) % p;
      if (entry == 0) col.erase(row);
    }
  });
}

std::size_t rank_rational(const SparseMatrix& m) {
  std::vector<std::map<std::size_t, BigInt>> columns(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (auto [row, value] : m.columns[j])
      if (value != 0) columns[j][row] = value;
  }
  return column_rank(std::move(columns), [](auto& col, const auto& pivot, std::size_t low) {
    // col <- pivot[low] * col - col[low] * pivot, then divide out the content.
    const BigInt a = pivot.at(low);
    const BigInt b = col.at(low);
    for (auto& [row, value] : col) value *= a;
    for (const auto& [row, value] : pivot) col[row] -= b * value;
    BigInt content = 0;
    for (auto it = col.begin(); it != col.end();) {
      if (it->second == 0) {
        it = col.erase(it);
      } else {
        content = boost::multiprecision::gcd(content, boost::multiprecision::abs(it->second));
        ++it;
      }
    }
    if (content > 1)
      for (auto& [row, value] : col) value /= content;
  });
}

}  // namespace

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  SparseMatrix m;
  m.rows = dense.size();
  const std::size_t cols = dense.empty() ? 0 : dense.front().size();
  m.columns.resize(cols);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j)
      if (dense[i][j] != 0) m.columns[j].emplace_back(i, dense[i][j]);
  }
  return m;
}

std::size_t rank(const SparseMatrix& m, const Field& field) {
  if (field.is_rationals()) return rank_rational(m);
  return rank_mod_p(m, field.characteristic());
}

std::size_t rank(const std::vector<std::vector<std::int64_t>>& dense, const Field& field) {
  return rank(SparseMatrix::from_dense(dense), field);
}

}  // namespace edgereg::res
