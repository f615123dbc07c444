#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "edgereg/field.hpp"

namespace edgereg::res {

/// Integer matrix stored by columns; each column is a list of
/// (row, value) pairs with distinct rows and nonzero values.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;

  std::size_t cols() const { return columns.size(); }
  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);
};

/// Exact rank of an integer matrix over `field`. Over GF(p) entries are
/// reduced mod p and eliminated modularly. Over Q columns are combined
/// fraction-free (integer multiples only, with content removal after every
/// step) in arbitrary precision.
std::size_t rank(const SparseMatrix& m, const Field& field);
std::size_t rank(const std::vector<std::vector<std::int64_t>>& dense, const Field& field);

}  // namespace edgereg::res
