#pragma once

#include <map>
#include <vector>

#include "sv/rational.hpp"

namespace sv {

// Sparse row over column indices, kept sorted by column, no zero entries.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Incremental exact row echelon structure over Q. Insertion order does not
// affect the final reduced form: rref() produces the canonical reduced row
// echelon basis of the row space, so downstream output is deterministic.
class RowEchelon {
 public:
  // Reduce r against current pivots; store if nonzero. Returns true if the
  // row enlarged the row space. `reduced` receives the reduced row.
  bool insert(SparseRow r, SparseRow* reduced = nullptr);

  // Full backward reduction to RREF (unique for the row space).
  void reduce_fully();

  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, std::size_t>& pivots() const { return pivot_row_; }
  const std::vector<SparseRow>& rows() const { return rows_; }

  // Kernel of the matrix whose rows are this row space, over `cols` columns:
  // one basis vector per free column, free coordinate set to 1. Requires
  // reduce_fully() first. Vectors come out in free-column order.
  std::vector<std::vector<Rational>> kernel(std::size_t cols) const;

 private:
  std::vector<SparseRow> rows_;                   // echelon rows, lead coeff 1
  std::map<std::size_t, std::size_t> pivot_row_;  // pivot column -> row index
};

SparseRow row_sub_scaled(const SparseRow& a, const SparseRow& b, const Rational& c);

}  // namespace sv
