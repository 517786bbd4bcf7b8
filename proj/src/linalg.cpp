#include "sv/linalg.hpp"

#include <algorithm>

namespace sv {

// a - c * b, merging sorted sparse rows
SparseRow row_sub_scaled(const SparseRow& a, const SparseRow& b, const Rational& c) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      Rational v = -c * ib->second;
      if (v != 0) out.emplace_back(ib->first, v);
      ++ib;
    } else {
      Rational v = ia->second - c * ib->second;
      if (v != 0) out.emplace_back(ia->first, v);
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool RowEchelon::insert(SparseRow r, SparseRow* reduced) {
  while (!r.empty()) {
    auto it = pivot_row_.find(r.front().first);
    if (it == pivot_row_.end()) break;
    r = row_sub_scaled(r, rows_[it->second], r.front().second);
  }
  if (reduced) *reduced = r;
  if (r.empty()) return false;
  Rational lead = r.front().second;
  if (lead != 1)
    for (auto& [col, v] : r) v /= lead;
  if (reduced) *reduced = r;
  pivot_row_.emplace(r.front().first, rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

void RowEchelon::reduce_fully() {
  // eliminate every pivot column from every other row, highest pivot last
  for (auto it = pivot_row_.rbegin(); it != pivot_row_.rend(); ++it) {
    const auto& [col, ri] = *it;
    for (std::size_t j = 0; j < rows_.size(); j++) {
      if (j == ri) continue;
      SparseRow& row = rows_[j];
      auto found = std::lower_bound(
          row.begin(), row.end(), col,
          [](const std::pair<std::size_t, Rational>& e, std::size_t c) { return e.first < c; });
      if (found != row.end() && found->first == col) {
        Rational c = found->second;
        row = row_sub_scaled(row, rows_[ri], c);
      }
    }
  }
}

std::vector<std::vector<Rational>> RowEchelon::kernel(std::size_t cols) const {
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < cols; f++) {
    if (pivot_row_.count(f)) continue;
    std::vector<Rational> v(cols, rat(0));
    v[f] = rat(1);
    for (const auto& [p, ri] : pivot_row_) {
      for (const auto& [col, val] : rows_[ri]) {
        if (col == f) {
          v[p] = -val;
          break;
        }
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace sv
