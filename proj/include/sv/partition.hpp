#pragma once

#include <functional>
#include <map>
#include <vector>

#include "sv/rational.hpp"

namespace sv {

// Exponent maps: part (or index) -> multiplicity, multiplicities always > 0.
// A partition has parts >= 1, a pseudopartition parts >= 0 (0-parts carry
// L_0 or Y_{-1/2} factors).
using ExpMap = std::map<Int, Int>;

inline void bump(ExpMap& m, const Int& key, const Int& by = 1) {
  auto it = m.find(key);
  if (it == m.end()) {
    if (by != 0) m.emplace(key, by);
    return;
  }
  it->second += by;
  if (it->second == 0) m.erase(it);
}

// |lambda| = sum of part * mult (0-parts contribute nothing)
Int exp_size(const ExpMap& m);
// #(lambda) = total number of parts counted with multiplicity
Int exp_count(const ExpMap& m);
// |1/2 + nu| = sum over parts of (part + 1/2); used for the Y block
HalfInt exp_shifted_size(const ExpMap& m);

// parts listed ascending with multiplicity, e.g. {1:2, 3:1} -> [1, 1, 3]
std::vector<Int> exp_parts(const ExpMap& m);
ExpMap exp_from_parts(const std::vector<Int>& parts, bool allow_zero);

// All partitions (parts >= 1) of every size <= max_size.
std::vector<ExpMap> partitions_up_to(const Int& max_size);

// All pseudopartitions (parts >= 0) with size <= max_size and at most
// max_count parts. The count cap bounds the otherwise unbounded 0-parts.
std::vector<ExpMap> pseudopartitions_up_to(const Int& max_size, const Int& max_count);

}  // namespace sv
