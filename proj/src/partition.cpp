#include "sv/partition.hpp"

#include <stdexcept>

namespace sv {

Int exp_size(const ExpMap& m) {
  Int s = 0;
  for (const auto& [part, mult] : m) s += part * mult;
  return s;
}

Int exp_count(const ExpMap& m) {
  Int c = 0;
  for (const auto& [part, mult] : m) c += mult;
  return c;
}

HalfInt exp_shifted_size(const ExpMap& m) {
  // sum (part + 1/2) * mult, doubled: sum (2*part + 1) * mult
  Int t = 0;
  for (const auto& [part, mult] : m) t += (2 * part + 1) * mult;
  return HalfInt(t);
}

std::vector<Int> exp_parts(const ExpMap& m) {
  std::vector<Int> out;
  for (const auto& [part, mult] : m)
    for (Int i = 0; i < mult; i++) out.push_back(part);
  return out;
}

ExpMap exp_from_parts(const std::vector<Int>& parts, bool allow_zero) {
  ExpMap m;
  for (const Int& p : parts) {
    if (p < 0 || (p == 0 && !allow_zero))
      throw std::invalid_argument("bad part " + p.get_str());
    bump(m, p);
  }
  return m;
}

namespace {

// partitions of exactly `size` into parts <= `largest`
void emit_partitions(const Int& size, const Int& largest, ExpMap& acc,
                     std::vector<ExpMap>& out) {
  if (size == 0) {
    out.push_back(acc);
    return;
  }
  Int p = largest < size ? largest : size;
  for (; p >= 1; p--) {
    bump(acc, p);
    emit_partitions(Int(size - p), p, acc, out);
    bump(acc, p, Int(-1));
  }
}

}  // namespace

std::vector<ExpMap> partitions_up_to(const Int& max_size) {
  std::vector<ExpMap> out;
  ExpMap acc;
  for (Int s = 0; s <= max_size; s++) emit_partitions(s, s, acc, out);
  return out;
}

std::vector<ExpMap> pseudopartitions_up_to(const Int& max_size, const Int& max_count) {
  std::vector<ExpMap> out;
  if (max_size < 0 || max_count < 0) return out;
  std::vector<ExpMap> positive = partitions_up_to(max_size);
  for (const ExpMap& p : positive) {
    Int used = exp_count(p);
    if (used > max_count) continue;
    for (Int zeros = 0; zeros + used <= max_count; zeros++) {
      ExpMap m = p;
      if (zeros > 0) m.emplace(Int(0), zeros);
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace sv
