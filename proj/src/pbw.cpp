#include "sv/pbw.hpp"

#include <utility>

namespace sv {

namespace {

int block_of(Family f) {
  switch (f) {
    case Family::M: return 0;
    case Family::Y: return 1;
    case Family::L: return 2;
  }
  return 3;
}

int cmp_map(const ExpMap& a, const ExpMap& b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.end()) return 1;
  if (ib != b.end()) return -1;
  return 0;
}

}  // namespace

bool block_less(const Generator& a, const Generator& b) {
  int ba = block_of(a.fam), bb = block_of(b.fam);
  if (ba != bb) return ba < bb;
  return a.n < b.n;
}

std::vector<Generator> PBWWord::factors() const {
  std::vector<Generator> out;
  for (const auto& [idx, e] : m)
    for (Int i = 0; i < e; i++) out.push_back(gen(Family::M, idx));
  for (const auto& [idx, e] : y)
    for (Int i = 0; i < e; i++) out.push_back(gen(Family::Y, idx));
  for (const auto& [idx, e] : l)
    for (Int i = 0; i < e; i++) out.push_back(gen(Family::L, idx));
  return out;
}

HalfInt PBWWord::weight() const {
  Int t = 0;  // doubled
  for (const auto& [idx, e] : m) t += 2 * idx * e;
  for (const auto& [idx, e] : y) t += (2 * idx + 1) * e;
  for (const auto& [idx, e] : l) t += 2 * idx * e;
  return HalfInt(t);
}

bool WordLess::operator()(const PBWWord& a, const PBWWord& b) const {
  // shorter words first, then block-wise lexicographic on the exponent maps
  Int ca = a.factor_count(), cb = b.factor_count();
  if (ca != cb) return ca < cb;
  if (int c = cmp_map(a.m, b.m)) return c < 0;
  if (int c = cmp_map(a.y, b.y)) return c < 0;
  return cmp_map(a.l, b.l) < 0;
}

UEAElement uea_zero() { return {}; }

UEAElement uea_one() { return {{PBWWord{}, rat(1)}}; }

UEAElement uea(const Generator& g) {
  PBWWord w;
  ExpMap& blk = g.fam == Family::M ? w.m : (g.fam == Family::Y ? w.y : w.l);
  blk.emplace(g.n, Int(1));
  return {{w, rat(1)}};
}

UEAElement uea(const PBWWord& w, const Rational& c) {
  UEAElement u;
  add_term(u, w, c);
  return u;
}

UEAElement uea(const LieElement& e) {
  UEAElement u;
  for (const auto& [g, c] : e) add_scaled(u, uea(g), c);
  return u;
}

void add_term(UEAElement& u, const PBWWord& w, const Rational& c) {
  if (c == 0) return;
  auto it = u.find(w);
  if (it == u.end()) {
    u.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) u.erase(it);
}

void add_scaled(UEAElement& dst, const UEAElement& src, const Rational& c) {
  if (c == 0) return;
  for (const auto& [w, x] : src) add_term(dst, w, c * x);
}

UEAElement operator+(const UEAElement& a, const UEAElement& b) {
  UEAElement r = a;
  add_scaled(r, b, rat(1));
  return r;
}

UEAElement operator-(const UEAElement& a, const UEAElement& b) {
  UEAElement r = a;
  add_scaled(r, b, rat(-1));
  return r;
}

UEAElement operator*(const Rational& c, const UEAElement& a) {
  UEAElement r;
  add_scaled(r, a, c);
  return r;
}

namespace {

PBWWord word_from_sorted(const std::vector<Generator>& fs) {
  PBWWord w;
  for (const Generator& g : fs) {
    ExpMap& blk = g.fam == Family::M ? w.m : (g.fam == Family::Y ? w.y : w.l);
    bump(blk, g.n);
  }
  return w;
}

}  // namespace

UEAElement normal_form(const std::vector<Generator>& word, const Rational& coeff) {
  UEAElement out;
  if (coeff == 0) return out;
  std::vector<std::pair<std::vector<Generator>, Rational>> work;
  work.emplace_back(word, coeff);
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    std::size_t i = 0;
    bool sorted = true;
    for (; i + 1 < w.size(); i++) {
      if (block_less(w[i + 1], w[i])) {  // strict inversion
        sorted = false;
        break;
      }
    }
    if (sorted) {
      add_term(out, word_from_sorted(w), c);
      continue;
    }
    LieElement br = bracket_gen(w[i], w[i + 1]);
    std::swap(w[i], w[i + 1]);
    for (const auto& [g, bc] : br) {
      std::vector<Generator> shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + i);
      shorter.push_back(g);
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      work.emplace_back(std::move(shorter), c * bc);
    }
    work.emplace_back(std::move(w), c);
  }
  return out;
}

UEAElement multiply(const UEAElement& a, const UEAElement& b) {
  UEAElement out;
  for (const auto& [wa, ca] : a) {
    std::vector<Generator> fa = wa.factors();
    for (const auto& [wb, cb] : b) {
      std::vector<Generator> f = fa;
      std::vector<Generator> fb = wb.factors();
      f.insert(f.end(), fb.begin(), fb.end());
      add_scaled(out, normal_form(f), ca * cb);
    }
  }
  return out;
}

std::optional<HalfInt> uea_weight(const UEAElement& u) {
  if (u.empty()) return HalfInt();
  auto it = u.begin();
  HalfInt w = it->first.weight();
  for (++it; it != u.end(); ++it)
    if (it->first.weight() != w) return std::nullopt;
  return w;
}

UEAElement commutator(const UEAElement& a, const UEAElement& b) {
  return multiply(a, b) - multiply(b, a);
}

UEAElement ad_power(const Generator& g, const UEAElement& u, unsigned m) {
  UEAElement cur = u;
  UEAElement ge = uea(g);
  for (unsigned i = 0; i < m; i++) cur = commutator(ge, cur);
  return cur;
}

std::string to_string(const PBWWord& w) {
  if (w.is_one()) return "1";
  std::string s;
  auto emit = [&s](char f, const ExpMap& blk) {
    for (const auto& [idx, e] : blk) {
      if (!s.empty()) s += ' ';
      s += f;
      s += idx.get_str();
      if (e != 1) {
        s += '^';
        s += e.get_str();
      }
    }
  };
  emit('M', w.m);
  emit('Y', w.y);
  emit('L', w.l);
  return s;
}

}  // namespace sv
