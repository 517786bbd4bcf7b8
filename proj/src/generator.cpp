#include "sv/generator.hpp"

#include <cctype>

namespace sv {

bool corrupt_bracket_table = false;

HalfInt gen_weight(const Generator& g) {
  if (g.fam == Family::Y) return HalfInt(Int(2 * g.n + 1));
  return HalfInt::whole(g.n);
}

std::string to_string(const Generator& g) {
  const char* f = g.fam == Family::L ? "L" : (g.fam == Family::M ? "M" : "Y");
  return f + g.n.get_str();
}

std::optional<Generator> parse_generator(const std::string& s) {
  if (s.size() < 2) return std::nullopt;
  Family f;
  switch (s[0]) {
    case 'L': f = Family::L; break;
    case 'M': f = Family::M; break;
    case 'Y': f = Family::Y; break;
    default: return std::nullopt;
  }
  std::size_t i = 1;
  if (s[i] == '-') i++;
  if (i >= s.size()) return std::nullopt;
  for (std::size_t j = i; j < s.size(); j++)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
  return Generator{f, Int(s.substr(1))};
}

LieElement lie(const Generator& g) { return LieElement{{g, rat(1)}}; }

void add_term(LieElement& e, const Generator& g, const Rational& c) {
  if (c == 0) return;
  auto it = e.find(g);
  if (it == e.end()) {
    e.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second == 0) e.erase(it);
}

LieElement operator+(const LieElement& a, const LieElement& b) {
  LieElement r = a;
  for (const auto& [g, c] : b) add_term(r, g, c);
  return r;
}

LieElement operator-(const LieElement& a, const LieElement& b) {
  LieElement r = a;
  for (const auto& [g, c] : b) add_term(r, g, -c);
  return r;
}

LieElement operator*(const Rational& c, const LieElement& a) {
  LieElement r;
  if (c == 0) return r;
  for (const auto& [g, x] : a) r.emplace(g, c * x);
  return r;
}

LieElement bracket_gen(const Generator& a, const Generator& b) {
  LieElement r;
  // M is central within {M, Y} and [M, M] = 0
  if (a.fam == Family::M && b.fam != Family::L) return r;
  if (b.fam == Family::M && a.fam != Family::L) return r;

  if (a.fam == Family::L && b.fam == Family::L) {
    add_term(r, gen(Family::L, Int(a.n + b.n)), rat(Int(b.n - a.n)));
    if (corrupt_bracket_table && a.n < b.n)
      add_term(r, gen(Family::L, Int(a.n + b.n)), rat(1));
    return r;
  }
  if (a.fam == Family::L && b.fam == Family::M) {
    add_term(r, gen(Family::M, Int(a.n + b.n)), rat(b.n));
    return r;
  }
  if (a.fam == Family::M && b.fam == Family::L) {
    add_term(r, gen(Family::M, Int(a.n + b.n)), -rat(a.n));
    return r;
  }
  if (a.fam == Family::L && b.fam == Family::Y) {
    // [L_m, Y_{n+1/2}] = (n + (1-m)/2) Y_{m+n+1/2}
    add_term(r, gen(Family::Y, Int(a.n + b.n)), rat(Int(2 * b.n + 1 - a.n), Int(2)));
    return r;
  }
  if (a.fam == Family::Y && b.fam == Family::L) {
    add_term(r, gen(Family::Y, Int(a.n + b.n)), -rat(Int(2 * a.n + 1 - b.n), Int(2)));
    return r;
  }
  // Y with Y: [Y_{m+1/2}, Y_{n+1/2}] = (n - m) M_{m+n+1}
  add_term(r, gen(Family::M, Int(a.n + b.n + 1)), rat(Int(b.n - a.n)));
  return r;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  LieElement r;
  for (const auto& [ga, ca] : a)
    for (const auto& [gb, cb] : b)
      for (const auto& [g, c] : bracket_gen(ga, gb)) add_term(r, g, ca * cb * c);
  return r;
}

}  // namespace sv
