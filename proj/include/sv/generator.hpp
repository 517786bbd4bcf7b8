#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sv/rational.hpp"

namespace sv {

// Basis generators of the Schroedinger-Virasoro algebra. Y generators are
// keyed by the integer n of Y_{n+1/2}, so {fam=Y, n=-1} is Y_{-1/2}.
enum class Family { L, M, Y };

struct Generator {
  Family fam;
  Int n;

  bool operator==(const Generator& o) const { return fam == o.fam && n == o.n; }
  bool operator!=(const Generator& o) const { return !(*this == o); }
};

// Serialization order: family L < M < Y, then index ascending. This is the
// order LieElement terms are emitted in; the PBW engine uses its own block
// order (see pbw.hpp).
struct GenSerLess {
  bool operator()(const Generator& a, const Generator& b) const {
    if (a.fam != b.fam) return static_cast<int>(a.fam) < static_cast<int>(b.fam);
    return a.n < b.n;
  }
};

inline Generator L(long n) { return {Family::L, Int(n)}; }
inline Generator M(long n) { return {Family::M, Int(n)}; }
inline Generator Y(long n) { return {Family::Y, Int(n)}; }
inline Generator gen(Family f, const Int& n) { return {f, n}; }

// weight of g: [L_0, g] = weight(g) * g. L_n, M_n -> n; Y_{n+1/2} -> n + 1/2.
HalfInt gen_weight(const Generator& g);
inline bool is_positive(const Generator& g) { return gen_weight(g) > HalfInt(); }
inline bool is_negative(const Generator& g) { return gen_weight(g) < HalfInt(); }

// "L-3", "M0", "Y2" (Y2 denotes Y_{5/2})
std::string to_string(const Generator& g);
std::optional<Generator> parse_generator(const std::string& s);

// Finite Q-linear combinations of generators.
using LieElement = std::map<Generator, Rational, GenSerLess>;

LieElement lie(const Generator& g);
void add_term(LieElement& e, const Generator& g, const Rational& c);
LieElement operator+(const LieElement& a, const LieElement& b);
LieElement operator-(const LieElement& a, const LieElement& b);
LieElement operator*(const Rational& c, const LieElement& a);

// Structure constants:
//   [L_m, L_n] = (n - m) L_{m+n}
//   [L_m, M_n] = n M_{m+n}
//   [L_m, Y_{n+1/2}] = (n + (1-m)/2) Y_{m+n+1/2}
//   [Y_{m+1/2}, Y_{n+1/2}] = (n - m) M_{m+n+1}
//   [M_., M_.] = [M_., Y_.] = 0
LieElement bracket_gen(const Generator& a, const Generator& b);

// Bilinear extension.
LieElement bracket(const LieElement& a, const LieElement& b);

// Test hook: when set, [L_m, L_n] for m < n picks up a bogus +L_{m+n} term.
// The verifier's Lie-axiom check must then fail (negative control for
// `sv verify`); every algorithm still terminates since bracket values only
// change coefficients, never word lengths.
extern bool corrupt_bracket_table;

}  // namespace sv
