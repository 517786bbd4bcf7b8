#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sv/generator.hpp"
#include "sv/partition.hpp"

namespace sv {

// A PBW basis word of U(sv): all M factors first, then all Y factors, then
// all L factors, indices ascending inside each block. Equality is equality
// of the three exponent maps. Arbitrary integer indices are allowed; the
// subalgebra U(b-) is the case where every index is <= 0 (Y strictly < 0).
struct PBWWord {
  ExpMap m, y, l;  // index -> exponent

  bool is_one() const { return m.empty() && y.empty() && l.empty(); }
  Int factor_count() const { return exp_count(m) + exp_count(y) + exp_count(l); }

  // factors in canonical written order, exponents expanded
  std::vector<Generator> factors() const;

  HalfInt weight() const;

  bool operator==(const PBWWord& o) const { return m == o.m && y == o.y && l == o.l; }
};

// Deterministic total order used for term storage and serialization.
struct WordLess {
  bool operator()(const PBWWord& a, const PBWWord& b) const;
};

// Block order on generators: M < Y < L, then index ascending. A factor
// sequence is canonical iff it is non-decreasing in this order.
bool block_less(const Generator& a, const Generator& b);

using UEAElement = std::map<PBWWord, Rational, WordLess>;

UEAElement uea_zero();
UEAElement uea_one();
UEAElement uea(const Generator& g);
UEAElement uea(const PBWWord& w, const Rational& c = Rational(1));
UEAElement uea(const LieElement& e);

void add_term(UEAElement& u, const PBWWord& w, const Rational& c);
void add_scaled(UEAElement& dst, const UEAElement& src, const Rational& c);
UEAElement operator+(const UEAElement& a, const UEAElement& b);
UEAElement operator-(const UEAElement& a, const UEAElement& b);
UEAElement operator*(const Rational& c, const UEAElement& a);

// Rewrite an arbitrary factor sequence into the canonical basis: repeatedly
// take the leftmost adjacent out-of-order pair x y and replace it by
// y x + [x, y]. Terminates because a swap fixes the leftmost inversion and
// a bracket term is strictly shorter.
UEAElement normal_form(const std::vector<Generator>& word, const Rational& coeff = Rational(1));

UEAElement multiply(const UEAElement& a, const UEAElement& b);

// Common weight of all words if u is homogeneous (zero counts as weight 0),
// nullopt otherwise.
std::optional<HalfInt> uea_weight(const UEAElement& u);

// (ad g)^m applied inside U(sv): u -> g u - u g, iterated m times.
UEAElement ad_power(const Generator& g, const UEAElement& u, unsigned m);

UEAElement commutator(const UEAElement& a, const UEAElement& b);

// "M-1 M0^2 Y-1 L-2 L0^3"; the empty word renders as "1"
std::string to_string(const PBWWord& w);

}  // namespace sv
