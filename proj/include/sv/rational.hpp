#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace sv {

// All scalars are exact rationals and all indices/exponents are arbitrary
// precision integers. No floating point anywhere in the engine.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(const Int& n) { return Rational(n); }

// p/q with q != 0, canonicalized (lowest terms, q > 0).
inline Rational rat(const Int& p, const Int& q) {
  if (q == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Accepts "p" or "p/q" with optional leading '-' on p and q > 0 (no sign on q).
Rational parse_rational(const std::string& s);

// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& r);
std::string to_string(const Int& n);

// Half-integers (degrees and weights live in (1/2)Z). Stored doubled so that
// comparisons and arithmetic stay in Z.
struct HalfInt {
  Int twice;  // value is twice/2

  HalfInt() : twice(0) {}
  explicit HalfInt(const Int& t) : twice(t) {}
  static HalfInt whole(const Int& n) { return HalfInt(Int(2 * n)); }
  static HalfInt half(const Int& t) { return HalfInt(t); }

  bool is_integer() const { return twice % 2 == 0; }
  Rational to_rational() const { return rat(twice, Int(2)); }

  HalfInt operator+(const HalfInt& o) const { return HalfInt(Int(twice + o.twice)); }
  HalfInt operator-(const HalfInt& o) const { return HalfInt(Int(twice - o.twice)); }
  HalfInt operator-() const { return HalfInt(Int(-twice)); }
  HalfInt& operator+=(const HalfInt& o) {
    twice += o.twice;
    return *this;
  }
  bool operator==(const HalfInt& o) const { return twice == o.twice; }
  bool operator!=(const HalfInt& o) const { return twice != o.twice; }
  bool operator<(const HalfInt& o) const { return twice < o.twice; }
  bool operator<=(const HalfInt& o) const { return twice <= o.twice; }
  bool operator>(const HalfInt& o) const { return twice > o.twice; }
  bool operator>=(const HalfInt& o) const { return twice >= o.twice; }
};

// "n" for integers, "p/2" otherwise.
std::string to_string(const HalfInt& h);

// Accepts "n", "p/2" (and generally "p/q" with q in {1, 2}).
HalfInt parse_halfint(const std::string& s);

}  // namespace sv
