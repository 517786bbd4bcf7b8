#include "sv/rational.hpp"

#include <cctype>

namespace sv {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  std::string t = s;
  // trim surrounding whitespace
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  if (t.empty()) throw std::invalid_argument("empty rational literal");

  bool neg = false;
  std::size_t i = 0;
  if (t[0] == '+' || t[0] == '-') {
    neg = (t[0] == '-');
    i = 1;
  }
  std::string body = t.substr(i);
  std::string num, den = "1";
  auto slash = body.find('/');
  if (slash == std::string::npos) {
    num = body;
  } else {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("bad rational literal: " + s);
  Int p(num), q(den);
  if (q == 0) throw std::invalid_argument("zero denominator: " + s);
  if (neg) p = -p;
  return rat(p, q);
}

std::string to_string(const Rational& r) {
  return r.get_str();  // mpq prints "p" or "p/q", already canonical
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const HalfInt& h) {
  if (h.is_integer()) return Int(h.twice / 2).get_str();
  return h.twice.get_str() + "/2";
}

HalfInt parse_halfint(const std::string& s) {
  Rational r = parse_rational(s);
  Rational doubled = r * 2;
  if (doubled.get_den() != 1)
    throw std::invalid_argument("not a half-integer: " + s);
  return HalfInt(Int(doubled.get_num()));
}

}  // namespace sv
