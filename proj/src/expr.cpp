#include "sv/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace sv {

namespace {

struct Token {
  enum Kind { Plus, Minus, Star, Caret, Slash, Number, Gen, End };
  Kind kind;
  std::size_t pos;
  Int number;
  Generator g{Family::L, Int(0)};
};

[[noreturn]] void fail(const std::string& what, std::size_t pos) {
  throw std::invalid_argument(what + " at position " + std::to_string(pos));
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digits_from = [&](std::size_t at) {
    std::string d;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) d += s[at++];
    return d;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      i++;
      continue;
    }
    Token t;
    t.pos = i;
    if (c == '+' || c == '-' || c == '*' || c == '^' || c == '/') {
      t.kind = c == '+'   ? Token::Plus
               : c == '-' ? Token::Minus
               : c == '*' ? Token::Star
               : c == '^' ? Token::Caret
                          : Token::Slash;
      i++;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string d = digits_from(i);
      t.kind = Token::Number;
      t.number = Int(d);
      i += d.size();
    } else if (c == 'L' || c == 'M' || c == 'Y') {
      std::size_t j = i + 1;
      std::string idx;
      if (j < s.size() && s[j] == '-') {
        idx += '-';
        j++;
      }
      std::string d = digits_from(j);
      if (d.empty()) fail("generator needs an integer index", i);
      idx += d;
      t.kind = Token::Gen;
      Family f = c == 'L' ? Family::L : c == 'M' ? Family::M : Family::Y;
      t.g = Generator{f, Int(idx)};
      i = j + d.size();
    } else {
      fail(std::string("unknown token '") + c + "'", i);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::End;
  end.pos = s.size();
  out.push_back(std::move(end));
  return out;
}

struct RawTerm {
  Rational coeff;
  std::vector<Generator> factors;  // in written order, exponents expanded
  std::size_t pos;
};

struct Parser {
  std::vector<Token> toks;
  std::size_t p = 0;

  const Token& peek() const { return toks[p]; }
  Token take() { return toks[p++]; }

  Rational rational() {
    Token num = take();  // caller checked kind == Number
    if (peek().kind != Token::Slash) return rat(num.number);
    take();
    if (peek().kind != Token::Number) fail("expected a denominator", peek().pos);
    Token den = take();
    if (den.number == 0) fail("zero denominator", den.pos);
    return rat(num.number, den.number);
  }

  RawTerm term(const Rational& sign) {
    RawTerm t;
    t.pos = peek().pos;
    t.coeff = sign;
    bool any = false;
    if (peek().kind == Token::Number) {
      t.coeff *= rational();
      any = true;
      if (peek().kind == Token::Star) take();
    }
    while (peek().kind == Token::Gen) {
      Token g = take();
      Int e = 1;
      if (peek().kind == Token::Caret) {
        take();
        if (peek().kind != Token::Number) fail("expected an exponent", peek().pos);
        e = take().number;
      }
      for (Int j = 0; j < e; j++) t.factors.push_back(g.g);
      any = true;
      if (peek().kind == Token::Star) {
        take();
        if (peek().kind != Token::Gen) fail("expected a generator after '*'", peek().pos);
      }
    }
    if (!any) fail("expected a term", peek().pos);
    return t;
  }

  std::vector<RawTerm> expr() {
    std::vector<RawTerm> out;
    Rational sign = rat(1);
    if (peek().kind == Token::Plus) {
      take();
    } else if (peek().kind == Token::Minus) {
      take();
      sign = rat(-1);
    }
    out.push_back(term(sign));
    while (peek().kind != Token::End) {
      Token s = take();
      if (s.kind == Token::Plus)
        sign = rat(1);
      else if (s.kind == Token::Minus)
        sign = rat(-1);
      else
        fail("expected '+' or '-'", s.pos);
      out.push_back(term(sign));
    }
    return out;
  }
};

std::vector<RawTerm> parse_raw(const std::string& text) {
  bool blank = true;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (text.empty() || blank) throw std::invalid_argument("empty expression");
  Parser p{tokenize(text)};
  return p.expr();
}

}  // namespace

UEAElement parse_expression(const std::string& text) {
  UEAElement out;
  for (const RawTerm& t : parse_raw(text)) add_scaled(out, normal_form(t.factors, t.coeff), rat(1));
  return out;
}

LieElement parse_lie_expression(const std::string& text) {
  LieElement out;
  for (const RawTerm& t : parse_raw(text)) {
    if (t.factors.size() != 1)
      fail("Lie algebra terms must be a coefficient times one generator", t.pos);
    add_term(out, t.factors[0], t.coeff);
  }
  return out;
}

std::string render(const UEAElement& u) {
  if (u.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : u) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    if (w.is_one()) {
      s += to_string(mag);
    } else {
      if (mag != 1) {
        s += to_string(mag);
        s += ' ';
      }
      s += to_string(w);
    }
  }
  return s;
}

std::string render(const LieElement& e) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [g, c] : e) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != 1) {
      s += to_string(mag);
      s += ' ';
    }
    s += to_string(g);
  }
  return s;
}

std::string render(const ModuleVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [b, c] : v) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != 1) {
      s += to_string(mag);
      s += ' ';
    }
    PBWWord w = b.pbw_word();
    if (!w.is_one()) {
      s += to_string(w);
      s += ' ';
    }
    s += 'w';
  }
  return s;
}

}  // namespace sv
