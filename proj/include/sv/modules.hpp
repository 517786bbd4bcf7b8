#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sv/pbw.hpp"

namespace sv {

// Algebra homomorphism sv+ -> Q. Only the four unforced values are stored;
// every other positive generator maps to 0 (the brackets of sv force most of
// those, and the induced modules below fix Y_{3/2} at 0 as well).
struct WhittakerHom {
  Rational eta1;  // psi(L_1)
  Rational eta2;  // psi(L_2)
  Rational m1;    // psi(M_1)
  Rational eta3;  // psi(Y_{1/2})

  bool nonsingular() const { return m1 != 0; }
  bool is_zero() const { return eta1 == 0 && eta2 == 0 && m1 == 0 && eta3 == 0; }

  // value on a positive-weight generator; throws otherwise
  Rational operator()(const Generator& g) const;
};

enum class ModuleType { Universal, Quotient, Verma };

// The three module variants share one basis-index representation:
//   Universal W_psi:      M_0^k M_{-mu} Y_{-1/2-nu} L_{-lambda} w
//   Quotient  L_{psi,xi}: M_0 acts as xi, so k = 0
//   Verma     V(xi,zeta): psi = 0, k = 0 and lambda has no 0-parts
//                         (L_0 w = zeta w, M_0 w = xi w)
struct ModuleSpec {
  ModuleType type = ModuleType::Universal;
  WhittakerHom psi;  // identically zero for Verma
  Rational xi;       // Quotient, Verma
  Rational zeta;     // Verma

  static ModuleSpec universal(const WhittakerHom& p);
  static ModuleSpec quotient(const WhittakerHom& p, const Rational& xi);
  static ModuleSpec verma(const Rational& xi, const Rational& zeta);
};

struct BasisIndex {
  Int k;          // M_0 exponent (Universal only)
  ExpMap mu;      // part p >= 1 -> mult of M_{-p}
  ExpMap nu;      // part p >= 0 -> mult of Y_{-1/2-p}
  ExpMap lambda;  // part p >= 0 -> mult of L_{-p}; lambda[0] is the L_0 power

  bool is_cyclic() const { return k == 0 && mu.empty() && nu.empty() && lambda.empty(); }

  // |mu| + |1/2 + nu| + |lambda| (0-parts of lambda and the M_0 power add nothing)
  HalfInt degree() const;
  Int l0() const;  // lambda(0)
  HalfInt weight() const { return -degree(); }

  // canonical factor sequence including M_0^k and L_0^{lambda(0)}
  std::vector<Generator> word() const;
  PBWWord pbw_word() const;

  bool operator==(const BasisIndex& o) const {
    return k == o.k && mu == o.mu && nu == o.nu && lambda == o.lambda;
  }
};

// Deterministic order: by degree, then k, lambda(0), then the exponent maps.
struct IndexLess {
  bool operator()(const BasisIndex& a, const BasisIndex& b) const;
};

using ModuleVector = std::map<BasisIndex, Rational, IndexLess>;

ModuleVector cyclic_vector();  // w (resp. wbar) itself
void add_term(ModuleVector& v, const BasisIndex& b, const Rational& c);
void add_scaled(ModuleVector& dst, const ModuleVector& src, const Rational& c);
ModuleVector operator+(const ModuleVector& a, const ModuleVector& b);
ModuleVector operator-(const ModuleVector& a, const ModuleVector& b);
ModuleVector operator*(const Rational& c, const ModuleVector& a);

// Action of a single generator: g is commuted rightward through the basis
// word, one leading factor at a time, picking up bracket correction terms;
// whatever reaches the cyclic vector is resolved through psi / xi / zeta or
// merged into the basis word.
ModuleVector act_gen(const Generator& g, const BasisIndex& b, const ModuleSpec& spec);
ModuleVector act_gen(const Generator& g, const ModuleVector& v, const ModuleSpec& spec);

// Action of U(sv): each PBW word is applied factor by factor, rightmost
// factor first, so act(multiply(u1,u2), v) = act(u1, act(u2, v)).
ModuleVector act(const UEAElement& u, const ModuleVector& v, const ModuleSpec& spec);
ModuleVector act(const LieElement& e, const ModuleVector& v, const ModuleSpec& spec);

// x.v = x v - psi(x) v for x in sv+; rejects non-positive generators.
ModuleVector dot_act(const Generator& g, const ModuleVector& v, const ModuleSpec& spec);

// max over terms of the degree; the zero vector reports minus infinity.
struct MaxDeg {
  bool finite = false;
  HalfInt value;

  bool operator<(const HalfInt& h) const { return !finite || value < h; }
};
MaxDeg maxdeg(const ModuleVector& v);

// max over terms of lambda(0); nullopt for the zero vector
std::optional<Int> max_l0(const ModuleVector& v);

// The element z with z w Whittaker for singular psi (m1 = 0):
//   L_0                                     if eta1 = eta2 = eta3 = 0
//   L_0 M_0^2 - eta2 M_{-2} M_0 - eta1 M_{-1} M_0 + eta2 M_{-1}^2
//     - (eta3/2) Y_{-1/2} M_0 + (eta3^2/2) M_{-1}   if eta2 != 0 or eta3 != 0
//   L_0 M_0 - eta1 M_{-1}                   otherwise
// Throws for nonsingular psi.
UEAElement z_element(const WhittakerHom& psi);

// Quotient variant (M_0 already specialized to xi):
//   L_0 | xi^2 L_0 - xi eta2 M_{-2} - xi eta1 M_{-1} + eta2 M_{-1}^2
//         - xi (eta3/2) Y_{-1/2} + (eta3^2/2) M_{-1} | xi L_0 - eta1 M_{-1}
UEAElement z_element_xi(const WhittakerHom& psi, const Rational& xi);

// Validate that an index respects the variant's constraints (k = 0 off the
// universal module, no L_0 parts in a Verma index).
bool index_valid_for(const BasisIndex& b, const ModuleSpec& spec);

}  // namespace sv
