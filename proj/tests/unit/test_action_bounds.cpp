#include <doctest.h>

#include <vector>

#include "sv/solver.hpp"

using namespace sv;

// Degree estimates for the action on Whittaker modules: positive generators
// can only produce terms of smaller degree or smaller L_0 exponent besides
// the eigenvalue term, with explicit leading corrections for the families
// used by the classification arguments.

namespace {

const WhittakerHom kPsi{rat(2), rat(5), rat(1), rat(3)};
const WhittakerHom kPsi2{rat(-1), rat(0), rat(2), rat(Int(1), Int(2))};

ModuleVector unit(const BasisIndex& b) {
  ModuleVector v;
  add_term(v, b, rat(1));
  return v;
}

// E_n for n >= 1: the L, M and Y generators of weight n, n and n - 1/2
std::vector<Generator> e_family(long n) { return {L(n), M(n), Y(n - 1)}; }

Rational psi_value(const WhittakerHom& psi, const Generator& g) { return psi(g); }

bool le(const MaxDeg& d, const HalfInt& h) { return !d.finite || d.value <= h; }

}  // namespace

TEST_CASE("positive action on a basis vector: eigenvalue plus lower terms") {
  for (const auto& psi : {kPsi, kPsi2}) {
    REQUIRE(psi.nonsingular());
    auto uni = ModuleSpec::universal(psi);
    auto window = enumerate_window(uni, Truncation{HalfInt::whole(Int(3)), Int(2), Int(2)});
    for (long n = 1; n <= 3; ++n)
      for (const auto& e : e_family(n))
        for (const auto& b : window) {
          auto r = act_gen(e, unit(b), uni);
          auto self = r.find(b);
          Rational at_self = self == r.end() ? rat(0) : self->second;
          REQUIRE(at_self == psi_value(psi, e));
          for (const auto& [idx, c] : r) {
            if (idx == b) continue;
            REQUIRE(c != 0);
            bool lower_deg = idx.degree() < b.degree();
            bool lower_l0 = idx.l0() < b.l0();
            REQUIRE((lower_deg || lower_l0));
          }
        }
  }
}

TEST_CASE("leading correction of [M_{k+1}, L_{-k}^a] on the cyclic vector") {
  for (const auto& psi : {kPsi, kPsi2}) {
    auto uni = ModuleSpec::universal(psi);
    auto w = cyclic_vector();
    for (long k = 0; k <= 3; ++k)
      for (unsigned a = 1; a <= 3; ++a) {
        std::vector<Generator> lword(a, L(-k));
        auto c = commutator(uea(M(k + 1)), normal_form(lword));
        auto r = act(c, w, uni);

        BasisIndex main;  // L_{-k}^{a-1}
        if (a > 1) bump(main.lambda, Int(k), Int(a - 1));
        Rational lead = rat(Int(-long(a) * (k + 1))) * psi.m1;
        auto v = r - lead * unit(main);

        if (k > 0) {
          CHECK(maxdeg(v) < HalfInt::whole(Int((long(a) - 1) * k)));
        } else {
          auto l0 = max_l0(v);
          CHECK((!l0.has_value() || *l0 < Int(a - 1)));
        }
      }
  }
}

TEST_CASE("leading correction of [Y_{k+3/2}, Y block * L block] on the cyclic vector") {
  auto uni = ModuleSpec::universal(kPsi);
  auto w = cyclic_vector();
  auto window = enumerate_window(uni, Truncation{HalfInt::whole(Int(3)), Int(2), Int(0)});
  int instances = 0;
  for (const auto& b : window) {
    if (!b.mu.empty() || b.k != 0) continue;
    for (long k = 0; k <= 3; ++k) {
      // lambda(i) = 0 for i <= k, nu(j) = 0 for j < k, nu(k) != 0
      bool ok = b.nu.count(Int(k)) > 0;
      for (long i = 0; ok && i <= k; ++i)
        if (b.lambda.count(Int(i))) ok = false;
      for (long j = 0; ok && j < k; ++j)
        if (b.nu.count(Int(j))) ok = false;
      if (!ok) continue;
      instances++;

      auto c = commutator(uea(Y(k + 1)), normal_form(b.word()));
      auto r = act(c, w, uni);

      BasisIndex main = b;
      Int nu_k = main.nu.at(Int(k));
      bump(main.nu, Int(k), Int(-1));
      Rational lead = rat(Int(-2 * (k + 1) * nu_k)) * kPsi.m1;
      auto v = r - lead * unit(main);

      HalfInt bound = b.degree() - HalfInt::half(Int(1)) - HalfInt::whole(Int(k));
      CHECK(maxdeg(v) < bound);
    }
  }
  CHECK(instances > 10);
}

TEST_CASE("degree bound for [L_m, M block * Y block] on the cyclic vector") {
  auto uni = ModuleSpec::universal(kPsi);
  auto w = cyclic_vector();
  auto window = enumerate_window(uni, Truncation{HalfInt::whole(Int(3)), Int(0), Int(0)});
  int instances = 0;
  for (const auto& b : window) {
    if (!b.lambda.empty() || b.k != 0) continue;
    if (b.mu.empty() && b.nu.empty()) continue;
    for (long m = 0; m <= 4; ++m) {
      instances++;
      auto c = commutator(uea(L(m)), normal_form(b.word()));
      auto r = act(c, w, uni);
      HalfInt bound = b.degree() - HalfInt::whole(Int(m)) + HalfInt::whole(Int(1));
      CHECK(le(maxdeg(r), bound));
    }
  }
  CHECK(instances > 20);
}

TEST_CASE("generators of large weight annihilate low degree vectors") {
  auto uni = ModuleSpec::universal(kPsi);
  auto window = enumerate_window(uni, Truncation{HalfInt::whole(Int(3)), Int(2), Int(1)});
  for (const auto& b : window) {
    HalfInt deg = b.degree();
    // integer n with n > deg + 2, up to deg + 4
    long lo = Int((deg.twice + 4) / 2 + 1).get_si();
    for (long n = lo; HalfInt::whole(Int(n)) <= deg + HalfInt::whole(Int(4)); ++n) {
      for (const auto& e : e_family(n)) {
        CHECK(dot_act(e, unit(b), uni).empty());
      }
    }
  }
}
