#include <doctest.h>

#include <algorithm>
#include <vector>

#include "sv/solver.hpp"

using namespace sv;

namespace {

const WhittakerHom kPsi{rat(2), rat(5), rat(1), rat(3)};

ModuleVector unit(const BasisIndex& b) {
  ModuleVector v;
  add_term(v, b, rat(1));
  return v;
}

BasisIndex m0_power(long k) {
  BasisIndex b;
  b.k = k;
  return b;
}

bool in_window(const BasisIndex& b, const Truncation& t) {
  return b.degree() <= t.D && b.l0() <= t.D0 && b.k <= t.K;
}

}  // namespace

TEST_CASE("window enumeration sizes and order") {
  Truncation t;  // D = 3, D0 = 3, K = 3
  auto uni = enumerate_window(ModuleSpec::universal(kPsi), t);
  auto quo = enumerate_window(ModuleSpec::quotient(kPsi, rat(1)), t);
  auto ver = enumerate_window(ModuleSpec::verma(rat(1), rat(0)), t);
  CHECK(uni.size() == 848);
  CHECK(quo.size() == 212);
  CHECK(ver.size() == 53);

  CHECK(uni.front().is_cyclic());
  IndexLess less;
  for (size_t i = 0; i + 1 < uni.size(); ++i) REQUIRE(less(uni[i], uni[i + 1]));
  for (const auto& b : uni) REQUIRE(in_window(b, t));
  for (const auto& b : quo) REQUIRE(b.k == 0);
  for (const auto& b : ver) {
    REQUIRE(b.k == 0);
    REQUIRE(b.l0() == 0);
  }
}

TEST_CASE("window enumeration respects half-integer degree cuts") {
  Truncation t{HalfInt::half(Int(3)), Int(1), Int(0)};  // D = 3/2
  auto quo = enumerate_window(ModuleSpec::quotient(kPsi, rat(0)), t);
  for (const auto& b : quo) REQUIRE(b.degree() <= HalfInt::half(Int(3)));
  // w, L0, M-1, M-1 L0, Y0 x {_, L0}, Y0^2, Y0^3, Y1 x {_, L0}, L-1, L-1 L0
  CHECK(std::any_of(quo.begin(), quo.end(),
                    [](const BasisIndex& b) { return b.degree() == HalfInt::half(Int(3)); }));
}

TEST_CASE("whittaker condition set") {
  auto conds = whittaker_conditions();
  REQUIRE(conds.size() == 5);
  CHECK(std::count(conds.begin(), conds.end(), L(1)) == 1);
  CHECK(std::count(conds.begin(), conds.end(), L(2)) == 1);
  CHECK(std::count(conds.begin(), conds.end(), M(1)) == 1);
  CHECK(std::count(conds.begin(), conds.end(), Y(0)) == 1);
  CHECK(std::count(conds.begin(), conds.end(), Y(1)) == 1);
  for (const auto& g : conds) CHECK(is_positive(g));
}

TEST_CASE("universal whittaker space is the M_0 polynomial line") {
  auto rep = whittaker_vectors(ModuleSpec::universal(kPsi), Truncation::of(2, 2, 2));
  REQUIRE(rep.dimension == 3);
  for (long k = 0; k <= 2; ++k) REQUIRE(rep.basis[k] == unit(m0_power(k)));
}

TEST_CASE("quotient whittaker space is the cyclic line") {
  auto rep = whittaker_vectors(ModuleSpec::quotient(kPsi, rat(-2)), Truncation::of(2, 2, 0));
  REQUIRE(rep.dimension == 1);
  CHECK(rep.basis[0] == cyclic_vector());
}

TEST_CASE("the four eigenvalue equations of lowest weight are not enough") {
  // With xi = 0 and psi(Y_{1/2}) = 0, Y_{-1/2} wbar satisfies the L_1, L_2,
  // M_1, Y_{1/2} equations but Y_{3/2} does not annihilate it, so the
  // Y_{3/2} condition is load bearing.
  WhittakerHom psi{rat(0), rat(0), rat(1), rat(0)};
  auto quo = ModuleSpec::quotient(psi, rat(0));
  Truncation t = Truncation::of(2, 2, 0);

  std::vector<Generator> four = {L(1), L(2), M(1), Y(0)};
  auto weak = whittaker_vectors(quo, t, four);
  CHECK(weak.dimension >= 2);

  BasisIndex ym;  // Y_{-1/2} wbar
  bump(ym.nu, Int(0));
  bool found = std::any_of(weak.basis.begin(), weak.basis.end(),
                           [&](const ModuleVector& v) { return v.count(ym) > 0; });
  CHECK(found);
  Rational drop = rat(-2) * psi.m1;
  CHECK(act_gen(Y(1), unit(ym), quo) == drop * cyclic_vector());

  auto full = whittaker_vectors(quo, t);
  CHECK(full.dimension == 1);
}

TEST_CASE("adding more eigenvalue equations does not shrink the space") {
  auto quo = ModuleSpec::quotient(kPsi, rat(1));
  Truncation t = Truncation::of(2, 2, 0);
  auto base = whittaker_vectors(quo, t);
  auto wide = whittaker_vectors(quo, t, positive_generators_up_to(HalfInt::whole(Int(5))));
  CHECK(base.dimension == wide.dimension);
}

TEST_CASE("solver rejects non-positive conditions") {
  auto quo = ModuleSpec::quotient(kPsi, rat(1));
  CHECK_THROWS(whittaker_vectors(quo, Truncation::of(1, 1, 0), {L(1), M(0)}));
  CHECK_THROWS(singular_vectors(quo, Truncation::of(1, 1, 0), {L(-1)}));
}

TEST_CASE("verma singular vectors at a small window") {
  auto rep1 = singular_vectors(ModuleSpec::verma(rat(1), rat(0)), Truncation::of(3, 0, 0));
  CHECK(rep1.dimension == 1);
  CHECK(rep1.basis[0] == cyclic_vector());

  auto rep0 = singular_vectors(ModuleSpec::verma(rat(0), rat(0)), Truncation::of(2, 0, 0));
  CHECK(rep0.dimension >= 2);
}

TEST_CASE("nilpotency index of the dot action") {
  auto uni = ModuleSpec::universal(kPsi);
  auto w = cyclic_vector();

  CHECK(nilpotency_index(M(2), w, uni, Int(5)) == Int(1));
  CHECK(nilpotency_index(M(1), unit([] {
          BasisIndex b;
          bump(b.lambda, Int(1));
          return b;
        }()),
                         uni, Int(5)) == Int(2));
  CHECK(nilpotency_index(L(1), ModuleVector{}, uni, Int(5)) == Int(0));
  // bound too small reports nothing instead of an index
  BasisIndex deep;
  bump(deep.lambda, Int(1), Int(3));
  CHECK_FALSE(nilpotency_index(M(1), unit(deep), uni, Int(1)).has_value());
  CHECK(nilpotency_index(M(1), unit(deep), uni, Int(12)).has_value());
}

TEST_CASE("generator lists") {
  auto pos = positive_generators_up_to(HalfInt::whole(Int(2)));
  // L1 L2 M1 M2 Y0 (1/2) Y1 (3/2)
  CHECK(pos.size() == 6);
  for (const auto& g : pos) {
    CHECK(is_positive(g));
    CHECK(gen_weight(g) <= HalfInt::whole(Int(2)));
  }
  auto all = generators_with_abs_weight_up_to(HalfInt::whole(Int(1)));
  // L-1 L0 L1, M-1 M0 M1, Y-1 Y0 (weights -1/2, 1/2)
  CHECK(all.size() == 8);
}

TEST_CASE("submodule closure basics") {
  auto quo = ModuleSpec::quotient(WhittakerHom{}, rat(0));
  Truncation t = Truncation::of(3, 3, 0);
  HalfInt wbound = HalfInt::whole(Int(4));

  CHECK(submodule_closure({}, quo, t, wbound).empty());

  BasisIndex lm2;
  bump(lm2.lambda, Int(2));
  auto basis = submodule_closure({unit(lm2)}, quo, t, wbound);
  REQUIRE_FALSE(basis.empty());
  for (const auto& v : basis) {
    REQUIRE_FALSE(v.empty());
    for (const auto& [b, c] : v) REQUIRE(in_window(b, t));
  }
  // growing the generating set by vectors already inside changes nothing
  auto again = submodule_closure({unit(lm2), basis.front()}, quo, t, wbound);
  CHECK(again.size() == basis.size());
}
