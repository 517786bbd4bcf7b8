#include <doctest.h>

#include "sv/expr.hpp"
#include "sv/json_io.hpp"

using namespace sv;

TEST_CASE("scalar json forms") {
  CHECK(to_json(rat(Int(-7), Int(2))) == json("-7/2"));
  CHECK(rational_from_json(json("3/9")) == rat(Int(1), Int(3)));
  CHECK(rational_from_json(json(5)) == rat(5));
  CHECK(to_json(HalfInt::half(Int(5))) == json("5/2"));
  CHECK(halfint_from_json(json(2)) == HalfInt::whole(Int(2)));
  CHECK(halfint_from_json(json("-1/2")) == HalfInt::half(Int(-1)));
  CHECK_THROWS(rational_from_json(json::array()));
}

TEST_CASE("generator json") {
  CHECK(to_json(Y(-1)) == json("Y-1"));
  CHECK(generator_from_json(json("L-12")) == L(-12));
  CHECK_THROWS(generator_from_json(json("Q1")));
}

TEST_CASE("lie element round trip") {
  LieElement e = rat(-2) * lie(L(0)) + rat(Int(1), Int(3)) * lie(Y(-1));
  CHECK(lie_from_json(to_json(e)) == e);
  CHECK(lie_from_json(to_json(LieElement{})) == LieElement{});
}

TEST_CASE("word and element round trip") {
  auto u = parse_expression("M-1 M0^2 Y-1 L-2 L0^3 - 5/3 L1 + 2");
  CHECK(uea_from_json(to_json(u)) == u);
  CHECK(uea_from_json(to_json(uea_zero())) == uea_zero());

  PBWWord one;
  CHECK(to_json(one) == json("1"));
  CHECK(word_from_json(json("1")) == one);
  auto w = parse_expression("M0^2 L-2").begin()->first;
  CHECK(word_from_json(to_json(w)) == w);
  CHECK_THROWS(word_from_json(json("L1 + L2")));     // not a single word
  CHECK_THROWS(word_from_json(json("2 L1")));        // coefficient
}

TEST_CASE("basis index round trip") {
  BasisIndex b;
  b.k = 2;
  bump(b.mu, Int(1), Int(2));
  bump(b.nu, Int(0));
  bump(b.lambda, Int(0), Int(3));
  bump(b.lambda, Int(4));
  auto j = to_json(b);
  CHECK(j["k"] == 2);
  CHECK(j["mu"] == json::array({1, 1}));
  CHECK(j["nu"] == json::array({0}));
  CHECK(j["lambda"] == json::array({0, 0, 0, 4}));
  CHECK(index_from_json(j) == b);
  CHECK_THROWS(index_from_json(json{{"mu", json::array({0})}}));  // mu parts >= 1
}

TEST_CASE("module vector round trip") {
  ModuleVector v = rat(Int(1), Int(2)) * cyclic_vector();
  BasisIndex b;
  bump(b.nu, Int(1));
  add_term(v, b, rat(-3));
  auto j = to_json(v);
  ModuleVector back = vector_from_json(j);
  CHECK(back == v);
}

TEST_CASE("module spec json") {
  WhittakerHom psi{rat(1), rat(2), rat(3), rat(Int(1), Int(2))};
  auto uni = ModuleSpec::universal(psi);
  auto j = to_json(uni);
  CHECK(j["type"] == "universal");
  auto uni2 = spec_from_json(j);
  CHECK(uni2.type == ModuleType::Universal);
  CHECK(uni2.psi.eta1 == psi.eta1);
  CHECK(uni2.psi.eta2 == psi.eta2);
  CHECK(uni2.psi.m1 == psi.m1);
  CHECK(uni2.psi.eta3 == psi.eta3);

  auto quo = ModuleSpec::quotient(psi, rat(-2));
  auto quo2 = spec_from_json(to_json(quo));
  CHECK(quo2.type == ModuleType::Quotient);
  CHECK(quo2.xi == rat(-2));

  auto ver = ModuleSpec::verma(rat(1), rat(0));
  auto jv = to_json(ver);
  CHECK(jv["type"] == "verma");
  auto ver2 = spec_from_json(jv);
  CHECK(ver2.type == ModuleType::Verma);
  CHECK(ver2.psi.is_zero());

  // defaults: a bare type is a legal spec
  auto d = spec_from_json(json{{"type", "universal"}});
  CHECK(d.psi.is_zero());
  CHECK_THROWS(spec_from_json(json{{"type", "unknown"}}));
}

TEST_CASE("truncation json") {
  Truncation t{HalfInt::half(Int(5)), Int(2), Int(1)};
  auto j = to_json(t);
  CHECK(j["D"] == "5/2");
  CHECK(j["D0"] == 2);
  CHECK(j["K"] == 1);
  auto t2 = truncation_from_json(j);
  CHECK(t2.D == t.D);
  CHECK(t2.D0 == t.D0);
  CHECK(t2.K == t.K);
}

TEST_CASE("solve report json") {
  WhittakerHom psi{rat(2), rat(5), rat(1), rat(3)};
  auto rep = whittaker_vectors(ModuleSpec::quotient(psi, rat(1)), Truncation::of(1, 1, 0));
  auto j = to_json(rep);
  CHECK(j["dimension"] == rep.dimension);
  CHECK(j["basis"].is_array());
  CHECK(j["basis"].size() == rep.dimension);
  CHECK(j["conditions"].is_array());
  for (size_t i = 0; i < rep.dimension; ++i) {
    CHECK(vector_from_json(j["basis"][i]) == rep.basis[i]);
  }
}
