#include "sv/json_io.hpp"

#include <stdexcept>

#include "sv/expr.hpp"

namespace sv {

namespace {

long small(const Int& n, const char* what) {
  if (!n.fits_slong_p()) throw std::domain_error(std::string(what) + " too large to serialize");
  return n.get_si();
}

json parts_to_json(const ExpMap& e) {
  json arr = json::array();
  for (const auto& [part, mult] : e)
    for (Int i = 0; i < mult; i++) arr.push_back(small(part, "basis index part"));
  return arr;
}

ExpMap parts_from_json(const json& j, long min_part, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  ExpMap e;
  for (const json& p : j) {
    if (!p.is_number_integer()) throw std::invalid_argument(std::string(what) + " parts must be integers");
    long v = p.get<long>();
    if (v < min_part) throw std::invalid_argument(std::string(what) + " part out of range");
    bump(e, Int(v), Int(1));
  }
  return e;
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return rat(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

json to_json(const HalfInt& h) { return to_string(h); }

HalfInt halfint_from_json(const json& j) {
  if (j.is_number_integer()) return HalfInt::whole(Int(j.get<long>()));
  if (j.is_string()) return parse_halfint(j.get<std::string>());
  throw std::invalid_argument("half-integer must be an integer or an \"n/2\" string");
}

json to_json(const Generator& g) { return to_string(g); }

Generator generator_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("generator must be a string");
  auto g = parse_generator(j.get<std::string>());
  if (!g) throw std::invalid_argument("bad generator: " + j.get<std::string>());
  return *g;
}

json to_json(const LieElement& e) {
  json arr = json::array();
  for (const auto& [g, c] : e) arr.push_back({{"gen", to_json(g)}, {"coeff", to_json(c)}});
  return arr;
}

LieElement lie_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("Lie element must be an array of terms");
  LieElement e;
  for (const json& t : j) add_term(e, generator_from_json(t.at("gen")), rational_from_json(t.at("coeff")));
  return e;
}

json to_json(const PBWWord& w) { return to_string(w); }

PBWWord word_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("word must be a string");
  UEAElement u = parse_expression(j.get<std::string>());
  if (u.size() != 1 || u.begin()->second != 1)
    throw std::invalid_argument("not a single basis word: " + j.get<std::string>());
  return u.begin()->first;
}

json to_json(const UEAElement& u) {
  json arr = json::array();
  for (const auto& [w, c] : u) arr.push_back({{"word", to_json(w)}, {"coeff", to_json(c)}});
  return arr;
}

UEAElement uea_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("element must be an array of terms");
  UEAElement u;
  for (const json& t : j) add_term(u, word_from_json(t.at("word")), rational_from_json(t.at("coeff")));
  return u;
}

json to_json(const BasisIndex& b) {
  return json{{"k", small(b.k, "M_0 exponent")},
              {"mu", parts_to_json(b.mu)},
              {"nu", parts_to_json(b.nu)},
              {"lambda", parts_to_json(b.lambda)}};
}

BasisIndex index_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("basis index must be an object");
  BasisIndex b;
  if (j.contains("k")) {
    if (!j.at("k").is_number_integer() || j.at("k").get<long>() < 0)
      throw std::invalid_argument("k must be a nonnegative integer");
    b.k = Int(j.at("k").get<long>());
  }
  if (j.contains("mu")) b.mu = parts_from_json(j.at("mu"), 1, "mu");
  if (j.contains("nu")) b.nu = parts_from_json(j.at("nu"), 0, "nu");
  if (j.contains("lambda")) b.lambda = parts_from_json(j.at("lambda"), 0, "lambda");
  return b;
}

json to_json(const ModuleVector& v) {
  json arr = json::array();
  for (const auto& [b, c] : v) arr.push_back({{"index", to_json(b)}, {"coeff", to_json(c)}});
  return arr;
}

ModuleVector vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("module vector must be an array of terms");
  ModuleVector v;
  for (const json& t : j) add_term(v, index_from_json(t.at("index")), rational_from_json(t.at("coeff")));
  return v;
}

json to_json(const WhittakerHom& psi) {
  return json{{"eta1", to_json(psi.eta1)},
              {"eta2", to_json(psi.eta2)},
              {"m1", to_json(psi.m1)},
              {"eta3", to_json(psi.eta3)}};
}

WhittakerHom psi_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("psi must be an object");
  WhittakerHom psi;
  if (j.contains("eta1")) psi.eta1 = rational_from_json(j.at("eta1"));
  if (j.contains("eta2")) psi.eta2 = rational_from_json(j.at("eta2"));
  if (j.contains("m1")) psi.m1 = rational_from_json(j.at("m1"));
  if (j.contains("eta3")) psi.eta3 = rational_from_json(j.at("eta3"));
  return psi;
}

json to_json(const ModuleSpec& spec) {
  switch (spec.type) {
    case ModuleType::Universal:
      return json{{"type", "universal"}, {"psi", to_json(spec.psi)}};
    case ModuleType::Quotient:
      return json{{"type", "quotient"}, {"psi", to_json(spec.psi)}, {"xi", to_json(spec.xi)}};
    case ModuleType::Verma:
      return json{{"type", "verma"}, {"xi", to_json(spec.xi)}, {"zeta", to_json(spec.zeta)}};
  }
  throw std::logic_error("unreachable");
}

ModuleSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw std::invalid_argument("module spec needs a \"type\" field");
  std::string t = j.at("type").get<std::string>();
  if (t == "universal") return ModuleSpec::universal(psi_from_json(j.value("psi", json::object())));
  if (t == "quotient")
    return ModuleSpec::quotient(psi_from_json(j.value("psi", json::object())),
                                j.contains("xi") ? rational_from_json(j.at("xi")) : rat(0));
  if (t == "verma")
    return ModuleSpec::verma(j.contains("xi") ? rational_from_json(j.at("xi")) : rat(0),
                             j.contains("zeta") ? rational_from_json(j.at("zeta")) : rat(0));
  throw std::invalid_argument("unknown module type: " + t);
}

json to_json(const Truncation& t) {
  return json{{"D", to_json(t.D)}, {"D0", small(t.D0, "D0")}, {"K", small(t.K, "K")}};
}

Truncation truncation_from_json(const json& j) {
  Truncation t;
  if (j.contains("D")) t.D = halfint_from_json(j.at("D"));
  if (j.contains("D0")) t.D0 = Int(j.at("D0").get<long>());
  if (j.contains("K")) t.K = Int(j.at("K").get<long>());
  return t;
}

json to_json(const SolveReport& r) {
  json basis = json::array();
  for (const ModuleVector& v : r.basis) basis.push_back(to_json(v));
  json conds = json::array();
  for (const Generator& g : r.conditions) conds.push_back(to_json(g));
  return json{{"dimension", r.dimension},
              {"basis", basis},
              {"conditions", conds},
              {"truncation", to_json(r.truncation)}};
}

}  // namespace sv
