#pragma once

#include <json.hpp>

#include "sv/solver.hpp"

namespace sv {

using nlohmann::json;

// Scalars serialize as strings ("p" or "p/q" in lowest terms). On read,
// plain JSON integers are accepted too.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);
json to_json(const HalfInt& h);
HalfInt halfint_from_json(const json& j);

// "L<n>", "M<n>", "Y<n>" where Y<n> names Y_{n+1/2}
json to_json(const Generator& g);
Generator generator_from_json(const json& j);

// array of {"gen": ..., "coeff": ...}, terms in the canonical order
json to_json(const LieElement& e);
LieElement lie_from_json(const json& j);

// the factor string, e.g. "M-1 M0^2 Y-1 L-2 L0^3"; "1" is the empty word
json to_json(const PBWWord& w);
PBWWord word_from_json(const json& j);

// array of {"word": ..., "coeff": ...}
json to_json(const UEAElement& u);
UEAElement uea_from_json(const json& j);

// {"k": int, "mu": [parts], "nu": [parts], "lambda": [parts]}, parts
// ascending with multiplicity (mu part p names M_{-p}, nu part p names
// Y_{-1/2-p}, lambda part p names L_{-p})
json to_json(const BasisIndex& b);
BasisIndex index_from_json(const json& j);

// array of {"index": ..., "coeff": ...}
json to_json(const ModuleVector& v);
ModuleVector vector_from_json(const json& j);

json to_json(const WhittakerHom& psi);
WhittakerHom psi_from_json(const json& j);

// {"type": "universal"|"quotient"|"verma", "psi": ..., "xi": ..., "zeta": ...}
json to_json(const ModuleSpec& spec);
ModuleSpec spec_from_json(const json& j);

// {"D": half-integer string, "D0": int, "K": int}
json to_json(const Truncation& t);
Truncation truncation_from_json(const json& j);

// {"dimension": n, "basis": [...], "conditions": [...], "truncation": {...}}
json to_json(const SolveReport& r);

}  // namespace sv
