#pragma once

#include <string>

#include "sv/modules.hpp"
#include "sv/pbw.hpp"

namespace sv {

// Text grammar for enveloping-algebra elements:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := rational ['*'] factor*  |  factor ('*'? factor)*
//   factor := generator ['^' exponent]
//
// Generators are L<n>, M<n>, Y<n>; the Y index names Y_{n+1/2}, so "Y-1"
// is the weight -1/2 vector. Whitespace may replace '*' anywhere. A bare
// rational is a scalar multiple of 1. Parse errors carry a byte offset.
//
// parse_expression returns the PBW normal form of the input.
UEAElement parse_expression(const std::string& text);

// Same grammar restricted to linear combinations of single generators.
LieElement parse_lie_expression(const std::string& text);

// render/parse round-trip: parse_expression(render(u)) == u.
std::string render(const UEAElement& u);
std::string render(const LieElement& e);

// module vectors print with a trailing "w" for the cyclic vector,
// e.g. "M-1 L0^2 w - 1/2 w"
std::string render(const ModuleVector& v);

}  // namespace sv
