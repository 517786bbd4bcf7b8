#pragma once

#include <optional>
#include <vector>

#include "sv/modules.hpp"

namespace sv {

// Candidate window for the exact solvers. Truncation bounds which basis
// vectors may carry a nonzero coefficient; images under the action are
// always computed exactly, outside the window too.
struct Truncation {
  HalfInt D = HalfInt::whole(Int(3));  // degree bound, half-integers allowed
  Int D0 = 3;                          // bound on lambda(0)
  Int K = 3;                           // bound on the M_0 exponent k

  static Truncation of(long d, long d0, long k) {
    return Truncation{HalfInt::whole(Int(d)), Int(d0), Int(k)};
  }
};

// All basis indices of the module with degree <= D, lambda(0) <= D0,
// k <= K, in the deterministic IndexLess order.
std::vector<BasisIndex> enumerate_window(const ModuleSpec& spec, const Truncation& t);

struct SolveReport {
  std::size_t dimension = 0;
  std::vector<ModuleVector> basis;       // canonical (RREF) kernel basis
  std::vector<Generator> conditions;     // generators whose equations were imposed
  Truncation truncation;
};

// Generating set of sv+ whose eigenvector equations cut out exactly the
// Whittaker vectors: L_1, L_2, M_1, Y_{1/2} and Y_{3/2}. Y_{3/2} is needed
// because [L_1, Y_{1/2}] = 0, so the first four generate everything except
// the weight-3/2 line.
std::vector<Generator> whittaker_conditions();

// Solve (x - psi(x)) v = 0 within the window for every x in `conditions`
// (dot action). Solutions are re-substituted before being returned.
SolveReport whittaker_vectors(const ModuleSpec& spec, const Truncation& t);
SolveReport whittaker_vectors(const ModuleSpec& spec, const Truncation& t,
                              const std::vector<Generator>& conditions);

// Solve x v = 0 (plain action, annihilation) within the window.
SolveReport singular_vectors(const ModuleSpec& spec, const Truncation& t);
SolveReport singular_vectors(const ModuleSpec& spec, const Truncation& t,
                             const std::vector<Generator>& conditions);

// Least m with dot^m(v) = 0, or nullopt when m would exceed `bound`.
std::optional<Int> nilpotency_index(const Generator& g, const ModuleVector& v,
                                    const ModuleSpec& spec, const Int& bound);

// Fixpoint of the generator action on span(gens), keeping only image
// vectors all of whose terms stay inside the window (a certified subset of
// the true submodule). Generators of both signs with |weight| <= wbound are
// applied. Returns the canonical RREF basis of the resulting span.
std::vector<ModuleVector> submodule_closure(const std::vector<ModuleVector>& gens,
                                            const ModuleSpec& spec, const Truncation& t,
                                            const HalfInt& wbound);

// All positive-weight generators with weight <= wbound (for nilpotency
// grids and condition-set experiments).
std::vector<Generator> positive_generators_up_to(const HalfInt& wbound);

// All generators with |weight| <= wbound, weight-0 ones included.
std::vector<Generator> generators_with_abs_weight_up_to(const HalfInt& wbound);

}  // namespace sv
