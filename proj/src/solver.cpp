#include "sv/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "sv/linalg.hpp"

namespace sv {

std::vector<BasisIndex> enumerate_window(const ModuleSpec& spec, const Truncation& t) {
  std::vector<BasisIndex> out;
  if (t.D < HalfInt()) return out;
  Int d_floor = t.D.twice / 2;  // degree bound rounded down to an integer

  Int k_max = spec.type == ModuleType::Universal ? t.K : Int(0);
  Int l0_max = spec.type == ModuleType::Verma ? Int(0) : t.D0;
  if (k_max < 0 || l0_max < 0) return out;

  std::vector<ExpMap> mus = partitions_up_to(d_floor);
  std::vector<ExpMap> lams = partitions_up_to(d_floor);
  // Y block: each part p costs p + 1/2, so at most 2*D parts
  std::vector<ExpMap> nus = pseudopartitions_up_to(d_floor, Int(t.D.twice));

  for (const ExpMap& mu : mus) {
    HalfInt dm = HalfInt::whole(exp_size(mu));
    if (t.D < dm) continue;
    for (const ExpMap& nu : nus) {
      HalfInt dn = dm + exp_shifted_size(nu);
      if (t.D < dn) continue;
      for (const ExpMap& lam : lams) {
        HalfInt d = dn + HalfInt::whole(exp_size(lam));
        if (t.D < d) continue;
        for (Int l0 = 0; l0 <= l0_max; l0++) {
          ExpMap lambda = lam;
          if (l0 > 0) lambda.emplace(Int(0), l0);
          for (Int k = 0; k <= k_max; k++) {
            BasisIndex b;
            b.k = k;
            b.mu = mu;
            b.nu = nu;
            b.lambda = lambda;
            out.push_back(std::move(b));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), IndexLess{});
  return out;
}

std::vector<Generator> whittaker_conditions() {
  return {L(1), L(2), M(1), Y(0), Y(1)};
}

namespace {

// Shared kernel machinery for both solvers. `image` maps a window basis
// vector to the (exact, untruncated) image under one condition.
SolveReport solve_conditions(const ModuleSpec& spec, const Truncation& t,
                             const std::vector<Generator>& conditions, bool dot) {
  SolveReport rep;
  rep.conditions = conditions;
  rep.truncation = t;

  std::vector<BasisIndex> window = enumerate_window(spec, t);
  std::map<BasisIndex, std::size_t, IndexLess> col_of;
  for (std::size_t j = 0; j < window.size(); j++) col_of.emplace(window[j], j);

  // rows keyed by (condition number, output basis index)
  std::map<std::pair<std::size_t, BasisIndex>,
           std::map<std::size_t, Rational>,
           bool (*)(const std::pair<std::size_t, BasisIndex>&,
                    const std::pair<std::size_t, BasisIndex>&)>
      rows([](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return IndexLess{}(a.second, b.second);
      });

  std::vector<std::vector<ModuleVector>> images(conditions.size());
  for (std::size_t c = 0; c < conditions.size(); c++) {
    images[c].reserve(window.size());
    for (std::size_t j = 0; j < window.size(); j++) {
      ModuleVector one;
      add_term(one, window[j], rat(1));
      ModuleVector img = dot ? dot_act(conditions[c], one, spec)
                             : act_gen(conditions[c], one, spec);
      for (const auto& [idx, coeff] : img) rows[{c, idx}][j] = coeff;
      images[c].push_back(std::move(img));
    }
  }

  RowEchelon ech;
  for (const auto& [key, entries] : rows) {
    SparseRow r(entries.begin(), entries.end());
    ech.insert(std::move(r));
  }
  ech.reduce_fully();

  for (const std::vector<Rational>& v : ech.kernel(window.size())) {
    ModuleVector sol;
    for (std::size_t j = 0; j < window.size(); j++) add_term(sol, window[j], v[j]);
    // re-substitute exactly: combine the cached per-column images
    for (std::size_t c = 0; c < conditions.size(); c++) {
      ModuleVector r;
      for (std::size_t j = 0; j < window.size(); j++)
        if (v[j] != 0) add_scaled(r, images[c][j], v[j]);
      if (!r.empty())
        throw std::logic_error("solver returned a vector that fails re-substitution");
    }
    rep.basis.push_back(std::move(sol));
  }
  rep.dimension = rep.basis.size();
  return rep;
}

}  // namespace

SolveReport whittaker_vectors(const ModuleSpec& spec, const Truncation& t) {
  return whittaker_vectors(spec, t, whittaker_conditions());
}

SolveReport whittaker_vectors(const ModuleSpec& spec, const Truncation& t,
                              const std::vector<Generator>& conditions) {
  for (const Generator& g : conditions)
    if (!is_positive(g))
      throw std::invalid_argument("whittaker conditions must be positive generators");
  return solve_conditions(spec, t, conditions, /*dot=*/true);
}

SolveReport singular_vectors(const ModuleSpec& spec, const Truncation& t) {
  return singular_vectors(spec, t, whittaker_conditions());
}

SolveReport singular_vectors(const ModuleSpec& spec, const Truncation& t,
                             const std::vector<Generator>& conditions) {
  for (const Generator& g : conditions)
    if (!is_positive(g))
      throw std::invalid_argument("singular-vector conditions must be positive generators");
  return solve_conditions(spec, t, conditions, /*dot=*/false);
}

std::optional<Int> nilpotency_index(const Generator& g, const ModuleVector& v,
                                    const ModuleSpec& spec, const Int& bound) {
  ModuleVector cur = v;
  Int m = 0;
  while (!cur.empty()) {
    if (m >= bound) return std::nullopt;
    cur = dot_act(g, cur, spec);
    m += 1;
  }
  return m;
}

std::vector<Generator> positive_generators_up_to(const HalfInt& wbound) {
  std::vector<Generator> out;
  Int n_max = wbound.twice / 2;
  for (Int n = 1; n <= n_max; n++) out.push_back(gen(Family::L, n));
  for (Int n = 1; n <= n_max; n++) out.push_back(gen(Family::M, n));
  // Y_{n+1/2} has weight n + 1/2 <= wbound iff 2n + 1 <= twice
  for (Int n = 0; 2 * n + 1 <= wbound.twice; n++) out.push_back(gen(Family::Y, n));
  return out;
}

std::vector<Generator> generators_with_abs_weight_up_to(const HalfInt& wbound) {
  std::vector<Generator> out;
  Int n_max = wbound.twice / 2;
  for (Int n = -n_max; n <= n_max; n++) out.push_back(gen(Family::L, n));
  for (Int n = -n_max; n <= n_max; n++) out.push_back(gen(Family::M, n));
  for (Int n = -n_max; n <= n_max; n++)
    if (abs(2 * n + 1) <= wbound.twice) out.push_back(gen(Family::Y, n));
  return out;
}

std::vector<ModuleVector> submodule_closure(const std::vector<ModuleVector>& gens,
                                            const ModuleSpec& spec, const Truncation& t,
                                            const HalfInt& wbound) {
  std::vector<BasisIndex> window = enumerate_window(spec, t);
  std::map<BasisIndex, std::size_t, IndexLess> col_of;
  for (std::size_t j = 0; j < window.size(); j++) col_of.emplace(window[j], j);

  auto to_row = [&](const ModuleVector& v) -> std::optional<SparseRow> {
    std::map<std::size_t, Rational> entries;
    for (const auto& [idx, c] : v) {
      auto it = col_of.find(idx);
      if (it == col_of.end()) return std::nullopt;  // leaves the window
      entries[it->second] = c;
    }
    return SparseRow(entries.begin(), entries.end());
  };

  std::vector<Generator> algebra_gens = generators_with_abs_weight_up_to(wbound);

  RowEchelon ech;
  std::vector<SparseRow> todo;
  for (const ModuleVector& g : gens) {
    auto r = to_row(g);
    if (!r) continue;  // seed outside the window: nothing certified about it
    SparseRow reduced;
    if (ech.insert(std::move(*r), &reduced)) todo.push_back(reduced);
  }

  while (!todo.empty()) {
    SparseRow row = std::move(todo.back());
    todo.pop_back();
    ModuleVector v;
    for (const auto& [col, c] : row) add_term(v, window[col], c);
    for (const Generator& g : algebra_gens) {
      ModuleVector img = act_gen(g, v, spec);
      if (img.empty()) continue;
      auto r = to_row(img);
      if (!r) continue;
      SparseRow reduced;
      if (ech.insert(std::move(*r), &reduced)) todo.push_back(reduced);
    }
  }

  ech.reduce_fully();
  std::vector<ModuleVector> out;
  for (const SparseRow& row : ech.rows()) {
    ModuleVector v;
    for (const auto& [col, c] : row) add_term(v, window[col], c);
    out.push_back(std::move(v));
  }
  // canonical order: by pivot column
  std::sort(out.begin(), out.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return col_of.at(a.begin()->first) < col_of.at(b.begin()->first);
  });
  return out;
}

}  // namespace sv
