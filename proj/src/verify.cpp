#include "sv/verify.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "sv/linalg.hpp"

namespace sv {

namespace {

struct Failures {
  long count = 0;
  std::string first;

  void add(const std::string& msg) {
    if (count == 0) first = msg;
    count++;
  }
  void require(bool ok, const std::function<std::string()>& msg) {
    if (!ok) add(msg());
  }
};

template <class Body>
CheckResult timed_check(const std::string& name, Body&& body) {
  CheckResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  Failures f;
  std::string detail = body(f);
  auto t1 = std::chrono::steady_clock::now();
  r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  r.pass = f.count == 0;
  r.detail = r.pass ? detail
                    : std::to_string(f.count) + " failure(s); first: " + f.first;
  return r;
}

ModuleVector unit(const BasisIndex& b) {
  ModuleVector v;
  add_term(v, b, rat(1));
  return v;
}

std::vector<WhittakerHom> nonsingular_grid() {
  std::vector<Rational> m1s = {rat(1), rat(2), rat(-3, 5)};
  std::vector<std::array<Rational, 3>> etas = {
      {rat(0), rat(0), rat(0)}, {rat(1), rat(0), rat(0)}, {rat(1), rat(2), rat(3)}};
  std::vector<WhittakerHom> out;
  for (const Rational& m1 : m1s)
    for (const auto& e : etas)
      out.push_back(WhittakerHom{.eta1 = e[0], .eta2 = e[1], .m1 = m1, .eta3 = e[2]});
  return out;
}

std::vector<WhittakerHom> singular_grid() {
  std::vector<std::array<Rational, 3>> etas = {{rat(0), rat(0), rat(0)},
                                               {rat(0), rat(1), rat(0)},
                                               {rat(0), rat(0), rat(1)},
                                               {rat(2), rat(0), rat(0)}};
  std::vector<WhittakerHom> out;
  for (const auto& e : etas)
    out.push_back(WhittakerHom{.eta1 = e[0], .eta2 = e[1], .m1 = rat(0), .eta3 = e[2]});
  return out;
}

std::string psi_str(const WhittakerHom& psi) {
  return "psi(" + to_string(psi.eta1) + "," + to_string(psi.eta2) + "," + to_string(psi.m1) +
         "," + to_string(psi.eta3) + ")";
}

Int zero_count(const ExpMap& e) {
  auto it = e.find(Int(0));
  return it == e.end() ? Int(0) : it->second;
}

// ---- check 1: antisymmetry and Jacobi ----------------------------------

LieElement jacobiator(const Generator& a, const Generator& b, const Generator& c) {
  return bracket(lie(a), bracket_gen(b, c)) + bracket(lie(b), bracket_gen(c, a)) +
         bracket(lie(c), bracket_gen(a, b));
}

CheckResult check_lie_axioms(std::mt19937_64& rng) {
  return timed_check("lie-axioms", [&](Failures& f) {
    std::vector<Generator> gens;
    for (long n = -4; n <= 4; n++) {
      gens.push_back(L(n));
      gens.push_back(M(n));
      gens.push_back(Y(n));
    }
    for (const Generator& a : gens)
      for (const Generator& b : gens)
        f.require((bracket_gen(a, b) + bracket_gen(b, a)).empty(), [&] {
          return "antisymmetry fails for [" + to_string(a) + "," + to_string(b) + "]";
        });
    long triples = 0;
    for (const Generator& a : gens)
      for (const Generator& b : gens)
        for (const Generator& c : gens) {
          triples++;
          f.require(jacobiator(a, b, c).empty(), [&] {
            return "Jacobi fails for (" + to_string(a) + "," + to_string(b) + "," +
                   to_string(c) + ")";
          });
        }
    std::uniform_int_distribution<long> idx(-25, 25);
    std::uniform_int_distribution<int> fam(0, 2);
    auto rand_gen = [&] {
      Family fs[] = {Family::L, Family::M, Family::Y};
      return gen(fs[fam(rng)], Int(idx(rng)));
    };
    for (int i = 0; i < 200; i++) {
      Generator a = rand_gen(), b = rand_gen(), c = rand_gen();
      f.require(jacobiator(a, b, c).empty(), [&] {
        return "Jacobi fails for random (" + to_string(a) + "," + to_string(b) + "," +
               to_string(c) + ")";
      });
    }
    return "antisymmetry on " + std::to_string(gens.size() * gens.size()) +
           " pairs, Jacobi on " + std::to_string(triples) + " triples + 200 random";
  });
}

// ---- check 2: closed form for M_m L_{-k}^a ------------------------------

CheckResult check_straightening_closed_form() {
  return timed_check("straightening-closed-form", [&](Failures& f) {
    int n = 0;
    for (long m = 1; m <= 4; m++)
      for (long k = 0; k <= 3; k++)
        for (unsigned a = 1; a <= 4; a++) {
          n++;
          std::vector<Generator> lhs_word = {M(m)};
          for (unsigned t = 0; t < a; t++) lhs_word.push_back(L(-k));
          UEAElement lhs = normal_form(lhs_word);
          UEAElement rhs = straightening_closed_form(Int(m), Int(k), a);
          f.require(lhs == rhs, [&] {
            return "closed form mismatch at m=" + std::to_string(m) +
                   " k=" + std::to_string(k) + " a=" + std::to_string(a);
          });
        }
    return std::to_string(n) + " (m,k,a) instances match the rewriting engine";
  });
}

// ---- check 3: shape constraints of the straightening identities ---------

struct ShapeCase {
  std::string label;
  Generator mover{Family::L, Int(0)};
  std::vector<Generator> fixed;  // the product the mover commutes past
  // per-word admissibility; zero0 is the 0-part count of the fixed block
  std::function<bool(const PBWWord&, const Generator&, const Int& zero0)> admissible;
};

// words of [mover, fixed] for one instance, shape-checked term by term
void run_shape_case(Failures& f, const ShapeCase& sc) {
  std::vector<Generator> fw = {sc.mover};
  fw.insert(fw.end(), sc.fixed.begin(), sc.fixed.end());
  std::vector<Generator> bw = sc.fixed;
  bw.push_back(sc.mover);
  UEAElement comm = normal_form(fw) - normal_form(bw);

  HalfInt expect_wt = gen_weight(sc.mover);
  Int zero0 = 0;
  for (const Generator& g : sc.fixed) {
    expect_wt += gen_weight(g);
    if (g.fam == Family::L && g.n == 0) zero0 += 1;
  }
  for (const auto& [w, c] : comm) {
    f.require(w.weight() == expect_wt,
              [&] { return sc.label + ": inhomogeneous term " + to_string(w); });
    f.require(sc.admissible(w, sc.mover, zero0),
              [&] { return sc.label + ": term " + to_string(w) + " breaks the shape"; });
  }
}

CheckResult check_straightening_shapes() {
  return timed_check("straightening-shapes", [&](Failures& f) {
    const long budget = 5;
    long instances = 0;

    auto l0_exp = [](const PBWWord& w) { return zero_count(w.l); };
    auto mult_at_least = [](const ExpMap& e, const Int& lo) {
      Int s = 0;
      for (const auto& [i, m] : e)
        if (i >= lo) s += m;
      return s;
    };
    auto max_index = [](const ExpMap& e, Int if_empty) {
      return e.empty() ? if_empty : e.rbegin()->first;
    };

    // pseudopartitions cost |parts| + #zeros against the budget (0-parts of
    // an L block are free in degree, so they are charged per count here)
    std::vector<ExpMap> lams;
    for (const ExpMap& p : pseudopartitions_up_to(Int(budget), Int(budget)))
      if (exp_size(p) + zero_count(p) <= budget) lams.push_back(p);
    std::vector<ExpMap> mus = partitions_up_to(Int(budget));
    std::vector<ExpMap> nus = pseudopartitions_up_to(Int(budget), Int(2 * budget));

    auto lam_word = [](const ExpMap& lam) {
      std::vector<Generator> w;
      for (const auto& [p, mult] : lam)
        for (Int i = 0; i < mult; i++) w.push_back(gen(Family::L, Int(-p)));
      return w;
    };
    auto mu_word = [](const ExpMap& mu) {
      std::vector<Generator> w;
      for (const auto& [p, mult] : mu)
        for (Int i = 0; i < mult; i++) w.push_back(gen(Family::M, Int(-p)));
      return w;
    };
    auto nu_word = [](const ExpMap& nu) {
      std::vector<Generator> w;
      for (const auto& [p, mult] : nu)
        for (Int i = 0; i < mult; i++) w.push_back(gen(Family::Y, Int(-1 - p)));
      return w;
    };

    // M_m past an L block: single M factor with index <= m, no Y, L block
    // nonpositive; terms keeping index m must have dropped an L_0
    for (long m = 1; m <= budget; m++)
      for (const ExpMap& lam : lams) {
        if (m + exp_size(lam) + zero_count(lam) > budget) continue;
        instances++;
        run_shape_case(f, {"M past L", M(m), lam_word(lam),
                           [&](const PBWWord& w, const Generator& mv, const Int& z0) {
                             if (!w.y.empty()) return false;
                             if (mult_at_least(w.m, w.m.empty() ? Int(0) : w.m.begin()->first) !=
                                 1)
                               return false;  // exactly one M factor
                             Int mi = w.m.begin()->first;
                             if (mi > mv.n) return false;
                             if (max_index(w.l, Int(-1)) > 0) return false;
                             if (mi == mv.n && !(zero_count(w.l) < z0)) return false;
                             return true;
                           }});
      }

    // Y_{1/2+n} past an L block: single Y factor with token <= n, no M
    for (long n = 0; n <= budget; n++)
      for (const ExpMap& lam : lams) {
        if (2 * n + 1 + 2 * (exp_size(lam) + zero_count(lam)) > 2 * budget) continue;
        instances++;
        run_shape_case(f, {"Y past L", Y(n), lam_word(lam),
                           [&](const PBWWord& w, const Generator& mv, const Int& z0) {
                             if (!w.m.empty()) return false;
                             Int tot = 0;
                             for (const auto& [i, e] : w.y) tot += e;
                             if (tot != 1) return false;
                             Int yi = w.y.begin()->first;
                             if (yi > mv.n) return false;
                             if (max_index(w.l, Int(-1)) > 0) return false;
                             if (yi == mv.n && !(zero_count(w.l) < z0)) return false;
                             return true;
                           }});
      }

    // Y_{1/2+n} past a Y block: one block factor pairs with the mover into
    // an M with index <= n. Negative Y factors do not commute with each
    // other, so straightening the leftover fragment trades further Y pairs
    // for strictly negative M factors, two Y's per M. Hence: at most one
    // nonnegative M index, everything else negative, and the factor count
    // satisfies #Y + 2#M = #block + 1.
    for (long n = 0; n <= budget; n++)
      for (const ExpMap& nu : nus) {
        if (HalfInt::half(Int(2 * n + 1)) + exp_shifted_size(nu) > HalfInt::whole(Int(budget)))
          continue;
        instances++;
        Int count = exp_count(nu);
        run_shape_case(f, {"Y past Y", Y(n), nu_word(nu),
                           [&, count](const PBWWord& w, const Generator& mv, const Int&) {
                             if (!w.l.empty()) return false;
                             Int mm = 0, nonneg = 0;
                             for (const auto& [i, e] : w.m) {
                               if (i > mv.n) return false;
                               if (i >= 0) nonneg += e;
                               mm += e;
                             }
                             if (mm < 1 || nonneg > 1) return false;
                             Int yy = 0;
                             for (const auto& [i, e] : w.y) {
                               if (i >= 0) return false;
                               yy += e;
                             }
                             return yy + 2 * mm == count + 1;
                           }});
      }

    // L_n past an L block: pure L words, at most one positive index, all
    // indices <= n; terms keeping index n must have dropped an L_0
    for (long n = 1; n <= budget; n++)
      for (const ExpMap& lam : lams) {
        if (n + exp_size(lam) + zero_count(lam) > budget) continue;
        instances++;
        run_shape_case(f, {"L past L", L(n), lam_word(lam),
                           [&](const PBWWord& w, const Generator& mv, const Int& z0) {
                             if (!w.m.empty() || !w.y.empty()) return false;
                             if (mult_at_least(w.l, Int(1)) > 1) return false;
                             if (max_index(w.l, Int(0)) > mv.n) return false;
                             auto it = w.l.find(mv.n);
                             if (it != w.l.end() && !(zero_count(w.l) < z0)) return false;
                             return true;
                           }});
      }

    // L_n past an M block: pure M words, at most one factor with index
    // >= 0, every index strictly below n
    for (long n = 1; n <= budget; n++)
      for (const ExpMap& mu : mus) {
        if (n + exp_size(mu) > budget) continue;
        instances++;
        run_shape_case(f, {"L past M", L(n), mu_word(mu),
                           [&](const PBWWord& w, const Generator& mv, const Int&) {
                             if (!w.y.empty() || !w.l.empty()) return false;
                             if (mult_at_least(w.m, Int(0)) > 1) return false;
                             return max_index(w.m, Int(mv.n - 1)) < mv.n;
                           }});
      }

    // L_n past a Y block: no L factors; the bracket shifts one Y token up
    // by n (still below n), and straightening the leftover fragment can
    // pair Y's into M factors with index < n, two Y's per M. So: at most
    // one Y token >= 0 and it stays below n, all M indices below n, and
    // #Y + 2#M = #block.
    for (long n = 1; n <= budget; n++)
      for (const ExpMap& nu : nus) {
        if (HalfInt::whole(Int(n)) + exp_shifted_size(nu) > HalfInt::whole(Int(budget)))
          continue;
        instances++;
        Int count = exp_count(nu);
        run_shape_case(f, {"L past Y", L(n), nu_word(nu),
                           [&, count](const PBWWord& w, const Generator& mv, const Int&) {
                             if (!w.l.empty()) return false;
                             Int mm = 0;
                             for (const auto& [i, e] : w.m) {
                               if (i >= mv.n) return false;
                               mm += e;
                             }
                             Int posy = mult_at_least(w.y, Int(0));
                             if (posy > 1) return false;
                             if (posy == 1 && w.y.rbegin()->first >= mv.n) return false;
                             Int yy = 0;
                             for (const auto& [i, e] : w.y) yy += e;
                             return yy + 2 * mm == count;
                           }});
      }

    return std::to_string(instances) + " identity instances of total degree <= " +
           std::to_string(budget) + " all shape-conform";
  });
}

// ---- checks 4, 5, 7: Whittaker vector spaces at the window --------------

// expected = the exact list of single-term solutions, in window order
std::string check_solution_basis(Failures& f, const SolveReport& rep,
                                 const std::vector<BasisIndex>& expected,
                                 const std::string& where) {
  f.require(rep.dimension == expected.size(), [&] {
    return where + ": dimension " + std::to_string(rep.dimension) + ", expected " +
           std::to_string(expected.size());
  });
  if (rep.dimension == expected.size()) {
    for (std::size_t i = 0; i < expected.size(); i++)
      f.require(rep.basis[i] == unit(expected[i]), [&] {
        return where + ": basis vector " + std::to_string(i) + " is not " +
               to_string(expected[i].pbw_word());
      });
  }
  return "dim " + std::to_string(rep.dimension);
}

CheckResult check_universal_whittaker(const Truncation& t) {
  return timed_check("universal-whittaker-basis", [&](Failures& f) {
    std::string dims;
    for (const WhittakerHom& psi : nonsingular_grid()) {
      SolveReport rep = whittaker_vectors(ModuleSpec::universal(psi), t);
      std::vector<BasisIndex> expected;
      for (Int k = 0; k <= t.K; k++) {
        BasisIndex b;
        b.k = k;
        expected.push_back(b);
      }
      check_solution_basis(f, rep, expected, psi_str(psi));
      dims = std::to_string(rep.dimension);
    }
    return "9 nonsingular psi points: solution space is exactly the M_0 powers of w (dim " +
           dims + ")";
  });
}

CheckResult check_quotient_whittaker(const Truncation& t) {
  return timed_check("quotient-whittaker-basis", [&](Failures& f) {
    int n = 0;
    for (const WhittakerHom& psi : nonsingular_grid())
      for (long xi : {0L, 1L, -2L}) {
        n++;
        SolveReport rep = whittaker_vectors(ModuleSpec::quotient(psi, rat(xi)), t);
        check_solution_basis(f, rep, {BasisIndex{}},
                             psi_str(psi) + " xi=" + std::to_string(xi));
      }
    return std::to_string(n) + " (psi, xi) points: only the cyclic vector survives";
  });
}

CheckResult check_zero_psi_whittaker(const Truncation& t) {
  return timed_check("zero-psi-whittaker-basis", [&](Failures& f) {
    WhittakerHom zero;
    zero.eta1 = zero.eta2 = zero.m1 = zero.eta3 = rat(0);
    SolveReport rep = whittaker_vectors(ModuleSpec::universal(zero), t);
    std::vector<BasisIndex> expected;
    for (Int k = 0; k <= t.K; k++)
      for (Int a = 0; a <= t.D0; a++) {
        BasisIndex b;
        b.k = k;
        if (a > 0) b.lambda.emplace(Int(0), a);
        expected.push_back(b);
      }
    std::string d1 = check_solution_basis(f, rep, expected, "universal psi=0");

    std::string d2;
    for (long xi : {1L, -2L}) {
      SolveReport q = whittaker_vectors(ModuleSpec::quotient(zero, rat(xi)), t);
      std::vector<BasisIndex> exq;
      for (Int a = 0; a <= t.D0; a++) {
        BasisIndex b;
        if (a > 0) b.lambda.emplace(Int(0), a);
        exq.push_back(b);
      }
      d2 = check_solution_basis(f, q, exq, "quotient psi=0 xi=" + std::to_string(xi));
    }
    return "universal: exactly the L_0^a M_0^b w (" + d1 + "), quotient: the L_0^a wbar (" +
           d2 + ")";
  });
}

// ---- check 6: no Whittaker vectors of a perturbed type ------------------

std::size_t eigen_solution_dim(const ModuleSpec& spec, const std::vector<BasisIndex>& window,
                               const std::vector<std::pair<Generator, Rational>>& conds) {
  std::vector<std::map<BasisIndex, std::map<std::size_t, Rational>, IndexLess>> rows(
      conds.size());
  for (std::size_t j = 0; j < window.size(); j++)
    for (std::size_t c = 0; c < conds.size(); c++) {
      ModuleVector img = act_gen(conds[c].first, unit(window[j]), spec);
      add_term(img, window[j], -conds[c].second);
      for (const auto& [idx, coeff] : img) rows[c][idx][j] = coeff;
    }
  RowEchelon ech;
  for (const auto& per_cond : rows)
    for (const auto& [idx, entries] : per_cond) ech.insert(SparseRow(entries.begin(), entries.end()));
  return window.size() - ech.rank();
}

CheckResult check_type_rigidity(const Truncation& t) {
  return timed_check("whittaker-type-rigidity", [&](Failures& f) {
    WhittakerHom base{.eta1 = rat(1), .eta2 = rat(2), .m1 = rat(1), .eta3 = rat(3)};
    ModuleSpec spec = ModuleSpec::universal(base);
    std::vector<BasisIndex> window = enumerate_window(spec, t);
    int n = 0;
    for (int which = 0; which < 4; which++) {
      WhittakerHom pert = base;
      (which == 0   ? pert.eta1
       : which == 1 ? pert.eta2
       : which == 2 ? pert.m1
                    : pert.eta3) += rat(1);
      std::vector<std::pair<Generator, Rational>> conds = {{L(1), pert.eta1},
                                                           {L(2), pert.eta2},
                                                           {M(1), pert.m1},
                                                           {Y(0), pert.eta3},
                                                           {Y(1), rat(0)}};
      std::size_t dim = eigen_solution_dim(spec, window, conds);
      n++;
      f.require(dim == 0, [&] {
        return "perturbation " + std::to_string(which) + " admits dim " + std::to_string(dim);
      });
    }
    return std::to_string(n) + " one-parameter perturbations: no vectors of the wrong type";
  });
}

// ---- check 8: z-elements produce Whittaker vectors ----------------------

CheckResult check_singular_z_whittaker() {
  return timed_check("singular-z-whittaker", [&](Failures& f) {
    std::vector<Generator> dots = {L(1), L(2), M(1), Y(0)};
    int n = 0;
    for (const WhittakerHom& psi : singular_grid()) {
      ModuleSpec spec = ModuleSpec::universal(psi);
      ModuleVector v = act(z_element(psi), cyclic_vector(), spec);
      f.require(!v.empty(), [&] { return psi_str(psi) + ": z w vanished"; });
      for (const Generator& g : dots) {
        n++;
        f.require(dot_act(g, v, spec).empty(), [&] {
          return psi_str(psi) + ": " + to_string(g) + " does not dot-annihilate z w";
        });
      }
      for (long xi : {1L, 3L}) {
        ModuleSpec qspec = ModuleSpec::quotient(psi, rat(xi));
        ModuleVector vq = act(z_element_xi(psi, rat(xi)), cyclic_vector(), qspec);
        f.require(!vq.empty(),
                  [&] { return psi_str(psi) + " xi=" + std::to_string(xi) + ": z wbar vanished"; });
        for (const Generator& g : dots) {
          n++;
          f.require(dot_act(g, vq, qspec).empty(), [&] {
            return psi_str(psi) + " xi=" + std::to_string(xi) + ": " + to_string(g) +
                   " does not dot-annihilate z wbar";
          });
        }
      }
    }
    return std::to_string(n) + " dot-annihilation identities hold exactly";
  });
}

// ---- check 9: generated submodules avoid the cyclic vector --------------

CheckResult check_proper_submodule(const Truncation& t) {
  return timed_check("proper-submodule-closure", [&](Failures& f) {
    HalfInt wbound = HalfInt::whole(Int(4));
    BasisIndex cyc;
    int n = 0;
    auto scan = [&](const std::vector<ModuleVector>& basis, const std::string& where) {
      f.require(!basis.empty(), [&] { return where + ": closure came out empty"; });
      for (const ModuleVector& v : basis)
        f.require(v.find(cyc) == v.end(),
                  [&] { return where + ": closure reaches the cyclic vector"; });
    };
    for (const WhittakerHom& psi : singular_grid())
      for (long xi : {1L, 3L}) {
        n++;
        ModuleSpec spec = ModuleSpec::quotient(psi, rat(xi));
        ModuleVector seed = act(z_element_xi(psi, rat(xi)), cyclic_vector(), spec);
        scan(submodule_closure({seed}, spec, t, wbound),
             psi_str(psi) + " xi=" + std::to_string(xi));
      }
    WhittakerHom zero;
    zero.eta1 = zero.eta2 = zero.m1 = zero.eta3 = rat(0);
    ModuleSpec spec0 = ModuleSpec::quotient(zero, rat(0));
    ModuleVector seed0 = act_gen(L(-2), cyclic_vector(), spec0);
    scan(submodule_closure({seed0}, spec0, t, wbound), "psi=0 xi=0 from L_-2 wbar");
    n++;
    return std::to_string(n) + " closures stay clear of the cyclic vector";
  });
}

// ---- check 10: positive generators act locally nilpotently --------------

CheckResult check_nilpotency(const Truncation& t) {
  return timed_check("positive-part-nilpotency", [&](Failures& f) {
    std::vector<Generator> gens = positive_generators_up_to(HalfInt::whole(Int(4)));
    const Int bound = 12;
    Int worst = 0;
    long n = 0;
    for (const WhittakerHom& psi : nonsingular_grid()) {
      ModuleSpec spec = ModuleSpec::universal(psi);
      for (const BasisIndex& b : enumerate_window(spec, t)) {
        ModuleVector v = unit(b);
        for (const Generator& g : gens) {
          n++;
          auto idx = nilpotency_index(g, v, spec, bound);
          f.require(idx.has_value(), [&] {
            return to_string(g) + " not nilpotent within " + to_string(bound) + " steps on " +
                   to_string(b.pbw_word());
          });
          if (idx && *idx > worst) worst = *idx;
        }
      }
    }
    return std::to_string(n) + " (generator, vector) pairs, max index " + to_string(worst);
  });
}

// ---- check 11: the L_0-shift maps intertwine the action ------------------

CheckResult check_l0_shift_intertwiner() {
  return timed_check("l0-shift-intertwiner", [&](Failures& f) {
    WhittakerHom zero;
    zero.eta1 = zero.eta2 = zero.m1 = zero.eta3 = rat(0);
    ModuleSpec spec = ModuleSpec::quotient(zero, rat(1));
    std::vector<Generator> gens = generators_with_abs_weight_up_to(HalfInt::whole(Int(3)));
    std::vector<BasisIndex> window = enumerate_window(spec, Truncation::of(2, 2, 0));
    long n = 0;
    for (long zeta : {0L, 2L})
      for (unsigned i = 1; i <= 2; i++) {
        UEAElement shift = uea(L(0)) - rat(zeta) * uea_one();
        UEAElement power = uea_one();
        for (unsigned j = 0; j < i; j++) power = multiply(power, shift);
        ModuleVector image_of_cyclic = act(power, cyclic_vector(), spec);

        std::map<BasisIndex, ModuleVector, IndexLess> memo;
        auto apply = [&](const ModuleVector& v) {
          ModuleVector out;
          for (const auto& [b, c] : v) {
            auto it = memo.find(b);
            if (it == memo.end())
              it = memo.emplace(b, act(uea(b.pbw_word()), image_of_cyclic, spec)).first;
            add_scaled(out, it->second, c);
          }
          return out;
        };
        for (const Generator& g : gens)
          for (const BasisIndex& b : window) {
            n++;
            ModuleVector lhs = act_gen(g, apply(unit(b)), spec);
            ModuleVector rhs = apply(act_gen(g, unit(b), spec));
            f.require(lhs == rhs, [&] {
              return "zeta=" + std::to_string(zeta) + " i=" + std::to_string(i) + ": " +
                     to_string(g) + " vs " + to_string(b.pbw_word());
            });
          }
      }
    return std::to_string(n) + " intertwining identities hold exactly";
  });
}

// ---- check 12: singular vectors of the Verma quotients -------------------

CheckResult check_verma_singular(const Truncation& t) {
  return timed_check("verma-singular-vectors", [&](Failures& f) {
    for (long zeta : {0L, 1L}) {
      SolveReport rep = singular_vectors(ModuleSpec::verma(rat(1), rat(zeta)), t);
      check_solution_basis(f, rep, {BasisIndex{}}, "xi=1 zeta=" + std::to_string(zeta));
    }
    std::string extra;
    for (long zeta : {0L, 1L}) {
      SolveReport rep = singular_vectors(ModuleSpec::verma(rat(0), rat(zeta)), t);
      f.require(rep.dimension > 1, [&] {
        return "xi=0 zeta=" + std::to_string(zeta) + " came out with dim " +
               std::to_string(rep.dimension) + ", expected > 1";
      });
      extra += (extra.empty() ? "" : ", ") + std::string("zeta=") + std::to_string(zeta) +
               ": dim " + std::to_string(rep.dimension);
    }
    return "xi=1: only the cyclic vector; degenerate xi=0 is reducible (" + extra + ")";
  });
}

// ---- check 13: the action satisfies the bracket relations ---------------

CheckResult check_module_axioms(std::mt19937_64& rng) {
  return timed_check("module-axioms", [&](Failures& f) {
    WhittakerHom psi{.eta1 = rat(1), .eta2 = rat(2), .m1 = rat(1), .eta3 = rat(3)};
    struct Case {
      ModuleSpec spec;
      Truncation t;
      const char* label;
    };
    std::vector<Case> cases = {
        {ModuleSpec::universal(psi), Truncation::of(3, 1, 1), "universal"},
        {ModuleSpec::quotient(psi, rat(-2)), Truncation::of(3, 1, 0), "quotient"},
        {ModuleSpec::verma(rat(1), rat(2)), Truncation::of(3, 0, 0), "verma"}};
    std::vector<Generator> gens;
    for (long i = -3; i <= 3; i++) {
      gens.push_back(L(i));
      gens.push_back(M(i));
      gens.push_back(Y(i));
    }
    long n = 0;
    auto probe = [&](const Case& cs, const Generator& a, const Generator& b,
                     const BasisIndex& idx) {
      ModuleVector v = unit(idx);
      ModuleVector lhs = act_gen(a, act_gen(b, v, cs.spec), cs.spec) -
                         act_gen(b, act_gen(a, v, cs.spec), cs.spec);
      ModuleVector rhs = act(bracket_gen(a, b), v, cs.spec);
      n++;
      f.require(lhs == rhs, [&] {
        return std::string(cs.label) + ": [" + to_string(a) + "," + to_string(b) + "] on " +
               to_string(idx.pbw_word());
      });
    };
    for (const Case& cs : cases) {
      std::vector<BasisIndex> window = enumerate_window(cs.spec, cs.t);
      for (std::size_t i = 0; i < gens.size(); i++)
        for (std::size_t j = i + 1; j < gens.size(); j++)
          for (const BasisIndex& b : window) probe(cs, gens[i], gens[j], b);
      // seeded probes with larger indices than the grid
      std::uniform_int_distribution<long> idx(-6, 6);
      std::uniform_int_distribution<int> fam(0, 2);
      std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
      Family fs[] = {Family::L, Family::M, Family::Y};
      for (int r = 0; r < 60; r++)
        probe(cs, gen(fs[fam(rng)], Int(idx(rng))), gen(fs[fam(rng)], Int(idx(rng))),
              window[pick(rng)]);
    }
    return std::to_string(n) + " commutator compatibilities across all three module kinds";
  });
}

}  // namespace

UEAElement straightening_closed_form(const Int& m, const Int& k, unsigned a) {
  UEAElement rhs;
  for (unsigned i = 0; i <= a; i++) {
    Int falling = 1;
    for (unsigned j = 0; j < i; j++) falling *= m - Int(j) * k;
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), a, i);
    Rational c = rat(Int((i % 2 ? -1 : 1) * falling * binom));
    std::vector<Generator> word;
    for (unsigned t = 0; t + i < a; t++) word.push_back(gen(Family::L, Int(-k)));
    word.push_back(gen(Family::M, Int(m - Int(i) * k)));
    add_scaled(rhs, normal_form(word), c);
  }
  return rhs;
}

VerifyReport run_verify(const VerifyOptions& opts) {
  bool saved = corrupt_bracket_table;
  corrupt_bracket_table = opts.corrupt;
  std::mt19937_64 rng(opts.seed);
  VerifyReport rep;
  auto want = [&](const char* name) {
    return opts.only.empty() || std::string(name).find(opts.only) != std::string::npos;
  };
  if (want("lie-axioms")) rep.checks.push_back(check_lie_axioms(rng));
  if (want("straightening-closed-form")) rep.checks.push_back(check_straightening_closed_form());
  if (want("straightening-shapes")) rep.checks.push_back(check_straightening_shapes());
  if (want("universal-whittaker-basis")) rep.checks.push_back(check_universal_whittaker(opts.trunc));
  if (want("quotient-whittaker-basis")) rep.checks.push_back(check_quotient_whittaker(opts.trunc));
  if (want("whittaker-type-rigidity")) rep.checks.push_back(check_type_rigidity(opts.trunc));
  if (want("zero-psi-whittaker-basis")) rep.checks.push_back(check_zero_psi_whittaker(opts.trunc));
  if (want("singular-z-whittaker")) rep.checks.push_back(check_singular_z_whittaker());
  if (want("proper-submodule-closure")) rep.checks.push_back(check_proper_submodule(opts.trunc));
  if (want("positive-part-nilpotency")) rep.checks.push_back(check_nilpotency(opts.trunc));
  if (want("l0-shift-intertwiner")) rep.checks.push_back(check_l0_shift_intertwiner());
  if (want("verma-singular-vectors")) rep.checks.push_back(check_verma_singular(opts.trunc));
  if (want("module-axioms")) rep.checks.push_back(check_module_axioms(rng));
  corrupt_bracket_table = saved;
  return rep;
}

}  // namespace sv
