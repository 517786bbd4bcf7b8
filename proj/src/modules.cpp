#include "sv/modules.hpp"

#include <stdexcept>

namespace sv {

Rational WhittakerHom::operator()(const Generator& g) const {
  if (!is_positive(g)) throw std::invalid_argument("psi is defined on sv+ only");
  if (g.fam == Family::L) {
    if (g.n == 1) return eta1;
    if (g.n == 2) return eta2;
  } else if (g.fam == Family::M) {
    if (g.n == 1) return m1;
  } else {
    if (g.n == 0) return eta3;
  }
  return rat(0);
}

ModuleSpec ModuleSpec::universal(const WhittakerHom& p) {
  ModuleSpec s;
  s.type = ModuleType::Universal;
  s.psi = p;
  return s;
}

ModuleSpec ModuleSpec::quotient(const WhittakerHom& p, const Rational& xi) {
  ModuleSpec s;
  s.type = ModuleType::Quotient;
  s.psi = p;
  s.xi = xi;
  return s;
}

ModuleSpec ModuleSpec::verma(const Rational& xi, const Rational& zeta) {
  ModuleSpec s;
  s.type = ModuleType::Verma;
  s.xi = xi;
  s.zeta = zeta;
  return s;
}

HalfInt BasisIndex::degree() const {
  Int t = 2 * exp_size(mu);
  t += exp_shifted_size(nu).twice;
  t += 2 * exp_size(lambda);
  return HalfInt(t);
}

Int BasisIndex::l0() const {
  auto it = lambda.find(Int(0));
  return it == lambda.end() ? Int(0) : it->second;
}

std::vector<Generator> BasisIndex::word() const {
  std::vector<Generator> out;
  // M block, indices ascending: M_{-p} for the largest part first, M_0^k last
  for (auto it = mu.rbegin(); it != mu.rend(); ++it)
    for (Int i = 0; i < it->second; i++) out.push_back(gen(Family::M, Int(-it->first)));
  for (Int i = 0; i < k; i++) out.push_back(gen(Family::M, Int(0)));
  for (auto it = nu.rbegin(); it != nu.rend(); ++it)
    for (Int i = 0; i < it->second; i++) out.push_back(gen(Family::Y, Int(-1 - it->first)));
  for (auto it = lambda.rbegin(); it != lambda.rend(); ++it)
    for (Int i = 0; i < it->second; i++) out.push_back(gen(Family::L, Int(-it->first)));
  return out;
}

PBWWord BasisIndex::pbw_word() const {
  PBWWord w;
  for (const auto& [p, e] : mu) w.m.emplace(Int(-p), e);
  if (k != 0) w.m.emplace(Int(0), k);
  for (const auto& [p, e] : nu) w.y.emplace(Int(-1 - p), e);
  for (const auto& [p, e] : lambda) w.l.emplace(Int(-p), e);
  return w;
}

namespace {

int cmp_map(const ExpMap& a, const ExpMap& b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.end()) return 1;
  if (ib != b.end()) return -1;
  return 0;
}

}  // namespace

bool IndexLess::operator()(const BasisIndex& a, const BasisIndex& b) const {
  HalfInt da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.k != b.k) return a.k < b.k;
  Int la = a.l0(), lb = b.l0();
  if (la != lb) return la < lb;
  if (int c = cmp_map(a.mu, b.mu)) return c < 0;
  if (int c = cmp_map(a.nu, b.nu)) return c < 0;
  return cmp_map(a.lambda, b.lambda) < 0;
}

ModuleVector cyclic_vector() {
  ModuleVector v;
  v.emplace(BasisIndex{}, rat(1));
  return v;
}

void add_term(ModuleVector& v, const BasisIndex& b, const Rational& c) {
  if (c == 0) return;
  auto it = v.find(b);
  if (it == v.end()) {
    v.emplace(b, c);
    return;
  }
  it->second += c;
  if (it->second == 0) v.erase(it);
}

void add_scaled(ModuleVector& dst, const ModuleVector& src, const Rational& c) {
  if (c == 0) return;
  for (const auto& [b, x] : src) add_term(dst, b, c * x);
}

ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
  ModuleVector r = a;
  add_scaled(r, b, rat(1));
  return r;
}

ModuleVector operator-(const ModuleVector& a, const ModuleVector& b) {
  ModuleVector r = a;
  add_scaled(r, b, rat(-1));
  return r;
}

ModuleVector operator*(const Rational& c, const ModuleVector& a) {
  ModuleVector r;
  add_scaled(r, a, c);
  return r;
}

namespace {

// leading (leftmost) factor of the canonical word, if any
std::optional<Generator> leading_factor(const BasisIndex& b) {
  if (!b.mu.empty()) return gen(Family::M, Int(-b.mu.rbegin()->first));
  if (b.k > 0) return gen(Family::M, Int(0));
  if (!b.nu.empty()) return gen(Family::Y, Int(-1 - b.nu.rbegin()->first));
  if (!b.lambda.empty()) return gen(Family::L, Int(-b.lambda.rbegin()->first));
  return std::nullopt;
}

BasisIndex drop_leading(const BasisIndex& b, const Generator& f) {
  BasisIndex r = b;
  if (f.fam == Family::M) {
    if (f.n == 0)
      r.k -= 1;
    else
      bump(r.mu, Int(-f.n), Int(-1));
  } else if (f.fam == Family::Y) {
    bump(r.nu, Int(-1 - f.n), Int(-1));
  } else {
    bump(r.lambda, Int(-f.n), Int(-1));
  }
  return r;
}

}  // namespace

ModuleVector act_gen(const Generator& g, const BasisIndex& b, const ModuleSpec& spec) {
  ModuleVector out;

  if (g.fam == Family::M) {
    if (g.n < 0) {  // merges into the M block, no corrections
      BasisIndex r = b;
      bump(r.mu, Int(-g.n));
      add_term(out, r, rat(1));
      return out;
    }
    if (g.n == 0) {  // central
      if (spec.type == ModuleType::Universal) {
        BasisIndex r = b;
        r.k += 1;
        add_term(out, r, rat(1));
      } else {
        add_term(out, b, spec.xi);
      }
      return out;
    }
  } else if (g.fam == Family::Y && g.n <= -1) {
    // commutes past the M block; swapping past Y_{-1-q} with -1-q < g.n
    // leaves an M_{g.n - q} correction, which is central here
    BasisIndex r = b;
    bump(r.nu, Int(-1 - g.n));
    add_term(out, r, rat(1));
    for (const auto& [q, e] : b.nu) {
      if (Int(-1 - q) < g.n) {
        // [Y_{g.n}, Y_{-1-q}] = ((-1-q) - g.n) M_{g.n - q}
        BasisIndex c = b;
        bump(c.nu, q, Int(-1));
        bump(c.mu, Int(q - g.n));
        add_term(out, c, rat(Int((-1 - q - g.n) * e)));
      }
    }
    return out;
  } else if (g.fam == Family::L && g.n == 0) {
    // L_0 u w = u L_0 w + weight(u) u w
    Rational wt = b.weight().to_rational();
    if (spec.type == ModuleType::Verma) {
      add_term(out, b, spec.zeta + wt);
    } else {
      BasisIndex r = b;
      bump(r.lambda, Int(0));
      add_term(out, r, rat(1));
      add_term(out, b, wt);
    }
    return out;
  } else if (g.fam == Family::L && g.n < 0 && b.mu.empty() && b.k == 0 && b.nu.empty() &&
             (b.lambda.empty() || b.lambda.rbegin()->first <= -g.n)) {
    // nothing to the left of its slot: merge
    BasisIndex r = b;
    bump(r.lambda, Int(-g.n));
    add_term(out, r, rat(1));
    return out;
  }

  std::optional<Generator> f1 = leading_factor(b);
  if (!f1) {
    // positive-weight generator hits the cyclic vector
    Rational c = spec.type == ModuleType::Verma ? rat(0) : spec.psi(g);
    if (c != 0) add_term(out, b, c);
    return out;
  }
  BasisIndex rest = drop_leading(b, *f1);
  // g f1 rest w = f1 (g rest w) + [g, f1] rest w
  ModuleVector inner = act_gen(g, rest, spec);
  out = act_gen(*f1, inner, spec);
  for (const auto& [h, c] : bracket_gen(g, *f1)) {
    ModuleVector corr = act_gen(h, rest, spec);
    add_scaled(out, corr, c);
  }
  return out;
}

ModuleVector act_gen(const Generator& g, const ModuleVector& v, const ModuleSpec& spec) {
  ModuleVector out;
  for (const auto& [b, c] : v) {
    ModuleVector t = act_gen(g, b, spec);
    add_scaled(out, t, c);
  }
  return out;
}

ModuleVector act(const UEAElement& u, const ModuleVector& v, const ModuleSpec& spec) {
  ModuleVector out;
  for (const auto& [w, c] : u) {
    std::vector<Generator> fs = w.factors();
    ModuleVector cur = v;
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) cur = act_gen(*it, cur, spec);
    add_scaled(out, cur, c);
  }
  return out;
}

ModuleVector act(const LieElement& e, const ModuleVector& v, const ModuleSpec& spec) {
  ModuleVector out;
  for (const auto& [g, c] : e) {
    ModuleVector t = act_gen(g, v, spec);
    add_scaled(out, t, c);
  }
  return out;
}

ModuleVector dot_act(const Generator& g, const ModuleVector& v, const ModuleSpec& spec) {
  if (!is_positive(g))
    throw std::invalid_argument("dot action needs a positive-weight generator, got " +
                                to_string(g));
  ModuleVector out = act_gen(g, v, spec);
  Rational p = spec.type == ModuleType::Verma ? rat(0) : spec.psi(g);
  add_scaled(out, v, -p);
  return out;
}

MaxDeg maxdeg(const ModuleVector& v) {
  MaxDeg m;
  for (const auto& [b, c] : v) {
    HalfInt d = b.degree();
    if (!m.finite || m.value < d) {
      m.finite = true;
      m.value = d;
    }
  }
  return m;
}

std::optional<Int> max_l0(const ModuleVector& v) {
  std::optional<Int> m;
  for (const auto& [b, c] : v) {
    Int l = b.l0();
    if (!m || *m < l) m = l;
  }
  return m;
}

namespace {

UEAElement word_of(std::initializer_list<Generator> fs) {
  return normal_form(std::vector<Generator>(fs));
}

}  // namespace

UEAElement z_element(const WhittakerHom& psi) {
  if (psi.nonsingular())
    throw std::invalid_argument("z element requires singular psi (psi(M_1) = 0)");
  const Rational &e1 = psi.eta1, &e2 = psi.eta2, &e3 = psi.eta3;
  if (e1 == 0 && e2 == 0 && e3 == 0) return uea(L(0));
  UEAElement z;
  if (e2 != 0 || e3 != 0) {
    add_scaled(z, word_of({L(0), M(0), M(0)}), rat(1));
    add_scaled(z, word_of({M(-2), M(0)}), -e2);
    add_scaled(z, word_of({M(-1), M(0)}), -e1);
    add_scaled(z, word_of({M(-1), M(-1)}), e2);
    add_scaled(z, word_of({Y(-1), M(0)}), -e3 / 2);
    add_scaled(z, uea(M(-1)), e3 * e3 / 2);
  } else {
    add_scaled(z, word_of({L(0), M(0)}), rat(1));
    add_scaled(z, uea(M(-1)), -e1);
  }
  return z;
}

UEAElement z_element_xi(const WhittakerHom& psi, const Rational& xi) {
  if (psi.nonsingular())
    throw std::invalid_argument("z element requires singular psi (psi(M_1) = 0)");
  const Rational &e1 = psi.eta1, &e2 = psi.eta2, &e3 = psi.eta3;
  if (e1 == 0 && e2 == 0 && e3 == 0) return uea(L(0));
  UEAElement z;
  if (e2 != 0 || e3 != 0) {
    add_scaled(z, uea(L(0)), xi * xi);
    add_scaled(z, uea(M(-2)), -xi * e2);
    add_scaled(z, uea(M(-1)), -xi * e1);
    add_scaled(z, word_of({M(-1), M(-1)}), e2);
    add_scaled(z, uea(Y(-1)), -xi * e3 / 2);
    add_scaled(z, uea(M(-1)), e3 * e3 / 2);
  } else {
    add_scaled(z, uea(L(0)), xi);
    add_scaled(z, uea(M(-1)), -e1);
  }
  return z;
}

bool index_valid_for(const BasisIndex& b, const ModuleSpec& spec) {
  for (const auto& [p, e] : b.mu)
    if (p < 1 || e < 1) return false;
  for (const auto& [p, e] : b.nu)
    if (p < 0 || e < 1) return false;
  for (const auto& [p, e] : b.lambda)
    if (p < 0 || e < 1) return false;
  if (b.k < 0) return false;
  if (spec.type != ModuleType::Universal && b.k != 0) return false;
  if (spec.type == ModuleType::Verma && b.l0() != 0) return false;
  return true;
}

}  // namespace sv
