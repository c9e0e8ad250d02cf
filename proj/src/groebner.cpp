#include "hornsys/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "hornsys/errors.hpp"

namespace hornsys {

TermOrder TermOrder::grevlex(int n) {
  TermOrder o;
  o.kind = Kind::Grevlex;
  o.n = n;
  return o;
}

TermOrder TermOrder::lex(int n) {
  TermOrder o;
  o.kind = Kind::Lex;
  o.n = n;
  return o;
}

TermOrder TermOrder::elimination(int n, std::vector<int> drop_dx) {
  TermOrder o;
  o.kind = Kind::Elimination;
  o.n = n;
  o.drop = std::move(drop_dx);
  for (int j : o.drop)
    if (j < 1 || j > n) throw InvalidOrder("elimination: dx index out of range");
  return o;
}

TermOrder TermOrder::weight_refined(int n, std::vector<int> u, std::vector<int> v,
                                    Tie tie) {
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
    throw InvalidOrder("weight vectors must have length n");
  for (int i = 0; i < n; ++i)
    if (u[i] + v[i] < 0)
      throw InvalidOrder("inadmissible weight: u+v has a negative entry");
  TermOrder o;
  o.kind = Kind::WeightRefined;
  o.n = n;
  o.u = std::move(u);
  o.v = std::move(v);
  o.tie = tie;
  return o;
}

bool TermOrder::needs_homogenization() const {
  if (kind != Kind::WeightRefined) return false;
  for (int i = 0; i < n; ++i)
    if (u[i] < 0 || v[i] < 0) return true;
  return false;
}

long TermOrder::weight(const Mono& ab) const {
  long w = 0;
  if (kind == Kind::WeightRefined) {
    for (int i = 0; i < n; ++i)
      w += static_cast<long>(u[i]) * ab[i] + static_cast<long>(v[i]) * ab[n + i];
  } else if (kind == Kind::Elimination) {
    for (int j : drop) w += ab[n + j - 1];
  }
  return w;
}

namespace {

bool grevlex_less(const Mono& a, const Mono& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

}  // namespace

bool TermOrder::less(const Mono& a, const Mono& b) const {
  switch (kind) {
    case Kind::Grevlex:
      return grevlex_less(a, b);
    case Kind::Lex:
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    case Kind::Elimination:
    case Kind::WeightRefined: {
      long wa = weight(a), wb = weight(b);
      if (wa != wb) return wa < wb;
      if (tie == Tie::Lex)
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      return grevlex_less(a, b);
    }
  }
  return false;
}

Mono leading_mono(const WeylOp& f, const TermOrder& ord) {
  assert(!f.is_zero());
  auto it = f.t.begin();
  Mono best = it->first;
  for (++it; it != f.t.end(); ++it)
    if (ord.less(best, it->first)) best = it->first;
  return best;
}

WeylOp weyl_normal_form(WeylOp f, const std::vector<WeylOp>& basis, const TermOrder& ord) {
  int n = f.n;
  WeylOp result(n);
  while (!f.is_zero()) {
    Mono lm = leading_mono(f, ord);
    bool reduced = false;
    for (const WeylOp& g : basis) {
      if (g.is_zero()) continue;
      Mono lg = leading_mono(g, ord);
      if (!mono_divides(lg, lm)) continue;
      Rational c = f.t.at(lm) / g.t.at(lg);
      f = f - c * mul(WeylOp::term(n, mono_div(lm, lg), 1), g);
      reduced = true;
      break;
    }
    if (!reduced) {
      result.add_term(lm, f.t.at(lm));
      f.t.erase(lm);
    }
  }
  return result;
}

namespace {

struct SPairQueue {
  struct Pair {
    size_t i, j;
    Mono lcm;
    long seq;
  };
  std::vector<Pair> pairs;
  long seq{0};

  void push(size_t i, size_t j, Mono l) { pairs.push_back({i, j, std::move(l), seq++}); }

  bool empty() const { return pairs.empty(); }

  Pair pop_normal_strategy() {
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      int da = total_degree(pairs[k].lcm), db = total_degree(pairs[best].lcm);
      if (da < db || (da == db && pairs[k].seq < pairs[best].seq)) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + best);
    return p;
  }
};

// Buchberger for plain admissible term orders on D_n.
GBasis buchberger_plain(const DIdeal& ideal, const TermOrder& ord, long budget) {
  int n = ideal.n;
  GBasis out;
  out.order = ord;
  std::vector<WeylOp> basis;
  for (const WeylOp& g : ideal.generators) {
    if (g.is_zero()) continue;
    Rational lc = g.t.at(leading_mono(g, ord));
    basis.push_back((1 / lc) * g);
  }
  SPairQueue q;
  auto push_pairs = [&](size_t j) {
    Mono lj = leading_mono(basis[j], ord);
    for (size_t i = 0; i < j; ++i)
      q.push(i, j, mono_lcm(leading_mono(basis[i], ord), lj));
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  long processed = 0;
  while (!q.empty()) {
    if (++processed > budget) {
      out.complete = false;
      break;
    }
    auto p = q.pop_normal_strategy();
    Mono li = leading_mono(basis[p.i], ord);
    Mono lj = leading_mono(basis[p.j], ord);
    WeylOp s = mul(WeylOp::term(n, mono_div(p.lcm, li), 1), basis[p.i]) -
               mul(WeylOp::term(n, mono_div(p.lcm, lj), 1), basis[p.j]);
    WeylOp r = weyl_normal_form(std::move(s), basis, ord);
    if (!r.is_zero()) {
      Rational lc = r.t.at(leading_mono(r, ord));
      basis.push_back((1 / lc) * r);
      push_pairs(basis.size() - 1);
    }
  }

  // minimalize and tail-reduce
  std::vector<WeylOp> reduced;
  for (size_t i = 0; i < basis.size(); ++i) {
    Mono li = leading_mono(basis[i], ord);
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      Mono lj = leading_mono(basis[j], ord);
      if (mono_divides(lj, li) && (lj != li || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) reduced.push_back(basis[i]);
  }
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<WeylOp> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = weyl_normal_form(reduced[i], others, ord);
    if (!reduced[i].is_zero()) {
      Rational lc = reduced[i].t.at(leading_mono(reduced[i], ord));
      reduced[i] = (1 / lc) * reduced[i];
    }
  }
  std::erase_if(reduced, [](const WeylOp& f) { return f.is_zero(); });
  std::sort(reduced.begin(), reduced.end(), [&](const WeylOp& a, const WeylOp& b) {
    return ord.less(leading_mono(a, ord), leading_mono(b, ord));
  });
  out.elements = std::move(reduced);
  out.reduced = out.complete;
  return out;
}

// --- homogenized Weyl algebra ----------------------------------------------
//
// Monomials carry one extra slot for the homogenizing variable h; the defining
// relation becomes dx_i x_i = x_i dx_i + h^2, which is degree-graded.

struct HOp {
  int n{0};
  std::map<Mono, Rational> t;  // keys of length 2n+1
  bool is_zero() const { return t.empty(); }
  void add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto it = t.find(m);
    if (it == t.end())
      t.emplace(m, c);
    else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }
};

void h_contractions(const std::vector<int>& b, const std::vector<int>& a,
                    std::vector<int>& k, size_t pos, const Rational& coef,
                    const std::function<void(const std::vector<int>&, const Rational&)>& fn) {
  if (pos == k.size()) {
    fn(k, coef);
    return;
  }
  int cap = std::min(b[pos], a[pos]);
  Rational c = coef;
  for (int v = 0; v <= cap; ++v) {
    k[pos] = v;
    h_contractions(b, a, k, pos + 1, c, fn);
    c *= (b[pos] - v) * (a[pos] - v);
    c /= v + 1;
  }
  k[pos] = 0;
}

HOp h_mul(const HOp& p, const HOp& q) {
  int n = p.n;
  HOp r;
  r.n = n;
  for (const auto& [m1, c1] : p.t) {
    std::vector<int> a1(m1.begin(), m1.begin() + n), b1(m1.begin() + n, m1.begin() + 2 * n);
    int h1 = m1[2 * n];
    for (const auto& [m2, c2] : q.t) {
      std::vector<int> a2(m2.begin(), m2.begin() + n), b2(m2.begin() + n, m2.begin() + 2 * n);
      int h2 = m2[2 * n];
      std::vector<int> k(n, 0);
      Rational c12 = c1 * c2;
      h_contractions(b1, a2, k, 0, Rational(1),
                     [&](const std::vector<int>& kk, const Rational& coef) {
                       Mono m(2 * n + 1);
                       int tot = 0;
                       for (int i = 0; i < n; ++i) {
                         m[i] = a1[i] + a2[i] - kk[i];
                         m[n + i] = b1[i] + b2[i] - kk[i];
                         tot += kk[i];
                       }
                       m[2 * n] = h1 + h2 + 2 * tot;
                       r.add_term(m, c12 * coef);
                     });
    }
  }
  return r;
}

struct HOrder {
  int n;
  std::vector<int> u, v;
  bool less(const Mono& a, const Mono& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    long wa = 0, wb = 0;
    for (int i = 0; i < n; ++i) {
      wa += static_cast<long>(u[i]) * a[i] + static_cast<long>(v[i]) * a[n + i];
      wb += static_cast<long>(u[i]) * b[i] + static_cast<long>(v[i]) * b[n + i];
    }
    if (wa != wb) return wa < wb;
    // graded tiebreak on (a, b) keeps commutator terms below the product term
    Mono ta(a.begin(), a.begin() + 2 * n), tb(b.begin(), b.begin() + 2 * n);
    return grevlex_less(ta, tb);
  }
};

Mono h_leading(const HOp& f, const HOrder& ord) {
  auto it = f.t.begin();
  Mono best = it->first;
  for (++it; it != f.t.end(); ++it)
    if (ord.less(best, it->first)) best = it->first;
  return best;
}

HOp h_normal_form(HOp f, const std::vector<HOp>& basis, const HOrder& ord) {
  HOp result;
  result.n = f.n;
  while (!f.is_zero()) {
    Mono lm = h_leading(f, ord);
    bool reduced = false;
    for (const HOp& g : basis) {
      if (g.is_zero()) continue;
      Mono lg = h_leading(g, ord);
      if (!mono_divides(lg, lm)) continue;
      Rational c = f.t.at(lm) / g.t.at(lg);
      HOp q;
      q.n = f.n;
      q.t.emplace(mono_div(lm, lg), c);
      HOp prod = h_mul(q, g);
      for (const auto& [m, co] : prod.t) f.add_term(m, -co);
      reduced = true;
      break;
    }
    if (!reduced) {
      result.add_term(lm, f.t.at(lm));
      f.t.erase(lm);
    }
  }
  return result;
}

HOp homogenize(const WeylOp& f) {
  int n = f.n;
  int deg = 0;
  for (const auto& [m, c] : f.t) deg = std::max(deg, total_degree(m));
  HOp h;
  h.n = n;
  for (const auto& [m, c] : f.t) {
    Mono hm(m.begin(), m.end());
    hm.push_back(deg - total_degree(m));
    h.t.emplace(hm, c);
  }
  return h;
}

WeylOp dehomogenize(const HOp& f) {
  WeylOp r(f.n);
  for (const auto& [m, c] : f.t)
    r.add_term(Mono(m.begin(), m.begin() + 2 * f.n), c);
  return r;
}

GBasis buchberger_homogenized(const DIdeal& ideal, const TermOrder& ord, long budget) {
  int n = ideal.n;
  HOrder hord{n, ord.u, ord.v};
  std::vector<HOp> basis;
  for (const WeylOp& g : ideal.generators)
    if (!g.is_zero()) basis.push_back(homogenize(g));
  SPairQueue q;
  auto push_pairs = [&](size_t j) {
    Mono lj = h_leading(basis[j], hord);
    for (size_t i = 0; i < j; ++i)
      q.push(i, j, mono_lcm(h_leading(basis[i], hord), lj));
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  GBasis out;
  out.order = ord;
  long processed = 0;
  while (!q.empty()) {
    if (++processed > budget) {
      out.complete = false;
      break;
    }
    auto p = q.pop_normal_strategy();
    Mono li = h_leading(basis[p.i], hord);
    Mono lj = h_leading(basis[p.j], hord);
    auto make = [&](const Mono& quotient, const HOp& g, const Rational& lc) {
      HOp m;
      m.n = n;
      m.t.emplace(quotient, 1 / lc);
      return h_mul(m, g);
    };
    HOp s = make(mono_div(p.lcm, li), basis[p.i], basis[p.i].t.at(li));
    HOp s2 = make(mono_div(p.lcm, lj), basis[p.j], basis[p.j].t.at(lj));
    for (const auto& [m, c] : s2.t) s.add_term(m, -c);
    HOp r = h_normal_form(std::move(s), basis, hord);
    if (!r.is_zero()) {
      basis.push_back(r);
      push_pairs(basis.size() - 1);
    }
  }
  for (const HOp& g : basis) out.elements.push_back(dehomogenize(g));
  out.reduced = false;
  return out;
}

}  // namespace

GBasis weyl_gb(const DIdeal& ideal, const TermOrder& ord, long budget) {
  if (ord.n != ideal.n) throw DimensionMismatch("weyl_gb: order/ideal ambient mismatch");
  if (ord.needs_homogenization()) return buchberger_homogenized(ideal, ord, budget);
  return buchberger_plain(ideal, ord, budget);
}

bool ideal_member(const WeylOp& f, const GBasis& gb) {
  if (gb.order.needs_homogenization())
    throw InvalidOrder("membership requires a plain term order basis");
  return weyl_normal_form(f, gb.elements, gb.order).is_zero();
}

WeylOp initial_form(const WeylOp& f, const std::vector<int>& u, const std::vector<int>& v) {
  if (f.is_zero()) return f;
  int n = f.n;
  long best = 0;
  bool have = false;
  for (const auto& [m, c] : f.t) {
    long w = 0;
    for (int i = 0; i < n; ++i)
      w += static_cast<long>(u[i]) * m[i] + static_cast<long>(v[i]) * m[n + i];
    if (!have || w > best) {
      best = w;
      have = true;
    }
  }
  WeylOp r(n);
  for (const auto& [m, c] : f.t) {
    long w = 0;
    for (int i = 0; i < n; ++i)
      w += static_cast<long>(u[i]) * m[i] + static_cast<long>(v[i]) * m[n + i];
    if (w == best) r.t.emplace(m, c);
  }
  return r;
}

InitialIdeal initial_ideal(const DIdeal& ideal, const std::vector<int>& u,
                           const std::vector<int>& v, long budget) {
  TermOrder ord = TermOrder::weight_refined(ideal.n, u, v);
  GBasis gb = weyl_gb(ideal, ord, budget);
  InitialIdeal out;
  out.complete = gb.complete;
  for (int i = 0; i < ideal.n; ++i)
    if (u[i] + v[i] > 0) out.commutative = true;
  for (const WeylOp& g : gb.elements) {
    if (g.is_zero()) continue;
    out.gens.push_back(initial_form(g, u, v));
  }
  return out;
}

EliminationResult eliminate(const DIdeal& ideal, const std::vector<int>& drop_dx,
                            long budget) {
  TermOrder ord = TermOrder::elimination(ideal.n, drop_dx);
  GBasis gb = weyl_gb(ideal, ord, budget);
  EliminationResult out;
  out.complete = gb.complete;
  for (const WeylOp& g : gb.elements) {
    bool free = true;
    for (const auto& [m, c] : g.t) {
      for (int j : drop_dx)
        if (m[ideal.n + j - 1] != 0) {
          free = false;
          break;
        }
      if (!free) break;
    }
    if (free && !g.is_zero()) out.gens.push_back(g);
  }
  return out;
}

// --- Q(x)<dx> ---------------------------------------------------------------

namespace {

Mono dx_part(const Mono& m, int n) { return Mono(m.begin() + n, m.end()); }

// terms of f grouped by dx-monomial -> coefficient polynomial in x
CPoly coeff_poly(const WeylOp& f, const Mono& b) {
  int n = f.n;
  CPoly c(n);
  for (const auto& [m, co] : f.t)
    if (dx_part(m, n) == b) c.add_term(Mono(m.begin(), m.begin() + n), co);
  return c;
}

std::optional<Mono> lead_dx(const WeylOp& f) {
  if (f.is_zero()) return std::nullopt;
  int n = f.n;
  Mono best;
  bool have = false;
  for (const auto& [m, c] : f.t) {
    Mono b = dx_part(m, n);
    if (!have || grevlex_less(best, b)) {
      best = b;
      have = true;
    }
  }
  return best;
}

// left-multiplication by a polynomial in x: coefficients multiply directly
WeylOp poly_premul(const CPoly& p, const WeylOp& f) {
  int n = f.n;
  WeylOp r(n);
  for (const auto& [e, c] : p.t)
    for (const auto& [m, co] : f.t) {
      Mono out = m;
      for (int i = 0; i < n; ++i) out[i] += e[i];
      r.add_term(out, c * co);
    }
  return r;
}

WeylOp rat_content_normalize(const WeylOp& f) {
  if (f.is_zero()) return f;
  int n = f.n;
  std::map<Mono, CPoly> by_dx;
  for (const auto& [m, c] : f.t) {
    Mono b = dx_part(m, n);
    auto [it, inserted] = by_dx.try_emplace(b, CPoly(n));
    it->second.add_term(Mono(m.begin(), m.begin() + n), c);
  }
  std::vector<CPoly> coeffs;
  for (const auto& [b, c] : by_dx) coeffs.push_back(c);
  CPoly content = gcd_many(coeffs);
  WeylOp r(n);
  for (const auto& [b, c] : by_dx) {
    CPoly q = exact_div(c, content);
    for (const auto& [e, co] : q.t) {
      Mono m(2 * n);
      for (int i = 0; i < n; ++i) {
        m[i] = e[i];
        m[n + i] = b[i];
      }
      r.add_term(m, co);
    }
  }
  // deterministic sign: leading coefficient polynomial has positive lex-lead
  Mono lb = *lead_dx(r);
  CPoly lc = coeff_poly(r, lb);
  if (lc.t.at(leading_mono(lc, CMonoOrder::lex())) < 0) r = -r;
  return r;
}

// Reduce every reducible dx-monomial of f against the basis.
WeylOp rat_normal_form(WeylOp f, const std::vector<WeylOp>& basis) {
  if (f.is_zero()) return f;
  int n = f.n;
  while (true) {
    if (f.is_zero()) return f;
    // largest reducible dx-monomial
    std::vector<Mono> monos;
    for (const auto& [m, c] : f.t) monos.push_back(dx_part(m, n));
    std::sort(monos.begin(), monos.end(), grevlex_less);
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    bool did = false;
    for (size_t k = monos.size(); k-- > 0 && !did;) {
      const Mono& target = monos[k];
      for (const WeylOp& g : basis) {
        Mono lb = *lead_dx(g);
        if (!mono_divides(lb, target)) continue;
        CPoly cg = coeff_poly(g, lb);
        CPoly ct = coeff_poly(f, target);
        Mono delta = mono_div(target, lb);
        Mono dmono(2 * n, 0);
        for (int i = 0; i < n; ++i) dmono[n + i] = delta[i];
        WeylOp shifted = mul(WeylOp::term(n, dmono, 1), g);
        f = poly_premul(cg, f) - poly_premul(ct, shifted);
        f = rat_content_normalize(f);
        did = true;
        break;
      }
    }
    if (!did) return f;
  }
}

}  // namespace

RatWeylGB rational_weyl_gb(const DIdeal& ideal, long budget) {
  int n = ideal.n;
  RatWeylGB out;
  std::vector<WeylOp> basis;
  for (const WeylOp& g : ideal.generators)
    if (!g.is_zero()) basis.push_back(rat_content_normalize(g));
  SPairQueue q;
  auto push_pairs = [&](size_t j) {
    Mono lj = *lead_dx(basis[j]);
    for (size_t i = 0; i < j; ++i)
      q.push(i, j, mono_lcm(*lead_dx(basis[i]), lj));
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  long processed = 0;
  while (!q.empty()) {
    if (++processed > budget) {
      out.complete = false;
      break;
    }
    auto p = q.pop_normal_strategy();
    Mono li = *lead_dx(basis[p.i]);
    Mono lj = *lead_dx(basis[p.j]);
    CPoly ci = coeff_poly(basis[p.i], li);
    CPoly cj = coeff_poly(basis[p.j], lj);
    auto shift_up = [&](const Mono& delta, const WeylOp& g) {
      Mono dmono(2 * n, 0);
      for (int i = 0; i < n; ++i) dmono[n + i] = delta[i];
      return mul(WeylOp::term(n, dmono, 1), g);
    };
    WeylOp s = poly_premul(cj, shift_up(mono_div(p.lcm, li), basis[p.i])) -
               poly_premul(ci, shift_up(mono_div(p.lcm, lj), basis[p.j]));
    if (s.is_zero()) continue;
    s = rat_content_normalize(s);
    WeylOp r = rat_normal_form(std::move(s), basis);
    if (!r.is_zero()) {
      basis.push_back(r);
      push_pairs(basis.size() - 1);
    }
  }

  // minimalize by dx-leading monomials
  std::vector<WeylOp> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    Mono li = *lead_dx(basis[i]);
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      Mono lj = *lead_dx(basis[j]);
      if (mono_divides(lj, li) && (lj != li || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const WeylOp& a, const WeylOp& b) {
    return grevlex_less(*lead_dx(a), *lead_dx(b));
  });
  out.elements = std::move(minimal);
  return out;
}

std::vector<Mono> rat_leading_dx(const RatWeylGB& gb, int n) {
  std::vector<Mono> lms;
  for (const WeylOp& g : gb.elements)
    if (!g.is_zero()) lms.push_back(*lead_dx(g));
  (void)n;
  return lms;
}

std::optional<std::vector<Mono>> standard_monomials(const std::vector<Mono>& lms, int n) {
  for (const Mono& m : lms)
    if (total_degree(m) == 0) return std::vector<Mono>{};  // ideal is (1)
  // finite iff each axis carries a pure power
  std::vector<int> bound(n, -1);
  for (const Mono& m : lms) {
    int nz = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i)
      if (m[i] > 0) {
        if (nz >= 0) pure = false;
        nz = i;
      }
    if (pure && nz >= 0 && (bound[nz] < 0 || m[nz] < bound[nz])) bound[nz] = m[nz];
  }
  for (int i = 0; i < n; ++i)
    if (bound[i] < 0) return std::nullopt;
  std::vector<Mono> std_monos;
  Mono cur(n, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      for (const Mono& m : lms)
        if (mono_divides(m, cur)) return;
      std_monos.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[pos]; ++e) {
      cur[pos] = e;
      rec(pos + 1);
    }
    cur[pos] = 0;
  };
  rec(0);
  std::sort(std_monos.begin(), std_monos.end(), grevlex_less);
  return std_monos;
}

}  // namespace hornsys
