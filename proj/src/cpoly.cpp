#include "hornsys/cpoly.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>

#include "hornsys/errors.hpp"

namespace hornsys {

int total_degree(const Mono& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
  Mono r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

CPoly CPoly::constant(int n, const Rational& c) {
  CPoly f(n);
  if (c != 0) f.t[Mono(n, 0)] = c;
  return f;
}

CPoly CPoly::monomial(int n, const Mono& m, const Rational& c) {
  CPoly f(n);
  if (c != 0) f.t[m] = c;
  return f;
}

CPoly CPoly::var(int n, int i) {
  Mono m(n, 0);
  m[i] = 1;
  return monomial(n, m, 1);
}

bool CPoly::is_constant() const {
  return t.empty() || (t.size() == 1 && total_degree(t.begin()->first) == 0);
}

int CPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : t) d = std::max(d, total_degree(m));
  return d;
}

int CPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : t) d = std::max(d, m[var]);
  return d;
}

void CPoly::add_term(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

CPoly operator+(const CPoly& a, const CPoly& b) {
  CPoly r = a;
  for (const auto& [m, c] : b.t) r.add_term(m, c);
  return r;
}

CPoly operator-(const CPoly& a, const CPoly& b) {
  CPoly r = a;
  for (const auto& [m, c] : b.t) r.add_term(m, -c);
  return r;
}

CPoly operator-(const CPoly& a) {
  CPoly r(a.nvars);
  for (const auto& [m, c] : a.t) r.t[m] = -c;
  return r;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  CPoly r(a.nvars);
  for (const auto& [ma, ca] : a.t)
    for (const auto& [mb, cb] : b.t) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

CPoly operator*(const Rational& c, const CPoly& a) {
  CPoly r(a.nvars);
  if (c == 0) return r;
  for (const auto& [m, co] : a.t) r.t[m] = c * co;
  return r;
}

Rational eval(const CPoly& f, const RatVec& point) {
  Rational s = 0;
  for (const auto& [m, c] : f.t) {
    Rational term = c;
    for (size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) term *= point[i];
    s += term;
  }
  return s;
}

CPoly derivative(const CPoly& f, int var) {
  CPoly r(f.nvars);
  for (const auto& [m, c] : f.t) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

CPoly shift(const CPoly& f, const std::vector<Int>& v) {
  std::vector<CPoly> images(f.nvars);
  for (int i = 0; i < f.nvars; ++i)
    images[i] = CPoly::var(f.nvars, i) + CPoly::constant(f.nvars, Rational(v[i]));
  return compose(f, images);
}

CPoly compose(const CPoly& f, const std::vector<CPoly>& images) {
  CPoly r(f.nvars);
  for (const auto& [m, c] : f.t) {
    CPoly term = CPoly::constant(f.nvars, c);
    for (size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) term = term * images[i];
    r = r + term;
  }
  return r;
}

CPoly exact_div(const CPoly& f, const CPoly& g) {
  if (g.is_zero()) throw std::logic_error("exact_div by zero");
  CPoly rem = f, q(f.nvars);
  CMonoOrder lex = CMonoOrder::lex();
  while (!rem.is_zero()) {
    Mono lf = leading_mono(rem, lex);
    Mono lg = leading_mono(g, lex);
    if (!mono_divides(lg, lf)) throw std::logic_error("exact_div: not divisible");
    Mono d = mono_div(lf, lg);
    Rational c = rem.t.at(lf) / g.t.at(lg);
    CPoly tm = CPoly::monomial(f.nvars, d, c);
    q = q + tm;
    rem = rem - tm * g;
  }
  return q;
}

CPoly primitive_part(const CPoly& f) {
  if (f.is_zero()) return f;
  Int den = 1, num = 0;
  for (const auto& [m, c] : f.t) den = lcm(den, c.get_den());
  for (const auto& [m, c] : f.t) num = gcd(num, Int(c.get_num() * (den / c.get_den())));
  Rational scale(den, num);  // num > 0 after gcd of absolute values
  scale.canonicalize();
  if (scale < 0) scale = -scale;
  CPoly r = scale * f;
  // sign: leading lex coefficient positive
  Mono lm = leading_mono(r, CMonoOrder::lex());
  if (r.t.at(lm) < 0) r = -r;
  return r;
}

namespace {

// Coefficients of f viewed as univariate in x_var.
std::map<int, CPoly> univariate_view(const CPoly& f, int var) {
  std::map<int, CPoly> co;
  for (const auto& [m, c] : f.t) {
    Mono rest = m;
    int d = rest[var];
    rest[var] = 0;
    auto [it, inserted] = co.try_emplace(d, CPoly(f.nvars));
    it->second.add_term(rest, c);
  }
  return co;
}

CPoly from_univariate(const std::map<int, CPoly>& co, int var) {
  CPoly f;
  for (const auto& [d, c] : co) {
    if (c.is_zero()) continue;
    f.nvars = c.nvars;
    Mono pw(c.nvars, 0);
    pw[var] = d;
    f = f + CPoly::monomial(c.nvars, pw, 1) * c;
  }
  return f;
}

CPoly content_in(const CPoly& f, int var) {
  std::vector<CPoly> cs;
  for (const auto& [d, c] : univariate_view(f, var)) cs.push_back(c);
  return gcd_many(cs);
}

CPoly lead_coeff_in(const CPoly& f, int var) {
  auto co = univariate_view(f, var);
  return co.rbegin()->second;
}

// Pseudo-remainder of f by g with respect to x_var.
CPoly prem(CPoly f, const CPoly& g, int var) {
  int dg = g.degree_in(var);
  CPoly lg = lead_coeff_in(g, var);
  while (!f.is_zero() && f.degree_in(var) >= dg) {
    int df = f.degree_in(var);
    CPoly lf = lead_coeff_in(f, var);
    Mono pw(f.nvars, 0);
    pw[var] = df - dg;
    f = lg * f - CPoly::monomial(f.nvars, pw, 1) * lf * g;
  }
  return f;
}

int top_var(const CPoly& f) {
  int v = -1;
  for (const auto& [m, c] : f.t)
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) v = std::max(v, static_cast<int>(i));
  return v;
}

}  // namespace

CPoly gcd(const CPoly& f, const CPoly& g) {
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);
  int v = std::max(top_var(f), top_var(g));
  if (v < 0) return CPoly::constant(f.nvars, 1);
  CPoly cf = content_in(f, v), cg = content_in(g, v);
  CPoly F = exact_div(f, cf), G = exact_div(g, cg);
  if (F.degree_in(v) < G.degree_in(v)) std::swap(F, G);
  // primitive pseudo-remainder sequence in x_v
  CPoly gcd_pp;
  while (true) {
    CPoly R = prem(F, G, v);
    if (R.is_zero()) {
      gcd_pp = primitive_part(G);
      break;
    }
    if (R.degree_in(v) == 0) {
      gcd_pp = CPoly::constant(f.nvars, 1);
      break;
    }
    F = G;
    G = exact_div(R, content_in(R, v));
  }
  return primitive_part(gcd(cf, cg) * gcd_pp);
}

CPoly gcd_many(const std::vector<CPoly>& fs) {
  CPoly g;
  bool first = true;
  for (const CPoly& f : fs) {
    if (first) {
      g = primitive_part(f);
      first = false;
    } else {
      g = gcd(g, f);
    }
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

CMonoOrder CMonoOrder::weighted(std::vector<int> w, Tie tie) {
  CMonoOrder o;
  o.tie = tie;
  o.weights.push_back(std::move(w));
  return o;
}

bool CMonoOrder::less(const Mono& a, const Mono& b) const {
  for (const auto& w : weights) {
    long wa = 0, wb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      wa += static_cast<long>(w[i]) * a[i];
      wb += static_cast<long>(w[i]) * b[i];
    }
    if (wa != wb) return wa < wb;
  }
  if (tie == Tie::Lex) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // grevlex: last nonzero entry of a-b positive means a smaller
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Mono leading_mono(const CPoly& f, const CMonoOrder& ord) {
  assert(!f.is_zero());
  auto it = f.t.begin();
  Mono best = it->first;
  for (++it; it != f.t.end(); ++it)
    if (ord.less(best, it->first)) best = it->first;
  return best;
}

CPoly normal_form(CPoly f, const std::vector<CPoly>& basis, const CMonoOrder& ord) {
  CPoly result(f.nvars);
  while (!f.is_zero()) {
    Mono lm = leading_mono(f, ord);
    bool reduced = false;
    for (const CPoly& g : basis) {
      if (g.is_zero()) continue;
      Mono lg = leading_mono(g, ord);
      if (!mono_divides(lg, lm)) continue;
      Rational c = f.t.at(lm) / g.t.at(lg);
      f = f - CPoly::monomial(f.nvars, mono_div(lm, lg), c) * g;
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

CGB commutative_gb(std::vector<CPoly> gens, const CMonoOrder& ord, long budget) {
  std::vector<CPoly> basis;
  for (CPoly& g : gens)
    if (!g.is_zero()) basis.push_back(g);

  struct Pair {
    size_t i, j;
    Mono lcm;
    long seq;
  };
  std::vector<Pair> pairs;
  long seq = 0;
  auto push_pairs = [&](size_t j) {
    Mono lj = leading_mono(basis[j], ord);
    for (size_t i = 0; i < j; ++i) {
      Mono li = leading_mono(basis[i], ord);
      Mono l = mono_lcm(li, lj);
      if (l == mono_mul(li, lj)) continue;  // coprime leading monomials
      pairs.push_back({i, j, l, seq++});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  CGB out;
  long processed = 0;
  while (!pairs.empty()) {
    if (++processed > budget) {
      out.complete = false;
      break;
    }
    // normal strategy: minimal lcm degree, FIFO tiebreak
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      int da = total_degree(pairs[k].lcm), db = total_degree(pairs[best].lcm);
      if (da < db || (da == db && pairs[k].seq < pairs[best].seq)) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + best);

    Mono li = leading_mono(basis[p.i], ord);
    Mono lj = leading_mono(basis[p.j], ord);
    CPoly s =
        CPoly::monomial(basis[p.i].nvars, mono_div(p.lcm, li),
                        1 / basis[p.i].t.at(li)) * basis[p.i] -
        CPoly::monomial(basis[p.j].nvars, mono_div(p.lcm, lj),
                        1 / basis[p.j].t.at(lj)) * basis[p.j];
    CPoly r = normal_form(std::move(s), basis, ord);
    if (!r.is_zero()) {
      basis.push_back(r);
      push_pairs(basis.size() - 1);
    }
  }

  // reduce: minimalize, then tail-reduce, monic
  std::vector<CPoly> reduced;
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
    std::vector<CPoly> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = normal_form(reduced[i], others, ord);
    if (!reduced[i].is_zero()) {
      Rational lc = reduced[i].t.at(leading_mono(reduced[i], ord));
      reduced[i] = (1 / lc) * reduced[i];
    }
  }
  std::erase_if(reduced, [](const CPoly& f) { return f.is_zero(); });
  std::sort(reduced.begin(), reduced.end(), [&](const CPoly& a, const CPoly& b) {
    return ord.less(leading_mono(a, ord), leading_mono(b, ord));
  });
  out.basis = std::move(reduced);
  return out;
}

int krull_dim_monomial(const std::vector<Mono>& lms, int nvars) {
  for (const Mono& m : lms)
    if (total_degree(m) == 0) return -1;
  std::vector<unsigned> supports;
  for (const Mono& m : lms) {
    unsigned s = 0;
    for (int i = 0; i < nvars; ++i)
      if (m[i] > 0) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
    int pc = __builtin_popcount(mask);
    if (pc <= best) continue;
    bool independent = true;
    for (unsigned s : supports)
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    if (independent) best = pc;
  }
  return best;
}

int krull_dim(const std::vector<CPoly>& gens, int nvars, long budget, bool* complete) {
  CGB gb = commutative_gb(gens, CMonoOrder::grevlex(), budget);
  if (complete) *complete = gb.complete;
  std::vector<Mono> lms;
  for (const CPoly& f : gb.basis) lms.push_back(leading_mono(f, CMonoOrder::grevlex()));
  return krull_dim_monomial(lms, nvars);
}

std::string to_string(const CPoly& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  // canonical rendering: descending graded lex
  std::vector<std::pair<Mono, Rational>> terms(f.t.begin(), f.t.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "- ";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono_str;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono_str.empty()) mono_str += "*";
      mono_str += names[i];
      if (m[i] != 1) mono_str += "^" + std::to_string(m[i]);
    }
    if (mono_str.empty()) {
      os << to_string(a);
    } else if (a == 1) {
      os << mono_str;
    } else {
      os << to_string(a) << "*" << mono_str;
    }
  }
  return os.str();
}

}  // namespace hornsys
