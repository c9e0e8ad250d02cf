#include "hornsys/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

#include "hornsys/errors.hpp"

namespace hornsys {

WeylOp WeylOp::constant(int n, const Rational& c) {
  WeylOp p(n);
  if (c != 0) p.t[Mono(2 * n, 0)] = c;
  return p;
}

WeylOp WeylOp::term(int n, const Mono& ab, const Rational& c) {
  assert(static_cast<int>(ab.size()) == 2 * n);
  WeylOp p(n);
  if (c != 0) p.t[ab] = c;
  return p;
}

WeylOp WeylOp::x(int n, int i) {
  Mono ab(2 * n, 0);
  ab[i - 1] = 1;
  return term(n, ab, 1);
}

WeylOp WeylOp::dx(int n, int i) {
  Mono ab(2 * n, 0);
  ab[n + i - 1] = 1;
  return term(n, ab, 1);
}

WeylOp WeylOp::theta(int n, int i) {
  Mono ab(2 * n, 0);
  ab[i - 1] = 1;
  ab[n + i - 1] = 1;
  return term(n, ab, 1);
}

void WeylOp::add_term(const Mono& ab, const Rational& c) {
  if (c == 0) return;
  auto it = t.find(ab);
  if (it == t.end()) {
    t.emplace(ab, c);
  } else {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

int WeylOp::order() const {
  int d = -1;
  for (const auto& [ab, c] : t) {
    int o = 0;
    for (int i = n; i < 2 * n; ++i) o += ab[i];
    d = std::max(d, o);
  }
  return d;
}

WeylOp operator+(const WeylOp& a, const WeylOp& b) {
  if (a.n != b.n) throw DimensionMismatch("WeylOp sum: ambient mismatch");
  WeylOp r = a;
  for (const auto& [m, c] : b.t) r.add_term(m, c);
  return r;
}

WeylOp operator-(const WeylOp& a, const WeylOp& b) { return a + (-b); }

WeylOp operator-(const WeylOp& a) {
  WeylOp r(a.n);
  for (const auto& [m, c] : a.t) r.t[m] = -c;
  return r;
}

WeylOp operator*(const Rational& c, const WeylOp& a) {
  WeylOp r(a.n);
  if (c == 0) return r;
  for (const auto& [m, co] : a.t) r.t[m] = c * co;
  return r;
}

namespace {

Rational binomial(int n, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

// Enumerates k with 0 <= k <= cap componentwise, calling fn with the combined
// commutator coefficient prod_i C(b_i,k_i)*C(a_i,k_i)*k_i!.
void enumerate_contractions(const std::vector<int>& b, const std::vector<int>& a,
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
    enumerate_contractions(b, a, k, pos + 1, c, fn);
    // update to the coefficient for v+1 contractions in this slot:
    // C(b,k)C(a,k)k! steps by (b-k)(a-k)/(k+1)
    c *= (b[pos] - v) * (a[pos] - v);
    c /= v + 1;
  }
  k[pos] = 0;
}

}  // namespace

WeylOp mul(const WeylOp& p, const WeylOp& q) {
  if (p.n != q.n) throw DimensionMismatch("WeylOp product: ambient mismatch");
  int n = p.n;
  WeylOp r(n);
  for (const auto& [m1, c1] : p.t) {
    std::vector<int> a1(m1.begin(), m1.begin() + n), b1(m1.begin() + n, m1.end());
    for (const auto& [m2, c2] : q.t) {
      std::vector<int> a2(m2.begin(), m2.begin() + n), b2(m2.begin() + n, m2.end());
      std::vector<int> k(n, 0);
      Rational c12 = c1 * c2;
      enumerate_contractions(b1, a2, k, 0, Rational(1),
                             [&](const std::vector<int>& kk, const Rational& coef) {
                               Mono m(2 * n);
                               for (int i = 0; i < n; ++i) {
                                 m[i] = a1[i] + a2[i] - kk[i];
                                 m[n + i] = b1[i] + b2[i] - kk[i];
                               }
                               r.add_term(m, c12 * coef);
                             });
    }
  }
  return r;
}

XPoly act(const WeylOp& p, const XPoly& f) {
  int n = p.n;
  if (f.nvars != n) throw DimensionMismatch("act: variable count mismatch");
  XPoly r(n);
  for (const auto& [ab, c] : p.t) {
    for (const auto& [e, d] : f.t) {
      Rational coef = c * d;
      Mono out(n);
      bool zero = false;
      for (int i = 0; i < n; ++i) {
        // dx_i^{b_i} on x_i^{e_i}: falling factorial
        for (int k = 0; k < ab[n + i]; ++k) coef *= Rational(e[i] - k);
        if (coef == 0) { zero = true; break; }
        out[i] = e[i] - ab[n + i] + ab[i];
      }
      if (!zero) r.add_term(out, coef);
    }
  }
  return r;
}

WeylOp theta_to_weyl(const ThetaPoly& tp) {
  int n = tp.nvars;
  WeylOp r(n);
  for (const auto& [e, c] : tp.t) {
    WeylOp term = WeylOp::constant(n, c);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) term = mul(term, WeylOp::theta(n, i + 1));
    r = r + term;
  }
  return r;
}

std::optional<ThetaPoly> weyl_is_theta(const WeylOp& p) {
  int n = p.n;
  ThetaPoly r(n);
  for (const auto& [ab, c] : p.t) {
    ThetaPoly term = CPoly::constant(n, c);
    for (int i = 0; i < n; ++i) {
      if (ab[i] != ab[n + i]) return std::nullopt;
      if (ab[i] > 0) term = term * falling_factorial_theta(n, i, ab[i]);
    }
    r = r + term;
  }
  return r;
}

ThetaPoly theta_shift(const ThetaPoly& tp, const std::vector<Int>& v) {
  return shift(tp, v);
}

ThetaPoly falling_factorial_theta(int n, int var, int k) {
  ThetaPoly r = CPoly::constant(n, 1);
  CPoly th = CPoly::var(n, var);
  for (int i = 0; i < k; ++i) r = r * (th - CPoly::constant(n, i));
  return r;
}

WeylOp substitute_x_shift(const WeylOp& p, int j, const Rational& c) {
  if (j < 1 || j > p.n) throw IndexOutOfRange("substitute_x_shift: bad index");
  if (c == 0) return p;
  WeylOp r(p.n);
  for (const auto& [ab, coef] : p.t) {
    int a = ab[j - 1];
    // (x_j + c)^a expanded
    for (int tdeg = 0; tdeg <= a; ++tdeg) {
      Rational cc = coef * binomial(a, tdeg);
      for (int i = 0; i < a - tdeg; ++i) cc *= c;
      Mono m = ab;
      m[j - 1] = tdeg;
      r.add_term(m, cc);
    }
  }
  return r;
}

WeylOp specialize_x_one(const WeylOp& p, const std::vector<int>& js) {
  std::vector<bool> drop(p.n + 1, false);
  for (int j : js) drop[j] = true;
  WeylOp r(p.n);
  for (const auto& [ab, c] : p.t) {
    Mono m = ab;
    for (int j = 1; j <= p.n; ++j) {
      if (!drop[j]) continue;
      if (ab[p.n + j - 1] != 0)
        throw std::logic_error("specialize_x_one: dx survives for specialized variable");
      m[j - 1] = 0;
    }
    r.add_term(m, c);
  }
  return r;
}

WeylOp restrict_vars(const WeylOp& p, int m) {
  WeylOp r(m);
  for (const auto& [ab, c] : p.t) {
    Mono out(2 * m);
    for (int i = 0; i < p.n; ++i) {
      if (i < m) {
        out[i] = ab[i];
        out[m + i] = ab[p.n + i];
      } else if (ab[i] != 0 || ab[p.n + i] != 0) {
        throw std::logic_error("restrict_vars: term involves a dropped variable");
      }
    }
    r.add_term(out, c);
  }
  return r;
}

std::string to_string(const WeylOp& p) {
  std::vector<std::string> names;
  for (int i = 1; i <= p.n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= p.n; ++i) names.push_back("dx" + std::to_string(i));
  CPoly f(2 * p.n);
  f.t = p.t;
  return to_string(f, names);
}

namespace {

struct Tokenizer {
  const std::string& s;
  size_t pos{0};
  explicit Tokenizer(const std::string& str) : s(str) {}
  void skip_ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
};

}  // namespace

WeylOp parse_weyl(const std::string& s, int n) {
  WeylOp p(n);
  Tokenizer tk(s);
  if (tk.eof()) throw ParseError("empty operator string");
  bool first = true;
  while (!tk.eof()) {
    int sign = 1;
    char c = tk.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++tk.pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms");
    }
    first = false;
    if (tk.eof()) throw ParseError("dangling sign");
    // one term: factors joined by '*'
    Rational coef = sign;
    Mono m(2 * n, 0);
    bool saw_factor = false;
    while (true) {
      tk.skip_ws();
      size_t start = tk.pos;
      while (tk.pos < tk.s.size() && tk.s[tk.pos] != '*' && tk.s[tk.pos] != ' ')
        ++tk.pos;
      std::string f = tk.s.substr(start, tk.pos - start);
      if (f.empty()) throw ParseError("empty factor");
      saw_factor = true;
      if (f[0] >= '0' && f[0] <= '9') {
        coef *= parse_rational(f);
      } else {
        bool is_dx = f.rfind("dx", 0) == 0;
        bool is_x = !is_dx && f[0] == 'x';
        if (!is_dx && !is_x) throw ParseError("bad factor: " + f);
        size_t idx_start = is_dx ? 2 : 1;
        size_t caret = f.find('^');
        std::string idx_str = f.substr(idx_start, caret == std::string::npos
                                                      ? std::string::npos
                                                      : caret - idx_start);
        int idx = 0;
        try {
          idx = std::stoi(idx_str);
        } catch (...) {
          throw ParseError("bad variable index in: " + f);
        }
        if (idx < 1 || idx > n) throw ParseError("variable index out of range: " + f);
        int exp = 1;
        if (caret != std::string::npos) {
          try {
            exp = std::stoi(f.substr(caret + 1));
          } catch (...) {
            throw ParseError("bad exponent in: " + f);
          }
          if (exp < 0) throw ParseError("negative exponent in: " + f);
        }
        m[(is_dx ? n : 0) + idx - 1] += exp;
      }
      tk.skip_ws();
      if (tk.pos < tk.s.size() && tk.s[tk.pos] == '*') {
        ++tk.pos;
        continue;
      }
      break;
    }
    if (!saw_factor) throw ParseError("empty term");
    p.add_term(m, coef);
  }
  return p;
}

}  // namespace hornsys
