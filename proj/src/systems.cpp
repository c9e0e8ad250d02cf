#include "hornsys/systems.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "hornsys/errors.hpp"

namespace hornsys {

namespace {

// Is row i of B the k-th unit row e_k (0-based k)?
bool is_unit_row(const IntMatrix& B, int i, int k) {
  for (int j = 0; j < B.cols; ++j)
    if (B.at(i, j) != ((j == k) ? 1 : 0)) return false;
  return true;
}

IntMatrix top_rows(const IntMatrix& B, int m) {
  IntMatrix T(m, B.cols);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < B.cols; ++j) T.at(i, j) = B.at(i, j);
  return T;
}

}  // namespace

HornData validate(const IntMatrix& B_in, const RatVec& kappa_in) {
  int n = B_in.rows, m = B_in.cols;
  if (n <= 0 || m <= 0) throw ShapeMismatch("B must have positive dimensions");
  if (static_cast<int>(kappa_in.size()) != n)
    throw ShapeMismatch("kappa length must equal the row count of B");
  if (rank(B_in) < m) throw RankDeficient("B must have full column rank m");

  HornData d;
  d.n = n;
  d.m = m;
  d.d = n - m;

  // detect an identity submatrix anywhere; prefer rows with kappa = 0
  std::vector<int> block(m, -1);
  std::vector<bool> used(n, false);
  bool found = true;
  for (int k = 0; k < m && found; ++k) {
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (used[i] || !is_unit_row(B_in, i, k)) continue;
      if (pick < 0) pick = i;
      if (kappa_in[i] == 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0)
      found = false;
    else {
      block[k] = pick;
      used[pick] = true;
    }
  }

  std::vector<int> perm;
  if (found) {
    for (int k = 0; k < m; ++k) perm.push_back(block[k]);
    for (int i = 0; i < n; ++i)
      if (!used[i]) perm.push_back(i);
  } else {
    for (int i = 0; i < n; ++i) perm.push_back(i);
  }
  d.row_permutation = perm;

  d.B = IntMatrix(n, m);
  d.kappa.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) d.B.at(i, j) = B_in.at(perm[i], j);
    d.kappa[i] = kappa_in[perm[i]];
  }

  d.A = gale_dual(d.B);
  d.beta = mat_vec(d.A, d.kappa);

  d.flags.full_rank_m = true;
  d.kernel = has_nonneg_kernel_vector(d.B);
  d.flags.no_nonneg_kernel_vector = !d.kernel.exists;
  d.flags.has_identity_anywhere = found;
  d.flags.has_identity_top_block = true;
  for (int k = 0; k < m; ++k)
    if (!is_unit_row(d.B, k, k)) d.flags.has_identity_top_block = false;
  d.flags.kappa_zero_on_identity_rows = d.flags.has_identity_top_block;
  for (int k = 0; k < m && d.flags.kappa_zero_on_identity_rows; ++k)
    if (d.kappa[k] != 0) d.flags.kappa_zero_on_identity_rows = false;
  d.flags.top_m_rows_rank_m = rank(top_rows(d.B, m)) == m;
  return d;
}

namespace {

// Linear form B_i . theta + kappa_i in m variables (row i of B, 0-based).
ThetaPoly row_form(const HornData& d, int i) {
  ThetaPoly f = CPoly::constant(d.m, d.kappa[i]);
  for (int j = 0; j < d.m; ++j)
    if (d.B.at(i, j) != 0)
      f = f + Rational(d.B.at(i, j)) * CPoly::var(d.m, j);
  return f;
}

ThetaPoly descending_product(const ThetaPoly& form, int count) {
  ThetaPoly r = CPoly::constant(form.nvars, 1);
  for (int l = 0; l < count; ++l)
    r = r * (form - CPoly::constant(form.nvars, l));
  return r;
}

}  // namespace

std::pair<ThetaPoly, ThetaPoly> build_qp(const HornData& data, int k) {
  if (k < 1 || k > data.m) throw IndexOutOfRange("build_qp: column index out of range");
  ThetaPoly q = CPoly::constant(data.m, 1), p = CPoly::constant(data.m, 1);
  for (int i = 0; i < data.n; ++i) {
    Int b = data.B.at(i, k - 1);
    if (b > 0)
      q = q * descending_product(row_form(data, i), static_cast<int>(b.get_si()));
    else if (b < 0)
      p = p * descending_product(row_form(data, i), static_cast<int>(Int(-b).get_si()));
  }
  return {q, p};
}

DIdeal build_horn(const HornData& data) {
  if (!data.flags.full_rank_m)
    throw HypothesisViolated("build_horn: full_rank_m fails");
  if (!data.flags.no_nonneg_kernel_vector)
    throw HypothesisViolated("build_horn: no_nonneg_kernel_vector fails");
  DIdeal ideal;
  ideal.n = data.m;
  for (int k = 1; k <= data.m; ++k) {
    auto [q, p] = build_qp(data, k);
    WeylOp gen = theta_to_weyl(q) -
                 mul(WeylOp::x(data.m, k), theta_to_weyl(p));
    ideal.generators.push_back(gen);
  }
  return ideal;
}

DIdeal build_nhorn(const HornData& data) {
  if (!data.flags.has_identity_top_block)
    throw NotNormalized("build_nhorn: top m rows of B are not an identity block");
  if (!data.flags.kappa_zero_on_identity_rows)
    throw NotNormalized("build_nhorn: kappa is nonzero on an identity row");
  int m = data.m;
  DIdeal ideal;
  ideal.n = m;
  for (int k = 1; k <= m; ++k) {
    // q_k = r_k(theta) * theta_k with r_k collecting the rows below the block
    ThetaPoly r = CPoly::constant(m, 1);
    ThetaPoly p = CPoly::constant(m, 1);
    for (int i = m; i < data.n; ++i) {
      Int b = data.B.at(i, k - 1);
      if (b > 0)
        r = r * descending_product(row_form(data, i), static_cast<int>(b.get_si()));
      else if (b < 0)
        p = p * descending_product(row_form(data, i), static_cast<int>(Int(-b).get_si()));
    }
    std::vector<Int> ek(m, 0);
    ek[k - 1] = 1;
    WeylOp gen = mul(theta_to_weyl(theta_shift(r, ek)), WeylOp::dx(m, k)) -
                 theta_to_weyl(p);
    ideal.generators.push_back(gen);
  }
  return ideal;
}

DIdeal build_lattice_basis_ideal(const HornData& data) {
  int n = data.n;
  DIdeal ideal;
  ideal.n = n;
  for (int k = 0; k < data.m; ++k) {
    Mono plus(2 * n, 0), minus(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      Int b = data.B.at(i, k);
      if (b > 0)
        plus[n + i] = static_cast<int>(b.get_si());
      else if (b < 0)
        minus[n + i] = static_cast<int>(Int(-b).get_si());
    }
    ideal.generators.push_back(WeylOp::term(n, plus, 1) - WeylOp::term(n, minus, 1));
  }
  return ideal;
}

std::vector<WeylOp> build_euler(const HornData& data) {
  int n = data.n;
  std::vector<WeylOp> ops;
  for (int i = 0; i < data.d; ++i) {
    WeylOp e = WeylOp::constant(n, -data.beta[i]);
    for (int j = 0; j < n; ++j)
      if (data.A.at(i, j) != 0)
        e = e + Rational(data.A.at(i, j)) * WeylOp::theta(n, j + 1);
    ops.push_back(e);
  }
  return ops;
}

DIdeal build_h_ideal(const HornData& data) {
  DIdeal ideal = build_lattice_basis_ideal(data);
  for (const WeylOp& e : build_euler(data)) ideal.generators.push_back(e);
  return ideal;
}

std::pair<std::map<Mono, Rational>, std::string> horn_series_coefficients(
    const HornData& data, int order) {
  int m = data.m;
  std::map<Mono, Rational> c;
  c[Mono(m, 0)] = 1;
  // fill degree by degree: c_u from c_{u - e_k} via q_k(u) c_u = p_k(u-e_k) c_{u-e_k}
  std::vector<std::pair<ThetaPoly, ThetaPoly>> qp;
  for (int k = 1; k <= m; ++k) qp.push_back(build_qp(data, k));

  std::vector<Mono> frontier{Mono(m, 0)};
  for (int deg = 1; deg < order; ++deg) {
    std::vector<Mono> next;
    for (const Mono& u : frontier)
      for (int k = 0; k < m; ++k) {
        Mono v = u;
        v[k] += 1;
        if (!c.count(v)) {
          c[v] = 0;  // placeholder
          next.push_back(v);
        }
      }
    for (const Mono& v : next) {
      int k = 0;
      while (v[k] == 0) ++k;
      Mono u = v;
      u[k] -= 1;
      RatVec pv(m), pu(m);
      for (int j = 0; j < m; ++j) {
        pv[j] = Rational(v[j]);
        pu[j] = Rational(u[j]);
      }
      Rational qv = eval(qp[k].first, pv);
      if (qv == 0) {
        std::ostringstream os;
        os << "non-generic parameters: q_" << (k + 1) << " vanishes at a support point";
        return {{}, os.str()};
      }
      c[v] = eval(qp[k].second, pu) * c.at(u) / qv;
    }
    frontier = std::move(next);
  }

  // cross-check every recurrence inside the truncation (path independence)
  for (const auto& [u, cu] : c)
    for (int k = 0; k < m; ++k) {
      Mono v = u;
      v[k] += 1;
      auto it = c.find(v);
      if (it == c.end()) continue;
      RatVec pv(m), pu(m);
      for (int j = 0; j < m; ++j) {
        pv[j] = Rational(v[j]);
        pu[j] = Rational(u[j]);
      }
      if (eval(qp[k].first, pv) * it->second != eval(qp[k].second, pu) * cu)
        return {{}, "inconsistent Horn recurrences: series is not well defined"};
    }
  return {c, ""};
}

CorrespondenceReport check_series_annihilation(const HornData& data,
                                               const std::map<Mono, Rational>& coeffs,
                                               int order) {
  int n = data.n, m = data.m;
  for (const Rational& ki : data.kappa)
    if (!is_integer(ki))
      return {false, true, "kappa is not integral; correspondence check skipped"};

  // f = sum_u c_u x^{kappa + B u} as a truncated Laurent polynomial
  XPoly f(n);
  for (const auto& [u, cu] : coeffs) {
    Mono e(n);
    for (int i = 0; i < n; ++i) {
      Int v = data.kappa[i].get_num();
      for (int j = 0; j < m; ++j) v += data.B.at(i, j) * u[j];
      e[i] = static_cast<int>(v.get_si());
    }
    f.add_term(e, cu);
  }

  for (const WeylOp& e : build_euler(data)) {
    XPoly r = act(e, f);
    if (!r.is_zero())
      return {false, false,
              "Euler operator fails to annihilate the series exactly: residual " +
                  to_string(r, std::vector<std::string>(n, "x"))};
  }

  DIdeal lattice = build_lattice_basis_ideal(data);
  for (int k = 0; k < m; ++k) {
    XPoly r = act(lattice.generators[k], f);
    for (const auto& [v, cr] : r.t) {
      // recover the support point u with v = kappa + B u - (b_k)+
      RatVec rhs(n);
      for (int i = 0; i < n; ++i) {
        rhs[i] = Rational(v[i]) - data.kappa[i];
        if (data.B.at(i, k) > 0) rhs[i] += Rational(data.B.at(i, k));
      }
      auto u = solve_rational(data.B, rhs);
      std::ostringstream os;
      os << "binomial generator " << (k + 1) << ": residual term at ";
      for (int i = 0; i < n; ++i) os << v[i] << (i + 1 < n ? "," : "");
      if (!u) return {false, false, os.str() + " (off the series lattice)"};
      long usum = 0;
      bool integral = true;
      for (const Rational& ui : *u) {
        if (!is_integer(ui)) integral = false;
        usum += static_cast<long>(ui.get_num().get_si());
      }
      if (!integral || usum < order)
        return {false, false, os.str() + " (inside the truncation window)"};
      // residual supported only beyond the truncation order: acceptable
    }
  }
  return {true, false, ""};
}

CorrespondenceReport verify_solution_correspondence(const HornData& data, int order) {
  for (const Rational& ki : data.kappa)
    if (!is_integer(ki))
      return {false, true, "kappa is not integral; correspondence check skipped"};
  auto [coeffs, err] = horn_series_coefficients(data, order);
  if (!err.empty()) return {false, false, err};
  return check_series_annihilation(data, coeffs, order);
}

}  // namespace hornsys
