#include "germ/poly/operations.hpp"

#include <algorithm>

namespace germ {

Polynomial differentiate(const Polynomial& p, std::string_view var) {
  return differentiate(p, p.variables().require(var));
}

Polynomial differentiate(const Polynomial& p, std::size_t var) {
  if (var >= p.variables().size()) throw Error("differentiate: variable index out of range");
  Polynomial r(p.variables());
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m[var];
    if (e == 0) continue;
    Monomial n = m;
    n.set(var, e - 1);
    r.add_term(n, c * Scalar(static_cast<long>(e)));
  }
  return r;
}

Scalar evaluate(const Polynomial& p, const std::vector<Scalar>& point) {
  if (point.size() != p.variables().size()) {
    throw Error("evaluate: expected " + std::to_string(p.variables().size()) + " values, got " +
                std::to_string(point.size()));
  }
  Scalar acc;
  for (const auto& [m, c] : p.terms()) {
    Scalar t = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (m[i] != 0) t *= pow(point[i], m[i]);
    }
    acc += t;
  }
  return acc;
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error("exact_divide: division by the zero polynomial");
  Polynomial rem = remap(f, g.variables());
  Polynomial quot(g.variables());
  const Monomial& lm = g.leading_monomial();
  Scalar lc_inv = g.leading_coefficient().inverse();
  // Single-divisor division: the remainder is zero iff g divides f.
  while (!rem.is_zero()) {
    const Monomial& top = rem.leading_monomial();
    if (!lm.divides(top)) return std::nullopt;
    Monomial qm = top / lm;
    Scalar qc = rem.leading_coefficient() * lc_inv;
    quot.add_term(qm, qc);
    rem -= Polynomial::term(g.variables(), qm, qc) * g;
  }
  return quot;
}

std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  int d = p.degree_in(var);
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(d + 1, 0)), Polynomial(p.variables()));
  for (const auto& [m, c] : p.terms()) {
    Monomial n = m;
    unsigned e = m[var];
    n.set(var, 0);
    out[e].add_term(n, c);
  }
  return out;
}

Polynomial determinant(const PolyMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) throw Error("determinant of an empty matrix");
  for (const auto& row : input) {
    if (row.size() != n) throw Error("determinant of a non-square matrix");
  }
  const Variables& ring = input[0][0].variables();
  if (n == 1) return input[0][0];
  if (n == 2) return input[0][0] * input[1][1] - input[0][1] * input[1][0];
  if (n == 3) {
    const auto& a = input;
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  }
  // Bareiss: every division below is exact.
  PolyMatrix m = input;
  Polynomial prev(ring, Scalar(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Polynomial(ring);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw Error("determinant: inexact Bareiss step");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Polynomial(ring);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

std::size_t matrix_rank(std::vector<std::vector<Scalar>> rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Scalar inv = rows[rank][col].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col] * inv;
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, std::string_view var) {
  if (f.is_zero() || g.is_zero()) throw Error("resultant of a zero polynomial");
  std::size_t v = f.variables().require(var);
  Polynomial gg = remap(g, f.variables());
  auto a = coefficients_in(f, v);
  auto b = coefficients_in(gg, v);
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  if (m == 0 && n == 0) {
    throw Error("resultant: both polynomials are constant in '" + std::string(var) + "'");
  }
  if (m == 0) return a[0].pow(static_cast<unsigned>(n));
  if (n == 0) return b[0].pow(static_cast<unsigned>(m));
  const auto size = static_cast<std::size_t>(m + n);
  PolyMatrix s(size, std::vector<Polynomial>(size, Polynomial(f.variables())));
  // Rows 0..n-1 hold shifted copies of f, rows n..n+m-1 of g, leading coefficient first.
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) s[r][r + k] = a[static_cast<std::size_t>(m - k)];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = b[static_cast<std::size_t>(n - k)];
  }
  return determinant(s);
}

Polynomial tangent_cone(const Polynomial& h) {
  if (h.is_zero()) throw Error("tangent_cone of the zero polynomial");
  if (!h.constant_term().is_zero()) throw Error("not a germ through origin");
  const unsigned ord = static_cast<unsigned>(h.order());
  Polynomial r(h.variables());
  for (const auto& [m, c] : h.terms()) {
    if (m.degree() == ord) r.add_term(m, c);
  }
  return r;
}

UniPoly to_unipoly(const Polynomial& p, std::size_t var) {
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(p.degree_in(var) + 1, 0)));
  for (const auto& [m, coeff] : p.terms()) {
    if (m.degree() != m[var]) throw Error("to_unipoly: polynomial involves other variables");
    c[m[var]] += coeff;
  }
  return UniPoly(std::move(c));
}

Polynomial from_unipoly(const UniPoly& u, const Variables& vars, std::size_t var) {
  Polynomial r(vars);
  for (std::size_t k = 0; k < u.coefficients().size(); ++k) {
    r.add_term(Monomial::variable(var, static_cast<unsigned>(k)), u[k]);
  }
  return r;
}

namespace {

// Moves non-real roots back into the cofactor so that only real linear factors remain.
RootSearch real_roots_only(const RootSearch& rs) {
  RootSearch out;
  UniPoly rest = rs.remainder;
  for (const auto& [root, mult] : rs.roots) {
    if (root.is_real()) {
      out.roots.emplace_back(root, mult);
      continue;
    }
    UniPoly lin(std::vector<Scalar>{-root, Scalar(1)});
    for (int k = 0; k < mult; ++k) rest = rest * lin;
  }
  out.remainder = rest.monic();
  return out;
}

}  // namespace

BivariateFactorization factor_homogeneous_bivariate(const Polynomial& h, bool gaussian) {
  if (h.is_zero() || !h.is_homogeneous()) {
    throw Error("factor_homogeneous_bivariate: input is not a nonzero homogeneous form");
  }
  auto used = h.support();
  const Variables& vars = h.variables();
  BivariateFactorization out;
  out.remainder = Polynomial(vars, Scalar(1));
  if (used.empty()) return out;
  if (used.size() > 2) throw Error("factor_homogeneous_bivariate: more than two variables occur");
  std::size_t first = 0;
  std::size_t second = 0;
  if (used.size() == 2) {
    first = used[0];
    second = used[1];
  } else if (vars.size() >= 2) {
    // A pure power of one variable; pair it with any other variable of the ring.
    first = used[0];
    second = (used[0] == 0) ? 1 : 0;
    if (first > second) std::swap(first, second);
  } else {
    out.linear.push_back({Polynomial::variable(vars, used[0]), h.total_degree()});
    return out;
  }
  const unsigned d = static_cast<unsigned>(h.total_degree());
  // Dehomogenize: h(first, second) = first^d * P(s), s = second / first.
  std::vector<Scalar> coeffs(d + 1);
  for (const auto& [m, c] : h.terms()) coeffs[m[second]] = c;
  UniPoly poly(coeffs);
  const int first_mult = static_cast<int>(d) - poly.degree();
  if (first_mult > 0) out.linear.push_back({Polynomial::variable(vars, first), first_mult});
  RootSearch rs = find_roots(poly);
  if (!gaussian) rs = real_roots_only(rs);
  Polynomial x = Polynomial::variable(vars, first);
  Polynomial y = Polynomial::variable(vars, second);
  for (const auto& [root, mult] : rs.roots) {
    out.linear.push_back({y - x * root, mult});
  }
  if (rs.remainder.degree() > 0) {
    out.remainder_degree = rs.remainder.degree();
    Polynomial rem(vars);
    const int e = rs.remainder.degree();
    for (int k = 0; k <= e; ++k) {
      Monomial m;
      m.set(first, static_cast<unsigned>(e - k));
      m.set(second, static_cast<unsigned>(k));
      rem.add_term(m, rs.remainder[static_cast<std::size_t>(k)]);
    }
    out.remainder = rem;
  }
  return out;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  if (!p.is_real()) return p.monic();
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.re().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.re().get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(p.leading_coefficient().re()) < 0) scale = -scale;
  return p * Scalar(scale);
}

namespace {

void push_factor(std::vector<Factor>& out, const Polynomial& f, int mult) {
  Polynomial pf = primitive_part(f);
  for (auto& e : out) {
    if (e.factor == pf) {
      e.multiplicity += mult;
      return;
    }
  }
  out.push_back({pf, mult});
}

}  // namespace

std::vector<Factor> split_factors(const Polynomial& p, bool gaussian) {
  std::vector<Factor> out;
  if (p.is_zero() || p.is_constant()) return out;
  const Variables& vars = p.variables();
  // Common monomial factor.
  Monomial common = p.terms().begin()->first;
  for (const auto& [m, c] : p.terms()) common = Monomial::gcd(common, m);
  Polynomial rest(vars);
  for (const auto& [m, c] : p.terms()) rest.add_term(m / common, c);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (common[i] > 0) push_factor(out, Polynomial::variable(vars, i), common[i]);
  }
  if (rest.is_constant()) return out;
  auto used = rest.support();
  if (used.size() == 1) {
    RootSearch rs = find_roots(to_unipoly(rest, used[0]));
    if (!gaussian) rs = real_roots_only(rs);
    Polynomial x = Polynomial::variable(vars, used[0]);
    for (const auto& [root, mult] : rs.roots) push_factor(out, x - Polynomial(vars, root), mult);
    if (rs.remainder.degree() > 0) push_factor(out, from_unipoly(rs.remainder, vars, used[0]), 1);
    return out;
  }
  if (used.size() == 2 && rest.is_homogeneous()) {
    auto bf = factor_homogeneous_bivariate(rest, gaussian);
    for (const auto& lf : bf.linear) push_factor(out, lf.form, lf.multiplicity);
    if (bf.remainder_degree > 0) push_factor(out, bf.remainder, 1);
    return out;
  }
  push_factor(out, rest, 1);
  return out;
}

}  // namespace germ
