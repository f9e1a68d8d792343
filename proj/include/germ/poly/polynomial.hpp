#pragma once

#include <map>
#include <string>
#include <vector>

#include "germ/poly/monomial.hpp"
#include "germ/poly/scalar.hpp"

namespace germ {

/// Exact multivariate polynomial over Q(i).
///
/// Terms live in a map keyed by exponent vector in graded-lex order, so two
/// polynomials over the same variable list are equal iff their term maps are
/// equal. No zero coefficient is ever stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(Variables vars) : vars_(std::move(vars)) {}
  Polynomial(Variables vars, const Scalar& c);

  static Polynomial variable(const Variables& vars, std::size_t index);
  static Polynomial variable(const Variables& vars, std::string_view name);
  static Polynomial term(const Variables& vars, const Monomial& m, const Scalar& c);

  const Variables& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_real() const;
  bool is_homogeneous() const;
  /// Constant term; zero iff the polynomial vanishes at the origin.
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Lowest total degree among the terms; -1 for zero.
  int order() const;
  int degree_in(std::size_t var) const;
  /// Variables that actually occur.
  std::vector<std::size_t> support() const;

  /// Greatest term in graded-lex order (the polynomial must be nonzero).
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const;

  /// Coefficient-wise complex conjugate (not the conjugate map z -> zbar).
  Polynomial conj_coefficients() const;
  Polynomial real_part() const;
  Polynomial imag_part() const;

  /// Divide by the leading coefficient.
  Polynomial monic() const;
  /// Equal up to a nonzero scalar factor.
  bool proportional_to(const Polynomial& o) const;

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;

  Variables vars_;
  Terms terms_;
};

std::string monomial_string(const Monomial& m, const Variables& vars);

/// Re-express p over `target`, matching variables by name.
Polynomial remap(const Polynomial& p, const Variables& target);

/// Replace variable i by images[i]; all images share one ring.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

}  // namespace germ
