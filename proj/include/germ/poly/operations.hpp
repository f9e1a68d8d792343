#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "germ/poly/polynomial.hpp"
#include "germ/poly/univariate.hpp"

namespace germ {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Polynomial differentiate(const Polynomial& p, std::string_view var);
Polynomial differentiate(const Polynomial& p, std::size_t var);

Scalar evaluate(const Polynomial& p, const std::vector<Scalar>& point);

/// q with f = q*g when g divides f, nullopt otherwise. Throws on g = 0.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

/// Sylvester resultant with respect to `var`; the result does not involve var.
Polynomial resultant(const Polynomial& f, const Polynomial& g, std::string_view var);

/// Lowest-degree homogeneous part of a germ through the origin.
Polynomial tangent_cone(const Polynomial& h);

struct LinearFactor {
  Polynomial form;
  int multiplicity = 1;
};

struct BivariateFactorization {
  std::vector<LinearFactor> linear;
  /// Product of the factors that do not split over Q(i); constant when none.
  Polynomial remainder;
  int remainder_degree = 0;
};

/// Linear factors of a homogeneous form in two variables, found by
/// dehomogenizing and searching for roots in Q(i). Each linear form is
/// normalized so that its coefficient of the second variable is 1 (or the
/// form is exactly the first variable). With gaussian = false only real
/// linear factors are split off; conjugate pairs stay in the remainder.
BivariateFactorization factor_homogeneous_bivariate(const Polynomial& h, bool gaussian = true);

/// Determinant by fraction-free elimination.
Polynomial determinant(const PolyMatrix& m);

/// Exact rank of a scalar matrix.
std::size_t matrix_rank(std::vector<std::vector<Scalar>> rows);

/// Coefficient list of p viewed as a polynomial in `var` (index = power).
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var);

/// Univariate view of a polynomial that involves at most the variable `var`.
UniPoly to_unipoly(const Polynomial& p, std::size_t var);
Polynomial from_unipoly(const UniPoly& u, const Variables& vars, std::size_t var);

/// Rational content (gcd-like positive scalar) divided out so that
/// coefficients are coprime integers with a positive leading coefficient.
/// Complex polynomials are only scaled to make the leading coefficient 1.
Polynomial primitive_part(const Polynomial& p);

struct Factor {
  Polynomial factor;
  int multiplicity = 1;
};

/// Partial factorization: single-variable monomial factors, then linear
/// factors of a bivariate homogeneous cofactor, then univariate roots of a
/// one-variable cofactor. Whatever is left is returned as one factor.
/// Constant content is dropped. With gaussian = false, factors over Q only.
std::vector<Factor> split_factors(const Polynomial& p, bool gaussian = true);

}  // namespace germ
