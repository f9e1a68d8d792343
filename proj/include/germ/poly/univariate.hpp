#pragma once

#include <utility>
#include <vector>

#include "germ/poly/scalar.hpp"

namespace germ {

/// Dense univariate polynomial over Q(i), coefficients in ascending degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);

  static UniPoly monomial(unsigned degree, const Scalar& c = Scalar(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  const Scalar& leading() const { return c_.back(); }

  Scalar operator()(const Scalar& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);

struct RootSearch {
  /// Distinct roots found in Q(i), with multiplicities.
  std::vector<std::pair<Scalar, int>> roots;
  /// Cofactor that has no root found by the search (constant when fully split).
  UniPoly remainder;
};

/// Bounded search for roots in Q(i): zero roots, linear and quadratic pieces
/// solved in closed form, otherwise candidates from the rational root theorem
/// over Z[i]. Roots outside Q(i) stay in the remainder.
RootSearch find_roots(const UniPoly& p);

}  // namespace germ
