#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "germ/poly/polynomial.hpp"

namespace germ {

/// Raised when a Groebner computation runs out of its pair budget. Callers
/// turn this into an indeterminate verdict, never into an answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Default number of S-pairs a single Buchberger run may reduce.
std::size_t default_pair_budget();
void set_default_pair_budget(std::size_t budget);

class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  /// Lex with an explicit priority list (priority[0] is the largest variable).
  static MonomialOrder lex(std::vector<std::size_t> priority);
  static MonomialOrder grevlex(std::vector<std::size_t> priority);
  /// Elimination order: the variables in `drop` form the first block, each
  /// block ordered by grevlex.
  static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& drop);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t block_size() const { return block_; }

  /// Negative, zero or positive as a is smaller, equal or greater than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const;

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block);
  int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;

  Kind kind_;
  std::vector<std::size_t> priority_;
  std::size_t block_ = 0;
};

class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(Variables vars) : vars_(std::move(vars)) {}
  /// Zero generators are dropped; all generators are remapped onto vars.
  Ideal(Variables vars, const std::vector<Polynomial>& gens);

  const Variables& variables() const { return vars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_real() const;

  void add(const Polynomial& p);
  Ideal operator+(const Ideal& o) const;
  /// Product of ideals (all pairwise products of generators).
  Ideal operator*(const Ideal& o) const;

  std::string to_string() const;

 private:
  Variables vars_;
  std::vector<Polynomial> gens_;
};

struct GroebnerBasis {
  Variables vars;
  MonomialOrder order = MonomialOrder::grevlex(0);
  /// Monic, sorted by leading monomial (greatest first).
  std::vector<Polynomial> basis;
  bool reduced = true;

  bool is_unit() const;
  bool is_zero() const { return basis.empty(); }
  Ideal ideal() const { return Ideal(vars, basis); }
  /// Leading monomial of basis[i] under `order`.
  Monomial leading_monomial(std::size_t i) const;
};

/// Reduced Groebner basis by Buchberger's algorithm with the Gebauer-Moeller
/// criteria and the normal selection strategy. Throws BudgetExceeded.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         std::size_t pair_budget = default_pair_budget());
GroebnerBasis buchberger(const Ideal& ideal);

/// Remainder of full reduction; zero iff p is in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Leading monomial of p under an arbitrary order.
Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);

/// I intersected with the subring without `drop`; the variable list is kept.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop);

/// Krull dimension of R/I: -1 for the unit ideal.
int dimension(const GroebnerBasis& gb);
int dimension(const Ideal& ideal);
/// Variables of one maximal independent set realizing dimension(gb).
std::vector<std::size_t> independent_set(const GroebnerBasis& gb);

bool radical_membership(const Polynomial& p, const Ideal& ideal);
bool contains(const Ideal& ideal, const Polynomial& p);
/// Each generator of b lies in a.
bool contains(const Ideal& a, const Ideal& b);
bool same_ideal(const Ideal& a, const Ideal& b);

Ideal intersect(const Ideal& a, const Ideal& b);
/// I : J^infinity, generator by generator, intersected over J.
Ideal saturate(const Ideal& ideal, const Ideal& by);
bool contains_origin(const Ideal& ideal);
/// Reduced grevlex basis as an ideal, a canonical generator set.
Ideal canonical(const Ideal& ideal);

/// Greatest common divisor as a primitive polynomial, via the generator of
/// the intersection of the two principal ideals.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace germ
