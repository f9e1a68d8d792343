#pragma once

#include <random>

#include "germ/poly/polynomial.hpp"

namespace germ::testing {

inline Scalar random_scalar(std::mt19937_64& rng, bool complex_coeffs = false) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  Rational re(num(rng), den(rng));
  re.canonicalize();
  Rational im = 0;
  if (complex_coeffs) {
    im = Rational(num(rng), den(rng));
    im.canonicalize();
  }
  return Scalar(re, im);
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const Variables& vars, unsigned max_degree,
                                    int max_terms, bool complex_coeffs = false) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_degree);
  Polynomial p(vars);
  int n = terms(rng);
  for (int k = 0; k < n; ++k) {
    Monomial m;
    unsigned budget = max_degree;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      unsigned e = std::min(budget, exp(rng) / static_cast<unsigned>(vars.size() > 1 ? 2 : 1));
      m.set(v, e);
      budget -= e;
    }
    p.add_term(m, random_scalar(rng, complex_coeffs));
  }
  return p;
}

}  // namespace germ::testing
