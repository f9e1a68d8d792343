#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "germ/loci/map_germ.hpp"
#include "germ/poly/operations.hpp"

namespace germ {

/// p x m matrix of partial derivatives. For fbarg germs this is the
/// Jacobian of the holomorphic pair (f, g).
PolyMatrix jacobian(const MapGerm& g);

/// All k x k minors of a matrix, zeros and duplicates (up to scalars) removed.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k);

/// Ideal of the p x p minors of the Jacobian; fbarg germs use the realified map.
Ideal singular_locus(const MapGerm& g);

/// Real polynomial map in twice as many variables.
struct RealifiedGerm {
  Variables complex_vars;
  Variables real_vars;
  /// complex variable k -> (index of its real part, index of its imaginary part)
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  std::vector<Polynomial> components;

  /// (Re p, Im p) of a polynomial in the complex source variables.
  std::pair<Polynomial, Polynomial> split(const Polynomial& p) const;
  /// Real and imaginary parts of every generator.
  Ideal realify(const Ideal& complex_ideal) const;
  /// Real point corresponding to a complex point.
  std::vector<Scalar> real_point(const std::vector<Scalar>& z) const;
  MapGerm as_germ(const std::string& name) const;
};

RealifiedGerm realify(const MapGerm& g);

/// The germ analysed metrically: itself when real, its realification otherwise.
MapGerm metric_germ(const MapGerm& g);

struct Stratum {
  /// Zero ideal for open strata.
  Ideal closure;
  /// The stratum is V(closure) minus the union of these sets.
  std::vector<Ideal> excluded;
  /// Generic rank of the rows (gradients of closure generators, gradients of
  /// the map) on the stratum.
  int generic_rank = -1;
  std::string label;
};

struct Stratification {
  enum class Provenance { DefaultCoarse, UserSupplied };
  std::vector<Stratum> strata;
  Provenance provenance = Provenance::DefaultCoarse;
  /// Notes about what was approximated (for example dropped components).
  std::vector<std::string> notes;
};

std::string to_string(Stratification::Provenance p);

/// Raised when no usable sample point is found on a stratum.
class StratificationIndeterminate : public Error {
 public:
  using Error::Error;
};

/// Over the reals, replace generators that are sums of even powers with
/// positive coefficients (x^2 + y^2, ...) by the generators of their real
/// zero set. Complex ideals are returned unchanged.
Ideal real_zero_set_reduction(const Ideal& ideal, Field field);

/// Divides out common factors whose real zero set is already contained in
/// the zero set of the remaining quotient (for example x^2 + y^2 against
/// generators that all vanish on x = y = 0). The real zero set is unchanged.
Ideal strip_positive_factors(const Ideal& ideal);

/// Generators replaced by the product of their distinct split factors.
Ideal squarefree_generators(const Ideal& ideal);

/// Components of V(ideal): factors of the common divisor of the generators
/// and the residual ideal of the quotients. Components contained in another
/// one and components missing the origin are dropped.
std::vector<Ideal> split_components(const Ideal& ideal, Field field);

/// A point of V(closure) outside every excluded set, with rational (or
/// Gaussian rational when allow_complex) coordinates.
std::optional<std::vector<Scalar>> sample_point(const Ideal& closure, const std::vector<Ideal>& excluded,
                                                std::mt19937_64& rng, bool allow_complex, int attempts = 20);

/// Rows used by the Milnor-set construction: gradients of the closure
/// generators followed by gradients of the components.
PolyMatrix constraint_rows(const std::vector<Polynomial>& components, const Stratum& s);

/// Maximum exact rank of the constraint rows over a few sample points.
int generic_rank(const std::vector<Polynomial>& components, const Stratum& s, std::mt19937_64& rng,
                 bool allow_complex);

/// Coarse stratification from the components of the singular locus. For
/// complex germs the ideals live in the complex source variables; for fbarg
/// germs they live in the realified variables.
Stratification default_stratification(const MapGerm& g, std::uint64_t seed = 1);

/// Stratification of the realified germ induced by a complex one.
Stratification realify(const Stratification& s, const RealifiedGerm& r, std::uint64_t seed = 1);

/// Ideal of the (r+1)-minors of [constraint rows; position vector] for a
/// real germ given by its components.
Ideal milnor_set_ideal(const std::vector<Polynomial>& components, const Stratum& s);
Ideal milnor_set_ideal(const MapGerm& real_germ, const Stratum& s);

}  // namespace germ
