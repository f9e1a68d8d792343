#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germ/poly/polynomial.hpp"
#include "germ/puiseux/puiseux.hpp"

namespace germ {

enum class ExecutionPolicy { Serial, Parallel };

/// Sampling and descent parameters. Every certificate echoes the config it
/// was produced with.
struct NumericConfig {
  std::uint64_t seed = 20240601;
  /// Source radii eps_0 > eps_1 > ...
  std::vector<double> radius_ladder = geometric(0.5, 0.5, 8);
  /// Target radii eta_0 > eta_1 > ...
  std::vector<double> target_ladder = geometric(0.05, 0.25, 8);
  int starts = 64;
  /// Bound on the constraint residual of an accepted witness.
  double tolerance = 1e-10;
  /// Levenberg-Marquardt iterations per penalty weight.
  int max_iterations = 40;
  /// Witnesses with norm above tau * eps_0 count as away from the origin.
  double tau = 0.05;
  /// Target directions sampled per rung.
  int directions = 24;
  ExecutionPolicy policy = ExecutionPolicy::Parallel;

  static std::vector<double> geometric(double first, double ratio, int rungs);
  /// Throws Error on an invalid config.
  void validate() const;
};

/// Real polynomial map compiled to double-precision evaluation.
class NumericMap {
 public:
  NumericMap() = default;
  /// All polynomials must share one ring and have real coefficients.
  explicit NumericMap(const std::vector<Polynomial>& components);
  NumericMap(const std::vector<Polynomial>& components, const Variables& vars);

  std::size_t source_dim() const { return nvars_; }
  std::size_t target_dim() const { return comps_.size(); }
  /// Lowest total degree of component i (its order at 0).
  int order(std::size_t i) const { return orders_[i]; }

  void evaluate(const double* x, double* out) const;
  /// Row-major target_dim x source_dim Jacobian.
  void jacobian(const double* x, double* out) const;
  std::vector<double> evaluate(const std::vector<double>& x) const;

 private:
  struct Factor {
    std::size_t var;
    unsigned power;
  };
  struct Term {
    double coefficient;
    std::vector<Factor> factors;
  };
  std::size_t nvars_ = 0;
  std::vector<std::vector<Term>> comps_;
  std::vector<int> orders_;
};

struct Witness {
  std::vector<double> point;
  /// Constraint residual as defined by the producing test.
  double residual = 0;
  double norm = 0;
  std::string label;
};

struct MinNormResult {
  bool found = false;
  Witness witness;
  /// Number of starts that reached the residual tolerance.
  int converged = 0;
};

/// Approximate minimizer of |x|^2 on {G(x) = y}: multistart penalty descent
/// with increasing weights, then a projection onto the fibre. When y is
/// shorter than the target, the remaining components are constraints with
/// value 0. `stream` separates the random substreams of independent calls.
MinNormResult min_norm_fibre_point(const NumericMap& g, const std::vector<double>& y, const NumericConfig& cfg,
                                   std::uint64_t stream = 0);

struct RungStatistic {
  double radius = 0;
  int found = 0;
  /// Test-specific summary (max witness norm, min fibre residual, ...).
  double statistic = 0;
};

/// Witness norms of one target direction across the ladder; negative means
/// no fibre point found.
struct DirectionTrace {
  std::vector<double> direction;
  std::vector<double> norms;
};

struct NumericCertificate {
  std::string test;
  std::string verdict;
  std::string subject;
  std::vector<Witness> witnesses;
  std::vector<RungStatistic> rungs;
  std::vector<DirectionTrace> traces;
  NumericConfig config;
  std::vector<std::string> notes;
};

namespace verdict {
inline constexpr const char* kWellDefined = "well-defined";
inline constexpr const char* kNotWellDefined = "not well-defined";
inline constexpr const char* kInconclusive = "inconclusive";
inline constexpr const char* kRegularPointFound = "regular fibre point found";
inline constexpr const char* kNoneFound = "none found";
inline constexpr const char* kMeetsFibre = "meets fibre away from origin";
inline constexpr const char* kStaysAway = "stays away from fibre";
inline constexpr const char* kNoRealPoints = "no real points";
inline constexpr const char* kDimensionOne = "dimension 1";
inline constexpr const char* kDimensionZero = "dimension 0";
}  // namespace verdict

/// Unit directions in R^d: evenly spaced angles for d = 2, a Halton sequence
/// pushed through the normal quantile otherwise.
std::vector<std::vector<double>> sample_directions(std::size_t d, int count);

/// Decides whether 0 is isolated in the closure of the min-norm set within
/// the central fibre, by following min-norm witnesses along target rays.
NumericCertificate nh_isolation_test(const NumericMap& g, const NumericConfig& cfg,
                                     const std::string& subject = "");
/// The same test for G restricted to a union of sets: each piece is G followed
/// by the equations of one set, and the first target_dim components are G.
NumericCertificate nh_isolation_test(const std::vector<NumericMap>& pieces, std::size_t target_dim,
                                     const NumericConfig& cfg, const std::string& subject = "");

/// Looks for points of G^{-1}(0) on small spheres where the Jacobian has full
/// rank.
NumericCertificate smooth_fibre_point_search(const NumericMap& g, const NumericConfig& cfg,
                                             const std::string& subject = "");

/// Real points of V(ideal) on the spheres of the radius ladder that come
/// close to V(avoid). The statistic per rung is the smallest avoid residual
/// (generators scaled by radius^order) among points of V(ideal).
NumericCertificate real_points_near(const std::vector<Polynomial>& ideal, const std::vector<Polynomial>& avoid,
                                    const Variables& vars, const NumericConfig& cfg,
                                    const std::string& subject = "");

/// Traces the points of a branch with |v u'| = |u v'| on circles |t| = r and
/// pushes them through u * conj(v). Requires ramification = first exponent.
NumericCertificate arc_sampler_fbarg(const PuiseuxBranch& branch, const NumericConfig& cfg);

}  // namespace germ
