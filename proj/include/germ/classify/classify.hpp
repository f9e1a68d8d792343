#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germ/loci/critical.hpp"
#include "germ/numeric/numeric.hpp"
#include "germ/puiseux/puiseux.hpp"

namespace germ {

namespace token {
inline constexpr const char* kYes = "yes";
inline constexpr const char* kNo = "no";
inline constexpr const char* kIndeterminate = "indeterminate";
inline constexpr const char* kUnknown = "unknown";
}  // namespace token

enum class Provenance { Symbolic, Empirical, Indeterminate };
std::string to_string(Provenance p);

struct Verdict {
  std::string value = token::kIndeterminate;
  Provenance provenance = Provenance::Indeterminate;
  /// The statement the verdict rests on, in words.
  std::string citation;
  std::string detail;
  /// For image verdicts: "full target C^2", "curve <h>", "point", ...
  std::string germ;

  static Verdict symbolic(std::string value, std::string citation, std::string detail = "");
  static Verdict empirical(std::string value, std::string citation, std::string detail = "");
  static Verdict undecided(std::string detail = "");
  bool is(const char* v) const { return value == v; }
  bool decided() const { return value == token::kYes || value == token::kNo; }
};

/// One component of G(Sing G), as an ideal in the target variables.
struct DiscComponent {
  /// Component of the singular locus it comes from.
  Ideal source;
  Ideal image;
  bool point = false;
  /// Set when the singular locus could not be split by factorization.
  bool unsplit = false;
  /// Tangent classes of plane curve components.
  std::vector<std::string> tangents;
  /// Expansion of plane curve components (empty otherwise).
  std::optional<PuiseuxExpansion> expansion;
};

struct FibrationVerdicts {
  Verdict tube;
  Verdict milnor_hamm;
  Verdict thom_regular_sufficient;
};

struct VerdictReport {
  MapGerm germ;
  Verdict image_germ;
  Verdict sing_image_germ;
  Verdict nmg;
  Verdict tame;
  Verdict icis;
  FibrationVerdicts fibration;
  Ideal sing_ideal;
  std::vector<DiscComponent> disc;
  std::string disc_description;
  /// f conj(g) only.
  std::optional<Verdict> unit_multiple;
  std::optional<Verdict> singular_values_dim;
  std::string stratification;
  std::vector<NumericCertificate> certificates;
  bool numeric_ran = false;
  NumericConfig numeric_config;
  std::vector<std::string> notes;
  std::vector<std::string> warnings;
};

struct AnalyzeOptions {
  /// Run every numeric stage.
  bool numeric = false;
  /// Run numeric stages only where the symbolic verdict is indeterminate.
  bool auto_numeric = false;
  NumericConfig numeric_config;
  int puiseux_depth = kDefaultPuiseuxDepth;
  /// User stratification: complex source variables for complex germs,
  /// realified variables for f conj(g), source variables otherwise.
  std::optional<Stratification> stratification;
  std::uint64_t seed = 1;

  bool run_numeric(bool decided) const { return numeric || (!decided && auto_numeric); }
};

/// Complex germs: a fibre of dimension n - p gives the full target; an
/// isolated singularity of that fibre gives an ICIS.
struct IcisResult {
  bool applicable = false;
  Verdict image;
  Verdict icis;
};
IcisResult icis_verdict(const MapGerm& g);

/// Whether f = u g for a unit u of the local ring at 0. f and g are reduced
/// by their gcd: f = d a, g = d b, and f / g = a / b is a unit iff a(0) and
/// b(0) are both nonzero. The detail carries u.
Verdict unit_multiple_check(const Polynomial& f, const Polynomial& g);

enum class PairCase { CommonCodimTwo, Nested, NotNested };
std::string to_string(PairCase c);

struct PairImage {
  PairCase kind = PairCase::CommonCodimTwo;
  Verdict image;
  /// Elimination ideal of the graph, for nested zero sets.
  std::optional<Ideal> elimination;
  std::optional<BranchCount> branches;
};
/// Classification of Im(f, g) for a complex pair (kind pair, or a complex
/// germ with two components). Non-nested zero sets are decided only by the
/// numeric stage, appended to certs when allowed.
PairImage classify_image_pair(const MapGerm& g, const AnalyzeOptions& opts, std::vector<NumericCertificate>& certs);

/// Images of the components of Sing G. For f conj(g) this is the
/// discriminant of the pair (f, g).
std::vector<DiscComponent> discriminant(const MapGerm& g, int puiseux_depth = kDefaultPuiseuxDepth);

/// Dimension (0 or 1) of the critical values of f conj(g) from the tangents
/// of the discriminant components of (f, g). With numeric stages allowed,
/// every branch tangent to a line off the axes is sampled by the arc sampler.
Verdict singular_values_dim_fbarg(const std::vector<DiscComponent>& disc, const AnalyzeOptions& opts,
                                  std::vector<NumericCertificate>& certs);

/// Image verdicts for a real germ from a regular point of the central fibre
/// and the isolated-singularity criterion.
struct OpenImage {
  Verdict image;
  Verdict nmg;
};
OpenImage open_image_verdict(const MapGerm& real, const AnalyzeOptions& opts, std::vector<NumericCertificate>& certs);

/// Tameness of a real germ: per stratum, K = sat(M + closure, fibre) + fibre.
/// All K of dimension <= 0 is a symbolic yes; otherwise real points of the
/// saturated sets near the fibre are sampled.
Verdict tame_verdict(const MapGerm& real, const Stratification& strata, const AnalyzeOptions& opts,
                     std::vector<NumericCertificate>& certs);

/// Tube and Milnor-Hamm verdicts from the tame and Thom fields.
void fibration_verdict(VerdictReport& report);

/// Restriction of G to V(ideal) as extra components with target 0, for the
/// min-norm sampler. Works in the variables of G.
NumericMap restricted_map(const std::vector<Polynomial>& components, const Ideal& ideal);

VerdictReport analyze(const MapGerm& g, const AnalyzeOptions& opts = {});

/// Violations of the report invariants (empty when consistent).
std::vector<std::string> check_invariants(const VerdictReport& report);

}  // namespace germ
