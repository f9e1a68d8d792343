#include <algorithm>
#include <random>

#include "germ/classify/classify.hpp"
#include "internal.hpp"

namespace germ {

NumericMap restricted_map(const std::vector<Polynomial>& components, const Ideal& ideal) {
  std::vector<Polynomial> all = components;
  for (const auto& g : ideal.generators()) all.push_back(g);
  return NumericMap(all, components.front().variables());
}

namespace {

std::size_t exact_rank_at(const std::vector<Polynomial>& comps, const std::vector<Scalar>& pt) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& c : comps) {
    std::vector<Scalar> row;
    for (std::size_t v = 0; v < c.variables().size(); ++v) row.push_back(evaluate(differentiate(c, v), pt));
    rows.push_back(std::move(row));
  }
  return matrix_rank(rows);
}

std::string point_string(const std::vector<Scalar>& pt) {
  std::vector<std::string> parts;
  for (const auto& s : pt) parts.push_back(s.str());
  return "(" + detail::join(parts, ", ") + ")";
}

// A nonzero exact real point of the fibre where the Jacobian has rank p.
// Fibre components inside Sing are saturated away first, so the sampler
// does not keep landing on them.
std::optional<std::vector<Scalar>> regular_fibre_point(const std::vector<Polynomial>& comps, const Ideal& fibre,
                                                       const Ideal& sing, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Ideal search = fibre;
  try {
    search = saturate(fibre, sing);
  } catch (const BudgetExceeded&) {
  }
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto pt = sample_point(search, {sing}, rng, false);
    if (!pt) continue;
    bool nonzero = std::any_of(pt->begin(), pt->end(), [](const Scalar& s) { return !s.is_zero(); });
    if (nonzero && exact_rank_at(comps, *pt) == comps.size()) return pt;
  }
  return std::nullopt;
}

}  // namespace

OpenImage open_image_verdict(const MapGerm& real, const AnalyzeOptions& opts, std::vector<NumericCertificate>& certs) {
  if (real.field != Field::Real) throw Error("open_image_verdict needs a real germ; realify first");
  OpenImage out;
  const auto& comps = real.components;
  const std::size_t p = comps.size();
  const std::string full = "full target R^" + std::to_string(p);
  const char* open_cite = "a regular point of the central fibre makes the image open";
  const char* nice_cite = "Sing meeting a positive-dimensional central fibre only at 0 gives a nice map germ";
  out.image = Verdict::undecided();
  out.nmg = Verdict::undecided();
  try {
    Ideal fibre = real.fibre_ideal();
    Ideal sing = singular_locus(real);
    if (sing.is_zero()) {
      out.image = Verdict::undecided("the Jacobian never has rank p; regular-point criterion inapplicable");
      return out;
    }
    const bool fibre_in_sing = std::all_of(sing.generators().begin(), sing.generators().end(),
                                           [&](const Polynomial& s) { return radical_membership(s, fibre); });
    if (fibre_in_sing) {
      out.image = Verdict::undecided("central fibre lies in Sing; regular-point criterion inapplicable");
      return out;
    }
    const std::vector<Scalar> origin(real.source_dim(), Scalar(0));
    if (exact_rank_at(comps, origin) == p) {
      out.image = Verdict::symbolic(token::kYes, open_cite, "G is a submersion at the origin");
      out.image.germ = full;
      return out;
    }
    const bool isolated = dimension(sing + fibre) <= 0;
    const bool homogeneous =
        std::all_of(comps.begin(), comps.end(), [](const Polynomial& c) { return c.is_homogeneous(); });
    if (homogeneous) {
      if (auto pt = regular_fibre_point(comps, fibre, sing, opts.seed)) {
        std::string where = "regular fibre point " + point_string(*pt) + " and its ray (homogeneous components)";
        out.image = Verdict::symbolic(token::kYes, open_cite, where);
        out.image.germ = full;
        if (isolated) out.nmg = Verdict::symbolic(token::kYes, nice_cite, where);
        return out;
      }
    }
    if (!opts.run_numeric(false)) {
      out.image = Verdict::undecided("no exact regular fibre point; numeric stage not run");
      return out;
    }
    NumericCertificate cert = smooth_fibre_point_search(NumericMap(comps, real.source), opts.numeric_config,
                                                        "central fibre of " + real.name);
    certs.push_back(cert);
    if (cert.verdict == verdict::kRegularPointFound) {
      out.image = Verdict::empirical(token::kYes, open_cite, "regular fibre points on every sphere of the ladder");
      out.image.germ = full;
      if (isolated) out.nmg = Verdict::empirical(token::kYes, nice_cite, out.image.detail);
    } else {
      out.image = Verdict::undecided("smooth fibre point search: " + cert.verdict);
    }
  } catch (const BudgetExceeded& e) {
    out.image = Verdict::undecided(std::string("pair budget exceeded: ") + e.what());
  }
  return out;
}

Verdict tame_verdict(const MapGerm& real, const Stratification& strata, const AnalyzeOptions& opts,
                     std::vector<NumericCertificate>& certs) {
  if (real.field != Field::Real) throw Error("tame_verdict needs a real germ; realify first");
  const std::size_t m = real.source_dim();
  const std::size_t p = real.components.size();
  const char* cite = "closure of M(G) off the central fibre meets it only at 0";
  if (!(m > p && p > 1)) {
    return Verdict::undecided("tameness is defined for m > p > 1 (m = " + std::to_string(m) +
                              ", p = " + std::to_string(p) + ")");
  }
  const Ideal fibre = canonical(real_zero_set_reduction(real.fibre_ideal(), Field::Real));
  struct Pending {
    const Stratum* stratum;
    Ideal saturated;
    bool budget;
  };
  std::vector<Pending> open;
  std::vector<std::string> details;
  for (const auto& s : strata.strata) {
    Ideal milnor = milnor_set_ideal(real.components, s) + s.closure;
    try {
      Ideal sat = milnor;
      for (const auto& e : s.excluded) sat = saturate(sat, e);
      sat = saturate(sat, fibre);
      int k = dimension(sat + fibre);
      if (k <= 0) {
        details.push_back(s.label + ": K of dimension " + std::to_string(k));
        continue;
      }
      details.push_back(s.label + ": K of dimension " + std::to_string(k));
      open.push_back({&s, canonical(sat), false});
    } catch (const BudgetExceeded&) {
      details.push_back(s.label + ": pair budget exceeded");
      open.push_back({&s, milnor, true});
    }
  }
  if (open.empty()) return Verdict::symbolic(token::kYes, cite, detail::join(details, "; "));
  if (!opts.run_numeric(false)) {
    return Verdict::undecided("positive-dimensional K, numeric stage not run: " + detail::join(details, "; "));
  }
  bool meets = false;
  bool all_away = true;
  for (const auto& o : open) {
    NumericCertificate cert = real_points_near(o.saturated.generators(), fibre.generators(), real.source,
                                               opts.numeric_config, "Milnor set of " + o.stratum->label);
    if (o.budget) cert.notes.push_back("unsaturated Milnor ideal (pair budget exceeded)");
    certs.push_back(cert);
    details.push_back(o.stratum->label + ": " + cert.verdict);
    if (cert.verdict == verdict::kMeetsFibre) meets = true;
    if (cert.verdict != verdict::kStaysAway && cert.verdict != verdict::kNoRealPoints) all_away = false;
  }
  if (meets) return Verdict::empirical(token::kNo, cite, detail::join(details, "; "));
  if (all_away) {
    Verdict v = Verdict::empirical(token::kIndeterminate, cite, "leaning tame; " + detail::join(details, "; "));
    return v;
  }
  return Verdict::undecided(detail::join(details, "; "));
}

}  // namespace germ
