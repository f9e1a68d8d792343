#include <algorithm>

#include "germ/classify/classify.hpp"
#include "internal.hpp"

namespace germ {

namespace {

const char* kTameCite = "tame germs are nice map germs and Disc G is the closure of G(Sing G)";
const char* kIsolationCite = "the image is a germ iff 0 is isolated in the closure of the min-norm set";
const char* kPairSingCite = "the image of the singular locus of a pair is an analytic germ";

Verdict as_yes(const Verdict& cause, const std::string& citation, const std::string& detail) {
  Verdict v = cause;
  v.value = token::kYes;
  v.citation = citation;
  v.detail = detail;
  v.germ.clear();
  return v;
}

// Fills both image fields from a decided nmg = yes.
void nmg_fills_parts(VerdictReport& r) {
  if (!r.nmg.is(token::kYes)) return;
  if (!r.image_germ.decided()) r.image_germ = as_yes(r.nmg, r.nmg.citation, "part of a nice map germ");
  if (!r.sing_image_germ.decided()) r.sing_image_germ = as_yes(r.nmg, r.nmg.citation, "part of a nice map germ");
}

void settle_nmg(VerdictReport& r) {
  nmg_fills_parts(r);
  if (r.nmg.decided()) return;
  const char* cite = "nice map germ: image and image of Sing are both germs";
  const Verdict& a = r.image_germ;
  const Verdict& b = r.sing_image_germ;
  if (a.is(token::kNo) || b.is(token::kNo)) {
    const Verdict& cause = a.is(token::kNo) ? a : b;
    r.nmg = cause;
    r.nmg.citation = cite;
    r.nmg.detail = a.is(token::kNo) ? "image is not a germ" : "image of Sing is not a germ";
    r.nmg.germ.clear();
  } else if (a.is(token::kYes) && b.is(token::kYes)) {
    bool symbolic = a.provenance == Provenance::Symbolic && b.provenance == Provenance::Symbolic;
    r.nmg = symbolic ? Verdict::symbolic(token::kYes, cite) : Verdict::empirical(token::kYes, cite);
  }
}

std::string component_string(const DiscComponent& c) {
  std::string s = c.image.to_string();
  if (c.point) s += " (point)";
  if (!c.tangents.empty()) s += " [" + detail::join(c.tangents, "; ") + "]";
  if (c.unsplit) s += " {components unsplit}";
  return s;
}

// Restriction of G to each non-point Sing component; target components that
// vanish on the component are dropped so that directions stay in its span.
Verdict sing_image_numeric(const MapGerm& g, const std::vector<DiscComponent>& disc, const AnalyzeOptions& opts,
                           std::vector<NumericCertificate>& certs) {
  bool any_no = false;
  bool all_yes = true;
  std::vector<std::string> details;
  std::optional<RealifiedGerm> r;
  if (g.field == Field::Complex) r = realify(g);
  for (const auto& c : disc) {
    if (c.point) continue;
    std::vector<Polynomial> kept;
    for (const auto& comp : g.components) {
      if (!radical_membership(comp, c.source)) kept.push_back(comp);
    }
    if (kept.empty()) continue;
    std::vector<Polynomial> real_comps;
    Ideal constraints;
    if (r) {
      for (const auto& k : kept) {
        auto [re, im] = r->split(k);
        real_comps.push_back(re);
        real_comps.push_back(im);
      }
      constraints = canonical(r->realify(c.source));
    } else {
      real_comps = kept;
      constraints = c.source;
    }
    NumericCertificate cert = nh_isolation_test({restricted_map(real_comps, constraints)}, real_comps.size(),
                                                opts.numeric_config, "G restricted to " + c.source.to_string());
    certs.push_back(cert);
    details.push_back(c.source.to_string() + ": " + cert.verdict);
    if (cert.verdict == verdict::kNotWellDefined) any_no = true;
    if (cert.verdict != verdict::kWellDefined) all_yes = false;
  }
  if (any_no) return Verdict::empirical(token::kNo, kIsolationCite, detail::join(details, "; "));
  if (all_yes && !details.empty()) return Verdict::empirical(token::kYes, kIsolationCite, detail::join(details, "; "));
  return Verdict::undecided(details.empty() ? "no component to test" : detail::join(details, "; "));
}

NumericMap metric_map(const MapGerm& g) {
  MapGerm m = metric_germ(g);
  return NumericMap(m.components, m.source);
}

Stratification metric_stratification(const MapGerm& g, const AnalyzeOptions& opts) {
  if (g.field == Field::Real || g.kind == GermKind::Fbarg) {
    return opts.stratification ? *opts.stratification : default_stratification(g, opts.seed);
  }
  RealifiedGerm r = realify(g);
  Stratification complex = opts.stratification ? *opts.stratification : default_stratification(g, opts.seed);
  return realify(complex, r, opts.seed);
}

void run_tame(VerdictReport& rep, const MapGerm& g, const AnalyzeOptions& opts) {
  MapGerm metric = metric_germ(g);
  Stratification strat;
  try {
    strat = metric_stratification(g, opts);
  } catch (const StratificationIndeterminate& e) {
    rep.warnings.push_back(e.what());
    rep.tame = Verdict::undecided(e.what());
    return;
  }
  rep.stratification = to_string(strat.provenance);
  for (const auto& n : strat.notes) rep.notes.push_back("stratification: " + n);
  rep.tame = tame_verdict(metric, strat, opts, rep.certificates);
}

void apply_tame(VerdictReport& rep) {
  if (!rep.tame.is(token::kYes)) return;
  rep.nmg = as_yes(rep.tame, kTameCite, "tame");
  nmg_fills_parts(rep);
}

void analyze_fbarg(VerdictReport& rep, const MapGerm& g, const AnalyzeOptions& opts) {
  if (g.source_dim() < 2) rep.warnings.push_back("f conj(g) results need at least two source variables");
  MapGerm pair = detail::pair_of(g);
  IcisResult icis = icis_verdict(pair);
  rep.icis = icis.icis;
  Verdict unit = unit_multiple_check(g.components[0], g.components[1]);
  rep.unit_multiple = unit;
  rep.sing_image_germ = Verdict::symbolic(token::kYes, "critical values of f conj(g) form a semi-analytic germ");
  if (unit.is(token::kNo)) {
    rep.image_germ = Verdict::symbolic(token::kYes, "f conj(g) with f not a unit multiple of g is nice onto C");
    rep.image_germ.germ = "full target C";
    rep.nmg = Verdict::symbolic(token::kYes, "f conj(g) with f not a unit multiple of g is nice onto C");
  } else if (unit.is(token::kYes)) {
    PairImage pi = classify_image_pair(pair, opts, rep.certificates);
    const char* cite = "f = u g: f conj(g) is nice iff Im(f, g) is a curve";
    if (pi.image.is(token::kYes)) {
      rep.nmg = pi.image;
      rep.nmg.citation = cite;
      rep.nmg.detail = "Im(f, g) is " + pi.image.germ;
      rep.nmg.germ.clear();
    } else if (pi.image.is(token::kNo)) {
      rep.nmg = pi.image;
      rep.nmg.citation = cite;
      rep.nmg.detail = "Im(f, g) is not a curve: " + pi.image.detail;
      rep.image_germ = rep.nmg;
      rep.image_germ.detail = "image of f conj(g) is not a germ";
    } else {
      rep.nmg = Verdict::undecided("Im(f, g) undecided: " + pi.image.detail);
    }
  } else {
    rep.nmg = Verdict::undecided("unit multiple check undecided");
  }
  if (icis.icis.is(token::kYes)) {
    rep.fibration.thom_regular_sufficient =
        Verdict::symbolic(token::kYes, "an ICIS pair makes f conj(g) Thom regular", "pair (f, g) is an ICIS");
    rep.tame = Verdict::symbolic(token::kYes, "Thom regular at a positive-dimensional central fibre gives tame",
                                 "pair (f, g) is an ICIS");
    if (rep.nmg.is(token::kNo)) rep.warnings.push_back("Thom regularity contradicts nmg = no");
  } else {
    run_tame(rep, g, opts);
  }
  apply_tame(rep);
  rep.singular_values_dim = singular_values_dim_fbarg(rep.disc, opts, rep.certificates);
}

void analyze_complex(VerdictReport& rep, const MapGerm& g, const AnalyzeOptions& opts) {
  const std::size_t p = g.components.size();
  IcisResult icis = icis_verdict(g);
  rep.icis = icis.icis;
  if (icis.applicable) rep.image_germ = icis.image;
  if (p == 2) {
    PairImage pi = classify_image_pair(g, opts, rep.certificates);
    rep.notes.push_back("pair case: " + to_string(pi.kind));
    if (icis.applicable && !pi.image.is(token::kYes)) {
      rep.warnings.push_back("fibre dimension and pair classification disagree");
    }
    if (!rep.image_germ.decided() || pi.kind == PairCase::CommonCodimTwo) rep.image_germ = pi.image;
    rep.sing_image_germ = Verdict::symbolic(token::kYes, kPairSingCite);
  } else if (p >= 3) {
    rep.warnings.push_back("classification of images of pairs does not apply to targets of dimension >= 3");
  }
  if (icis.icis.is(token::kYes)) {
    rep.nmg = Verdict::symbolic(token::kYes, "an isolated complete intersection singularity is a nice map germ",
                                "Sing meets the central fibre only at 0");
  }
  if (p >= 3) {
    rep.tame = Verdict::undecided("not run for targets of dimension >= 3");
  } else {
    run_tame(rep, g, opts);
    apply_tame(rep);
  }
}

void analyze_real(VerdictReport& rep, const MapGerm& g, const AnalyzeOptions& opts) {
  rep.icis = Verdict{token::kUnknown, Provenance::Indeterminate, "", "defined for complex germs", ""};
  run_tame(rep, g, opts);
  apply_tame(rep);
  AnalyzeOptions open_opts = opts;
  if (rep.image_germ.decided()) open_opts.auto_numeric = false;
  OpenImage open = open_image_verdict(g, open_opts, rep.certificates);
  if (!rep.image_germ.decided()) {
    rep.image_germ = open.image;
  } else if (open.image.is(token::kNo)) {
    rep.warnings.push_back("open image check contradicts the image verdict");
  }
  if (!rep.nmg.decided() && open.nmg.is(token::kYes)) rep.nmg = open.nmg;
}

std::string describe_disc(const VerdictReport& rep) {
  std::vector<std::string> parts;
  for (const auto& c : rep.disc) parts.push_back(component_string(c));
  std::string s = parts.empty() ? "empty" : detail::join(parts, ", ");
  if (rep.tame.is(token::kYes)) s = "closure of G(Sing G): " + s;
  if (rep.icis.is(token::kYes)) s += "; hypersurface (purity)";
  return s;
}

}  // namespace

void fibration_verdict(VerdictReport& r) {
  auto& fib = r.fibration;
  const Verdict unknown{token::kUnknown, Provenance::Indeterminate, "", "", ""};
  if (!fib.thom_regular_sufficient.is(token::kYes)) {
    fib.thom_regular_sufficient = unknown;
    fib.thom_regular_sufficient.detail = "no Thom regularity criterion applies";
  }
  if (r.tame.is(token::kYes) || fib.thom_regular_sufficient.is(token::kYes)) {
    const Verdict& cause = r.tame.is(token::kYes) ? r.tame : fib.thom_regular_sufficient;
    fib.tube = as_yes(cause, "tame germs have a singular Milnor tube fibration",
                      r.tame.is(token::kYes) ? "tame" : "Thom regular");
    fib.milnor_hamm = as_yes(cause, "tame germs have a Milnor-Hamm fibration off Disc G",
                             "nonsingular fibre over each component off Disc G");
    return;
  }
  fib.tube = unknown;
  fib.milnor_hamm = unknown;
  const std::string why = r.tame.is(token::kNo)
                              ? "not tame; a tube fibration may exist without Thom regularity"
                              : "tameness undecided; tameness is sufficient, not necessary";
  fib.tube.detail = why;
  fib.milnor_hamm.detail = why;
}

VerdictReport analyze(const MapGerm& g, const AnalyzeOptions& opts) {
  opts.numeric_config.validate();
  VerdictReport rep;
  rep.germ = g;
  rep.numeric_config = opts.numeric_config;
  rep.stratification = "none";
  bool disc_known = false;
  // Homogeneous ideals only have cones through 0 as components, so their
  // global dimension is the germ dimension.
  const auto& comps = g.components;
  if (!std::all_of(comps.begin(), comps.end(), [](const Polynomial& c) { return c.is_homogeneous(); })) {
    rep.notes.push_back("dimension computed globally; local agreement unverified");
  }
  try {
    rep.sing_ideal = canonical(singular_locus(g));
    rep.disc = discriminant(g, opts.puiseux_depth);
    disc_known = true;
  } catch (const BudgetExceeded& e) {
    rep.warnings.push_back(std::string("discriminant: pair budget exceeded: ") + e.what());
  }
  try {
    if (g.kind == GermKind::Fbarg) {
      analyze_fbarg(rep, g, opts);
    } else if (g.field == Field::Complex) {
      analyze_complex(rep, g, opts);
    } else {
      analyze_real(rep, g, opts);
    }
  } catch (const BudgetExceeded& e) {
    rep.warnings.push_back(std::string("pair budget exceeded: ") + e.what());
  }

  // The image of Sing is the origin when every component maps to it.
  if (!rep.sing_image_germ.decided() && disc_known && !rep.disc.empty() &&
      std::all_of(rep.disc.begin(), rep.disc.end(), [](const DiscComponent& c) { return c.point; })) {
    rep.sing_image_germ = Verdict::symbolic(token::kYes, "every Sing component maps to the origin");
    rep.sing_image_germ.germ = "point";
  }
  if (!rep.sing_image_germ.decided() && disc_known && rep.disc.empty()) {
    rep.sing_image_germ = Verdict::symbolic(token::kYes, "Sing misses the origin, its image germ is empty");
  }

  // Numeric stages: wherever undecided (auto), or everywhere as a cross-check.
  try {
    const bool image_decided = rep.image_germ.decided();
    if (opts.run_numeric(image_decided)) {
      NumericCertificate cert =
          nh_isolation_test(metric_map(g), opts.numeric_config, "image of " + g.name);
      rep.certificates.push_back(cert);
      Verdict v = Verdict::undecided("isolation test inconclusive");
      if (cert.verdict == verdict::kWellDefined) {
        v = Verdict::empirical(token::kYes, kIsolationCite, "min-norm fibre points shrink to 0");
      } else if (cert.verdict == verdict::kNotWellDefined) {
        v = Verdict::empirical(token::kNo, kIsolationCite, "min-norm fibre points stay away from 0");
      }
      if (!image_decided) {
        rep.image_germ = v;
      } else if (v.decided() && v.value != rep.image_germ.value) {
        rep.warnings.push_back("isolation test (" + cert.verdict + ") contradicts the " +
                               to_string(rep.image_germ.provenance) + " image verdict");
      }
    }
    if (!rep.sing_image_germ.decided() && opts.run_numeric(false)) {
      rep.sing_image_germ = sing_image_numeric(g, rep.disc, opts, rep.certificates);
    }
  } catch (const BudgetExceeded& e) {
    rep.warnings.push_back(std::string("numeric stage: pair budget exceeded: ") + e.what());
  }

  settle_nmg(rep);
  fibration_verdict(rep);
  rep.disc_description = describe_disc(rep);
  rep.numeric_ran = !rep.certificates.empty();
  return rep;
}

std::vector<std::string> check_invariants(const VerdictReport& r) {
  std::vector<std::string> out;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  };
  check(!r.nmg.is(token::kYes) || (r.image_germ.is(token::kYes) && r.sing_image_germ.is(token::kYes)),
        "nmg = yes needs both image germs well-defined");
  check(!(r.image_germ.is(token::kYes) && r.sing_image_germ.is(token::kYes)) || r.nmg.is(token::kYes),
        "both image germs well-defined needs nmg = yes");
  check(!r.nmg.is(token::kNo) || r.image_germ.is(token::kNo) || r.sing_image_germ.is(token::kNo),
        "nmg = no needs an image germ that is not well-defined");
  check(!r.tame.is(token::kYes) || r.nmg.is(token::kYes), "tame = yes needs nmg = yes");
  check(!r.tame.is(token::kYes) || r.disc_description.rfind("closure of G(Sing G)", 0) == 0,
        "tame = yes needs Disc G described as the closure of G(Sing G)");
  check(!r.fibration.tube.is(token::kYes) || r.tame.is(token::kYes) ||
            r.fibration.thom_regular_sufficient.is(token::kYes),
        "tube = yes needs tame or Thom regularity");
  check(!r.fibration.milnor_hamm.is(token::kYes) || r.fibration.tube.is(token::kYes),
        "Milnor-Hamm = yes needs tube = yes");
  check(!r.fibration.thom_regular_sufficient.is(token::kYes) || r.tame.is(token::kYes),
        "Thom regularity needs tame = yes");
  for (const auto* v : {&r.image_germ, &r.sing_image_germ, &r.nmg, &r.tame, &r.icis, &r.fibration.tube,
                        &r.fibration.milnor_hamm, &r.fibration.thom_regular_sufficient}) {
    if (v->provenance == Provenance::Symbolic) check(v->decided(), "symbolic verdict without a yes/no value");
    if (v->provenance == Provenance::Indeterminate) check(!v->decided(), "decided verdict without provenance");
  }
  check(r.singular_values_dim.has_value() == (r.germ.kind == GermKind::Fbarg),
        "singular values dimension is reported for f conj(g) only");
  return out;
}

}  // namespace germ
