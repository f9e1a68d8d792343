// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "germ/cli/report.hpp"
#include "germ/poly/parse.hpp"
#include "properties.hpp"

using namespace germ;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> failed;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failed.push_back(what);
    }
  }
};

GermSpec fixture(const std::string& name) { return load_germ_file(std::string(GERM_CORPUS_DIR) + "/" + name + ".germ"); }

VerdictReport run(const GermSpec& spec, bool auto_numeric, bool numeric = false) {
  AnalyzeOptions opts;
  opts.auto_numeric = auto_numeric;
  opts.numeric = numeric;
  opts.numeric_config = numeric_config(spec);
  opts.stratification = stratification(spec, opts.seed);
  return analyze(spec.germ(), opts);
}

Ideal I(const Variables& v, const std::string& gens) { return Ideal(v, parse_polynomial_list(gens, v)); }

bool verdict_is(const Verdict& v, const char* value, Provenance p) { return v.value == value && v.provenance == p; }

const NumericCertificate* find_cert(const VerdictReport& r, const std::string& subject) {
  for (const auto& c : r.certificates) {
    if (c.subject == subject) return &c;
  }
  return nullptr;
}

bool has_disc(const VerdictReport& r, const Ideal& want) {
  return std::any_of(r.disc.begin(), r.disc.end(), [&](const DiscComponent& c) { return same_ideal(c.image, want); });
}

Check blowup() {
  Check c;
  GermSpec spec = fixture("blowup");
  MapGerm g = spec.germ();
  AnalyzeOptions opts;
  std::vector<NumericCertificate> certs;
  PairImage pair = classify_image_pair(g, opts, certs);
  c.expect(pair.kind == PairCase::Nested, "Z(f) inside Z(g)");
  c.expect(pair.elimination && pair.elimination->is_zero(), "elimination ideal <0>");
  c.expect(verdict_is(pair.image, token::kNo, Provenance::Symbolic), "image not well-defined (symbolic)");
  RealifiedGerm r = realify(g);
  NumericCertificate cert = nh_isolation_test(NumericMap(r.components, r.real_vars), NumericConfig{});
  c.expect(cert.verdict == verdict::kNotWellDefined, "N_h isolation test: " + cert.verdict);
  return c;
}

Check sabbah() {
  Check c;
  GermSpec spec = fixture("sabbah");
  VerdictReport r = run(spec, true);
  const Variables& v = r.germ.source;
  c.expect(verdict_is(r.image_germ, token::kYes, Provenance::Symbolic), "image C^2 (symbolic)");
  c.expect(r.image_germ.germ == "full target C^2", "image germ " + r.image_germ.germ);
  c.expect(dimension(r.germ.fibre_ideal()) == 1, "fibre dimension 1");
  // The Jacobian ideal <x, y^2> cuts out the z-axis <x, y>.
  c.expect(same_ideal(r.sing_ideal, I(v, "x, y^2")), "Sing ideal " + r.sing_ideal.to_string());
  c.expect(radical_membership(parse_polynomial("y", v), r.sing_ideal) && contains(I(v, "x, y"), r.sing_ideal),
           "Sing ideal has radical <x, y>");
  c.expect(r.disc.size() == 1 && same_ideal(r.disc.front().source, I(v, "x, y")), "Sing component = z-axis");
  c.expect(r.disc.size() == 1 && same_ideal(r.disc.front().image, I(r.germ.target_ring(), "u, v")),
           "discriminant <u, v>");
  c.expect(verdict_is(r.tame, token::kNo, Provenance::Empirical), "tame no/empirical, got " + r.tame.value);
  c.expect(r.fibration.tube.is(token::kUnknown) && r.fibration.milnor_hamm.is(token::kUnknown), "fibration unknown");
  return c;
}

Check example_xy_z2() {
  Check c;
  GermSpec spec = fixture("xy_z2");
  MapGerm g = spec.germ();
  const Variables& v = g.source;
  Ideal top = milnor_set_ideal(g, default_stratification(g).strata.front());
  c.expect(same_ideal(top, I(v, "z*(x^2 - y^2)")), "top-stratum Milnor ideal " + top.to_string());
  auto user = stratification(spec);
  c.expect(user && same_ideal(milnor_set_ideal(g, user->strata.front()), I(v, "z*(x^2 - y^2)")),
           "Milnor ideal of the user top stratum");
  VerdictReport r = run(spec, false);
  c.expect(verdict_is(r.tame, token::kYes, Provenance::Symbolic), "tame yes/symbolic, got " + r.tame.value);
  c.expect(r.fibration.tube.is(token::kYes) && r.fibration.milnor_hamm.is(token::kYes), "tube and Milnor-Hamm yes");
  MinNormResult m = min_norm_fibre_point(NumericMap(g.components, v), {1.0, 1.0}, NumericConfig{}, 1);
  c.expect(m.found && std::abs(m.witness.norm - std::sqrt(3.0)) <= 1e-6,
           "min-norm point over (1, 1) has norm " + std::to_string(m.witness.norm));
  return c;
}

Check hansen() {
  Check c;
  GermSpec h3 = fixture("hansen3");
  MapGerm g3 = h3.germ();
  c.expect(milnor_set_ideal(g3, default_stratification(g3).strata.front()).is_zero(), "M(G) = R^3");
  GermSpec h4 = fixture("hansen4");
  MapGerm g4 = h4.germ();
  const Variables& v = g4.source;
  Ideal m4 = strip_positive_factors(canonical(milnor_set_ideal(g4, default_stratification(g4).strata.front())));
  Ideal want = intersect(I(v, "2*u*(1 + u) + 2*v^2 - x^2 - y^2"), I(v, "x, y"));
  c.expect(same_ideal(m4, want), "M(F) = {u(1+u) + v^2 = (x^2+y^2)/2} u {x = y = 0}, got " + m4.to_string());
  for (const auto* spec : {&h3, &h4}) {
    VerdictReport r = run(*spec, true);
    c.expect(r.tame.is(token::kNo), spec->name + " tame " + r.tame.value);
    c.expect(verdict_is(r.image_germ, token::kNo, Provenance::Empirical), spec->name + " image " + r.image_germ.value);
  }
  return c;
}

Check example_icis_fbarg() {
  Check c;
  VerdictReport r = run(fixture("icis_fbarg"), false);
  const Variables t = r.germ.target_ring();
  c.expect(verdict_is(r.icis, token::kYes, Provenance::Symbolic), "ICIS yes");
  c.expect(r.disc.size() == 2 && has_disc(r, I(t, "v")) && has_disc(r, I(t, "v + 4*u")), "Disc {<v>, <v + 4u>}");
  c.expect(r.singular_values_dim && verdict_is(*r.singular_values_dim, "1", Provenance::Symbolic),
           "singular values of dimension 1");
  bool line = std::any_of(r.disc.begin(), r.disc.end(), [](const DiscComponent& d) {
    return std::find(d.tangents.begin(), d.tangents.end(), "v = -4*u") != d.tangents.end();
  });
  c.expect(line, "tangent line v = -4u");
  c.expect(verdict_is(r.fibration.thom_regular_sufficient, token::kYes, Provenance::Symbolic), "Thom regular");
  c.expect(r.fibration.tube.is(token::kYes) && r.fibration.milnor_hamm.is(token::kYes), "tube and Milnor-Hamm yes");
  return c;
}

Check example_unit_fbarg() {
  Check c;
  VerdictReport r = run(fixture("unit_fbarg"), false, true);
  const Variables& v = r.germ.source;
  c.expect(r.unit_multiple && verdict_is(*r.unit_multiple, token::kYes, Provenance::Symbolic), "unit multiple");
  c.expect(r.unit_multiple && parse_polynomial(r.unit_multiple->germ, v, true) == parse_polynomial("1 + w", v, true),
           "unit 1 + w");
  c.expect(r.nmg.is(token::kNo), "not a nice map germ");
  c.expect(r.singular_values_dim && r.singular_values_dim->is("0"), "critical values of dimension 0");
  c.expect(std::all_of(r.disc.begin(), r.disc.end(), [](const DiscComponent& d) { return d.point; }),
           "critical values are the origin");
  c.expect(std::none_of(r.certificates.begin(), r.certificates.end(),
                        [](const NumericCertificate& x) { return x.test == "arc_sampler"; }),
           "no arcs to sample");
  return c;
}

Check property_suites(long& total) {
  Check c;
  std::vector<testing::PropertyTally> suites = {
      testing::groebner_s_pair_suite(2024, 1000),
      testing::leibniz_suite(42, 4000),
      testing::elimination_probe_suite(99, 100, 25),
      testing::puiseux_residual_suite(19, 6000),
      testing::saturation_suite(8, 600),
      testing::numeric_determinism_suite(61, 300),
      testing::linear_change_suite(GERM_CORPUS_DIR),
  };
  total = 0;
  for (const auto& s : suites) {
    std::printf("    %-48s %6ld cases, %ld failures\n", s.name.c_str(), s.cases, s.failures);
    total += s.cases;
    c.expect(s.failures == 0, s.name + ": " + s.first_failure);
  }
  c.expect(total >= 10000, "only " + std::to_string(total) + " randomized cases");
  return c;
}

Check remark_p3() {
  Check c;
  VerdictReport r = run(fixture("remark_p3"), true);
  c.expect(std::any_of(r.warnings.begin(), r.warnings.end(),
                       [](const std::string& w) { return w.find("does not apply") != std::string::npos; }),
           "classification declared inapplicable");
  for (const Verdict* v : {&r.image_germ, &r.sing_image_germ, &r.nmg}) {
    c.expect(!verdict_is(*v, token::kYes, Provenance::Symbolic), "no symbolic well-definedness claim");
  }
  const NumericCertificate* z = find_cert(r, "G restricted to <z>");
  c.expect(z != nullptr && z->verdict == verdict::kNotWellDefined, "image of {z = 0} flagged not well-defined");
  if (z != nullptr && !z->traces.empty()) {
    // Over the plane z = 0 the witness for (a, b, 0) scaled by eta has norm
    // about |a/b|: bounded away from 0 and varying with the direction.
    double lo = INFINITY;
    double hi = 0;
    for (const auto& t : z->traces) {
      lo = std::min(lo, t.norms.back());
      hi = std::max(hi, t.norms.back());
    }
    c.expect(lo > 10 * z->config.target_ladder.back() && hi > 2 * lo,
             "limit witness norms depend on the direction (" + std::to_string(lo) + " .. " + std::to_string(hi) + ")");
  } else {
    c.expect(false, "direction traces recorded");
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<Check()> body;
  };
  long cases = 0;
  std::vector<Criterion> criteria = {
      {1, "blow-up (x, xy): image not well-defined", 5, blowup},
      {2, "Sabbah (x^2 - y^2 z, y): image, Sing, Disc, tameness, fibration", 0, sabbah},
      {3, "(xy, z^2): Milnor ideal, tameness, fibrations, min-norm sqrt 3", 10, example_xy_z2},
      {4, "Hansen maps in 3 and 4 variables", 0, hansen},
      {5, "(xy + x^2, y^2): ICIS, Disc, critical values, fibrations", 10, example_icis_fbarg},
      {6, "z(1 + w) conj(z): unit multiple, not NMG, critical values {0}", 0, example_unit_fbarg},
      {7, "randomized property suites", 0, [&] { return property_suites(cases); }},
      {8, "(xy, y, z^2): classification inapplicable, direction-dependent N_h", 0, remark_p3},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.body();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0) {
      c.expect(seconds < cr.limit_seconds, "runtime " + std::to_string(seconds) + " s over the limit");
    }
    std::string extra = cr.number == 7 ? ", " + std::to_string(cases) + " cases" : "";
    std::printf("criterion %d: %s  %s (%.2f s%s)\n", cr.number, c.ok ? "PASS" : "FAIL", cr.title.c_str(), seconds,
                extra.c_str());
    for (const auto& f : c.failed) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
