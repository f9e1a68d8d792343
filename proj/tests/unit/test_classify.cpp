#include <algorithm>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "germ/classify/classify.hpp"
#include "germ/cli/report.hpp"
#include "germ/poly/parse.hpp"
#include "properties.hpp"
#include "random_poly.hpp"

using namespace germ;

namespace {

MapGerm germ_of(const std::string& name, Field field, GermKind kind, const std::vector<std::string>& vars,
                const std::string& map, const std::vector<std::string>& real_names = {}) {
  Variables v(vars);
  return MapGerm::make(name, field, kind, v, parse_polynomial_list(map, v, field == Field::Complex), {},
                       real_names);
}

Ideal I(const Variables& v, const std::string& gens) { return Ideal(v, parse_polynomial_list(gens, v)); }

const Variables& uv() {
  static const Variables v({"u", "v"});
  return v;
}

std::vector<GermSpec> corpus_specs() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(GERM_CORPUS_DIR)) {
    if (e.path().extension() == ".germ") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<GermSpec> out;
  for (const auto& f : files) out.push_back(load_germ_file(f.string()));
  return out;
}

PairImage pair_image(const MapGerm& g, bool numeric = false) {
  AnalyzeOptions opts;
  opts.numeric = numeric;
  std::vector<NumericCertificate> certs;
  return classify_image_pair(g, opts, certs);
}

// h(f, g) as a polynomial in the source: zero iff the image lies on V(h).
bool vanishes_on_image(const Polynomial& h, const MapGerm& g) {
  return substitute(h, {g.components[0], g.components[1]}).is_zero();
}

bool has_component(const std::vector<DiscComponent>& disc, const Ideal& want) {
  return std::any_of(disc.begin(), disc.end(), [&](const DiscComponent& c) { return same_ideal(c.image, want); });
}

}  // namespace

TEST_CASE("ICIS criterion") {
  auto ex = icis_verdict(germ_of("ex", Field::Complex, GermKind::Pair, {"x", "y"}, "x*y + x^2, y^2"));
  CHECK(ex.applicable);
  CHECK(ex.image.is(token::kYes));
  CHECK(ex.icis.is(token::kYes));
  CHECK(ex.image.provenance == Provenance::Symbolic);

  // The z-axis is singular and lies in the central fibre.
  auto sabbah = icis_verdict(germ_of("sabbah", Field::Complex, GermKind::Pair, {"x", "y", "z"}, "x^2 - y^2*z, y"));
  CHECK(sabbah.applicable);
  CHECK(sabbah.image.is(token::kYes));
  CHECK(sabbah.icis.is(token::kNo));

  auto blowup = icis_verdict(germ_of("blowup", Field::Complex, GermKind::Pair, {"x", "y"}, "x, x*y"));
  CHECK(!blowup.applicable);
  CHECK(blowup.icis.is(token::kNo));
  CHECK(!blowup.image.decided());
}

TEST_CASE("unit multiples") {
  Variables v({"z", "w"});
  auto P = [&](const char* s) { return parse_polynomial(s, v, true); };
  Verdict unit = unit_multiple_check(P("z*(1 + w)"), P("z"));
  CHECK(unit.is(token::kYes));
  CHECK(parse_polynomial(unit.germ, v, true) == P("1 + w"));
  CHECK(unit_multiple_check(P("z^2"), P("z")).is(token::kNo));
  CHECK(unit_multiple_check(P("z"), P("z^2")).is(token::kNo));
  CHECK(unit_multiple_check(P("z*w + z^2"), P("w^2")).is(token::kNo));
  CHECK(unit_multiple_check(P("3*z"), P("z")).is(token::kYes));
  // Same zero sets, yet the quotient (1 + w)/(1 + 2w) is still a unit.
  CHECK(unit_multiple_check(P("z*(1 + w)"), P("z*(1 + 2*w)")).is(token::kYes));
  // The quotient w/(w + z) vanishes at the origin.
  CHECK(unit_multiple_check(P("z*w"), P("z*(w + z)")).is(token::kNo));
}

TEST_CASE("unit multiples of random germs") {
  Variables v({"x", "y", "z"});
  std::mt19937_64 rng(311);
  int checked = 0;
  for (int k = 0; k < 300; ++k) {
    Polynomial g = testing::random_polynomial(rng, v, 3, 3, k % 2 == 0);
    if (g.is_zero()) continue;
    Polynomial tail = testing::random_polynomial(rng, v, 2, 3, k % 2 == 0);
    Polynomial unit = tail - Polynomial(v, evaluate(tail, {Scalar(), Scalar(), Scalar()})) + Polynomial(v, Scalar(1 + k % 4));
    CHECK(unit_multiple_check(unit * g, g).is(token::kYes));
    CHECK(unit_multiple_check(g, unit * g).is(token::kYes));
    // A factor vanishing at the origin is never a unit.
    Polynomial nonunit = unit * Polynomial::variable(v, static_cast<std::size_t>(k % 3));
    CHECK(unit_multiple_check(nonunit * g, g).is(token::kNo));
    CHECK(unit_multiple_check(g, nonunit * g).is(token::kNo));
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("images of pairs") {
  SUBCASE("blow-up: nested zero sets, dense graph image") {
    auto r = pair_image(germ_of("blowup", Field::Complex, GermKind::Pair, {"x", "y"}, "x, x*y"));
    CHECK(r.kind == PairCase::Nested);
    REQUIRE(r.elimination);
    CHECK(r.elimination->is_zero());
    CHECK(r.image.is(token::kNo));
    CHECK(r.image.provenance == Provenance::Symbolic);
  }
  SUBCASE("common zero set of codimension two") {
    auto r = pair_image(germ_of("sabbah", Field::Complex, GermKind::Pair, {"x", "y", "z"}, "x^2 - y^2*z, y"));
    CHECK(r.kind == PairCase::CommonCodimTwo);
    CHECK(r.image.is(token::kYes));
  }
  SUBCASE("cusp: the image is u^3 = v^2") {
    auto g = germ_of("cusp", Field::Complex, GermKind::Pair, {"x", "y"}, "x^2, x^3");
    auto r = pair_image(g);
    CHECK(r.kind == PairCase::Nested);
    CHECK(r.image.is(token::kYes));
    REQUIRE(r.elimination);
    CHECK(same_ideal(*r.elimination, I(uv(), "u^3 - v^2")));
    // Parametric oracle: t -> (t^2, t^3) lies on every generator.
    for (const auto& h : r.elimination->generators()) CHECK(vanishes_on_image(h, g));
  }
  SUBCASE("one branch of a nodal image curve") {
    // Globally the image is the nodal cubic; near the origin only the branch
    // through (0, 0) traced by x near 0 is hit, and that branch is a germ.
    auto g = germ_of("node", Field::Complex, GermKind::Pair, {"x", "y"}, "x^2 + 2*x, (x + 1)*(x^2 + 2*x)");
    auto r = pair_image(g);
    CHECK(r.kind == PairCase::Nested);
    CHECK(r.image.is(token::kYes));
    REQUIRE(r.elimination);
    REQUIRE(r.elimination->generators().size() == 1);
    CHECK(vanishes_on_image(r.elimination->generators().front(), g));
    REQUIRE(r.branches);
    CHECK(r.branches->count == 2);
    CHECK(r.image.germ.find("one branch") != std::string::npos);
  }
  SUBCASE("non-nested zero sets are left to the numeric stage") {
    auto g = germ_of("planes", Field::Complex, GermKind::Pair, {"x", "y", "z"}, "x*y, x*z");
    auto r = pair_image(g);
    CHECK(r.kind == PairCase::NotNested);
    CHECK(!r.image.decided());
    // (xy, xz) = (a, b) at x = s, y = a/s, z = b/s: norms tend to 0.
    auto n = pair_image(g, true);
    CHECK(n.image.is(token::kYes));
    CHECK(n.image.provenance == Provenance::Empirical);
  }
}

TEST_CASE("the codimension-two case agrees with the ICIS criterion") {
  Variables v({"x", "y", "z"});
  std::mt19937_64 rng(77);
  int applicable = 0;
  int checked = 0;
  for (int k = 0; k < 250; ++k) {
    std::vector<Polynomial> fg;
    for (int j = 0; j < 2; ++j) {
      Polynomial raw = testing::random_polynomial(rng, v, 3, 3, k % 2 == 0);
      Polynomial p(v);
      for (const auto& [m, c] : raw.terms()) {
        if (m.degree() >= 1) p.add_term(m, c);
      }
      fg.push_back(p);
    }
    if (fg[0].is_zero() || fg[1].is_zero()) continue;
    auto g = MapGerm::make("random", Field::Complex, GermKind::Pair, v, fg);
    try {
      auto icis = icis_verdict(g);
      auto pair = pair_image(g);
      CHECK(icis.applicable == (pair.kind == PairCase::CommonCodimTwo));
      if (icis.applicable) {
        CHECK(icis.image.is(token::kYes));
        CHECK(pair.image.is(token::kYes));
        ++applicable;
      }
      ++checked;
    } catch (const BudgetExceeded&) {
    }
  }
  CHECK(checked > 100);
  CHECK(applicable > 20);
}

TEST_CASE("discriminant components contain the images of sampled singular points") {
  std::mt19937_64 rng(5);
  int probes = 0;
  for (const auto& spec : corpus_specs()) {
    MapGerm g = spec.germ();
    const bool cx = spec.field == Field::Complex;
    for (const auto& c : discriminant(g)) {
      for (int k = 0; k < 100; ++k) {
        auto pt = sample_point(c.source, {}, rng, cx);
        if (!pt) continue;
        std::vector<Scalar> value;
        for (const auto& comp : g.components) value.push_back(evaluate(comp, *pt));
        for (const auto& h : c.image.generators()) CHECK_MESSAGE(evaluate(h, value).is_zero(), spec.name);
        ++probes;
      }
    }
  }
  CHECK(probes >= 500);
}

TEST_CASE("discriminants of the worked germs") {
  auto sabbah = germ_of("sabbah", Field::Complex, GermKind::Pair, {"x", "y", "z"}, "x^2 - y^2*z, y");
  auto report = analyze(sabbah);
  // Sing is <x, y^2>: the z-axis with a non-reduced structure.
  CHECK(same_ideal(report.sing_ideal, I(sabbah.source, "x, y^2")));
  CHECK(radical_membership(Polynomial::variable(sabbah.source, "y"), report.sing_ideal));
  REQUIRE(report.disc.size() == 1);
  CHECK(report.disc.front().point);
  CHECK(same_ideal(report.disc.front().image, I(uv(), "u, v")));
  CHECK(report.sing_image_germ.is(token::kYes));

  auto ex = germ_of("ex", Field::Complex, GermKind::Fbarg, {"x", "y"}, "x*y + x^2, y^2");
  auto disc = discriminant(ex);
  REQUIRE(disc.size() == 2);
  CHECK(has_component(disc, I(uv(), "v")));
  CHECK(has_component(disc, I(uv(), "v + 4*u")));
  // Parametric oracle: y = 0 maps to (x^2, 0), y = -2x maps to (-x^2, 4x^2).
  Variables t({"t"});
  Polynomial x = Polynomial::variable(t, 0);
  for (const auto& c : disc) {
    const Polynomial& h = c.image.generators().front();
    bool on_first = substitute(h, {x.pow(2), Polynomial(t)}).is_zero();
    bool on_second = substitute(h, {-x.pow(2), Polynomial(t, Scalar(4)) * x.pow(2)}).is_zero();
    CHECK(on_first != on_second);
  }
}

TEST_CASE("critical values of f conj(g)") {
  AnalyzeOptions opts;
  std::vector<NumericCertificate> certs;
  auto ex = germ_of("ex", Field::Complex, GermKind::Fbarg, {"x", "y"}, "x*y + x^2, y^2");
  Verdict one = singular_values_dim_fbarg(discriminant(ex), opts, certs);
  CHECK(one.is("1"));
  CHECK(one.provenance == Provenance::Symbolic);
  CHECK(certs.empty());
  opts.numeric = true;
  singular_values_dim_fbarg(discriminant(ex), opts, certs);
  REQUIRE(!certs.empty());
  for (const auto& c : certs) CHECK(c.verdict == verdict::kDimensionOne);

  certs.clear();
  auto unit = germ_of("unit", Field::Complex, GermKind::Fbarg, {"z", "w"}, "z*(1 + w), z");
  Verdict zero = singular_values_dim_fbarg(discriminant(unit), opts, certs);
  CHECK(zero.is("0"));
  CHECK(std::none_of(certs.begin(), certs.end(),
                     [](const NumericCertificate& c) { return c.verdict == verdict::kDimensionOne; }));

  auto report = analyze(unit);
  REQUIRE(report.unit_multiple);
  CHECK(report.unit_multiple->is(token::kYes));
  CHECK(report.nmg.is(token::kNo));
  CHECK(report.image_germ.is(token::kNo));
}

TEST_CASE("tameness of the coordinate-plane example") {
  auto g = germ_of("xy_z2", Field::Real, GermKind::General, {"x", "y", "z"}, "x*y, z^2");
  GermSpec spec;
  for (const auto& s : corpus_specs()) {
    if (s.name == "xy_z2") spec = s;
  }
  REQUIRE(spec.name == "xy_z2");
  AnalyzeOptions opts;
  std::vector<NumericCertificate> certs;
  Verdict tame = tame_verdict(g, *stratification(spec), opts, certs);
  CHECK(tame.is(token::kYes));
  CHECK(tame.provenance == Provenance::Symbolic);

  auto identity = germ_of("id", Field::Real, GermKind::General, {"x", "y"}, "x, y");
  CHECK(!tame_verdict(identity, default_stratification(identity), opts, certs).decided());
}

TEST_CASE("open images of real germs") {
  AnalyzeOptions opts;
  std::vector<NumericCertificate> certs;
  auto sub = open_image_verdict(germ_of("sub", Field::Real, GermKind::General, {"x", "y", "z"}, "x, y"), opts, certs);
  CHECK(sub.image.is(token::kYes));
  CHECK(sub.image.provenance == Provenance::Symbolic);
  // Homogeneous: the regular point (1, 0, 1) of the fibre and its ray.
  auto cone = open_image_verdict(germ_of("cone", Field::Real, GermKind::General, {"x", "y", "z"}, "x*y, z^2 - x^2"),
                                 opts, certs);
  CHECK(cone.image.is(token::kYes));
  // x^2 + y^2: the fibre is the origin, all of it singular.
  auto square = open_image_verdict(germ_of("sq", Field::Real, GermKind::General, {"x", "y"}, "x^2 + y^2"), opts, certs);
  CHECK(!square.image.decided());
  CHECK(certs.empty());
}

TEST_CASE("corpus reports satisfy the invariants") {
  for (const auto& spec : corpus_specs()) {
    AnalyzeOptions opts;
    opts.stratification = stratification(spec);
    auto report = analyze(spec.germ(), opts);
    auto violations = check_invariants(report);
    CHECK_MESSAGE(violations.empty(), spec.name, ": ", violations.empty() ? "" : violations.front());
  }
}

TEST_CASE("invariant checks catch inconsistent reports") {
  auto report = analyze(germ_of("cusp", Field::Complex, GermKind::Pair, {"x", "y"}, "x^2, x^3"));
  CHECK(check_invariants(report).empty());
  VerdictReport broken = report;
  broken.image_germ = Verdict::symbolic(token::kNo, "test");
  CHECK(!check_invariants(broken).empty());
  broken = report;
  broken.fibration.milnor_hamm = Verdict::symbolic(token::kYes, "test");
  broken.fibration.tube = Verdict::undecided();
  CHECK(!check_invariants(broken).empty());
  broken = report;
  broken.tame = Verdict::symbolic(token::kIndeterminate, "test");
  CHECK(!check_invariants(broken).empty());
  broken = report;
  broken.singular_values_dim = Verdict::symbolic("0", "test");
  CHECK(!check_invariants(broken).empty());
}

TEST_CASE("symbolic verdicts survive orthogonal changes of coordinates") {
  auto t = testing::linear_change_suite(GERM_CORPUS_DIR);
  CHECK(t.cases > 100);
  CHECK_MESSAGE(t.failures == 0, t.first_failure);
}

TEST_CASE("analysis with numeric stages is reproducible") {
  AnalyzeOptions opts;
  opts.numeric = true;
  auto g = germ_of("blowup", Field::Complex, GermKind::Pair, {"x", "y"}, "x, x*y");
  CHECK(to_json(analyze(g, opts)) == to_json(analyze(g, opts)));
}
