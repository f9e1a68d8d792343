#include <random>

#include "doctest.h"
#include "germ/loci/critical.hpp"
#include "germ/poly/parse.hpp"
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

std::size_t rank_at(const PolyMatrix& m, const std::vector<Scalar>& pt) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : m) {
    std::vector<Scalar> row;
    for (const auto& e : r) row.push_back(evaluate(e, pt));
    rows.push_back(row);
  }
  return matrix_rank(rows);
}

std::vector<Scalar> Q(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("jacobian of the worked germs") {
  auto blowup = germ_of("blowup", Field::Complex, GermKind::Pair, {"x", "y"}, "x, x*y");
  auto j = jacobian(blowup);
  const Variables& v = blowup.source;
  CHECK(j[0][0] == parse_polynomial("1", v));
  CHECK(j[0][1].is_zero());
  CHECK(j[1][0] == parse_polynomial("y", v));
  CHECK(j[1][1] == parse_polynomial("x", v));

  auto sabbah = germ_of("sabbah", Field::Complex, GermKind::Pair, {"x", "y", "z"}, "x^2 - y^2*z, y");
  auto js = jacobian(sabbah);
  const Variables& w = sabbah.source;
  CHECK(js[0][0] == parse_polynomial("2*x", w));
  CHECK(js[0][1] == parse_polynomial("-2*y*z", w));
  CHECK(js[0][2] == parse_polynomial("-y^2", w));
  CHECK(js[1][1] == parse_polynomial("1", w));

  auto ex = germ_of("ex59", Field::Complex, GermKind::Pair, {"x", "y"}, "x*y + x^2, y^2");
  auto je = jacobian(ex);
  CHECK(je[0][0] == parse_polynomial("y + 2*x", ex.source));
  CHECK(je[0][1] == parse_polynomial("x", ex.source));
  CHECK(je[1][0].is_zero());
  CHECK(je[1][1] == parse_polynomial("2*y", ex.source));
  CHECK(determinant(je) == parse_polynomial("2*y^2 + 4*x*y", ex.source));
}

TEST_CASE("singular loci") {
  auto sabbah = germ_of("sabbah", Field::Complex, GermKind::Pair, {"x", "y", "z"}, "x^2 - y^2*z, y");
  CHECK(same_ideal(singular_locus(sabbah), I(sabbah.source, "2*x, y^2")));

  auto ex = germ_of("ex59", Field::Complex, GermKind::Pair, {"x", "y"}, "x*y + x^2, y^2");
  CHECK(same_ideal(singular_locus(ex), I(ex.source, "2*y*(y + 2*x)")));

  auto ex46 = germ_of("ex46", Field::Real, GermKind::General, {"x", "y", "z"}, "x*y, z^2");
  Ideal s = singular_locus(ex46);
  CHECK(same_ideal(s, I(ex46.source, "y*z, x*z")));
  auto comps = split_components(s, Field::Real);
  REQUIRE(comps.size() == 2);
  bool plane = false;
  bool axis = false;
  for (const auto& c : comps) {
    plane = plane || same_ideal(c, I(ex46.source, "z"));
    axis = axis || same_ideal(c, I(ex46.source, "x, y"));
  }
  CHECK(plane);
  CHECK(axis);

  auto submersion = germ_of("sub", Field::Real, GermKind::General, {"x", "y", "z"}, "x, y");
  CHECK(buchberger(singular_locus(submersion)).is_unit());
}

TEST_CASE("Jacobian rank drops on sampled singular points") {
  struct Fixture {
    MapGerm germ;
    std::function<std::vector<Scalar>(long)> point;
  };
  std::vector<Fixture> fixtures = {
      {germ_of("ex59", Field::Complex, GermKind::Pair, {"x", "y"}, "x*y + x^2, y^2"),
       [](long t) { return Q({t, 0}); }},
      {germ_of("ex59", Field::Complex, GermKind::Pair, {"x", "y"}, "x*y + x^2, y^2"),
       [](long t) { return Q({t, -2 * t}); }},
      {germ_of("sabbah", Field::Complex, GermKind::Pair, {"x", "y", "z"}, "x^2 - y^2*z, y"),
       [](long t) { return Q({0, 0, t}); }},
      {germ_of("ex46", Field::Real, GermKind::General, {"x", "y", "z"}, "x*y, z^2"),
       [](long t) { return Q({t, 3 - t, 0}); }},
      {germ_of("ex46", Field::Real, GermKind::General, {"x", "y", "z"}, "x*y, z^2"),
       [](long t) { return Q({0, 0, t}); }},
      {germ_of("blowup", Field::Complex, GermKind::Pair, {"x", "y"}, "x, x*y"),
       [](long t) { return Q({0, t}); }},
  };
  int checked = 0;
  for (auto& fx : fixtures) {
    Ideal sing = singular_locus(fx.germ);
    auto jac = jacobian(fx.germ);
    for (long t = -6; t <= 6; ++t) {
      auto pt = fx.point(t);
      for (const auto& g : sing.generators()) REQUIRE(evaluate(g, pt).is_zero());
      CHECK(rank_at(jac, pt) < fx.germ.components.size());
      ++checked;
    }
  }
  // Points drawn by the sampler on Sing components of random pairs.
  std::mt19937_64 rng(7);
  Variables v({"x", "y"});
  for (int k = 0; k < 60; ++k) {
    Polynomial f = testing::random_polynomial(rng, v, 3, 3);
    Polynomial g = testing::random_polynomial(rng, v, 3, 3);
    f -= Polynomial(v, f.constant_term());
    g -= Polynomial(v, g.constant_term());
    if (f.is_zero() || g.is_zero()) continue;
    auto germ = MapGerm::make("random", Field::Real, GermKind::General, v, {f, g});
    Ideal sing = singular_locus(germ);
    if (sing.is_zero()) continue;
    for (const auto& c : split_components(sing, Field::Real)) {
      auto pt = sample_point(c, {}, rng, false);
      if (!pt) continue;
      CHECK(rank_at(jacobian(germ), *pt) < 2);
      ++checked;
    }
  }
  CHECK(checked >= 50);
}

TEST_CASE("realification of mixed and complex germs") {
  auto fb = germ_of("ex36", Field::Complex, GermKind::Fbarg, {"z", "w"}, "z*(1 + w), z", {"x", "y", "u", "v"});
  RealifiedGerm r = realify(fb);
  REQUIRE(r.components.size() == 2);
  CHECK(r.components[0] == parse_polynomial("(x^2 + y^2)*(1 + u)", r.real_vars));
  CHECK(r.components[1] == parse_polynomial("(x^2 + y^2)*v", r.real_vars));

  auto modulus = germ_of("modulus", Field::Complex, GermKind::Fbarg, {"z"}, "z, z", {"x", "y"});
  RealifiedGerm rm = realify(modulus);
  CHECK(rm.components[0] == parse_polynomial("x^2 + y^2", rm.real_vars));
  CHECK(rm.components[1].is_zero());

  auto id = germ_of("identity", Field::Complex, GermKind::General, {"z"}, "z", {"x", "y"});
  RealifiedGerm ri = realify(id);
  CHECK(ri.components[0] == parse_polynomial("x", ri.real_vars));
  CHECK(ri.components[1] == parse_polynomial("y", ri.real_vars));
}

TEST_CASE("realified evaluation matches complex evaluation") {
  std::mt19937_64 rng(11);
  Variables v({"z", "w"});
  auto germ = MapGerm::make("mix", Field::Complex, GermKind::General, v,
                            {parse_polynomial("z^2*w + (2 - i)*w^3 + z", v, true),
                             parse_polynomial("i*z*w - 3*z^2 + w^2", v, true)});
  RealifiedGerm r = realify(germ);
  auto pair = germ_of("pair", Field::Complex, GermKind::Fbarg, {"z", "w"}, "z*w + z^2, w^2 - i*z");
  RealifiedGerm rp = realify(pair);
  for (int k = 0; k < 100; ++k) {
    std::vector<Scalar> z = {testing::random_scalar(rng, true), testing::random_scalar(rng, true)};
    auto x = r.real_point(z);
    for (std::size_t c = 0; c < 2; ++c) {
      Scalar value = evaluate(germ.components[c], z);
      CHECK(evaluate(r.components[2 * c], x) == Scalar(value.re()));
      CHECK(evaluate(r.components[2 * c + 1], x) == Scalar(value.im()));
    }
    Scalar mixed = evaluate(pair.components[0], z) * evaluate(pair.components[1], z).conj();
    auto xp = rp.real_point(z);
    CHECK(evaluate(rp.components[0], xp) == Scalar(mixed.re()));
    CHECK(evaluate(rp.components[1], xp) == Scalar(mixed.im()));
  }
}

TEST_CASE("default stratifications") {
  auto ex46 = germ_of("ex46", Field::Real, GermKind::General, {"x", "y", "z"}, "x*y, z^2");
  auto s = default_stratification(ex46);
  REQUIRE(s.strata.size() == 3);
  CHECK(s.strata[0].closure.is_zero());
  CHECK(s.strata[0].generic_rank == 2);

  auto ex = germ_of("ex59", Field::Complex, GermKind::Pair, {"x", "y"}, "x*y + x^2, y^2");
  auto se = default_stratification(ex);
  REQUIRE(se.strata.size() == 3);
  bool line0 = false;
  bool line1 = false;
  for (std::size_t k = 1; k < se.strata.size(); ++k) {
    line0 = line0 || same_ideal(se.strata[k].closure, I(ex.source, "y"));
    line1 = line1 || same_ideal(se.strata[k].closure, I(ex.source, "y + 2*x"));
  }
  CHECK(line0);
  CHECK(line1);

  auto smooth = germ_of("smooth", Field::Real, GermKind::General, {"x", "y"}, "x, y");
  auto ss = default_stratification(smooth);
  CHECK(ss.strata.size() == 1);
  CHECK(ss.strata[0].generic_rank == 2);
}

TEST_CASE("every default stratum passes through the origin") {
  std::vector<MapGerm> germs = {
      germ_of("ex46", Field::Real, GermKind::General, {"x", "y", "z"}, "x*y, z^2"),
      germ_of("ex59", Field::Complex, GermKind::Pair, {"x", "y"}, "x*y + x^2, y^2"),
      germ_of("sabbah", Field::Complex, GermKind::Pair, {"x", "y", "z"}, "x^2 - y^2*z, y"),
      germ_of("hansen3", Field::Real, GermKind::General, {"x", "y", "v"}, "x^2 + y^2, v*(x^2 + y^2)"),
      germ_of("ex36", Field::Complex, GermKind::Fbarg, {"z", "w"}, "z*(1 + w), z", {"x", "y", "u", "v"}),
      germ_of("offset", Field::Real, GermKind::General, {"x", "y"}, "x*(y - 1), y"),
  };
  for (const auto& g : germs) {
    for (const auto& st : default_stratification(g).strata) {
      CHECK(contains_origin(st.closure));
      CHECK(st.generic_rank >= 0);
    }
  }
}

TEST_CASE("Milnor set ideals of the worked examples") {
  auto ex46 = germ_of("ex46", Field::Real, GermKind::General, {"x", "y", "z"}, "x*y, z^2");
  auto s = default_stratification(ex46);
  Ideal top = milnor_set_ideal(ex46, s.strata[0]);
  CHECK(same_ideal(top, I(ex46.source, "z*(x^2 - y^2)")));

  auto hansen3 = germ_of("hansen3", Field::Real, GermKind::General, {"x", "y", "v"}, "x^2 + y^2, v*(x^2 + y^2)");
  auto sh = default_stratification(hansen3);
  CHECK(milnor_set_ideal(hansen3, sh.strata[0]).is_zero());

  auto hansen4 = germ_of("hansen4", Field::Real, GermKind::General, {"x", "y", "u", "v"},
                         "(x^2 + y^2)*(1 + u), (x^2 + y^2)*v");
  auto s4 = default_stratification(hansen4);
  Ideal m4 = strip_positive_factors(canonical(milnor_set_ideal(hansen4, s4.strata[0])));
  // {u(1+u) + v^2 = (x^2+y^2)/2} union {x = y = 0}
  Ideal expected = intersect(I(hansen4.source, "2*u*(1 + u) + 2*v^2 - x^2 - y^2"), I(hansen4.source, "x, y"));
  CHECK(same_ideal(m4, expected));

  auto fb = germ_of("ex36", Field::Complex, GermKind::Fbarg, {"z", "w"}, "z*(1 + w), z", {"x", "y", "u", "v"});
  RealifiedGerm r = realify(fb);
  auto sf = default_stratification(fb);
  Ideal mf = strip_positive_factors(canonical(milnor_set_ideal(r.components, sf.strata[0])));
  CHECK(same_ideal(mf, Ideal(r.real_vars, [&] {
                     std::vector<Polynomial> gens;
                     for (const auto& g : expected.generators()) gens.push_back(remap(g, r.real_vars));
                     return gens;
                   }())));
}

TEST_CASE("Milnor condition for a function is gradient parallel to position") {
  Variables v({"x", "y"});
  auto circle = MapGerm::make("sos", Field::Real, GermKind::General, v, {parse_polynomial("x^2 + y^2", v)});
  auto s = default_stratification(circle);
  // grad = 2*(x, y) is always parallel to (x, y).
  CHECK(milnor_set_ideal(circle, s.strata[0]).is_zero());

  auto saddle = MapGerm::make("saddle", Field::Real, GermKind::General, v, {parse_polynomial("x^2 - y^2", v)});
  auto ss = default_stratification(saddle);
  // det [[2x, -2y], [x, y]] = 4xy.
  CHECK(same_ideal(milnor_set_ideal(saddle, ss.strata[0]), I(v, "x*y")));
}

TEST_CASE("stripping sums of squares keeps the real zero set") {
  Variables v({"x", "y", "z"});
  CHECK(same_ideal(strip_positive_factors(I(v, "x*(x^2 + y^2)*z, y*(x^2 + y^2)*z")), I(v, "x*z, y*z")));
  // z does not vanish on x = y = 0, so the factor must stay.
  Ideal keep = I(v, "(x^2 + y^2)*z, (x^2 + y^2)*(z + 1)");
  CHECK(same_ideal(strip_positive_factors(keep), keep));
}
