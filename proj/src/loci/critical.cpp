#include "germ/loci/critical.hpp"

#include <algorithm>
#include <functional>

namespace germ {

PolyMatrix jacobian(const MapGerm& g) {
  PolyMatrix j;
  for (const auto& c : g.components) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < g.source.size(); ++v) row.push_back(differentiate(c, v));
    j.push_back(std::move(row));
  }
  return j;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void add_unique(std::vector<Polynomial>& out, const Polynomial& p) {
  if (p.is_zero()) return;
  for (const auto& q : out) {
    if (q.proportional_to(p)) return;
  }
  out.push_back(p);
}

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k) {
  std::vector<Polynomial> out;
  if (m.empty() || k == 0) return out;
  // Identically zero and repeated rows never contribute a new minor.
  PolyMatrix rows;
  for (const auto& row : m) {
    bool zero = std::all_of(row.begin(), row.end(), [](const Polynomial& p) { return p.is_zero(); });
    if (zero || std::find(rows.begin(), rows.end(), row) != rows.end()) continue;
    rows.push_back(row);
  }
  const std::size_t ncols = m[0].size();
  for_each_subset(rows.size(), k, [&](const std::vector<std::size_t>& r) {
    for_each_subset(ncols, k, [&](const std::vector<std::size_t>& c) {
      PolyMatrix sub(k, std::vector<Polynomial>());
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i].push_back(rows[r[i]][c[j]]);
      }
      add_unique(out, determinant(sub));
    });
  });
  return out;
}

Ideal singular_locus(const MapGerm& g) {
  if (g.kind == GermKind::Fbarg) {
    MapGerm real = realify(g).as_germ(g.name);
    return singular_locus(real);
  }
  const std::size_t p = g.components.size();
  // With fewer source variables than components the rank is never maximal.
  if (g.source.size() < p) return Ideal(g.source);
  return Ideal(g.source, minors(jacobian(g), p));
}

std::pair<Polynomial, Polynomial> RealifiedGerm::split(const Polynomial& p) const {
  std::vector<Polynomial> images;
  Scalar i = Scalar::imaginary_unit();
  for (const auto& [re, im] : parts) {
    images.push_back(Polynomial::variable(real_vars, re) + Polynomial::variable(real_vars, im) * i);
  }
  Polynomial q = substitute(remap(p, complex_vars), images);
  return {q.real_part(), q.imag_part()};
}

Ideal RealifiedGerm::realify(const Ideal& complex_ideal) const {
  Ideal out(real_vars);
  for (const auto& g : complex_ideal.generators()) {
    auto [re, im] = split(g);
    out.add(re);
    out.add(im);
  }
  return out;
}

std::vector<Scalar> RealifiedGerm::real_point(const std::vector<Scalar>& z) const {
  std::vector<Scalar> out(real_vars.size());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    out[parts[k].first] = Scalar(z[k].re());
    out[parts[k].second] = Scalar(z[k].im());
  }
  return out;
}

MapGerm RealifiedGerm::as_germ(const std::string& name) const {
  std::vector<std::string> targets;
  for (std::size_t k = 0; k < components.size(); ++k) targets.push_back("y" + std::to_string(k + 1));
  return MapGerm::make(name + " (realified)", Field::Real, GermKind::General, real_vars, components, targets);
}

RealifiedGerm realify(const MapGerm& g) {
  if (g.field != Field::Complex) throw Error("realify requires a complex germ");
  RealifiedGerm r;
  r.complex_vars = g.source;
  std::vector<std::string> names = g.real_names;
  if (names.empty()) {
    for (const auto& n : g.source.names()) {
      names.push_back(n + "_re");
      names.push_back(n + "_im");
    }
  }
  r.real_vars = Variables(names);
  for (std::size_t k = 0; k < g.source.size(); ++k) r.parts.emplace_back(2 * k, 2 * k + 1);
  if (g.kind == GermKind::Fbarg) {
    auto [af, bf] = r.split(g.components[0]);
    auto [ag, bg] = r.split(g.components[1]);
    // f * conj(g) = (AfAg + BfBg) + i (BfAg - AfBg)
    r.components.push_back(af * ag + bf * bg);
    r.components.push_back(bf * ag - af * bg);
  } else {
    for (const auto& c : g.components) {
      auto [re, im] = r.split(c);
      r.components.push_back(re);
      r.components.push_back(im);
    }
  }
  return r;
}

MapGerm metric_germ(const MapGerm& g) {
  if (g.field == Field::Real) return g;
  return realify(g).as_germ(g.name);
}

std::string to_string(Stratification::Provenance p) {
  return p == Stratification::Provenance::DefaultCoarse ? "default-coarse" : "user-supplied";
}

namespace {

// Positive coefficients on even monomials: the real zero set is the common
// zero set of the monomials.
bool is_even_positive_sum(const Polynomial& g) {
  if (!g.is_real() || g.size() < 1) return false;
  for (const auto& [m, c] : g.terms()) {
    if (sgn(c.re()) <= 0) return false;
    for (std::size_t v = 0; v < g.variables().size(); ++v) {
      if (m[v] % 2 != 0) return false;
    }
  }
  return true;
}

Polynomial monomial_support(const Variables& vars, const Monomial& m) {
  Monomial r;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (m[v] != 0) r.set(v, 1);
  }
  return Polynomial::term(vars, r, Scalar(1));
}

Ideal unit_ideal(const Variables& vars) { return Ideal(vars, {Polynomial(vars, Scalar(1))}); }

}  // namespace

Ideal real_zero_set_reduction(const Ideal& ideal, Field field) {
  if (field != Field::Real) return ideal;
  Ideal out(ideal.variables());
  bool changed = false;
  for (const auto& g : ideal.generators()) {
    if (g.size() >= 2 && is_even_positive_sum(g)) {
      changed = true;
      if (!g.constant_term().is_zero()) return unit_ideal(ideal.variables());
      for (const auto& [m, c] : g.terms()) out.add(monomial_support(ideal.variables(), m));
    } else {
      out.add(g);
    }
  }
  return changed ? canonical(out) : ideal;
}

Ideal strip_positive_factors(const Ideal& ideal) {
  const Variables& vars = ideal.variables();
  if (ideal.generators().empty() || !ideal.is_real()) return ideal;
  std::vector<Polynomial> gens = ideal.generators();
  Polynomial h(vars);
  for (const auto& g : gens) h = polynomial_gcd(h, g);
  if (h.is_constant()) return ideal;
  // Homogeneous factors of h also divide its lowest-degree part.
  std::vector<Factor> candidates = split_factors(h, false);
  for (auto& f : split_factors(tangent_cone(h), false)) {
    if (!exact_divide(h, f.factor)) continue;
    f.multiplicity = 0;
    Polynomial q = h;
    while (auto d = exact_divide(q, f.factor)) {
      q = std::move(*d);
      ++f.multiplicity;
    }
    candidates.push_back(f);
  }
  bool changed = false;
  for (const auto& f : candidates) {
    if (f.factor.size() < 2 || !is_even_positive_sum(f.factor)) continue;
    Ideal zero_set(vars);
    for (const auto& [m, c] : f.factor.terms()) zero_set.add(monomial_support(vars, m));
    for (int k = 0; k < f.multiplicity; ++k) {
      std::vector<Polynomial> quotients;
      for (const auto& g : gens) {
        if (auto q = exact_divide(g, f.factor)) quotients.push_back(std::move(*q));
      }
      if (quotients.size() != gens.size()) break;
      bool covered = std::all_of(quotients.begin(), quotients.end(),
                                 [&](const Polynomial& q) { return radical_membership(q, zero_set); });
      if (!covered) break;
      gens = std::move(quotients);
      changed = true;
    }
  }
  return changed ? canonical(Ideal(vars, gens)) : ideal;
}

Ideal squarefree_generators(const Ideal& ideal) {
  Ideal out(ideal.variables());
  for (const auto& g : ideal.generators()) {
    if (g.is_constant()) {
      out.add(g);
      continue;
    }
    Polynomial prod(ideal.variables(), Scalar(1));
    for (const auto& f : split_factors(g)) prod *= f.factor;
    out.add(prod);
  }
  return out;
}

std::vector<Ideal> split_components(const Ideal& ideal, Field field) {
  std::vector<Ideal> found;
  const Variables& vars = ideal.variables();
  if (ideal.is_zero() || buchberger(ideal).is_unit()) return found;
  const bool gaussian = field == Field::Complex;
  Polynomial h(vars);
  for (const auto& g : ideal.generators()) h = polynomial_gcd(h, g);
  std::vector<Ideal> raw;
  if (!h.is_constant()) {
    for (const auto& f : split_factors(h, gaussian)) raw.push_back(Ideal(vars, {f.factor}));
    Ideal residual(vars);
    for (const auto& g : ideal.generators()) residual.add(*exact_divide(g, h));
    if (!buchberger(residual).is_unit()) raw.push_back(residual);
  } else {
    raw.push_back(ideal);
  }
  for (const auto& r : raw) {
    Ideal c = canonical(real_zero_set_reduction(squarefree_generators(r), field));
    c = canonical(real_zero_set_reduction(c, field));
    if (c.is_zero() || buchberger(c).is_unit() || !contains_origin(c)) continue;
    bool duplicate = std::any_of(found.begin(), found.end(), [&](const Ideal& f) { return same_ideal(f, c); });
    if (!duplicate) found.push_back(c);
  }
  // Drop components whose zero set lies inside another component.
  std::vector<Ideal> out;
  for (std::size_t i = 0; i < found.size(); ++i) {
    bool inside = false;
    for (std::size_t j = 0; j < found.size() && !inside; ++j) {
      if (i == j) continue;
      const auto& gens = found[j].generators();
      inside = std::all_of(gens.begin(), gens.end(),
                           [&](const Polynomial& g) { return radical_membership(g, found[i]); });
    }
    if (!inside) out.push_back(found[i]);
  }
  return out;
}

namespace {

Scalar random_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-7, 7);
  std::uniform_int_distribution<long> den(1, 3);
  long n = num(rng);
  if (n == 0) n = 5;
  return Scalar::fraction(n, den(rng));
}

bool avoids(const std::vector<Scalar>& pt, const std::vector<Ideal>& excluded) {
  for (const auto& e : excluded) {
    bool inside = std::all_of(e.generators().begin(), e.generators().end(),
                              [&](const Polynomial& g) { return evaluate(g, pt).is_zero(); });
    if (inside) return false;
  }
  return true;
}

std::optional<std::vector<Scalar>> try_sample(const Ideal& closure, std::mt19937_64& rng, bool allow_complex) {
  const Variables& vars = closure.variables();
  const std::size_t n = vars.size();
  std::vector<std::optional<Scalar>> value(n);
  GroebnerBasis gb = buchberger(closure);
  if (gb.is_unit()) return std::nullopt;
  for (std::size_t v : independent_set(gb)) value[v] = random_value(rng);
  auto current_ideal = [&]() {
    Ideal cur(vars, closure.generators());
    for (std::size_t v = 0; v < n; ++v) {
      if (value[v]) cur.add(Polynomial::variable(vars, v) - Polynomial(vars, *value[v]));
    }
    return cur;
  };
  for (std::size_t step = n; step > 0; --step) {
    std::size_t v = step - 1;
    if (value[v]) continue;
    std::vector<std::size_t> priority;
    for (std::size_t w = 0; w < n; ++w) {
      if (w != v) priority.push_back(w);
    }
    priority.push_back(v);
    GroebnerBasis lex = buchberger(current_ideal(), MonomialOrder::lex(priority));
    if (lex.is_unit()) return std::nullopt;
    const Polynomial* uni = nullptr;
    for (const auto& g : lex.basis) {
      auto sup = g.support();
      if (sup.size() == 1 && sup[0] == v) uni = &g;
    }
    if (uni == nullptr) {
      value[v] = random_value(rng);
      continue;
    }
    RootSearch rs = find_roots(to_unipoly(*uni, v));
    std::vector<Scalar> usable;
    for (const auto& [r, m] : rs.roots) {
      if (allow_complex || r.is_real()) usable.push_back(r);
    }
    if (usable.empty()) return std::nullopt;
    value[v] = usable[rng() % usable.size()];
  }
  std::vector<Scalar> pt;
  for (const auto& v : value) pt.push_back(*v);
  for (const auto& g : closure.generators()) {
    if (!evaluate(g, pt).is_zero()) return std::nullopt;
  }
  return pt;
}

}  // namespace

std::optional<std::vector<Scalar>> sample_point(const Ideal& closure, const std::vector<Ideal>& excluded,
                                                std::mt19937_64& rng, bool allow_complex, int attempts) {
  for (int k = 0; k < attempts; ++k) {
    std::optional<std::vector<Scalar>> pt;
    if (closure.is_zero()) {
      std::vector<Scalar> v;
      for (std::size_t i = 0; i < closure.variables().size(); ++i) v.push_back(random_value(rng));
      pt = v;
    } else {
      pt = try_sample(closure, rng, allow_complex);
    }
    if (pt && avoids(*pt, excluded)) return pt;
  }
  return std::nullopt;
}

PolyMatrix constraint_rows(const std::vector<Polynomial>& components, const Stratum& s) {
  PolyMatrix rows;
  auto gradient = [](const Polynomial& p) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < p.variables().size(); ++v) row.push_back(differentiate(p, v));
    return row;
  };
  for (const auto& g : s.closure.generators()) rows.push_back(gradient(g));
  for (const auto& c : components) rows.push_back(gradient(c));
  return rows;
}

int generic_rank(const std::vector<Polynomial>& components, const Stratum& s, std::mt19937_64& rng,
                 bool allow_complex) {
  PolyMatrix rows = constraint_rows(components, s);
  int best = -1;
  for (int sample = 0; sample < 3; ++sample) {
    auto pt = sample_point(s.closure, s.excluded, rng, allow_complex);
    if (!pt) break;
    std::vector<std::vector<Scalar>> values;
    for (const auto& row : rows) {
      std::vector<Scalar> r;
      for (const auto& e : row) r.push_back(evaluate(e, *pt));
      values.push_back(std::move(r));
    }
    best = std::max(best, static_cast<int>(matrix_rank(values)));
  }
  if (best < 0) throw StratificationIndeterminate("stratification indeterminate: no sample point on " + s.label);
  return best;
}

Stratification default_stratification(const MapGerm& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const bool fbarg = g.kind == GermKind::Fbarg;
  MapGerm base = fbarg ? realify(g).as_germ(g.name) : g;
  const Field field = base.field;
  const Variables& vars = base.source;
  Stratification out;
  Ideal sing = singular_locus(base);
  Stratum top{Ideal(vars), {}, -1, "complement of Sing"};
  if (sing.is_zero()) {
    top.label = "whole source (Sing is everything)";
    out.notes.push_back("singular locus is the whole source");
    out.strata.push_back(top);
  } else {
    auto comps = split_components(sing, field);
    if (comps.empty() && !buchberger(sing).is_unit()) {
      out.notes.push_back("singular locus misses the origin");
    }
    top.excluded = comps;
    out.strata.push_back(top);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      Stratum s{comps[i], {}, -1, "Sing component " + comps[i].to_string()};
      for (std::size_t j = 0; j < comps.size(); ++j) {
        if (j != i) s.excluded.push_back(comps[i] + comps[j]);
      }
      out.strata.push_back(s);
    }
  }
  for (auto& s : out.strata) s.generic_rank = generic_rank(base.components, s, rng, field == Field::Complex);
  return out;
}

Stratification realify(const Stratification& s, const RealifiedGerm& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Stratification out;
  out.provenance = s.provenance;
  out.notes = s.notes;
  for (const auto& st : s.strata) {
    Stratum t;
    t.closure = st.closure.is_zero() ? Ideal(r.real_vars) : canonical(r.realify(st.closure));
    for (const auto& e : st.excluded) t.excluded.push_back(canonical(r.realify(e)));
    t.label = st.label;
    t.generic_rank = generic_rank(r.components, t, rng, false);
    out.strata.push_back(t);
  }
  return out;
}

Ideal milnor_set_ideal(const std::vector<Polynomial>& components, const Stratum& s) {
  if (components.empty()) throw Error("milnor_set_ideal: no components");
  const Variables& vars = components[0].variables();
  if (s.generic_rank < 0) throw Error("milnor_set_ideal: rank probe failed for " + s.label);
  PolyMatrix rows = constraint_rows(components, s);
  std::vector<Polynomial> position;
  for (std::size_t v = 0; v < vars.size(); ++v) position.push_back(Polynomial::variable(vars, v));
  rows.push_back(position);
  const auto k = static_cast<std::size_t>(s.generic_rank + 1);
  if (k > vars.size() || k > rows.size()) return Ideal(vars);
  return Ideal(vars, minors(rows, k));
}

Ideal milnor_set_ideal(const MapGerm& real_germ, const Stratum& s) {
  if (real_germ.field != Field::Real) throw Error("milnor_set_ideal needs a real germ; realify first");
  return milnor_set_ideal(real_germ.components, s);
}

}  // namespace germ
