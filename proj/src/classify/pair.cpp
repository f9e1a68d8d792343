#include <algorithm>

#include "germ/classify/classify.hpp"
#include "internal.hpp"

namespace germ {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Symbolic:
      return "symbolic";
    case Provenance::Empirical:
      return "empirical";
    case Provenance::Indeterminate:
      return "indeterminate";
  }
  return "";
}

std::string to_string(PairCase c) {
  switch (c) {
    case PairCase::CommonCodimTwo:
      return "common zero set of codimension 2";
    case PairCase::Nested:
      return "nested zero sets";
    case PairCase::NotNested:
      return "zero sets of codimension 1, not nested";
  }
  return "";
}

Verdict Verdict::symbolic(std::string value, std::string citation, std::string detail) {
  return Verdict{std::move(value), Provenance::Symbolic, std::move(citation), std::move(detail), ""};
}

Verdict Verdict::empirical(std::string value, std::string citation, std::string detail) {
  return Verdict{std::move(value), Provenance::Empirical, std::move(citation), std::move(detail), ""};
}

Verdict Verdict::undecided(std::string detail) {
  return Verdict{token::kIndeterminate, Provenance::Indeterminate, "", std::move(detail), ""};
}

namespace detail {

Ideal graph_image(const Ideal& source_ideal, const std::vector<Polynomial>& components,
                  const std::vector<std::string>& targets) {
  const Variables& src = components.front().variables();
  Variables ring = src.extended(targets);
  Ideal graph(ring);
  for (const auto& g : source_ideal.generators()) graph.add(remap(g, ring));
  for (std::size_t k = 0; k < components.size(); ++k) {
    graph.add(Polynomial::variable(ring, targets[k]) - remap(components[k], ring));
  }
  Ideal eliminated = eliminate(graph, src.names());
  Variables target_ring(targets);
  Ideal out(target_ring);
  for (const auto& g : eliminated.generators()) out.add(remap(g, target_ring));
  return canonical(out);
}

bool is_origin_ideal(const Ideal& ideal) {
  const Variables& vars = ideal.variables();
  Ideal origin(vars);
  for (std::size_t v = 0; v < vars.size(); ++v) origin.add(Polynomial::variable(vars, v));
  return same_ideal(ideal, origin);
}

MapGerm pair_of(const MapGerm& g) {
  return MapGerm::make(g.name, Field::Complex, GermKind::Pair, g.source, g.components, {}, g.real_names);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace detail

IcisResult icis_verdict(const MapGerm& g) {
  if (g.field != Field::Complex) throw Error("icis_verdict needs a complex germ");
  MapGerm base = g.kind == GermKind::Fbarg ? detail::pair_of(g) : g;
  IcisResult out;
  const int n = static_cast<int>(base.source_dim());
  const int p = static_cast<int>(base.components.size());
  Ideal fibre = base.fibre_ideal();
  const std::string full = "full target C^" + std::to_string(p);
  try {
    int d = dimension(fibre);
    if (d != n - p) {
      std::string why = "central fibre has dimension " + std::to_string(d) + ", not n - p = " + std::to_string(n - p);
      out.image = Verdict::undecided(why);
      out.icis = Verdict::symbolic(token::kNo, "complete intersection of the expected dimension", why);
      return out;
    }
    out.applicable = true;
    out.image = Verdict::symbolic(token::kYes, "central fibre of dimension n - p gives the full target",
                                  "dim fibre = " + std::to_string(d));
    out.image.germ = full;
    Ideal sing = singular_locus(base);
    int k = dimension(sing + fibre);
    if (k <= 0) {
      out.icis = Verdict::symbolic(token::kYes, "isolated complete intersection singularity",
                                   "Sing meets the central fibre only at 0");
    } else {
      out.icis = Verdict::symbolic(token::kNo, "isolated complete intersection singularity",
                                   "Sing meets the central fibre in dimension " + std::to_string(k));
    }
  } catch (const BudgetExceeded& e) {
    out.image = Verdict::undecided(std::string("pair budget exceeded: ") + e.what());
    out.icis = Verdict::undecided(out.image.detail);
  }
  return out;
}

Verdict unit_multiple_check(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw Error("unit_multiple_check needs nonzero f and g");
  const char* cite = "f = u g with u a unit at 0";
  try {
    Polynomial d = polynomial_gcd(f, g);
    auto a = exact_divide(f, d);
    auto b = exact_divide(g, d);
    if (!a || !b) return Verdict::undecided("gcd does not divide both functions");
    const bool a_unit = !a->constant_term().is_zero();
    const bool b_unit = !b->constant_term().is_zero();
    if (a_unit && b_unit) {
      std::string u;
      if (b->is_constant()) {
        u = (*a * b->constant_term().inverse()).to_string();
      } else {
        u = "(" + a->to_string() + ") / (" + b->to_string() + ")";
      }
      Verdict v = Verdict::symbolic(token::kYes, cite, "u = " + u);
      v.germ = u;
      return v;
    }
    std::string why = "f / g = (" + a->to_string() + ") / (" + b->to_string() + ") in lowest terms, " +
                      (a_unit ? "denominator" : "numerator") + " vanishes at 0";
    return Verdict::symbolic(token::kNo, cite, why);
  } catch (const BudgetExceeded& e) {
    return Verdict::undecided(std::string("pair budget exceeded: ") + e.what());
  }
}

PairImage classify_image_pair(const MapGerm& g, const AnalyzeOptions& opts, std::vector<NumericCertificate>& certs) {
  if (g.field != Field::Complex || g.components.size() != 2) {
    throw Error("classify_image_pair needs a complex germ with two components");
  }
  MapGerm base = g.kind == GermKind::Fbarg ? detail::pair_of(g) : g;
  const Polynomial& f = base.components[0];
  const Polynomial& h = base.components[1];
  if (f.is_constant() || h.is_constant()) throw Error("classify_image_pair needs non-constant f and g");
  const int n = static_cast<int>(base.source_dim());
  PairImage out;
  try {
    int d = dimension(Ideal(base.source, {f, h}));
    if (d == n - 2) {
      out.kind = PairCase::CommonCodimTwo;
      out.image = Verdict::symbolic(token::kYes, "common zero set of codimension two gives the full target",
                                    "dim Z(f) & Z(g) = " + std::to_string(d));
      out.image.germ = "full target C^2";
      return out;
    }
    Ideal image = detail::graph_image(Ideal(base.source), base.components, base.targets);
    out.elimination = image;
    const bool nested = radical_membership(f, Ideal(base.source, {h})) || radical_membership(h, Ideal(base.source, {f}));
    out.kind = nested ? PairCase::Nested : PairCase::NotNested;
    if (image.is_zero()) {
      if (nested) {
        out.image = Verdict::symbolic(token::kNo, "nested zero sets: the image is a germ iff it is an irreducible curve",
                                      "elimination ideal of the graph is <0>, the image is not a curve");
        return out;
      }
    } else if (image.generators().size() == 1) {
      const Polynomial& curve = image.generators().front();
      BranchCount bc = branch_count(curve);
      out.branches = bc;
      if (nested) {
        // The image of a connected punctured ball lies in a single local
        // branch of the curve and is open in it.
        out.image = Verdict::symbolic(token::kYes,
                                      "nested zero sets: the image is a germ iff it is an irreducible curve",
                                      "image lies in the curve " + curve.to_string());
        out.image.germ = bc.resolved && bc.count == 1 ? "curve <" + curve.to_string() + ">"
                                                      : "one branch of the curve <" + curve.to_string() + ">";
        return out;
      }
      out.image = Verdict::symbolic(token::kNo, "non-nested zero sets: the image is a germ iff it is the full target",
                                    "image lies in the curve " + curve.to_string());
      return out;
    } else if (nested) {
      out.image = Verdict::undecided("elimination ideal " + image.to_string() + " is not principal");
      return out;
    }
    // Not nested and Zariski dense: only the image germ itself can tell.
    if (!opts.run_numeric(false)) {
      out.image = Verdict::undecided("non-nested zero sets with dense image; numeric stage not run");
      return out;
    }
    RealifiedGerm r = realify(base);
    NumericCertificate cert = nh_isolation_test(NumericMap(r.components, r.real_vars), opts.numeric_config,
                                                "image of (f, g) for " + g.name);
    certs.push_back(cert);
    const char* cite = "non-nested zero sets: the image is a germ iff it is the full target";
    if (cert.verdict == verdict::kWellDefined) {
      out.image = Verdict::empirical(token::kYes, cite, "min-norm fibre points shrink to 0");
      out.image.germ = "full target C^2";
    } else if (cert.verdict == verdict::kNotWellDefined) {
      out.image = Verdict::empirical(token::kNo, cite, "min-norm fibre points stay away from 0");
    } else {
      out.image = Verdict::undecided("isolation test inconclusive");
    }
  } catch (const BudgetExceeded& e) {
    out.image = Verdict::undecided(std::string("pair budget exceeded: ") + e.what());
  }
  return out;
}

std::vector<DiscComponent> discriminant(const MapGerm& g, int puiseux_depth) {
  MapGerm base = g.kind == GermKind::Fbarg ? detail::pair_of(g) : g;
  std::vector<DiscComponent> out;
  Ideal sing = singular_locus(base);
  std::vector<Ideal> comps;
  if (sing.is_zero()) {
    comps.push_back(Ideal(base.source));
  } else {
    comps = split_components(sing, base.field);
  }
  for (const auto& s : comps) {
    DiscComponent c;
    c.source = s;
    c.image = detail::graph_image(s, base.components, base.targets);
    c.point = detail::is_origin_ideal(c.image);
    if (s.generators().size() > 1) {
      c.unsplit = std::any_of(s.generators().begin(), s.generators().end(),
                              [](const Polynomial& p) { return p.total_degree() > 1; });
    }
    if (base.components.size() == 2 && c.image.generators().size() == 1 &&
        !c.image.generators().front().is_constant()) {
      c.expansion = puiseux_branches(c.image.generators().front(), puiseux_depth);
      for (const auto& t : tangent_classes(*c.expansion)) c.tangents.push_back(t.to_string());
    }
    out.push_back(std::move(c));
  }
  return out;
}

Verdict singular_values_dim_fbarg(const std::vector<DiscComponent>& disc, const AnalyzeOptions& opts,
                                  std::vector<NumericCertificate>& certs) {
  const char* cite = "critical values of f conj(g) have dimension 1 iff a discriminant branch of (f, g) is "
                     "tangent to a line off the axes";
  std::vector<std::string> lines;
  std::vector<const PuiseuxBranch*> line_branches;
  bool unknown = false;
  for (const auto& c : disc) {
    if (c.point) continue;
    if (!c.expansion) {
      unknown = true;
      continue;
    }
    for (const auto& b : c.expansion->branches) {
      TangentClass t = branch_tangent(b);
      if (t.kind == TangentClass::Kind::Line) {
        lines.push_back(t.to_string());
        line_branches.push_back(&b);
      }
    }
    for (const auto& e : c.expansion->unresolved) {
      TangentClass t = branch_tangent(e);
      if (t.kind == TangentClass::Kind::Line) lines.push_back(t.to_string());
    }
  }
  Verdict v;
  if (!lines.empty()) {
    v = Verdict::symbolic("1", cite, "tangent " + detail::join(lines, ", "));
  } else if (unknown) {
    return Verdict::undecided("a discriminant component is not a principal curve");
  } else {
    v = Verdict::symbolic("0", cite, "every discriminant branch is a point or tangent to an axis");
  }
  if (opts.numeric) {
    for (const auto* b : line_branches) {
      if (b->terms.empty() || b->terms.front().exponent != b->ramification) continue;
      NumericCertificate cert = arc_sampler_fbarg(*b, opts.numeric_config);
      certs.push_back(cert);
      if (cert.verdict != verdict::kDimensionOne) v.detail += "; arc sampler disagrees on " + b->to_string();
    }
  }
  return v;
}

}  // namespace germ
