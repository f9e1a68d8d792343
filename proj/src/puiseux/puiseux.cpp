#include "germ/puiseux/puiseux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "germ/poly/operations.hpp"

namespace germ {

namespace {

using Point = std::pair<int, int>;

// Levels beyond the requested depth used only to separate coincident branches.
constexpr int kExtraLevels = 24;

Scalar power(const Scalar& x, long e) {
  Scalar base = e < 0 ? x.inverse() : x;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar r(1);
  while (n > 0) {
    if (n & 1UL) r *= base;
    n >>= 1UL;
    if (n > 0) base *= base;
  }
  return r;
}

long cross(const Point& o, const Point& a, const Point& b) {
  return static_cast<long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long>(a.second - o.second) * (b.first - o.first);
}

void check_plane_curve(const Polynomial& h) {
  if (h.variables().size() != 2) throw Error("plane curve expected: polynomial in exactly two variables");
  if (h.is_zero()) throw Error("plane curve of the zero polynomial");
  if (!h.constant_term().is_zero()) throw Error("not a germ through origin");
}

}  // namespace

NewtonPolygon newton_polygon(const Polynomial& h) {
  check_plane_curve(h);
  NewtonPolygon out{{}, {}, 0, 0, h};
  int min_i = 1 << 30;
  int min_j = 1 << 30;
  for (const auto& [m, c] : h.terms()) {
    min_i = std::min<int>(min_i, m[0]);
    min_j = std::min<int>(min_j, m[1]);
  }
  out.u_factor = min_i;
  out.v_factor = min_j;
  Polynomial cof(h.variables());
  std::map<Point, Scalar> coeff;
  for (const auto& [m, c] : h.terms()) {
    Point pt{m[0] - min_i, m[1] - min_j};
    Monomial n;
    n.set(0, static_cast<unsigned>(pt.first));
    n.set(1, static_cast<unsigned>(pt.second));
    cof.add_term(n, c);
    coeff[pt] = c;
    out.points.push_back(pt);
  }
  out.cofactor = cof;
  std::sort(out.points.begin(), out.points.end());

  // Lower hull by the monotone chain; the compact edges run from the point on
  // the v side down to the first point on j = 0.
  std::vector<Point> hull;
  for (const auto& pt : out.points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const Point& a = hull[k];
    const Point& b = hull[k + 1];
    if (a.second == 0) break;
    int di = b.first - a.first;
    int dj = a.second - b.second;
    if (di <= 0 || dj <= 0) continue;
    int g = std::gcd(di, dj);
    NewtonEdge e;
    e.p = dj / g;
    e.q = di / g;
    e.weight = e.p * a.first + e.q * a.second;
    e.start = a;
    e.end = b;
    std::vector<Scalar> ec(static_cast<std::size_t>(a.second + 1));
    std::vector<Scalar> phi(static_cast<std::size_t>(g + 1));
    for (const auto& [pt, c] : coeff) {
      if (e.p * pt.first + e.q * pt.second != e.weight) continue;
      ec[static_cast<std::size_t>(pt.second)] = c;
      phi[static_cast<std::size_t>((pt.first - a.first) / e.q)] = c;
    }
    e.edge_polynomial = UniPoly(ec);
    e.characteristic = UniPoly(phi);
    out.edges.push_back(e);
  }
  return out;
}

namespace {

// Parametrization carried through the iteration: the original curve is
// h(U t^P, known(t) + T t^E w) = const * t^N * hk(t, w).
struct State {
  int P = 1;
  Scalar U = Scalar(1);
  std::vector<PuiseuxTerm> known;
  Scalar T = Scalar(1);
  int E = 0;
  long N = 0;
  int level = 0;
};

class Expander {
 public:
  Expander(int depth, PuiseuxExpansion& out) : depth_(depth), out_(out) {}

  void run(const Polynomial& hk, const State& s) {
    const Variables& vars = hk.variables();
    // w^m divides hk: the current truncation is an exact branch of multiplicity m.
    int m = 1 << 30;
    for (const auto& [mono, c] : hk.terms()) m = std::min<int>(m, mono[1]);
    Polynomial rest = hk;
    if (m > 0) {
      emit(s, m, true, -1);
      Polynomial r(vars);
      for (const auto& [mono, c] : hk.terms()) {
        Monomial n = mono;
        n.set(1, mono[1] - static_cast<unsigned>(m));
        r.add_term(n, c);
      }
      rest = r;
      if (!rest.constant_term().is_zero()) return;
    }
    // Exactly one branch remains once the w-order at t = 0 is one.
    int w_order = 1 << 30;
    for (const auto& [mono, c] : rest.terms()) {
      if (mono[0] == 0) w_order = std::min<int>(w_order, mono[1]);
    }
    if (static_cast<int>(s.known.size()) >= depth_) {
      if (w_order == 1) {
        long ord = -1;
        if (m == 0) {
          ord = 1L << 40;
          for (const auto& [mono, c] : hk.terms()) {
            if (mono[1] == 0) ord = std::min<long>(ord, mono[0]);
          }
          ord += s.N;
        }
        emit(s, 1, false, ord);
        return;
      }
      if (s.level >= depth_ + kExtraLevels) {
        UnresolvedEdge u;
        u.degree = w_order;
        u.prefix = branch_of(s, w_order, false, 0);
        u.v_order_share = s.P * w_order;
        out_.unresolved.push_back(u);
        return;
      }
    }
    NewtonPolygon poly = newton_polygon(rest);
    for (const auto& e : poly.edges) {
      RootSearch roots = find_roots(e.characteristic);
      for (const auto& [xi, mult] : roots.roots) {
        (void)mult;
        if (xi.is_zero()) continue;
        descend(rest, s, e, xi);
      }
      if (roots.remainder.degree() >= 1) {
        UnresolvedEdge u;
        u.p = e.p;
        u.q = e.q;
        u.characteristic = roots.remainder;
        u.degree = roots.remainder.degree();
        u.squarefree = gcd(roots.remainder, roots.remainder.derivative()).degree() == 0;
        u.prefix = branch_of(s, 1, false, 0);
        u.v_order_share = s.P * e.p * u.degree;
        out_.unresolved.push_back(u);
      }
    }
  }

 private:
  void descend(const Polynomial& hk, const State& s, const NewtonEdge& e, const Scalar& xi) {
    // gamma^q / beta^p = xi with gamma = xi^a, beta = xi^b and q a - p b = 1.
    int a = 0;
    while ((static_cast<long>(e.q) * a - 1) % e.p != 0) ++a;
    long b = (static_cast<long>(e.q) * a - 1) / e.p;
    Scalar gamma = power(xi, a);
    Scalar beta = power(xi, b);
    const Variables& vars = hk.variables();
    Polynomial t = Polynomial::variable(vars, 0);
    Polynomial w = Polynomial::variable(vars, 1);
    Polynomial t_image = Polynomial(vars, gamma) * t.pow(static_cast<unsigned>(e.p));
    Polynomial w_image = t.pow(static_cast<unsigned>(e.q)) * (Polynomial(vars, beta) + w);
    Polynomial next = substitute(hk, {t_image, w_image});
    Polynomial divided(vars);
    for (const auto& [mono, c] : next.terms()) {
      Monomial n = mono;
      n.set(0, mono[0] - static_cast<unsigned>(e.weight));
      divided.add_term(n, c);
    }
    State n;
    n.P = s.P * e.p;
    n.U = s.U * power(gamma, s.P);
    for (const auto& term : s.known) {
      n.known.push_back({term.exponent * e.p, term.coefficient * power(gamma, term.exponent)});
    }
    Scalar tg = s.T * power(gamma, s.E);
    n.known.push_back({s.E * e.p + e.q, tg * beta});
    n.T = tg;
    n.E = s.E * e.p + e.q;
    n.N = s.N * e.p + e.weight;
    n.level = s.level + 1;
    run(divided, n);
  }

  PuiseuxBranch branch_of(const State& s, int multiplicity, bool exact, long order) const {
    PuiseuxBranch b;
    b.ramification = s.P;
    b.u_coefficient = s.U;
    b.terms = s.known;
    b.multiplicity = multiplicity;
    b.exact = exact;
    b.guaranteed_order = order;
    Scalar r;
    if (!s.U.is_one() && gaussian_root(s.U, static_cast<unsigned>(s.P), r)) {
      // t -> t / r turns U t^P into t^P.
      Scalar inv = r.inverse();
      b.u_coefficient = Scalar(1);
      for (auto& term : b.terms) term.coefficient *= power(inv, term.exponent);
    }
    return b;
  }

  void emit(const State& s, int multiplicity, bool exact, long order) {
    out_.branches.push_back(branch_of(s, multiplicity, exact, order));
  }

  int depth_;
  PuiseuxExpansion& out_;
};

}  // namespace

PuiseuxExpansion puiseux_branches(const Polynomial& h, int depth) {
  if (depth < 1) throw Error("Puiseux depth must be at least 1");
  NewtonPolygon poly = newton_polygon(h);
  PuiseuxExpansion out;
  if (poly.u_factor > 0) out.axes.push_back({Axis::V, poly.u_factor});
  if (poly.v_factor > 0) out.axes.push_back({Axis::U, poly.v_factor});
  if (poly.cofactor.constant_term().is_zero()) {
    Variables tw({"t", "w"});
    Polynomial start(tw);
    for (const auto& [m, c] : poly.cofactor.terms()) start.add_term(m, c);
    Expander(depth, out).run(start, State{});
  }
  return out;
}

BranchCount branch_count(const PuiseuxExpansion& e) {
  BranchCount out;
  out.count = static_cast<int>(e.branches.size() + e.axes.size());
  for (const auto& u : e.unresolved) {
    out.count += u.degree;
    if (!u.squarefree) out.resolved = false;
  }
  return out;
}

BranchCount branch_count(const Polynomial& h) { return branch_count(puiseux_branches(h, 1)); }

TangentClass branch_tangent(const PuiseuxBranch& b) {
  if (b.terms.empty()) return {TangentClass::Kind::UAxis, Scalar(), false};
  const auto& first = b.terms.front();
  if (b.ramification < first.exponent) return {TangentClass::Kind::UAxis, Scalar(), false};
  if (b.ramification > first.exponent) return {TangentClass::Kind::VAxis, Scalar(), false};
  return {TangentClass::Kind::Line, first.coefficient / b.u_coefficient, true};
}

TangentClass branch_tangent(const UnresolvedEdge& e) {
  if (!e.prefix.terms.empty()) return branch_tangent(e.prefix);
  if (e.p < e.q) return {TangentClass::Kind::UAxis, Scalar(), false};
  if (e.p > e.q) return {TangentClass::Kind::VAxis, Scalar(), false};
  // Roots of the characteristic polynomial are nonzero, so the line is not an axis.
  return {TangentClass::Kind::Line, Scalar(), false};
}

std::vector<TangentClass> tangent_classes(const PuiseuxExpansion& e) {
  std::vector<TangentClass> out;
  for (const auto& a : e.axes) {
    out.push_back({a.axis == Axis::U ? TangentClass::Kind::UAxis : TangentClass::Kind::VAxis, Scalar(), false});
  }
  for (const auto& b : e.branches) out.push_back(branch_tangent(b));
  for (const auto& u : e.unresolved) out.push_back(branch_tangent(u));
  return out;
}

std::string TangentClass::to_string() const {
  switch (kind) {
    case Kind::UAxis:
      return "u-axis";
    case Kind::VAxis:
      return "v-axis";
    case Kind::Line:
      break;
  }
  if (!slope_known) return "v = c*u (c outside Q(i))";
  if (slope.is_one()) return "v = u";
  if (slope == Scalar(-1)) return "v = -u";
  return "v = " + slope.str() + "*u";
}

namespace {

std::string power_term(const Scalar& c, int exponent) {
  std::string mono = exponent == 1 ? "t" : "t^" + std::to_string(exponent);
  if (c.is_one()) return mono;
  if (c == Scalar(-1)) return "-" + mono;
  return c.str() + "*" + mono;
}

}  // namespace

std::string PuiseuxBranch::to_string() const {
  std::ostringstream os;
  os << "u = " << power_term(u_coefficient, ramification) << ", v = ";
  if (terms.empty()) os << "0";
  for (std::size_t k = 0; k < terms.size(); ++k) {
    std::string s = power_term(terms[k].coefficient, terms[k].exponent);
    if (k == 0) {
      os << s;
    } else if (s.front() == '-') {
      os << " - " << s.substr(1);
    } else {
      os << " + " << s;
    }
  }
  if (!exact) os << " + ...";
  return os.str();
}

}  // namespace germ
