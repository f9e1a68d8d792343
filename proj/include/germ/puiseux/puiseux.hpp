#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germ/poly/polynomial.hpp"
#include "germ/poly/univariate.hpp"

namespace germ {

constexpr int kDefaultPuiseuxDepth = 8;

/// Compact edge of the Newton polygon of h(u, v). Points (i, j) on the edge
/// satisfy p*i + q*j = weight; a branch along it starts u ~ t^p, v ~ t^q.
struct NewtonEdge {
  int p = 1;
  int q = 1;
  int weight = 0;
  /// End on the v side (smaller u-exponent) and end on the u side.
  std::pair<int, int> start;
  std::pair<int, int> end;
  /// E(c) = sum of a_ij c^j over the edge points.
  UniPoly edge_polynomial;
  /// Phi(Z) = sum a_k Z^k over the points (i0 + q k, j0 - p k); E(c) = c^j1 Phi-like.
  UniPoly characteristic;
};

struct NewtonPolygon {
  /// Support of the cofactor after the axis factors are split off.
  std::vector<std::pair<int, int>> points;
  std::vector<NewtonEdge> edges;
  /// Power of u divided out (the component {u = 0}, i.e. the v-axis).
  int u_factor = 0;
  /// Power of v divided out (the component {v = 0}, i.e. the u-axis).
  int v_factor = 0;
  Polynomial cofactor;
};

/// h must be a nonzero polynomial in two variables (u first) with h(0,0) = 0.
NewtonPolygon newton_polygon(const Polynomial& h);

struct PuiseuxTerm {
  int exponent = 0;
  Scalar coefficient;
};

/// u = u_coefficient * t^ramification, v = sum of terms. The coefficient of
/// u is 1 whenever the needed root exists in Q(i).
struct PuiseuxBranch {
  int ramification = 1;
  Scalar u_coefficient = Scalar(1);
  std::vector<PuiseuxTerm> terms;
  int multiplicity = 1;
  bool exact = false;
  /// ord_t h(u(t), v(t)) for the returned terms; -1 when the substitution vanishes.
  long guaranteed_order = 0;

  /// "u = t^2, v = t^3" with " + ..." when truncated.
  std::string to_string() const;
};

enum class Axis { U, V };

/// A coordinate axis contained in the curve: Axis::U is the curve {v = 0}.
struct AxisComponent {
  Axis axis = Axis::U;
  int multiplicity = 1;
};

/// Roots of a characteristic polynomial outside Q(i).
struct UnresolvedEdge {
  int p = 1;
  int q = 1;
  UniPoly characteristic;
  int degree = 0;
  bool squarefree = false;
  /// Expansion found before this edge (no terms at the first level).
  PuiseuxBranch prefix;
  /// Contribution to the v-order of h(0, v).
  int v_order_share = 0;
};

struct PuiseuxExpansion {
  std::vector<PuiseuxBranch> branches;
  std::vector<AxisComponent> axes;
  std::vector<UnresolvedEdge> unresolved;
};

PuiseuxExpansion puiseux_branches(const Polynomial& h, int depth = kDefaultPuiseuxDepth);

struct BranchCount {
  int count = 0;
  /// False when a count is only an upper bound.
  bool resolved = true;
};

BranchCount branch_count(const Polynomial& h);
BranchCount branch_count(const PuiseuxExpansion& e);

struct TangentClass {
  enum class Kind { UAxis, VAxis, Line };
  Kind kind = Kind::Line;
  /// Slope c of v = c*u, when known exactly.
  Scalar slope;
  bool slope_known = false;

  bool is_axis() const { return kind != Kind::Line; }
  /// "u-axis", "v-axis", "v = -4*u" or "v = c*u (c outside Q(i))".
  std::string to_string() const;
};

TangentClass branch_tangent(const PuiseuxBranch& b);
TangentClass branch_tangent(const UnresolvedEdge& e);

/// Tangent classes of every branch, axis component and unresolved edge of h.
std::vector<TangentClass> tangent_classes(const PuiseuxExpansion& e);

}  // namespace germ
