#include <algorithm>
#include <bit>
#include <sstream>

#include "germ/ideal/ideal.hpp"
#include "germ/poly/operations.hpp"

namespace germ {

Ideal::Ideal(Variables vars, const std::vector<Polynomial>& gens) : vars_(std::move(vars)) {
  for (const auto& g : gens) add(g);
}

bool Ideal::is_real() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_real(); });
}

void Ideal::add(const Polynomial& p) {
  if (p.is_zero()) return;
  gens_.push_back(remap(p, vars_));
}

Ideal Ideal::operator+(const Ideal& o) const {
  Ideal r = *this;
  for (const auto& g : o.gens_) r.add(g);
  return r;
}

Ideal Ideal::operator*(const Ideal& o) const {
  Ideal r(vars_);
  for (const auto& a : gens_) {
    for (const auto& b : o.gens_) r.add(a * remap(b, vars_));
  }
  return r;
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "<";
  if (gens_.empty()) os << "0";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) os << ", ";
    os << gens_[i].to_string();
  }
  os << ">";
  return os.str();
}

namespace {

std::string fresh_name(const Variables& vars, const std::string& base) {
  std::string name = base;
  for (int k = 1; vars.index_of(name); ++k) name = base + std::to_string(k);
  return name;
}

std::vector<std::uint32_t> leading_masks(const GroebnerBasis& gb, bool& unit) {
  std::vector<std::uint32_t> masks;
  unit = false;
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    Monomial m = gb.leading_monomial(i);
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < gb.vars.size(); ++v) {
      if (m[v] != 0) mask |= 1U << v;
    }
    if (mask == 0) unit = true;
    masks.push_back(mask);
  }
  return masks;
}

// A set S of variables is independent when no leading monomial is supported inside S.
struct IndependentSearch {
  const std::vector<std::uint32_t>& masks;
  std::size_t n;
  std::uint32_t best = 0;
  int best_size = -1;

  bool independent(std::uint32_t s) const {
    return std::none_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & ~s) == 0; });
  }

  void search(std::size_t next, std::uint32_t current) {
    int size = std::popcount(current);
    if (size > best_size) {
      best_size = size;
      best = current;
    }
    if (size + static_cast<int>(n - next) <= best_size) return;
    for (std::size_t v = next; v < n; ++v) {
      std::uint32_t with = current | (1U << v);
      // Subsets of independent sets are independent, so pruning here is exact.
      if (independent(with)) search(v + 1, with);
    }
  }
};

}  // namespace

int dimension(const GroebnerBasis& gb) {
  bool unit = false;
  auto masks = leading_masks(gb, unit);
  if (unit) return -1;
  IndependentSearch s{masks, gb.vars.size()};
  s.search(0, 0);
  return s.best_size;
}

int dimension(const Ideal& ideal) { return dimension(buchberger(ideal)); }

std::vector<std::size_t> independent_set(const GroebnerBasis& gb) {
  bool unit = false;
  auto masks = leading_masks(gb, unit);
  std::vector<std::size_t> out;
  if (unit) return out;
  IndependentSearch s{masks, gb.vars.size()};
  s.search(0, 0);
  for (std::size_t v = 0; v < gb.vars.size(); ++v) {
    if (s.best & (1U << v)) out.push_back(v);
  }
  return out;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop) {
  std::vector<std::size_t> idx;
  for (const auto& name : drop) idx.push_back(ideal.variables().require(name));
  const Variables& vars = ideal.variables();
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::elimination(vars.size(), idx));
  Ideal out(vars);
  for (const auto& g : gb.basis) {
    bool free = true;
    for (std::size_t v : idx) free = free && g.degree_in(v) <= 0;
    if (free) out.add(g);
  }
  return out;
}

bool radical_membership(const Polynomial& p, const Ideal& ideal) {
  const Variables& vars = ideal.variables();
  Variables ext = vars.extended({fresh_name(vars, "t_")});
  Ideal big(ext, ideal.generators());
  Polynomial t = Polynomial::variable(ext, vars.size());
  big.add(Polynomial(ext, Scalar(1)) - t * remap(p, ext));
  return buchberger(big).is_unit();
}

bool contains(const Ideal& ideal, const Polynomial& p) {
  if (p.is_zero()) return true;
  return normal_form(p, buchberger(ideal)).is_zero();
}

bool contains(const Ideal& a, const Ideal& b) {
  GroebnerBasis gb = buchberger(a);
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const Polynomial& g) { return normal_form(g, gb).is_zero(); });
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  Ideal bb(a.variables(), b.generators());
  GroebnerBasis ga = buchberger(a);
  GroebnerBasis gb = buchberger(bb);
  return ga.basis == gb.basis;
}

Ideal canonical(const Ideal& ideal) { return buchberger(ideal).ideal(); }

Ideal intersect(const Ideal& a, const Ideal& b) {
  const Variables& vars = a.variables();
  if (a.is_zero() || b.is_zero()) return Ideal(vars);
  std::string tname = fresh_name(vars, "t_");
  Variables ext = vars.extended({tname});
  Polynomial t = Polynomial::variable(ext, vars.size());
  Polynomial one_minus_t = Polynomial(ext, Scalar(1)) - t;
  Ideal big(ext);
  for (const auto& g : a.generators()) big.add(t * remap(g, ext));
  for (const auto& g : b.generators()) big.add(one_minus_t * remap(g, ext));
  Ideal elim = eliminate(big, {tname});
  Ideal out(vars);
  for (const auto& g : elim.generators()) out.add(remap(g, vars));
  return out;
}

namespace {

Ideal saturate_one(const Ideal& ideal, const Polynomial& j) {
  const Variables& vars = ideal.variables();
  std::string tname = fresh_name(vars, "t_");
  Variables ext = vars.extended({tname});
  Polynomial t = Polynomial::variable(ext, vars.size());
  Ideal big(ext, ideal.generators());
  big.add(Polynomial(ext, Scalar(1)) - t * remap(j, ext));
  Ideal elim = eliminate(big, {tname});
  Ideal out(vars);
  for (const auto& g : elim.generators()) out.add(remap(g, vars));
  return out;
}

}  // namespace

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  const Variables& vars = ideal.variables();
  if (by.is_zero()) return Ideal(vars, {Polynomial(vars, Scalar(1))});
  Ideal result;
  bool first = true;
  for (const auto& j : by.generators()) {
    Ideal s = saturate_one(ideal, remap(j, vars));
    result = first ? s : intersect(result, s);
    first = false;
  }
  return canonical(result);
}

bool contains_origin(const Ideal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Polynomial& g) { return g.constant_term().is_zero(); });
}

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  const Variables& vars = a.variables();
  Polynomial bb = remap(b, vars);
  if (a.is_constant() || bb.is_constant()) return Polynomial(vars, Scalar(1));
  if (exact_divide(bb, a)) return primitive_part(a);
  if (exact_divide(a, bb)) return primitive_part(bb);
  Ideal meet = intersect(Ideal(vars, {a}), Ideal(vars, {bb}));
  if (meet.generators().size() != 1) throw Error("gcd: intersection of principal ideals is not principal");
  auto g = exact_divide(a * bb, meet.generators()[0]);
  if (!g) throw Error("gcd: lcm does not divide the product");
  return primitive_part(*g);
}

}  // namespace germ
