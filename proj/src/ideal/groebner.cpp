#include <algorithm>
#include <atomic>

#include "germ/ideal/ideal.hpp"

namespace germ {

namespace {

std::atomic<std::size_t> g_pair_budget{50'000};

struct Term {
  Monomial m;
  Scalar c;
};

// Terms sorted greatest first under the active order.
using Sparse = std::vector<Term>;

Sparse to_sparse(const Polynomial& p, const MonomialOrder& order) {
  Sparse s;
  s.reserve(p.size());
  for (const auto& [m, c] : p.terms()) s.push_back({m, c});
  std::sort(s.begin(), s.end(), [&](const Term& a, const Term& b) { return order.greater(a.m, b.m); });
  return s;
}

Polynomial from_sparse(const Sparse& s, const Variables& vars) {
  Polynomial p(vars);
  for (const auto& t : s) p.add_term(t.m, t.c);
  return p;
}

// f[from..] - c * m * g[1..]; the leading terms are assumed to cancel.
Sparse subtract_multiple(const Sparse& f, std::size_t from, const Scalar& c, const Monomial& m,
                         const Sparse& g, const MonomialOrder& order) {
  Sparse out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from + 1;
  std::size_t j = 1;
  while (i < f.size() || j < g.size()) {
    if (j >= g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].m * m;
    if (i >= f.size()) {
      out.push_back({gm, -(c * g[j].c)});
      ++j;
      continue;
    }
    int cmp = order.compare(f[i].m, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -(c * g[j].c)});
      ++j;
    } else {
      Scalar v = f[i].c - c * g[j].c;
      if (!v.is_zero()) out.push_back({f[i].m, v});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of f modulo the (monic) divisors.
Sparse reduce(Sparse f, const std::vector<const Sparse*>& divisors, const MonomialOrder& order) {
  Sparse rem;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Term& lead = f[pos];
    const Sparse* hit = nullptr;
    for (const Sparse* g : divisors) {
      if ((*g)[0].m.divides(lead.m)) {
        hit = g;
        break;
      }
    }
    if (hit == nullptr) {
      rem.push_back(lead);
      ++pos;
      continue;
    }
    f = subtract_multiple(f, pos, lead.c, lead.m / (*hit)[0].m, *hit, order);
    pos = 0;
  }
  return rem;
}

void make_monic(Sparse& s) {
  if (s.empty() || s[0].c.is_one()) return;
  Scalar inv = s[0].c.inverse();
  for (auto& t : s) t.c *= inv;
}

Sparse s_polynomial(const Sparse& a, const Sparse& b, const MonomialOrder& order) {
  Monomial l = Monomial::lcm(a[0].m, b[0].m);
  Monomial ma = l / a[0].m;
  Monomial mb = l / b[0].m;
  Sparse sa;
  sa.reserve(a.size());
  for (const auto& t : a) sa.push_back({t.m * ma, t.c});
  // sa - mb * b, whose leading terms cancel (both monic).
  Sparse out = subtract_multiple(sa, 0, Scalar(1), mb, b, order);
  return out;
}

struct Pair {
  std::size_t a;
  std::size_t b;
  Monomial lcm;
  std::size_t serial;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, std::size_t budget) : order_(order), budget_(budget) {}

  // Returns false when the unit ideal was detected.
  bool add(Sparse h) {
    make_monic(h);
    if (h[0].m.is_one()) return false;
    store_.push_back(std::move(h));
    active_.push_back(false);
    update(store_.size() - 1);
    return true;
  }

  // Inputs are reduced first so that the active set stays minimal.
  bool add_input(Sparse f) {
    Sparse h = reduce(std::move(f), divisors(), order_);
    if (h.empty()) return true;
    return add(std::move(h));
  }

  bool run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        int c = order_.compare(it->lcm, best->lcm);
        if (c < 0 || (c == 0 && it->serial < best->serial)) best = it;
      }
      Pair p = *best;
      pairs_.erase(best);
      if (++processed_ > budget_) {
        throw BudgetExceeded("Groebner basis pair budget of " + std::to_string(budget_) + " exceeded");
      }
      Sparse s = s_polynomial(store_[p.a], store_[p.b], order_);
      Sparse h = reduce(std::move(s), divisors(), order_);
      if (h.empty()) continue;
      if (!add(std::move(h))) return false;
    }
    return true;
  }

  std::vector<Sparse> reduced_basis() const {
    std::vector<Sparse> basis;
    for (std::size_t i = 0; i < store_.size(); ++i) {
      if (active_[i]) basis.push_back(store_[i]);
    }
    std::sort(basis.begin(), basis.end(),
              [&](const Sparse& x, const Sparse& y) { return order_.greater(x[0].m, y[0].m); });
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<const Sparse*> others;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j != i) others.push_back(&basis[j]);
      }
      Sparse tail(basis[i].begin() + 1, basis[i].end());
      Sparse red = reduce(std::move(tail), others, order_);
      Sparse full;
      full.reserve(red.size() + 1);
      full.push_back(basis[i][0]);
      full.insert(full.end(), red.begin(), red.end());
      basis[i] = std::move(full);
    }
    return basis;
  }

 private:
  std::vector<const Sparse*> divisors() const {
    std::vector<const Sparse*> out;
    for (std::size_t i = 0; i < store_.size(); ++i) {
      if (active_[i]) out.push_back(&store_[i]);
    }
    return out;
  }

  const Monomial& lm(std::size_t i) const { return store_[i][0].m; }

  // Gebauer-Moeller installation of the new element h.
  void update(std::size_t h) {
    const Monomial& hm = lm(h);
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < store_.size(); ++i) {
      if (active_[i]) candidates.push_back(i);
    }
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      std::size_t g1 = candidates[k];
      Monomial l1 = Monomial::lcm(hm, lm(g1));
      bool keep = Monomial::coprime(hm, lm(g1));
      if (!keep) {
        keep = true;
        for (std::size_t r = k + 1; r < candidates.size() && keep; ++r) {
          if (Monomial::lcm(hm, lm(candidates[r])).divides(l1)) keep = false;
        }
        for (std::size_t g2 : kept) {
          if (!keep) break;
          if (Monomial::lcm(hm, lm(g2)).divides(l1)) keep = false;
        }
      }
      if (keep) kept.push_back(g1);
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      bool drop = hm.divides(p.lcm) && Monomial::lcm(lm(p.a), hm) != p.lcm &&
                  Monomial::lcm(lm(p.b), hm) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (std::size_t g : kept) {
      if (Monomial::coprime(hm, lm(g))) continue;
      next.push_back({g, h, Monomial::lcm(hm, lm(g)), serial_++});
    }
    pairs_ = std::move(next);
    for (std::size_t i = 0; i < store_.size(); ++i) {
      if (active_[i] && hm.divides(lm(i))) active_[i] = false;
    }
    active_[h] = true;
  }

  const MonomialOrder& order_;
  std::size_t budget_;
  std::size_t processed_ = 0;
  std::size_t serial_ = 0;
  std::vector<Sparse> store_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::size_t default_pair_budget() { return g_pair_budget.load(); }
void set_default_pair_budget(std::size_t budget) { g_pair_budget.store(budget); }

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error("leading monomial of the zero polynomial");
  auto it = p.terms().begin();
  Monomial best = it->first;
  for (++it; it != p.terms().end(); ++it) {
    if (order.greater(it->first, best)) best = it->first;
  }
  return best;
}

bool GroebnerBasis::is_unit() const {
  return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

Monomial GroebnerBasis::leading_monomial(std::size_t i) const {
  return germ::leading_monomial(basis[i], order);
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, std::size_t pair_budget) {
  if (order.priority().size() != ideal.variables().size()) {
    throw Error("monomial order does not match the ring");
  }
  GroebnerBasis gb{ideal.variables(), order, {}, true};
  Buchberger engine(order, pair_budget);
  std::vector<Sparse> inputs;
  for (const auto& g : ideal.generators()) inputs.push_back(to_sparse(g, order));
  // Feed smaller generators first; the result does not depend on this.
  std::stable_sort(inputs.begin(), inputs.end(),
                   [&](const Sparse& a, const Sparse& b) { return order.greater(b[0].m, a[0].m); });
  bool unit = false;
  for (auto& s : inputs) {
    if (!engine.add_input(std::move(s))) {
      unit = true;
      break;
    }
  }
  if (!unit) unit = !engine.run();
  if (unit) {
    gb.basis.push_back(Polynomial(ideal.variables(), Scalar(1)));
    return gb;
  }
  for (const auto& s : engine.reduced_basis()) gb.basis.push_back(from_sparse(s, ideal.variables()));
  return gb;
}

GroebnerBasis buchberger(const Ideal& ideal) {
  return buchberger(ideal, MonomialOrder::grevlex(ideal.variables().size()));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  Polynomial q = remap(p, gb.vars);
  std::vector<Sparse> basis;
  basis.reserve(gb.basis.size());
  for (const auto& g : gb.basis) {
    basis.push_back(to_sparse(g, gb.order));
    make_monic(basis.back());
  }
  std::vector<const Sparse*> divisors;
  for (const auto& b : basis) divisors.push_back(&b);
  return from_sparse(reduce(to_sparse(q, gb.order), divisors, gb.order), gb.vars);
}

}  // namespace germ
