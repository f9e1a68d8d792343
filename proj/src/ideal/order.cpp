#include <numeric>

#include "germ/ideal/ideal.hpp"

namespace germ {

namespace {

std::vector<std::size_t> identity_priority(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block)
    : kind_(kind), priority_(std::move(priority)), block_(block) {
  std::vector<bool> seen(priority_.size(), false);
  for (std::size_t v : priority_) {
    if (v >= priority_.size() || seen[v]) throw Error("monomial order: priority list is not a permutation");
    seen[v] = true;
  }
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return lex(identity_priority(nvars)); }
MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return grevlex(identity_priority(nvars)); }

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
  return MonomialOrder(Kind::Lex, std::move(priority), 0);
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> priority) {
  return MonomialOrder(Kind::Grevlex, std::move(priority), 0);
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& drop) {
  std::vector<bool> dropped(nvars, false);
  std::vector<std::size_t> priority;
  for (std::size_t v : drop) {
    if (v >= nvars) throw Error("elimination order: variable index out of range");
    if (!dropped[v]) priority.push_back(v);
    dropped[v] = true;
  }
  std::size_t block = priority.size();
  for (std::size_t v = 0; v < nvars; ++v) {
    if (!dropped[v]) priority.push_back(v);
  }
  return MonomialOrder(Kind::Block, std::move(priority), block);
}

int MonomialOrder::grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                 std::size_t hi) const {
  unsigned da = 0;
  unsigned db = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    da += a[priority_[k]];
    db += b[priority_[k]];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = hi; k > lo; --k) {
    std::size_t v = priority_[k - 1];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t v : priority_) {
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
      }
      return 0;
    case Kind::Grevlex:
      return grevlex_range(a, b, 0, priority_.size());
    case Kind::Block: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, priority_.size());
    }
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Block:
      return "block(" + std::to_string(block_) + ")";
  }
  return "";
}

}  // namespace germ
