#include "germ/poly/polynomial.hpp"

#include <sstream>

namespace germ {

Variables::Variables(std::vector<std::string> names) {
  if (names.size() > kMaxVariables) {
    throw Error("too many variables (" + std::to_string(names.size()) + " > " +
                std::to_string(kMaxVariables) + ")");
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw Error("duplicate variable '" + names[i] + "'");
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Variables::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Variables::require(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw Error("unknown variable '" + std::string(name) + "'");
  return *idx;
}

Variables Variables::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = *names_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Variables(std::move(all));
}

Polynomial::Polynomial(Variables vars, const Scalar& c) : vars_(std::move(vars)) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::variable(const Variables& vars, std::size_t index) {
  return term(vars, Monomial::variable(index), Scalar(1));
}

Polynomial Polynomial::variable(const Variables& vars, std::string_view name) {
  return variable(vars, vars.require(name));
}

Polynomial Polynomial::term(const Variables& vars, const Monomial& m, const Scalar& c) {
  Polynomial p(vars);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_real() const {
  for (const auto& [m, c] : terms_) {
    if (!c.is_real()) return false;
  }
  return true;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  return true;
}

Scalar Polynomial::constant_term() const { return coefficient(Monomial()); }

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

int Polynomial::order() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (const auto& [m, c] : terms_) {
      if (m[i] != 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (vars_ != o.vars_) {
    throw Error("polynomials live in different rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(vars_, Scalar(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::conj_coefficients() const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c.conj());
  return r;
}

Polynomial Polynomial::real_part() const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) r.add_term(m, Scalar(c.re()));
  return r;
}

Polynomial Polynomial::imag_part() const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) r.add_term(m, Scalar(c.im()));
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coefficient().inverse();
}

bool Polynomial::proportional_to(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (terms_.size() != o.terms_.size()) return false;
  return monic() == remap(o, vars_).monic();
}

std::string monomial_string(const Monomial& m, const Variables& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    // Pull a leading minus out of real and purely imaginary coefficients.
    bool negative = c.is_atomic() && (c.is_real() ? sgn(c.re()) < 0 : sgn(c.im()) < 0);
    Scalar shown = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_string(m, vars_);
    if (mono.empty()) {
      os << shown.str();
    } else if (shown.is_one()) {
      os << mono;
    } else {
      os << shown.str() << "*" << mono;
    }
  }
  return os.str();
}

Polynomial remap(const Polynomial& p, const Variables& target) {
  if (p.variables() == target) return p;
  std::vector<std::size_t> where(p.variables().size(), 0);
  std::vector<bool> used(p.variables().size(), false);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < p.variables().size(); ++i) used[i] = used[i] || m[i] != 0;
  }
  for (std::size_t i = 0; i < p.variables().size(); ++i) {
    if (!used[i]) continue;
    auto idx = target.index_of(p.variables().name(i));
    if (!idx) throw Error("variable '" + p.variables().name(i) + "' missing from target ring");
    where[i] = *idx;
  }
  Polynomial r(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial n;
    for (std::size_t i = 0; i < p.variables().size(); ++i) {
      if (m[i] != 0) n.set(where[i], m[i]);
    }
    r.add_term(n, c);
  }
  return r;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.variables().size()) {
    throw Error("substitute: expected " + std::to_string(p.variables().size()) + " images");
  }
  if (images.empty()) return p;
  const Variables& ring = images.front().variables();
  // Cache powers of each image as they are requested.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(ring, Scalar(1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial r(ring);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t(ring, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (m[i] != 0) t *= power(i, m[i]);
    }
    r += t;
  }
  return r;
}

}  // namespace germ
