#include "germ/poly/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace germ {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(unsigned degree, const Scalar& c) {
  std::vector<Scalar> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  Scalar inv = leading().inverse();
  std::vector<Scalar> v = c_;
  for (auto& x : v) x *= inv;
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw Error("univariate division by zero");
  std::vector<Scalar> rem = c_;
  int dd = divisor.degree();
  if (degree() < dd) return {UniPoly(), *this};
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd + 1));
  Scalar inv = divisor.leading().inverse();
  for (int k = degree() - dd; k >= 0; --k) {
    Scalar q = rem[static_cast<std::size_t>(k + dd)] * inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
    }
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UniPoly g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

namespace {

constexpr long kMaxCandidateNorm = 10'000'000'000L;
constexpr std::size_t kMaxCandidates = 20'000;

struct GaussInt {
  mpz_class re;
  mpz_class im;
};

std::vector<long> positive_divisors(long n) {
  std::vector<long> small;
  std::vector<long> large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Divisors of z in Z[i] up to units (one representative per associate class).
std::vector<GaussInt> gaussian_divisors(const GaussInt& z) {
  mpz_class n = z.re * z.re + z.im * z.im;
  std::vector<GaussInt> out;
  if (n == 0 || n > kMaxCandidateNorm) return out;
  for (long d : positive_divisors(n.get_si())) {
    // Representatives a + bi with a > 0, b >= 0 cover each associate class once.
    for (long a = 1; a * a <= d; ++a) {
      long b2 = d - a * a;
      auto b = static_cast<long>(std::sqrt(static_cast<double>(b2)));
      while (b * b > b2) --b;
      while ((b + 1) * (b + 1) <= b2) ++b;
      if (b * b != b2) continue;
      // delta | z iff z * conj(delta) is divisible by N(delta) componentwise.
      mpz_class nr = z.re * a + z.im * b;
      mpz_class ni = z.im * a - z.re * b;
      if (nr % d == 0 && ni % d == 0) out.push_back({mpz_class(a), mpz_class(b)});
    }
  }
  return out;
}

// Coefficients scaled to Gaussian integers.
std::vector<GaussInt> integral_coefficients(const UniPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
  }
  std::vector<GaussInt> out;
  for (const auto& c : p.coefficients()) {
    Rational r = c.re() * l;
    Rational i = c.im() * l;
    out.push_back({r.get_num(), i.get_num()});
  }
  return out;
}

bool try_root(UniPoly& rem, const Scalar& r, std::vector<std::pair<Scalar, int>>& roots) {
  if (!rem(r).is_zero()) return false;
  UniPoly lin(std::vector<Scalar>{-r, Scalar(1)});
  int mult = 0;
  while (rem.degree() >= 1 && rem(r).is_zero()) {
    rem = rem.divmod(lin).first;
    ++mult;
  }
  roots.emplace_back(r, mult);
  return true;
}

bool search_candidate_root(UniPoly& rem, std::vector<std::pair<Scalar, int>>& roots) {
  auto z = integral_coefficients(rem);
  auto numerators = gaussian_divisors(z.front());
  auto denominators = gaussian_divisors(z.back());
  if (numerators.empty() || denominators.empty()) return false;
  static const Scalar kUnits[4] = {Scalar(1), Scalar(-1), Scalar::imaginary_unit(),
                                   -Scalar::imaginary_unit()};
  std::size_t tried = 0;
  // Rational candidates first; they are by far the common case.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& a : numerators) {
      for (const auto& b : denominators) {
        Scalar alpha(Rational(a.re), Rational(a.im));
        Scalar beta(Rational(b.re), Rational(b.im));
        Scalar base = alpha / beta;
        for (const auto& u : kUnits) {
          Scalar cand = base * u;
          if ((pass == 0) != cand.is_real()) continue;
          if (++tried > kMaxCandidates) return false;
          if (try_root(rem, cand, roots)) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

RootSearch find_roots(const UniPoly& p) {
  RootSearch out;
  if (p.degree() <= 0) {
    out.remainder = p;
    return out;
  }
  UniPoly rem = p;
  int zero_mult = 0;
  while (rem.degree() >= 1 && rem[0].is_zero()) {
    std::vector<Scalar> shifted(rem.coefficients().begin() + 1, rem.coefficients().end());
    rem = UniPoly(std::move(shifted));
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Scalar(), zero_mult);

  while (rem.degree() >= 1) {
    if (rem.degree() == 1) {
      try_root(rem, -rem[0] / rem[1], out.roots);
      continue;
    }
    if (rem.degree() == 2) {
      const Scalar& a = rem[2];
      const Scalar& b = rem[1];
      const Scalar& c = rem[0];
      Scalar disc = b * b - Scalar(4) * a * c;
      Scalar s;
      if (!gaussian_sqrt(disc, s)) break;
      Scalar r1 = (-b + s) / (Scalar(2) * a);
      Scalar r2 = (-b - s) / (Scalar(2) * a);
      try_root(rem, r1, out.roots);
      if (rem.degree() >= 1) try_root(rem, r2, out.roots);
      continue;
    }
    if (!search_candidate_root(rem, out.roots)) break;
  }
  out.remainder = rem.monic();
  // Merge duplicate entries that can arise when a root is found twice via deflation.
  std::vector<std::pair<Scalar, int>> merged;
  for (const auto& [r, m] : out.roots) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& e) { return e.first == r; });
    if (it == merged.end()) {
      merged.emplace_back(r, m);
    } else {
      it->second += m;
    }
  }
  out.roots = std::move(merged);
  return out;
}

}  // namespace germ
