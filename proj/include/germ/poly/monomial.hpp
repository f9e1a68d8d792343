#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace germ {

inline constexpr std::size_t kMaxVariables = 16;

/// Dense exponent vector with a fixed capacity of kMaxVariables entries.
/// Unused trailing entries stay zero, so comparisons ignore the ring size.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  std::uint16_t operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned value) {
    degree_ = degree_ - exp_[i] + value;
    exp_[i] = static_cast<std::uint16_t>(value);
  }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = static_cast<std::uint16_t>(exp_[i] + o.exp_[i]);
    }
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  /// Requires o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - o.exp_[i]);
    }
    r.degree_ = degree_ - o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exp_[i] > o.exp_[i]) return false;
    }
    return true;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      d += r.exp_[i];
    }
    r.degree_ = d;
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
      d += r.exp_[i];
    }
    r.degree_ = d;
    return r;
  }

  /// True when the two monomials share no variable.
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a.exp_[i] != 0 && b.exp_[i] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  const std::array<std::uint16_t, kMaxVariables>& exponents() const { return exp_; }

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  unsigned degree_ = 0;
};

/// Graded lexicographic order (x1 > x2 > ...), greatest first. This is the
/// canonical storage and printing order of Polynomial.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.exponents() > b.exponents();
  }
};

/// Ordered list of variable names shared cheaply between polynomials.
class Variables {
 public:
  Variables() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Variables(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Index of name; throws naming the variable when it is absent.
  std::size_t require(std::string_view name) const;

  /// This list followed by `extra` (names must be new).
  Variables extended(const std::vector<std::string>& extra) const;

  friend bool operator==(const Variables& a, const Variables& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const Variables& a, const Variables& b) { return !(a == b); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace germ
