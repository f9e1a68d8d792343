#include <boost/math/distributions/normal.hpp>

#include <cmath>
#include <numbers>

#include "germ/numeric/numeric.hpp"

namespace germ {

std::vector<double> NumericConfig::geometric(double first, double ratio, int rungs) {
  std::vector<double> out;
  double x = first;
  for (int k = 0; k < rungs; ++k) {
    out.push_back(x);
    x *= ratio;
  }
  return out;
}

namespace {

void check_ladder(const std::vector<double>& ladder, const char* name) {
  if (ladder.empty()) throw Error(std::string(name) + " ladder is empty");
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    if (!(ladder[k] > 0) || !std::isfinite(ladder[k])) {
      throw Error(std::string(name) + " ladder must be positive");
    }
    if (k > 0 && !(ladder[k] < ladder[k - 1])) {
      throw Error(std::string(name) + " ladder must be strictly decreasing");
    }
  }
}

}  // namespace

void NumericConfig::validate() const {
  check_ladder(radius_ladder, "radius");
  check_ladder(target_ladder, "target");
  if (starts < 1) throw Error("numeric starts must be positive");
  if (!(tolerance > 0)) throw Error("numeric tolerance must be positive");
  if (max_iterations < 1) throw Error("numeric max_iterations must be positive");
  if (!(tau > 0) || !(tau < 1)) throw Error("numeric tau must lie in (0, 1)");
  if (directions < 1) throw Error("numeric directions must be positive");
}

NumericMap::NumericMap(const std::vector<Polynomial>& components)
    : NumericMap(components, components.empty() ? Variables() : components.front().variables()) {}

NumericMap::NumericMap(const std::vector<Polynomial>& components, const Variables& vars) : nvars_(vars.size()) {
  for (const auto& raw : components) {
    Polynomial p = remap(raw, vars);
    if (!p.is_real()) throw Error("numeric map needs real coefficients: " + p.to_string());
    std::vector<Term> terms;
    for (const auto& [m, c] : p.terms()) {
      Term t{c.to_double(), {}};
      for (std::size_t v = 0; v < nvars_; ++v) {
        if (m[v] != 0) t.factors.push_back({v, m[v]});
      }
      terms.push_back(std::move(t));
    }
    comps_.push_back(std::move(terms));
    orders_.push_back(p.is_zero() ? 0 : p.order());
  }
}

void NumericMap::evaluate(const double* x, double* out) const {
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    double acc = 0;
    for (const auto& t : comps_[i]) {
      double v = t.coefficient;
      for (const auto& f : t.factors) v *= std::pow(x[f.var], static_cast<int>(f.power));
      acc += v;
    }
    out[i] = acc;
  }
}

void NumericMap::jacobian(const double* x, double* out) const {
  std::fill(out, out + comps_.size() * nvars_, 0.0);
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    double* row = out + i * nvars_;
    for (const auto& t : comps_[i]) {
      for (std::size_t k = 0; k < t.factors.size(); ++k) {
        double d = t.coefficient * t.factors[k].power *
                   std::pow(x[t.factors[k].var], static_cast<int>(t.factors[k].power) - 1);
        for (std::size_t l = 0; l < t.factors.size(); ++l) {
          if (l != k) d *= std::pow(x[t.factors[l].var], static_cast<int>(t.factors[l].power));
        }
        row[t.factors[k].var] += d;
      }
    }
  }
}

std::vector<double> NumericMap::evaluate(const std::vector<double>& x) const {
  if (x.size() != nvars_) throw Error("numeric map: wrong point dimension");
  std::vector<double> out(comps_.size());
  evaluate(x.data(), out.data());
  return out;
}

namespace {

double halton(std::uint64_t index, unsigned base) {
  double f = 1;
  double r = 0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

}  // namespace

std::vector<std::vector<double>> sample_directions(std::size_t d, int count) {
  std::vector<std::vector<double>> out;
  if (d == 0) return out;
  if (d == 1) return {{1.0}, {-1.0}};
  if (d == 2) {
    for (int k = 0; k < count; ++k) {
      double theta = 2 * std::numbers::pi * (k + 0.5) / count;
      out.push_back({std::cos(theta), std::sin(theta)});
    }
    return out;
  }
  static const unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  if (d > std::size(kPrimes)) throw Error("direction sampling supports at most 16 target dimensions");
  const boost::math::normal normal;
  for (int k = 1; static_cast<int>(out.size()) < count; ++k) {
    std::vector<double> z(d);
    double nrm = 0;
    for (std::size_t j = 0; j < d; ++j) {
      z[j] = boost::math::quantile(normal, halton(static_cast<std::uint64_t>(k), kPrimes[j]));
      nrm += z[j] * z[j];
    }
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12) continue;
    for (auto& c : z) c /= nrm;
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace germ
