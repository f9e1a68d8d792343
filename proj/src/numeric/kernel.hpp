#pragma once

// Internal building blocks of the numeric certificates.

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "germ/numeric/numeric.hpp"

namespace germ::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31U);
}

/// Generator of start `index` within `stream`; independent of scheduling.
inline std::mt19937_64 start_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed ^ splitmix64(stream)) + index));
}

/// Runs fn(i) for i < n and returns the results in index order. The parallel
/// policy distributes starts over OpenMP threads; results are identical.
template <class Result, class Fn>
std::vector<Result> run_starts(int n, ExecutionPolicy policy, Fn&& fn) {
  std::vector<Result> out(static_cast<std::size_t>(n));
  if (policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
  } else {
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
  }
  return out;
}

/// Residual callback: fills r (size k) and J (k x n) at x.
template <class Fn>
concept ResidualFunction = requires(Fn f, const Eigen::VectorXd& x, Eigen::VectorXd& r, Eigen::MatrixXd& j) {
  f(x, r, j);
};

/// Levenberg-Marquardt on 0.5 |r(x)|^2, starting from x (updated in place).
/// Returns the final cost.
template <ResidualFunction Fn>
double levenberg_marquardt(Fn&& fn, Eigen::VectorXd& x, int max_iterations) {
  Eigen::VectorXd r;
  Eigen::MatrixXd j;
  fn(x, r, j);
  double cost = 0.5 * r.squaredNorm();
  double lambda = -1;
  Eigen::VectorXd r_new;
  Eigen::MatrixXd j_new;
  for (int it = 0; it < max_iterations; ++it) {
    Eigen::MatrixXd jtj = j.transpose() * j;
    Eigen::VectorXd grad = j.transpose() * r;
    if (grad.lpNorm<Eigen::Infinity>() <= 1e-300) break;
    if (lambda < 0) lambda = 1e-3 * std::max(jtj.diagonal().maxCoeff(), 1e-300);
    bool accepted = false;
    for (int tries = 0; tries < 12 && !accepted; ++tries) {
      Eigen::MatrixXd a = jtj;
      a.diagonal().array() += lambda;
      Eigen::VectorXd step = a.ldlt().solve(-grad);
      if (!step.allFinite()) {
        lambda *= 8;
        continue;
      }
      Eigen::VectorXd trial = x + step;
      fn(trial, r_new, j_new);
      double trial_cost = 0.5 * r_new.squaredNorm();
      if (std::isfinite(trial_cost) && trial_cost < cost) {
        bool tiny = step.norm() <= 1e-15 * (x.norm() + 1e-15);
        x = trial;
        r.swap(r_new);
        j.swap(j_new);
        double previous = cost;
        cost = trial_cost;
        lambda = std::max(lambda / 3, 1e-300);
        accepted = true;
        if (tiny || previous - cost <= 1e-15 * previous) return cost;
      } else {
        lambda *= 4;
      }
    }
    if (!accepted) break;
  }
  return cost;
}

/// Gauss-Newton steps x <- x - J^+ F(x) onto {F = 0}; returns |F(x)|.
/// Steps longer than max_step are refused (near-singular Jacobians).
template <class Eval>
double project_min_norm(Eval&& eval, Eigen::VectorXd& x, int steps,
                        double max_step = std::numeric_limits<double>::infinity()) {
  Eigen::VectorXd f;
  Eigen::MatrixXd j;
  eval(x, f, j);
  double res = f.norm();
  for (int s = 0; s < steps && res > 0; ++s) {
    Eigen::VectorXd step = j.completeOrthogonalDecomposition().solve(f);
    if (!step.allFinite() || step.norm() > max_step) break;
    Eigen::VectorXd trial = x - step;
    Eigen::VectorXd f_new;
    Eigen::MatrixXd j_new;
    eval(trial, f_new, j_new);
    double r_new = f_new.norm();
    if (!(r_new < res)) break;
    x = trial;
    f.swap(f_new);
    j.swap(j_new);
    res = r_new;
  }
  return res;
}

inline Eigen::VectorXd random_start(std::mt19937_64& rng, std::size_t n, double log_lo, double log_hi) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(log_lo, log_hi);
  Eigen::VectorXd x(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = normal(rng);
  double nrm = x.norm();
  if (nrm == 0) nrm = 1;
  return x * (std::exp(unif(rng)) / nrm);
}

}  // namespace germ::detail
