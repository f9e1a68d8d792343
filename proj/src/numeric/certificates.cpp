#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "kernel.hpp"

namespace germ {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kPenaltyFirst = 1e2;
constexpr double kPenaltyLast = 1e12;
constexpr double kPenaltyStep = 1e2;
constexpr int kPolishSteps = 30;
// Normalized residual accepted for points of an ideal's zero set.
constexpr double kVarietyTolerance = 1e-8;
// Normalized fibre residual below which a point counts as on the fibre.
constexpr double kTouchTolerance = 1e-6;
// Witness norms of a homogeneous map of degree d decay like eta^(1/d); a
// smaller exponent counts as no decay (degrees above 20).
constexpr double kStuckSlope = 0.05;

std::vector<double> to_std(const VectorXd& x) { return {x.data(), x.data() + x.size()}; }

struct StartResult {
  VectorXd x;
  double residual = std::numeric_limits<double>::infinity();
  double norm = std::numeric_limits<double>::infinity();
};

// F(x) = G(x) - y with its Jacobian.
auto fibre_equations(const NumericMap& g, const std::vector<double>& y) {
  return [&g, &y](const VectorXd& x, VectorXd& f, MatrixXd& j) {
    const auto p = static_cast<Eigen::Index>(g.target_dim());
    const auto m = static_cast<Eigen::Index>(g.source_dim());
    f.resize(p);
    g.evaluate(x.data(), f.data());
    for (std::size_t i = 0; i < y.size(); ++i) f[static_cast<Eigen::Index>(i)] -= y[i];
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> jr(p, m);
    g.jacobian(x.data(), jr.data());
    j = jr;
  };
}

}  // namespace

MinNormResult min_norm_fibre_point(const NumericMap& g, const std::vector<double>& y, const NumericConfig& cfg,
                                   std::uint64_t stream) {
  if (y.size() > g.target_dim()) throw Error("min_norm_fibre_point: target dimension mismatch");
  const auto m = static_cast<Eigen::Index>(g.source_dim());
  const auto p = static_cast<Eigen::Index>(g.target_dim());
  auto equations = fibre_equations(g, y);
  // Constraint residuals are measured relative to the target size, so that
  // the origin stops being a stable penalty minimum for small targets.
  double scale = 0;
  for (double c : y) scale += c * c;
  scale = std::sqrt(scale);
  if (scale == 0) scale = 1;
  auto results = detail::run_starts<StartResult>(cfg.starts, cfg.policy, [&](int i) {
    std::mt19937_64 rng = detail::start_rng(cfg.seed, stream, static_cast<std::uint64_t>(i));
    VectorXd x = detail::random_start(rng, g.source_dim(), std::log(1e-4), std::log(4.0));
    for (double mu = kPenaltyFirst; mu <= kPenaltyLast * 1.0001; mu *= kPenaltyStep) {
      const double w = std::sqrt(mu) / scale;
      auto penalty = [&](const VectorXd& z, VectorXd& r, MatrixXd& j) {
        VectorXd f;
        MatrixXd jf;
        equations(z, f, jf);
        r.resize(m + p);
        r.head(m) = z;
        r.tail(p) = w * f;
        j.resize(m + p, m);
        j.topRows(m).setIdentity();
        j.bottomRows(p) = w * jf;
      };
      detail::levenberg_marquardt(penalty, x, cfg.max_iterations);
    }
    StartResult out;
    out.residual = detail::project_min_norm(equations, x, kPolishSteps);
    out.norm = x.norm();
    out.x = x;
    return out;
  });
  MinNormResult best;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (!(r.residual <= cfg.tolerance)) continue;
    ++best.converged;
    if (!best.found || r.norm < best.witness.norm) {
      best.found = true;
      best.witness = {to_std(r.x), r.residual, r.norm, "min-norm fibre point"};
    }
  }
  return best;
}

NumericCertificate nh_isolation_test(const NumericMap& g, const NumericConfig& cfg, const std::string& subject) {
  return nh_isolation_test(std::vector<NumericMap>{g}, g.target_dim(), cfg, subject);
}

NumericCertificate nh_isolation_test(const std::vector<NumericMap>& pieces, std::size_t target_dim,
                                     const NumericConfig& cfg, const std::string& subject) {
  cfg.validate();
  if (pieces.empty()) throw Error("nh_isolation_test: no pieces");
  for (const auto& piece : pieces) {
    if (piece.target_dim() < target_dim) throw Error("nh_isolation_test: piece with too few components");
  }
  NumericCertificate cert;
  cert.test = "nh_isolation";
  cert.subject = subject;
  cert.config = cfg;
  const auto dirs = sample_directions(target_dim, cfg.directions);
  const std::size_t rungs = cfg.target_ladder.size();
  std::vector<std::vector<MinNormResult>> found(dirs.size(), std::vector<MinNormResult>(rungs));
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    DirectionTrace trace{dirs[d], {}};
    for (std::size_t k = 0; k < rungs; ++k) {
      std::vector<double> y(dirs[d]);
      for (auto& c : y) c *= cfg.target_ladder[k];
      // The fibre of a union is the union of the fibres of its pieces.
      for (std::size_t piece = 0; piece < pieces.size(); ++piece) {
        auto r = min_norm_fibre_point(pieces[piece], y, cfg, 1000000 * piece + 1000 * d + k);
        if (r.found && (!found[d][k].found || r.witness.norm < found[d][k].witness.norm)) {
          if (pieces.size() > 1) r.witness.label = "piece " + std::to_string(piece);
          found[d][k] = std::move(r);
        }
      }
      trace.norms.push_back(found[d][k].found ? found[d][k].witness.norm : -1.0);
    }
    cert.traces.push_back(std::move(trace));
  }
  const double eps0 = cfg.radius_ladder.front();
  // A min-norm witness outside B_eps0 means the fibre misses the ball.
  for (std::size_t k = 0; k < rungs; ++k) {
    RungStatistic s{cfg.target_ladder[k], 0, 0};
    for (const auto& t : cert.traces) {
      if (t.norms[k] < 0 || t.norms[k] > eps0) continue;
      ++s.found;
      s.statistic = std::max(s.statistic, t.norms[k]);
    }
    cert.rungs.push_back(s);
  }
  const double away = cfg.tau * eps0;
  const std::size_t half = rungs / 2;
  // A direction whose witnesses stay in the shell [tau*eps0, eps0] over the
  // second half of the ladder, without decaying like a power of the target
  // radius, keeps N_h away from 0 along a sequence of fibres.
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    bool stays = true;
    for (std::size_t k = half; k < rungs && stays; ++k) {
      double n = cert.traces[d].norms[k];
      stays = n >= away && n <= eps0;
    }
    if (!stays) continue;
    if (rungs - 1 > half) {
      const auto& n = cert.traces[d].norms;
      double slope = std::log(n[rungs - 1] / n[half]) /
                     std::log(cfg.target_ladder[rungs - 1] / cfg.target_ladder[half]);
      if (slope >= kStuckSlope) continue;
    }
    cert.verdict = verdict::kNotWellDefined;
    for (std::size_t k = 0; k < rungs; ++k) {
      if (!found[d][k].found) continue;
      Witness w = found[d][k].witness;
      w.label = (w.label.empty() ? "" : w.label + ", ") + "direction " + std::to_string(d) + ", rung " +
                std::to_string(k);
      cert.witnesses.push_back(std::move(w));
    }
    cert.notes.push_back("witness norms along direction " + std::to_string(d) +
                         " stay between tau*eps0 and eps0 while the target shrinks");
    if (rungs - 1 > half) cert.notes.push_back("decay exponent over the second half below " + std::to_string(kStuckSlope));
    return cert;
  }
  const auto& last = cert.rungs.back();
  const auto& middle = cert.rungs[half];
  if (last.found > 0 && last.statistic < away && last.statistic <= middle.statistic) {
    cert.verdict = verdict::kWellDefined;
    for (std::size_t d = 0; d < dirs.size(); ++d) {
      if (!found[d][rungs - 1].found || found[d][rungs - 1].witness.norm > eps0) continue;
      Witness w = found[d][rungs - 1].witness;
      w.label = (w.label.empty() ? "" : w.label + ", ") + "direction " + std::to_string(d) + ", last rung";
      cert.witnesses.push_back(std::move(w));
    }
    cert.notes.push_back("witness norms at the last rung are below tau*eps0 and decreasing");
    return cert;
  }
  cert.verdict = verdict::kInconclusive;
  if (last.found == 0) cert.notes.push_back("no fibre points found at the last rung");
  return cert;
}

NumericCertificate smooth_fibre_point_search(const NumericMap& g, const NumericConfig& cfg,
                                             const std::string& subject) {
  cfg.validate();
  NumericCertificate cert;
  cert.test = "smooth_fibre_point";
  cert.subject = subject;
  cert.config = cfg;
  const auto m = static_cast<Eigen::Index>(g.source_dim());
  const auto p = static_cast<Eigen::Index>(g.target_dim());
  const std::vector<double> zero(g.target_dim(), 0.0);
  auto equations = fibre_equations(g, zero);
  int rungs_with_point = 0;
  for (std::size_t k = 0; k < cfg.radius_ladder.size(); ++k) {
    const double eps = cfg.radius_ladder[k];
    struct Sample {
      VectorXd x;
      double residual = std::numeric_limits<double>::infinity();
      double sigma = 0;
      bool regular = false;
    };
    auto samples = detail::run_starts<Sample>(cfg.starts, cfg.policy, [&](int i) {
      std::mt19937_64 rng = detail::start_rng(cfg.seed, 50000 + k, static_cast<std::uint64_t>(i));
      VectorXd x = detail::random_start(rng, g.source_dim(), std::log(eps / 2), std::log(2 * eps));
      auto onto_sphere = [&](const VectorXd& z, VectorXd& r, MatrixXd& j) {
        VectorXd f;
        MatrixXd jf;
        equations(z, f, jf);
        r.resize(p + 1);
        j.resize(p + 1, m);
        for (Eigen::Index c = 0; c < p; ++c) {
          double scale = std::pow(eps, std::max(1, g.order(static_cast<std::size_t>(c))));
          r[c] = f[c] / scale;
          j.row(c) = jf.row(c) / scale;
        }
        r[p] = (z.squaredNorm() - eps * eps) / (eps * eps);
        j.row(p) = 2 * z.transpose() / (eps * eps);
      };
      detail::levenberg_marquardt(onto_sphere, x, 4 * cfg.max_iterations);
      Sample s;
      s.residual = detail::project_min_norm(equations, x, kPolishSteps);
      s.x = x;
      if (p > m || !std::isfinite(s.residual)) return s;
      VectorXd f;
      MatrixXd jf;
      equations(x, f, jf);
      Eigen::JacobiSVD<MatrixXd> svd(jf);
      s.sigma = svd.singularValues()[p - 1];
      const double n = x.norm();
      s.regular = s.residual <= cfg.tolerance && n >= eps / 4 && n <= 4 * eps &&
                  s.sigma >= std::max(1e-8, 100 * std::sqrt(s.residual));
      return s;
    });
    RungStatistic stat{eps, 0, 0};
    const Sample* best = nullptr;
    for (const auto& s : samples) {
      if (!s.regular) continue;
      ++stat.found;
      if (best == nullptr || s.sigma > best->sigma) best = &s;
    }
    if (best != nullptr) {
      stat.statistic = best->sigma;
      ++rungs_with_point;
      cert.witnesses.push_back({to_std(best->x), best->residual, best->x.norm(),
                                "regular fibre point at radius " + std::to_string(eps)});
    }
    cert.rungs.push_back(stat);
  }
  if (rungs_with_point == static_cast<int>(cfg.radius_ladder.size())) {
    cert.verdict = verdict::kRegularPointFound;
  } else if (rungs_with_point == 0) {
    cert.verdict = verdict::kNoneFound;
  } else {
    cert.verdict = verdict::kInconclusive;
    cert.notes.push_back("regular fibre points found on some rungs only");
  }
  return cert;
}

namespace {

struct ScaledSystem {
  const NumericMap* map;
  double eps;
  // Residuals g_i(x) / eps^order_i.
  void operator()(const VectorXd& x, VectorXd& r, MatrixXd& j) const {
    const auto k = static_cast<Eigen::Index>(map->target_dim());
    const auto n = static_cast<Eigen::Index>(map->source_dim());
    r.resize(k);
    map->evaluate(x.data(), r.data());
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> jr(k, n);
    if (k > 0) map->jacobian(x.data(), jr.data());
    j = jr;
    for (Eigen::Index c = 0; c < k; ++c) {
      double scale = std::pow(eps, map->order(static_cast<std::size_t>(c)));
      r[c] /= scale;
      j.row(c) /= scale;
    }
  }
};

struct NearSample {
  VectorXd x;
  double variety_residual = std::numeric_limits<double>::infinity();
  double avoid = std::numeric_limits<double>::infinity();
  bool accepted = false;
};

}  // namespace

NumericCertificate real_points_near(const std::vector<Polynomial>& ideal, const std::vector<Polynomial>& avoid,
                                    const Variables& vars, const NumericConfig& cfg, const std::string& subject) {
  cfg.validate();
  if (avoid.empty()) throw Error("real_points_near: empty avoid ideal");
  NumericCertificate cert;
  cert.test = "real_points_near";
  cert.subject = subject;
  cert.config = cfg;
  NumericMap on(ideal, vars);
  NumericMap off(avoid, vars);
  const auto n = static_cast<Eigen::Index>(vars.size());
  const auto ki = static_cast<Eigen::Index>(on.target_dim());
  const auto ka = static_cast<Eigen::Index>(off.target_dim());
  int rungs_touching = 0;
  int rungs_away = 0;
  int rungs_empty = 0;
  for (std::size_t k = 0; k < cfg.radius_ladder.size(); ++k) {
    const double eps = cfg.radius_ladder[k];
    ScaledSystem on_sys{&on, eps};
    ScaledSystem off_sys{&off, eps};
    // V(ideal) intersected with the sphere of radius eps.
    auto constraints = [&](const VectorXd& x, VectorXd& r, MatrixXd& j) {
      VectorXd ri;
      MatrixXd ji;
      on_sys(x, ri, ji);
      r.resize(ki + 1);
      j.resize(ki + 1, n);
      r.head(ki) = ri;
      j.topRows(ki) = ji;
      r[ki] = (x.squaredNorm() - eps * eps) / (eps * eps);
      j.row(ki) = 2 * x.transpose() / (eps * eps);
    };
    auto finish = [&](VectorXd x, double max_step) {
      NearSample s;
      detail::levenberg_marquardt(constraints, x, 4 * cfg.max_iterations);
      detail::project_min_norm(constraints, x, kPolishSteps, max_step);
      VectorXd r;
      MatrixXd j;
      constraints(x, r, j);
      s.variety_residual = r.lpNorm<Eigen::Infinity>();
      off_sys(x, r, j);
      s.avoid = r.norm();
      s.x = x;
      s.accepted = s.variety_residual <= kVarietyTolerance;
      return s;
    };
    auto samples = detail::run_starts<NearSample>(cfg.starts, cfg.policy, [&](int i) {
      std::mt19937_64 rng = detail::start_rng(cfg.seed, 70000 + k, static_cast<std::uint64_t>(i));
      VectorXd x = detail::random_start(rng, vars.size(), std::log(eps / 2), std::log(2 * eps));
      for (double mu = kPenaltyFirst; mu <= kPenaltyLast * 1.0001; mu *= kPenaltyStep) {
        const double w = std::sqrt(mu);
        auto objective = [&](const VectorXd& z, VectorXd& r, MatrixXd& j) {
          VectorXd rc;
          MatrixXd jc;
          constraints(z, rc, jc);
          VectorXd ra;
          MatrixXd ja;
          off_sys(z, ra, ja);
          r.resize(ki + 1 + ka);
          j.resize(ki + 1 + ka, n);
          r.head(ki + 1) = w * rc;
          j.topRows(ki + 1) = w * jc;
          r.tail(ka) = ra;
          j.bottomRows(ka) = ja;
        };
        detail::levenberg_marquardt(objective, x, cfg.max_iterations);
      }
      return finish(x, 0.1 * eps);
    });
    RungStatistic stat{eps, 0, std::numeric_limits<double>::infinity()};
    const NearSample* best = nullptr;
    for (const auto& s : samples) {
      if (!s.accepted) continue;
      ++stat.found;
      if (best == nullptr || s.avoid < best->avoid) best = &s;
    }
    if (best == nullptr) {
      stat.statistic = -1;
      cert.rungs.push_back(stat);
      ++rungs_empty;
      continue;
    }
    stat.statistic = best->avoid;
    cert.rungs.push_back(stat);
    if (best->avoid > kTouchTolerance) {
      if (best->avoid >= cfg.tau) ++rungs_away;
      cert.witnesses.push_back({to_std(best->x), best->variety_residual, best->x.norm(),
                                "closest point to the avoided set at radius " + std::to_string(eps)});
      continue;
    }
    // The limit point lies on V(avoid); look for points of V(ideal) off V(avoid)
    // right next to it.
    const double rho = 1e-3 * eps;
    auto nearby = detail::run_starts<NearSample>(8, cfg.policy, [&](int i) {
      std::mt19937_64 rng = detail::start_rng(cfg.seed, 90000 + k, static_cast<std::uint64_t>(i));
      VectorXd x = best->x + detail::random_start(rng, vars.size(), std::log(rho), std::log(rho));
      return finish(x, rho);
    });
    const NearSample* approach = nullptr;
    for (const auto& s : nearby) {
      if (s.accepted && s.avoid > 1e3 * std::numeric_limits<double>::epsilon() && (s.x - best->x).norm() <= 10 * rho) {
        approach = &s;
        break;
      }
    }
    cert.witnesses.push_back({to_std(best->x), best->variety_residual, best->x.norm(),
                              "limit point on the avoided set at radius " + std::to_string(eps)});
    if (approach != nullptr) {
      ++rungs_touching;
      cert.witnesses.push_back({to_std(approach->x), approach->variety_residual, approach->x.norm(),
                                "nearby point off the avoided set at radius " + std::to_string(eps)});
    }
  }
  const int total = static_cast<int>(cfg.radius_ladder.size());
  if (rungs_touching == total) {
    cert.verdict = verdict::kMeetsFibre;
  } else if (rungs_empty == total) {
    cert.verdict = verdict::kNoRealPoints;
  } else if (rungs_away == total) {
    cert.verdict = verdict::kStaysAway;
  } else {
    cert.verdict = verdict::kInconclusive;
  }
  return cert;
}

NumericCertificate arc_sampler_fbarg(const PuiseuxBranch& branch, const NumericConfig& cfg) {
  cfg.validate();
  if (branch.terms.empty() || branch.terms.front().exponent != branch.ramification) {
    throw Error("arc sampler needs a branch tangent to a line off the axes (p = q)");
  }
  using C = std::complex<double>;
  const C ucoef = branch.u_coefficient.to_complex();
  const int p = branch.ramification;
  auto u = [&](C t) { return ucoef * std::pow(t, p); };
  auto du = [&](C t) { return ucoef * static_cast<double>(p) * std::pow(t, p - 1); };
  auto v = [&](C t) {
    C acc = 0;
    for (const auto& term : branch.terms) acc += term.coefficient.to_complex() * std::pow(t, term.exponent);
    return acc;
  };
  auto dv = [&](C t) {
    C acc = 0;
    for (const auto& term : branch.terms) {
      acc += term.coefficient.to_complex() * static_cast<double>(term.exponent) * std::pow(t, term.exponent - 1);
    }
    return acc;
  };
  // Relative modulus defect of |v u'| = |u v'|.
  auto defect = [&](C t) {
    double a = std::abs(v(t) * du(t));
    double b = std::abs(u(t) * dv(t));
    return (a - b) / std::max(a + b, 1e-300);
  };
  NumericCertificate cert;
  cert.test = "arc_sampler";
  cert.subject = branch.to_string();
  cert.config = cfg;
  constexpr int kGrid = 720;
  bool any = false;
  for (double r : cfg.radius_ladder) {
    std::vector<double> roots;
    std::vector<double> values(kGrid + 1);
    for (int g = 0; g <= kGrid; ++g) values[g] = defect(std::polar(r, 2 * std::numbers::pi * g / kGrid));
    double worst = 0;
    for (double d : values) worst = std::max(worst, std::abs(d));
    if (worst <= 1e-12) {
      // Every argument solves the modulus equation.
      for (int g = 0; g < kGrid; g += kGrid / 16) roots.push_back(2 * std::numbers::pi * g / kGrid);
    } else {
      for (int g = 0; g < kGrid; ++g) {
        double lo = 2 * std::numbers::pi * g / kGrid;
        double hi = 2 * std::numbers::pi * (g + 1) / kGrid;
        double flo = values[g];
        double fhi = values[g + 1];
        if (flo == 0) {
          roots.push_back(lo);
          continue;
        }
        if ((flo < 0) == (fhi < 0) || fhi == 0) continue;
        for (int it = 0; it < 60; ++it) {
          double mid = 0.5 * (lo + hi);
          double fm = defect(std::polar(r, mid));
          if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        roots.push_back(0.5 * (lo + hi));
      }
    }
    RungStatistic stat{r, static_cast<int>(roots.size()), std::numeric_limits<double>::infinity()};
    for (double theta : roots) {
      C t = std::polar(r, theta);
      C w = u(t) * std::conj(v(t));
      stat.statistic = std::min(stat.statistic, std::abs(w));
      if (std::abs(w) > 0) any = true;
      cert.witnesses.push_back({{w.real(), w.imag()}, std::abs(defect(t)), std::abs(w),
                                "|t| = " + std::to_string(r) + ", arg t = " + std::to_string(theta)});
    }
    if (roots.empty()) stat.statistic = -1;
    cert.rungs.push_back(stat);
  }
  cert.verdict = any ? verdict::kDimensionOne : verdict::kDimensionZero;
  return cert;
}

}  // namespace germ
