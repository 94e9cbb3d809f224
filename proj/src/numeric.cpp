#include "lctlab/numeric.hpp"

#include "lctlab/invariants.hpp"
#include "lctlab/parallel.hpp"
#include "lctlab/rng.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lctlab::numeric {

namespace {

constexpr double kTwoPi = 6.283185307179586477;

struct ModelEval {
  // phi in log coordinates x_j = log|z_j| (weighted models ignore phases).
  std::vector<double> weights;                 // weighted / truncated
  double truncation = -std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> exponents;  // monomial
  bool monomial = false;

  double phi(const std::vector<double>& x) const {
    if (!monomial) {
      double m = -std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < weights.size(); ++j) m = std::max(m, weights[j] * x[j]);
      return std::max(m, truncation);
    }
    // 0.5 * log sum exp(2 <alpha_i, x>)
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& a : exponents) {
      double dot = 0;
      for (std::size_t j = 0; j < a.size(); ++j) dot += a[j] * x[j];
      top = std::max(top, 2.0 * dot);
    }
    double acc = 0;
    for (const auto& a : exponents) {
      double dot = 0;
      for (std::size_t j = 0; j < a.size(); ++j) dot += a[j] * x[j];
      acc += std::exp(2.0 * dot - top);
    }
    return 0.5 * (top + std::log(acc));
  }
};

ModelEval make_eval(const SingularityModel& m) {
  ModelEval e;
  if (const auto* ideal = std::get_if<MonomialIdeal>(&m)) {
    e.monomial = true;
    for (const auto& v : ideal->poly().vertices()) {
      std::vector<double> row;
      row.reserve(v.size());
      for (const auto& c : v) row.push_back(to_double(c));
      e.exponents.push_back(std::move(row));
    }
    return e;
  }
  const Weights& w = std::holds_alternative<WeightedMonomial>(m)
                         ? std::get<WeightedMonomial>(m).weights
                         : std::get<TruncatedWeighted>(m).weights;
  for (const auto& a : w.ascending()) e.weights.push_back(to_double(a));
  if (const auto* tw = std::get_if<TruncatedWeighted>(&m)) {
    e.truncation = -to_double(tw->truncation);
  }
  return e;
}

double weighted_closed_volume(const std::vector<double>& a, double t, double r) {
  double v = 1;
  for (double aj : a) {
    v *= M_PI * std::min(r * r, std::exp(-2.0 * t / aj));
  }
  return v;
}

// Importance box for a monomial sublevel set: {phi < -t} lies inside
// {x_j <= min(log r, -t/p_j)} with p_j the pure power on axis j.
std::vector<double> monomial_axis_powers(const MonomialIdeal& ideal) {
  const auto& verts = ideal.poly().vertices();
  const std::size_t n = ideal.poly().dim();
  std::vector<double> p(n, 0);
  for (std::size_t axis = 0; axis < n; ++axis) {
    for (const auto& v : verts) {
      bool pure = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != axis && v[j] != 0) {
          pure = false;
          break;
        }
      }
      if (pure) {
        const double val = to_double(v[axis]);
        if (p[axis] == 0 || val < p[axis]) p[axis] = val;
      }
    }
    assert(p[axis] > 0);
  }
  return p;
}

double monomial_mc_volume(const MonomialIdeal& ideal, const ModelEval& eval, double t,
                          double r, const NumericConfig& cfg, std::uint64_t stream) {
  const std::size_t n = ideal.poly().dim();
  const auto powers = monomial_axis_powers(ideal);
  std::vector<double> tops(n);
  double box_measure = 1;  // integral of (2pi)^n exp(2 sum x) over the box
  for (std::size_t j = 0; j < n; ++j) {
    tops[j] = std::min(std::log(r), -t / powers[j]);
    box_measure *= M_PI * std::exp(2.0 * tops[j]);
  }
  constexpr std::uint64_t kChunk = 1u << 14;
  const std::uint64_t samples = std::max<std::uint64_t>(cfg.samples, 1);
  const std::size_t chunks = static_cast<std::size_t>((samples + kChunk - 1) / kChunk);
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, [&](std::size_t ci) {
    SplitMix64 rng(derive_seed(cfg.seed, stream * 7919 + ci));
    const std::uint64_t begin = static_cast<std::uint64_t>(ci) * kChunk;
    const std::uint64_t count = std::min<std::uint64_t>(kChunk, samples - begin);
    std::vector<double> x(n);
    std::uint64_t local = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = tops[j] + 0.5 * std::log(rng.next_open());
      }
      if (eval.phi(x) < -t) ++local;
    }
    hits[ci] = local;
  });
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  return box_measure * static_cast<double>(total) / static_cast<double>(samples);
}

struct Ols {
  double slope = 0;
  double stderr_ = 0;
};

Ols ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t m = x.size();
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / static_cast<double>(m);
  const double my = sy / static_cast<double>(m);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  Ols out;
  out.slope = sxy / sxx;
  if (m > 2) {
    double ss = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const double resid = y[i] - my - out.slope * (x[i] - mx);
      ss += resid * resid;
    }
    out.stderr_ = std::sqrt(ss / (static_cast<double>(m - 2) * sxx));
  }
  return out;
}

// Exact integral of e^{2 sum x - 2 lambda max(C, max_j a_j x_j)} over the
// box {x <= s} in R^d, by splitting on the argmax. Given the argmax
// coordinate, the remaining ones are conditionally independent with caps
// min(s, (a_j/a_l) x_j), so each region is one piecewise-exponential
// integral in the argmax coordinate; works in any dimension. Exponents are
// accumulated in log scale: individual strata can dwarf or underflow the
// double range even when the total is tame.
double box_max_integral(const std::vector<double>& a, double c_level, double lambda,
                        double s) {
  const std::size_t d = a.size();
  const double log_half = std::log(0.5);
  // Region where the level C dominates every a_j x_j.
  double expo = -2.0 * lambda * c_level;
  for (std::size_t j = 0; j < d; ++j) {
    expo += 2.0 * std::min(s, c_level / a[j]) + log_half;
  }
  double total = std::exp(expo);
  // Regions where a_j x_j is the maximum and exceeds C.
  for (std::size_t j = 0; j < d; ++j) {
    const double lo = c_level / a[j];
    if (lo >= s) continue;
    // Breakpoints where an inner cap min(s, (a_j/a_l) x_j) switches.
    std::vector<double> cuts{lo, s};
    for (std::size_t l = 0; l < d; ++l) {
      if (l == j) continue;
      const double b = (a[l] / a[j]) * s;
      if (b > lo && b < s) cuts.push_back(b);
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t piece = 0; piece + 1 < cuts.size(); ++piece) {
      const double plo = cuts[piece], phi = cuts[piece + 1];
      const double mid = 0.5 * (plo + phi);
      double kappa = 2.0 - 2.0 * lambda * a[j];
      double log_scale = 0.0;
      for (std::size_t l = 0; l < d; ++l) {
        if (l == j) continue;
        if ((a[j] / a[l]) * mid <= s) {
          kappa += 2.0 * a[j] / a[l];  // cap at (a_j/a_l) x_j
          log_scale += log_half;
        } else {
          log_scale += log_half + 2.0 * s;  // cap at the box edge
        }
      }
      if (std::abs(kappa) < 1e-13) {
        total += std::exp(log_scale) * (phi - plo);
      } else {
        const double la = log_scale + kappa * phi;
        const double lb = log_scale + kappa * plo;
        const double top = std::max(la, lb);
        total += std::exp(top) * (std::exp(la - top) - std::exp(lb - top)) / kappa;
      }
    }
  }
  return total;
}

// h(w) = integral over the (n-1)-polydisk of radius r of e^{-2 lambda phi},
// phi = max(max_j a_j x_j, C).
double slice_h(const std::vector<double>& inner, double c_level, double lambda, double r) {
  return std::pow(kTwoPi, static_cast<double>(inner.size())) *
         box_max_integral(inner, c_level, lambda, std::log(r));
}

// Gaussian complex frame, orthonormalized: k columns spanning a uniform
// k-plane in C^n.
std::vector<std::vector<std::complex<double>>> random_frame(SplitMix64& rng, std::size_t n,
                                                            std::size_t k) {
  std::vector<std::vector<std::complex<double>>> cols(k,
                                                      std::vector<std::complex<double>>(n));
  for (auto& col : cols) {
    for (auto& entry : col) {
      double re, im;
      rng.next_gaussian_pair(re, im);
      entry = {re, im};
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::complex<double> dot = 0;
      for (std::size_t l = 0; l < n; ++l) dot += std::conj(cols[j][l]) * cols[i][l];
      for (std::size_t l = 0; l < n; ++l) cols[i][l] -= dot * cols[j][l];
    }
    double norm = 0;
    for (const auto& v : cols[i]) norm += std::norm(v);
    norm = std::sqrt(norm);
    for (auto& v : cols[i]) v /= norm;
  }
  return cols;
}

// Restrictions to lines are radial: solve phi(rho * u) = -tau for log rho.
double line_radius_weighted(const std::vector<double>& a,
                            const std::vector<double>& log_u, double tau) {
  double x = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < a.size(); ++j) {
    x = std::min(x, -tau / a[j] - log_u[j]);
  }
  return x;
}

double line_radius_monomial(const std::vector<std::vector<double>>& exps,
                            const std::vector<double>& log_u, double tau) {
  std::vector<double> order, offset;
  for (const auto& alpha : exps) {
    double m = 0, d = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      m += alpha[j];
      d += alpha[j] * log_u[j];
    }
    order.push_back(m);
    offset.push_back(d);
  }
  const auto value = [&](double x) {
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < order.size(); ++i) {
      top = std::max(top, 2.0 * (order[i] * x + offset[i]));
    }
    double acc = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      acc += std::exp(2.0 * (order[i] * x + offset[i]) - top);
    }
    return 0.5 * (top + std::log(acc));
  };
  double hi = 5, lo = -tau - 80;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (value(mid) < -tau ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> tail_of(const std::vector<double>& xs, std::size_t keep) {
  return std::vector<double>(xs.end() - static_cast<std::ptrdiff_t>(keep), xs.end());
}

double slope_from_profile(const std::vector<double>& taus,
                          const std::vector<double>& neg_log_v) {
  std::vector<double> x;
  x.reserve(taus.size());
  for (double t : taus) x.push_back(2.0 * t);
  const std::size_t keep = std::max<std::size_t>(3, (taus.size() * 3 + 4) / 5);
  return ols_slope(tail_of(x, keep), tail_of(neg_log_v, keep)).slope;
}

std::complex<double> eval_form(const std::vector<std::complex<double>>& row,
                               const std::vector<std::complex<double>>& w) {
  std::complex<double> acc = 0;
  for (std::size_t l = 0; l < w.size(); ++l) acc += row[l] * w[l];
  return acc;
}

}  // namespace

double sublevel_volume(const SingularityModel& m, double t, double radius,
                       const NumericConfig& cfg) {
  if (t <= 0) throw std::invalid_argument("t must be positive");
  if (!(radius > 0) || radius > 1) throw std::invalid_argument("radius must lie in (0, 1]");
  const ModelEval eval = make_eval(m);
  if (!eval.monomial) {
    // A truncated germ has empty sublevel sets below -M.
    if (-t <= eval.truncation) return 0;
    return weighted_closed_volume(eval.weights, t, radius);
  }
  return monomial_mc_volume(std::get<MonomialIdeal>(m), eval, t, radius, cfg, 1);
}

DecayEstimate lct_estimate_decay(const SingularityModel& m, const std::vector<double>& t_grid,
                                 double radius, const NumericConfig& cfg) {
  if (t_grid.size() < 5) throw std::invalid_argument("need at least 5 grid points");
  for (std::size_t i = 0; i + 1 < t_grid.size(); ++i) {
    if (!(t_grid[i] < t_grid[i + 1])) throw std::invalid_argument("t grid must increase");
  }
  if (t_grid.front() <= 0) throw std::invalid_argument("t grid must be positive");

  DecayEstimate out;
  out.t_grid = t_grid;
  const ModelEval eval = make_eval(m);
  std::vector<double> usable_t, usable_logv;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    double v;
    if (!eval.monomial) {
      v = weighted_closed_volume(eval.weights, t_grid[i], radius);
    } else {
      v = monomial_mc_volume(std::get<MonomialIdeal>(m), eval, t_grid[i], radius, cfg,
                             100 + i);
    }
    const double logv = std::log(v);
    out.log_volumes.push_back(logv);
    if (v > 0 && std::isfinite(logv)) {
      usable_t.push_back(t_grid[i]);
      usable_logv.push_back(logv);
    }
  }
  if (usable_t.size() < 2) {
    throw ValidationError("volume underflow: grid too deep for float range");
  }

  // Deepest 60% of the usable grid; shallow t carries polynomial prefactors.
  const std::size_t keep = std::max<std::size_t>(2, (usable_t.size() * 3 + 4) / 5);
  std::vector<double> xs, ys;
  for (std::size_t i = usable_t.size() - keep; i < usable_t.size(); ++i) {
    xs.push_back(2.0 * usable_t[i]);
    ys.push_back(-usable_logv[i]);
  }
  const Ols fit = ols_slope(xs, ys);
  out.c_hat = fit.slope;
  out.stderr_ = fit.stderr_;
  return out;
}

namespace {

// Fixed-depth adaptive Simpson for the smooth 1-d strata integrands.
double simpson_rec(const std::function<double(double)>& f, double lo, double hi, double flo,
                   double fmid, double fhi, double whole, double eps, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
  const double flm = f(lm), frm = f(rm);
  const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
  const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps * (1.0 + std::abs(whole))) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson_rec(f, lo, mid, flo, flm, fmid, left, eps, depth - 1) +
         simpson_rec(f, mid, hi, fmid, frm, fhi, right, eps, depth - 1);
}

double integrate_smooth(const std::function<double(double)>& f, double lo, double hi) {
  const double flo = f(lo), fhi = f(hi), fmid = f(0.5 * (lo + hi));
  const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  return simpson_rec(f, lo, hi, flo, fmid, fhi, whole, 1e-10, 24);
}

// Exact mass of the dyadic shell {2^{-k-1} < max_j |z_j| <= 2^{-k}} for the
// weighted integrand e^{-2 c phi}: pin the largest log-coordinate u, the
// rest integrate in closed form through box_max_integral.
double weighted_shell_mass(const std::vector<double>& a, double c, std::size_t k) {
  const std::size_t n = a.size();
  const double top = -static_cast<double>(k) * std::log(2.0);
  const double split = top - std::log(2.0);
  double total = 0;
  for (std::size_t j0 = 0; j0 < n; ++j0) {
    std::vector<double> rest;
    rest.reserve(n - 1);
    for (std::size_t l = 0; l < n; ++l) {
      if (l != j0) rest.push_back(a[l]);
    }
    const double aj = a[j0];
    total += integrate_smooth(
        [&](double u) { return std::exp(2.0 * u) * box_max_integral(rest, aj * u, c, u); },
        split, top);
  }
  return std::pow(kTwoPi, static_cast<double>(n)) * total;
}

}  // namespace

IntegrabilityResult integrability_check(const SingularityModel& m, double c,
                                        std::uint64_t samples, std::uint64_t seed) {
  if (c <= 0) throw std::invalid_argument("c must be positive");
  const ModelEval eval = make_eval(m);
  const std::size_t n = model_dim(m);
  constexpr std::size_t kShells = 10;

  std::vector<double> shell_mass(kShells, 0.0);
  bool exact_strata = !eval.monomial;
  if (exact_strata) {
    // Weighted models: every stratum evaluates deterministically; shell
    // masses near the threshold sit in corners no sampler reaches.
    for (std::size_t k = 0; k < kShells; ++k) {
      shell_mass[k] = weighted_shell_mass(eval.weights, c, k);
    }
  } else {
    const std::uint64_t per_shell = std::max<std::uint64_t>(samples / kShells, 1024);
    parallel_for(kShells, [&](std::size_t k) {
      // Shell k: sup norm between 2^{-k-1} and 2^{-k}. Tilted samples on the
      // outer box; the indicator keeps the shell. Sampling reaches the
      // divergence-driving corner only while pure-power ratios are moderate;
      // the weighted class above is handled exactly for that reason.
      const double top = -static_cast<double>(k) * std::log(2.0);
      const double split = top - std::log(2.0);
      SplitMix64 rng(derive_seed(seed, 1000 + k));
      std::vector<double> x(n);
      double acc = 0;
      for (std::uint64_t s = 0; s < per_shell; ++s) {
        double sup = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
          x[j] = top + 0.5 * std::log(rng.next_open());
          sup = std::max(sup, x[j]);
        }
        if (sup <= split) continue;
        acc += std::exp(-2.0 * c * eval.phi(x));
      }
      double box_measure = 1;
      for (std::size_t j = 0; j < n; ++j) box_measure *= M_PI * std::exp(2.0 * top);
      shell_mass[k] = box_measure * acc / static_cast<double>(per_shell);
    });
  }

  std::vector<double> ks, logs;
  for (std::size_t k = 2; k < kShells; ++k) {
    if (shell_mass[k] > 0 && std::isfinite(std::log(shell_mass[k]))) {
      ks.push_back(static_cast<double>(k));
      logs.push_back(std::log(shell_mass[k]));
    }
  }
  IntegrabilityResult out;
  if (ks.size() < 4) return out;  // inconclusive
  const Ols fit = ols_slope(ks, logs);
  out.statistic = fit.slope;
  // Dead band: +-3% of c translated to the per-shell log-ratio scale, plus
  // sampling noise when the strata were estimated.
  double band = 0.03 * 2.0 * std::log(2.0) * c;
  if (!exact_strata) band = std::max(band, 3.0 * fit.stderr_);
  if (fit.slope < -band) {
    out.verdict = IntegrabilityVerdict::Finite;
  } else if (fit.slope > band) {
    out.verdict = IntegrabilityVerdict::Diverging;
  }
  return out;
}

double generic_restriction_estimate(const SingularityModel& m, std::size_t k,
                                    std::size_t trials, std::uint64_t seed) {
  const std::size_t n = model_dim(m);
  if (k < 1 || k >= n) throw std::invalid_argument("restriction dimension out of range");
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (std::holds_alternative<TruncatedWeighted>(m)) {
    throw std::invalid_argument("restriction estimates expect an untruncated model");
  }
  const ModelEval eval = make_eval(m);

  // Radial (k = 1) and box-importance (weighted k >= 2) profiles stay
  // accurate at depth; the sampled monomial path needs a shallow grid.
  std::vector<double> taus;
  if (k == 1 || !eval.monomial) {
    for (double t = 4; t <= 22; t += 2) taus.push_back(t);
  } else {
    for (double t = 2; t <= 9; t += 0.7) taus.push_back(t);
  }

  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(derive_seed(seed, 500 + trial));
    const auto frame = random_frame(rng, n, k);

    if (k == 1) {
      std::vector<double> log_u(n), neg_log_v;
      for (std::size_t j = 0; j < n; ++j) log_u[j] = std::log(std::abs(frame[0][j]));
      for (double tau : taus) {
        const double x = eval.monomial
                             ? line_radius_monomial(eval.exponents, log_u, tau)
                             : line_radius_weighted(eval.weights, log_u, tau);
        neg_log_v.push_back(-(std::log(M_PI) + 2.0 * std::min(x, 0.0)));
      }
      best = std::max(best, slope_from_profile(taus, neg_log_v));
      continue;
    }

    // k >= 2: Monte Carlo on the plane. Forms l_j(w) = z_j restricted to it.
    const std::uint64_t per_point = 20000;
    std::vector<std::vector<std::complex<double>>> rows(n,
                                                        std::vector<std::complex<double>>(k));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < k; ++l) rows[j][l] = frame[l][j];
    }
    bool degenerate = false;
    std::vector<double> profile;
    for (double tau : taus) {
      double logv = 0;
      if (!eval.monomial) {
        // The k tightest constraints |l_j(w)| < R_j pin an importance box
        // (weights ascend, so those are the first k).
        std::vector<double> radii(n);
        for (std::size_t j = 0; j < n; ++j) radii[j] = std::exp(-tau / eval.weights[j]);
        std::vector<std::vector<std::complex<double>>> a(
            k, std::vector<std::complex<double>>(k));
        std::vector<std::vector<std::complex<double>>> inv(
            k, std::vector<std::complex<double>>(k));
        for (std::size_t i = 0; i < k; ++i) {
          a[i] = rows[i];
          inv[i][i] = 1;
        }
        double logdet2 = 0;
        for (std::size_t col = 0; col < k && !degenerate; ++col) {
          std::size_t piv = col;
          for (std::size_t r2 = col + 1; r2 < k; ++r2) {
            if (std::abs(a[r2][col]) > std::abs(a[piv][col])) piv = r2;
          }
          if (std::abs(a[piv][col]) < 1e-12) {
            degenerate = true;
            break;
          }
          std::swap(a[piv], a[col]);
          std::swap(inv[piv], inv[col]);
          logdet2 += 2.0 * std::log(std::abs(a[col][col]));
          const std::complex<double> d = a[col][col];
          for (std::size_t j2 = 0; j2 < k; ++j2) {
            a[col][j2] /= d;
            inv[col][j2] /= d;
          }
          for (std::size_t r2 = 0; r2 < k; ++r2) {
            if (r2 == col) continue;
            const std::complex<double> f = a[r2][col];
            if (f == std::complex<double>(0)) continue;
            for (std::size_t j2 = 0; j2 < k; ++j2) {
              a[r2][j2] -= f * a[col][j2];
              inv[r2][j2] -= f * inv[col][j2];
            }
          }
        }
        if (degenerate) break;
        double log_box = -logdet2 + static_cast<double>(k) * std::log(M_PI);
        for (std::size_t i = 0; i < k; ++i) log_box += 2.0 * std::log(radii[i]);
        std::uint64_t hits = 0;
        std::vector<std::complex<double>> xi(k), w(k);
        for (std::uint64_t s = 0; s < per_point; ++s) {
          for (std::size_t i = 0; i < k; ++i) {
            const double rad = radii[i] * std::sqrt(rng.next_double());
            xi[i] = std::polar(rad, kTwoPi * rng.next_double());
          }
          for (std::size_t l = 0; l < k; ++l) {
            std::complex<double> acc = 0;
            for (std::size_t i = 0; i < k; ++i) acc += inv[l][i] * xi[i];
            w[l] = acc;
          }
          bool ok = true;
          for (std::size_t l = 0; l < k && ok; ++l) {
            if (std::abs(w[l]) >= 1.0) ok = false;
          }
          for (std::size_t j = k; j < n && ok; ++j) {
            if (std::abs(eval_form(rows[j], w)) >= radii[j]) ok = false;
          }
          if (ok) ++hits;
        }
        if (hits == 0) {
          degenerate = true;
          break;
        }
        logv = log_box + std::log(static_cast<double>(hits) / static_cast<double>(per_point));
      } else {
        // Log-uniform radius sampling for restricted monomial models: the
        // restricted forms can cancel, so no enclosing box exists; a uniform
        // log-radius proposal with density weights e^{2 sum x} keeps every
        // depth reachable. The germ vanishes to order >= the Lelong number
        // nu, and the restricted threshold is at most k/nu, which bounds the
        // depth that can carry mass.
        double order = std::numeric_limits<double>::infinity();
        for (const auto& alpha : eval.exponents) {
          double l1 = 0;
          for (double aj : alpha) l1 += aj;
          order = std::min(order, l1);
        }
        const double depth =
            static_cast<double>(k) * tau / std::max(order, 1.0) + 8.0;
        double mean_weight = 0;
        std::uint64_t hits = 0;
        std::vector<std::complex<double>> w(k);
        std::vector<double> zlog(n);
        for (std::uint64_t s = 0; s < per_point; ++s) {
          double sumx = 0;
          for (std::size_t l = 0; l < k; ++l) {
            const double x = -depth * rng.next_double();
            sumx += x;
            w[l] = std::polar(std::exp(x), kTwoPi * rng.next_double());
          }
          for (std::size_t j = 0; j < n; ++j) {
            zlog[j] = std::log(std::abs(eval_form(rows[j], w)));
          }
          double top = -std::numeric_limits<double>::infinity();
          for (const auto& alpha : eval.exponents) {
            double dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += alpha[j] * zlog[j];
            top = std::max(top, 2.0 * dot);
          }
          double acc = 0;
          for (const auto& alpha : eval.exponents) {
            double dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += alpha[j] * zlog[j];
            acc += std::exp(2.0 * dot - top);
          }
          if (0.5 * (top + std::log(acc)) < -tau) {
            ++hits;
            mean_weight += std::exp(2.0 * sumx);
          }
        }
        if (hits == 0) {
          degenerate = true;
          break;
        }
        mean_weight /= static_cast<double>(per_point);
        logv = static_cast<double>(k) * std::log(kTwoPi * depth) + std::log(mean_weight);
      }
      profile.push_back(-logv);
    }
    if (!degenerate && profile.size() == taus.size()) {
      best = std::max(best, slope_from_profile(taus, profile));
    }
  }
  if (!std::isfinite(best)) throw ValidationError("restriction estimate failed on every trial");
  return best;
}

double slice_energy(const SingularityModel& m, std::complex<double> w) {
  const double aw = std::abs(w);
  if (!(aw > 0) || aw >= 1) throw std::invalid_argument("|w| must lie in (0, 1)");
  if (std::holds_alternative<MonomialIdeal>(m)) {
    throw std::invalid_argument("slice energy is defined for weighted models");
  }
  if (model_dim(m) != 2) throw std::invalid_argument("slice energy supports n = 2 only");
  const ModelEval eval = make_eval(m);
  const double a1 = eval.weights[0], a2 = eval.weights[1];
  // Slicing along the heavier coordinate, the one-variable slice is a
  // truncated germ whose Monge-Ampere mass a1 sits at level a2 log|w|.
  const double level = std::max(a2 * std::log(aw), eval.truncation);
  return a1 * level;
}

SliceLimitTrace slice_limit_check(const SingularityModel& m, double lambda, double r,
                                  std::size_t depth, double threshold) {
  if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");
  if (!(r > 0) || r >= 0.5) throw std::invalid_argument("r must lie in (0, 1/2)");
  if (depth < 3) throw std::invalid_argument("depth too small");
  if (!std::holds_alternative<WeightedMonomial>(m)) {
    throw std::invalid_argument("slice limit check expects a weighted model");
  }
  const std::size_t n = model_dim(m);
  if (n != 2 && n != 3) throw std::invalid_argument("slice limit check supports n = 2 or 3");

  const ModelEval eval = make_eval(m);
  const std::vector<double> inner(eval.weights.begin(), eval.weights.end() - 1);
  const double a_last = eval.weights.back();

  SliceLimitTrace out;
  out.lambda = lambda;
  out.threshold = threshold;
  for (std::size_t j = 1; j <= depth; ++j) {
    const double w = std::pow(2.0, -static_cast<double>(j));
    const double c_level = a_last * std::log(w);
    out.w_sequence.push_back(w);
    out.values.push_back(slice_h(inner, c_level, lambda, r) * w * w);
  }
  const std::size_t window = std::max<std::size_t>(2, depth / 4);
  bool decreasing = true;
  for (std::size_t i = out.values.size() - window; i + 1 < out.values.size(); ++i) {
    if (!(out.values[i + 1] <= out.values[i])) {
      decreasing = false;
      break;
    }
  }
  out.verdict = decreasing && out.values.back() < threshold;
  return out;
}

}  // namespace lctlab::numeric
