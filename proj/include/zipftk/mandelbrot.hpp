#pragma once

// Cost-ratio optimization over word frequencies: the logarithmic cost model
// C_k = c0 * log2(k + k0), the entropy and average-cost functionals, the
// Zipf-Mandelbrot distribution p_k proportional to (k + k0)^{-B}, the
// self-consistent fixed point p_k = lambda' * 2^{-H * C_k / C}, and the local
// dynamics that adjusts frequencies whose per-word cost ratio leaves a band
// around the global ratio C/H.
//
// At the self-consistent point with the full (untruncated) Zipf-Mandelbrot
// distribution, B = H/C holds exactly when zeta(B, 1 + k0) = 1, which is the
// constraint solve_exponent inverts. Truncation to N ranks shifts the
// fixed-point exponent below the analytic root and the gap closes as N grows;
// tests pin both the truncated values and the trend.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "zipftk/errors.hpp"
#include "zipftk/rng.hpp"

namespace zipftk {

using FrequencyVector = std::vector<double>;

inline void validate_frequency_vector(const FrequencyVector& p,
                                      double tol = 1e-9) {
  if (p.empty()) throw EmptyInput("frequency vector: empty");
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0))
      throw DomainError("frequency vector: negative component");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > tol)
    throw DomainError("frequency vector: sums to " + std::to_string(sum) +
                      ", expected 1");
}

// Cost of transmitting the rank-k word: cost(k) = c0 * log2(k + k0). The
// offset k0 models k0 unused cheap addresses; k0 = 0 is the pure logarithmic
// cost.
struct CostModel {
  double c0 = 1.0;
  double k0 = 0.0;

  double cost(std::size_t k) const {
    return c0 * std::log2(static_cast<double>(k) + k0);
  }
};

inline void validate_cost_model(const CostModel& cm) {
  if (!(cm.c0 > 0.0)) throw DomainError("cost model: c0 must be positive");
  if (!(cm.k0 >= 0.0)) throw DomainError("cost model: k0 must be >= 0");
}

// C = sum_k p_k * cost(k), the average cost per word.
inline double average_cost(const FrequencyVector& p, const CostModel& cm) {
  validate_frequency_vector(p);
  validate_cost_model(cm);
  double c = 0.0;
  for (std::size_t k = 1; k <= p.size(); ++k) c += p[k - 1] * cm.cost(k);
  return c;
}

// H = -sum_k p_k log2 p_k, in bits; zero components contribute zero.
inline double entropy(const FrequencyVector& p) {
  validate_frequency_vector(p);
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

// The objective C/H. A zero-entropy (degenerate) distribution has no
// meaningful ratio.
inline double cost_ratio(const FrequencyVector& p, const CostModel& cm) {
  const double h = entropy(p);
  if (!(h > 0.0))
    throw DegenerateDistribution("cost_ratio: entropy is zero");
  return average_cost(p, cm) / h;
}

// p_k proportional to (k + k0)^{-B} for k = 1..N, normalized over the
// truncation. Requires B > 1 (the infinite form is not normalizable
// otherwise; the truncated form follows the same contract).
inline FrequencyVector zipf_mandelbrot_pmf(double B, double k0, std::size_t N) {
  if (!(B > 1.0))
    throw DomainError("zipf_mandelbrot_pmf: B must exceed 1, got " +
                      std::to_string(B));
  if (!(k0 >= 0.0))
    throw DomainError("zipf_mandelbrot_pmf: k0 must be >= 0");
  if (N < 1) throw DomainError("zipf_mandelbrot_pmf: N must be >= 1");
  FrequencyVector p(N);
  double sum = 0.0;
  for (std::size_t k = 1; k <= N; ++k) {
    p[k - 1] = std::pow(static_cast<double>(k) + k0, -B);
    sum += p[k - 1];
  }
  for (double& v : p) v /= sum;
  return p;
}

// Iterates p <- normalize(2^{-H(p) * C_k / C(p)}) from the uniform start
// until the largest component change drops below tol. The fixed point is a
// truncated Zipf-Mandelbrot distribution with exponent H/C. Costs must be
// finite and non-decreasing. All-equal costs short-circuit to the uniform
// distribution (the exact fixed point by symmetry). Distributions whose
// mass collapses onto zero-cost ranks make C vanish; iteration then stops at
// the current point, which is the degenerate self-consistent state.
inline FrequencyVector solve_selfconsistent_pmf(const std::vector<double>& costs,
                                                double tol = 1e-12,
                                                std::size_t max_iters = 10000) {
  if (costs.empty()) throw EmptyInput("solve_selfconsistent_pmf: no costs");
  if (!(tol > 0.0)) throw DomainError("solve_selfconsistent_pmf: tol <= 0");
  for (std::size_t i = 0; i < costs.size(); ++i) {
    if (!std::isfinite(costs[i]))
      throw DomainError("solve_selfconsistent_pmf: non-finite cost");
    if (i && costs[i] < costs[i - 1])
      throw DomainError("solve_selfconsistent_pmf: costs must be non-decreasing");
  }
  const std::size_t N = costs.size();
  FrequencyVector p(N, 1.0 / static_cast<double>(N));
  if (costs.front() == costs.back()) return p;  // constant costs
  double change = 0.0;
  for (std::size_t it = 0; it < max_iters; ++it) {
    double H = 0.0, C = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
      if (p[k] > 0.0) H -= p[k] * std::log2(p[k]);
      C += p[k] * costs[k];
    }
    if (!(C > 0.0)) return p;  // mass confined to zero-cost ranks
    FrequencyVector q(N);
    double sum = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
      q[k] = std::exp2(-H * costs[k] / C);
      sum += q[k];
    }
    change = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
      q[k] /= sum;
      change = std::max(change, std::fabs(q[k] - p[k]));
    }
    p.swap(q);
    if (change < tol) return p;
  }
  throw NoConvergence("solve_selfconsistent_pmf: residual " +
                      std::to_string(change) + " after " +
                      std::to_string(max_iters) + " iterations");
}

// Residual of the self-consistency equation at p: the largest deviation
// between p and one exact update step. Zero (to rounding) at a fixed point.
inline double selfconsistency_residual(const FrequencyVector& p,
                                       const std::vector<double>& costs) {
  double H = 0.0, C = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] > 0.0) H -= p[k] * std::log2(p[k]);
    C += p[k] * costs[k];
  }
  if (!(C > 0.0)) return 0.0;
  double sum = 0.0;
  std::vector<double> q(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    q[k] = std::exp2(-H * costs[k] / C);
    sum += q[k];
  }
  double res = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k)
    res = std::max(res, std::fabs(q[k] / sum - p[k]));
  return res;
}

// Configuration of the local cost-ratio dynamics. band_gamma is the relative
// half-width of the acceptance band around the global ratio; values up to 1
// are allowed (1 makes the band cover every positive ratio in practice).
struct DynamicsConfig {
  std::size_t n_words = 100;
  CostModel cost_model;
  double band_gamma = 0.05;
  double step_factor = 1.05;
  std::size_t max_iters = 100000;
  double p_floor = 1e-15;
  std::size_t trajectory_stride = 1;  // record every k-th iteration
};

inline void validate_dynamics_config(const DynamicsConfig& cfg) {
  if (cfg.n_words < 2) throw DomainError("dynamics: n_words must be >= 2");
  validate_cost_model(cfg.cost_model);
  if (!(cfg.band_gamma > 0.0 && cfg.band_gamma <= 1.0))
    throw DomainError("dynamics: band_gamma must lie in (0, 1]");
  if (!(cfg.step_factor > 1.0))
    throw DomainError("dynamics: step_factor must exceed 1");
  if (!(cfg.p_floor > 0.0 && cfg.p_floor < 1.0 / double(cfg.n_words)))
    throw DomainError("dynamics: p_floor must lie in (0, 1/n_words)");
  if (cfg.trajectory_stride < 1)
    throw DomainError("dynamics: trajectory_stride must be >= 1");
}

struct TrajectoryRow {
  std::uint64_t iter;
  double C, H, Cstar;
  std::uint64_t n_changed;
};

struct DynamicsResult {
  FrequencyVector p;                     // final frequencies, by word index
  std::vector<TrajectoryRow> trajectory;
  std::uint64_t iterations = 0;          // iterations that changed something
  bool converged = false;                // stopped because nothing changed
};

// Local dynamics: start from a random distribution, then repeat
//   1. rank words by frequency (ties keep their previous rank);
//   2. compute H, C and the global ratio C* = C/H;
//   3. per word, C*_k = cost(rank_k) / (-log2 p_k);
//   4. multiply p_k by step_factor when C*_k < (1-gamma)C* (word too cheap
//      for its frequency), divide when C*_k > (1+gamma)C*;
//   5. clamp at p_floor ("extinct" words), renormalize.
// Stops when an iteration changes nothing, or after max_iters.
inline DynamicsResult run_local_dynamics(const DynamicsConfig& cfg,
                                         std::uint64_t seed) {
  validate_dynamics_config(cfg);
  const std::size_t N = cfg.n_words;
  Rng rng(seed);
  FrequencyVector p(N);
  double sum = 0.0;
  for (double& v : p) {
    v = std::max(rng.next_unit(), cfg.p_floor);
    sum += v;
  }
  for (double& v : p) v /= sum;

  std::vector<std::size_t> order(N);  // order[r] = word at rank r+1
  for (std::size_t i = 0; i < N; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });

  DynamicsResult res;
  std::vector<double> cost(N);
  for (std::uint64_t it = 1; it <= cfg.max_iters; ++it) {
    for (std::size_t r = 0; r < N; ++r)
      cost[order[r]] = cfg.cost_model.cost(r + 1);
    double H = 0.0, C = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      H -= p[i] * std::log2(p[i]);
      C += p[i] * cost[i];
    }
    const double cstar = C / H;
    const double lo = (1.0 - cfg.band_gamma) * cstar;
    const double hi = (1.0 + cfg.band_gamma) * cstar;
    std::uint64_t n_changed = 0;
    for (std::size_t i = 0; i < N; ++i) {
      const double ck = cost[i] / (-std::log2(p[i]));
      if (ck < lo) {
        p[i] *= cfg.step_factor;
        ++n_changed;
      } else if (ck > hi) {
        p[i] /= cfg.step_factor;
        ++n_changed;
      }
    }
    if (it % cfg.trajectory_stride == 0 || n_changed == 0)
      res.trajectory.push_back({it, C, H, cstar, n_changed});
    if (n_changed == 0) {
      res.iterations = it - 1;
      res.converged = true;
      break;
    }
    res.iterations = it;
    sum = 0.0;
    for (double& v : p) {
      v = std::max(v, cfg.p_floor);
      sum += v;
    }
    for (double& v : p) v /= sum;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
  }
  res.p = std::move(p);
  return res;
}

// Frequencies of a dynamics result in rank order (descending).
inline FrequencyVector ranked(const FrequencyVector& p) {
  FrequencyVector out = p;
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

}  // namespace zipftk
