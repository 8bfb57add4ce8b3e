#pragma once

// Coverings of the unit space by intervals: exact gap/overlap measurement by
// endpoint sweep, rank layers and the layer-width parameter rho, the dyadic
// hierarchical covering, and conversion of interval lengths to a
// rank-frequency table.
//
// The space has measure 1. Intervals live on [0, 1]; on the circle an
// interval may wrap, in which case it is stored as lo near the top of the
// space with hi its image after wrapping, and its length is (1-lo) + hi.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zipftk/errors.hpp"
#include "zipftk/powerlaw.hpp"

namespace zipftk {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool wraps = false;  // circular interval passing through the origin

  double length() const { return wraps ? (1.0 - lo) + hi : hi - lo; }
};

// Interval set sorted by non-increasing length. space_measure is fixed at 1;
// the field exists so reports can state the convention explicitly.
struct Covering {
  std::vector<Interval> intervals;
  double space_measure = 1.0;
  bool circular = false;

  std::size_t size() const { return intervals.size(); }
};

inline void validate_covering(const Covering& c) {
  for (const Interval& iv : c.intervals) {
    if (!(iv.lo >= 0.0 && iv.lo <= 1.0 && iv.hi >= 0.0 && iv.hi <= 1.0))
      throw DomainError("covering: interval endpoints must lie in [0, 1]");
    if (!iv.wraps && iv.hi < iv.lo)
      throw DomainError("covering: non-wrapping interval with hi < lo");
    if (iv.wraps && !c.circular)
      throw DomainError("covering: wrapping interval in a linear covering");
  }
  for (std::size_t i = 1; i < c.intervals.size(); ++i)
    if (c.intervals[i].length() > c.intervals[i - 1].length() + 1e-15)
      throw DomainError("covering: lengths must be non-increasing");
}

// Builds a covering from raw intervals, sorting by non-increasing length
// (ties keep the input order, for reproducibility).
inline Covering make_covering(std::vector<Interval> intervals, bool circular) {
  std::stable_sort(intervals.begin(), intervals.end(),
                   [](const Interval& a, const Interval& b) {
                     return a.length() > b.length();
                   });
  Covering c;
  c.intervals = std::move(intervals);
  c.circular = circular;
  validate_covering(c);
  return c;
}

// Helper for simulator output: an interval of the given length centered at
// `center` on the circle, wrap-normalized.
inline Interval centered_interval(double center, double length) {
  double lo = center - length / 2.0;
  lo -= std::floor(lo);  // wrap into [0, 1)
  double hi = lo + length;
  Interval iv;
  iv.lo = lo;
  if (hi > 1.0) {
    iv.wraps = true;
    iv.hi = hi - 1.0;
  } else {
    iv.hi = hi;
  }
  return iv;
}

// Measure of the space covered by no interval (gap), by exactly one, and by
// two or more (overlap). The three parts partition the space:
// gap + exactly_once + overlap = 1.
struct CoverageProfile {
  double gap = 0.0;
  double exactly_once = 0.0;
  double overlap = 0.0;
};

inline CoverageProfile coverage_profile(const Covering& c) {
  std::vector<std::pair<double, int>> ev;
  ev.reserve(c.intervals.size() * 2 + 2);
  for (const Interval& iv : c.intervals) {
    if (!(iv.length() > 0.0)) continue;
    if (iv.wraps) {
      ev.emplace_back(iv.lo, +1);
      ev.emplace_back(1.0, -1);
      ev.emplace_back(0.0, +1);
      ev.emplace_back(iv.hi, -1);
    } else {
      ev.emplace_back(iv.lo, +1);
      ev.emplace_back(iv.hi, -1);
    }
  }
  std::sort(ev.begin(), ev.end());
  CoverageProfile prof;
  int depth = 0;
  double prev = 0.0;
  auto account = [&](double upto) {
    const double seg = upto - prev;
    if (seg > 0.0) {
      if (depth == 0)
        prof.gap += seg;
      else if (depth == 1)
        prof.exactly_once += seg;
      else
        prof.overlap += seg;
    }
  };
  for (const auto& [x, d] : ev) {
    account(x);
    depth += d;
    prev = x;
  }
  account(1.0);
  return prof;
}

inline double gap(const Covering& c) { return coverage_profile(c).gap; }
inline double overlap(const Covering& c) { return coverage_profile(c).overlap; }

// Sub-covering of ranks [k, floor(k * rho)], the "layer" at scale k. The
// upper rank is clamped to the covering size (finite-sample truncation);
// k itself must be a valid rank.
inline Covering layer(const Covering& c, std::size_t k, double rho) {
  if (k < 1 || k > c.size())
    throw RankOutOfRange("layer: rank " + std::to_string(k) +
                         " outside 1.." + std::to_string(c.size()));
  if (!(rho >= 1.0)) throw DomainError("layer: rho must be >= 1");
  std::size_t hi = static_cast<std::size_t>(std::floor(k * rho));
  hi = std::min(hi, c.size());
  Covering out;
  out.circular = c.circular;
  out.space_measure = c.space_measure;
  out.intervals.assign(c.intervals.begin() + (k - 1), c.intervals.begin() + hi);
  return out;
}

// Layer-width parameter granularity: chosen rho values sit this far below
// the next rank boundary so that floor(k * rho) is unambiguous.
inline constexpr double kRhoResolution = 1e-9;

// Smallest rho (to within kRhoResolution) whose layer at k reaches the space
// measure: the least m >= k with length(k) + ... + length(m) >= space_measure
// determines rho = (m + 1) / k - kRhoResolution, so that floor(k * rho) = m.
// A slack of 1e-12 absorbs rounding when the layer sum hits the measure
// exactly. Throws InsufficientMass when even the full tail falls short.
inline double choose_rho(const Covering& c, std::size_t k) {
  const std::size_t n = c.size();
  if (k < 1 || k > n)
    throw RankOutOfRange("choose_rho: rank " + std::to_string(k) +
                         " outside 1.." + std::to_string(n));
  const double slack = 1e-12;
  double prefix = 0.0;  // lengths of ranks 1..k-1
  for (std::size_t i = 0; i + 1 < k; ++i) prefix += c.intervals[i].length();
  const double target = c.space_measure + prefix - slack;
  double acc = prefix;
  for (std::size_t m = k; m <= n; ++m) {
    acc += c.intervals[m - 1].length();
    if (acc >= target)
      return (static_cast<double>(m) + 1.0) / static_cast<double>(k) -
             kRhoResolution;
  }
  throw InsufficientMass("choose_rho: ranks " + std::to_string(k) + ".." +
                         std::to_string(n) + " sum to " +
                         std::to_string(acc - prefix) + " < space measure");
}

// One diagnostic row per probe rank: the layer [k, floor(k*rho)], its gap and
// overlap measures, and its total length.
struct LayerDiagnosticsRow {
  std::size_t k = 0;
  double rho = 0.0;
  double gap = 0.0;
  double overlap = 0.0;
  double length_sum = 0.0;
};

using LayerDiagnostics = std::vector<LayerDiagnosticsRow>;

// Computes diagnostics at each probe rank. With rho > 0 the same fixed value
// is used for every row; with rho = 0 each row uses choose_rho(c, k). Probe
// ranks beyond the covering size are skipped rather than reported.
inline LayerDiagnostics layer_diagnostics(const Covering& c,
                                          const std::vector<std::size_t>& ks,
                                          double rho = 0.0) {
  LayerDiagnostics rows;
  for (std::size_t k : ks) {
    if (k < 1 || k > c.size()) continue;
    double r = rho;
    if (rho == 0.0) {
      try {
        r = choose_rho(c, k);
      } catch (const InsufficientMass&) {
        continue;  // tail too light at this k; no meaningful layer
      }
    }
    Covering L = layer(c, k, r);
    CoverageProfile prof = coverage_profile(L);
    double len = 0.0;
    for (const Interval& iv : L.intervals) len += iv.length();
    rows.push_back({k, r, prof.gap, prof.overlap, len});
  }
  return rows;
}

// The dyadic hierarchical covering: rank 1 is the whole space, and level
// d = 1..depth contributes 2^d intervals of length 2^{-d} tiling [0, 1].
// Interval count is 2^{depth+1} - 1; lengths follow the staircase
// mu_k = 2^{-floor(log2 k)}. Depth is capped at 20 (~2M intervals).
inline Covering hierarchical_covering(int depth) {
  if (depth < 0) throw DomainError("hierarchical_covering: negative depth");
  if (depth > 20)
    throw DepthTooLarge("hierarchical_covering: depth " +
                        std::to_string(depth) + " exceeds 20");
  Covering c;
  c.circular = false;
  c.intervals.push_back({0.0, 1.0, false});
  for (int d = 1; d <= depth; ++d) {
    const std::size_t m = std::size_t{1} << d;
    const double w = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j) {
      const double lo = static_cast<double>(j) * w;
      const double hi = (j + 1 == m) ? 1.0 : lo + w;
      c.intervals.push_back({lo, hi, false});
    }
  }
  return c;
}

// Interval lengths as a rank-frequency table (proportionality constant 1).
// Zero-length intervals are dropped; an all-zero covering is an error.
inline RankFrequencyTable lengths_to_rank_freq(const Covering& c) {
  RankFrequencyTable t;
  for (const Interval& iv : c.intervals) {
    const double len = iv.length();
    if (len > 0.0) t.frequency.push_back(len);
  }
  if (t.frequency.empty())
    throw EmptyCovering("lengths_to_rank_freq: no positive-length intervals");
  return t;
}

}  // namespace zipftk
