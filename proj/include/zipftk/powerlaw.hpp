#pragma once

// Rank-frequency accounting and power-law measurement: building rank tables
// from token streams, ordinary least squares exponent fits on log-log data,
// the log-binned frequency spectrum (the distribution-of-frequencies view of
// the same data), and the harmonic-sum bounds
//
//   ln(n/k)  <  sum_{j=k}^{n} 1/j  <  ln((n-1)/(k-1)),   2 <= k < n.
//
// Those two logarithms are the endpoint integral comparisons for the sum
// *without* its final 1/n term, so the upper bound only clears the full sum
// once n exceeds roughly 3k; see harmonic_sum_bounds.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "zipftk/errors.hpp"

namespace zipftk {

// Frequencies by rank: entry i holds rank i+1. Frequencies are positive and
// non-increasing; labels, when present, parallel the frequencies.
struct RankFrequencyTable {
  std::vector<double> frequency;
  std::vector<std::string> labels;  // empty, or one label per rank

  std::size_t size() const { return frequency.size(); }
};

inline void validate_rank_table(const RankFrequencyTable& t) {
  if (t.frequency.empty()) throw EmptyInput("rank table: no entries");
  for (std::size_t i = 0; i < t.frequency.size(); ++i) {
    if (!(t.frequency[i] > 0.0))
      throw DomainError("rank table: frequency at rank " +
                        std::to_string(i + 1) + " is not positive");
    if (i && t.frequency[i] > t.frequency[i - 1])
      throw DomainError("rank table: frequencies increase at rank " +
                        std::to_string(i + 1));
  }
  if (!t.labels.empty() && t.labels.size() != t.frequency.size())
    throw DomainError("rank table: label/frequency length mismatch");
}

// Counts distinct tokens and ranks them by descending count; ties keep
// first-occurrence order so rebuilding a table from the same stream is
// deterministic.
inline RankFrequencyTable rank_frequency(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw EmptyInput("rank_frequency: empty token stream");
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::pair<std::string, double>> counts;  // in first-seen order
  index.reserve(tokens.size() / 4 + 16);
  for (const std::string& tok : tokens) {
    auto [it, fresh] = index.emplace(tok, counts.size());
    if (fresh)
      counts.emplace_back(tok, 1.0);
    else
      counts[it->second].second += 1.0;
  }
  std::vector<std::size_t> order(counts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return counts[a].second > counts[b].second;
  });
  RankFrequencyTable t;
  t.frequency.reserve(order.size());
  t.labels.reserve(order.size());
  for (std::size_t i : order) {
    t.labels.push_back(counts[i].first);
    t.frequency.push_back(counts[i].second);
  }
  return t;
}

// Result of an OLS fit of log f against log k. B is the negated slope, so a
// pure Zipf table f_k = k^{-B0} reports B = B0. fit_range records the
// effective rank window (requested window clamped to the table).
struct PowerLawFit {
  double B = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t k_min = 0;
  std::size_t k_max = 0;
};

namespace detail {

struct OlsResult {
  double slope, intercept, r_squared;
};

inline OlsResult ols(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double r2 = 1.0;
  if (syy > 0.0) {
    double ssres = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double e = ys[i] - (intercept + slope * xs[i]);
      ssres += e * e;
    }
    r2 = 1.0 - ssres / syy;
    r2 = std::max(0.0, std::min(1.0, r2));
  }
  return {slope, intercept, r2};
}

}  // namespace detail

// OLS of log f on log k over ranks [k_min, k_max], one point per rank.
// Passing 0 for both bounds selects the default window [10, n/10], which
// skips the flattened head and the noisy tail of empirical tables. Requires
// at least 10 in-window ranks with positive frequency.
inline PowerLawFit fit_zipf_exponent(const RankFrequencyTable& t,
                                     std::size_t k_min = 0,
                                     std::size_t k_max = 0) {
  const std::size_t n = t.frequency.size();
  if (k_min == 0 && k_max == 0) {
    k_min = 10;
    k_max = n / 10;
  }
  if (k_min < 1) k_min = 1;
  k_max = std::min(k_max, n);
  std::vector<double> xs, ys;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    const double f = t.frequency[k - 1];
    if (f > 0.0) {
      xs.push_back(std::log(static_cast<double>(k)));
      ys.push_back(std::log(f));
    }
  }
  if (xs.size() < 10)
    throw InsufficientData("fit_zipf_exponent: only " +
                           std::to_string(xs.size()) +
                           " positive entries in ranks [" +
                           std::to_string(k_min) + ", " +
                           std::to_string(k_max) + "], need 10");
  const auto fit = detail::ols(xs, ys);
  return {-fit.slope, fit.intercept, fit.r_squared, k_min, k_max};
}

// Log-binned distribution of frequencies. Each bin covers [lo, hi) with the
// top edge chosen so the maximum frequency lands in the last bin; fraction is
// the share of distinct words falling in the bin, so fractions sum to one.
struct FrequencySpectrum {
  struct Bin {
    double lo, hi;      // bin edges
    double center;      // geometric center used for slope fits
    double fraction;    // share of word types in the bin
  };
  std::vector<Bin> bins;
};

// Builds the spectrum with n_bins logarithmic bins spanning the observed
// frequency range. When every frequency is an integer (count data), bin
// edges are rounded to distinct integers so plateau counts are not split
// by fractional boundaries; bin centers then use the geometric mean of the
// covered integer range [lo, hi-1].
inline FrequencySpectrum frequency_spectrum(const RankFrequencyTable& t,
                                            int n_bins = 24) {
  validate_rank_table(t);
  if (n_bins < 1) throw DomainError("frequency_spectrum: n_bins must be >= 1");
  const double fmax = t.frequency.front();
  const double fmin = t.frequency.back();
  FrequencySpectrum spec;
  const double total = static_cast<double>(t.frequency.size());
  if (fmax == fmin) {
    spec.bins.push_back({fmin, fmin * (1.0 + 1e-9), fmin, 1.0});
    return spec;
  }
  bool integral = true;
  for (double f : t.frequency)
    if (f != std::floor(f) || f < 1.0) {
      integral = false;
      break;
    }
  std::vector<double> edges;
  if (integral) {
    const double ratio = (fmax + 1.0) / fmin;
    double prev = 0.0;
    for (int i = 0; i <= n_bins; ++i) {
      double e = std::round(fmin * std::pow(ratio, double(i) / n_bins));
      if (e > prev) {
        edges.push_back(e);
        prev = e;
      }
    }
  } else {
    const double top = fmax * (1.0 + 1e-9);
    const double ratio = top / fmin;
    for (int i = 0; i <= n_bins; ++i)
      edges.push_back(fmin * std::pow(ratio, double(i) / n_bins));
  }
  std::vector<double> cnt(edges.size() - 1, 0.0);
  for (double f : t.frequency) {
    auto it = std::upper_bound(edges.begin(), edges.end(), f);
    std::size_t idx = static_cast<std::size_t>(it - edges.begin());
    if (idx == 0) idx = 1;                       // f == fmin lands in bin 0
    if (idx >= edges.size()) idx = edges.size() - 1;
    cnt[idx - 1] += 1.0;
  }
  for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
    const double lo = edges[b], hi = edges[b + 1];
    double center;
    if (integral)
      center = (hi - 1.0 >= lo) ? std::sqrt(lo * (hi - 1.0)) : lo;
    else
      center = std::sqrt(lo * hi);
    spec.bins.push_back({lo, hi, center, cnt[b] / total});
  }
  return spec;
}

// Slope of the spectrum on log-log axes, using the density convention:
// density = fraction / (hi - lo), fitted over occupied bins whose center
// falls inside [center_min, center_max]. For P(f) ~ f^{-beta} the returned
// beta is positive.
struct SpectrumFit {
  double beta = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t n_bins_used = 0;
};

inline SpectrumFit fit_spectrum_exponent(const FrequencySpectrum& spec,
                                         double center_min,
                                         double center_max) {
  std::vector<double> xs, ys;
  for (const auto& b : spec.bins) {
    if (b.fraction <= 0.0) continue;
    if (b.center < center_min || b.center > center_max) continue;
    const double width = b.hi - b.lo;
    if (!(width > 0.0)) continue;
    xs.push_back(std::log(b.center));
    ys.push_back(std::log(b.fraction / width));
  }
  if (xs.size() < 3)
    throw InsufficientData("fit_spectrum_exponent: only " +
                           std::to_string(xs.size()) +
                           " occupied bins in range, need 3");
  const auto fit = detail::ols(xs, ys);
  return {-fit.slope, fit.intercept, fit.r_squared, xs.size()};
}

// Bounds and exact value of sum_{j=k}^{n} 1/j; requires k >= 2 (the upper
// bound has a k-1 denominator) and n > k. lower < sum always holds, but the
// bracketing is asymptotic: sum < upper fails for n below roughly 3k (at
// n = 3k the margin is about 0.37/k^2, shrinking to a violation of about
// 1/(2k) - 3/(2n) as n decreases). Callers relying on the strict ordering
// should stay in the n >= 3k regime.
struct HarmonicBounds {
  double lower, sum, upper;
};

inline HarmonicBounds harmonic_sum_bounds(long k, long n) {
  if (k < 2)
    throw DomainError("harmonic_sum_bounds: k must be >= 2, got " +
                      std::to_string(k));
  if (n <= k)
    throw DomainError("harmonic_sum_bounds: n must exceed k");
  double s = 0.0;
  for (long j = n; j >= k; --j) s += 1.0 / static_cast<double>(j);
  return {std::log(static_cast<double>(n) / k), s,
          std::log(static_cast<double>(n - 1) / (k - 1))};
}

}  // namespace zipftk
