#pragma once

// Interval-evolution simulators on the unit space: the generalization model
// (grow-and-freeze) and the specialization model (shrink-on-collision). Both
// run on the circle by default, with a linear mode kept for sensitivity
// checks, and both are deterministic functions of their seed.
//
// Generalization: n intervals start as points at uniform centers and all
// grow symmetrically by delta per step. When two unfrozen intervals start to
// overlap, one of them (chosen at random) freezes at its current length. The
// run stops when at most one unfrozen interval remains. Overlap of an
// unfrozen interval with a frozen one triggers nothing; a growing interval
// may engulf frozen neighbors entirely. The implementation is event-driven:
// since all unfrozen intervals share the same length t*delta, the step at
// which a pair of centers with forward gap d first strictly overlaps is
// floor(d/delta) + 1, so collisions can be kept in a min-heap keyed by step
// and only neighboring unfrozen pairs (on a circular linked list) need
// tracking. A naive reference implementation is provided for equivalence
// tests; both consume the random stream identically.
//
// Specialization: n intervals get uniform centers and uniform lengths in
// [0, 1] (arcs may wrap). Repeatedly, for a pair whose intersection has
// positive measure and whose length ratio lies inside (1/gamma, gamma), the
// smaller interval is shortened by the intersection measure. The smaller
// interval keeps its uncovered side and retracts the boundary lying inside
// the intersection; when its start point is covered by the larger interval
// (including full containment and wrapped double-overlap), the remainder is
// the single arc beginning at the larger interval's end. Sweeps over all
// pairs repeat until a full sweep changes nothing.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zipftk/covering.hpp"
#include "zipftk/errors.hpp"
#include "zipftk/rng.hpp"

namespace zipftk {

enum class Topology { circle, line };

// Sweep order for specialization pairs. `shuffled` draws a fresh uniform
// order of all pairs each sweep from the run's seeded generator and is the
// default: it reproduces the Zipf exponent B = 1. `largest_first` processes
// pairs by decreasing length of the larger member; it is deterministic
// without consuming randomness but lets each large interval clear its whole
// competition band in one pass, which steepens the resulting law well past
// B = 1 (kept as an option for exactly that comparison).
enum class PairOrder { shuffled, largest_first };

struct GenParams {
  std::size_t n = 1;
  double delta = 0.0;  // growth per step; 0 = auto (default_gen_delta(n))
  std::uint64_t seed = 0;
  Topology topology = Topology::circle;
};

// Default growth step scaled so n intervals stay small against the 1/n
// spacing scale: 1e-3 / n (1e-7 at n = 10^4).
inline double default_gen_delta(std::size_t n) {
  return 1e-3 / static_cast<double>(n == 0 ? 1 : n);
}

struct SpecParams {
  std::size_t n = 2;
  double gamma = 2.0;
  std::uint64_t seed = 0;
  double fixpoint_eps = 1e-12;
  PairOrder pair_order = PairOrder::shuffled;
  Topology topology = Topology::circle;
};

struct SimResult {
  Covering covering;
  std::uint64_t iterations = 0;       // growth steps / modifying sweeps
  std::uint64_t rng_trace_hash = 0;   // fingerprint of the consumed stream
  std::vector<std::string> warnings;
};

namespace detail {

inline double wrap01(double x) {
  x = std::fmod(x, 1.0);
  return x < 0.0 ? x + 1.0 : x;
}

inline double circ_dist(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, 1.0 - d);
}

// First integer step t at which two point-centers with gap d, both growing
// by delta per step, strictly overlap: t * delta > d.
inline std::uint64_t collision_step(double d, double delta) {
  return static_cast<std::uint64_t>(std::floor(d / delta)) + 1;
}

// Shuffles the pair list, then freezes one member of every pair that is
// still fully unfrozen, in list order. Returns the frozen indices.
inline std::vector<std::size_t> resolve_batch(
    std::vector<std::pair<std::size_t, std::size_t>>& pairs,
    std::vector<char>& frozen, Rng& rng) {
  rng.shuffle(pairs);
  std::vector<std::size_t> out;
  for (const auto& [i, j] : pairs) {
    if (frozen[i] || frozen[j]) continue;
    const std::size_t victim = rng.below(2) == 0 ? i : j;
    frozen[victim] = 1;
    out.push_back(victim);
  }
  return out;
}

inline void validate(const GenParams& p) {
  if (p.n < 1) throw DomainError("run_generalization: n must be >= 1");
  if (p.delta != 0.0 && !(p.delta > 0.0 && p.delta < 1.0))
    throw DomainError("run_generalization: delta must lie in (0, 1)");
}

inline double resolve_delta(const GenParams& p) {
  return p.delta > 0.0 ? p.delta : default_gen_delta(p.n);
}

inline void validate(const SpecParams& p, std::vector<std::string>& warnings) {
  if (p.n < 2) throw DomainError("run_specialization: n must be >= 2");
  if (p.n >= (std::uint64_t{1} << 32))
    throw DomainError("run_specialization: n must fit in 32 bits");
  if (!(p.gamma > 1.0))
    throw DomainError("run_specialization: gamma must exceed 1");
  if (!(p.fixpoint_eps > 0.0))
    throw DomainError("run_specialization: fixpoint_eps must be positive");
  if (p.gamma < 1.1 || p.gamma > 10.0)
    warnings.push_back("gamma = " + std::to_string(p.gamma) +
                       " is outside the validated range [1.1, 10]");
}

// Builds the output covering for the generalization model: intervals of the
// final lengths centered at the original centers. In line mode intervals are
// clipped to [0, 1].
inline Covering gen_covering(const std::vector<double>& centers,
                             const std::vector<double>& lengths,
                             Topology topology) {
  std::vector<Interval> ivs;
  ivs.reserve(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (topology == Topology::circle) {
      ivs.push_back(centered_interval(centers[i], lengths[i]));
    } else {
      Interval iv;
      iv.lo = std::max(0.0, centers[i] - lengths[i] / 2.0);
      iv.hi = std::min(1.0, centers[i] + lengths[i] / 2.0);
      if (iv.hi < iv.lo) iv.hi = iv.lo;
      ivs.push_back(iv);
    }
  }
  return make_covering(std::move(ivs), topology == Topology::circle);
}

}  // namespace detail

// Reference implementation of the generalization model: every step, scan all
// unfrozen pairs for overlap and resolve the batch. Quadratic per step; used
// to validate the event-driven simulator on small instances. Consumes the
// random stream exactly as run_generalization does.
inline SimResult naive_generalization(const GenParams& params) {
  detail::validate(params);
  const double delta = detail::resolve_delta(params);
  Rng rng(params.seed);
  const std::size_t n = params.n;
  std::vector<double> centers(n);
  for (double& c : centers) c = rng.next_unit();
  std::vector<char> frozen(n, 0);
  std::vector<double> lengths(n, 0.0);
  std::uint64_t t = 0;
  const bool circ = params.topology == Topology::circle;
  std::size_t unfrozen_count = n;
  while (unfrozen_count > 1 || t == 0) {
    ++t;
    std::vector<std::size_t> unfrozen;
    for (std::size_t i = 0; i < n; ++i)
      if (!frozen[i]) unfrozen.push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < unfrozen.size(); ++a)
      for (std::size_t b = a + 1; b < unfrozen.size(); ++b) {
        const std::size_t i = unfrozen[a], j = unfrozen[b];
        const double d = circ ? detail::circ_dist(centers[i], centers[j])
                              : std::fabs(centers[i] - centers[j]);
        if (detail::collision_step(d, delta) <= t)
          pairs.emplace_back(i, j);
      }
    for (std::size_t v : detail::resolve_batch(pairs, frozen, rng)) {
      lengths[v] = static_cast<double>(t) * delta;
      --unfrozen_count;
    }
    if (unfrozen_count <= 1) break;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!frozen[i]) lengths[i] = static_cast<double>(t) * delta;
  SimResult res;
  res.covering = detail::gen_covering(centers, lengths, params.topology);
  res.iterations = t;
  res.rng_trace_hash = rng.trace_hash();
  return res;
}

// Event-driven generalization simulator; see the header comment. Identical
// output to naive_generalization for the same params, in time
// O(n log n + events) instead of O(steps * n^2).
inline SimResult run_generalization(const GenParams& params) {
  detail::validate(params);
  const double delta = detail::resolve_delta(params);
  Rng rng(params.seed);
  const std::size_t n = params.n;
  std::vector<double> centers(n);
  for (double& c : centers) c = rng.next_unit();
  const bool circ = params.topology == Topology::circle;

  SimResult res;
  if (n == 1) {
    // Loop body runs once: a single growth step, then the <=1 check exits.
    res.covering = detail::gen_covering(centers, {delta}, params.topology);
    res.iterations = 1;
    res.rng_trace_hash = rng.trace_hash();
    return res;
  }

  // Circular (or linear) order of centers; neighbor links by index.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return centers[a] < centers[b];
  });
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> nxt(n, kNone), prv(n, kNone);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t a = order[k];
    if (circ || k + 1 < n) {
      const std::size_t b = order[(k + 1) % n];
      nxt[a] = b;
      prv[b] = a;
    }
  }

  // Forward gap from i to its successor j.
  auto tstar = [&](std::size_t i, std::size_t j) {
    const double d = circ ? detail::wrap01(centers[j] - centers[i])
                          : centers[j] - centers[i];
    return detail::collision_step(d, delta);
  };

  using Event = std::tuple<std::uint64_t, std::size_t, std::size_t>;
  std::priority_queue<Event, std::vector<Event>, std::greater<Event>> heap;
  for (std::size_t i = 0; i < n; ++i)
    if (nxt[i] != kNone) heap.emplace(tstar(i, nxt[i]), i, nxt[i]);

  std::vector<char> frozen(n, 0);
  std::vector<double> lengths(n, 0.0);
  std::size_t unfrozen_count = n;
  std::uint64_t t = 0;

  while (unfrozen_count > 1) {
    // Skip stale events (frozen endpoints or broken adjacency).
    while (!heap.empty()) {
      const auto& [tt, i, j] = heap.top();
      if (frozen[i] || frozen[j] || nxt[i] != j)
        heap.pop();
      else
        break;
    }
    if (heap.empty()) break;  // line mode can run out of neighbor pairs
    t = std::get<0>(heap.top());
    std::vector<std::pair<std::size_t, std::size_t>> adjacent;
    while (!heap.empty() && std::get<0>(heap.top()) == t) {
      const auto [tt, i, j] = heap.top();
      heap.pop();
      if (frozen[i] || frozen[j] || nxt[i] != j) continue;
      adjacent.emplace_back(i, j);
    }
    // All unfrozen pairs within reach at step t: the adjacent pairs, plus
    // pairs joined through chains of same-step adjacencies whose direct
    // center distance is already covered (simultaneous multi-collisions).
    std::vector<std::size_t> chain_nodes;
    for (const auto& [i, j] : adjacent) {
      chain_nodes.push_back(i);
      chain_nodes.push_back(j);
    }
    std::sort(chain_nodes.begin(), chain_nodes.end());
    chain_nodes.erase(std::unique(chain_nodes.begin(), chain_nodes.end()),
                      chain_nodes.end());
    auto in_chain = [&](std::size_t v) {
      return std::binary_search(chain_nodes.begin(), chain_nodes.end(), v);
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [i, j] : adjacent)
      pairs.emplace_back(std::min(i, j), std::max(i, j));
    for (std::size_t start : chain_nodes) {
      std::vector<std::size_t> run{start};
      std::size_t cur = start;
      for (;;) {
        const std::size_t nx = nxt[cur];
        if (nx != kNone && in_chain(nx) && tstar(cur, nx) <= t) {
          if (nx == start) break;  // full circle
          run.push_back(nx);
          cur = nx;
        } else {
          break;
        }
      }
      for (std::size_t a = 0; a < run.size(); ++a)
        for (std::size_t b = a + 1; b < run.size(); ++b) {
          const std::size_t i = run[a], j = run[b];
          const double d = circ ? detail::circ_dist(centers[i], centers[j])
                                : std::fabs(centers[i] - centers[j]);
          if (detail::collision_step(d, delta) <= t)
            pairs.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (std::size_t v : detail::resolve_batch(pairs, frozen, rng)) {
      lengths[v] = static_cast<double>(t) * delta;
      --unfrozen_count;
      const std::size_t p = prv[v], q = nxt[v];
      if (p != kNone) nxt[p] = q;
      if (q != kNone) prv[q] = p;
      if (p != kNone && q != kNone && p != q && !frozen[p] && !frozen[q])
        heap.emplace(tstar(p, q), p, q);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!frozen[i]) lengths[i] = static_cast<double>(t) * delta;
  res.covering = detail::gen_covering(centers, lengths, params.topology);
  res.iterations = t;
  res.rng_trace_hash = rng.trace_hash();
  return res;
}

namespace detail {

struct Arc {
  double start;  // in [0, 1) on the circle; may be any real in line mode
  double len;
};

struct ArcIntersection {
  double measure;
  bool small_start_inside_big;
};

// Intersection measure of circle arcs a (the larger) and b, and whether b's
// start point lies inside a. Computed in a-local coordinates, where a spans
// [0, a.len) and b spans [rel, rel + b.len) modulo 1 -- the second piece of
// a wrapped b is [0, rel + b.len - 1).
inline ArcIntersection intersect_circle(const Arc& a, const Arc& b) {
  const double rel = wrap01(b.start - a.start);
  double m = std::max(0.0, std::min(rel + b.len, a.len) - rel);
  if (rel + b.len > 1.0) m += std::max(0.0, std::min(rel + b.len - 1.0, a.len));
  return {m, rel < a.len};
}

inline ArcIntersection intersect_line(const Arc& a, const Arc& b) {
  const double lo = std::max(a.start, b.start);
  const double hi = std::min(a.start + a.len, b.start + b.len);
  return {std::max(0.0, hi - lo), b.start >= a.start && b.start < a.start + a.len};
}

}  // namespace detail

// Specialization simulator; see the header comment. iterations counts the
// sweeps that changed at least one interval.
inline SimResult run_specialization(const SpecParams& params) {
  SimResult res;
  detail::validate(params, res.warnings);
  Rng rng(params.seed);
  const std::size_t n = params.n;
  const double eps = params.fixpoint_eps;
  const bool circ = params.topology == Topology::circle;

  std::vector<detail::Arc> arcs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = rng.next_unit();
    const double l = rng.next_unit();
    if (circ) {
      arcs[i] = {detail::wrap01(c - l / 2.0), l};
    } else {
      // Line mode: clip to [0, 1] at initialization, then run clip-free.
      const double lo = std::max(0.0, c - l / 2.0);
      const double hi = std::min(1.0, c + l / 2.0);
      arcs[i] = {lo, std::max(0.0, hi - lo)};
    }
  }

  // The full pair list is materialized so a sweep can visit pairs in a
  // uniformly shuffled order; 32-bit indices keep it to 8 bytes per pair
  // (~400 MB transient at n = 10^4).
  std::vector<std::uint32_t> order(n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  std::uint64_t modifying_sweeps = 0;
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t x, std::uint32_t y) {
                       return arcs[x].len > arcs[y].len;
                     });
    pairs.clear();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        pairs.emplace_back(order[a], order[b]);
    if (params.pair_order == PairOrder::shuffled) rng.shuffle(pairs);
    bool changed = false;
    for (const auto& [x, y] : pairs) {
      detail::Arc& A = arcs[x];
      detail::Arc& B = arcs[y];
      if (A.len <= 0.0 || B.len <= 0.0) continue;
      // Roles by live length; on a tie the pair's second member shrinks.
      detail::Arc* big = &A;
      detail::Arc* small = &B;
      if (B.len > A.len) {
        big = &B;
        small = &A;
      }
      const detail::ArcIntersection iv = circ
                                             ? detail::intersect_circle(*big, *small)
                                             : detail::intersect_line(*big, *small);
      if (iv.measure <= eps) continue;
      if (!(small->len / big->len > 1.0 / params.gamma)) continue;
      double nl = small->len - iv.measure;
      if (nl <= eps) nl = 0.0;  // below model resolution: wholly supplanted
      if (iv.small_start_inside_big) {
        small->start = circ ? detail::wrap01(big->start + big->len)
                            : big->start + big->len;
      }
      small->len = nl;
      changed = true;
    }
    if (!changed) break;
    ++modifying_sweeps;
  }

  std::vector<Interval> ivs;
  for (const detail::Arc& a : arcs) {
    if (!(a.len > 0.0)) continue;
    if (circ) {
      Interval iv;
      iv.lo = a.start;
      const double hi = a.start + a.len;
      if (hi > 1.0) {
        iv.wraps = true;
        iv.hi = hi - 1.0;
      } else {
        iv.hi = hi;
      }
      ivs.push_back(iv);
    } else {
      ivs.push_back({std::max(0.0, a.start), std::min(1.0, a.start + a.len), false});
    }
  }
  res.covering = make_covering(std::move(ivs), circ);
  res.iterations = modifying_sweeps;
  res.rng_trace_hash = rng.trace_hash();
  return res;
}

inline RankFrequencyTable lengths_to_rank_freq(const SimResult& result) {
  return lengths_to_rank_freq(result.covering);
}

}  // namespace zipftk
