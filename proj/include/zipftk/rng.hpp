#pragma once

// Seedable deterministic randomness with a fixed stream discipline.
//
// Every randomized operation in the toolkit draws through this wrapper rather
// than through <random> distributions, because distribution implementations
// are not pinned by the standard and would break bit-for-bit reproducibility
// of published runs across standard libraries. The conventions are:
//
//   * engine: std::mt19937_64 seeded directly with the run seed;
//   * next_unit(): top 53 bits of one engine output, scaled to [0, 1);
//   * below(n): one engine output reduced modulo n (bias < n / 2^64, which is
//     negligible at the sizes used here and keeps the stream one-draw-per-call);
//   * shuffle(): Fisher-Yates from the back using below(i+1).
//
// Each raw engine output is folded into an FNV-1a fingerprint, so two runs can
// assert they consumed identical streams without storing the streams.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace zipftk {

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

// FNV-1a over a byte range, resumable via the h argument.
inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t h = kFnvOffset) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

inline std::uint64_t fnv1a64_str(const std::string& s) {
  return fnv1a64(s.data(), s.size());
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t x = eng_();
    trace_ = fnv1a64(&x, sizeof x, trace_);
    return x;
  }

  // Uniform double in [0, 1), 53-bit resolution.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n); n must be positive.
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(next_u64() % n);
  }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(xs[i - 1], xs[j]);
    }
  }

  // Fingerprint of every engine output drawn so far.
  std::uint64_t trace_hash() const { return trace_; }

 private:
  std::mt19937_64 eng_;
  std::uint64_t trace_ = kFnvOffset;
};

}  // namespace zipftk
