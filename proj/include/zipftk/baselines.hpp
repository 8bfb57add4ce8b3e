#pragma once

// Reference stochastic text processes and stream measurements: the random
// typing (intermittent silence) model, the Simon preferential-attachment
// process, the n-word selection-probability series, windowed new-word rates,
// and the word-length distribution. File-sourced streams use a deliberately
// simple tokenization: ASCII lowercase, split on any non-alphabetic byte,
// empties discarded.

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "zipftk/errors.hpp"
#include "zipftk/powerlaw.hpp"
#include "zipftk/rng.hpp"

namespace zipftk {

struct TokenStream {
  enum class Source { random_typing, simon, file };
  std::vector<std::string> tokens;
  Source source = Source::file;
};

inline RankFrequencyTable rank_frequency(const TokenStream& stream) {
  return rank_frequency(stream.tokens);
}

namespace detail {

// Symbol alphabet for random typing: enough distinct single bytes for
// alphabets up to 62 letters.
inline char typing_symbol(std::size_t i) {
  if (i < 26) return static_cast<char>('a' + i);
  if (i < 52) return static_cast<char>('A' + (i - 26));
  return static_cast<char>('0' + (i - 52));
}

}  // namespace detail

// Random typing: each of n_chars characters is drawn uniformly from the
// alphabet plus the space, each with probability 1/(alphabet_size+1); the
// character stream splits on spaces and empty words are discarded (leading,
// trailing, and repeated spaces produce no tokens).
inline TokenStream random_typing(std::size_t alphabet_size, std::size_t n_chars,
                                 std::uint64_t seed) {
  if (alphabet_size < 1)
    throw DomainError("random_typing: alphabet_size must be >= 1");
  if (alphabet_size > 62)
    throw DomainError("random_typing: alphabets beyond 62 single-byte symbols "
                      "are not supported");
  if (n_chars < 1) throw DomainError("random_typing: n_chars must be >= 1");
  Rng rng(seed);
  TokenStream out;
  out.source = TokenStream::Source::random_typing;
  std::string cur;
  for (std::size_t i = 0; i < n_chars; ++i) {
    const std::size_t sym = rng.below(alphabet_size + 1);
    if (sym == alphabet_size) {
      if (!cur.empty()) {
        out.tokens.push_back(cur);
        cur.clear();
      }
    } else {
      cur += detail::typing_symbol(sym);
    }
  }
  if (!cur.empty()) out.tokens.push_back(cur);
  return out;
}

// Simon process: the first token is a fresh word; afterwards each token is
// fresh with probability p_new and otherwise copies a uniformly chosen
// earlier token (pure cumulative advantage). Words are labeled w0, w1, ...
// in order of introduction. Stream discipline: one uniform draw per token
// after the first, plus one index draw when copying.
inline TokenStream simon_process(double p_new, std::size_t n_tokens,
                                 std::uint64_t seed) {
  if (!(p_new >= 0.0 && p_new <= 1.0))
    throw DomainError("simon_process: p_new must lie in [0, 1]");
  if (n_tokens < 1) throw DomainError("simon_process: n_tokens must be >= 1");
  Rng rng(seed);
  TokenStream out;
  out.source = TokenStream::Source::simon;
  out.tokens.reserve(n_tokens);
  std::size_t n_words = 0;
  auto fresh = [&] { return "w" + std::to_string(n_words++); };
  out.tokens.push_back(fresh());
  for (std::size_t t = 1; t < n_tokens; ++t) {
    if (rng.next_unit() < p_new)
      out.tokens.push_back(fresh());
    else
      out.tokens.push_back(out.tokens[rng.below(t)]);
  }
  return out;
}

// Paired series testing Simon's defining hypothesis: at each position t >= 1,
// whether the next token is an n-word (a word with exactly n occurrences in
// positions 0..t-1), alongside the fraction of the preceding tokens that
// belong to n-words (n * count of such words / t). Under the Simon process
// the indicator's mean tracks the fraction series.
struct NWordSeries {
  std::vector<std::uint8_t> next_is_n_word;
  std::vector<double> n_word_fraction;
};

inline NWordSeries n_word_selection_probability(const TokenStream& stream,
                                                std::size_t n) {
  if (stream.tokens.empty())
    throw EmptyInput("n_word_selection_probability: empty stream");
  if (n < 1) throw DomainError("n_word_selection_probability: n must be >= 1");
  NWordSeries out;
  std::unordered_map<std::string, std::size_t> count;
  std::size_t words_with_n = 0;
  for (std::size_t t = 0; t < stream.tokens.size(); ++t) {
    if (t > 0) {
      const std::size_t c = count[stream.tokens[t]];
      out.next_is_n_word.push_back(c == n ? 1 : 0);
      out.n_word_fraction.push_back(static_cast<double>(n) *
                                    static_cast<double>(words_with_n) /
                                    static_cast<double>(t));
    }
    std::size_t& c = count[stream.tokens[t]];
    if (c == n) --words_with_n;
    ++c;
    if (c == n) ++words_with_n;
  }
  return out;
}

struct NewWordRateSeries {
  std::vector<std::pair<std::size_t, double>> points;  // (tokens so far, rate)
  double fitted_decay_exponent = 0.0;                  // rate ~ N^{-exponent}
};

// Windowed first-occurrence fraction: the stream is cut into consecutive
// windows of `window` tokens (an incomplete final window is dropped), each
// contributing (window end position, fraction of first occurrences). The
// decay exponent is the negated OLS slope of log rate against log position,
// skipping zero-rate windows. Requires at least two full windows.
inline NewWordRateSeries new_word_rate(const TokenStream& stream,
                                       std::size_t window) {
  if (window < 100) throw DomainError("new_word_rate: window must be >= 100");
  if (stream.tokens.size() < 2 * window)
    throw StreamTooShort("new_word_rate: stream of " +
                         std::to_string(stream.tokens.size()) +
                         " tokens is shorter than two windows");
  NewWordRateSeries out;
  std::unordered_set<std::string> seen;
  std::size_t fresh_in_window = 0;
  for (std::size_t t = 0; t < stream.tokens.size(); ++t) {
    if (seen.insert(stream.tokens[t]).second) ++fresh_in_window;
    if ((t + 1) % window == 0) {
      out.points.emplace_back(t + 1, static_cast<double>(fresh_in_window) /
                                         static_cast<double>(window));
      fresh_in_window = 0;
    }
  }
  std::vector<double> xs, ys;
  for (const auto& [pos, rate] : out.points)
    if (rate > 0.0) {
      xs.push_back(std::log(static_cast<double>(pos)));
      ys.push_back(std::log(rate));
    }
  if (xs.size() >= 2)
    out.fitted_decay_exponent = -detail::ols(xs, ys).slope;
  return out;
}

// Distinct word types per character length.
inline std::map<std::size_t, std::size_t> word_length_distribution(
    const TokenStream& stream) {
  if (stream.tokens.empty())
    throw EmptyInput("word_length_distribution: empty stream");
  std::unordered_set<std::string> types(stream.tokens.begin(),
                                        stream.tokens.end());
  std::map<std::size_t, std::size_t> hist;
  for (const std::string& w : types) ++hist[w.size()];
  return hist;
}

// ASCII tokenization: lowercase, split on any non-alphabetic byte, discard
// empties. Bytes outside ASCII letters (including UTF-8 continuation bytes)
// act as separators.
inline TokenStream tokenize_text(const std::string& text) {
  TokenStream out;
  out.source = TokenStream::Source::file;
  std::string cur;
  for (unsigned char c : text) {
    if (std::isalpha(c) && c < 128) {
      cur += static_cast<char>(std::tolower(c));
    } else if (!cur.empty()) {
      out.tokens.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.tokens.push_back(cur);
  return out;
}

}  // namespace zipftk
