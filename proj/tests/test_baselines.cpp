// Stochastic text baselines: random typing, the Simon process, the n-word
// selection series, new-word rates, and word-length histograms.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "zipftk/baselines.hpp"
#include "zipftk/powerlaw.hpp"

using namespace zipftk;

TEST_CASE("random_typing argument validation", "[baselines]") {
  CHECK_THROWS_AS(random_typing(0, 100, 1), DomainError);
  CHECK_THROWS_AS(random_typing(63, 100, 1), DomainError);
  CHECK_THROWS_AS(random_typing(2, 0, 1), DomainError);
}

TEST_CASE("one-letter typing is exponential, not a power law",
          "[baselines]") {
  auto s = random_typing(1, 100000, 42);
  auto t = rank_frequency(s);
  REQUIRE(t.frequency.size() >= 8);
  // Rank equals word length and each extra letter halves the frequency.
  for (std::size_t k = 0; k < 8; ++k)
    CHECK(t.labels[k].size() == k + 1);
  for (std::size_t k = 0; k + 1 < 6; ++k) {
    const double ratio = t.frequency[k] / t.frequency[k + 1];
    CHECK(ratio > 1.8);
    CHECK(ratio < 2.2);
  }
}

TEST_CASE("typing exponent approaches ln(M+1)/ln(M)", "[baselines]") {
  // Alphabet of 4: analytic exponent ln5/ln4 = 1.1610.
  auto s = random_typing(4, 1000000, 42);
  auto t = rank_frequency(s);
  auto f = fit_zipf_exponent(t, 1, 2000);
  CHECK(f.B == Catch::Approx(1.103346).margin(1e-4));
  CHECK(std::fabs(f.B - std::log(5.0) / std::log(4.0)) < 0.1);

  // Alphabet of 2: analytic exponent ln3/ln2 = 1.585.
  auto s2 = random_typing(2, 1000000, 42);
  auto t2 = rank_frequency(s2);
  auto f2 = fit_zipf_exponent(t2, 1, 2000);
  CHECK(f2.B == Catch::Approx(1.492336).margin(1e-4));
  CHECK(std::fabs(f2.B - std::log(3.0) / std::log(2.0)) < 0.15);
}

TEST_CASE("typing character marginals are uniform", "[baselines][property]") {
  const std::size_t n_chars = 200000;
  const std::size_t m = 5;
  auto s = random_typing(m, n_chars, 7);
  std::size_t counts[5] = {0, 0, 0, 0, 0};
  std::size_t letters = 0;
  for (const std::string& w : s.tokens)
    for (char c : w) {
      ++counts[c - 'a'];
      ++letters;
    }
  const std::size_t spaces = n_chars - letters;
  const double expect = static_cast<double>(n_chars) / (m + 1);
  const double sd = std::sqrt(n_chars * (1.0 / (m + 1)) * (m / (m + 1.0)));
  for (std::size_t i = 0; i < m; ++i)
    CHECK(std::fabs(counts[i] - expect) < 5.0 * sd);
  CHECK(std::fabs(static_cast<double>(spaces) - expect) < 5.0 * sd);
}

TEST_CASE("simon_process degenerate rates", "[baselines]") {
  auto all_new = simon_process(1.0, 500, 3);
  auto t = rank_frequency(all_new);
  REQUIRE(t.frequency.size() == 500);
  for (double f : t.frequency) CHECK(f == 1.0);

  auto one_word = simon_process(0.0, 500, 3);
  auto t1 = rank_frequency(one_word);
  REQUIRE(t1.frequency.size() == 1);
  CHECK(t1.frequency[0] == 500.0);

  CHECK_THROWS_AS(simon_process(-0.1, 10, 1), DomainError);
  CHECK_THROWS_AS(simon_process(1.1, 10, 1), DomainError);
  CHECK_THROWS_AS(simon_process(0.5, 0, 1), DomainError);
}

TEST_CASE("simon distinct-word count matches 1 + p(n-1)",
          "[baselines][property]") {
  const std::size_t n = 20000;
  const double p = 0.3;
  auto t = rank_frequency(simon_process(p, n, 42));
  const double want = 1.0 + p * (n - 1);
  const double sd = std::sqrt(n * p * (1.0 - p));
  CHECK(t.frequency.size() == 5967);
  CHECK(std::fabs(static_cast<double>(t.frequency.size()) - want) < 5.0 * sd);
}

TEST_CASE("simon spectrum tail exponent near 1 + 1/(1-p)", "[baselines]") {
  auto s = simon_process(0.1, 100000, 42);
  auto sp = frequency_spectrum(rank_frequency(s));
  auto f = fit_spectrum_exponent(sp, 2.0, 1000.0);
  CHECK(f.beta == Catch::Approx(2.115905).margin(1e-4));
  CHECK(std::fabs(f.beta - (1.0 + 1.0 / 0.9)) < 0.15);
}

TEST_CASE("generators are deterministic under the seed", "[baselines]") {
  auto a = random_typing(3, 5000, 11);
  auto b = random_typing(3, 5000, 11);
  REQUIRE(a.tokens == b.tokens);
  CHECK(random_typing(3, 5000, 12).tokens != a.tokens);

  auto c = simon_process(0.2, 5000, 11);
  auto d = simon_process(0.2, 5000, 11);
  REQUIRE(c.tokens == d.tokens);
  CHECK(simon_process(0.2, 5000, 12).tokens != c.tokens);
}

TEST_CASE("n-word series on the alternating stream", "[baselines]") {
  TokenStream s;
  s.tokens = {"a", "b", "a", "b"};
  auto r = n_word_selection_probability(s, 1);
  REQUIRE(r.next_is_n_word.size() == 3);
  CHECK(r.next_is_n_word[0] == 0);  // b is unseen
  CHECK(r.next_is_n_word[1] == 1);  // a has occurred once
  CHECK(r.next_is_n_word[2] == 1);  // b has occurred once
  CHECK(r.n_word_fraction[0] == Catch::Approx(1.0));
  CHECK(r.n_word_fraction[1] == Catch::Approx(1.0));
  CHECK(r.n_word_fraction[2] == Catch::Approx(1.0 / 3.0));

  // n beyond every count: both series identically zero.
  auto z = n_word_selection_probability(s, 5);
  for (auto v : z.next_is_n_word) CHECK(v == 0);
  for (double v : z.n_word_fraction) CHECK(v == 0.0);

  CHECK_THROWS_AS(n_word_selection_probability(TokenStream{}, 1), EmptyInput);
  CHECK_THROWS_AS(n_word_selection_probability(s, 0), DomainError);
}

TEST_CASE("simon stream realizes its selection hypothesis",
          "[baselines][property]") {
  // The chance that the next token is an n-word is (1-p) times the n-word
  // token fraction; with small p the two series agree directly.
  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    auto s = simon_process(0.1, 50000, 5);
    auto r = n_word_selection_probability(s, n);
    double ind = 0.0, frac = 0.0;
    for (std::size_t i = 0; i < r.next_is_n_word.size(); ++i) {
      ind += r.next_is_n_word[i];
      frac += r.n_word_fraction[i];
    }
    ind /= static_cast<double>(r.next_is_n_word.size());
    frac /= static_cast<double>(r.n_word_fraction.size());
    const double sd =
        std::sqrt(frac * (1.0 - frac) / r.next_is_n_word.size());
    CHECK(std::fabs(ind - 0.9 * frac) < 5.0 * sd);

    auto s2 = simon_process(0.01, 50000, 5);
    auto r2 = n_word_selection_probability(s2, n);
    double ind2 = 0.0, frac2 = 0.0;
    for (std::size_t i = 0; i < r2.next_is_n_word.size(); ++i) {
      ind2 += r2.next_is_n_word[i];
      frac2 += r2.n_word_fraction[i];
    }
    ind2 /= static_cast<double>(r2.next_is_n_word.size());
    frac2 /= static_cast<double>(r2.n_word_fraction.size());
    const double sd2 =
        std::sqrt(frac2 * (1.0 - frac2) / r2.next_is_n_word.size());
    CHECK(std::fabs(ind2 - frac2) < 5.0 * sd2 + 0.01 * frac2);
  }
}

TEST_CASE("new_word_rate windows and fits", "[baselines]") {
  auto all_new = simon_process(1.0, 5000, 3);
  auto r = new_word_rate(all_new, 1000);
  REQUIRE(r.points.size() == 5);
  for (const auto& [pos, rate] : r.points) CHECK(rate == 1.0);
  CHECK(r.fitted_decay_exponent == Catch::Approx(0.0).margin(1e-12));

  // Simon keeps a constant introduction rate; typing depletes novelty.
  auto s = simon_process(0.1, 100000, 42);
  CHECK(std::fabs(new_word_rate(s, 1000).fitted_decay_exponent) < 0.05);
  auto t = random_typing(26, 1000000, 42);
  CHECK(new_word_rate(t, 1000).fitted_decay_exponent > 0.0);

  CHECK_THROWS_AS(new_word_rate(all_new, 99), DomainError);
  TokenStream tiny;
  tiny.tokens.assign(150, "x");
  CHECK_THROWS_AS(new_word_rate(tiny, 100), StreamTooShort);
}

TEST_CASE("word_length_distribution counts distinct types", "[baselines]") {
  TokenStream s;
  s.tokens = {"a", "bb", "a"};
  auto h = word_length_distribution(s);
  REQUIRE(h.size() == 2);
  CHECK(h[1] == 1);
  CHECK(h[2] == 1);
  CHECK_THROWS_AS(word_length_distribution(TokenStream{}), EmptyInput);

  // Binary alphabet: all 2^L types of length L occur until saturation.
  auto bin = random_typing(2, 1000000, 42);
  auto hb = word_length_distribution(bin);
  std::size_t total = 0;
  for (const auto& [len, cnt] : hb) total += cnt;
  CHECK(total == rank_frequency(bin).frequency.size());
  for (std::size_t L = 1; L <= 9; ++L)
    CHECK(hb[L] == (std::size_t{1} << L));
  CHECK(hb[10] < 1024);
}

TEST_CASE("tokenize_text lowercases and splits on non-letters",
          "[baselines]") {
  auto s = tokenize_text("Hello, WORLD!\n cafe3 x-ray");
  REQUIRE(s.tokens.size() == 5);
  CHECK(s.tokens[0] == "hello");
  CHECK(s.tokens[1] == "world");
  CHECK(s.tokens[2] == "cafe");
  CHECK(s.tokens[3] == "x");
  CHECK(s.tokens[4] == "ray");
  CHECK(s.source == TokenStream::Source::file);
  CHECK(tokenize_text("123 ,,, \n").tokens.empty());
}
