// The two classical null models side by side: random typing and the Simon
// process both yield power-law rank tables with no semantics involved.

#include <algorithm>
#include <cstdio>

#include "zipftk/baselines.hpp"
#include "zipftk/powerlaw.hpp"

int main() {
  // Random typing: 26 letters plus space, one million characters.
  zipftk::TokenStream typing = zipftk::random_typing(26, 1000000, 42);
  zipftk::RankFrequencyTable t1 = zipftk::rank_frequency(typing);
  zipftk::PowerLawFit f1 = zipftk::fit_zipf_exponent(
      t1, 1, std::min<std::size_t>(2000, t1.size()));
  std::printf("random typing: %zu tokens, %zu types, B = %.4f\n",
              typing.tokens.size(), t1.size(), f1.B);

  // Simon process: 10%% fresh words, pure cumulative advantage otherwise.
  zipftk::TokenStream simon = zipftk::simon_process(0.1, 200000, 42);
  zipftk::RankFrequencyTable t2 = zipftk::rank_frequency(simon);
  zipftk::FrequencySpectrum spectrum = zipftk::frequency_spectrum(t2);
  zipftk::SpectrumFit f2 = zipftk::fit_spectrum_exponent(spectrum, 2.0, 1000.0);
  std::printf("simon process: %zu tokens, %zu types, spectrum beta = %.4f\n",
              simon.tokens.size(), t2.size(), f2.beta);

  // New words keep arriving, but ever more slowly.
  zipftk::NewWordRateSeries rate = zipftk::new_word_rate(simon, 10000);
  std::printf("simon new-word rate decays like N^-%.4f "
              "(flat rate would be 0)\n", rate.fitted_decay_exponent);
  return 0;
}
