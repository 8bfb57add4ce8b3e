#pragma once

// Lexical-semantics checks: hyponym frequency-sum verification against the
// frequency-extent hypothesis ("the frequency of a head word should roughly
// equal the summed frequencies of its hyponyms"), and PCA classification of
// adjectives from a word-compatibility count matrix.
//
// PCA recipe (pinned by the reference eigenvector it must reproduce): drop
// rows whose raw counts have zero variance; form the column-column Pearson
// correlation matrix of the retained raw counts (population statistics);
// take its leading eigenvector by power iteration from the all-ones start;
// orient it so its component sum is non-negative; score each retained row by
// the dot product of its column-standardized counts with the eigenvector.
// The adjective's class is the sign of its score.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "zipftk/errors.hpp"

namespace zipftk {

struct HyponymEntry {
  std::string word;
  double freq_per_million = 0.0;
  std::string note;  // absence marks, exclusion reasons
};

// A head word (possibly several lines: base word plus diminutive or variant
// forms) with its hyponyms; excluded entries are kept for reporting but do
// not join the sum.
struct HyponymTable {
  std::string name;
  std::vector<HyponymEntry> head;
  std::vector<HyponymEntry> hyponyms;
  std::vector<HyponymEntry> excluded;
};

inline void validate_hyponym_table(const HyponymTable& t) {
  std::vector<std::string> words;
  auto take = [&](const std::vector<HyponymEntry>& v) {
    for (const auto& e : v) {
      if (!(e.freq_per_million >= 0.0))
        throw DomainError("hyponym table '" + t.name + "': negative frequency");
      words.push_back(e.word);
    }
  };
  take(t.head);
  take(t.hyponyms);
  take(t.excluded);
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end())
    throw DomainError("hyponym table '" + t.name + "': duplicate word label");
}

struct HyponymSumReport {
  double head_sum = 0.0;
  double hyponym_sum = 0.0;
  double ratio = 0.0;  // hyponym_sum / head_sum
  bool pass = false;
};

// Compares the summed hyponym frequencies with the head frequency. The check
// is symmetric in the direction of the imbalance: a ratio r passes when
// either |r - 1| or |1/r - 1| is within the tolerance, so "hyponyms exceed
// the head by a fifth" and "head exceeds the hyponyms by a fifth" are judged
// alike. Default tolerance is 0.20.
inline HyponymSumReport hyponym_sum_check(const HyponymTable& t,
                                          double tolerance = 0.20) {
  if (t.head.empty() || t.hyponyms.empty())
    throw EmptyTable("hyponym_sum_check: table '" + t.name +
                     "' needs a head and at least one hyponym");
  validate_hyponym_table(t);
  HyponymSumReport r;
  for (const auto& e : t.head) r.head_sum += e.freq_per_million;
  for (const auto& e : t.hyponyms) r.hyponym_sum += e.freq_per_million;
  if (!(r.head_sum > 0.0))
    throw DomainError("hyponym_sum_check: head frequency sum is zero");
  r.ratio = r.hyponym_sum / r.head_sum;
  const double dev = std::min(std::fabs(r.ratio - 1.0),
                              r.ratio > 0.0 ? std::fabs(1.0 / r.ratio - 1.0)
                                            : 1.0);
  r.pass = dev <= tolerance;
  return r;
}

struct CompatibilityMatrix {
  std::vector<std::string> row_labels;   // adjectives
  std::vector<double> row_freq;          // frequency per million per row
  std::vector<std::string> row_notes;    // data-quality flags
  std::vector<std::string> col_labels;   // test nouns
  std::vector<int> col_polarity;         // +1 / -1 tag per noun
  std::vector<std::vector<double>> counts;
};

inline void validate_matrix(const CompatibilityMatrix& m) {
  const std::size_t r = m.row_labels.size(), c = m.col_labels.size();
  if (m.counts.size() != r || m.row_freq.size() != r ||
      m.col_polarity.size() != c)
    throw DomainError("compatibility matrix: inconsistent dimensions");
  for (const auto& row : m.counts) {
    if (row.size() != c)
      throw DomainError("compatibility matrix: ragged counts");
    for (double v : row)
      if (!(v >= 0.0))
        throw DomainError("compatibility matrix: negative count");
  }
}

struct PcaResult {
  std::vector<double> eigenvector;        // over columns, unit norm
  std::vector<double> weights;            // over retained rows
  std::vector<std::string> retained_rows;
  std::vector<std::string> dropped_rows;
  std::vector<int> classification;        // sign(weight) per retained row
};

inline PcaResult pca_classify(const CompatibilityMatrix& m) {
  validate_matrix(m);
  const std::size_t cols = m.col_labels.size();
  if (cols < 2) throw DegenerateMatrix("pca_classify: fewer than 2 columns");

  PcaResult res;
  std::vector<std::vector<double>> X;  // retained raw rows
  for (std::size_t i = 0; i < m.counts.size(); ++i) {
    double mean = 0.0;
    for (double v : m.counts[i]) mean += v;
    mean /= static_cast<double>(cols);
    double var = 0.0;
    for (double v : m.counts[i]) var += (v - mean) * (v - mean);
    var /= static_cast<double>(cols);
    if (var < 1e-12) {
      res.dropped_rows.push_back(m.row_labels[i]);
    } else {
      res.retained_rows.push_back(m.row_labels[i]);
      X.push_back(m.counts[i]);
    }
  }
  const std::size_t rows = X.size();
  if (rows < 2)
    throw DegenerateMatrix("pca_classify: fewer than 2 rows with variance");

  // Column statistics (population) over retained rows.
  std::vector<double> cmean(cols, 0.0), cstd(cols, 0.0);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) cmean[j] += X[i][j];
    cmean[j] /= static_cast<double>(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      const double d = X[i][j] - cmean[j];
      cstd[j] += d * d;
    }
    cstd[j] = std::sqrt(cstd[j] / static_cast<double>(rows));
    if (!(cstd[j] > 1e-15))
      throw DegenerateMatrix("pca_classify: column '" + m.col_labels[j] +
                             "' has zero variance");
  }

  // Column-column Pearson correlation matrix.
  std::vector<std::vector<double>> corr(cols, std::vector<double>(cols, 0.0));
  for (std::size_t a = 0; a < cols; ++a) {
    corr[a][a] = 1.0;
    for (std::size_t b = a + 1; b < cols; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < rows; ++i)
        s += (X[i][a] - cmean[a]) * (X[i][b] - cmean[b]);
      const double r = s / (static_cast<double>(rows) * cstd[a] * cstd[b]);
      corr[a][b] = corr[b][a] = r;
    }
  }

  // Leading eigenvector by power iteration; the matrix is PSD so the
  // dominant eigenvalue is real and non-negative and the plain iteration
  // converges from any start not orthogonal to the leading space.
  std::vector<double> v(cols, 1.0), w(cols, 0.0);
  double norm = std::sqrt(static_cast<double>(cols));
  for (double& x : v) x /= norm;
  for (int it = 0; it < 10000; ++it) {
    for (std::size_t a = 0; a < cols; ++a) {
      w[a] = 0.0;
      for (std::size_t b = 0; b < cols; ++b) w[a] += corr[a][b] * v[b];
    }
    norm = 0.0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 0.0))
      throw DegenerateMatrix("pca_classify: power iteration collapsed");
    double delta = 0.0;
    for (std::size_t a = 0; a < cols; ++a) {
      w[a] /= norm;
      delta = std::max(delta, std::fabs(w[a] - v[a]));
    }
    v.swap(w);
    if (delta < 1e-12) break;
  }
  double vsum = 0.0;
  for (double x : v) vsum += x;
  if (vsum < 0.0)
    for (double& x : v) x = -x;
  res.eigenvector = v;

  // Scores: column-standardized row dotted with the eigenvector.
  for (std::size_t i = 0; i < rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols; ++j)
      s += (X[i][j] - cmean[j]) / cstd[j] * v[j];
    res.weights.push_back(s);
    res.classification.push_back(s > 0.0 ? 1 : (s < 0.0 ? -1 : 0));
  }
  return res;
}

// Sum of freq_per_million over retained rows classified positive.
inline double positive_weight_frequency_sum(const PcaResult& pca,
                                            const CompatibilityMatrix& m) {
  double sum = 0.0;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m.row_labels.size(); ++i) {
    if (idx < pca.retained_rows.size() &&
        m.row_labels[i] == pca.retained_rows[idx]) {
      if (pca.weights[idx] > 0.0) sum += m.row_freq[i];
      ++idx;
    }
  }
  if (idx != pca.retained_rows.size())
    throw DomainError("positive_weight_frequency_sum: result does not match "
                      "the matrix");
  return sum;
}

}  // namespace zipftk
