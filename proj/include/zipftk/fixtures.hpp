#pragma once

// Bundled lexical data: hyponym frequency tables and one adjective/noun
// compatibility matrix, shipped as CSV files under a versioned directory
// with a JSON catalog. The catalog records a checksum per file so tests can
// detect accidental edits, a citation for the underlying data source, the
// named check configurations (e.g. "without the cherry words"), and any
// discrepancy between the sums printed in the source tables and what the
// listed rows actually add up to.
//
// Hyponym CSV columns: role(head|hyponym|excluded), word, freq_per_million,
// translit, gloss, note. Matrix CSV: adjective, freq_per_million, one count
// column per test noun (label carries a (+)/(-) polarity tag), note.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "zipftk/csv.hpp"
#include "zipftk/errors.hpp"
#include "zipftk/lexsem.hpp"
#include "zipftk/rng.hpp"

namespace zipftk {

// One named way to run the sum check on a table: which hyponym rows to drop
// and what the source prints for the resulting sums (NaN when not printed).
struct FixtureConfig {
  std::string name;
  std::vector<std::string> exclude;
  bool marked_passing = false;
  double printed_head_sum = std::numeric_limits<double>::quiet_NaN();
  double printed_hyponym_sum = std::numeric_limits<double>::quiet_NaN();
};

// A printed total that does not match its own listed rows. Recorded, never
// silently corrected; tests assert the recomputed value instead.
struct FixtureDiscrepancy {
  std::string config;
  std::string field;  // "head_sum" | "hyponym_sum"
  double printed = 0.0;
  double recomputed = 0.0;
  std::string note;
};

struct FixtureInfo {
  std::string id;
  std::string file;
  std::string kind;  // "hyponym_table" | "matrix"
  std::string checksum_fnv1a64;
  std::string citation;
  std::vector<std::string> notes;
  std::vector<FixtureConfig> configs;
  std::vector<FixtureDiscrepancy> discrepancies;
  nlohmann::json printed;  // kind-specific reference values (eigenvector, ...)
};

inline std::string fnv1a64_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(
                    fnv1a64(bytes.data(), bytes.size())));
  return std::string(buf);
}

inline HyponymTable parse_hyponym_csv(const std::string& id,
                                      const std::string& text) {
  const auto rows = csv::parse(text, /*skip_comments=*/true);
  if (rows.empty()) throw ParseError("fixture '" + id + "': empty file");
  const auto& h = rows.front();
  if (h.size() < 3 || h[0] != "role" || h[1] != "word" ||
      h[2] != "freq_per_million")
    throw ParseError("fixture '" + id + "': unexpected header");
  HyponymTable t;
  t.name = id;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() < 3)
      throw ParseError("fixture '" + id + "': short row " + std::to_string(i));
    HyponymEntry e;
    e.word = r[1];
    e.freq_per_million = csv::to_double(r[2]);
    if (r.size() > 5) e.note = r[5];
    if (r[0] == "head")
      t.head.push_back(e);
    else if (r[0] == "hyponym")
      t.hyponyms.push_back(e);
    else if (r[0] == "excluded")
      t.excluded.push_back(e);
    else
      throw ParseError("fixture '" + id + "': unknown role '" + r[0] + "'");
  }
  validate_hyponym_table(t);
  return t;
}

inline CompatibilityMatrix parse_matrix_csv(const std::string& id,
                                            const std::string& text) {
  const auto rows = csv::parse(text, /*skip_comments=*/true);
  if (rows.empty()) throw ParseError("fixture '" + id + "': empty file");
  const auto& h = rows.front();
  if (h.size() < 4 || h.front() != "adjective" || h[1] != "freq_per_million" ||
      h.back() != "note")
    throw ParseError("fixture '" + id + "': unexpected matrix header");
  CompatibilityMatrix m;
  for (std::size_t j = 2; j + 1 < h.size(); ++j) {
    const std::string& lab = h[j];
    int pol = 0;
    if (lab.size() > 3 && lab.substr(lab.size() - 3) == "(+)")
      pol = 1;
    else if (lab.size() > 3 && lab.substr(lab.size() - 3) == "(-)")
      pol = -1;
    else
      throw ParseError("fixture '" + id + "': column '" + lab +
                       "' lacks a polarity tag");
    m.col_labels.push_back(lab.substr(0, lab.size() - 3));
    m.col_polarity.push_back(pol);
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != h.size())
      throw ParseError("fixture '" + id + "': ragged row " + std::to_string(i));
    m.row_labels.push_back(r.front());
    m.row_freq.push_back(csv::to_double(r[1]));
    m.row_notes.push_back(r.back());
    std::vector<double> counts;
    for (std::size_t j = 2; j + 1 < r.size(); ++j)
      counts.push_back(csv::to_double(r[j]));
    m.counts.push_back(std::move(counts));
  }
  validate_matrix(m);
  return m;
}

class FixtureCatalog {
 public:
  int version = 0;
  std::vector<std::string> data_sources;
  std::map<std::string, FixtureInfo> entries;
  std::filesystem::path dir;

  static FixtureCatalog load(const std::filesystem::path& dir) {
    std::ifstream in(dir / "catalog.json");
    if (!in)
      throw ParseError("fixture catalog: cannot open " +
                       (dir / "catalog.json").string());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("fixture catalog: ") + e.what());
    }
    FixtureCatalog cat;
    cat.dir = dir;
    try {
      cat.version = j.at("version").get<int>();
      for (const auto& s : j.value("data_sources", nlohmann::json::array()))
        cat.data_sources.push_back(s.get<std::string>());
      for (const auto& [id, fj] : j.at("fixtures").items()) {
        FixtureInfo info;
        info.id = id;
        info.file = fj.at("file").get<std::string>();
        info.kind = fj.at("kind").get<std::string>();
        info.checksum_fnv1a64 = fj.at("checksum_fnv1a64").get<std::string>();
        info.citation = fj.at("citation").get<std::string>();
        for (const auto& n : fj.value("notes", nlohmann::json::array()))
          info.notes.push_back(n.get<std::string>());
        for (const auto& cj : fj.value("configs", nlohmann::json::array())) {
          FixtureConfig c;
          c.name = cj.at("name").get<std::string>();
          for (const auto& w : cj.value("exclude", nlohmann::json::array()))
            c.exclude.push_back(w.get<std::string>());
          c.marked_passing = cj.value("marked_passing", false);
          if (cj.contains("printed_head_sum"))
            c.printed_head_sum = cj["printed_head_sum"].get<double>();
          if (cj.contains("printed_hyponym_sum"))
            c.printed_hyponym_sum = cj["printed_hyponym_sum"].get<double>();
          info.configs.push_back(std::move(c));
        }
        for (const auto& dj :
             fj.value("discrepancies", nlohmann::json::array())) {
          FixtureDiscrepancy d;
          d.config = dj.at("config").get<std::string>();
          d.field = dj.at("field").get<std::string>();
          d.printed = dj.at("printed").get<double>();
          d.recomputed = dj.at("recomputed").get<double>();
          d.note = dj.value("note", "");
          info.discrepancies.push_back(std::move(d));
        }
        info.printed = fj.value("printed", nlohmann::json::object());
        cat.entries.emplace(id, std::move(info));
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("fixture catalog: ") + e.what());
    }
    return cat;
  }

  const FixtureInfo& info(const std::string& id) const {
    auto it = entries.find(id);
    if (it == entries.end())
      throw UnknownFixture("no fixture named '" + id + "'");
    return it->second;
  }

  // File bytes with the catalog checksum enforced.
  std::string read_verified(const std::string& id) const {
    const FixtureInfo& fi = info(id);
    std::ifstream in(dir / fi.file, std::ios::binary);
    if (!in)
      throw ParseError("fixture '" + id + "': cannot open " +
                       (dir / fi.file).string());
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string bytes = ss.str();
    const std::string got = fnv1a64_hex(bytes);
    if (got != fi.checksum_fnv1a64)
      throw ChecksumMismatch("fixture '" + id + "': checksum " + got +
                             " != catalog " + fi.checksum_fnv1a64);
    return bytes;
  }

  HyponymTable hyponym_table(const std::string& id) const {
    const FixtureInfo& fi = info(id);
    if (fi.kind != "hyponym_table")
      throw UnknownFixture("fixture '" + id + "' is not a hyponym table");
    return parse_hyponym_csv(id, read_verified(id));
  }

  CompatibilityMatrix matrix(const std::string& id) const {
    const FixtureInfo& fi = info(id);
    if (fi.kind != "matrix")
      throw UnknownFixture("fixture '" + id + "' is not a matrix");
    return parse_matrix_csv(id, read_verified(id));
  }

  std::variant<HyponymTable, CompatibilityMatrix> fixture(
      const std::string& id) const {
    if (info(id).kind == "matrix") return matrix(id);
    return hyponym_table(id);
  }
};

// Applies a named configuration: drops the listed hyponym rows. Every word
// in the exclude list must actually be present, so catalog typos surface.
inline HyponymTable apply_config(const HyponymTable& t,
                                 const FixtureConfig& cfg) {
  HyponymTable out = t;
  out.hyponyms.clear();
  std::vector<bool> used(cfg.exclude.size(), false);
  for (const auto& e : t.hyponyms) {
    bool drop = false;
    for (std::size_t i = 0; i < cfg.exclude.size(); ++i)
      if (e.word == cfg.exclude[i]) {
        drop = true;
        used[i] = true;
      }
    if (!drop) out.hyponyms.push_back(e);
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i])
      throw DomainError("config '" + cfg.name + "': word '" + cfg.exclude[i] +
                        "' not found in table '" + t.name + "'");
  return out;
}

inline const FixtureConfig& find_config(const FixtureInfo& fi,
                                        const std::string& name) {
  for (const auto& c : fi.configs)
    if (c.name == name) return c;
  throw UnknownFixture("fixture '" + fi.id + "' has no config '" + name + "'");
}

// Fixture directory resolution: explicit argument beats the environment
// variable, which beats the compiled-in default.
inline std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("ZIPFTK_FIXTURE_DIR")) return env;
#ifdef ZIPFTK_DEFAULT_FIXTURE_DIR
  return ZIPFTK_DEFAULT_FIXTURE_DIR;
#else
  return "data/fixtures/v1";
#endif
}

}  // namespace zipftk
