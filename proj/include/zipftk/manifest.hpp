#pragma once

// Reproducibility metadata written next to every CLI output. The manifest
// alone carries everything needed to repeat a run: subcommand, the full
// parameter map (stringified exactly as parsed), the seed, the toolkit
// version, and the list of files the run produced. Keys serialize in sorted
// order, so identical runs yield byte-identical manifests.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "zipftk/errors.hpp"
#include "zipftk/version.hpp"

namespace zipftk {

struct RunManifest {
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  std::string toolkit_version = kVersion;
  std::vector<std::string> output_paths;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["subcommand"] = subcommand;
    j["parameters"] = parameters;
    j["seed"] = seed;
    j["toolkit_version"] = toolkit_version;
    j["output_paths"] = output_paths;
    return j;
  }

  static RunManifest from_json(const nlohmann::json& j) {
    RunManifest m;
    try {
      m.subcommand = j.at("subcommand").get<std::string>();
      m.parameters =
          j.at("parameters").get<std::map<std::string, std::string>>();
      m.seed = j.at("seed").get<std::uint64_t>();
      m.toolkit_version = j.at("toolkit_version").get<std::string>();
      m.output_paths = j.at("output_paths").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("run manifest: ") + e.what());
    }
    return m;
  }

  void write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw ParseError("run manifest: cannot write " + path.string());
    out << to_json().dump(2) << '\n';
  }

  static RunManifest read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("run manifest: cannot open " + path.string());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("run manifest: ") + e.what());
    }
    return from_json(j);
  }
};

}  // namespace zipftk
