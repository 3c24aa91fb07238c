#ifndef PROFSUM_TESTS_FIXTURES_H_
#define PROFSUM_TESTS_FIXTURES_H_

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "profsum/ingest.h"
#include "profsum/profile.h"

namespace profsum::testing {

inline std::filesystem::path fixture(const std::string& rel) {
  return std::filesystem::path(PROFSUM_FIXTURE_DIR) / rel;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Annotated hex: '#' starts a comment, whitespace is ignored.
inline std::vector<uint8_t> read_hex(const std::filesystem::path& p) {
  std::istringstream in(slurp(p));
  std::string line, digits;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) digits += c;
  }
  std::vector<uint8_t> out;
  for (size_t i = 0; i + 1 < digits.size(); i += 2)
    out.push_back(static_cast<uint8_t>(std::stoi(digits.substr(i, 2), nullptr, 16)));
  return out;
}

inline nlohmann::json read_json(const std::filesystem::path& p) {
  return nlohmann::json::parse(slurp(p));
}

// The fixture JSON shape: metrics, default_metric, and stack -> values with
// folded frame tokens joined by ';'.
inline nlohmann::json profile_summary(const Profile& p) {
  nlohmann::json metrics = nlohmann::json::array();
  for (const auto& d : p.descriptors()) metrics.push_back({d.name, d.unit});
  std::map<std::string, std::vector<uint64_t>> samples;
  for (const Sample& s : p.samples()) {
    std::string key;
    for (const Frame& f : s.stack) {
      if (!key.empty()) key += ';';
      key += folded_frame_token(f);
    }
    auto& v = samples[key];
    v.resize(s.values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] += s.values[i];
  }
  return {{"metrics", metrics},
          {"default_metric", p.default_metric()},
          {"samples", samples}};
}

}  // namespace profsum::testing

#endif  // PROFSUM_TESTS_FIXTURES_H_
