#pragma once

#include <chrono>
#include <cstdint>
#include <ctime>
#include <string>
#include <vector>

#include <json.hpp>

#include "goldenfa/config.hpp"
#include "goldenfa/version.hpp"

namespace goldenfa {

/// Describes one CLI run: tool version, resolved config, master seed, start
/// time and every file the run wrote. Rerunning the recorded config with the
/// recorded seed reproduces each output byte for byte.
struct RunManifest {
  std::string command;
  std::uint64_t master_seed = 0;
  std::vector<std::pair<std::string, std::string>> resolved_config;
  std::vector<std::string> outputs;

  [[nodiscard]] nlohmann::json to_json() const {
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [k, v] : resolved_config) cfg[k] = v;
    return nlohmann::json{{"tool", "goldenfa"},
                          {"version", version_string},
                          {"command", command},
                          {"master_seed", master_seed},
                          {"started_at", iso8601_now()},
                          {"config", cfg},
                          {"outputs", outputs}};
  }

 private:
  static std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }
};

/// Key/value echo of a parsed config for the manifest.
inline std::vector<std::pair<std::string, std::string>> echo_config(const FlatConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& key : cfg.keys_in_order()) out.emplace_back(key, cfg.raw(key));
  return out;
}

}  // namespace goldenfa
