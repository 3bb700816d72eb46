#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "owf/io.hpp"

namespace owf::cli {

struct Check {
  std::string name;
  std::string status;  // "pass", "fail" or "skipped(reason)"
  json details = json::object();
};

struct Report {
  std::string command;
  std::string config_digest;
  std::vector<Check> checks;
  json timings = json::object();  // milliseconds per check
  std::optional<std::uint64_t> seed;

  bool passed() const;
  json to_json() const;
  std::string to_text() const;

  // Runs one check, recording its wall time. A library error inside the
  // check fails it with the message; ResourceGuard and ConfigError escape.
  void run(const std::string& name, const std::function<bool(json&)>& body);
  void skip(const std::string& name, const std::string& reason, json details = json::object());
};

// 0 pass, 1 check failure, 2 usage or configuration error.
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

}  // namespace owf::cli
