#include "owf_cli/report.hpp"

#include <sstream>

#include "owf/errors.hpp"

namespace owf::cli {

bool Report::passed() const {
  for (const Check& c : checks) {
    if (c.status == "fail") return false;
  }
  return true;
}

json Report::to_json() const {
  json out{{"command", command}, {"config_digest", config_digest}};
  json list = json::array();
  for (const Check& c : checks) list.push_back({{"name", c.name}, {"status", c.status}, {"details", c.details}});
  out["checks"] = std::move(list);
  out["timings"] = timings;
  out["seed"] = seed ? json(*seed) : json(nullptr);
  return out;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << command << "  (config " << config_digest;
  if (seed) out << ", seed " << *seed;
  out << ")\n";
  for (const Check& c : checks) {
    out << "  " << c.status << "  " << c.name;
    if (!c.details.empty()) out << "  " << c.details.dump();
    out << '\n';
  }
  out << (passed() ? "all checks passed" : "some checks FAILED") << '\n';
  return out.str();
}

void Report::run(const std::string& name, const std::function<bool(json&)>& body) {
  Check check{name, "fail", json::object()};
  const auto start = std::chrono::steady_clock::now();
  try {
    check.status = body(check.details) ? "pass" : "fail";
  } catch (const ResourceGuard&) {
    throw;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    check.details["error"] = e.what();
  }
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  timings[name] = elapsed.count();
  checks.push_back(std::move(check));
}

void Report::skip(const std::string& name, const std::string& reason, json details) {
  checks.push_back({name, "skipped(" + reason + ")", std::move(details)});
}

}  // namespace owf::cli
