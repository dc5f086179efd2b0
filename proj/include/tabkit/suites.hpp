#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace tabkit {

inline constexpr std::uint64_t kDefaultSeed = 20240229;

struct CaseResult {
  std::string key;
  bool ok = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CaseResult> cases;
  nlohmann::json data;  // worked values, when the suite has any
  double seconds = 0;   // wall time, not part of the JSON
  bool ok() const;
  long long failed() const;
};

// Named verification suites; "all" runs every one in order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, std::uint64_t seed = kDefaultSeed);

nlohmann::json to_json(const SuiteResult& r);

}  // namespace tabkit
