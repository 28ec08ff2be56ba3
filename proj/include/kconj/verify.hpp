#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kconj/group_model.hpp"

namespace kconj {

struct VerifyConfig {
  int window = 2;
  int padding = 1;
  /// Restrict window checks to one homological degree.
  std::optional<int> degree;
  std::uint64_t seed = 1;
  int samples = 50;
  unsigned threads = 1;
};

struct CheckResult {
  std::string name;
  std::string module;
  bool passed = false;
  std::string detail;
  nlohmann::json data;
  double seconds = 0;
};

struct InvariantCheck {
  std::string name;
  std::string module;
  std::string description;
  std::function<CheckResult(const GroupPtr&, const VerifyConfig&)> run;
};

/// Every module invariant the `verify` command runs.
const std::vector<InvariantCheck>& invariant_registry();

struct VerifyReport {
  std::string group;
  std::vector<CheckResult> results;

  bool passed() const;
  std::vector<std::string> failures() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Runs the registry (concurrently when config.threads > 1); results are
/// reported in registry order.
VerifyReport run_verify(const GroupPtr& g, const VerifyConfig& config);

}  // namespace kconj
