#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "padicmf/profile.hpp"

namespace padicmf {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// The named suites, in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Inputs come from fixed seeds, so reports are reproducible.
/// Throws DomainError for an unknown name.
SuiteReport run_suite(const std::string& name, const Profile& profile);

/// `selector` is a suite name or "all".
std::vector<SuiteReport> run_verification(const std::string& selector, const Profile& profile);

nlohmann::json report_json(const std::vector<SuiteReport>& reports, const Profile& profile);

}  // namespace padicmf
