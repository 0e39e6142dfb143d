// report.hpp -- pass/fail check reports shared by the verification drivers.
#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace lieforge {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CaseReport {
  std::string id;
  std::vector<Check> checks;
  // Wall time, kept out of the rendered report so runs are byte-identical.
  double elapsed_seconds = 0.0;

  explicit CaseReport(std::string id_ = "") : id(std::move(id_)) {}

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace lieforge
