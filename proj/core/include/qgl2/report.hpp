#pragma once

#include <string>
#include <vector>

namespace qgl2 {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // offending values on failure, empty on pass
};

struct IdentityReport {
  std::string preset;
  std::string suite;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0;  // not part of the canonical renderings

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  int passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.pass;
    return n;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const IdentityReport& other, const std::string& prefix = "") {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
  }
  std::string str(bool with_timing = false) const;
};

template <class T>
void add_eq(IdentityReport& rep, std::string name, const T& lhs, const T& rhs) {
  bool ok = lhs == rhs;
  rep.add(std::move(name), ok, ok ? "" : lhs.str() + "  !=  " + rhs.str());
}

}  // namespace qgl2
