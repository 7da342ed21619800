#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace octo {

/// Raised when an operation receives structurally malformed input
/// (wrong sizes, labels out of range). Distinct from a failed check.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Outcome of one named check. Counterexamples are capped by the producer.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;

  void fail(std::string witness, std::size_t cap = 10) {
    passed = false;
    if (counterexamples.size() < cap) counterexamples.push_back(std::move(witness));
  }
};

/// A group of checks; passes iff every member passes.
struct CheckReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  [[nodiscard]] const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace octo
