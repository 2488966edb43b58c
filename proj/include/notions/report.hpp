#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace notions {

/// Outcome of a law check. Failures are data: each carries a rendered
/// counterexample. Only the first few are retained.
struct CheckReport {
  static constexpr std::size_t kMaxCounterexamples = 8;

  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;

  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  bool passed() const { return failures == 0; }

  void pass() { ++checked; }

  void fail(std::string counterexample) {
    ++checked;
    ++failures;
    if (counterexamples.size() < kMaxCounterexamples) {
      counterexamples.push_back(std::move(counterexample));
    }
  }

  /// Records one comparison.
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    if (ok) {
      pass();
    } else {
      fail(describe());
    }
  }

  void merge(const CheckReport& other) {
    checked += other.checked;
    failures += other.failures;
    for (const auto& c : other.counterexamples) {
      if (counterexamples.size() >= kMaxCounterexamples) break;
      counterexamples.push_back(other.name.empty() ? c : other.name + ": " + c);
    }
  }

  std::string firstCounterexample() const {
    return counterexamples.empty() ? std::string{} : counterexamples.front();
  }
};

}  // namespace notions
