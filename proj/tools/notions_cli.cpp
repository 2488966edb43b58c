/// Command-line front end: run verification suites, list them, dump
/// instance tables.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "notions/notions.hpp"

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

nlohmann::ordered_json toJson(const notions::SuiteReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = report.suite;
  j["config"] = {{"max_obj", report.config.maxObj},
                 {"coend_bound", report.config.coendBound}};
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = notions::statusName(c.status);
    e["counterexample"] = c.counterexample.empty()
                              ? nlohmann::ordered_json(nullptr)
                              : nlohmann::ordered_json(c.counterexample);
    e["elapsed_ms"] = c.elapsedMs;
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive law checks for finitary functors, profunctors, "
               "idioms, monads and arrows"};
  app.require_subcommand(1);

  notions::SuiteConfig config;
  std::string suite = "all";
  std::string jsonPath;
  bool quiet = false;
  auto* run = app.add_subcommand("run", "Run a verification suite");
  run->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember(notions::suiteNames()))
      ->capture_default_str();
  run->add_option("--max-obj", config.maxObj, "Largest object size checked")
      ->check(CLI::Range(0, 4))
      ->capture_default_str();
  run->add_option("--coend-bound", config.coendBound,
                  "Truncation bound K for coends")
      ->check(CLI::Range(0, 6))
      ->capture_default_str();
  run->add_option("--json", jsonPath, "Write the report as JSON to PATH");
  run->add_flag("--fail-fast", config.failFast,
                "Skip remaining checks after the first failure");
  run->add_flag("--quiet", quiet, "Only print the closing tally");
  run->add_flag("--inject-strength-bug", config.injectStrengthBug)
      ->group("");

  auto* list = app.add_subcommand("list", "List suite names");

  std::string instance;
  std::vector<std::size_t> sizes;
  auto* show = app.add_subcommand(
      "show", "Print the tables of a library instance at the given sizes");
  show->add_option("instance", instance, "Instance name")->required();
  show->add_option("sizes", sizes, "Object sizes: N for a functor, X Y or N "
                                   "for a profunctor")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*list) {
      for (const auto& n : notions::suiteNames()) std::cout << n << "\n";
      return 0;
    }
    if (*show) {
      std::cout << notions::showInstance(instance, sizes);
      return 0;
    }
    auto report = notions::runSuite(suite, config);
    std::string summary = notions::renderSummary(report);
    if (quiet) summary = summary.substr(summary.rfind('\n', summary.size() - 2) + 1);
    std::cout << summary;
    if (!jsonPath.empty()) {
      std::ofstream out(jsonPath);
      if (!out) {
        std::cerr << "cannot write " << jsonPath << "\n";
        return kExitUsage;
      }
      out << toJson(report).dump(2) << "\n";
    }
    return report.passed() ? 0 : kExitFailures;
  } catch (const notions::LookupError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const notions::DomainError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
