#include <gtest/gtest.h>

#include "notions/library.hpp"
#include "notions/suites.hpp"

using namespace notions;

namespace {

const CheckResult* find(const SuiteReport& r, const std::string& prefix) {
  for (const auto& c : r.checks) {
    if (c.name.rfind(prefix, 0) == 0) return &c;
  }
  return nullptr;
}

}  // namespace

TEST(Suites, NineNames) {
  EXPECT_EQ(suiteNames().size(), 9u);
  EXPECT_EQ(suiteNames().back(), "all");
}

TEST(Suites, UnknownSuiteIsALookupError) {
  EXPECT_THROW(suiteChecks("nosuch", {}), LookupError);
}

TEST(Suites, AllPassAtDefaults) {
  auto r = runSuite("all", SuiteConfig{});
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.status, Status::Pass) << c.name << ": " << c.counterexample;
  }
  EXPECT_TRUE(r.passed());
}

TEST(Suites, SortedByName) {
  auto r = runSuite("finset", SuiteConfig{});
  for (std::size_t i = 1; i < r.checks.size(); ++i) {
    EXPECT_LE(r.checks[i - 1].name, r.checks[i].name);
  }
}

TEST(Suites, StrengthBugGivesACounterexample) {
  SuiteConfig cfg;
  cfg.injectStrengthBug = true;
  auto r = runSuite("adjunctions", cfg);
  EXPECT_FALSE(r.passed());
  const auto* c = find(r, "adjunctions/strength laws: cayley(maybe)");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Fail);
  EXPECT_NE(c->counterexample.find("(X,Y,Z)="), std::string::npos);
}

TEST(Suites, FailFastSkipsTheRest) {
  SuiteConfig cfg;
  cfg.injectStrengthBug = true;
  cfg.failFast = true;
  auto r = runSuite("adjunctions", cfg);
  EXPECT_EQ(r.count(Status::Fail), 1u);
  EXPECT_GT(r.count(Status::Skipped), 0u);
}

TEST(Suites, ReaderStabilizationIsAnExpectedFailureAtBoundOne) {
  SuiteConfig cfg;
  cfg.maxObj = 1;
  cfg.coendBound = 1;
  auto r = runSuite("coends", cfg);
  const auto* c = find(r, "coends/stabilization at K=1: reader2 [expected failure]");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Pass);
  EXPECT_EQ(c->note.rfind("not stable", 0), 0u) << c->note;
  const auto* m = find(r, "coends/stabilization at K=1: maybe");
  ASSERT_NE(m, nullptr);
  EXPECT_EQ(m->name.find("expected failure"), std::string::npos);
}

TEST(Suites, DeterministicApartFromTimings) {
  auto a = runSuite("profunctors", SuiteConfig{});
  auto b = runSuite("profunctors", SuiteConfig{});
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].status, b.checks[i].status);
    EXPECT_EQ(a.checks[i].counterexample, b.checks[i].counterexample);
    EXPECT_EQ(a.checks[i].note, b.checks[i].note);
  }
}

TEST(Show, MaybeTables) {
  std::string s = showInstance("maybe", {2});
  EXPECT_NE(s.find("F(2) = 3: {Just(0), Just(1), Nothing}"), std::string::npos) << s;
  EXPECT_NE(s.find("F(2->2 [1,0]) = 3->3 [1,0,2]"), std::string::npos) << s;
}

TEST(Show, KleisliMaybeCarrier) {
  std::string s = showInstance("kleisli-maybe", {2, 2});
  EXPECT_NE(s.find("P(2,2) = 9:"), std::string::npos) << s;
  EXPECT_NE(s.find("[Nothing,Nothing]"), std::string::npos) << s;
}

TEST(Show, Errors) {
  EXPECT_THROW(showInstance("nosuch", {1}), LookupError);
  EXPECT_THROW(showInstance("maybe", {1, 2}), DomainError);
  EXPECT_THROW(showInstance("hom", {}), DomainError);
}
