#include "helpers.hpp"
#include "numgame/verify.hpp"

using namespace numgame;

TEST(Suites, EveryNamedSuitePasses) {
  for (const auto& name : suite_names()) {
    SuiteResult r = run_suite(name);
    EXPECT_EQ(r.suite, name);
    EXPECT_FALSE(r.checks.empty()) << name;
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << name << ": " << c.name << " " << c.detail;
  }
}

TEST(Suites, OptionsAreHonored) {
  SuiteOptions small{3, 7, 5};
  SuiteResult a = run_suite("strong-convergence", small);
  SuiteResult b = run_suite("strong-convergence", small);
  EXPECT_TRUE(a.passed());
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t k = 0; k < a.checks.size(); ++k) EXPECT_EQ(a.checks[k].detail, b.checks[k].detail);
  EXPECT_LE(a.checks.size(), run_suite("strong-convergence").checks.size());
}

TEST(Suites, AliasesAndUnknown) {
  EXPECT_EQ(run_suite("theorem43").suite, "adjacency-table");
  EXPECT_EQ(run_suite("theorem52").suite, "equivalences");
  EXPECT_ERRC(run_suite("nope"), Errc::UnknownSuite);
}
