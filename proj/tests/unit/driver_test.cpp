#include <gtest/gtest.h>

#include "smooth/driver.hpp"
#include "support.hpp"

using namespace smooth;
using namespace testing_support;

namespace {

Config mode(Mode m, std::optional<unsigned> depth = std::nullopt) {
  Config c;
  c.mode = m;
  c.descent_depth = depth;
  return c;
}

}  // namespace

TEST(Driver, AffineExamplesAllModes) {
  auto r2 = qq({"x", "y"});
  auto r3 = qq({"x", "y", "z"});
  struct Case {
    Ideal ideal;
    Outcome expected;
  } cases[] = {
      {I(r2, {"y^2-x^3"}), Outcome::singular},
      {I(r3, {"x", "y"}), Outcome::smooth},
      {I(r2, {"x^2+y^2-1"}), Outcome::smooth},
      {I(r2, {"x*(y+1)", "y*(x+1)"}), Outcome::smooth},
      {I(r3, {"x^2+y^2-z^2"}), Outcome::singular},
      {I(r3, {"x^2+y^2+z^2-1", "z"}), Outcome::smooth},
      {I(r3, {"x*y", "z"}), Outcome::singular},
      {I(r3, {"z-x^2-y^3"}), Outcome::smooth},
      {I(r3, {"x^2-y^2*z"}), Outcome::singular},
      {Ideal(r2), Outcome::smooth},
      {I(r2, {"3"}), Outcome::smooth},
  };
  for (const auto& c : cases) {
    for (const Config& cfg : {mode(Mode::hironaka), mode(Mode::jacobian), mode(Mode::hybrid, 0u),
                              mode(Mode::hybrid, 1u), mode(Mode::hybrid, 2u)}) {
      Verdict v = smoothness_test(c.ideal, cfg);
      EXPECT_EQ(v.outcome, c.expected) << write_ideal(c.ideal) << to_string(cfg.mode);
      EXPECT_EQ(v.witness.has_value(), v.outcome == Outcome::singular);
      EXPECT_LE(v.sim_parallel_ms, v.sequential_ms + 1e-9);
    }
  }
}

TEST(Driver, CuspWitnessAtDepthZero) {
  auto r = qq({"x", "y"});
  Verdict v = smoothness_test(I(r, {"y^2-x^3"}), Config{});
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->depth, 0u);
  EXPECT_EQ(v.witness->phase, "delta");
  EXPECT_EQ(v.witness->key, (TaskKey{1, 0, 0}));
}

TEST(Driver, Projective) {
  auto r = qq({"x0", "x1", "x2"});
  EXPECT_TRUE(projective_smoothness(I(r, {"x0"}), Config{}).smooth());
  EXPECT_TRUE(projective_smoothness(I(r, {"x0*x2-x1^2"}), Config{}).smooth());
  Verdict v = projective_smoothness(I(r, {"x0*x2^2-x1^3"}), Config{});
  EXPECT_EQ(v.outcome, Outcome::singular);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->projective_chart, 0u);
  EXPECT_THROW(projective_smoothness(I(r, {"x0-1"}), Config{}), std::invalid_argument);
}

TEST(Driver, DeterministicAcrossJobsAndSchedules) {
  auto r = qq({"a", "b", "c", "d"});
  Ideal x = I(r, {"a*b-c*d", "a^2-b*d+c^2"});
  std::string first;
  for (unsigned jobs : {1u, 2u, 8u})
    for (std::optional<std::uint64_t> sched : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{99}}) {
      Config cfg;
      cfg.jobs = jobs;
      cfg.schedule_seed = sched;
      std::string j = verdict_json(smoothness_test(x, cfg), cfg);
      if (first.empty()) first = j;
      EXPECT_EQ(j, first) << jobs;
    }
}

TEST(Driver, NoGroebnerStartAfterWitnessSequential) {
  auto r = qq({"x", "y", "z"});
  Config cfg;
  cfg.trace = true;
  Verdict v = smoothness_test(I(r, {"x*y", "z*(x+y)"}), cfg);
  ASSERT_EQ(v.outcome, Outcome::singular);
  bool after = false;
  for (const auto& e : v.events) {
    if (e.kind == TraceEvent::Kind::failure && e.key == v.witness->key) after = true;
    if (after) EXPECT_NE(e.kind, TraceEvent::Kind::groebner_start);
  }
  EXPECT_TRUE(after);
}

TEST(Driver, TimeLimitIsIndeterminate) {
  auto r = qq({"a", "b", "c", "d", "e", "f"});
  Config cfg;
  cfg.limits.time_limit_seconds = 0.0;
  Verdict v = smoothness_test(I(r, {"a*b-c*d", "e*f-a^2", "b*c-d*e+f^2"}), cfg);
  EXPECT_EQ(v.outcome, Outcome::indeterminate);
  EXPECT_FALSE(v.diagnostics.empty());
}
