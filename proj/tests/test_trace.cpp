#include <doctest.h>

#include "qkgr/reduction_trace.hpp"
#include "qkgr/verify.hpp"
#include "support.hpp"

using namespace qkgr;
using test::P;

TEST_SUITE("trace") {
  TEST_CASE("greedy chain on the large example") {
    const auto ctx = GrContext::make(6, 17);
    const Partition lambda = P(ctx, "10,8,6,4,2,0");
    const auto trace = greedy_reduce(ctx, {lambda, lambda, P(ctx, "6,2,2,1,0,0"), 3});
    REQUIRE(trace.steps.size() == 3);
    CHECK(trace.steps[0].tuple == IndexTuple{P(ctx, "9,7,5,3,1,0"), lambda, P(ctx, "8,4,4,3,2,2"), 2});
    CHECK(trace.steps[1].tuple ==
          IndexTuple{P(ctx, "9,7,5,3,1,0"), P(ctx, "9,7,5,3,1,0"), P(ctx, "10,6,6,5,4,4"), 1});
    CHECK(trace.steps[2].tuple ==
          IndexTuple{P(ctx, "9,7,5,4,2,0"), P(ctx, "9,7,5,3,1,0"), P(ctx, "11,11,10,9,9,4"), 0});
    CHECK(trace.outcome == "degree zero");
  }

  TEST_CASE("trivial traces") {
    const auto ctx = GrContext::make(2, 4);
    const auto zero = greedy_reduce(ctx, {P(ctx, "1,0"), P(ctx, "1,0"), P(ctx, "2,1"), 0});
    CHECK(zero.steps.empty());
    CHECK(zero.outcome == "degree zero");
    CHECK(trace_json(zero, -1) ==
          R"({"start":{"lambda":[1,0],"mu":[1,0],"nu":[2,1],"d":0},"steps":[],"outcome":"degree zero","value":-1})");

    const auto c36 = GrContext::make(3, 6);
    const auto stuck = greedy_reduce(c36, {P(c36, "1,1,0"), P(c36, "2,1,0"), P(c36, "3,2,0"), 1});
    CHECK(stuck.outcome == "no rule applies");
  }

  TEST_CASE("suite reports") {
    SuiteReport report("demo", "Gr(2,4)");
    CHECK_FALSE(report.passed());
    report.record("a", true);
    report.record("a", false, [] { return std::string("first"); });
    report.record("a", false, [] { return std::string("second"); });
    CHECK(report.checked() == 3);
    CHECK(report.failed() == 2);
    CHECK(report.first_failure() == std::optional<std::string>("a: first"));
    CHECK_FALSE(report.passed());
    CHECK_THROWS_AS(run_suite("nonsense", {}), std::invalid_argument);

    SweepOptions small;
    small.k = 2;
    small.n = 4;
    for (const auto& name : suite_names()) CHECK(run_suite(name, small).passed());
  }
}
