#include <doctest.h>

#include "helpers.hpp"
#include "okbody/cone_tests.hpp"
#include "okbody/error.hpp"
#include "okbody/verification.hpp"
#include "oracles.hpp"

using namespace okbody;
using okbody::testing::bundled;
using okbody::testing::D;
using okbody::testing::R;

TEST_SUITE("verification") {
  TEST_CASE("sampling is deterministic and big") {
    const auto m = bundled("dp7");
    SplitMix64 a(5), b(5);
    const auto xs = sample_big_classes(m, a, 10, 4);
    const auto ys = sample_big_classes(m, b, 10, 4);
    CHECK(xs == ys);
    CHECK(xs.size() == 10);
    CHECK(xs.front() == default_ample(m));
    for (const auto& d : xs) CHECK(is_big(m, d));
  }

  TEST_CASE("rational draws stay in range") {
    SplitMix64 rng(1);
    for (int k = 0; k < 200; ++k) {
      const Rat t = rng.uniform_rat(R(1, 3), R(2), 12);
      CHECK(t >= R(1, 3));
      CHECK(t < 2);
    }
  }

  TEST_CASE("default ample is ample") {
    for (const char* stem : {"p2", "f1", "dp7", "dp6"}) CHECK(is_ample(bundled(stem), default_ample(bundled(stem))));
    for (int e = 0; e <= 4; ++e) {
      const auto m = bundled("fe", std::to_string(e));
      CHECK(is_ample(m, default_ample(m)));
    }
  }

  TEST_CASE("every suite agrees on F1") {
    const auto f1 = bundled("f1");
    SuiteOptions opts;
    opts.classes = 5;
    for (const auto& name : suite_names()) {
      CAPTURE(name);
      const auto r = run_suite(f1, name, opts);
      CHECK(r.agree());
      CHECK_FALSE(r.reports.empty());
    }
  }

  TEST_CASE("restrictions and errors") {
    const auto f1 = bundled("f1");
    SuiteOptions opts;
    opts.divisor = D({1, 1});
    opts.flag = "cusp-tangent";
    opts.t = R(1, 6);
    const auto r = run_suite(f1, "slice", opts);
    REQUIRE(r.reports.size() == 1);
    CHECK(r.reports[0].agree);
    CHECK_THROWS_AS(run_suite(f1, "bogus", opts), Error);
    opts.divisor = D({1, -1});
    CHECK_THROWS_AS(run_suite(f1, "theoremA", opts), Error);
    opts.divisor = D({1});
    CHECK_THROWS_AS(run_suite(f1, "theoremA", opts), Error);
  }

  TEST_CASE("oracle suite skips models without fan data") {
    const auto r = run_suite(bundled("dp7"), "oracle", SuiteOptions{});
    CHECK(r.reports.empty());
    CHECK(r.skipped > 0);
  }
}
