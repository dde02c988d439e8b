#include <doctest.h>

#include "helpers.hpp"
#include "okbody/cone_tests.hpp"
#include "okbody/error.hpp"
#include "oracles.hpp"

using namespace okbody;
using okbody::testing::bundled;
using okbody::testing::D;
using okbody::testing::R;

TEST_SUITE("cone_tests") {
  TEST_CASE("pseudoeffectivity with witnesses") {
    const auto f1 = bundled("f1");
    const auto bad = is_pseudoeffective(f1, D({1, -2}));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness);
    CHECK(*bad.witness == D({1, -1}));
    CHECK(is_pseudoeffective(f1, D({1, 1})).holds);
    CHECK(is_pseudoeffective(bundled("p2"), D({0})).holds);
    CHECK_FALSE(is_pseudoeffective(bundled("p2"), D({-1})).holds);
  }

  TEST_CASE("nefness") {
    const auto f1 = bundled("f1");
    const auto he = is_nef(f1, D({1, 1}));
    CHECK_FALSE(he.holds);
    REQUIRE(he.witness_curve);
    CHECK(*he.witness_curve == "E");
    CHECK(is_nef(f1, D({1, 0})).holds);
    for (int d = 0; d < 5; ++d) CHECK(is_nef(bundled("p2"), D({d})).holds);
  }

  TEST_CASE("bigness and ampleness") {
    const auto f1 = bundled("f1");
    CHECK(is_big(f1, D({1, 1})));
    CHECK_FALSE(is_big(f1, D({1, -1})));
    CHECK_FALSE(is_big(bundled("p2"), D({-1})));
    CHECK(is_ample(f1, D({2, -1})));
    CHECK_FALSE(is_ample(f1, D({1, 0})));
    CHECK(is_ample(bundled("p2"), D({1})));
    const auto v = classify(f1, D({1, 1}));
    CHECK(v.big);
    CHECK_FALSE(v.nef);
    CHECK_FALSE(v.ample);
  }

  TEST_CASE("pseudoeffective threshold") {
    const auto f1 = bundled("f1");
    CHECK(mu_threshold(f1, D({1, 1}), D({3, -2})) == R(1, 3));
    CHECK(mu_threshold(f1, D({1, 0}), D({0, 1})) == 1);
    CHECK(mu_threshold(f1, D({1, 1}), D({0, 1})) == 2);
  }

  TEST_CASE("hierarchy: ample => nef => pseudoeffective, big => pseudoeffective") {
    for (const char* stem : {"p2", "f1", "dp7", "dp6"}) {
      const auto m = bundled(stem);
      SplitMix64 rng(7);
      for (int k = 0; k < 150; ++k) {
        DivisorClass d = DivisorClass::zero(m.rank());
        for (std::size_t i = 0; i < m.rank(); ++i) d[i] = Rat(rng.uniform(-4, 4));
        const auto v = classify(m, d);
        CAPTURE(stem);
        CAPTURE(d);
        if (v.ample) CHECK(v.nef);
        if (v.nef) CHECK(v.pseudoeffective);
        if (v.big) CHECK(v.pseudoeffective);
        if (v.ample) CHECK(v.big);
      }
    }
  }
}
