#include <doctest.h>

#include "helpers.hpp"
#include "okbody/cone_tests.hpp"
#include "okbody/error.hpp"
#include "okbody/okounkov_polygon.hpp"
#include "okbody/toric_oracle.hpp"
#include "oracles.hpp"

using namespace okbody;
using okbody::testing::bundled;
using okbody::testing::D;
using okbody::testing::poly;
using okbody::testing::R;

TEST_SUITE("toric_oracle") {
  TEST_CASE("fan data is compatible") {
    for (const char* stem : {"p2", "f1", "dp6"}) CHECK_NOTHROW(ToricModel::from_model(bundled(stem)));
    for (int e = 0; e <= 4; ++e) CHECK_NOTHROW(ToricModel::from_model(bundled("fe", std::to_string(e))));
    try {
      (void)ToricModel::from_model(bundled("dp7"));
      FAIL("accepted");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::NotTorusInvariant);
    }
    const auto t = ToricModel::from_model(bundled("f1"));
    CHECK(t.fan_intersection(1, 1) == -1);
    CHECK(t.fan_intersection(0, 0) == 0);
    CHECK(t.fan_intersection(3, 3) == 1);
  }

  TEST_CASE("section polytopes") {
    const auto p2 = bundled("p2");
    const auto tp = ToricModel::from_model(p2);
    for (int d = 0; d <= 5; ++d) {
      CHECK(section_polytope(tp, D({d}), 1).size() == static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    }
    CHECK(section_polytope(tp, D({-1}), 1).empty());
    const auto f1 = bundled("f1");
    CHECK(section_polytope(ToricModel::from_model(f1), D({1, 0}), 1).size() == 3);
    CHECK_THROWS_AS(section_polytope(tp, DivisorClass{R(1, 2)}, 1), Error);
    CHECK(section_polytope(tp, DivisorClass{R(1, 2)}, 2).size() == 3);
  }

  TEST_CASE("valuation hulls") {
    const auto p2 = bundled("p2");
    const auto tp = ToricModel::from_model(p2);
    for (int d = 1; d <= 4; ++d) {
      const std::string s = std::to_string(d);
      CHECK(valuation_hull(tp, p2, D({d}), p2.flag("linear"), 1).hull ==
            poly({{"0", "0"}, {s.c_str(), "0"}, {"0", s.c_str()}}));
    }
    const auto f1 = bundled("f1");
    const auto tf = ToricModel::from_model(f1);
    CHECK(valuation_hull(tf, f1, D({1, 0}), f1.flag("on-E"), 1).hull == poly({{"0", "0"}, {"1", "0"}, {"1", "1"}}));
    CHECK(valuation_hull(tp, p2, D({-1}), p2.flag("linear"), 1).empty());
    CHECK_THROWS_AS(valuation_hull(tf, f1, D({1, 0}), f1.flag("cusp-tangent"), 1), Error);
  }

  TEST_CASE("comparison with the chamber walk") {
    const auto p2 = bundled("p2");
    const auto c = oracle_compare(ToricModel::from_model(p2), p2, D({3}), p2.flag("linear"), 1);
    CHECK(c.contained);
    CHECK(c.area_gap == 0);

    const auto f1 = bundled("f1");
    const auto tf = ToricModel::from_model(f1);
    const auto g1 = oracle_compare(tf, f1, D({1, 1}), f1.flag("on-E"), 1);
    const auto g6 = oracle_compare(tf, f1, D({1, 1}), f1.flag("on-E"), 6);
    CHECK(g1.contained);
    CHECK(g6.contained);
    CHECK(g6.area_gap <= g1.area_gap);
    for (const auto& d : okbody::testing::nef_integral_big(f1, 3)) {
      CHECK(oracle_compare(tf, f1, d, f1.flag("on-E"), 1).area_gap == 0);
    }
  }

  TEST_CASE("every invariant flag and level stays inside") {
    for (const char* stem : {"f1", "dp6"}) {
      const auto m = bundled(stem);
      const auto t = ToricModel::from_model(m);
      SplitMix64 rng(23);
      for (const auto& d : sample_big_classes(m, rng, 6, 3)) {
        for (const auto& f : m.flags()) {
          for (int level : {1, 2, 3}) {
            try {
              const auto c = oracle_compare(t, m, d, f, level);
              CAPTURE(d);
              CAPTURE(f.id);
              CHECK(c.contained);
              CHECK(c.area_gap >= 0);
            } catch (const Error& e) {
              CHECK(e.kind() == ErrorKind::NotTorusInvariant);
            }
          }
        }
      }
    }
  }
}
