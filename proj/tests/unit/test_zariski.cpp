#include <doctest.h>

#include "helpers.hpp"
#include "okbody/cone_tests.hpp"
#include "okbody/error.hpp"
#include "okbody/zariski.hpp"
#include "oracles.hpp"

using namespace okbody;
using okbody::testing::bundled;
using okbody::testing::D;
using okbody::testing::R;

TEST_SUITE("zariski") {
  TEST_CASE("worked decompositions") {
    const auto f1 = bundled("f1");
    const auto z = zariski_decompose(f1, D({1, 1}));
    CHECK(z.positive == D({1, 0}));
    CHECK(z.negative == std::map<std::string, Rat>{{"E", R(1)}});
    const auto h = zariski_decompose(f1, D({1, 0}));
    CHECK(h.positive == D({1, 0}));
    CHECK(h.negative.empty());

    const auto dp7 = bundled("dp7");
    const auto z7 = zariski_decompose(dp7, D({1, 1, 1}));
    CHECK(z7.positive == D({1, 0, 0}));
    CHECK(z7.negative == std::map<std::string, Rat>{{"E1", R(1)}, {"E2", R(1)}});
    CHECK(z7.support == std::vector<std::string>{"E1", "E2"});
  }

  TEST_CASE("volume and sigma") {
    const auto f1 = bundled("f1");
    CHECK(volume(f1, D({1, 1})) == 1);
    CHECK(volume(f1, D({1, -1})) == 0);
    CHECK(volume(f1, D({-1, 0})) == 0);
    for (int d = 0; d < 5; ++d) CHECK(volume(bundled("p2"), D({d})) == d * d);
    CHECK(sigma_coefficient(f1, D({1, 1}), "E") == 1);
    CHECK(sigma_coefficient(f1, D({1, 1}), "L") == 0);
    CHECK(sigma_coefficient(f1, D({1, 2}), "E") == 2);
    CHECK_THROWS_AS(sigma_coefficient(f1, D({1, 1}), "nope"), Error);
  }

  TEST_CASE("base loci") {
    const auto f1 = bundled("f1");
    CHECK(bminus_divisorial_support(f1, D({1, 1})) == std::vector<std::string>{"E"});
    CHECK(bminus_divisorial_support(bundled("p2"), D({3})).empty());
    CHECK(bminus_divisorial_support(bundled("dp7"), D({1, 1, 1})) == std::vector<std::string>{"E1", "E2"});
    CHECK(bplus_support(f1, D({1, 1})) == std::vector<std::string>{"E"});
    CHECK(bplus_support(f1, D({2, -1})).empty());
    CHECK(bplus_support(f1, D({1, 0})) == std::vector<std::string>{"E"});
    CHECK(point_in_bminus(f1, D({1, 1}), f1.flag("cusp-tangent")));
    CHECK_FALSE(point_in_bplus(f1, D({2, -1}), f1.flag("on-E")));
    CHECK_FALSE(point_in_bminus(f1, D({1, 1}), f1.flag("on-L")));
    try {
      (void)bplus_support(f1, D({1, -1}));
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotBig);
    }
  }

  TEST_CASE("asymptotic multiplicity") {
    const auto f1 = bundled("f1");
    CHECK(asymptotic_multiplicity(f1, D({1, 1}), f1.flag("cusp-tangent")) == 1);
    CHECK(asymptotic_multiplicity(f1, D({1, 1}), f1.flag("on-E")) == 1);
    CHECK(asymptotic_multiplicity(bundled("p2"), D({2}), bundled("p2").flag("linear")) == 0);
  }

  TEST_CASE("non pseudoeffective input") {
    try {
      (void)zariski_decompose(bundled("f1"), D({1, -2}));
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotPseudoeffective);
    }
  }

  TEST_CASE("agrees with exhaustive subset search") {
    for (const char* stem : {"p2", "f1", "dp7", "dp6"}) {
      const auto m = bundled(stem);
      SplitMix64 rng(11);
      for (const auto& d : okbody::testing::random_pseudoeffective(m, rng, 60)) {
        CAPTURE(stem);
        CAPTURE(d);
        const auto oracle = okbody::testing::exhaustive_zariski(m, d);
        REQUIRE(oracle);
        CHECK(oracle->valid_subsets == 1);
        const auto z = zariski_decompose(m, d);
        CHECK(z.positive == oracle->positive);
        CHECK(z.negative == oracle->negative);
        CHECK(d == z.positive + z.negative_class(m));
      }
    }
  }

  TEST_CASE("germ slopes match finite differences") {
    const auto f1 = bundled("f1");
    const DivisorClass c = f1.curve("C").cls;
    const auto g = zariski_decompose_germ(f1, D({1, 1}), -c);
    const Rat s = R(1, 1000);
    const auto z = zariski_decompose(f1, D({1, 1}) - s * c);
    for (const auto& id : g.support) CHECK(z.coefficient(id) == g.value.at(id) + s * g.slope.at(id));
  }

  TEST_CASE("homogeneity") {
    const auto m = bundled("dp7");
    SplitMix64 rng(3);
    for (const auto& d : okbody::testing::random_pseudoeffective(m, rng, 30)) {
      for (const Rat& l : {R(1, 2), R(2), R(3)}) {
        const auto z = zariski_decompose(m, d);
        const auto zl = zariski_decompose(m, l * d);
        CHECK(zl.positive == l * z.positive);
        CHECK(volume(m, l * d) == l * l * volume(m, d));
      }
    }
  }
}
