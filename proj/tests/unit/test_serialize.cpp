#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "okbody/serialize.hpp"
#include "oracles.hpp"

using namespace okbody;
using okbody::testing::bundled;
using okbody::testing::D;
using okbody::testing::poly;
using okbody::testing::R;

TEST_SUITE("serialize") {
  TEST_CASE("rationals are canonical strings") {
    CHECK(to_json(R(4, 6)) == "2/3");
    CHECK(to_json(R(-3)) == "-3");
  }

  TEST_CASE("polygon round trip") {
    const Polygon p = poly({{"0", "2"}, {"1/3", "10/3"}, {"0", "5"}});
    const auto j = to_json(p);
    CHECK(j.dump() == R"({"vertices":[["0","2"],["1/3","10/3"],["0","5"]]})");
    CHECK(polygon_from_json(j) == p);
    CHECK(polygon_csv(p) == "nu1,nu2\n0,2\n1/3,10/3\n0,5\n");
  }

  TEST_CASE("decomposition and verdict") {
    const auto f1 = bundled("f1");
    CHECK(to_json(zariski_decompose(f1, D({1, 1}))).dump() == R"({"positive":["1","0"],"negative":{"E":"1"}})");
    const auto v = to_json(classify(f1, D({1, -2})));
    CHECK(v["pseudoeffective"] == false);
    CHECK(v["witness"]["class"] == nlohmann::ordered_json::array({"1", "-1"}));
  }

  TEST_CASE("output is deterministic") {
    const auto f1 = bundled("f1");
    const auto a = to_json(simplex_criterion(f1, D({2, -1}), f1.flag("on-E"))).dump();
    const auto b = to_json(simplex_criterion(f1, D({2, -1}), f1.flag("on-E"))).dump();
    CHECK(a == b);
  }

  TEST_CASE("svg carries exact vertices and rounded coordinates") {
    const Polygon p = poly({{"0", "2"}, {"1/3", "10/3"}, {"0", "5"}});
    const std::string svg = polygon_svg(p, std::nullopt, "F1 <cusp> & tangent");
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<metadata>") != std::string::npos);
    CHECK(svg.find(R"(["1/3","10/3"])") != std::string::npos);
    CHECK(svg.find("&lt;cusp&gt; &amp; tangent") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);
    const std::string with_simplex = polygon_svg(poly({{"0", "0"}, {"2", "0"}, {"0", "2"}}), R(1), "t");
    CHECK(with_simplex.find("simplex") != std::string::npos);
  }
}
