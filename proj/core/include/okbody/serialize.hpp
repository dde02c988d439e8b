#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "okbody/cone_tests.hpp"
#include "okbody/okounkov_polygon.hpp"
#include "okbody/picard_lattice.hpp"
#include "okbody/positivity_criteria.hpp"
#include "okbody/zariski.hpp"

namespace okbody {

using ojson = nlohmann::ordered_json;

// All rationals are emitted as canonical "p/q" strings.
ojson to_json(const Rat& r);
ojson to_json(const Point2& p);
ojson to_json(const Polygon& poly);  // {"vertices": [["p/q","r/s"], ...]}
ojson to_json(const DivisorClass& d);
ojson to_json(const ZariskiDecomposition& z);
ojson to_json(const PiecewiseLinear& f);
ojson to_json(const Profiles& p);
ojson to_json(const PositivityVerdict& v);
ojson to_json(const CriterionReport& r);

/// Parses {"vertices": [...]} back into a polygon.
Polygon polygon_from_json(const ojson& j);

/// "nu1,nu2" header then one exact vertex per line.
std::string polygon_csv(const Polygon& poly);

/// Standalone SVG: axes, the polygon, and Δ_λ when λ > 0. Coordinates are
/// rounded to 6 places; the exact vertices are kept in <metadata>.
std::string polygon_svg(const Polygon& poly, const std::optional<Rat>& simplex, const std::string& title);

}  // namespace okbody
