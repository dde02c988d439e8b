#pragma once

#include <initializer_list>
#include <ostream>
#include <string_view>
#include <utility>

#include "okbody/picard_lattice.hpp"
#include "okbody/polygon.hpp"
#include "okbody/rational.hpp"

namespace okbody {

inline std::ostream& operator<<(std::ostream& os, const Point2& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const Polygon& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const DivisorClass& d) { return os << to_string(d); }

namespace testing {

inline Rat R(std::string_view text) { return parse_rat(text); }
inline Rat R(long n, long d = 1) { return make_rat(n, d); }

inline Point2 P(const Rat& x, const Rat& y) { return {x, y}; }

inline Polygon poly(std::initializer_list<std::pair<const char*, const char*>> pts) {
  std::vector<Point2> v;
  for (const auto& [x, y] : pts) v.push_back({parse_rat(x), parse_rat(y)});
  return Polygon::hull(std::move(v));
}

inline DivisorClass D(std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.push_back(Rat(c));
  return DivisorClass(std::move(v));
}

}  // namespace testing
}  // namespace okbody
