#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "okbody/rational.hpp"

namespace okbody {

struct Point2 {
  Rat x;
  Rat y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend bool operator<(const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
};

std::string to_string(const Point2& p);

/// Cross product of (b − a) and (c − a); positive for a left turn.
Rat orientation(const Point2& a, const Point2& b, const Point2& c);

/// Closed convex polygon with exact vertices, stored counter-clockwise from
/// the lexicographically smallest vertex with no repeated or collinear
/// vertices. Degenerate shapes (empty, a point, a segment) are allowed and
/// carry 0, 1 or 2 vertices.
class Polygon {
 public:
  Polygon() = default;

  /// Convex hull of arbitrary points (monotone chain).
  static Polygon hull(std::vector<Point2> points);

  const std::vector<Point2>& vertices() const noexcept { return vertices_; }
  bool empty() const noexcept { return vertices_.empty(); }
  std::size_t size() const noexcept { return vertices_.size(); }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point2> vertices_;
};

std::string to_string(const Polygon& poly);

/// Boundary counts as inside.
bool polygon_contains(const Polygon& poly, const Point2& p);

/// B ⊆ A, decided on the vertices of B.
bool polygon_includes(const Polygon& a, const Polygon& b);

Polygon polygon_translate(const Polygon& poly, const Point2& offset);
Polygon polygon_scale(const Polygon& poly, const Rat& factor);

/// Shoelace area.
Rat polygon_area(const Polygon& poly);

/// {p ∈ poly : p.x >= t}. Throws Error{Domain} when t exceeds the
/// polygon's x-extent.
Polygon polygon_slice_right(const Polygon& poly, const Rat& t);

/// min of x + y over the polygon. Throws Error{Domain} on an empty polygon.
Rat polygon_min_sum(const Polygon& poly);

/// Intersection with the half-plane a·x + b·y <= c.
Polygon polygon_clip(const Polygon& poly, const Rat& a, const Rat& b, const Rat& c);

/// Intersection of two convex polygons.
Polygon polygon_intersect(const Polygon& a, const Polygon& b);

/// The standard simplex {x, y >= 0, x + y <= size}.
Polygon standard_simplex(const Rat& size);

}  // namespace okbody
