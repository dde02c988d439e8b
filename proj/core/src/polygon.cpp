#include "okbody/polygon.hpp"

#include <algorithm>

#include "okbody/error.hpp"

namespace okbody {

std::string to_string(const Point2& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

Rat orientation(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Polygon Polygon::hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Polygon out;
  if (points.size() <= 2) {
    out.vertices_ = std::move(points);
    return out;
  }
  std::vector<Point2> h(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && orientation(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation(h[k - 2], h[k - 1], points[i]) <= 0) --k;
    h[k++] = points[i];
  }
  h.resize(k - 1);
  // all points collinear: keep the two extremes
  if (h.size() == 2 && h[0] == h[1]) h.pop_back();
  out.vertices_ = std::move(h);
  return out;
}

std::string to_string(const Polygon& poly) {
  std::string out = "{";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) out += ", ";
    out += to_string(poly.vertices()[i]);
  }
  return out + "}";
}

bool polygon_contains(const Polygon& poly, const Point2& p) {
  const auto& v = poly.vertices();
  switch (v.size()) {
    case 0: return false;
    case 1: return v[0] == p;
    case 2:
      return orientation(v[0], v[1], p) == 0 && std::min(v[0].x, v[1].x) <= p.x && p.x <= std::max(v[0].x, v[1].x) &&
             std::min(v[0].y, v[1].y) <= p.y && p.y <= std::max(v[0].y, v[1].y);
    default:
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (orientation(v[i], v[(i + 1) % v.size()], p) < 0) return false;
      }
      return true;
  }
}

bool polygon_includes(const Polygon& a, const Polygon& b) {
  return std::all_of(b.vertices().begin(), b.vertices().end(), [&](const Point2& p) { return polygon_contains(a, p); });
}

Polygon polygon_translate(const Polygon& poly, const Point2& offset) {
  std::vector<Point2> pts;
  for (const auto& p : poly.vertices()) pts.push_back(p + offset);
  return Polygon::hull(std::move(pts));
}

Polygon polygon_scale(const Polygon& poly, const Rat& factor) {
  std::vector<Point2> pts;
  for (const auto& p : poly.vertices()) pts.push_back({p.x * factor, p.y * factor});
  return Polygon::hull(std::move(pts));
}

Rat polygon_area(const Polygon& poly) {
  const auto& v = poly.vertices();
  Rat twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2;
}

Polygon polygon_clip(const Polygon& poly, const Rat& a, const Rat& b, const Rat& c) {
  const auto& v = poly.vertices();
  auto value = [&](const Point2& p) -> Rat { return a * p.x + b * p.y - c; };
  std::vector<Point2> out;
  if (v.size() == 1) {
    if (value(v[0]) <= 0) out.push_back(v[0]);
    return Polygon::hull(std::move(out));
  }
  // Sutherland–Hodgman against one half-plane; a segment is a 2-cycle.
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % v.size()];
    const Rat fp = value(p);
    const Rat fq = value(q);
    if (fp <= 0) out.push_back(p);
    if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
      const Rat s = fp / (fp - fq);
      out.push_back({p.x + s * (q.x - p.x), p.y + s * (q.y - p.y)});
    }
  }
  return Polygon::hull(std::move(out));
}

Polygon polygon_slice_right(const Polygon& poly, const Rat& t) {
  if (poly.empty()) throw Error(ErrorKind::Domain, "slice of an empty polygon");
  const auto [lo, hi] = std::minmax_element(poly.vertices().begin(), poly.vertices().end(),
                                            [](const Point2& a, const Point2& b) { return a.x < b.x; });
  if (t > hi->x) {
    throw Error(ErrorKind::Domain, "slice position " + to_string(t) + " beyond " + to_string(hi->x));
  }
  if (t <= lo->x) return poly;
  return polygon_clip(poly, Rat(-1), Rat(0), -t);
}

Rat polygon_min_sum(const Polygon& poly) {
  if (poly.empty()) throw Error(ErrorKind::Domain, "min_sum of an empty polygon");
  Rat best = poly.vertices().front().x + poly.vertices().front().y;
  for (const auto& p : poly.vertices()) best = std::min<Rat>(best, p.x + p.y);
  return best;
}

Polygon polygon_intersect(const Polygon& a, const Polygon& b) {
  const auto& v = b.vertices();
  if (a.empty() || b.empty()) return {};
  if (v.size() == 1) return polygon_contains(a, v[0]) ? b : Polygon{};
  if (v.size() == 2) {
    // clip a to the line through the segment, then to the segment's extent
    const Point2 d = v[1] - v[0];
    Polygon r = polygon_clip(a, -d.y, d.x, -d.y * v[0].x + d.x * v[0].y);
    r = polygon_clip(r, d.y, -d.x, d.y * v[0].x - d.x * v[0].y);
    r = polygon_clip(r, d.x, d.y, d.x * v[1].x + d.y * v[1].y);
    return polygon_clip(r, -d.x, -d.y, -(d.x * v[0].x + d.y * v[0].y));
  }
  Polygon r = a;
  for (std::size_t i = 0; i < v.size() && !r.empty(); ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % v.size()];
    // interior of b lies to the left of p->q: cross(q − p, x − p) >= 0
    const Rat ca = q.y - p.y;
    const Rat cb = -(q.x - p.x);
    r = polygon_clip(r, ca, cb, ca * p.x + cb * p.y);
  }
  return r;
}

Polygon standard_simplex(const Rat& size) {
  return Polygon::hull({{Rat(0), Rat(0)}, {size, Rat(0)}, {Rat(0), size}});
}

}  // namespace okbody
