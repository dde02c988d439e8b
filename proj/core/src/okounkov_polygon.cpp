#include "okbody/okounkov_polygon.hpp"

#include <algorithm>
#include <optional>

#include "okbody/cone_tests.hpp"
#include "okbody/error.hpp"
#include "okbody/zariski.hpp"

namespace okbody {

PiecewiseLinear::PiecewiseLinear(std::vector<Rat> breakpoints, std::vector<AffinePiece> pieces) {
  if (breakpoints.size() < 2 || pieces.size() + 1 != breakpoints.size()) {
    throw Error(ErrorKind::Domain, "piecewise linear function needs one piece per interval");
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i] >= breakpoints[i + 1]) throw Error(ErrorKind::Domain, "breakpoints must increase");
  }
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (pieces[i](breakpoints[i + 1]) != pieces[i + 1](breakpoints[i + 1])) {
      throw Error(ErrorKind::Domain, "piecewise linear function is discontinuous at " + to_string(breakpoints[i + 1]));
    }
  }
  breakpoints_.push_back(breakpoints.front());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!pieces_.empty() && pieces_.back() == pieces[i]) {
      breakpoints_.back() = breakpoints[i + 1];
      continue;
    }
    pieces_.push_back(pieces[i]);
    breakpoints_.push_back(breakpoints[i + 1]);
  }
}

Rat PiecewiseLinear::operator()(const Rat& t) const {
  if (breakpoints_.empty() || t < lower() || t > upper()) {
    throw Error(ErrorKind::Domain, "evaluation point " + to_string(t) + " outside domain");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (t <= breakpoints_[i + 1]) return pieces_[i](t);
  }
  return pieces_.back()(t);
}

bool PiecewiseLinear::is_convex() const {
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    if (pieces_[i].slope > pieces_[i + 1].slope) return false;
  }
  return true;
}

bool PiecewiseLinear::is_concave() const {
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    if (pieces_[i].slope < pieces_[i + 1].slope) return false;
  }
  return true;
}

ValuationVector valuation_vector(const SurfaceModel& model, const Flag& flag,
                                 const std::map<std::string, Rat>& effective) {
  ValuationVector v{Rat(0), Rat(0)};
  for (const auto& [id, coeff] : effective) {
    model.curve(id);
    if (coeff < 0) throw Error(ErrorKind::Domain, "valuation of a non-effective combination (curve '" + id + "')");
    if (id == flag.curve) v.x += coeff;
    else v.y += coeff * flag.local_mult(id);
  }
  return v;
}

Profiles profiles(const SurfaceModel& model, const DivisorClass& d, const Flag& flag) {
  if (!is_big(model, d)) throw Error(ErrorKind::NotBig, to_string(d) + " is not big");
  const CurveRecord& host = model.curve(flag.curve);
  const DivisorClass& c = host.cls;

  Profiles out;
  out.start = sigma_coefficient(model, d, host.id);
  out.end = mu_threshold(model, d, c);
  if (out.start >= out.end) {
    throw Error(ErrorKind::CatalogInsufficient, "empty t-range for " + to_string(d) + " along '" + host.id + "'");
  }

  std::vector<Rat> breakpoints{out.start};
  std::vector<AffinePiece> lower, upper;
  Rat t = out.start;
  while (t < out.end) {
    const DivisorClass dt = d - t * c;
    const ZariskiGerm germ = zariski_decompose_germ(model, dt, -c);
    if (germ.value.count(host.id)) {
      throw Error(ErrorKind::CatalogInsufficient, "flag curve '" + host.id + "' entered the negative part of " + to_string(dt));
    }
    Rat alpha0 = 0, alpha1 = 0;
    for (const auto& id : germ.support) {
      const int m = flag.local_mult(id);
      alpha0 += germ.value.at(id) * m;
      alpha1 += germ.slope.at(id) * m;
    }
    const Rat beta0 = alpha0 + intersect(model, germ.positive_value, c);
    const Rat beta1 = alpha1 + intersect(model, germ.positive_slope, c);

    Rat next = out.end;
    for (const auto& id : germ.support) {
      const Rat& s = germ.slope.at(id);
      if (s < 0) next = std::min<Rat>(next, t + germ.value.at(id) / -s);
    }
    for (const CurveRecord* g : model.negative_curves()) {
      if (germ.value.count(g->id)) continue;
      const Rat s = intersect(model, germ.positive_slope, g->cls);
      if (s < 0) next = std::min<Rat>(next, t + intersect(model, germ.positive_value, g->cls) / -s);
    }
    // local parameter s = t' − t
    lower.push_back({alpha0 - alpha1 * t, alpha1});
    upper.push_back({beta0 - beta1 * t, beta1});
    breakpoints.push_back(next);
    t = next;
  }
  out.lower = PiecewiseLinear(breakpoints, lower);
  out.upper = PiecewiseLinear(breakpoints, upper);
  return out;
}

Polygon okounkov_polygon(const Profiles& p) {
  std::vector<Point2> pts;
  for (const auto& t : p.lower.breakpoints()) pts.push_back({t, p.lower(t)});
  for (const auto& t : p.upper.breakpoints()) pts.push_back({t, p.upper(t)});
  return Polygon::hull(std::move(pts));
}

Polygon okounkov_polygon(const SurfaceModel& model, const DivisorClass& d, const Flag& flag) {
  return okounkov_polygon(profiles(model, d, flag));
}

}  // namespace okbody
