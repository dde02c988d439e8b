#pragma once

#include <map>
#include <string>
#include <vector>

#include "okbody/picard_lattice.hpp"
#include "okbody/polygon.hpp"

namespace okbody {

struct AffinePiece {
  Rat intercept;
  Rat slope;

  Rat operator()(const Rat& t) const { return intercept + slope * t; }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Continuous piecewise-affine function on [breakpoints.front(), breakpoints.back()].
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;
  /// Throws Error{Domain} unless breakpoints increase strictly, there is one
  /// piece per interval, and adjacent pieces agree at shared breakpoints.
  /// Adjacent identical pieces are merged.
  PiecewiseLinear(std::vector<Rat> breakpoints, std::vector<AffinePiece> pieces);

  const std::vector<Rat>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<AffinePiece>& pieces() const noexcept { return pieces_; }
  const Rat& lower() const { return breakpoints_.front(); }
  const Rat& upper() const { return breakpoints_.back(); }

  /// Throws Error{Domain} outside the domain.
  Rat operator()(const Rat& t) const;

  bool is_convex() const;
  bool is_concave() const;

 private:
  std::vector<Rat> breakpoints_;
  std::vector<AffinePiece> pieces_;
};

using ValuationVector = Point2;

/// ν(E) for an effective catalog combination E: ν₁ = coefficient of the
/// host C, ν₂ = Σ_{Γ≠C} coeff_Γ·(Γ·C)_x. Throws Error{Domain} on negative
/// coefficients.
ValuationVector valuation_vector(const SurfaceModel& model, const Flag& flag,
                                 const std::map<std::string, Rat>& effective);

/// Δ_{(C,x)}(D) = {(t, y) : a <= t <= μ, α(t) <= y <= β(t)}.
struct Profiles {
  Rat start;  // a = σ_C(D)
  Rat end;    // μ(D; C)
  PiecewiseLinear lower;  // α(t) = ord_x(N_t|_C)
  PiecewiseLinear upper;  // β(t) = α(t) + P_t·C
};

/// Chamber walk through the variation of the Zariski decomposition of
/// D − tC for t in [a, μ]. Within a chamber the support of N_t is constant
/// and its coefficients are affine in t; the walk stops at the first t where
/// a coefficient reaches zero or a curve off the support starts meeting
/// P_t negatively, then recomputes the support on the right of that point.
///
/// Throws Error{NotBig}; propagates Error{CatalogInsufficient}.
Profiles profiles(const SurfaceModel& model, const DivisorClass& d, const Flag& flag);

/// The region between the profiles as a minimal CCW vertex list.
Polygon okounkov_polygon(const SurfaceModel& model, const DivisorClass& d, const Flag& flag);
Polygon okounkov_polygon(const Profiles& profiles);

}  // namespace okbody
