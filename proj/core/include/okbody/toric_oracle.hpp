#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "okbody/picard_lattice.hpp"
#include "okbody/polygon.hpp"

namespace okbody {

struct LatticePoint {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Smooth complete toric surface whose boundary divisors are identified
/// with classes (and optionally catalog curves) of a SurfaceModel.
class ToricModel {
 public:
  /// Builds from the model's toric section and checks the compatibility
  /// certificate: rays are primitive, counter-clockwise and pairwise
  /// unimodular; fan intersection numbers equal the Gram pairings of the
  /// mapped classes; the two character relations hold in the Picard group.
  /// Throws Error{Validation}, or Error{NotTorusInvariant} without toric data.
  static ToricModel from_model(const SurfaceModel& model);

  const std::vector<std::array<long long, 2>>& rays() const noexcept { return rays_; }
  const std::vector<DivisorClass>& classes() const noexcept { return classes_; }
  const std::vector<std::optional<std::string>>& curves() const noexcept { return curves_; }

  /// Integers a_ρ with Σ a_ρ D_ρ ≡ D. Throws Error{Domain} if D is not
  /// integral.
  std::vector<long long> invariant_form(const DivisorClass& d) const;

  /// D_i · D_j computed from the fan alone.
  long long fan_intersection(std::size_t i, std::size_t j) const;

  /// Index of the boundary divisor carrying catalog curve `curve_id`.
  std::optional<std::size_t> divisor_of(const std::string& curve_id) const;

 private:
  std::vector<std::array<long long, 2>> rays_;
  std::vector<DivisorClass> classes_;
  std::vector<std::optional<std::string>> curves_;
  std::vector<std::size_t> basis_;  // boundary divisors forming a Z-basis of Pic
  RatMatrix basis_inverse_;
};

/// Lattice points u with ⟨u, v_ρ⟩ >= −a_ρ where mD = Σ a_ρ D_ρ.
/// Throws Error{Domain} when mD is not integral.
std::vector<LatticePoint> section_polytope(const ToricModel& toric, const DivisorClass& d, int m);

/// Normalized valuation vectors of the monomial sections of mD.
struct SectionHull {
  int m = 1;
  std::vector<LatticePoint> points;  // valuation vectors before scaling by 1/m
  Polygon hull;                      // convex hull scaled by 1/m
  bool empty() const noexcept { return points.empty(); }
};

/// The flag must sit on a boundary curve, either at a torus-fixed point
/// (local multiplicity 1 against one adjacent boundary curve) or at a
/// general point of that curve. Throws Error{NotTorusInvariant} otherwise.
SectionHull valuation_hull(const ToricModel& toric, const SurfaceModel& model, const DivisorClass& d, const Flag& flag,
                           int m);

struct OracleComparison {
  bool contained = false;
  Rat area_gap;
  bool empty = false;
};

/// hull_m ⊆ Δ and area(Δ) − area(hull_m).
OracleComparison oracle_compare(const ToricModel& toric, const SurfaceModel& model, const DivisorClass& d,
                                const Flag& flag, int m);

}  // namespace okbody
