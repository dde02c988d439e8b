#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "okbody/okounkov_polygon.hpp"
#include "okbody/picard_lattice.hpp"

namespace okbody {

/// Both sides of one positivity statement, plus the data that certifies
/// each side. `agree` is true exactly when the two verdicts coincide.
struct CriterionReport {
  std::string criterion;
  std::string subject;
  bool left = false;
  bool right = false;
  bool agree = false;
  nlohmann::ordered_json certificates = nlohmann::ordered_json::object();
};

/// sup{λ : Δ_λ ⊆ Δ}. `tight_edge` holds the vertices of the polygon edge
/// whose half-plane attains the bound (absent when λ = 0 because the origin
/// is missing or the polygon is degenerate).
struct SimplexConstant {
  Rat lambda;
  std::optional<std::pair<Point2, Point2>> tight_edge;
};

SimplexConstant largest_simplex_constant(const Polygon& poly);
SimplexConstant largest_simplex_constant(const SurfaceModel& model, const DivisorClass& d, const Flag& flag);

/// 0 ∈ Δ_{(C,x)}(D) against x ∉ B₋(D).
CriterionReport origin_criterion(const SurfaceModel& model, const DivisorClass& d, const Flag& flag);

/// λ > 0 against x ∉ B₊(D).
CriterionReport simplex_criterion(const SurfaceModel& model, const DivisorClass& d, const Flag& flag);

/// Origin membership over the model's whole flag suite against is_nef.
CriterionReport nef_report(const SurfaceModel& model, const DivisorClass& d);

/// Inscribed simplices over the model's whole flag suite against is_ample.
CriterionReport ample_report(const SurfaceModel& model, const DivisorClass& d);

/// Quadrant inclusion at (σ_C(D), 0), membership of that point for very
/// general flags, and Δ(D) = ν(N) + Δ(P).
CriterionReport theoremC_report(const SurfaceModel& model, const DivisorClass& d, const Flag& flag);

/// Δ(D) ⊆ Δ(D + εA) for every ε (ε >= 0), monotone along sorted ε.
CriterionReport nested_check(const SurfaceModel& model, const DivisorClass& d, const DivisorClass& ample,
                             const std::vector<Rat>& epsilons, const Flag& flag);

/// Δ(D)_{ν₁>=t} = Δ(D − tC) + t·e₁ for 0 <= t < μ. Throws Error{Domain}
/// for t outside that range.
CriterionReport slice_check(const SurfaceModel& model, const DivisorClass& d, const Flag& flag, const Rat& t);

/// mult_x‖D‖ <= min σ_D, min σ_D = a + α(a), and Δ ⊆ (a, α(a)) + ℝ²₊.
CriterionReport multiplicity_bound_check(const SurfaceModel& model, const DivisorClass& d, const Flag& flag);

/// For p = 1..p_max with pD − A big: whether Δ_ε meets Δ(pD − A), and
/// mult_x‖pD − A‖. The stabilizing p_ε is reported as observed, never
/// extrapolated. Throws Error{Domain} when no level is big.
CriterionReport augmented_sequence_check(const SurfaceModel& model, const DivisorClass& d, const DivisorClass& ample,
                                         const Flag& flag, const Rat& epsilon, int p_max);

/// σ_E(D) = 0: σ_E(D − tE) = 0 and N(D − tE) increasing along the grid.
/// σ_E(D) > 0: N(D − tE) = N(D) − tE for grid points in [0, σ_E(D)].
/// Throws Error{Domain} for a grid point where D − tE is not pseudoeffective.
CriterionReport sigma_variation_check(const SurfaceModel& model, const DivisorClass& d, const std::string& curve_id,
                                      const std::vector<Rat>& t_grid);

}  // namespace okbody
