#pragma once

#include <map>
#include <string>
#include <vector>

#include "okbody/picard_lattice.hpp"

namespace okbody {

/// D = P + N with P nef, N = Σ coeff·Γ effective over catalog curves whose
/// Gram matrix is negative definite and P·Γ = 0 on the support. On surfaces
/// this is also Nakayama's σ-decomposition: coeff_Γ = σ_Γ(D).
struct ZariskiDecomposition {
  DivisorClass positive;
  std::map<std::string, Rat> negative;
  std::vector<std::string> support;  // catalog order

  Rat coefficient(const std::string& curve_id) const;
  DivisorClass negative_class(const SurfaceModel& model) const;
};

/// Iterated negative-definite Gram solves: start from the curves meeting D
/// negatively, solve for the orthogonality conditions, enlarge by every
/// curve meeting D − N negatively, repeat to the fixed point.
///
/// Throws Error{NotPseudoeffective}, or Error{CatalogInsufficient} when the
/// fixed point does not yield a nef positive part.
ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& d);

/// Decomposition of D + δ·direction for infinitesimal δ > 0. Coefficients
/// and positive part are affine in δ on a whole right neighbourhood of 0,
/// so `value` + s·`slope` is exact for all s in [0, s₀) for some s₀ > 0.
struct ZariskiGerm {
  std::vector<std::string> support;
  std::map<std::string, Rat> value;
  std::map<std::string, Rat> slope;
  DivisorClass positive_value;
  DivisorClass positive_slope;
};

ZariskiGerm zariski_decompose_germ(const SurfaceModel& model, const DivisorClass& d, const DivisorClass& direction);

/// P·P; zero for classes that are not pseudoeffective.
Rat volume(const SurfaceModel& model, const DivisorClass& d);

/// σ_Γ(D), the coefficient of Γ in N. Throws Error{UnknownId}.
Rat sigma_coefficient(const SurfaceModel& model, const DivisorClass& d, const std::string& curve_id);

/// Supp N(D), the divisorial part of B₋(D).
std::vector<std::string> bminus_divisorial_support(const SurfaceModel& model, const DivisorClass& d);

/// Supp N ∪ {Γ : P·Γ = 0}. Requires D big (Error{NotBig}).
std::vector<std::string> bplus_support(const SurfaceModel& model, const DivisorClass& d);

bool point_in_bminus(const SurfaceModel& model, const DivisorClass& d, const Flag& flag);
bool point_in_bplus(const SurfaceModel& model, const DivisorClass& d, const Flag& flag);

/// mult_x‖D‖ = a + b′ with a = σ_C(D) and b′ the total coefficient in
/// N(D − aC) of the catalog curves through x other than C.
Rat asymptotic_multiplicity(const SurfaceModel& model, const DivisorClass& d, const Flag& flag);

}  // namespace okbody
