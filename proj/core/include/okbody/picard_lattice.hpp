#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "okbody/linalg.hpp"
#include "okbody/rational.hpp"

namespace okbody {

/// A class in N^1(X)_Q, written in the model's Picard-lattice basis.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) {}
  DivisorClass(std::initializer_list<Rat> coefficients) : coeffs_(coefficients) {}

  static DivisorClass zero(std::size_t rank) { return DivisorClass(std::vector<Rat>(rank, Rat(0))); }

  std::size_t rank() const noexcept { return coeffs_.size(); }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
  Rat& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const Rat> coefficients() const noexcept { return coeffs_; }

  bool is_integral() const;
  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rat& scalar);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rat& s, DivisorClass a) { return a *= s; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rat(-1); }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  std::vector<Rat> coeffs_;
};

/// "(1, -2)"-style rendering with canonical rationals.
std::string to_string(const DivisorClass& d);

/// Parses a comma separated list of rationals, e.g. "1,-2" or "1/2, 3".
DivisorClass parse_divisor(std::string_view csv);

struct CurveRecord {
  std::string id;
  DivisorClass cls;
  bool is_negative = false;
};

/// An admissible flag (C, x). The point x exists only through its local
/// intersection multiplicities (Γ·C)_x with the other catalog curves.
struct Flag {
  std::string id;
  std::string curve;
  std::map<std::string, int> local_mults;
  bool very_general = false;

  int local_mult(const std::string& curve_id) const {
    const auto it = local_mults.find(curve_id);
    return it == local_mults.end() ? 0 : it->second;
  }
};

/// Torus-invariant boundary divisor data carried by toric model files.
struct ToricFanData {
  struct Divisor {
    DivisorClass cls;
    std::optional<std::string> curve;
  };
  std::vector<std::array<long, 2>> rays;
  std::vector<Divisor> divisors;
};

/// A validated polyhedral model of a smooth projective surface. Immutable
/// once built; construct through load_model or SurfaceModel::create.
class SurfaceModel {
 public:
  struct Data {
    std::string name;
    std::vector<std::string> basis;
    RatMatrix gram;
    std::vector<CurveRecord> curves;
    std::vector<DivisorClass> nef_gens;
    std::vector<DivisorClass> eff_gens;
    std::vector<Flag> flags;
    std::optional<ToricFanData> toric;
  };

  /// Validates every model invariant; throws Error{Validation} naming the
  /// first violated one. `is_negative` of each curve is recomputed.
  static SurfaceModel create(Data data);

  std::size_t rank() const noexcept { return data_.gram.size(); }
  const std::string& name() const noexcept { return data_.name; }
  const std::vector<std::string>& basis() const noexcept { return data_.basis; }
  const RatMatrix& gram() const noexcept { return data_.gram; }
  const std::vector<CurveRecord>& curves() const noexcept { return data_.curves; }
  const std::vector<DivisorClass>& nef_gens() const noexcept { return data_.nef_gens; }
  const std::vector<DivisorClass>& eff_gens() const noexcept { return data_.eff_gens; }
  const std::vector<Flag>& flags() const noexcept { return data_.flags; }
  const std::optional<ToricFanData>& toric() const noexcept { return data_.toric; }
  const Data& data() const noexcept { return data_; }

  /// Throws Error{UnknownId}.
  const CurveRecord& curve(std::string_view id) const;
  const Flag& flag(std::string_view id) const;
  bool has_curve(std::string_view id) const noexcept;
  std::size_t curve_index(std::string_view id) const;

  /// Catalog curves with negative self-intersection, in catalog order.
  std::vector<const CurveRecord*> negative_curves() const;

  /// Re-runs all invariant checks.
  void validate() const;

 private:
  explicit SurfaceModel(Data data) : data_(std::move(data)) {}
  Data data_;
};

/// Parses a model document (JSON). Family documents carrying "instances"
/// select `instance`, or the document's "default" when empty.
SurfaceModel load_model(std::string_view document, std::string_view instance = {});
SurfaceModel load_model_file(const std::filesystem::path& path, std::string_view instance = {});

/// aᵀ · gram · b. Throws Error{DimensionMismatch}.
Rat intersect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b);

/// x ∈ Γ for the flag's point x: Γ is the host curve or meets C at x.
bool flag_incidence(const SurfaceModel& model, const Flag& flag, std::string_view curve_id);

/// Σ coeff_Γ · [Γ] over catalog curves.
DivisorClass combination_class(const SurfaceModel& model, const std::map<std::string, Rat>& coefficients);

}  // namespace okbody
