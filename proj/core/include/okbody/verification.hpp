#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "okbody/picard_lattice.hpp"
#include "okbody/positivity_criteria.hpp"

namespace okbody {

/// Knobs shared by the CLI `verify` command and the acceptance binary.
struct SuiteOptions {
  std::uint64_t seed = 20240601;
  int classes = 12;          // random big classes drawn per model
  int coefficient_bound = 4;  // coefficients drawn from [-bound, bound]
  int t_samples = 10;        // slice / σ-variation grid size
  std::vector<Rat> epsilons{make_rat(1, 4), make_rat(1, 2), Rat(1)};
  Rat simplex_size = make_rat(1, 2);
  int p_max = 8;
  int toric_m = 6;
  std::optional<Rat> t;                 // fixed slice position
  std::optional<DivisorClass> divisor;  // restrict to one class
  std::optional<std::string> flag;      // restrict to one flag
};

struct SuiteResult {
  std::string suite;
  std::vector<CriterionReport> reports;
  int skipped = 0;  // pairs outside the check's precondition
  bool agree() const;
};

const std::vector<std::string>& suite_names();

/// Sum of the nef generators. Integral and ample on every bundled model.
DivisorClass default_ample(const SurfaceModel& model);

/// Deterministic 64-bit generator; std distributions are avoided so the
/// sample is identical across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  long uniform(long lo, long hi);  // inclusive
  /// Rational in [lo, hi) with denominator at most `max_den`.
  Rat uniform_rat(const Rat& lo, const Rat& hi, long max_den);

 private:
  std::uint64_t state_;
};

/// `count` distinct big integral classes (fewer if the box runs dry),
/// always starting with the ample class `default_ample`.
std::vector<DivisorClass> sample_big_classes(const SurfaceModel& model, SplitMix64& rng, int count, int bound);

/// Runs one named suite over the sampled classes and the model's flags.
/// Throws Error{Validation} for an unknown suite name.
SuiteResult run_suite(const SurfaceModel& model, const std::string& suite, const SuiteOptions& options);

}  // namespace okbody
