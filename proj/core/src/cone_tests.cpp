#include "okbody/cone_tests.hpp"

#include "okbody/error.hpp"
#include "okbody/zariski.hpp"

namespace okbody {
namespace {

std::optional<std::string> matching_curve(const SurfaceModel& model, const DivisorClass& cls) {
  for (const auto& c : model.curves()) {
    if (c.cls == cls) return c.id;
  }
  return std::nullopt;
}

}  // namespace

ConeCheck is_pseudoeffective(const SurfaceModel& model, const DivisorClass& d) {
  for (const auto& n : model.nef_gens()) {
    if (intersect(model, d, n) < 0) return {false, n, matching_curve(model, n)};
  }
  return {};
}

ConeCheck is_nef(const SurfaceModel& model, const DivisorClass& d) {
  for (const auto& e : model.eff_gens()) {
    if (intersect(model, d, e) < 0) return {false, e, matching_curve(model, e)};
  }
  return {};
}

bool is_big(const SurfaceModel& model, const DivisorClass& d) {
  if (!is_pseudoeffective(model, d).holds) return false;
  return volume(model, d) > 0;
}

bool is_ample(const SurfaceModel& model, const DivisorClass& d) {
  if (intersect(model, d, d) <= 0) return false;
  for (const auto& e : model.eff_gens()) {
    if (intersect(model, d, e) <= 0) return false;
  }
  return true;
}

PositivityVerdict classify(const SurfaceModel& model, const DivisorClass& d) {
  PositivityVerdict v;
  const ConeCheck psef = is_pseudoeffective(model, d);
  v.pseudoeffective = psef.holds;
  if (!psef.holds) {
    v.witness = psef.witness;
    v.witness_curve = psef.witness_curve;
    return v;
  }
  const ConeCheck nef = is_nef(model, d);
  v.nef = nef.holds;
  if (!nef.holds) {
    v.witness = nef.witness;
    v.witness_curve = nef.witness_curve;
  }
  v.big = volume(model, d) > 0;
  v.ample = is_ample(model, d);
  return v;
}

Rat mu_threshold(const SurfaceModel& model, const DivisorClass& d, const DivisorClass& curve) {
  std::optional<Rat> best;
  for (const auto& n : model.nef_gens()) {
    const Rat cn = intersect(model, curve, n);
    if (cn <= 0) continue;
    const Rat ratio = intersect(model, d, n) / cn;
    if (!best || ratio < *best) best = ratio;
  }
  if (!best) {
    throw Error(ErrorKind::Validation, "threshold unbounded: no nef generator pairs positively with " + to_string(curve));
  }
  return *best;
}

}  // namespace okbody
