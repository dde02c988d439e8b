#include "okbody/zariski.hpp"

#include <algorithm>

#include "okbody/cone_tests.hpp"
#include "okbody/error.hpp"

namespace okbody {
namespace {

// value + δ·slope, ordered lexicographically (δ infinitesimal, positive).
struct Germ {
  Rat value;
  Rat slope;

  int sign() const { return value != 0 ? sgn(value) : sgn(slope); }
};

Germ pair(const SurfaceModel& model, const DivisorClass& d0, const DivisorClass& d1, const DivisorClass& other) {
  return {intersect(model, d0, other), intersect(model, d1, other)};
}

struct GermResult {
  std::vector<std::size_t> support;  // indices into model.curves()
  std::vector<Germ> coefficients;    // parallel to support
  DivisorClass p0;
  DivisorClass p1;
};

GermResult decompose(const SurfaceModel& model, const DivisorClass& d0, const DivisorClass& d1) {
  for (const auto& n : model.nef_gens()) {
    if (pair(model, d0, d1, n).sign() < 0) {
      throw Error(ErrorKind::NotPseudoeffective, to_string(d0) + " is not pseudoeffective (pairs negatively with nef generator " +
                                                     to_string(n) + ")");
    }
  }
  const auto& curves = model.curves();
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (curves[i].is_negative) candidates.push_back(i);
  }

  GermResult r{{}, {}, d0, d1};
  while (true) {
    std::vector<std::size_t> added;
    for (std::size_t i : candidates) {
      if (std::find(r.support.begin(), r.support.end(), i) != r.support.end()) continue;
      if (pair(model, r.p0, r.p1, curves[i].cls).sign() < 0) added.push_back(i);
    }
    if (added.empty()) break;
    r.support.insert(r.support.end(), added.begin(), added.end());
    std::sort(r.support.begin(), r.support.end());

    const std::size_t k = r.support.size();
    RatMatrix g(k, RatVector(k));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) g[a][b] = intersect(model, curves[r.support[a]].cls, curves[r.support[b]].cls);
    if (!is_negative_definite(g)) {
      throw Error(ErrorKind::CatalogInsufficient, "support Gram matrix is not negative definite for " + to_string(d0));
    }
    const RatMatrix inv = *inverse(g);
    RatVector rhs0(k), rhs1(k);
    for (std::size_t a = 0; a < k; ++a) {
      rhs0[a] = intersect(model, d0, curves[r.support[a]].cls);
      rhs1[a] = intersect(model, d1, curves[r.support[a]].cls);
    }
    const RatVector x0 = multiply(inv, rhs0);
    const RatVector x1 = multiply(inv, rhs1);
    r.coefficients.clear();
    r.p0 = d0;
    r.p1 = d1;
    for (std::size_t a = 0; a < k; ++a) {
      r.coefficients.push_back({x0[a], x1[a]});
      r.p0 -= x0[a] * curves[r.support[a]].cls;
      r.p1 -= x1[a] * curves[r.support[a]].cls;
    }
  }
  for (std::size_t a = 0; a < r.support.size(); ++a) {
    if (r.coefficients[a].sign() <= 0) {
      throw Error(ErrorKind::CatalogInsufficient, "negative part of " + to_string(d0) + " is not effective on '" +
                                                      curves[r.support[a]].id + "'");
    }
  }
  for (const auto& e : model.eff_gens()) {
    if (pair(model, r.p0, r.p1, e).sign() < 0) {
      throw Error(ErrorKind::CatalogInsufficient,
                  "positive part " + to_string(r.p0) + " of " + to_string(d0) + " is not nef; the curve catalog lacks a negative curve");
    }
  }
  return r;
}

}  // namespace

Rat ZariskiDecomposition::coefficient(const std::string& curve_id) const {
  const auto it = negative.find(curve_id);
  return it == negative.end() ? Rat(0) : it->second;
}

DivisorClass ZariskiDecomposition::negative_class(const SurfaceModel& model) const {
  return combination_class(model, negative);
}

ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& d) {
  if (d.rank() != model.rank()) throw Error(ErrorKind::DimensionMismatch, "divisor length does not match rank");
  const GermResult g = decompose(model, d, DivisorClass::zero(model.rank()));
  ZariskiDecomposition z;
  z.positive = g.p0;
  for (std::size_t a = 0; a < g.support.size(); ++a) {
    const auto& id = model.curves()[g.support[a]].id;
    z.support.push_back(id);
    z.negative[id] = g.coefficients[a].value;
  }
  return z;
}

ZariskiGerm zariski_decompose_germ(const SurfaceModel& model, const DivisorClass& d, const DivisorClass& direction) {
  if (d.rank() != model.rank() || direction.rank() != model.rank()) {
    throw Error(ErrorKind::DimensionMismatch, "divisor length does not match rank");
  }
  const GermResult g = decompose(model, d, direction);
  ZariskiGerm z;
  z.positive_value = g.p0;
  z.positive_slope = g.p1;
  for (std::size_t a = 0; a < g.support.size(); ++a) {
    const auto& id = model.curves()[g.support[a]].id;
    z.support.push_back(id);
    z.value[id] = g.coefficients[a].value;
    z.slope[id] = g.coefficients[a].slope;
  }
  return z;
}

Rat volume(const SurfaceModel& model, const DivisorClass& d) {
  if (!is_pseudoeffective(model, d).holds) return Rat(0);
  const auto z = zariski_decompose(model, d);
  return intersect(model, z.positive, z.positive);
}

Rat sigma_coefficient(const SurfaceModel& model, const DivisorClass& d, const std::string& curve_id) {
  model.curve(curve_id);
  return zariski_decompose(model, d).coefficient(curve_id);
}

std::vector<std::string> bminus_divisorial_support(const SurfaceModel& model, const DivisorClass& d) {
  return zariski_decompose(model, d).support;
}

std::vector<std::string> bplus_support(const SurfaceModel& model, const DivisorClass& d) {
  if (!is_big(model, d)) throw Error(ErrorKind::NotBig, to_string(d) + " is not big");
  const auto z = zariski_decompose(model, d);
  std::vector<std::string> out;
  for (const auto& c : model.curves()) {
    if (z.negative.count(c.id) || intersect(model, z.positive, c.cls) == 0) out.push_back(c.id);
  }
  return out;
}

namespace {

bool meets(const SurfaceModel& model, const Flag& flag, const std::vector<std::string>& support) {
  for (const auto& id : support) {
    if (flag_incidence(model, flag, id)) return true;
  }
  return false;
}

}  // namespace

bool point_in_bminus(const SurfaceModel& model, const DivisorClass& d, const Flag& flag) {
  return meets(model, flag, bminus_divisorial_support(model, d));
}

bool point_in_bplus(const SurfaceModel& model, const DivisorClass& d, const Flag& flag) {
  return meets(model, flag, bplus_support(model, d));
}

Rat asymptotic_multiplicity(const SurfaceModel& model, const DivisorClass& d, const Flag& flag) {
  if (!is_big(model, d)) throw Error(ErrorKind::NotBig, to_string(d) + " is not big");
  const auto& host = model.curve(flag.curve);
  const Rat a = zariski_decompose(model, d).coefficient(host.id);
  const auto rest = zariski_decompose(model, d - a * host.cls);
  Rat b = 0;
  for (const auto& [id, coeff] : rest.negative) {
    if (id != host.id && flag.local_mult(id) > 0) b += coeff;
  }
  return a + b;
}

}  // namespace okbody
