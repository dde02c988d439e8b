#include "okbody/positivity_criteria.hpp"

#include <algorithm>
#include <set>

#include "okbody/cone_tests.hpp"
#include "okbody/error.hpp"
#include "okbody/serialize.hpp"
#include "okbody/zariski.hpp"

namespace okbody {
namespace {

std::string subject(const DivisorClass& d, const Flag& flag) { return "D=" + to_string(d) + " flag=" + flag.id; }

CriterionReport make(std::string name, std::string subj, bool left, bool right) {
  CriterionReport r;
  r.criterion = std::move(name);
  r.subject = std::move(subj);
  r.left = left;
  r.right = right;
  r.agree = left == right;
  return r;
}

ojson names(const std::vector<std::string>& ids) {
  ojson out = ojson::array();
  for (const auto& id : ids) out.push_back(id);
  return out;
}

ojson coefficients(const std::map<std::string, Rat>& m) {
  ojson out = ojson::object();
  for (const auto& [id, c] : m) out[id] = to_string(c);
  return out;
}

void require_big(const SurfaceModel& model, const DivisorClass& d) {
  if (!is_big(model, d)) throw Error(ErrorKind::NotBig, to_string(d) + " is not big");
}

}  // namespace

SimplexConstant largest_simplex_constant(const Polygon& poly) {
  const Point2 origin{Rat(0), Rat(0)};
  const auto& v = poly.vertices();
  if (v.size() < 3 || !polygon_contains(poly, origin)) return {Rat(0), std::nullopt};
  std::optional<Rat> best;
  std::optional<std::pair<Point2, Point2>> tight;
  auto consider = [&](const Rat& bound, const Point2& p, const Point2& q) {
    if (!best || bound < *best) {
      best = bound;
      tight = std::make_pair(p, q);
    }
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % v.size()];
    // inside ⟺ cross(q − p, z − p) >= 0; at z = 0 this is c0 >= 0
    const Rat c0 = orientation(p, q, origin);
    const Rat dy = q.y - p.y;
    const Rat dx = q.x - p.x;
    if (dy > 0) consider(c0 / dy, p, q);   // vertex (λ, 0)
    if (dx < 0) consider(c0 / -dx, p, q);  // vertex (0, λ)
  }
  if (!best || *best == 0) return {Rat(0), std::nullopt};
  return {*best, tight};
}

SimplexConstant largest_simplex_constant(const SurfaceModel& model, const DivisorClass& d, const Flag& flag) {
  return largest_simplex_constant(okounkov_polygon(model, d, flag));
}

CriterionReport origin_criterion(const SurfaceModel& model, const DivisorClass& d, const Flag& flag) {
  const Polygon poly = okounkov_polygon(model, d, flag);
  const bool left = polygon_contains(poly, {Rat(0), Rat(0)});
  const auto support = bminus_divisorial_support(model, d);
  const bool right = !point_in_bminus(model, d, flag);
  auto r = make("origin_criterion", subject(d, flag), left, right);
  r.certificates["polygon"] = to_json(poly);
  r.certificates["bminus_support"] = names(support);
  return r;
}

CriterionReport simplex_criterion(const SurfaceModel& model, const DivisorClass& d, const Flag& flag) {
  const Polygon poly = okounkov_polygon(model, d, flag);
  const SimplexConstant lambda = largest_simplex_constant(poly);
  const auto support = bplus_support(model, d);
  const bool right = !point_in_bplus(model, d, flag);
  auto r = make("simplex_criterion", subject(d, flag), lambda.lambda > 0, right);
  r.certificates["polygon"] = to_json(poly);
  r.certificates["lambda"] = to_string(lambda.lambda);
  if (lambda.tight_edge) {
    r.certificates["tight_edge"] = ojson::array({to_json(lambda.tight_edge->first), to_json(lambda.tight_edge->second)});
  }
  r.certificates["bplus_support"] = names(support);
  r.certificates["host_ample"] = is_ample(model, model.curve(flag.curve).cls);
  return r;
}

namespace {

ojson coverage(const SurfaceModel& model) {
  std::set<std::string> hosts, general;
  for (const auto& f : model.flags()) {
    hosts.insert(f.curve);
    if (f.very_general) general.insert(f.curve);
  }
  ojson missing = ojson::array();
  for (const auto& c : model.curves()) {
    if (!hosts.count(c.id) || !general.count(c.id)) missing.push_back(c.id);
  }
  ojson out = ojson::object();
  out["complete"] = missing.empty();
  if (!missing.empty()) {
    out["warning"] = "flag suite does not cover catalog";
    out["missing"] = missing;
  }
  return out;
}

}  // namespace

CriterionReport nef_report(const SurfaceModel& model, const DivisorClass& d) {
  require_big(model, d);
  bool all = true;
  ojson per_flag = ojson::object();
  for (const auto& f : model.flags()) {
    const bool has_origin = polygon_contains(okounkov_polygon(model, d, f), {Rat(0), Rat(0)});
    per_flag[f.id] = has_origin;
    all = all && has_origin;
  }
  auto r = make("nef_report", "D=" + to_string(d), all, is_nef(model, d).holds);
  r.certificates["origin_in_polygon"] = per_flag;
  r.certificates["coverage"] = coverage(model);
  return r;
}

CriterionReport ample_report(const SurfaceModel& model, const DivisorClass& d) {
  require_big(model, d);
  bool all = true;
  ojson per_flag = ojson::object();
  for (const auto& f : model.flags()) {
    const Rat lambda = largest_simplex_constant(model, d, f).lambda;
    per_flag[f.id] = to_string(lambda);
    all = all && lambda > 0;
  }
  auto r = make("ample_report", "D=" + to_string(d), all, is_ample(model, d));
  r.certificates["lambda"] = per_flag;
  r.certificates["coverage"] = coverage(model);
  return r;
}

CriterionReport theoremC_report(const SurfaceModel& model, const DivisorClass& d, const Flag& flag) {
  require_big(model, d);
  const Polygon delta = okounkov_polygon(model, d, flag);
  const ZariskiDecomposition z = zariski_decompose(model, d);
  const Rat sigma = z.coefficient(flag.curve);

  const bool quadrant = std::all_of(delta.vertices().begin(), delta.vertices().end(),
                                    [&](const Point2& p) { return p.x >= sigma && p.y >= 0; });
  const bool general_point = !flag.very_general || polygon_contains(delta, {sigma, Rat(0)});

  const ValuationVector nu = valuation_vector(model, flag, z.negative);
  const Polygon positive = okounkov_polygon(model, z.positive, flag);
  const Polygon translated = polygon_translate(positive, nu);
  bool off_support = true;
  for (const auto& id : z.support) off_support = off_support && !flag_incidence(model, flag, id);
  const bool translation = delta == translated && (!off_support || delta == positive);

  auto r = make("theoremC", subject(d, flag), quadrant && general_point && translation, true);
  r.certificates["sigma"] = to_string(sigma);
  r.certificates["quadrant_inclusion"] = quadrant;
  r.certificates["very_general"] = flag.very_general;
  r.certificates["general_point_membership"] = general_point;
  r.certificates["translation_identity"] = translation;
  r.certificates["nu_negative_part"] = to_json(nu);
  r.certificates["polygon"] = to_json(delta);
  r.certificates["positive_part_polygon"] = to_json(positive);
  return r;
}

CriterionReport nested_check(const SurfaceModel& model, const DivisorClass& d, const DivisorClass& ample,
                             const std::vector<Rat>& epsilons, const Flag& flag) {
  require_big(model, d);
  if (!is_ample(model, ample)) throw Error(ErrorKind::Domain, to_string(ample) + " is not ample");
  std::vector<Rat> eps = epsilons;
  std::sort(eps.begin(), eps.end());
  if (!eps.empty() && eps.front() < 0) throw Error(ErrorKind::Domain, "nesting parameters must be non-negative");

  const Polygon base = okounkov_polygon(model, d, flag);
  bool ok = true;
  Polygon previous = base;
  ojson chain = ojson::array();
  for (const auto& e : eps) {
    const Polygon p = okounkov_polygon(model, d + e * ample, flag);
    const bool contains_base = polygon_includes(p, base);
    const bool monotone = polygon_includes(p, previous);
    const bool zero_equal = e != 0 || p == base;
    ok = ok && contains_base && monotone && zero_equal;
    ojson step = ojson::object();
    step["epsilon"] = to_string(e);
    step["polygon"] = to_json(p);
    step["contains_base"] = contains_base;
    step["contains_previous"] = monotone;
    chain.push_back(step);
    previous = p;
  }
  auto r = make("nested", subject(d, flag), ok, true);
  r.certificates["ample"] = to_json(ample);
  r.certificates["base"] = to_json(base);
  r.certificates["chain"] = chain;
  return r;
}

CriterionReport slice_check(const SurfaceModel& model, const DivisorClass& d, const Flag& flag, const Rat& t) {
  require_big(model, d);
  const DivisorClass& c = model.curve(flag.curve).cls;
  const Rat mu = mu_threshold(model, d, c);
  if (t < 0 || t >= mu) {
    throw Error(ErrorKind::Domain, "slice position " + to_string(t) + " outside [0, " + to_string(mu) + ")");
  }
  const Polygon lhs = polygon_slice_right(okounkov_polygon(model, d, flag), t);
  const Polygon rhs = polygon_translate(okounkov_polygon(model, d - t * c, flag), {t, Rat(0)});
  auto r = make("slice", subject(d, flag) + " t=" + to_string(t), lhs == rhs, true);
  r.certificates["sliced"] = to_json(lhs);
  r.certificates["shifted"] = to_json(rhs);
  return r;
}

CriterionReport multiplicity_bound_check(const SurfaceModel& model, const DivisorClass& d, const Flag& flag) {
  const Profiles prof = profiles(model, d, flag);
  const Polygon poly = okounkov_polygon(prof);
  const Rat mult = asymptotic_multiplicity(model, d, flag);
  const Rat min_sum = polygon_min_sum(poly);
  const Rat a = prof.start;
  const Rat b = prof.lower(a);
  const bool bound = mult <= min_sum;
  const bool starting = min_sum == a + b;
  const bool corner = polygon_contains(poly, {a, b}) &&
                      std::all_of(poly.vertices().begin(), poly.vertices().end(),
                                  [&](const Point2& p) { return p.x >= a && p.y >= b; });
  auto r = make("multiplicity", subject(d, flag), bound && starting && corner, true);
  r.certificates["asymptotic_multiplicity"] = to_string(mult);
  r.certificates["min_sum"] = to_string(min_sum);
  r.certificates["a"] = to_string(a);
  r.certificates["b"] = to_string(b);
  r.certificates["strict"] = mult < min_sum;
  r.certificates["corner_in_polygon"] = corner;
  return r;
}

CriterionReport augmented_sequence_check(const SurfaceModel& model, const DivisorClass& d, const DivisorClass& ample,
                                         const Flag& flag, const Rat& epsilon, int p_max) {
  require_big(model, d);
  if (!is_ample(model, ample)) throw Error(ErrorKind::Domain, to_string(ample) + " is not ample");
  if (epsilon <= 0) throw Error(ErrorKind::Domain, "simplex size must be positive");
  const Polygon simplex = standard_simplex(epsilon);
  ojson levels = ojson::array();
  std::optional<int> stable_from;
  std::optional<Rat> last_mult;
  bool last_nonempty = false;
  for (int p = 1; p <= p_max; ++p) {
    const DivisorClass level = Rat(p) * d - ample;
    ojson entry = ojson::object();
    entry["p"] = p;
    if (!is_big(model, level)) {
      entry["big"] = false;
      levels.push_back(entry);
      continue;
    }
    const Polygon poly = okounkov_polygon(model, level, flag);
    const bool meets = !polygon_intersect(simplex, poly).empty();
    const Rat mult = asymptotic_multiplicity(model, level, flag);
    entry["big"] = true;
    entry["intersects"] = meets;
    entry["multiplicity"] = to_string(mult);
    levels.push_back(entry);
    if (meets && !stable_from) stable_from = p;
    if (!meets) stable_from.reset();
    last_mult = mult;
    last_nonempty = meets;
  }
  if (!last_mult) throw Error(ErrorKind::Domain, "no p <= " + std::to_string(p_max) + " makes pD - A big");

  const bool outside_bplus = !point_in_bplus(model, d, flag);
  const bool mult_vanishes = *last_mult == 0;
  // The intersection property is necessary for x ∉ B₊ at every ε; a single
  // ε cannot refute it, so only that direction is asserted.
  const bool intersection_consistent = !outside_bplus || last_nonempty;
  auto r = make("augmented", subject(d, flag), mult_vanishes && intersection_consistent, outside_bplus);
  r.agree = mult_vanishes == outside_bplus && intersection_consistent;
  r.certificates["ample"] = to_json(ample);
  r.certificates["epsilon"] = to_string(epsilon);
  r.certificates["intersections_stable"] = last_nonempty;
  if (stable_from && last_nonempty) r.certificates["p_epsilon"] = *stable_from;
  r.certificates["levels"] = levels;
  return r;
}

CriterionReport sigma_variation_check(const SurfaceModel& model, const DivisorClass& d, const std::string& curve_id,
                                      const std::vector<Rat>& t_grid) {
  require_big(model, d);
  const CurveRecord& e = model.curve(curve_id);
  if (!e.is_negative) throw Error(ErrorKind::Domain, "curve '" + curve_id + "' is not a negative curve");
  std::vector<Rat> grid = t_grid;
  std::sort(grid.begin(), grid.end());
  const ZariskiDecomposition base = zariski_decompose(model, d);
  const Rat sigma = base.coefficient(curve_id);

  bool ok = true;
  ojson steps = ojson::array();
  std::optional<ZariskiDecomposition> previous;
  for (const auto& t : grid) {
    if (t < 0) throw Error(ErrorKind::Domain, "grid point " + to_string(t) + " is negative");
    const DivisorClass dt = d - t * e.cls;
    if (!is_pseudoeffective(model, dt).holds) {
      throw Error(ErrorKind::Domain, "grid point " + to_string(t) + ": D - tE is not pseudoeffective");
    }
    const ZariskiDecomposition z = zariski_decompose(model, dt);
    ojson step = ojson::object();
    step["t"] = to_string(t);
    step["negative"] = coefficients(z.negative);
    if (sigma == 0) {
      bool step_ok = z.coefficient(curve_id) == 0;
      if (previous) {
        for (const auto& [id, c] : previous->negative) step_ok = step_ok && z.coefficient(id) >= c;
      }
      step["holds"] = step_ok;
      ok = ok && step_ok;
      previous = z;
    } else if (t <= sigma) {
      std::map<std::string, Rat> expected = base.negative;
      expected[curve_id] -= t;
      if (expected[curve_id] == 0) expected.erase(curve_id);
      const bool step_ok = z.negative == expected;
      step["holds"] = step_ok;
      ok = ok && step_ok;
    } else {
      step["holds"] = "n/a";
    }
    steps.push_back(step);
  }
  auto r = make("sigma_variation", "D=" + to_string(d) + " E=" + curve_id, ok, true);
  r.certificates["sigma"] = to_string(sigma);
  r.certificates["branch"] = sigma == 0 ? "increasing" : "translation";
  r.certificates["grid"] = steps;
  return r;
}

}  // namespace okbody
