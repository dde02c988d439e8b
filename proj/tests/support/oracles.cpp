#include "oracles.hpp"

#include <algorithm>

#include "okbody/error.hpp"

#ifndef OKBODY_MODELS_DIR
#error "OKBODY_MODELS_DIR must point at the bundled models"
#endif

namespace okbody::testing {
namespace {

using Matrix = std::vector<std::vector<Rat>>;

Rat pair(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < model.rank(); ++i)
    for (std::size_t j = 0; j < model.rank(); ++j) s += a[i] * model.gram()[i][j] * b[j];
  return s;
}

Rat det(Matrix m) {
  const std::size_t n = m.size();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// Sylvester: leading minors alternate in sign, starting negative.
bool negative_definite(const Matrix& g) {
  for (std::size_t k = 1; k <= g.size(); ++k) {
    Matrix lead(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = g[i][j];
    const Rat m = det(lead);
    if (k % 2 == 1 ? m >= 0 : m <= 0) return false;
  }
  return true;
}

// Cramer's rule; sizes here are at most six.
std::vector<Rat> solve(const Matrix& g, const std::vector<Rat>& rhs) {
  const Rat d = det(g);
  std::vector<Rat> x(g.size());
  for (std::size_t c = 0; c < g.size(); ++c) {
    Matrix m = g;
    for (std::size_t r = 0; r < g.size(); ++r) m[r][c] = rhs[r];
    x[c] = det(m) / d;
  }
  return x;
}

bool pseudoeffective(const SurfaceModel& model, const DivisorClass& d) {
  return std::all_of(model.nef_gens().begin(), model.nef_gens().end(),
                     [&](const DivisorClass& n) { return pair(model, d, n) >= 0; });
}

bool nef(const SurfaceModel& model, const DivisorClass& d) {
  for (const auto& e : model.eff_gens())
    if (pair(model, d, e) < 0) return false;
  for (const auto& c : model.curves())
    if (pair(model, d, c.cls) < 0) return false;
  return true;
}

Rat pseudoeffective_threshold(const SurfaceModel& model, const DivisorClass& d, const DivisorClass& c) {
  std::optional<Rat> best;
  for (const auto& n : model.nef_gens()) {
    const Rat cn = pair(model, c, n);
    if (cn > 0) {
      const Rat r = pair(model, d, n) / cn;
      if (!best || r < *best) best = r;
    }
  }
  if (!best) throw Error(ErrorKind::Domain, "unbounded threshold");
  return *best;
}

}  // namespace

SurfaceModel bundled(const std::string& stem, const std::string& instance) {
  return load_model_file(std::string(OKBODY_MODELS_DIR) + "/" + stem + ".json", instance);
}

std::optional<OracleDecomposition> exhaustive_zariski(const SurfaceModel& model, const DivisorClass& d) {
  if (!pseudoeffective(model, d)) return std::nullopt;
  std::vector<const CurveRecord*> neg;
  for (const auto& c : model.curves())
    if (pair(model, c.cls, c.cls) < 0) neg.push_back(&c);

  std::optional<OracleDecomposition> found;
  int valid = 0;
  for (unsigned mask = 0; mask < (1u << neg.size()); ++mask) {
    std::vector<const CurveRecord*> s;
    for (std::size_t i = 0; i < neg.size(); ++i)
      if (mask & (1u << i)) s.push_back(neg[i]);
    Matrix g(s.size(), std::vector<Rat>(s.size()));
    std::vector<Rat> rhs(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      rhs[i] = pair(model, d, s[i]->cls);
      for (std::size_t j = 0; j < s.size(); ++j) g[i][j] = pair(model, s[i]->cls, s[j]->cls);
    }
    if (!s.empty() && !negative_definite(g)) continue;
    const std::vector<Rat> x = s.empty() ? std::vector<Rat>{} : solve(g, rhs);
    if (std::any_of(x.begin(), x.end(), [](const Rat& v) { return v <= 0; })) continue;
    OracleDecomposition z;
    z.positive = d;
    for (std::size_t i = 0; i < s.size(); ++i) {
      z.positive -= x[i] * s[i]->cls;
      z.negative[s[i]->id] = x[i];
    }
    if (!nef(model, z.positive)) continue;
    ++valid;
    if (!found) found = z;
  }
  if (found) found->valid_subsets = valid;
  return found;
}

ProfileSample sample_profiles(const SurfaceModel& model, const DivisorClass& d, const Flag& flag, const Rat& t) {
  const DivisorClass& c = model.curve(flag.curve).cls;
  const auto z = exhaustive_zariski(model, d - t * c);
  if (!z) throw Error(ErrorKind::Domain, "sample outside the pseudoeffective range");
  ProfileSample s{t, 0, 0};
  for (const auto& [id, coeff] : z->negative) s.alpha += coeff * flag.local_mult(id);
  s.beta = s.alpha + pair(model, z->positive, c);
  return s;
}

std::vector<ProfileSample> dense_profiles(const SurfaceModel& model, const DivisorClass& d, const Flag& flag,
                                          int steps) {
  const auto z = exhaustive_zariski(model, d);
  if (!z) throw Error(ErrorKind::Domain, "not pseudoeffective");
  const auto it = z->negative.find(flag.curve);
  const Rat a = it == z->negative.end() ? Rat(0) : it->second;
  const Rat mu = pseudoeffective_threshold(model, d, model.curve(flag.curve).cls);
  std::vector<ProfileSample> out;
  for (int k = 0; k <= steps; ++k) {
    const Rat t = a + (mu - a) * make_rat(k, steps);
    out.push_back(sample_profiles(model, d, flag, t));
  }
  return out;
}

bool inside(const Polygon& poly, const Point2& p) {
  const auto& v = poly.vertices();
  auto cross = [](const Point2& o, const Point2& a, const Point2& b) -> Rat {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  if (v.empty()) return false;
  if (v.size() == 1) return v[0] == p;
  if (v.size() == 2) {
    return cross(v[0], v[1], p) == 0 && std::min(v[0].x, v[1].x) <= p.x && p.x <= std::max(v[0].x, v[1].x) &&
           std::min(v[0].y, v[1].y) <= p.y && p.y <= std::max(v[0].y, v[1].y);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cross(v[i], v[(i + 1) % v.size()], p) < 0) return false;
  }
  return true;
}

LambdaBracket bisect_lambda(const Polygon& poly, long precision) {
  const Point2 origin{Rat(0), Rat(0)};
  if (poly.size() < 3 || !inside(poly, origin)) return {Rat(0), Rat(0)};
  auto fits = [&](const Rat& l) { return inside(poly, {l, Rat(0)}) && inside(poly, {Rat(0), l}); };
  Rat lo = 0;
  Rat hi = 1;
  for (const auto& p : poly.vertices()) hi = std::max<Rat>(hi, p.x + p.y + 1);
  const Rat width = make_rat(1, precision);
  while (hi - lo > width) {
    const Rat mid = (lo + hi) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

std::vector<DivisorClass> random_pseudoeffective(const SurfaceModel& model, SplitMix64& rng, int count) {
  std::vector<DivisorClass> out;
  auto add = [&](const DivisorClass& d) {
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  };
  std::vector<DivisorClass> gens = model.eff_gens();
  gens.insert(gens.end(), model.nef_gens().begin(), model.nef_gens().end());
  for (int k = 0; k < 200 * count && static_cast<int>(out.size()) < count; ++k) {
    DivisorClass d = DivisorClass::zero(model.rank());
    if (k % 2 == 0) {
      for (const auto& g : gens) {
        if (rng.uniform(0, 2) == 0) continue;
        d += make_rat(rng.uniform(0, 24), rng.uniform(1, 12)) * g;
      }
    } else {
      for (std::size_t i = 0; i < model.rank(); ++i) d[i] = make_rat(rng.uniform(-24, 24), rng.uniform(1, 6));
      if (!pseudoeffective(model, d)) continue;
    }
    add(d);
  }
  return out;
}

std::vector<DivisorClass> nef_integral_big(const SurfaceModel& model, int bound) {
  const std::size_t k = model.nef_gens().size();
  std::vector<int> c(k, 0);
  std::vector<DivisorClass> out;
  while (true) {
    DivisorClass d = DivisorClass::zero(model.rank());
    for (std::size_t i = 0; i < k; ++i) d += Rat(c[i]) * model.nef_gens()[i];
    if (pair(model, d, d) > 0 && std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    std::size_t i = 0;
    while (i < k && c[i] == bound) c[i++] = 0;
    if (i == k) break;
    ++c[i];
  }
  return out;
}

}  // namespace okbody::testing
