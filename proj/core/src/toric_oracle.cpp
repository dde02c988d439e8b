#include "okbody/toric_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "okbody/error.hpp"
#include "okbody/okounkov_polygon.hpp"

namespace okbody {
namespace {

using Ray = std::array<long long, 2>;

long long det(const Ray& a, const Ray& b) { return a[0] * b[1] - a[1] * b[0]; }

// 0 for angles in [0, π), 1 for [π, 2π)
int half(const Ray& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; }

bool angle_less(const Ray& a, const Ray& b) {
  if (half(a) != half(b)) return half(a) < half(b);
  return det(a, b) > 0;
}

[[noreturn]] void incompatible(const std::string& what) {
  throw Error(ErrorKind::Validation, "toric data incompatible: " + what);
}

long long to_ll(const Rat& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p()) throw Error(ErrorKind::Domain, "non-integral or oversized value " + to_string(r));
  return r.get_num().get_si();
}

}  // namespace

ToricModel ToricModel::from_model(const SurfaceModel& model) {
  if (!model.toric()) throw Error(ErrorKind::NotTorusInvariant, "model '" + model.name() + "' carries no toric data");
  const auto& fan = *model.toric();
  ToricModel t;
  for (const auto& r : fan.rays) t.rays_.push_back({r[0], r[1]});
  for (const auto& d : fan.divisors) {
    t.classes_.push_back(d.cls);
    t.curves_.push_back(d.curve);
  }
  const std::size_t n = t.rays_.size();
  if (n < 3 || t.classes_.size() != n) incompatible("need one class per ray and at least three rays");

  for (const auto& r : t.rays_) {
    if (std::gcd(std::llabs(r[0]), std::llabs(r[1])) != 1) incompatible("ray is not primitive");
  }
  // counter-clockwise: a cyclic rotation of the angular order, with each
  // consecutive cone smooth
  const std::size_t start = static_cast<std::size_t>(
      std::min_element(t.rays_.begin(), t.rays_.end(), angle_less) - t.rays_.begin());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!angle_less(t.rays_[(start + k) % n], t.rays_[(start + k + 1) % n])) incompatible("rays are not counter-clockwise");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (det(t.rays_[i], t.rays_[(i + 1) % n]) != 1) incompatible("fan is not smooth and complete");
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (intersect(model, t.classes_[i], t.classes_[j]) != Rat(static_cast<long>(t.fan_intersection(i, j)))) {
        incompatible("D_" + std::to_string(i) + "·D_" + std::to_string(j) + " differs from the Gram pairing");
      }
    }
  }
  for (int k = 0; k < 2; ++k) {
    DivisorClass rel = DivisorClass::zero(model.rank());
    for (std::size_t i = 0; i < n; ++i) rel += Rat(static_cast<long>(t.rays_[i][k])) * t.classes_[i];
    if (!rel.is_zero()) incompatible("character relation fails in the Picard group");
  }

  // a subset of boundary classes forming a Z-basis of the lattice
  const std::size_t rank = model.rank();
  std::vector<bool> pick(n, false);
  std::fill(pick.end() - static_cast<long>(rank), pick.end(), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) idx.push_back(i);
    RatMatrix m(rank, RatVector(rank));
    for (std::size_t r = 0; r < rank; ++r)
      for (std::size_t c = 0; c < rank; ++c) m[r][c] = t.classes_[idx[c]][r];
    const Rat dt = determinant(m);
    if (dt == 1 || dt == -1) {
      t.basis_ = idx;
      t.basis_inverse_ = *inverse(m);
      return t;
    }
  } while (std::next_permutation(pick.begin(), pick.end()));
  incompatible("boundary classes do not contain a lattice basis");
}

long long ToricModel::fan_intersection(std::size_t i, std::size_t j) const {
  const std::size_t n = rays_.size();
  if (i == j) {
    const Ray& prev = rays_[(i + n - 1) % n];
    const Ray& next = rays_[(i + 1) % n];
    const Ray& v = rays_[i];
    const Ray sum{prev[0] + next[0], prev[1] + next[1]};
    // sum = b·v
    const long long b = v[0] != 0 ? sum[0] / v[0] : sum[1] / v[1];
    return -b;
  }
  return ((i + 1) % n == j || (j + 1) % n == i) ? 1 : 0;
}

std::optional<std::size_t> ToricModel::divisor_of(const std::string& curve_id) const {
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i] && *curves_[i] == curve_id) return i;
  }
  return std::nullopt;
}

std::vector<long long> ToricModel::invariant_form(const DivisorClass& d) const {
  if (!d.is_integral()) throw Error(ErrorKind::Domain, "non-integral class " + to_string(d));
  const RatVector coords = multiply(basis_inverse_, RatVector(d.coefficients().begin(), d.coefficients().end()));
  std::vector<long long> a(rays_.size(), 0);
  for (std::size_t k = 0; k < basis_.size(); ++k) a[basis_[k]] = to_ll(coords[k]);
  return a;
}

std::vector<LatticePoint> section_polytope(const ToricModel& toric, const DivisorClass& d, int m) {
  if (m <= 0) throw Error(ErrorKind::Domain, "level must be positive");
  const DivisorClass md = Rat(m) * d;
  if (!md.is_integral()) throw Error(ErrorKind::Domain, "non-integral mD for m=" + std::to_string(m));
  const auto a = toric.invariant_form(md);
  const auto& rays = toric.rays();
  const std::size_t n = rays.size();

  auto feasible = [&](const Rat& x, const Rat& y) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x * Rat(static_cast<long>(rays[k][0])) + y * Rat(static_cast<long>(rays[k][1])) < Rat(static_cast<long>(-a[k]))) return false;
    }
    return true;
  };
  // vertices of {⟨u, v_k⟩ >= −a_k} bound the enumeration box
  std::optional<Rat> xlo, xhi, ylo, yhi;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long long dd = det(rays[i], rays[j]);
      if (dd == 0) continue;
      const Rat x = make_rat(-a[i] * rays[j][1] + a[j] * rays[i][1], dd);
      const Rat y = make_rat(-a[j] * rays[i][0] + a[i] * rays[j][0], dd);
      if (!feasible(x, y)) continue;
      if (!xlo || x < *xlo) xlo = x;
      if (!xhi || x > *xhi) xhi = x;
      if (!ylo || y < *ylo) ylo = y;
      if (!yhi || y > *yhi) yhi = y;
    }
  }
  std::vector<LatticePoint> points;
  if (!xlo) return points;
  auto floor_ll = [](const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
  };
  auto ceil_ll = [](const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
  };
  for (long long x = ceil_ll(*xlo); x <= floor_ll(*xhi); ++x) {
    for (long long y = ceil_ll(*ylo); y <= floor_ll(*yhi); ++y) {
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) ok = x * rays[k][0] + y * rays[k][1] >= -a[k];
      if (ok) points.push_back({x, y});
    }
  }
  return points;
}

namespace {

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Integer monotone chain, independent of the rational Polygon::hull.
std::vector<LatticePoint> integer_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

SectionHull valuation_hull(const ToricModel& toric, const SurfaceModel& model, const DivisorClass& d, const Flag& flag,
                           int m) {
  const auto host = toric.divisor_of(flag.curve);
  if (!host) throw Error(ErrorKind::NotTorusInvariant, "flag '" + flag.id + "' host is not a boundary curve");
  const std::size_t n = toric.rays().size();
  const std::size_t i = *host;
  std::optional<std::size_t> neighbour;
  for (const auto& [gid, mult] : flag.local_mults) {
    if (mult == 0) continue;
    const auto j = toric.divisor_of(gid);
    const bool adjacent = j && ((*j + 1) % n == i || (i + 1) % n == *j);
    if (!adjacent || mult != 1 || neighbour) {
      throw Error(ErrorKind::NotTorusInvariant, "flag '" + flag.id + "' point is neither torus-fixed nor general");
    }
    neighbour = *j;
  }
  (void)model;

  const auto polytope = section_polytope(toric, d, m);
  const auto a = toric.invariant_form(Rat(m) * d);
  const auto& rays = toric.rays();
  const std::size_t second = neighbour.value_or((i + 1) % n);
  auto order = [&](const LatticePoint& u, std::size_t k) { return u.x * rays[k][0] + u.y * rays[k][1] + a[k]; };

  SectionHull out;
  out.m = m;
  std::map<long long, long long> row_min;
  for (const auto& u : polytope) {
    const long long v1 = order(u, i);
    const long long v2 = order(u, second);
    out.points.push_back({v1, v2});
    auto [it, inserted] = row_min.try_emplace(v1, v2);
    if (!inserted) it->second = std::min(it->second, v2);
  }
  if (!neighbour) {
    // general point of the host: vanishing orders within each row are 0..n_j−1
    for (auto& p : out.points) p.y -= row_min.at(p.x);
  }
  std::sort(out.points.begin(), out.points.end());
  std::vector<Point2> scaled;
  for (const auto& p : integer_hull(out.points)) scaled.push_back({make_rat(p.x, m), make_rat(p.y, m)});
  out.hull = Polygon::hull(std::move(scaled));
  return out;
}

OracleComparison oracle_compare(const ToricModel& toric, const SurfaceModel& model, const DivisorClass& d,
                                const Flag& flag, int m) {
  const SectionHull h = valuation_hull(toric, model, d, flag, m);
  const Polygon delta = okounkov_polygon(model, d, flag);
  OracleComparison out;
  out.empty = h.empty();
  out.contained = polygon_includes(delta, h.hull);
  out.area_gap = polygon_area(delta) - polygon_area(h.hull);
  return out;
}

}  // namespace okbody
