#include "okbody/verification.hpp"

#include <algorithm>

#include "okbody/cone_tests.hpp"
#include "okbody/error.hpp"
#include "okbody/okounkov_polygon.hpp"
#include "okbody/serialize.hpp"
#include "okbody/toric_oracle.hpp"
#include "okbody/zariski.hpp"

namespace okbody {

bool SuiteResult::agree() const {
  return std::all_of(reports.begin(), reports.end(), [](const CriterionReport& r) { return r.agree; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theoremA", "theoremB",  "theoremC", "slice",  "nested",
                                              "multiplicity", "augmented", "sigma",    "oracle"};
  return names;
}

DivisorClass default_ample(const SurfaceModel& model) {
  DivisorClass a = DivisorClass::zero(model.rank());
  for (const auto& n : model.nef_gens()) a += n;
  return a;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long SplitMix64::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

namespace {

long floor_long(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q.get_si();
}

}  // namespace

Rat SplitMix64::uniform_rat(const Rat& lo, const Rat& hi, long max_den) {
  if (!(lo < hi)) throw Error(ErrorKind::Domain, "empty sampling interval");
  for (int attempt = 0; attempt < 64; ++attempt) {
    const long den = uniform(1, max_den);
    const long kmin = -floor_long(-lo * den);
    const long kmax = -floor_long(-hi * den) - 1;
    if (kmin > kmax) continue;
    return make_rat(uniform(kmin, kmax), den);
  }
  return lo;
}

std::vector<DivisorClass> sample_big_classes(const SurfaceModel& model, SplitMix64& rng, int count, int bound) {
  std::vector<DivisorClass> out{default_ample(model)};
  const long attempts = 400L * std::max(count, 1);
  for (long k = 0; k < attempts && static_cast<int>(out.size()) < count; ++k) {
    DivisorClass d = DivisorClass::zero(model.rank());
    for (std::size_t i = 0; i < model.rank(); ++i) d[i] = Rat(rng.uniform(-bound, bound));
    if (std::find(out.begin(), out.end(), d) != out.end()) continue;
    if (is_big(model, d)) out.push_back(d);
  }
  return out;
}

namespace {

struct Context {
  const SurfaceModel& model;
  const SuiteOptions& options;
  std::vector<DivisorClass> classes;
  std::vector<const Flag*> flags;
  DivisorClass ample;
};

Context make_context(const SurfaceModel& model, const SuiteOptions& options) {
  Context ctx{model, options, {}, {}, default_ample(model)};
  if (options.divisor) {
    if (options.divisor->rank() != model.rank()) {
      throw Error(ErrorKind::DimensionMismatch, "divisor has " + std::to_string(options.divisor->rank()) +
                                                    " coefficients, model rank is " + std::to_string(model.rank()));
    }
    if (!is_big(model, *options.divisor)) throw Error(ErrorKind::NotBig, to_string(*options.divisor) + " is not big");
    ctx.classes.push_back(*options.divisor);
  } else {
    SplitMix64 rng(options.seed);
    ctx.classes = sample_big_classes(model, rng, options.classes, options.coefficient_bound);
  }
  if (options.flag) {
    ctx.flags.push_back(&model.flag(*options.flag));
  } else {
    for (const auto& f : model.flags()) ctx.flags.push_back(&f);
  }
  return ctx;
}

// Stream of per-pair random draws, independent of the suite order.
SplitMix64 pair_rng(const SuiteOptions& options, std::size_t d, std::size_t f, std::uint64_t salt) {
  return SplitMix64(options.seed ^ (0x51ed270b27a3c5d1ULL * (d + 1)) ^ (0x2545f4914f6cdd1dULL * (f + 1)) ^ salt);
}

CriterionReport lambda_bound(const SurfaceModel& model, const DivisorClass& d, const Flag& flag) {
  const Rat lambda = largest_simplex_constant(model, d, flag).lambda;
  const Rat mu = mu_threshold(model, d, model.curve(flag.curve).cls);
  CriterionReport r;
  r.criterion = "lambda_bound";
  r.subject = "D=" + to_string(d) + " flag=" + flag.id;
  r.left = lambda <= mu;
  r.right = true;
  r.agree = r.left;
  r.certificates["lambda"] = to_string(lambda);
  r.certificates["mu"] = to_string(mu);
  return r;
}

std::vector<Rat> grid(SplitMix64& rng, const Rat& lo, const Rat& hi, int samples, bool include_hi) {
  std::vector<Rat> ts{lo};
  if (include_hi) ts.push_back(hi);
  for (int k = 0; k < 64 * samples && static_cast<int>(ts.size()) < samples; ++k) {
    const Rat t = rng.uniform_rat(lo, hi, 12);
    if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  return ts;
}

void oracle_suite(const Context& ctx, SuiteResult& out) {
  if (!ctx.model.toric()) {
    out.skipped += static_cast<int>(ctx.classes.size() * ctx.flags.size());
    return;
  }
  const ToricModel toric = ToricModel::from_model(ctx.model);
  for (const auto& d : ctx.classes) {
    const bool nef = is_nef(ctx.model, d).holds;
    for (const Flag* f : ctx.flags) {
      std::optional<OracleComparison> first;
      try {
        first = oracle_compare(toric, ctx.model, d, *f, 1);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotTorusInvariant) throw;
        ++out.skipped;
        continue;
      }
      const OracleComparison last = oracle_compare(toric, ctx.model, d, *f, ctx.options.toric_m);
      CriterionReport r;
      r.criterion = "toric_oracle";
      r.subject = "D=" + to_string(d) + " flag=" + f->id;
      const bool exact = !nef || first->area_gap == 0;
      r.left = first->contained && last.contained && last.area_gap <= first->area_gap && exact;
      r.right = true;
      r.agree = r.left;
      r.certificates["nef"] = nef;
      r.certificates["contained_m1"] = first->contained;
      r.certificates["area_gap_m1"] = to_string(first->area_gap);
      r.certificates["m"] = ctx.options.toric_m;
      r.certificates["contained_m"] = last.contained;
      r.certificates["area_gap_m"] = to_string(last.area_gap);
      out.reports.push_back(std::move(r));
    }
  }
}

}  // namespace

SuiteResult run_suite(const SurfaceModel& model, const std::string& suite, const SuiteOptions& options) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw Error(ErrorKind::Validation, "unknown suite '" + suite + "'");
  }
  const Context ctx = make_context(model, options);
  SuiteResult out;
  out.suite = suite;

  if (suite == "oracle") {
    oracle_suite(ctx, out);
    return out;
  }
  if (suite == "sigma") {
    for (std::size_t i = 0; i < ctx.classes.size(); ++i) {
      const DivisorClass& d = ctx.classes[i];
      std::size_t k = 0;
      for (const CurveRecord* e : model.negative_curves()) {
        ++k;
        const Rat sigma = sigma_coefficient(model, d, e->id);
        const Rat hi = sigma > 0 ? sigma : mu_threshold(model, d, e->cls);
        auto rng = pair_rng(options, i, k, 0x5167);
        out.reports.push_back(sigma_variation_check(model, d, e->id, grid(rng, Rat(0), hi, options.t_samples, true)));
      }
    }
    return out;
  }

  for (std::size_t i = 0; i < ctx.classes.size(); ++i) {
    const DivisorClass& d = ctx.classes[i];
    if (suite == "theoremA") out.reports.push_back(nef_report(model, d));
    if (suite == "theoremB") out.reports.push_back(ample_report(model, d));
    const bool augmentable = is_big(model, Rat(options.p_max) * d - ctx.ample);
    for (std::size_t j = 0; j < ctx.flags.size(); ++j) {
      const Flag& f = *ctx.flags[j];
      if (suite == "theoremA") {
        out.reports.push_back(origin_criterion(model, d, f));
      } else if (suite == "theoremB") {
        out.reports.push_back(simplex_criterion(model, d, f));
        out.reports.push_back(lambda_bound(model, d, f));
      } else if (suite == "theoremC") {
        out.reports.push_back(theoremC_report(model, d, f));
      } else if (suite == "slice") {
        const Rat mu = mu_threshold(model, d, model.curve(f.curve).cls);
        auto rng = pair_rng(options, i, j, 0x511ce);
        const auto ts = options.t ? std::vector<Rat>{*options.t} : grid(rng, Rat(0), mu, options.t_samples, false);
        for (const auto& t : ts) {
          out.reports.push_back(slice_check(model, d, f, t));
        }
      } else if (suite == "nested") {
        out.reports.push_back(nested_check(model, d, ctx.ample, options.epsilons, f));
      } else if (suite == "multiplicity") {
        out.reports.push_back(multiplicity_bound_check(model, d, f));
      } else if (suite == "augmented") {
        if (!augmentable) {
          ++out.skipped;
          continue;
        }
        out.reports.push_back(augmented_sequence_check(model, d, ctx.ample, f, options.simplex_size, options.p_max));
      }
    }
  }
  return out;
}

}  // namespace okbody
