#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "okbody/cone_tests.hpp"
#include "okbody/error.hpp"
#include "okbody/okounkov_polygon.hpp"
#include "okbody/positivity_criteria.hpp"
#include "okbody/serialize.hpp"
#include "okbody/verification.hpp"
#include "okbody/zariski.hpp"

namespace {

using namespace okbody;

enum Exit { kAgree = 0, kDisagree = 1, kInvalid = 2, kCatalog = 3 };

struct Request {
  std::string model_path;
  std::string param;
  std::string divisor;
  std::string flag;
  std::string t;
  std::string eps;
  int m = 6;
  int p_max = 8;
  std::string suite = "all";
  std::string svg, json, csv;
  std::uint64_t seed = SuiteOptions{}.seed;
  int classes = SuiteOptions{}.classes;
};

SurfaceModel load(const Request& req) {
  std::string instance = req.param;
  if (const auto eq = instance.find('='); eq != std::string::npos) instance = instance.substr(eq + 1);
  return load_model_file(req.model_path, instance);
}

DivisorClass divisor_of(const SurfaceModel& model, const Request& req) {
  DivisorClass d = parse_divisor(req.divisor);
  if (d.rank() != model.rank()) {
    throw Error(ErrorKind::DimensionMismatch, "divisor has " + std::to_string(d.rank()) + " coefficients, model rank is " +
                                                  std::to_string(model.rank()));
  }
  return d;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Validation, "cannot write '" + path + "'");
  out << text;
}

void emit(const ojson& doc, const Request& req) {
  const std::string text = doc.dump(2) + "\n";
  if (!req.json.empty()) write_file(req.json, text);
  std::cout << text;
}

int cmd_classify(const Request& req) {
  const SurfaceModel model = load(req);
  const DivisorClass d = divisor_of(model, req);
  const PositivityVerdict v = classify(model, d);
  ojson doc = ojson::object();
  doc["model"] = model.name();
  doc["divisor"] = to_json(d);
  doc["verdict"] = to_json(v);
  if (v.big) {
    doc["volume"] = to_string(volume(model, d));
    doc["decomposition"] = to_json(zariski_decompose(model, d));
  }
  emit(doc, req);
  return kAgree;
}

int cmd_polygon(const Request& req) {
  const SurfaceModel model = load(req);
  const DivisorClass d = divisor_of(model, req);
  const Flag& flag = model.flag(req.flag);
  const Profiles prof = profiles(model, d, flag);
  const Polygon poly = okounkov_polygon(prof);
  const SimplexConstant lambda = largest_simplex_constant(poly);
  ojson doc = ojson::object();
  doc["model"] = model.name();
  doc["divisor"] = to_json(d);
  doc["flag"] = flag.id;
  doc["profiles"] = to_json(prof);
  doc["polygon"] = to_json(poly);
  doc["area"] = to_string(polygon_area(poly));
  doc["lambda"] = to_string(lambda.lambda);
  if (!req.csv.empty()) write_file(req.csv, polygon_csv(poly));
  if (!req.svg.empty()) {
    const std::optional<Rat> simplex = lambda.lambda > 0 ? std::optional<Rat>(lambda.lambda) : std::nullopt;
    write_file(req.svg, polygon_svg(poly, simplex, model.name() + " D=" + to_string(d) + " flag=" + flag.id));
  }
  emit(doc, req);
  return kAgree;
}

int cmd_verify(const Request& req) {
  const SurfaceModel model = load(req);
  SuiteOptions opts;
  opts.seed = req.seed;
  opts.classes = req.classes;
  opts.toric_m = req.m;
  opts.p_max = req.p_max;
  if (!req.divisor.empty()) opts.divisor = divisor_of(model, req);
  if (!req.flag.empty()) opts.flag = model.flag(req.flag).id;
  if (!req.t.empty()) opts.t = parse_rat(req.t);
  if (!req.eps.empty()) {
    opts.simplex_size = parse_rat(req.eps);
    opts.epsilons = {opts.simplex_size};
  }

  std::vector<std::string> suites;
  if (req.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(req.suite);
  }

  ojson summary = ojson::array();
  ojson full = ojson::array();
  std::optional<ojson> first_disagreement;
  bool agree = true;
  for (const auto& name : suites) {
    const SuiteResult result = run_suite(model, name, opts);
    ojson s = ojson::object();
    s["suite"] = name;
    s["checks"] = result.reports.size();
    s["skipped"] = result.skipped;
    s["agree"] = result.agree();
    summary.push_back(s);
    ojson reports = ojson::array();
    for (const auto& r : result.reports) {
      reports.push_back(to_json(r));
      if (!r.agree && !first_disagreement) first_disagreement = to_json(r);
    }
    s["reports"] = reports;
    full.push_back(s);
    agree = agree && result.agree();
  }

  ojson doc = ojson::object();
  doc["model"] = model.name();
  doc["agree"] = agree;
  doc["suites"] = summary;
  if (first_disagreement) doc["first_disagreement"] = *first_disagreement;
  std::cout << doc.dump(2) << "\n";
  if (!req.json.empty()) {
    ojson report = doc;
    report["suites"] = full;
    write_file(req.json, report.dump(2) + "\n");
  }
  return agree ? kAgree : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Okounkov polygons and positivity criteria on polyhedral surface models"};
  app.require_subcommand(1);
  Request req;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--model", req.model_path, "Model file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--param", req.param, "Family instance, e.g. e=2");
    sub->add_option("--json", req.json, "Also write the JSON report to PATH");
  };

  auto* classify = app.add_subcommand("classify", "Positivity verdict, volume and Zariski decomposition");
  common(classify);
  classify->add_option("--divisor", req.divisor, "Coefficients, e.g. 1,-1/2")->required();

  auto* polygon = app.add_subcommand("polygon", "Okounkov polygon of D along a flag");
  common(polygon);
  polygon->add_option("--divisor", req.divisor, "Coefficients, e.g. 1,-1/2")->required();
  polygon->add_option("--flag", req.flag, "Flag id")->required();
  polygon->add_option("--svg", req.svg, "Write an SVG plot to PATH");
  polygon->add_option("--csv", req.csv, "Write vertices as CSV to PATH");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  common(verify);
  std::vector<std::string> choices{"all"};
  for (const auto& s : suite_names()) choices.push_back(s);
  verify->add_option("--suite", req.suite, "Suite to run")->check(CLI::IsMember(choices));
  verify->add_option("--divisor", req.divisor, "Restrict to one big class");
  verify->add_option("--flag", req.flag, "Restrict to one flag");
  verify->add_option("--t", req.t, "Fixed slice position");
  verify->add_option("--eps", req.eps, "Simplex size / nesting parameter");
  verify->add_option("--m", req.m, "Toric oracle level")->check(CLI::PositiveNumber);
  verify->add_option("--p-max", req.p_max, "Largest augmented level")->check(CLI::PositiveNumber);
  verify->add_option("--seed", req.seed, "Sampling seed");
  verify->add_option("--classes", req.classes, "Random classes per model")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    if (*classify) return cmd_classify(req);
    if (*polygon) return cmd_polygon(req);
    return cmd_verify(req);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::CatalogInsufficient ? kCatalog : kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
