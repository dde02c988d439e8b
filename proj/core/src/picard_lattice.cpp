#include "okbody/picard_lattice.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "okbody/error.hpp"

namespace okbody {

using nlohmann::json;

bool DivisorClass::is_integral() const {
  for (const auto& c : coeffs_) {
    if (!is_integer(c)) return false;
  }
  return true;
}

bool DivisorClass::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (other.rank() != rank()) throw Error(ErrorKind::DimensionMismatch, "divisor ranks differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (other.rank() != rank()) throw Error(ErrorKind::DimensionMismatch, "divisor ranks differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rat& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::string to_string(const DivisorClass& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.rank(); ++i) {
    if (i) out += ", ";
    out += to_string(d[i]);
  }
  return out + ")";
}

DivisorClass parse_divisor(std::string_view csv) {
  std::vector<Rat> coeffs;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    coeffs.push_back(parse_rat(csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DivisorClass(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Model access

const CurveRecord& SurfaceModel::curve(std::string_view id) const {
  for (const auto& c : data_.curves) {
    if (c.id == id) return c;
  }
  throw Error(ErrorKind::UnknownId, "unknown curve '" + std::string(id) + "'");
}

const Flag& SurfaceModel::flag(std::string_view id) const {
  for (const auto& f : data_.flags) {
    if (f.id == id) return f;
  }
  throw Error(ErrorKind::UnknownId, "unknown flag '" + std::string(id) + "'");
}

bool SurfaceModel::has_curve(std::string_view id) const noexcept {
  for (const auto& c : data_.curves) {
    if (c.id == id) return true;
  }
  return false;
}

std::size_t SurfaceModel::curve_index(std::string_view id) const {
  for (std::size_t i = 0; i < data_.curves.size(); ++i) {
    if (data_.curves[i].id == id) return i;
  }
  throw Error(ErrorKind::UnknownId, "unknown curve '" + std::string(id) + "'");
}

std::vector<const CurveRecord*> SurfaceModel::negative_curves() const {
  std::vector<const CurveRecord*> out;
  for (const auto& c : data_.curves) {
    if (c.is_negative) out.push_back(&c);
  }
  return out;
}

Rat intersect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b) {
  const auto& g = model.gram();
  if (a.rank() != g.size() || b.rank() != g.size()) {
    throw Error(ErrorKind::DimensionMismatch, "divisor length " + std::to_string(a.rank()) + "/" +
                                                  std::to_string(b.rank()) + " does not match rank " +
                                                  std::to_string(g.size()));
  }
  Rat sum = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) sum += a[i] * g[i][j] * b[j];
  }
  return sum;
}

bool flag_incidence(const SurfaceModel& model, const Flag& flag, std::string_view curve_id) {
  if (!model.has_curve(curve_id)) {
    throw Error(ErrorKind::UnknownId, "unknown curve '" + std::string(curve_id) + "'");
  }
  return curve_id == flag.curve || flag.local_mult(std::string(curve_id)) > 0;
}

DivisorClass combination_class(const SurfaceModel& model, const std::map<std::string, Rat>& coefficients) {
  DivisorClass sum = DivisorClass::zero(model.rank());
  for (const auto& [id, c] : coefficients) sum += c * model.curve(id).cls;
  return sum;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::Validation, what); }

bool positively_proportional(const DivisorClass& a, const DivisorClass& b) {
  // a = s b with s > 0
  std::optional<Rat> ratio;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (b[i] == 0) {
      if (a[i] != 0) return false;
      continue;
    }
    const Rat r = a[i] / b[i];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio && *ratio > 0;
}

void check_rank(const DivisorClass& d, std::size_t rank, const std::string& what) {
  if (d.rank() != rank) {
    invalid(what + " has length " + std::to_string(d.rank()) + ", expected rank " + std::to_string(rank));
  }
}

}  // namespace

SurfaceModel SurfaceModel::create(Data data) {
  SurfaceModel model(std::move(data));
  auto& d = model.data_;
  const std::size_t rank = d.gram.size();
  if (rank == 0) invalid("rank must be positive");
  for (const auto& row : d.gram) {
    if (row.size() != rank) invalid("gram is not square");
  }
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      if (d.gram[i][j] != d.gram[j][i]) invalid("gram is not symmetric");
    }
  }
  for (auto& c : d.curves) {
    check_rank(c.cls, rank, "curve '" + c.id + "'");
    c.is_negative = intersect(model, c.cls, c.cls) < 0;
  }
  model.validate();
  return model;
}

void SurfaceModel::validate() const {
  const auto& d = data_;
  const std::size_t rank = d.gram.size();
  if (!d.basis.empty() && d.basis.size() != rank) invalid("basis names do not match rank");
  for (const auto& row : d.gram) {
    if (row.size() != rank) invalid("gram is not square");
    for (const auto& v : row) {
      if (!is_integer(v)) invalid("gram entries must be integers");
    }
  }
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      if (d.gram[i][j] != d.gram[j][i]) invalid("gram is not symmetric");
    }
  }
  const Inertia in = inertia(d.gram);
  if (in.positive != 1 || in.zero != 0 || in.negative != static_cast<int>(rank) - 1) {
    invalid("gram not signature (1,rho-1)");
  }

  std::set<std::string> ids;
  for (const auto& c : d.curves) {
    if (c.id.empty()) invalid("curve with empty id");
    if (!ids.insert(c.id).second) invalid("duplicate curve id '" + c.id + "'");
    check_rank(c.cls, rank, "curve '" + c.id + "'");
    if (!c.cls.is_integral()) invalid("curve '" + c.id + "' class is not integral");
    if (c.is_negative != (intersect(*this, c.cls, c.cls) < 0)) {
      invalid("curve '" + c.id + "' negativity flag disagrees with gram");
    }
  }
  if (d.nef_gens.empty() || d.eff_gens.empty()) invalid("cone generators missing");
  for (const auto& n : d.nef_gens) {
    check_rank(n, rank, "nef generator");
    if (intersect(*this, n, n) < 0) invalid("nef generator " + to_string(n) + " has negative square");
  }
  for (const auto& e : d.eff_gens) check_rank(e, rank, "effective generator");
  for (const auto& n : d.nef_gens) {
    for (const auto& e : d.eff_gens) {
      if (intersect(*this, n, e) < 0) {
        invalid("nef generator " + to_string(n) + " pairs negatively with effective generator " + to_string(e));
      }
    }
  }
  for (const auto& e : d.eff_gens) {
    if (intersect(*this, e, e) >= 0) continue;
    bool found = false;
    for (const auto& c : d.curves) {
      if (c.is_negative && positively_proportional(e, c.cls)) found = true;
    }
    if (!found) invalid("negative effective generator " + to_string(e) + " is not a catalog curve");
  }
  for (const auto& c : d.curves) {
    for (const auto& n : d.nef_gens) {
      if (intersect(*this, c.cls, n) < 0) invalid("curve '" + c.id + "' pairs negatively with a nef generator");
    }
  }

  std::set<std::string> flag_ids;
  for (const auto& f : d.flags) {
    if (!flag_ids.insert(f.id).second) invalid("duplicate flag id '" + f.id + "'");
    if (!has_curve(f.curve)) invalid("flag '" + f.id + "' host curve '" + f.curve + "' not in catalog");
    const auto& host = curve(f.curve);
    std::vector<const CurveRecord*> through;
    for (const auto& [gid, mult] : f.local_mults) {
      if (!has_curve(gid)) invalid("flag '" + f.id + "' names unknown curve '" + gid + "'");
      if (gid == f.curve) invalid("flag '" + f.id + "' lists its host curve in local_mults");
      if (mult < 0) invalid("flag '" + f.id + "' has negative local multiplicity");
      if (mult > 0 && f.very_general) invalid("flag '" + f.id + "' is very general but meets '" + gid + "'");
      const auto& g = curve(gid);
      if (Rat(mult) > intersect(*this, g.cls, host.cls)) {
        invalid("flag '" + f.id + "': local_mults exceeds Γ·C for '" + gid + "'");
      }
      if (mult > 0) through.push_back(&g);
    }
    for (std::size_t i = 0; i < through.size(); ++i) {
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        if (intersect(*this, through[i]->cls, through[j]->cls) < 1) {
          invalid("flag '" + f.id + "': curves '" + through[i]->id + "' and '" + through[j]->id +
                  "' cannot share the flag point");
        }
      }
    }
  }

  if (d.toric) {
    const auto& t = *d.toric;
    if (t.rays.size() < 3) invalid("toric fan needs at least three rays");
    if (t.divisors.size() != t.rays.size()) invalid("toric divisor count does not match rays");
    for (const auto& div : t.divisors) {
      check_rank(div.cls, rank, "toric divisor");
      if (div.curve && !has_curve(*div.curve)) invalid("toric divisor names unknown curve '" + *div.curve + "'");
      if (div.curve && curve(*div.curve).cls != div.cls) {
        invalid("toric divisor class disagrees with curve '" + *div.curve + "'");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

Rat json_rat(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(mpz_class(v.dump(), 10));
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw Error(ErrorKind::Parse, where + ": expected integer or \"p/q\" string");
}

DivisorClass json_class(const json& v, const std::string& where) {
  if (!v.is_array()) throw Error(ErrorKind::Parse, where + ": expected array");
  std::vector<Rat> coeffs;
  for (const auto& x : v) coeffs.push_back(json_rat(x, where));
  return DivisorClass(std::move(coeffs));
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorKind::Parse, where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

SurfaceModel parse_single(const json& doc) {
  SurfaceModel::Data d;
  d.name = doc.value("name", std::string{});
  if (doc.contains("basis")) {
    for (const auto& b : doc.at("basis")) d.basis.push_back(b.get<std::string>());
  }
  const json& rank_field = field(doc, "rank", "model");
  if (!rank_field.is_number_unsigned()) throw Error(ErrorKind::Parse, "model: rank must be a positive integer");
  const auto rank = rank_field.get<std::size_t>();
  const json& gram = field(doc, "gram", "model");
  if (!gram.is_array() || gram.size() != rank) throw Error(ErrorKind::Parse, "model: gram must have rank rows");
  for (const auto& row : gram) {
    DivisorClass r = json_class(row, "gram");
    if (r.rank() != rank) throw Error(ErrorKind::Parse, "model: gram rows must have rank entries");
    d.gram.emplace_back(r.coefficients().begin(), r.coefficients().end());
  }
  for (const auto& c : field(doc, "curves", "model")) {
    d.curves.push_back({field(c, "id", "curve").get<std::string>(), json_class(field(c, "class", "curve"), "curve"),
                        false});
  }
  for (const auto& n : field(doc, "nef_gens", "model")) d.nef_gens.push_back(json_class(n, "nef_gens"));
  for (const auto& e : field(doc, "eff_gens", "model")) d.eff_gens.push_back(json_class(e, "eff_gens"));
  if (doc.contains("flags")) {
    for (const auto& f : doc.at("flags")) {
      Flag flag;
      flag.id = field(f, "id", "flag").get<std::string>();
      flag.curve = field(f, "curve", "flag").get<std::string>();
      if (f.contains("local_mults")) {
        for (const auto& [k, v] : f.at("local_mults").items()) {
          if (!v.is_number_integer()) throw Error(ErrorKind::Parse, "flag '" + flag.id + "': local_mults must be integers");
          flag.local_mults[k] = v.get<int>();
        }
      }
      flag.very_general = f.value("very_general", false);
      d.flags.push_back(std::move(flag));
    }
  }
  if (doc.contains("toric")) {
    const json& t = doc.at("toric");
    ToricFanData fan;
    for (const auto& r : field(t, "rays", "toric")) {
      if (!r.is_array() || r.size() != 2) throw Error(ErrorKind::Parse, "toric: rays must be integer pairs");
      fan.rays.push_back({r[0].get<long>(), r[1].get<long>()});
    }
    for (const auto& div : field(t, "divisors", "toric")) {
      ToricFanData::Divisor entry{json_class(field(div, "class", "toric divisor"), "toric divisor"), std::nullopt};
      if (div.contains("curve") && !div.at("curve").is_null()) entry.curve = div.at("curve").get<std::string>();
      fan.divisors.push_back(std::move(entry));
    }
    d.toric = std::move(fan);
  }
  return SurfaceModel::create(std::move(d));
}

}  // namespace

SurfaceModel load_model(std::string_view document, std::string_view instance) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed model document: ") + e.what());
  }
  try {
    if (doc.contains("instances")) {
      std::string key(instance);
      if (key.empty()) key = doc.value("default", std::string{});
      const json& instances = doc.at("instances");
      if (!instances.contains(key)) {
        throw Error(ErrorKind::UnknownId, "model family has no instance '" + key + "'");
      }
      return parse_single(instances.at(key));
    }
    if (!instance.empty()) throw Error(ErrorKind::UnknownId, "model is not a family; cannot select an instance");
    return parse_single(doc);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("model document: ") + e.what());
  }
}

SurfaceModel load_model_file(const std::filesystem::path& path, std::string_view instance) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read model file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str(), instance);
}

}  // namespace okbody
