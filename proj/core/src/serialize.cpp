#include "okbody/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "okbody/error.hpp"

namespace okbody {

ojson to_json(const Rat& r) { return to_string(r); }

ojson to_json(const Point2& p) { return ojson::array({to_string(p.x), to_string(p.y)}); }

ojson to_json(const Polygon& poly) {
  ojson verts = ojson::array();
  for (const auto& v : poly.vertices()) verts.push_back(to_json(v));
  ojson out = ojson::object();
  out["vertices"] = verts;
  return out;
}

ojson to_json(const DivisorClass& d) {
  ojson out = ojson::array();
  for (const auto& c : d.coefficients()) out.push_back(to_string(c));
  return out;
}

ojson to_json(const ZariskiDecomposition& z) {
  ojson out = ojson::object();
  out["positive"] = to_json(z.positive);
  ojson neg = ojson::object();
  for (const auto& id : z.support) neg[id] = to_string(z.negative.at(id));
  out["negative"] = neg;
  return out;
}

ojson to_json(const PiecewiseLinear& f) {
  ojson pieces = ojson::array();
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    ojson piece = ojson::object();
    piece["from"] = to_string(f.breakpoints()[i]);
    piece["to"] = to_string(f.breakpoints()[i + 1]);
    piece["intercept"] = to_string(f.pieces()[i].intercept);
    piece["slope"] = to_string(f.pieces()[i].slope);
    pieces.push_back(piece);
  }
  return pieces;
}

ojson to_json(const Profiles& p) {
  ojson out = ojson::object();
  out["a"] = to_string(p.start);
  out["mu"] = to_string(p.end);
  out["alpha"] = to_json(p.lower);
  out["beta"] = to_json(p.upper);
  return out;
}

ojson to_json(const PositivityVerdict& v) {
  ojson out = ojson::object();
  out["pseudoeffective"] = v.pseudoeffective;
  out["big"] = v.big;
  out["nef"] = v.nef;
  out["ample"] = v.ample;
  if (v.witness) {
    ojson w = ojson::object();
    w["class"] = to_json(*v.witness);
    if (v.witness_curve) w["curve"] = *v.witness_curve;
    out["witness"] = w;
  }
  return out;
}

ojson to_json(const CriterionReport& r) {
  ojson out = ojson::object();
  out["criterion"] = r.criterion;
  out["subject"] = r.subject;
  out["left"] = r.left;
  out["right"] = r.right;
  out["agree"] = r.agree;
  out["certificates"] = r.certificates;
  return out;
}

Polygon polygon_from_json(const ojson& j) {
  std::vector<Point2> pts;
  try {
    for (const auto& v : j.at("vertices")) {
      pts.push_back({parse_rat(v.at(0).get<std::string>()), parse_rat(v.at(1).get<std::string>())});
    }
  } catch (const ojson::exception& e) {
    throw Error(ErrorKind::Parse, std::string("polygon document: ") + e.what());
  }
  return Polygon::hull(std::move(pts));
}

std::string polygon_csv(const Polygon& poly) {
  std::string out = "nu1,nu2\n";
  for (const auto& v : poly.vertices()) out += to_string(v.x) + "," + to_string(v.y) + "\n";
  return out;
}

std::string polygon_svg(const Polygon& poly, const std::optional<Rat>& simplex, const std::string& title) {
  constexpr int kSize = 400;
  constexpr int kMargin = 40;
  Rat extent = 1;
  for (const auto& v : poly.vertices()) extent = std::max<Rat>(extent, std::max<Rat>(v.x, v.y));
  const Rat scale = Rat(kSize - 2 * kMargin) / extent;
  auto sx = [&](const Rat& x) { return to_decimal(Rat(kMargin) + x * scale, 6); };
  auto sy = [&](const Rat& y) { return to_decimal(Rat(kSize - kMargin) - y * scale, 6); };
  auto points = [&](const std::vector<Point2>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) s += " ";
      s += sx(vs[i].x) + "," + sy(vs[i].y);
    }
    return s;
  };
  auto escape = [](const std::string& in) {
    std::string s;
    for (char c : in) {
      switch (c) {
        case '&': s += "&amp;"; break;
        case '<': s += "&lt;"; break;
        case '>': s += "&gt;"; break;
        case '"': s += "&quot;"; break;
        default: s += c;
      }
    }
    return s;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  svg << "  <title>" << escape(title) << "</title>\n";
  svg << "  <metadata><![CDATA[" << to_json(poly).dump() << "]]></metadata>\n";
  svg << "  <line x1=\"" << kMargin << "\" y1=\"" << kSize - kMargin << "\" x2=\"" << kSize - kMargin / 2 << "\" y2=\""
      << kSize - kMargin << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << kMargin << "\" y1=\"" << kSize - kMargin << "\" x2=\"" << kMargin << "\" y2=\"" << kMargin / 2
      << "\" stroke=\"black\"/>\n";
  svg << "  <text x=\"" << kSize - kMargin / 2 << "\" y=\"" << kSize - kMargin + 15 << "\">nu1</text>\n";
  svg << "  <text x=\"" << kMargin - 30 << "\" y=\"" << kMargin / 2 << "\">nu2</text>\n";
  svg << "  <polygon id=\"body\" points=\"" << points(poly.vertices())
      << "\" fill=\"steelblue\" fill-opacity=\"0.4\" stroke=\"navy\"/>\n";
  if (simplex && *simplex > 0) {
    svg << "  <polygon id=\"simplex\" points=\"" << points(standard_simplex(*simplex).vertices())
        << "\" fill=\"orange\" fill-opacity=\"0.5\" stroke=\"darkorange\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace okbody
