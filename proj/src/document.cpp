#include "descartes/document.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>
#include <json.hpp>

#include "descartes/errors.hpp"

namespace descartes {

namespace {

using nlohmann::json;

// 17 significant digits round-trip any double; +0.0 folds negative zero.
std::string exact(double v) { return fmt::format("{:.17g}", v + 0.0); }
std::string display(double v) { return fmt::format("{:.12g}", v + 0.0); }

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw DomainError(std::string("document field '") + key + "' must be a number");
  }
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) {
    throw DomainError(std::string("document field '") + key + "' must be finite");
  }
  return v;
}

}  // namespace

FlowerDocument FlowerDocument::from_layout(const FlowerLayout& layout) {
  FlowerDocument doc;
  doc.n = layout.size();
  doc.central_curvature = layout.central.curvature();
  std::vector<Circle> circles;
  circles.reserve(doc.n + 1);
  circles.push_back(layout.central);
  for (const Circle& p : layout.petals) {
    doc.petal_curvatures.push_back(p.curvature());
    circles.push_back(p);
  }
  doc.circles = std::move(circles);
  return doc;
}

FlowerDocument FlowerDocument::parse(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("flower document must be a JSON object");

  FlowerDocument doc;
  if (!j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<long long>() < 0) {
    throw DomainError("document field 'n' must be a non-negative integer");
  }
  doc.n = j.at("n").get<std::size_t>();
  doc.central_curvature = number_field(j, "central_curvature");

  if (!j.contains("petal_curvatures") || !j.at("petal_curvatures").is_array()) {
    throw DomainError("document field 'petal_curvatures' must be an array");
  }
  for (const json& v : j.at("petal_curvatures")) {
    if (!v.is_number()) throw DomainError("petal curvatures must be numbers");
    doc.petal_curvatures.push_back(v.get<double>());
  }
  if (doc.petal_curvatures.size() != doc.n) {
    throw DomainError("'n' does not match the number of petal curvatures");
  }
  if (j.contains("tolerance")) {
    doc.tolerance = number_field(j, "tolerance");
    if (!(doc.tolerance > 0.0)) throw DomainError("tolerance must be positive");
  }

  if (j.contains("circles") && !j.at("circles").is_null()) {
    const json& arr = j.at("circles");
    if (!arr.is_array()) throw DomainError("document field 'circles' must be an array");
    if (arr.size() != doc.n + 1) {
      throw DomainError("'circles' must hold the central circle and n petals");
    }
    std::vector<Circle> circles;
    circles.reserve(arr.size());
    for (const json& c : arr) {
      if (!c.is_object()) throw DomainError("each circle must be an object");
      circles.emplace_back(number_field(c, "cx"), number_field(c, "cy"),
                           number_field(c, "r"));
    }
    doc.circles = std::move(circles);
  }
  return doc;
}

std::string FlowerDocument::to_json() const {
  std::string out = "{\n";
  out += fmt::format("  \"n\": {},\n", n);
  out += "  \"central_curvature\": " + exact(central_curvature) + ",\n";
  out += "  \"petal_curvatures\": [";
  for (std::size_t j = 0; j < petal_curvatures.size(); ++j) {
    out += (j ? ", " : "") + exact(petal_curvatures[j]);
  }
  out += "],\n";
  out += "  \"tolerance\": " + exact(tolerance);
  if (circles) {
    out += ",\n  \"circles\": [\n";
    for (std::size_t j = 0; j < circles->size(); ++j) {
      const Circle& c = (*circles)[j];
      out += "    {\"cx\": " + exact(c.cx()) + ", \"cy\": " + exact(c.cy()) +
             ", \"r\": " + exact(c.r()) + "}";
      out += j + 1 < circles->size() ? ",\n" : "\n";
    }
    out += "  ]";
  }
  out += "\n}\n";
  return out;
}

FlowerLayout FlowerDocument::layout() const {
  if (!circles || circles->empty()) throw DomainError("document has no circles");
  const Circle& central = circles->front();
  std::vector<Circle> petals(circles->begin() + 1, circles->end());
  const std::size_t count = petals.size();
  std::vector<double> gaps(count);
  for (std::size_t j = 0; j < count; ++j) {
    const Circle& a = petals[j];
    const Circle& b = petals[(j + 1) % count];
    const double ta = std::atan2(a.cy() - central.cy(), a.cx() - central.cx());
    const double tb = std::atan2(b.cy() - central.cy(), b.cx() - central.cx());
    double gap = std::fmod(tb - ta, 2.0 * std::numbers::pi);
    if (gap < 0.0) gap += 2.0 * std::numbers::pi;
    gaps[j] = gap;
  }
  return FlowerLayout{central, std::move(petals), std::move(gaps)};
}

std::string render_svg(const FlowerDocument& doc) {
  if (!doc.circles || doc.circles->empty()) {
    throw DomainError("rendering needs a document with circles");
  }
  // SVG y grows downwards; flip so the flower keeps its orientation.
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const Circle& c : *doc.circles) {
    min_x = std::min(min_x, c.cx() - c.r());
    max_x = std::max(max_x, c.cx() + c.r());
    min_y = std::min(min_y, -c.cy() - c.r());
    max_y = std::max(max_y, -c.cy() + c.r());
  }
  const double width = max_x - min_x;
  const double height = max_y - min_y;
  const double stroke = 0.005 * std::max(width, height);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
         display(min_x - 0.1 * width) + " " + display(min_y - 0.1 * height) + " " +
         display(1.2 * width) + " " + display(1.2 * height) + "\">\n";
  for (std::size_t j = 0; j < doc.circles->size(); ++j) {
    const Circle& c = (*doc.circles)[j];
    const bool central = j == 0;
    out += "  <circle cx=\"" + display(c.cx()) + "\" cy=\"" + display(-c.cy()) +
           "\" r=\"" + display(c.r()) + "\" fill=\"none\" stroke=\"" +
           (central ? "#c0392b" : "#1f2d3d") + "\" stroke-width=\"" +
           display(central ? 2.0 * stroke : stroke) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace descartes
