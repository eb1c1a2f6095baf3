#include "dcup/render.hpp"

#include <algorithm>
#include <sstream>

namespace dcup {

Format parse_format(const std::string& s) {
  if (s == "ascii") return Format::Ascii;
  if (s == "tikz") return Format::Tikz;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("unknown render format: " + s);
}

std::string render(const CupDiagram& d, Format f) {
  switch (f) {
    case Format::Ascii: return render_ascii(d);
    case Format::Tikz: return render_tikz(d);
    case Format::Json: return to_json(d).dump(2) + "\n";
  }
  return {};
}

namespace {

void rstrip(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::string render_ascii(const CupDiagram& d) {
  const int width = 2 * d.k() - 1;
  std::string top(width, ' ');
  std::string dots(width, ' ');
  for (const auto& c : d.cups()) {
    top[2 * (c.left - 1)] = '(';
    top[2 * (c.right - 1)] = ')';
    if (c.dotted) dots[c.left + c.right - 2] = '*';
  }
  for (const auto& r : d.rays()) {
    top[2 * (r.at - 1)] = '|';
    if (r.dotted) dots[2 * (r.at - 1)] = '*';
  }
  rstrip(top);
  rstrip(dots);
  return top + "\n" + dots + "\n";
}

std::string render_tikz(const CupDiagram& d) {
  double depth = 0.5;
  for (const auto& c : d.cups()) depth = std::max(depth, (c.right - c.left) / 2.0 + 0.5);
  std::ostringstream os;
  os << "\\documentclass[tikz]{standalone}\n"
     << "\\begin{document}\n"
     << "\\begin{tikzpicture}[thick]\n"
     << "% " << d.encode() << "\n";
  for (const auto& c : d.cups()) {
    double r = (c.right - c.left) / 2.0;
    os << "\\draw (" << c.left << ",0) arc (180:360:" << num(r) << ");\n";
    if (c.dotted) os << "\\fill (" << num(c.left + r) << "," << num(-r) << ") circle (3pt);\n";
  }
  for (const auto& ray : d.rays()) {
    os << "\\draw (" << ray.at << ",0) -- (" << ray.at << "," << num(-depth) << ");\n";
    if (ray.dotted) os << "\\fill (" << ray.at << "," << num(-depth / 2) << ") circle (3pt);\n";
  }
  for (int v = 1; v <= d.k(); ++v) os << "\\fill (" << v << ",0) circle (1.5pt);\n";
  os << "\\end{tikzpicture}\n"
     << "\\end{document}\n";
  return os.str();
}

nlohmann::ordered_json to_json(const CupDiagram& d) {
  nlohmann::ordered_json j;
  j["k"] = d.k();
  j["cups"] = nlohmann::ordered_json::array();
  for (const auto& c : d.cups()) {
    nlohmann::ordered_json e;
    e["from"] = c.left;
    e["to"] = c.right;
    e["dotted"] = c.dotted;
    j["cups"].push_back(e);
  }
  j["rays"] = nlohmann::ordered_json::array();
  for (const auto& r : d.rays()) {
    nlohmann::ordered_json e;
    e["at"] = r.at;
    e["dotted"] = r.dotted;
    j["rays"].push_back(e);
  }
  return j;
}

CupDiagram diagram_from_json(const nlohmann::json& j) {
  RawArcs raw;
  raw.k = j.at("k").get<int>();
  for (const auto& c : j.at("cups"))
    raw.cups.push_back({c.at("from").get<int>(), c.at("to").get<int>(), c.at("dotted").get<bool>()});
  for (const auto& r : j.at("rays")) raw.rays.push_back({r.at("at").get<int>(), r.at("dotted").get<bool>()});
  return validate(raw);
}

}  // namespace dcup
