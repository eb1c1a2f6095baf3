#include "dcup/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace dcup {

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::EmptyDiagram: return "EmptyDiagram";
    case Violation::VertexOutOfRange: return "VertexOutOfRange";
    case Violation::MalformedCup: return "MalformedCup";
    case Violation::VertexUnused: return "VertexUnused";
    case Violation::VertexReused: return "VertexReused";
    case Violation::Crossing: return "Crossing";
    case Violation::RayUnderCup: return "RayUnderCup";
    case Violation::DotInaccessible: return "DotInaccessible";
  }
  return "?";
}

namespace {

std::string summarize(const std::vector<Issue>& issues) {
  std::string out = "invalid diagram:";
  for (const auto& i : issues) {
    out += ' ';
    out += violation_name(i.kind);
    out += " (" + i.detail + ");";
  }
  out.pop_back();
  return out;
}

std::string cup_text(const Cup& c) {
  return std::string(c.dotted ? "c*(" : "c(") + std::to_string(c.left) + "," +
         std::to_string(c.right) + ")";
}

std::string ray_text(const Ray& r) {
  return std::string(r.dotted ? "r*(" : "r(") + std::to_string(r.at) + ")";
}

}  // namespace

ValidationError::ValidationError(std::vector<Issue> issues)
    : std::runtime_error(summarize(issues)), issues_(std::move(issues)) {}

bool ValidationError::has(Violation v) const {
  return std::any_of(issues_.begin(), issues_.end(),
                     [v](const Issue& i) { return i.kind == v; });
}

std::size_t CupDiagram::dots() const {
  std::size_t n = 0;
  for (const auto& c : cups_) n += c.dotted;
  for (const auto& r : rays_) n += r.dotted;
  return n;
}

RawArcs CupDiagram::raw() const { return RawArcs{k_, cups_, rays_}; }

std::vector<Issue> check(const RawArcs& raw) {
  std::vector<Issue> out;
  const int k = raw.k;
  if (k < 1) {
    out.push_back({Violation::EmptyDiagram, "k must be at least 1"});
    return out;
  }
  auto in_range = [k](int v) { return v >= 1 && v <= k; };
  std::vector<int> uses(k + 1, 0);
  std::vector<Cup> cups;
  std::vector<Ray> rays;
  for (const auto& c : raw.cups) {
    bool ok = true;
    for (int v : {c.left, c.right}) {
      if (!in_range(v)) {
        out.push_back({Violation::VertexOutOfRange, cup_text(c) + " uses " + std::to_string(v)});
        ok = false;
      } else {
        ++uses[v];
      }
    }
    if (c.left >= c.right) {
      out.push_back({Violation::MalformedCup, cup_text(c) + " needs left < right"});
      ok = false;
    }
    if (ok) cups.push_back(c);
  }
  for (const auto& r : raw.rays) {
    if (!in_range(r.at)) {
      out.push_back({Violation::VertexOutOfRange, ray_text(r)});
    } else {
      ++uses[r.at];
      rays.push_back(r);
    }
  }
  for (int v = 1; v <= k; ++v) {
    if (uses[v] == 0) out.push_back({Violation::VertexUnused, "vertex " + std::to_string(v)});
    if (uses[v] > 1) out.push_back({Violation::VertexReused, "vertex " + std::to_string(v)});
  }
  std::sort(cups.begin(), cups.end());
  std::sort(rays.begin(), rays.end());
  for (std::size_t x = 0; x < cups.size(); ++x) {
    for (std::size_t y = x + 1; y < cups.size(); ++y) {
      const Cup& a = cups[x];
      const Cup& b = cups[y];
      if (a.left < b.left && b.left < a.right && a.right < b.right)
        out.push_back({Violation::Crossing, cup_text(a) + " and " + cup_text(b)});
    }
  }
  auto nested = [&](const Cup& c) {
    return std::any_of(cups.begin(), cups.end(), [&](const Cup& o) {
      return o.left < c.left && c.right < o.right;
    });
  };
  for (const auto& r : rays) {
    for (const auto& c : cups)
      if (c.left < r.at && r.at < c.right)
        out.push_back({Violation::RayUnderCup, ray_text(r) + " under " + cup_text(c)});
  }
  for (const auto& c : cups) {
    if (!c.dotted) continue;
    if (nested(c)) out.push_back({Violation::DotInaccessible, cup_text(c) + " is nested"});
    for (const auto& r : rays)
      if (r.at < c.left)
        out.push_back({Violation::DotInaccessible, cup_text(c) + " right of " + ray_text(r)});
  }
  for (std::size_t x = 1; x < rays.size(); ++x)
    if (rays[x].dotted)
      out.push_back({Violation::DotInaccessible, ray_text(rays[x]) + " is not the leftmost ray"});
  return out;
}

CupDiagram validate(const RawArcs& raw) {
  auto issues = check(raw);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  CupDiagram d;
  d.k_ = raw.k;
  d.cups_ = raw.cups;
  d.rays_ = raw.rays;
  std::sort(d.cups_.begin(), d.cups_.end());
  std::sort(d.rays_.begin(), d.rays_.end());
  d.mate_.assign(raw.k + 1, 0);
  d.dot_.assign(raw.k + 1, 0);
  for (const auto& c : d.cups_) {
    d.mate_[c.left] = c.right;
    d.mate_[c.right] = c.left;
    d.dot_[c.left] = d.dot_[c.right] = c.dotted;
  }
  for (const auto& r : d.rays_) d.dot_[r.at] = r.dotted;
  std::string code = std::to_string(raw.k) + ": ";
  bool first = true;
  for (int v = 1; v <= raw.k; ++v) {
    if (d.mate_[v] != 0 && d.mate_[v] < v) continue;
    if (!first) code += ';';
    first = false;
    if (d.mate_[v] == 0)
      code += ray_text(Ray{v, d.dot_[v] != 0});
    else
      code += cup_text(Cup{v, d.mate_[v], d.dot_[v] != 0});
  }
  d.code_ = std::move(code);
  return d;
}

std::optional<CupDiagram> try_validate(const RawArcs& raw) {
  if (!check(raw).empty()) return std::nullopt;
  return validate(raw);
}

bool matches(Parity p, int parity) {
  return p == Parity::All || (p == Parity::Even) == (parity == 0);
}

Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  if (s == "all") return Parity::All;
  throw std::invalid_argument("parity must be even, odd or all: " + s);
}

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::All: return "all";
  }
  return "?";
}

namespace {

// Undecorated shapes: each vertex opens a cup, closes the innermost open cup,
// or carries a ray when nothing is open.
void shapes(int k, int v, std::vector<int>& stack, RawArcs& cur, std::vector<RawArcs>& out) {
  if (v > k) {
    if (stack.empty()) out.push_back(cur);
    return;
  }
  int remaining = k - v + 1;
  if (static_cast<int>(stack.size()) > remaining) return;
  if (stack.empty()) {
    cur.rays.push_back({v, false});
    shapes(k, v + 1, stack, cur, out);
    cur.rays.pop_back();
  }
  stack.push_back(v);
  shapes(k, v + 1, stack, cur, out);
  stack.pop_back();
  if (!stack.empty()) {
    int l = stack.back();
    stack.pop_back();
    cur.cups.push_back({l, v, false});
    shapes(k, v + 1, stack, cur, out);
    cur.cups.pop_back();
    stack.push_back(l);
  }
}

}  // namespace

DiagramSet enumerate(int k, CupFilter filter, Parity parity, bool dot_free) {
  DiagramSet set{k, parity, filter, dot_free, {}};
  if (k < 1) return set;
  std::vector<RawArcs> base;
  std::vector<int> stack;
  RawArcs cur{k, {}, {}};
  shapes(k, 1, stack, cur, base);
  const int maxcups = k / 2;
  for (auto& s : base) {
    int n = static_cast<int>(s.cups.size());
    if (filter.kind == CupFilter::Kind::Maximal && n != maxcups) continue;
    if (filter.kind == CupFilter::Kind::Exact && n != filter.count) continue;
    // dottable arcs: top-level cups left of every ray, and the leftmost ray
    int first_ray = k + 1;
    for (const auto& r : s.rays) first_ray = std::min(first_ray, r.at);
    std::vector<std::pair<bool, std::size_t>> slots;
    for (std::size_t i = 0; i < s.cups.size(); ++i) {
      const Cup& c = s.cups[i];
      bool top = std::none_of(s.cups.begin(), s.cups.end(), [&](const Cup& o) {
        return o.left < c.left && c.right < o.right;
      });
      if (top && c.right < first_ray) slots.push_back({true, i});
    }
    for (std::size_t i = 0; i < s.rays.size(); ++i)
      if (s.rays[i].at == first_ray) slots.push_back({false, i});
    const std::size_t combos = dot_free ? 1 : (std::size_t{1} << slots.size());
    for (std::size_t m = 0; m < combos; ++m) {
      RawArcs r = s;
      int dots = 0;
      for (std::size_t b = 0; b < slots.size(); ++b) {
        if (!((m >> b) & 1)) continue;
        ++dots;
        if (slots[b].first)
          r.cups[slots[b].second].dotted = true;
        else
          r.rays[slots[b].second].dotted = true;
      }
      if (!matches(parity, dots % 2)) continue;
      set.members.push_back(validate(r));
    }
  }
  std::sort(set.members.begin(), set.members.end());
  return set;
}

std::vector<CupDiagram> maximal_diagrams(int k, Parity parity) {
  return enumerate(k, CupFilter::maximal(), parity).members;
}

std::optional<CupDiagram> toggle_first_dot(const CupDiagram& d) {
  RawArcs r = d.raw();
  for (auto& c : r.cups)
    if (c.left == 1) c.dotted = !c.dotted;
  for (auto& ray : r.rays)
    if (ray.at == 1) ray.dotted = !ray.dotted;
  return try_validate(r);
}

}  // namespace dcup
