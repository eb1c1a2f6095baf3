#include "dcup/orientation.hpp"

#include <algorithm>
#include <numeric>

namespace dcup {

Weight Weight::parse(const std::string& text) {
  std::vector<bool> up;
  for (char ch : text) {
    if (ch == '^')
      up.push_back(true);
    else if (ch == 'v')
      up.push_back(false);
    else
      throw std::invalid_argument("weight symbols are '^' and 'v': " + text);
  }
  return Weight(std::move(up));
}

std::string Weight::str() const {
  std::string s;
  for (bool u : up_) s += u ? '^' : 'v';
  return s;
}

int ComponentDecomposition::circles() const {
  return static_cast<int>(std::count_if(classes.begin(), classes.end(),
                                        [](const Component& c) { return c.circle; }));
}

int ComponentDecomposition::eps(int i, int j) const {
  if (class_of[i] != class_of[j]) return 0;
  return sign[i] * sign[j];
}

int OrientedCircleDiagram::clockwise_circles() const {
  return static_cast<int>(std::count(turns.begin(), turns.end(), Turn::Clockwise));
}

bool clockwise_arc(bool dotted, bool left_up, bool right_up) {
  if (dotted) return !left_up && !right_up;
  return left_up && !right_up;
}

namespace {

bool arc_ok(const CupDiagram& c, const Weight& w, int v) {
  int p = c.partner(v);
  if (p == 0) return w.up(v) == c.dotted_at(v);
  return (w.up(v) == w.up(p)) == c.dotted_at(v);
}

int half_degree(const Weight& w, const CupDiagram& c) {
  if (w.size() != c.k()) throw InconsistentOrientation("weight length differs from k");
  int deg = 0;
  for (int v = 1; v <= c.k(); ++v) {
    if (!arc_ok(c, w, v))
      throw InconsistentOrientation("weight " + w.str() + " does not orient " + c.encode());
    if (c.is_left_end(v) && clockwise_arc(c.dotted_at(v), w.up(v), w.up(c.partner(v)))) ++deg;
  }
  return deg;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

bool is_oriented(const Weight& w, const CupDiagram& c) {
  if (w.size() != c.k()) return false;
  for (int v = 1; v <= c.k(); ++v)
    if (!arc_ok(c, w, v)) return false;
  return true;
}

int degree(const Weight& w, const CupDiagram& c) { return half_degree(w, c); }

int degree(const CapDiagram& b, const Weight& w) { return half_degree(w, b.shape()); }

int degree(const OrientedCircleDiagram& d) {
  return degree(d.cap, d.weight) + degree(d.weight, d.cup);
}

std::vector<Weight> orientations_of_cup(const CupDiagram& c) {
  std::vector<Weight> out;
  const auto& cups = c.cups();
  const std::size_t n = cups.size();
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    Weight w(std::vector<bool>(c.k(), false));
    for (const auto& r : c.rays()) w.set(r.at, r.dotted);
    for (std::size_t i = 0; i < n; ++i) {
      bool right_up = (m >> i) & 1;
      w.set(cups[i].right, right_up);
      w.set(cups[i].left, cups[i].dotted ? right_up : !right_up);
    }
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ComponentDecomposition decompose(const CapDiagram& b, const CupDiagram& c) {
  const CupDiagram& top = b.shape();
  const int k = c.k();
  if (top.k() != k) throw std::invalid_argument("cap and cup diagrams differ in k");
  Dsu dsu(k + 1);
  for (const auto& x : top.cups()) dsu.unite(x.left, x.right);
  for (const auto& x : c.cups()) dsu.unite(x.left, x.right);

  ComponentDecomposition dec;
  dec.k = k;
  dec.class_of.assign(k + 1, -1);
  dec.sign.assign(k + 1, 0);
  std::vector<int> index_of_root(k + 1, -1);
  for (int v = 1; v <= k; ++v) {
    int r = dsu.find(v);
    if (index_of_root[r] < 0) {
      index_of_root[r] = static_cast<int>(dec.classes.size());
      dec.classes.push_back(Component{true, v, {}});
    }
    Component& cls = dec.classes[index_of_root[r]];
    cls.vertices.push_back(v);
    cls.mx = std::max(cls.mx, v);
    if (top.is_ray(v) || c.is_ray(v)) cls.circle = false;
    dec.class_of[v] = index_of_root[r];
  }
  // signs by a search from mx; every other arc closes a second path and is checked
  for (const auto& cls : dec.classes) {
    std::vector<int> todo{cls.mx};
    dec.sign[cls.mx] = 1;
    while (!todo.empty()) {
      int v = todo.back();
      todo.pop_back();
      for (const CupDiagram* half : {&top, &c}) {
        int p = half->partner(v);
        if (p == 0) continue;
        int s = half->dotted_at(v) ? dec.sign[v] : -dec.sign[v];
        if (dec.sign[p] == 0) {
          dec.sign[p] = s;
          todo.push_back(p);
        } else if (dec.sign[p] != s) {
          dec.path_independent = false;
        }
      }
    }
  }
  return dec;
}

std::vector<OrientedCircleDiagram> orient_circle_diagram(const CapDiagram& b, const CupDiagram& c) {
  ComponentDecomposition dec = decompose(b, c);
  std::vector<OrientedCircleDiagram> out;
  if (!dec.path_independent) return out;
  const CupDiagram& top = b.shape();
  const int k = c.k();
  // forced value of the label at mx for each class, -1 if free
  std::vector<int> forced(dec.classes.size(), -1);
  for (int v = 1; v <= k; ++v) {
    for (const CupDiagram* half : {&top, &c}) {
      if (!half->is_ray(v)) continue;
      bool up_v = half->dotted_at(v);
      int at_mx = (dec.sign[v] == 1) ? up_v : !up_v;
      int& f = forced[dec.class_of[v]];
      if (f >= 0 && f != at_mx) return out;
      f = at_mx;
    }
  }
  std::vector<std::size_t> free_classes;
  for (std::size_t i = 0; i < dec.classes.size(); ++i)
    if (dec.classes[i].circle) free_classes.push_back(i);
  for (std::size_t m = 0; m < (std::size_t{1} << free_classes.size()); ++m) {
    std::vector<int> at_mx = forced;
    for (std::size_t j = 0; j < free_classes.size(); ++j)
      at_mx[free_classes[j]] = ((m >> j) & 1) ? 1 : 0;
    Weight w(std::vector<bool>(k, false));
    for (int v = 1; v <= k; ++v) {
      bool mxup = at_mx[dec.class_of[v]] == 1;
      w.set(v, dec.sign[v] == 1 ? mxup : !mxup);
    }
    OrientedCircleDiagram d{b, w, c, 0, dec, {}};
    for (std::size_t i = 0; i < dec.classes.size(); ++i) {
      if (!dec.classes[i].circle)
        d.turns.push_back(Turn::Line);
      else
        d.turns.push_back(at_mx[i] == 1 ? Turn::Anticlockwise : Turn::Clockwise);
    }
    d.degree = degree(d);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const OrientedCircleDiagram& x, const OrientedCircleDiagram& y) {
    return x.weight < y.weight;
  });
  return out;
}

std::optional<MinDegree> min_degree_element(const CupDiagram& a, const CupDiagram& b) {
  auto all = orient_circle_diagram(star(a), b);
  for (auto& d : all) {
    if (d.clockwise_circles() == 0) {
      int deg = d.degree;
      return MinDegree{std::move(d), deg};
    }
  }
  return std::nullopt;
}

CupDiagram cup_of_weight(const Weight& w) {
  const int k = w.size();
  RawArcs raw{k, {}, {}};
  std::vector<int> open;
  std::vector<int> loose;
  for (int v = 1; v <= k; ++v) {
    if (!w.up(v)) {
      open.push_back(v);
    } else if (!open.empty()) {
      raw.cups.push_back({open.back(), v, false});
      open.pop_back();
    } else {
      loose.push_back(v);
    }
  }
  std::size_t i = 0;
  for (; i + 1 < loose.size(); i += 2) raw.cups.push_back({loose[i], loose[i + 1], true});
  if (i < loose.size()) raw.rays.push_back({loose[i], true});
  for (int v : open) raw.rays.push_back({v, false});
  return validate(raw);
}

}  // namespace dcup
