#include "dcup/movegraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <memory>
#include <mutex>
#include <queue>
#include <sstream>

namespace dcup {

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::I: return "I";
    case MoveKind::II: return "II";
    case MoveKind::III: return "III";
    case MoveKind::IV: return "IV";
    case MoveKind::Ip: return "I'";
    case MoveKind::IIp: return "II'";
    case MoveKind::IIIp: return "III'";
    case MoveKind::IVp: return "IV'";
  }
  return "?";
}

namespace {

// Arc on pattern slots; b < 0 marks a ray at slot a.
struct Slot {
  int a;
  int b;
  bool dotted;
  bool operator==(const Slot&) const = default;
};

struct Pattern {
  MoveKind kind;
  std::vector<Slot> lhs;
  std::vector<Slot> rhs;
};

const std::vector<Pattern>& patterns() {
  static const std::vector<Pattern> table = {
      {MoveKind::I, {{0, 1, false}, {2, 3, false}}, {{0, 3, false}, {1, 2, false}}},
      {MoveKind::II, {{0, 3, false}, {1, 2, false}}, {{0, 1, true}, {2, 3, true}}},
      {MoveKind::III, {{0, 1, true}, {2, 3, false}}, {{0, 3, true}, {1, 2, false}}},
      {MoveKind::IV, {{0, 3, true}, {1, 2, false}}, {{0, 1, false}, {2, 3, true}}},
      {MoveKind::Ip, {{0, 1, false}, {2, -1, false}}, {{0, -1, false}, {1, 2, false}}},
      {MoveKind::IIp, {{0, -1, false}, {1, 2, false}}, {{0, 1, true}, {2, -1, true}}},
      {MoveKind::IIIp, {{0, 1, true}, {2, -1, false}}, {{0, -1, true}, {1, 2, false}}},
      {MoveKind::IVp, {{0, -1, true}, {1, 2, false}}, {{0, 1, false}, {2, -1, true}}},
  };
  return table;
}

struct ArcRef {
  bool cup;
  std::size_t index;
  std::vector<int> ends;
  bool dotted;
};

std::vector<ArcRef> arcs_of(const CupDiagram& d) {
  std::vector<ArcRef> out;
  for (std::size_t i = 0; i < d.cups().size(); ++i) {
    const Cup& c = d.cups()[i];
    out.push_back({true, i, {c.left, c.right}, c.dotted});
  }
  for (std::size_t i = 0; i < d.rays().size(); ++i) {
    const Ray& r = d.rays()[i];
    out.push_back({false, i, {r.at}, r.dotted});
  }
  return out;
}

bool same_slots(std::vector<Slot> x, std::vector<Slot> y) {
  auto key = [](const Slot& s) { return std::tuple(s.a, s.b, s.dotted); };
  auto cmp = [&](const Slot& p, const Slot& q) { return key(p) < key(q); };
  std::sort(x.begin(), x.end(), cmp);
  std::sort(y.begin(), y.end(), cmp);
  return x == y;
}

// Applies every pattern whose `from` side matches a pair of arcs of d.
std::vector<Step> rewire(const CupDiagram& d, bool forward) {
  std::vector<Step> out;
  auto arcs = arcs_of(d);
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      if (!arcs[x].cup && !arcs[y].cup) continue;
      std::vector<int> pos = arcs[x].ends;
      pos.insert(pos.end(), arcs[y].ends.begin(), arcs[y].ends.end());
      std::sort(pos.begin(), pos.end());
      auto slot = [&](int v) {
        return static_cast<int>(std::lower_bound(pos.begin(), pos.end(), v) - pos.begin());
      };
      std::vector<Slot> have;
      for (const ArcRef* r : {&arcs[x], &arcs[y]}) {
        if (r->cup)
          have.push_back({slot(r->ends[0]), slot(r->ends[1]), r->dotted});
        else
          have.push_back({slot(r->ends[0]), -1, r->dotted});
      }
      for (const auto& p : patterns()) {
        const auto& from = forward ? p.lhs : p.rhs;
        const auto& to = forward ? p.rhs : p.lhs;
        if (!same_slots(have, from)) continue;
        RawArcs raw{d.k(), {}, {}};
        for (const auto& r : arcs) {
          if (&r == &arcs[x] || &r == &arcs[y]) continue;
          if (r.cup)
            raw.cups.push_back({r.ends[0], r.ends[1], r.dotted});
          else
            raw.rays.push_back({r.ends[0], r.dotted});
        }
        for (const auto& s : to) {
          if (s.b < 0)
            raw.rays.push_back({pos[s.a], s.dotted});
          else
            raw.cups.push_back({pos[s.a], pos[s.b], s.dotted});
        }
        if (auto t = try_validate(raw)) out.push_back({*t, Move{p.kind, pos}});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Step& a, const Step& b) {
    if (!(a.target == b.target)) return a.target < b.target;
    return a.move.kind < b.move.kind;
  });
  return out;
}

}  // namespace

std::vector<Step> successors(const CupDiagram& a) { return rewire(a, true); }

std::vector<Step> predecessors(const CupDiagram& a) { return rewire(a, false); }

MoveGraph::MoveGraph(int k, Parity parity, TieBreak tie) : k_(k), parity_(parity) {
  if (parity == Parity::All) throw std::invalid_argument("move graphs are built per parity");
  nodes_ = maximal_diagrams(k, parity);
  const std::size_t n = nodes_.size();
  for (std::size_t i = 0; i < n; ++i) index_[nodes_[i].encode()] = i;
  out_.assign(n, {});
  std::vector<std::vector<std::size_t>> undirected(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& s : successors(nodes_[i])) {
      auto it = index_.find(s.target.encode());
      if (it == index_.end()) throw std::logic_error("move left B_k: " + s.target.encode());
      arrows_.push_back({i, it->second, s.move});
      out_[i].push_back(it->second);
      undirected[i].push_back(it->second);
      undirected[it->second].push_back(i);
    }
  }
  // topological order, ties broken on canonical encoding
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& a : arrows_) ++indeg[a.to];
  auto cmp = [tie](std::size_t x, std::size_t y) {
    return tie == TieBreak::Lexicographic ? x > y : x < y;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> ready(cmp);
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(i);
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order_.push_back(v);
    for (std::size_t w : out_[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (order_.size() != n) throw std::logic_error("arrow relation has a cycle");
  rank_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank_[order_[i]] = i;

  dist_.assign(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> q{s};
    dist_[s][s] = 0;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop_front();
      for (std::size_t w : undirected[v])
        if (dist_[s][w] < 0) {
          dist_[s][w] = dist_[s][v] + 1;
          q.push_back(w);
        }
    }
  }
  reach_.assign(n, std::vector<char>(n, 0));
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    std::size_t v = *it;
    reach_[v][v] = 1;
    for (std::size_t w : out_[v])
      for (std::size_t u = 0; u < n; ++u)
        if (reach_[w][u]) reach_[v][u] = 1;
  }
}

std::optional<std::size_t> MoveGraph::index(const CupDiagram& d) const {
  auto it = index_.find(d.encode());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool MoveGraph::connected() const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (dist_[0][i] < 0) return false;
  return true;
}

int MoveGraph::dist(std::size_t a, std::size_t b) const { return dist_[a][b]; }

bool MoveGraph::reaches(std::size_t a, std::size_t b) const { return reach_[a][b] != 0; }

std::string MoveGraph::dot() const {
  std::ostringstream os;
  os << "digraph B" << k_ << "_" << parity_name(parity_) << " {\n";
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    os << "  n" << i << " [label=\"" << nodes_[i].encode() << "\"];\n";
  for (const auto& a : arrows_)
    os << "  n" << a.from << " -> n" << a.to << " [label=\"" << move_name(a.move.kind) << "\"];\n";
  os << "}\n";
  return os.str();
}

const MoveGraph& move_graph(int k, Parity parity) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MoveGraph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, static_cast<int>(parity));
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<MoveGraph>(k, parity);
  return *slot;
}

namespace {

struct Located {
  const MoveGraph* g;
  std::size_t a;
  std::size_t b;
};

std::optional<Located> locate(const CupDiagram& a, const CupDiagram& b) {
  if (a.k() != b.k()) throw std::invalid_argument("diagrams differ in k");
  if (a.parity() != b.parity()) return std::nullopt;
  const MoveGraph& g = move_graph(a.k(), a.parity() == 0 ? Parity::Even : Parity::Odd);
  auto ia = g.index(a);
  auto ib = g.index(b);
  if (!ia || !ib) throw std::invalid_argument("distance is defined on maximal-cup diagrams only");
  return Located{&g, *ia, *ib};
}

}  // namespace

std::optional<int> distance(const CupDiagram& a, const CupDiagram& b) {
  auto loc = locate(a, b);
  if (!loc) return std::nullopt;
  int d = loc->g->dist(loc->a, loc->b);
  if (d < 0) return std::nullopt;
  return d;
}

CupDiagram geodesic_meet(const CupDiagram& a, const CupDiagram& b) {
  auto loc = locate(a, b);
  if (!loc || loc->g->dist(loc->a, loc->b) < 0)
    throw NoFiniteDistance("no finite distance between " + a.encode() + " and " + b.encode());
  const MoveGraph& g = *loc->g;
  const int d = g.dist(loc->a, loc->b);
  for (std::size_t c : g.total_order()) {
    if (g.dist(loc->a, c) + g.dist(c, loc->b) != d) continue;
    if (g.reaches(c, loc->a) && g.reaches(c, loc->b)) return g.nodes()[c];
  }
  throw std::logic_error("no geodesic meet for " + a.encode() + " and " + b.encode());
}

NestingCensus nesting_census(const CupDiagram& a) {
  NestingCensus out;
  out.cups = a.cups();
  const std::size_t n = out.cups.size();
  out.degree.assign(n, -1);
  out.outer.assign(n, false);
  out.special.assign(n, false);
  auto outer_among = [&](std::size_t i, const std::vector<char>& alive) {
    const Cup& c = out.cups[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (!alive[j] || j == i) continue;
      const Cup& o = out.cups[j];
      if (o.left < c.left && c.right < o.right) return false;
      if (o.dotted && o.left > c.right) return false;
    }
    return true;
  };
  std::vector<char> alive(n, 1);
  for (int level = 0;; ++level) {
    std::vector<std::size_t> layer;
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i] && outer_among(i, alive)) layer.push_back(i);
    if (layer.empty()) break;
    for (std::size_t i : layer) {
      out.degree[i] = level;
      alive[i] = 0;
      if (level == 0) out.outer[i] = true;
    }
  }
  for (const auto& s : predecessors(a)) {
    if (!is_primed(s.move.kind)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Cup& c = out.cups[i];
      if (s.target.partner(c.left) != c.right) out.special[i] = true;
    }
  }
  return out;
}

GammaForest gamma_forest(const CupDiagram& a) {
  NestingCensus nc = nesting_census(a);
  GammaForest g{a, nc.cups, {}, {}, {}};
  auto find = [&](int left) {
    for (std::size_t i = 0; i < nc.cups.size(); ++i)
      if (nc.cups[i].left == left) return i;
    throw std::logic_error("cup not found");
  };
  for (const auto& s : predecessors(a)) {
    if (is_primed(s.move.kind)) continue;
    // the two cups of a produced by the move
    std::vector<std::size_t> touched;
    for (int v : s.move.positions)
      if (a.is_left_end(v)) touched.push_back(find(v));
    if (touched.size() != 2) throw std::logic_error("move does not touch two cups");
    std::size_t x = touched[0];
    std::size_t y = touched[1];
    if (nc.degree[x] == nc.degree[y]) continue;
    if (nc.degree[x] > nc.degree[y]) std::swap(x, y);
    auto e = std::make_pair(x, y);
    if (std::find(g.edges.begin(), g.edges.end(), e) == g.edges.end()) g.edges.push_back(e);
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (std::size_t i = 0; i < nc.cups.size(); ++i) {
    if (nc.outer[i]) g.roots.push_back(i);
    if (nc.special[i]) g.special_roots.push_back(i);
  }
  return g;
}

namespace {

std::vector<int> cells(const CupDiagram& a, bool boundary_only) {
  GammaForest g = gamma_forest(a);
  const std::size_t n = g.vertices.size();
  // index set: roots first, then edges
  const std::size_t nr = g.roots.size();
  const std::size_t m = nr + g.edges.size();
  std::vector<int> dims;
  for (std::size_t J = 0; J < (std::size_t{1} << m); ++J) {
    bool hits = (J >> nr) != 0;
    if (a.k() % 2 == 1) {
      for (std::size_t r = 0; r < nr; ++r)
        if (((J >> r) & 1) &&
            std::find(g.special_roots.begin(), g.special_roots.end(), g.roots[r]) != g.special_roots.end())
          hits = true;
    }
    if (boundary_only && !hits) continue;
    dims.push_back(2 * static_cast<int>(n - std::popcount(J)));
  }
  std::sort(dims.rbegin(), dims.rend());
  return dims;
}

}  // namespace

std::vector<int> cell_census(const CupDiagram& a) { return cells(a, false); }

std::vector<int> boundary_census(const CupDiagram& a) { return cells(a, true); }

std::size_t free_cell_count(const CupDiagram& a) {
  return cell_census(a).size() - boundary_census(a).size();
}

}  // namespace dcup
