#include "dcup/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dcup/diagram.hpp"
#include "dcup/dsl.hpp"
#include "dcup/movegraph.hpp"
#include "dcup/orientation.hpp"
#include "dcup/ringcalc.hpp"
#include "dcup/springer.hpp"
#include "dcup/tableaux.hpp"

namespace dcup {

bool SelftestReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { r_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++r_.checks;
    if (ok) return;
    r_.passed = false;
    if (r_.failures.size() < 5) r_.failures.push_back(what);
  }

  SuiteResult run(const std::function<void(Suite&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(*this);
    } catch (const std::exception& e) {
      r_.passed = false;
      r_.failures.push_back(std::string("exception: ") + e.what());
    }
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r_;
  }

 private:
  SuiteResult r_;
};

std::size_t binomial(int n, int r) {
  std::size_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

std::string at_k(int k) { return "k=" + std::to_string(k); }

void diagrams_suite(Suite& s, int k_max) {
  for (int k = 1; k <= k_max; ++k) {
    const auto all = enumerate(k, CupFilter::any()).members;
    std::size_t levels = 0;
    for (std::size_t c : filtration_census(k)) levels += c;
    s.expect(levels == (std::size_t{1} << k), at_k(k) + ": filtration census sums to 2^k");
    s.expect(all.size() == levels, at_k(k) + ": enumerate(any) agrees with the census");
    for (const auto& d : all) s.expect(parse_dsl(d.encode()) == d, d.encode() + " survives a DSL round trip");
    const int m = (k + 1) / 2;
    s.expect(maximal_diagrams(k).size() == binomial(2 * m, m), at_k(k) + ": |B_k| is central binomial");
    s.expect(maximal_diagrams(k, Parity::Even).size() == maximal_diagrams(k, Parity::Odd).size(),
             at_k(k) + ": parities split evenly");
  }
}

void orientation_suite(Suite& s, int k_max) {
  for (int k = 1; k <= std::min(k_max, 8); ++k) {
    for (const auto& a : maximal_diagrams(k)) {
      auto ws = orientations_of_cup(a);
      s.expect(ws.size() == (std::size_t{1} << a.cups().size()), a.encode() + ": 2^cups orientations");
      auto idem = min_degree_element(a, a);
      s.expect(idem && idem->degree == 0, a.encode() + ": idempotent has degree 0");
    }
    for (std::size_t m = 0; m < (std::size_t{1} << k); ++m) {
      std::vector<bool> up(k);
      for (int i = 0; i < k; ++i) up[i] = (m >> i) & 1;
      Weight w(up);
      auto c = cup_of_weight(w);
      s.expect(is_oriented(w, c) && degree(w, c) == 0, w.str() + ": cup_of_weight is a degree-0 orientation");
    }
  }
}

void movegraph_suite(Suite& s, int k_max) {
  for (int k = 2; k <= std::min(k_max, 8); ++k) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      const MoveGraph& mg = move_graph(k, p);
      s.expect(mg.connected(), at_k(k) + ": move graph is connected");
      auto order = mg.total_order();
      std::vector<std::size_t> pos(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
      for (const auto& ar : mg.arrows()) s.expect(pos[ar.from] < pos[ar.to], at_k(k) + ": arrows respect the total order");
      const auto& nodes = mg.nodes();
      for (std::size_t a = 0; a < nodes.size(); ++a) {
        for (std::size_t b = 0; b < nodes.size(); ++b) {
          bool orientable = !orient_circle_diagram(star(nodes[a]), nodes[b]).empty();
          if (!orientable) continue;
          int c = decompose(star(nodes[a]), nodes[b]).circles();
          s.expect(mg.dist(a, b) == k / 2 - c, nodes[a].encode() + " / " + nodes[b].encode() + ": distance law");
        }
      }
    }
  }
}

void gamma_suite(Suite& s, int k_max) {
  for (int k = 1; k <= std::min(k_max, 10); ++k) {
    std::size_t cells = 0;
    for (const auto& a : maximal_diagrams(k)) {
      auto g = gamma_forest(a);
      s.expect(g.roots.size() + g.edges.size() == a.cups().size(), a.encode() + ": roots + edges = cups");
      std::vector<int> indeg(g.vertices.size(), 0);
      for (auto [x, y] : g.edges) ++indeg[y];
      for (std::size_t v = 0; v < indeg.size(); ++v) {
        bool root = std::find(g.roots.begin(), g.roots.end(), v) != g.roots.end();
        s.expect(indeg[v] == (root ? 0 : 1), a.encode() + ": forest in-degrees");
      }
      cells += free_cell_count(a);
    }
    s.expect(cells == (std::size_t{1} << k), at_k(k) + ": free cells sum to 2^k");
  }
}

void rings_suite(Suite& s, int k_max, int jobs) {
  for (int k = 2; k <= std::min(k_max, 10); ++k) {
    auto ring = presentation_ring(k);
    const std::size_t half = std::size_t{1} << (k - 1);
    s.expect(ring.basis_verified, at_k(k) + ": presentation basis");
    s.expect(ring.dimension == half && ring.basis.size() == half, at_k(k) + ": presentation dimension 2^(k-1)");
    for (int t = 0; t <= 3; ++t)
      s.expect(equivariant_specialization(k, Rational(t)) == half, at_k(k) + ": equivariant dimension at t=" + std::to_string(t));
  }
  for (int k = 2; k <= std::min(k_max, 7); ++k) {
    auto ring = presentation_ring(k);
    std::vector<std::size_t> sum;
    for (Parity p : {Parity::Even, Parity::Odd}) {
      auto c = centre(k, p, false, jobs);
      if (sum.size() < c.dims.size()) sum.resize(c.dims.size(), 0);
      for (std::size_t d = 0; d < c.dims.size(); ++d) sum[d] += c.dims[d];
    }
    std::size_t total = 0;
    for (auto x : sum) total += x;
    s.expect(total == (std::size_t{1} << k), at_k(k) + ": centre dimension 2^k");
    std::vector<std::size_t> twice;
    for (auto x : ring.graded) twice.push_back(2 * x);
    while (!sum.empty() && sum.back() == 0) sum.pop_back();
    s.expect(sum == twice, at_k(k) + ": centre graded dimension is twice the presentation");
  }
  for (int k = 2; k <= std::min(k_max, 5); ++k) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      auto ds = maximal_diagrams(k, p);
      for (const auto& a : ds)
        for (const auto& b : ds) {
          if (!quotient_Jab(a, b)) continue;
          auto g1 = gamma(a, b);
          auto g2 = gamma_by_flips(a, b);
          s.expect(g1.from_a.matrix == g2.from_a.matrix && g1.from_b.matrix == g2.from_b.matrix,
                   a.encode() + " / " + b.encode() + ": transported maps agree with circle flips");
        }
    }
  }
}

void fixed_point_suite(Suite& s, int k_max, int jobs) {
  for (int k = 1; k <= std::min(k_max, 7); ++k) {
    std::size_t points = 0;
    for (Parity p : {Parity::Even, Parity::Odd}) {
      auto t = fixed_point_table(k, p, jobs);
      for (std::size_t x = 0; x < t.diagrams.size(); ++x)
        for (std::size_t y = 0; y < t.diagrams.size(); ++y) {
          const auto& cell = t.cells[x][y];
          points += cell.size();
          bool orientable = quotient_Jab(t.diagrams[x], t.diagrams[y]).has_value();
          s.expect(cell.empty() != orientable, at_k(k) + ": empty cells are the non-orientable pairs");
          if (orientable) {
            int c = decompose(star(t.diagrams[x]), t.diagrams[y]).circles();
            s.expect(cell.size() == (std::size_t{1} << c), at_k(k) + ": cell size 2^circles");
          }
        }
    }
    s.expect(kk_graded_dimension(k).total == points, at_k(k) + ": graded K_k total equals fixed points");
  }
}

void tableaux_suite(Suite& s, int k_max) {
  const int n_max = std::min(2 * k_max, 14);
  for (int n = 2; n <= n_max; n += 2) {
    for (int sb = 0; sb <= n / 2; ++sb) {
      Shape sh{n - sb, sb};
      std::string tag = "(" + std::to_string(sh.r) + "," + std::to_string(sh.s) + ")";
      for (const auto& t : enumerate_dt(sh)) s.expect(t.admissible() == t.even_horizontals(), tag + " " + t.word() + ": two admissibility tests agree");
      if (!admissible_shape(sh)) continue;
      auto signed_ts = enumerate_signed(sh);
      auto cups = enumerate(n / 2, CupFilter::exact(sb / 2)).members;
      s.expect(signed_ts.size() == cups.size(), tag + ": signed tableaux match cup diagrams");
      std::set<std::string> image;
      for (const auto& t : signed_ts) {
        auto c = to_cup(t);
        image.insert(c.encode());
        s.expect(from_cup(c) == t, tag + " " + t.base.word() + ": from_cup inverts to_cup");
        s.expect(c.parity() == t.minus_count() % 2, tag + " " + t.base.word() + ": dots and minus signs share parity");
        auto S = cyc(t);
        s.expect(S.shape() == t.base.shape(), tag + ": cycle moves keep the shape");
        s.expect(same_class(cyc_inverse(S), t), tag + " " + t.base.word() + ": cyc_inverse recovers the class");
      }
      s.expect(image.size() == cups.size(), tag + ": to_cup is onto");
      for (const auto& S : enumerate_dt(sh)) s.expect(cyc(cyc_inverse(S)) == S, tag + " " + S.word() + ": cyc after cyc_inverse");
      std::size_t standard = 0;
      for (const auto& T : enumerate_standard({n / 2 - sb / 2, sb / 2})) {
        ++standard;
        s.expect(cups_to_std(std_to_cups(T)) == T, tag + ": standard tableau round trip");
      }
      s.expect(standard == enumerate(n / 2, CupFilter::exact(sb / 2), Parity::All, true).members.size(),
               tag + ": standard tableaux match undecorated diagrams");
    }
  }
  for (int k = 1; k <= std::min(k_max, 8); ++k) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      std::set<Bitableau> seen;
      for (const auto& c : maximal_diagrams(k, p)) {
        auto b = bitableau_of_cup(c);
        seen.insert(b);
        s.expect(cup_of_bitableau(b, p == Parity::Even ? 0 : 1) == c, c.encode() + ": bitableau round trip");
      }
      s.expect(seen.size() == maximal_diagrams(k, p).size(), at_k(k) + ": bitableaux distinct per parity");
    }
    if (k % 2 == 0) {
      auto st = enumerate_stables(k);
      std::set<std::string> image;
      for (const auto& P : st) image.insert(stable_to_cup(P).encode());
      s.expect(st.size() == maximal_diagrams(k).size() && image.size() == st.size(), at_k(k) + ": s-tables biject with B_k");
    }
  }
}

}  // namespace

SelftestReport run_selftest(int k_max, int jobs) {
  if (k_max < 2) throw std::invalid_argument("selftest needs k_max >= 2");
  SelftestReport rep;
  rep.k_max = k_max;
  rep.suites.push_back(Suite("diagrams").run([&](Suite& s) { diagrams_suite(s, k_max); }));
  rep.suites.push_back(Suite("orientation").run([&](Suite& s) { orientation_suite(s, k_max); }));
  rep.suites.push_back(Suite("movegraph").run([&](Suite& s) { movegraph_suite(s, k_max); }));
  rep.suites.push_back(Suite("gamma").run([&](Suite& s) { gamma_suite(s, k_max); }));
  rep.suites.push_back(Suite("rings").run([&](Suite& s) { rings_suite(s, k_max, jobs); }));
  rep.suites.push_back(Suite("fixed-points").run([&](Suite& s) { fixed_point_suite(s, k_max, jobs); }));
  rep.suites.push_back(Suite("tableaux").run([&](Suite& s) { tableaux_suite(s, k_max); }));
  return rep;
}

nlohmann::ordered_json to_json(const SelftestReport& r) {
  nlohmann::ordered_json j;
  j["k_max"] = r.k_max;
  j["passed"] = r.passed();
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : r.suites) {
    nlohmann::ordered_json e;
    e["name"] = s.name;
    e["passed"] = s.passed;
    e["checks"] = s.checks;
    e["failures"] = s.failures;
    j["suites"].push_back(e);
  }
  return j;
}

}  // namespace dcup
