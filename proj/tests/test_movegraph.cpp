#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

#include "dcup/diagram.hpp"
#include "dcup/dsl.hpp"
#include "dcup/movegraph.hpp"
#include "dcup/orientation.hpp"

using namespace dcup;

namespace {

std::string cup_str(const Cup& c) { return "(" + std::to_string(c.left) + "," + std::to_string(c.right) + ")"; }

bool has_step(const std::vector<Step>& steps, const std::string& target, MoveKind kind) {
  return std::any_of(steps.begin(), steps.end(),
                     [&](const Step& s) { return s.target.encode() == target && s.move.kind == kind; });
}

}  // namespace

TEST_SUITE("movegraph") {
  TEST_CASE("successors follow the move table") {
    auto s = successors(parse_dsl("6: c(1,2);c(3,4);c(5,6)"));
    CHECK(has_step(s, "6: c(1,4);c(2,3);c(5,6)", MoveKind::I));
    CHECK(has_step(successors(parse_dsl("3: c(1,2);r(3)")), "3: r(1);c(2,3)", MoveKind::Ip));
    CHECK(has_step(successors(parse_dsl("4: c*(1,4);c(2,3)")), "4: c(1,2);c*(3,4)", MoveKind::IV));
    CHECK(has_step(successors(parse_dsl("4: c(1,4);c(2,3)")), "4: c*(1,2);c*(3,4)", MoveKind::II));
    CHECK(has_step(successors(parse_dsl("4: c*(1,2);c(3,4)")), "4: c*(1,4);c(2,3)", MoveKind::III));
  }

  TEST_CASE("every move keeps dot parity and predecessors invert successors") {
    for (int k = 1; k <= 8; ++k)
      for (const auto& a : maximal_diagrams(k))
        for (const auto& st : successors(a)) {
          CHECK(st.target.parity() == a.parity());
          auto back = predecessors(st.target);
          CHECK(std::any_of(back.begin(), back.end(), [&](const Step& p) { return p.target == a && p.move.kind == st.move.kind; }));
        }
  }

  TEST_CASE("graph sizes") {
    CHECK(move_graph(6, Parity::Even).nodes().size() == 10);
    CHECK(move_graph(6, Parity::Even).connected());
    CHECK(move_graph(3, Parity::Even).nodes().size() == 3);
    CHECK(move_graph(2, Parity::Odd).nodes().size() == 1);
    CHECK(move_graph(2, Parity::Odd).arrows().empty());
  }

  TEST_CASE("graphs are connected per parity and the total order refines the arrows") {
    for (int k = 1; k <= 8; ++k)
      for (Parity p : {Parity::Even, Parity::Odd}) {
        const auto& g = move_graph(k, p);
        CHECK(g.connected());
        for (const auto& a : g.arrows()) CHECK(g.rank()[a.from] < g.rank()[a.to]);
      }
  }

  TEST_CASE("distance against an independent breadth-first search") {
    for (int k = 2; k <= 6; ++k) {
      auto ds = maximal_diagrams(k);
      for (const auto& a : ds) {
        std::map<std::string, int> dist{{a.encode(), 0}};
        std::deque<CupDiagram> q{a};
        while (!q.empty()) {
          auto x = q.front();
          q.pop_front();
          auto nb = successors(x);
          auto pr = predecessors(x);
          nb.insert(nb.end(), pr.begin(), pr.end());
          for (const auto& s : nb)
            if (dist.emplace(s.target.encode(), dist[x.encode()] + 1).second) q.push_back(s.target);
        }
        for (const auto& b : ds) {
          auto d = distance(a, b);
          if (a.parity() != b.parity()) {
            CHECK(!d);
            continue;
          }
          REQUIRE(d);
          CHECK(*d == dist.at(b.encode()));
        }
      }
    }
    CHECK(distance(parse_dsl("4: c*(1,2);c(3,4)"), parse_dsl("4: c(1,2);c*(3,4)")) == 2);
  }

  TEST_CASE("distance law on orientable pairs") {
    for (int k = 2; k <= 8; ++k)
      for (Parity p : {Parity::Even, Parity::Odd}) {
        const auto& g = move_graph(k, p);
        const auto& n = g.nodes();
        for (std::size_t a = 0; a < n.size(); ++a)
          for (std::size_t b = 0; b < n.size(); ++b) {
            if (orient_circle_diagram(star(n[a]), n[b]).empty()) continue;
            CHECK(g.dist(a, b) == k / 2 - decompose(star(n[a]), n[b]).circles());
          }
      }
  }

  TEST_CASE("geodesic meets lie below both ends") {
    for (int k = 2; k <= 7; ++k)
      for (Parity p : {Parity::Even, Parity::Odd}) {
        const auto& g = move_graph(k, p);
        const auto& n = g.nodes();
        for (std::size_t a = 0; a < n.size(); ++a)
          for (std::size_t b = 0; b < n.size(); ++b) {
            auto c = geodesic_meet(n[a], n[b]);
            std::size_t ci = *g.index(c);
            CHECK(g.dist(a, b) == g.dist(a, ci) + g.dist(ci, b));
            CHECK(g.reaches(ci, a));
            CHECK(g.reaches(ci, b));
          }
      }
    auto a = parse_dsl("3: c(1,2);r(3)");
    CHECK(geodesic_meet(a, a) == a);
    CHECK_THROWS_AS(geodesic_meet(a, parse_dsl("3: c*(1,2);r(3)")), NoFiniteDistance);
  }

  TEST_CASE("results do not depend on the tie-break of the total order") {
    for (int k = 2; k <= 6; ++k)
      for (Parity p : {Parity::Even, Parity::Odd}) {
        MoveGraph lex(k, p), rev(k, p, MoveGraph::TieBreak::Reversed);
        const auto& n = lex.nodes();
        for (std::size_t a = 0; a < n.size(); ++a)
          for (std::size_t b = 0; b < n.size(); ++b) CHECK(lex.dist(a, b) == rev.dist(*rev.index(n[a]), *rev.index(n[b])));
      }
  }

  TEST_CASE("the thirteen-vertex forest") {
    auto a = parse_dsl("13: c(1,8);c(2,5);c(3,4);c(6,7);c*(9,12);c(10,11);r(13)");
    auto g = gamma_forest(a);
    std::set<std::string> edges;
    for (auto [x, y] : g.edges) edges.insert(cup_str(g.vertices[x]) + "->" + cup_str(g.vertices[y]));
    std::set<std::string> want{"(2,5)->(3,4)", "(1,8)->(2,5)", "(1,8)->(6,7)", "(9,12)->(1,8)", "(9,12)->(10,11)"};
    CHECK(edges == want);
    REQUIRE(g.roots.size() == 1);
    CHECK(cup_str(g.vertices[g.roots[0]]) == "(9,12)");
  }

  TEST_CASE("small forests") {
    auto g = gamma_forest(parse_dsl("4: c(1,2);c(3,4)"));
    CHECK(g.roots.size() == 2);
    CHECK(g.edges.empty());
    auto h = gamma_forest(parse_dsl("2: c*(1,2)"));
    CHECK(h.roots.size() == 1);
    CHECK(h.edges.empty());
  }

  TEST_CASE("nesting census of the three pictures on four points") {
    auto i = nesting_census(parse_dsl("4: c*(1,2);c*(3,4)"));
    CHECK(i.outer == std::vector<bool>{false, true});
    CHECK(i.degree == std::vector<int>{1, 0});
    auto ii = nesting_census(parse_dsl("4: c*(1,4);c(2,3)"));
    CHECK(ii.outer == std::vector<bool>{true, false});
    CHECK(ii.degree == std::vector<int>{0, 1});
    auto iii = nesting_census(parse_dsl("4: c(1,2);c(3,4)"));
    CHECK(iii.outer == std::vector<bool>{true, true});
  }

  TEST_CASE("forest shape for every diagram") {
    for (int k = 1; k <= 10; ++k)
      for (const auto& a : maximal_diagrams(k)) {
        auto g = gamma_forest(a);
        CHECK(g.roots.size() + g.edges.size() == a.cups().size());
        auto n = nesting_census(a);
        for (std::size_t r : g.roots) CHECK(n.outer[r]);
        CHECK(g.roots.size() == static_cast<std::size_t>(std::count(n.outer.begin(), n.outer.end(), true)));
      }
  }

  TEST_CASE("special roots on odd k") {
    for (int k = 3; k <= 9; k += 2)
      for (const auto& a : maximal_diagrams(k)) {
        auto g = gamma_forest(a);
        const Ray& ray = a.rays().front();
        std::set<std::size_t> want;
        for (std::size_t r : g.roots)
          if (ray.dotted || g.vertices[r].left > ray.at) want.insert(r);
        CHECK(std::set<std::size_t>(g.special_roots.begin(), g.special_roots.end()) == want);
      }
  }

  TEST_CASE("cells") {
    auto dims = cell_census(parse_dsl("4: c*(1,2);c*(3,4)"));
    CHECK(dims == std::vector<int>{4, 2, 2, 0});
    std::vector<std::size_t> free;
    for (const auto& a : maximal_diagrams(3)) free.push_back(free_cell_count(a));
    CHECK(free == std::vector<std::size_t>{2, 1, 2, 1, 1, 1});
    for (int k = 1; k <= 12; ++k) {
      std::size_t sum = 0;
      for (const auto& a : maximal_diagrams(k)) sum += free_cell_count(a);
      CHECK(sum == (std::size_t{1} << k));
    }
  }

  TEST_CASE("dot output is deterministic") {
    CHECK(move_graph(4, Parity::Even).dot() == MoveGraph(4, Parity::Even).dot());
    CHECK(move_graph(4, Parity::Even).dot().rfind("digraph", 0) == 0);
  }
}
