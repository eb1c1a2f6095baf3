#ifndef DCUP_MOVEGRAPH_HPP
#define DCUP_MOVEGRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dcup/diagram.hpp"

namespace dcup {

enum class MoveKind { I, II, III, IV, Ip, IIp, IIIp, IVp };

const char* move_name(MoveKind k);
inline bool is_primed(MoveKind k) { return k >= MoveKind::Ip; }

struct Move {
  MoveKind kind;
  std::vector<int> positions;  // increasing
};

struct Step {
  CupDiagram target;
  Move move;
};

/// All b with a -> b, in canonical order of b.
std::vector<Step> successors(const CupDiagram& a);

/// All b with b -> a, found by matching the right-hand side of each move.
std::vector<Step> predecessors(const CupDiagram& a);

struct Arrow {
  std::size_t from;
  std::size_t to;
  Move move;
};

class MoveGraph {
 public:
  enum class TieBreak { Lexicographic, Reversed };

  MoveGraph(int k, Parity parity, TieBreak tie = TieBreak::Lexicographic);

  int k() const { return k_; }
  Parity parity() const { return parity_; }
  const std::vector<CupDiagram>& nodes() const { return nodes_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<std::size_t> index(const CupDiagram& d) const;

  /// Node indices listed so that every arrow goes forward.
  const std::vector<std::size_t>& total_order() const { return order_; }
  /// Position of each node in total_order().
  const std::vector<std::size_t>& rank() const { return rank_; }

  bool connected() const;
  /// Undirected BFS distance, -1 if unreachable.
  int dist(std::size_t a, std::size_t b) const;
  /// True when a directed path leads from a to b (including a == b).
  bool reaches(std::size_t a, std::size_t b) const;

  std::string dot() const;

 private:
  int k_;
  Parity parity_;
  std::vector<CupDiagram> nodes_;
  std::map<std::string, std::size_t> index_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_;
  std::vector<std::vector<int>> dist_;
  std::vector<std::vector<char>> reach_;
};

/// Shared immutable graph for (k, parity); Parity::All is not allowed.
const MoveGraph& move_graph(int k, Parity parity);

class NoFiniteDistance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// nullopt encodes infinity.
std::optional<int> distance(const CupDiagram& a, const CupDiagram& b);

/// Some c with d(a,b) = d(a,c) + d(c,b) from which both a and b are reached by arrows.
CupDiagram geodesic_meet(const CupDiagram& a, const CupDiagram& b);

struct NestingCensus {
  std::vector<Cup> cups;       // canonical order
  std::vector<int> degree;     // nesting degree per cup
  std::vector<bool> outer;
  std::vector<bool> special;
};

NestingCensus nesting_census(const CupDiagram& a);

struct GammaForest {
  CupDiagram base;
  std::vector<Cup> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // less nested -> more nested
  std::vector<std::size_t> roots;
  std::vector<std::size_t> special_roots;
};

GammaForest gamma_forest(const CupDiagram& a);

/// Real dimensions 2(#cups - |J|) over J in roots + edges, sorted descending.
std::vector<int> cell_census(const CupDiagram& a);
/// Dimensions of the cells lying in the boundary S_{<a} and S_a.
std::vector<int> boundary_census(const CupDiagram& a);
std::size_t free_cell_count(const CupDiagram& a);

}  // namespace dcup

#endif
