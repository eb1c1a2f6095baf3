#ifndef DCUP_ORIENTATION_HPP
#define DCUP_ORIENTATION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcup/diagram.hpp"

namespace dcup {

/// Sequence of up/down symbols; text form uses `^` for up and `v` for down.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<bool> up) : up_(std::move(up)) {}
  static Weight parse(const std::string& text);

  int size() const { return static_cast<int>(up_.size()); }
  /// 1-based access.
  bool up(int i) const { return up_[i - 1]; }
  void set(int i, bool up) { up_[i - 1] = up; }
  std::string str() const;

  friend bool operator==(const Weight& a, const Weight& b) { return a.up_ == b.up_; }
  /// Lexicographic with down < up.
  friend bool operator<(const Weight& a, const Weight& b) { return a.up_ < b.up_; }

 private:
  std::vector<bool> up_;
};

/// Vertical mirror of a cup diagram; same combinatorial data.
class CapDiagram {
 public:
  CapDiagram() = default;
  explicit CapDiagram(CupDiagram shape) : shape_(std::move(shape)) {}
  const CupDiagram& shape() const { return shape_; }
  int k() const { return shape_.k(); }

 private:
  CupDiagram shape_;
};

inline CapDiagram star(const CupDiagram& a) { return CapDiagram(a); }

class InconsistentOrientation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Component {
  bool circle = false;
  int mx = 0;
  std::vector<int> vertices;
};

struct ComponentDecomposition {
  int k = 0;
  std::vector<Component> classes;  // ordered by smallest vertex
  std::vector<int> class_of;       // vertex -> class index
  std::vector<int> sign;           // vertex -> eps(i, mx(i))
  bool path_independent = true;

  int circles() const;
  int mx(int i) const { return classes[class_of[i]].mx; }
  bool on_circle(int i) const { return classes[class_of[i]].circle; }
  /// (-1)^{undotted arcs on a path from i to j}, 0 across classes.
  int eps(int i, int j) const;
};

enum class Turn { Anticlockwise, Clockwise, Line };

struct OrientedCircleDiagram {
  CapDiagram cap;
  Weight weight;
  CupDiagram cup;
  int degree = 0;
  ComponentDecomposition decomposition;
  std::vector<Turn> turns;  // per class of the decomposition

  int clockwise_circles() const;
};

/// Clockwise: undotted arc labelled (up, down) or dotted arc labelled (down, down).
bool clockwise_arc(bool dotted, bool left_up, bool right_up);

bool is_oriented(const Weight& w, const CupDiagram& c);

/// Clockwise cups of the half diagram; throws InconsistentOrientation.
int degree(const Weight& w, const CupDiagram& c);
int degree(const CapDiagram& b, const Weight& w);
int degree(const OrientedCircleDiagram& d);

std::vector<Weight> orientations_of_cup(const CupDiagram& c);

ComponentDecomposition decompose(const CapDiagram& b, const CupDiagram& c);

std::vector<OrientedCircleDiagram> orient_circle_diagram(const CapDiagram& b, const CupDiagram& c);

struct MinDegree {
  OrientedCircleDiagram element;
  int degree = 0;
};

/// All-anticlockwise orientation of a*b, or nothing if a*b cannot be oriented.
std::optional<MinDegree> min_degree_element(const CupDiagram& a, const CupDiagram& b);

/// Degree-zero cup diagram of a weight.
CupDiagram cup_of_weight(const Weight& w);

}  // namespace dcup

#endif
