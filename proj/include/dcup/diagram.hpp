#ifndef DCUP_DIAGRAM_HPP
#define DCUP_DIAGRAM_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcup {

struct Cup {
  int left = 0;
  int right = 0;
  bool dotted = false;
  auto operator<=>(const Cup&) const = default;
};

struct Ray {
  int at = 0;
  bool dotted = false;
  auto operator<=>(const Ray&) const = default;
};

/// Unchecked arc list, the input of validate().
struct RawArcs {
  int k = 0;
  std::vector<Cup> cups;
  std::vector<Ray> rays;
};

enum class Violation {
  EmptyDiagram,
  VertexOutOfRange,
  MalformedCup,
  VertexUnused,
  VertexReused,
  Crossing,
  RayUnderCup,
  DotInaccessible,
};

const char* violation_name(Violation v);

struct Issue {
  Violation kind;
  std::string detail;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Issue> issues);
  const std::vector<Issue>& issues() const { return issues_; }
  bool has(Violation v) const;

 private:
  std::vector<Issue> issues_;
};

/// Decorated crossingless matching on vertices 1..k. Always valid once built.
class CupDiagram {
 public:
  CupDiagram() = default;

  int k() const { return k_; }
  const std::vector<Cup>& cups() const { return cups_; }
  const std::vector<Ray>& rays() const { return rays_; }

  /// Other endpoint of the cup through v, or 0 if v is on a ray.
  int partner(int v) const { return mate_[v]; }
  bool is_ray(int v) const { return mate_[v] == 0; }
  bool dotted_at(int v) const { return dot_[v] != 0; }
  bool is_left_end(int v) const { return mate_[v] > v; }

  std::size_t dots() const;
  int parity() const { return static_cast<int>(dots() % 2); }
  bool dot_free() const { return dots() == 0; }

  const std::string& encode() const { return code_; }
  RawArcs raw() const;

  friend bool operator==(const CupDiagram& a, const CupDiagram& b) { return a.code_ == b.code_; }
  friend bool operator<(const CupDiagram& a, const CupDiagram& b) { return a.code_ < b.code_; }

  friend CupDiagram validate(const RawArcs& raw);

 private:
  int k_ = 0;
  std::vector<Cup> cups_;
  std::vector<Ray> rays_;
  std::vector<int> mate_;
  std::vector<char> dot_;
  std::string code_;
};

/// All invariant violations of an arc list; empty means valid.
std::vector<Issue> check(const RawArcs& raw);

/// Builds the diagram or throws ValidationError listing every violation.
CupDiagram validate(const RawArcs& raw);

std::optional<CupDiagram> try_validate(const RawArcs& raw);

enum class Parity { Even, Odd, All };

struct CupFilter {
  enum class Kind { Exact, Maximal, Any } kind = Kind::Maximal;
  int count = 0;
  static CupFilter exact(int n) { return {Kind::Exact, n}; }
  static CupFilter maximal() { return {Kind::Maximal, 0}; }
  static CupFilter any() { return {Kind::Any, 0}; }
};

struct DiagramSet {
  int k = 0;
  Parity parity = Parity::All;
  CupFilter cups;
  bool dot_free = false;
  std::vector<CupDiagram> members;
};

DiagramSet enumerate(int k, CupFilter cups = CupFilter::maximal(), Parity parity = Parity::All,
                     bool dot_free = false);

/// Maximal-cup diagrams B_k, optionally one parity only.
std::vector<CupDiagram> maximal_diagrams(int k, Parity parity = Parity::All);

/// Adds or removes the dot on the arc through vertex 1.
std::optional<CupDiagram> toggle_first_dot(const CupDiagram& d);

bool matches(Parity p, int parity);
Parity parse_parity(const std::string& s);
const char* parity_name(Parity p);

}  // namespace dcup

#endif
