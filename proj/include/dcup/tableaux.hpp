#ifndef DCUP_TABLEAUX_HPP
#define DCUP_TABLEAUX_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dcup/diagram.hpp"

namespace dcup {

class InadmissibleShape : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotStandard : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MalformedTableau : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Shape {
  int r = 0;
  int s = 0;
  auto operator<=>(const Shape&) const = default;
};

/// Equal rows, or both rows odd.
bool admissible_shape(Shape sh);

struct Cell {
  int row = 0;  // 1 = top
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

enum class DominoType { V0, V1, H };

/// Two-row domino tableau stored by its label-order word: `V` vertical, `T` horizontal
/// in the top row, `B` horizontal in the bottom row. Label i is letter i-1.
class DominoTableau {
 public:
  DominoTableau() = default;
  /// Throws MalformedTableau if a letter cannot be placed.
  static DominoTableau from_word(const std::string& word);

  const std::string& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  Shape shape() const { return shape_; }
  std::pair<Cell, Cell> cells(int label) const { return cells_[label - 1]; }
  DominoType type(int label) const;
  /// Every shape met while removing the largest labels is admissible.
  bool admissible() const;
  /// Every horizontal domino starts in an even column.
  bool even_horizontals() const;

  friend bool operator==(const DominoTableau& a, const DominoTableau& b) { return a.word_ == b.word_; }
  friend bool operator<(const DominoTableau& a, const DominoTableau& b) { return a.cells_ < b.cells_; }

 private:
  std::string word_;
  Shape shape_;
  std::vector<std::pair<Cell, Cell>> cells_;
};

struct SignedDominoTableau {
  DominoTableau base;
  std::vector<int> signs;  // per label (index label-1): +1, -1, or 0 when unsigned

  int minus_count() const;
  friend bool operator==(const SignedDominoTableau& a, const SignedDominoTableau& b) {
    return a.base == b.base && a.signs == b.signs;
  }
};

/// Throws MalformedTableau unless the tableau is admissible and exactly the V1 dominoes carry signs.
void check_signed(const SignedDominoTableau& t);

std::vector<DominoTableau> enumerate_dt(Shape sh);
std::vector<DominoTableau> enumerate_adt(Shape sh);
std::vector<SignedDominoTableau> enumerate_signed(Shape sh);

struct Cluster {
  bool open = false;
  int sign = 0;
  std::vector<int> labels;
};

std::vector<Cluster> clusters(const SignedDominoTableau& t);

CupDiagram to_cup(const SignedDominoTableau& t);
/// Shape implied by a cup diagram: (k,k) for k/2 cups on even k, else (2k-s, s) with s = 2*cups+1.
Shape shape_of_cup(const CupDiagram& c);
SignedDominoTableau from_cup(const CupDiagram& c);
SignedDominoTableau from_cup(const CupDiagram& c, Shape sh);

/// Cycle move on every closed cluster with sign +, then signs are dropped.
DominoTableau cyc(const SignedDominoTableau& t);
/// Representative with sign + on the open cluster.
SignedDominoTableau cyc_inverse(const DominoTableau& S);
/// Every signed tableau in the class of cyc_inverse(S).
std::vector<SignedDominoTableau> cyc_class(const DominoTableau& S);
/// Same class: equal tableaux whose closed clusters carry equal signs.
bool same_class(const SignedDominoTableau& a, const SignedDominoTableau& b);

struct StandardTableau {
  std::vector<int> top;
  std::vector<int> bottom;
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

void check_standard(const StandardTableau& T);
std::vector<StandardTableau> enumerate_standard(Shape sh);
CupDiagram std_to_cups(const StandardTableau& T);
StandardTableau cups_to_std(const CupDiagram& c);

struct Bitableau {
  std::vector<int> marked;
  std::vector<int> unmarked;
  friend bool operator==(const Bitableau&, const Bitableau&) = default;
  friend auto operator<=>(const Bitableau&, const Bitableau&) = default;
};

Bitableau bitableau_of_cup(const CupDiagram& c);
/// Unique diagram with the given bitableau; parity is needed when rays are present.
CupDiagram cup_of_bitableau(const Bitableau& b, std::optional<int> parity = std::nullopt);

struct STable {
  int k = 0;
  std::vector<int> col1;
  std::vector<int> col2;
  friend bool operator==(const STable&, const STable&) = default;
};

bool is_stable(const STable& p);
std::vector<STable> enumerate_stables(int k);
CupDiagram stable_to_cup(const STable& p);
std::vector<STable> stables_of_cup(const CupDiagram& c);

nlohmann::ordered_json to_json(const DominoTableau& t);
nlohmann::ordered_json to_json(const SignedDominoTableau& t);
nlohmann::ordered_json to_json(const Bitableau& b);
nlohmann::ordered_json to_json(const STable& p);
nlohmann::ordered_json to_json(const StandardTableau& T);
SignedDominoTableau signed_from_json(const nlohmann::json& j);
DominoTableau tableau_from_json(const nlohmann::json& j);
Bitableau bitableau_from_json(const nlohmann::json& j);
STable stable_from_json(const nlohmann::json& j);

}  // namespace dcup

#endif
