#ifndef DCUP_RINGCALC_HPP
#define DCUP_RINGCALC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcup/diagram.hpp"
#include "dcup/linalg.hpp"
#include "dcup/orientation.hpp"

namespace dcup {

/// Subset of {1..k}; bit i-1 stands for x_i.
using Mask = std::uint32_t;

inline Mask bit(int i) { return Mask{1} << (i - 1); }
int mask_size(Mask m);
std::string monomial_name(Mask m);

/// Element of Q[x_1..x_k]/(x_i^2).
class SquarefreeElement {
 public:
  SquarefreeElement() = default;
  explicit SquarefreeElement(int k) : k_(k) {}
  static SquarefreeElement monomial(int k, Mask m, Rational c = 1);

  int k() const { return k_; }
  const std::map<Mask, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(Mask m) const;
  void add(Mask m, const Rational& c);

  SquarefreeElement operator+(const SquarefreeElement& o) const;
  SquarefreeElement operator-(const SquarefreeElement& o) const;
  SquarefreeElement operator*(const SquarefreeElement& o) const;
  friend bool operator==(const SquarefreeElement& a, const SquarefreeElement& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }
  std::string str() const;

 private:
  int k_ = 0;
  std::map<Mask, Rational> terms_;
};

/// x_i -> sign * x_target, or x_i -> 0 when sign == 0. Kept variables map to themselves.
struct Rewrite {
  int sign = 1;
  int target = 0;
};

struct QuotientPresentation {
  int k = 0;
  std::vector<Rewrite> rules;  // 1-based
  std::vector<int> reps;       // kept representatives, increasing

  /// Monomials in the representatives, by size then mask.
  std::vector<Mask> basis() const;
  std::vector<Mask> basis(int degree) const;
  /// Image of x_m in the quotient as (sign, reduced mask); sign 0 means zero.
  std::pair<int, Mask> reduce(Mask m) const;
  SquarefreeElement reduce(const SquarefreeElement& e) const;
};

class NotOrientable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

QuotientPresentation quotient_Ja(const CupDiagram& a);
std::optional<QuotientPresentation> quotient_Jab(const CupDiagram& a, const CupDiagram& b);

struct LinearMap {
  std::vector<Mask> domain;
  std::vector<Mask> codomain;
  Matrix matrix;  // codomain x domain
};

struct PsiPair {
  LinearMap from_a;
  LinearMap from_b;
};

/// Restrictions H/J_a -> H/J_{a;b} <- H/J_b; throws NotOrientable.
PsiPair psi(const CupDiagram& a, const CupDiagram& b);

struct CentreVector {
  std::size_t diagram;  // index into CentreResult::diagrams
  Mask monomial;
  Rational coeff;
};

struct CentreResult {
  int k = 0;
  Parity parity = Parity::All;
  std::vector<CupDiagram> diagrams;
  std::vector<std::size_t> dims;                        // by monomial size d (degree 2d)
  std::vector<std::vector<std::vector<CentreVector>>> basis;  // per d, echelon basis vectors
  std::size_t total() const;
};

/// Equalizer of the psi maps over same-parity orientable pairs, degree by degree.
CentreResult centre(int k, Parity parity, bool with_basis = false, int jobs = 1);

struct DictionaryEntry {
  Mask monomial;  // product of x_mx over clockwise circles
  Weight orientation;
  int degree = 0;
};

struct Dictionary {
  CupDiagram a;
  CupDiagram b;
  std::vector<DictionaryEntry> entries;
  std::vector<int> transport_sign;  // per vertex: (-1)^alpha(i, mx(i)), 0 on lines
};

Dictionary diagram_basis_dictionary(const CupDiagram& a, const CupDiagram& b);

/// Map between diagram bases; columns indexed by domain orientations.
struct DiagramMap {
  std::vector<Weight> domain;
  std::vector<Weight> codomain;
  Matrix matrix;
};

struct GammaPair {
  DiagramMap from_a;  // aKa -> aKb
  DiagramMap from_b;  // bKb -> aKb
};

/// psi transported through the dictionaries.
GammaPair gamma(const CupDiagram& a, const CupDiagram& b);

/// Same maps built by flipping circles and tracing signs along the circle.
GammaPair gamma_by_flips(const CupDiagram& a, const CupDiagram& b);

}  // namespace dcup

#endif
