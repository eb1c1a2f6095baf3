#ifndef DCUP_SPRINGER_HPP
#define DCUP_SPRINGER_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dcup/diagram.hpp"
#include "dcup/linalg.hpp"
#include "dcup/orientation.hpp"
#include "dcup/ringcalc.hpp"

namespace dcup {

/// Quotient of the squarefree space Q<x_I> by a span of binomials c_u x_u - c_v x_v.
/// Each connected class of monomials contributes one dimension unless a relation
/// kills it or its cycle of ratios is inconsistent.
class BinomialQuotient {
 public:
  explicit BinomialQuotient(int k);

  /// Adds cu * x_u - cv * x_v to the relation span.
  void relate(Mask u, const Rational& cu, Mask v, const Rational& cv);
  void kill(Mask u);

  std::size_t dimension() const;
  /// Surviving classes per monomial size (only meaningful for homogeneous relations).
  std::vector<std::size_t> graded_dimension() const;
  /// True if the given monomials map bijectively onto the surviving classes.
  bool is_basis(const std::vector<Mask>& monomials) const;

 private:
  int find(int x) const;
  int k_;
  mutable std::vector<int> parent_;
  mutable std::vector<Rational> ratio_;  // x_i = ratio_[i] * x_parent
  std::vector<char> dead_;               // indexed by root
};

struct PresentationRing {
  int k = 0;
  std::vector<Mask> basis;          // the stated basis monomials
  std::vector<std::size_t> graded;  // dims by monomial size
  std::size_t dimension = 0;        // computed from the relations
  bool basis_verified = false;
};

PresentationRing presentation_ring(int k);

/// Dimension of the specialization T = t of the equivariant ring.
std::size_t equivariant_specialization(int k, const Rational& t);

enum class IndexConvention { FixedPoint, STable };

class MalformedIndexSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// I holds exactly one of +-i for every i in 1..k.
Weight weight_of_index_set(const std::vector<int>& I, IndexConvention conv);
std::vector<int> index_set_of_weight(const Weight& w, IndexConvention conv);

class UnsupportedShape : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FixedPointTable {
  int k = 0;
  Parity parity = Parity::Even;
  std::vector<CupDiagram> diagrams;
  std::vector<std::vector<std::vector<Weight>>> cells;
};

FixedPointTable fixed_point_table(int k, Parity parity, int jobs = 1);
/// Only Jordan type (k, k) is supported; anything else throws UnsupportedShape.
FixedPointTable fixed_point_table(int r, int s, Parity parity, int jobs = 1);

struct GradedDimension {
  std::vector<std::size_t> coeffs;  // coefficient of q^i
  std::size_t total = 0;
};

GradedDimension kk_graded_dimension(int k);

/// Number of cup diagrams on k vertices with j cups, j = 0..floor(k/2).
std::vector<std::size_t> filtration_census(int k);

}  // namespace dcup

#endif
