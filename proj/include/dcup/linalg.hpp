#ifndef DCUP_LINALG_HPP
#define DCUP_LINALG_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dcup {

using Rational = mpq_class;

/// Sparse row: column -> nonzero value.
using SparseRow = std::map<std::size_t, Rational>;

/// Incremental row echelon form over the rationals. The pivot of a row is its
/// first nonzero column.
class Echelon {
 public:
  explicit Echelon(std::size_t columns) : columns_(columns) {}

  /// Reduces the row against the current pivots; returns true if it was independent.
  bool add(SparseRow row);
  /// Fully reduced form of a row against the current pivots.
  SparseRow reduce(SparseRow row) const;

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return pivots_.size(); }
  /// Basis of the null space, one vector per free column, in column order.
  std::vector<SparseRow> kernel() const;

 private:
  std::size_t columns_;
  std::map<std::size_t, SparseRow> pivots_;  // pivot column -> row with leading 1
};

/// Dense matrix helper for small maps.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Rational& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::size_t rank() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

}  // namespace dcup

#endif
