#include "dcup/linalg.hpp"

namespace dcup {

namespace {

// row -= factor * other
void axpy(SparseRow& row, const Rational& factor, const SparseRow& other) {
  for (const auto& [c, v] : other) {
    auto it = row.find(c);
    if (it == row.end()) {
      row.emplace(c, -factor * v);
    } else {
      it->second -= factor * v;
      if (sgn(it->second) == 0) row.erase(it);
    }
  }
}

}  // namespace

SparseRow Echelon::reduce(SparseRow row) const {
  for (auto p = pivots_.begin(); p != pivots_.end(); ++p) {
    auto it = row.find(p->first);
    if (it == row.end()) continue;
    Rational f = it->second;
    axpy(row, f, p->second);
  }
  return row;
}

bool Echelon::add(SparseRow row) {
  while (!row.empty()) {
    auto lead = row.begin();
    auto p = pivots_.find(lead->first);
    if (p == pivots_.end()) break;
    Rational f = lead->second;
    axpy(row, f, p->second);
  }
  if (row.empty()) return false;
  Rational lead = row.begin()->second;
  for (auto& [c, v] : row) v /= lead;
  pivots_.emplace(row.begin()->first, std::move(row));
  return true;
}

std::vector<SparseRow> Echelon::kernel() const {
  // back substitution to reduced echelon form
  std::map<std::size_t, SparseRow> rref = pivots_;
  for (auto p = rref.rbegin(); p != rref.rend(); ++p) {
    for (auto& [col, row] : rref) {
      if (col >= p->first) break;
      auto it = row.find(p->first);
      if (it == row.end()) continue;
      Rational f = it->second;
      axpy(row, f, p->second);
    }
  }
  std::vector<SparseRow> out;
  for (std::size_t f = 0; f < columns_; ++f) {
    if (rref.count(f)) continue;
    SparseRow v;
    v[f] = 1;
    for (const auto& [col, row] : rref) {
      auto it = row.find(f);
      if (it != row.end()) v[col] = -it->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t Matrix::rank() const {
  Echelon e(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(at(r, c)) != 0) row[c] = at(r, c);
    e.add(std::move(row));
  }
  return e.rank();
}

}  // namespace dcup
