#include <doctest.h>

#include <algorithm>
#include <set>

#include "dcup/diagram.hpp"
#include "dcup/dsl.hpp"
#include "dcup/movegraph.hpp"
#include "dcup/orientation.hpp"
#include "dcup/springer.hpp"

using namespace dcup;

namespace {

std::set<std::string> as_set(const std::vector<Weight>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(w.str());
  return out;
}

// Dimension of Q[x]/(x_i^2, relations) by dense elimination on all 2^k monomials, for small k.
std::size_t dense_dimension(int k, const Rational& t) {
  const Mask full = (Mask{1} << k) - 1;
  const int size_i = (k + 1) / 2;
  const Rational c = k % 2 == 0 ? Rational(1) : t;
  Echelon e(std::size_t{1} << k);
  for (Mask I = 0; I <= full; ++I) {
    if (mask_size(I) != size_i) continue;
    Mask J = full & ~I;
    for (Mask M = 0; M <= full; ++M) {
      // M * (x_I - c x_J), expanding x_i^2 = t^2 x_i^0 in the equivariant ring
      SparseRow row;
      Rational tu = 1, tv = 1;
      for (int i = 0; i < mask_size(M & I); ++i) tu *= t * t;
      for (int i = 0; i < mask_size(M & J); ++i) tv *= t * t;
      row[M ^ I] += tu;
      row[M ^ J] -= c * tv;
      for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
      if (!row.empty()) e.add(row);
    }
  }
  return (std::size_t{1} << k) - e.rank();
}

}  // namespace

TEST_SUITE("springer") {
  TEST_CASE("presentation ring dimensions and basis") {
    for (int k = 1; k <= 10; ++k) {
      auto r = presentation_ring(k);
      CHECK(r.dimension == (std::size_t{1} << (k - 1)));
      CHECK(r.basis.size() == r.dimension);
      CHECK(r.basis_verified);
    }
    CHECK(presentation_ring(4).graded == std::vector<std::size_t>{1, 4, 3});
  }

  TEST_CASE("binomial quotient agrees with dense elimination") {
    for (int k = 1; k <= 7; ++k)
      for (int t = 0; t <= 3; ++t) {
        CHECK(dense_dimension(k, t) == equivariant_specialization(k, t));
        CHECK(equivariant_specialization(k, t) == (std::size_t{1} << (k - 1)));
      }
  }

  TEST_CASE("index sets and weights") {
    CHECK(weight_of_index_set({1, 2, 3, 4}, IndexConvention::STable).str() == "^^^^");
    CHECK(weight_of_index_set({1, -2, 3, 4}, IndexConvention::STable).str() == "^v^^");
    CHECK(weight_of_index_set({1, 2, 3, 4}, IndexConvention::FixedPoint).str() == "vvvv");
    CHECK(weight_of_index_set({-1, -2, 3, -4}, IndexConvention::FixedPoint).str() == "^^v^");
    CHECK_THROWS_AS(weight_of_index_set({1, 1, 3}, IndexConvention::STable), MalformedIndexSet);
    CHECK_THROWS_AS(weight_of_index_set({1, 5}, IndexConvention::STable), MalformedIndexSet);
    for (auto conv : {IndexConvention::FixedPoint, IndexConvention::STable})
      for (const auto& I : std::vector<std::vector<int>>{{1, -2, 3}, {-1, -2, -3}, {1, 2, -3}}) {
        CHECK(index_set_of_weight(weight_of_index_set(I, conv), conv) == I);
        std::vector<int> neg;
        for (int x : I) neg.push_back(-x);
        auto w = weight_of_index_set(I, conv);
        auto v = weight_of_index_set(neg, conv);
        for (int i = 1; i <= w.size(); ++i) CHECK(w.up(i) != v.up(i));
      }
  }

  TEST_CASE("the fixed-point table for (4,4), odd parity") {
    auto t = fixed_point_table(4, Parity::Odd);
    auto A = parse_dsl("4: c*(1,2);c(3,4)");
    auto B = parse_dsl("4: c*(1,4);c(2,3)");
    auto C = parse_dsl("4: c(1,2);c*(3,4)");
    auto cell = [&](const CupDiagram& x, const CupDiagram& y) {
      auto i = std::find(t.diagrams.begin(), t.diagrams.end(), x) - t.diagrams.begin();
      auto j = std::find(t.diagrams.begin(), t.diagrams.end(), y) - t.diagrams.begin();
      return as_set(t.cells[i][j]);
    };
    using S = std::set<std::string>;
    CHECK(cell(A, A) == S{"^^v^", "vvv^", "^^^v", "vv^v"});
    CHECK(cell(A, B) == S{"^^v^", "vv^v"});
    CHECK(cell(A, C).empty());
    CHECK(cell(B, A) == S{"^^v^", "vv^v"});
    CHECK(cell(B, B) == S{"^^v^", "^v^^", "v^vv", "vv^v"});
    CHECK(cell(B, C) == S{"^v^^", "v^vv"});
    CHECK(cell(C, A).empty());
    CHECK(cell(C, B) == S{"^v^^", "v^vv"});
    CHECK(cell(C, C) == S{"v^^^", "^v^^", "v^vv", "^vvv"});
  }

  TEST_CASE("small tables and shape restrictions") {
    auto t = fixed_point_table(2, Parity::Even);
    REQUIRE(t.diagrams.size() == 1);
    CHECK(as_set(t.cells[0][0]) == std::set<std::string>{"v^", "^v"});
    CHECK_THROWS_AS(fixed_point_table(5, 3, Parity::Odd), UnsupportedShape);
    CHECK_NOTHROW(fixed_point_table(3, 3, Parity::Odd));
    CHECK(fixed_point_table(5, Parity::Odd, 4).cells == fixed_point_table(5, Parity::Odd, 1).cells);
  }

  TEST_CASE("graded dimension of K_k") {
    CHECK(kk_graded_dimension(2).total == 4);
    CHECK(kk_graded_dimension(4).total == 40);
    for (int k = 1; k <= 7; ++k) {
      auto g = kk_graded_dimension(k);
      CHECK(g.coeffs.front() == maximal_diagrams(k).size());
      std::size_t points = 0;
      for (Parity p : {Parity::Even, Parity::Odd}) {
        auto t = fixed_point_table(k, p);
        for (const auto& row : t.cells)
          for (const auto& cell : row) points += cell.size();
      }
      CHECK(g.total == points);
      // degree by degree against the orientation degrees of all circle diagrams
      std::vector<std::size_t> direct(g.coeffs.size(), 0);
      for (const auto& a : maximal_diagrams(k))
        for (const auto& b : maximal_diagrams(k))
          for (const auto& o : orient_circle_diagram(star(a), b)) {
            if (direct.size() <= static_cast<std::size_t>(o.degree)) direct.resize(o.degree + 1, 0);
            ++direct[o.degree];
          }
      CHECK(direct == g.coeffs);
    }
  }

  TEST_CASE("filtration census") {
    CHECK(filtration_census(3) == std::vector<std::size_t>{2, 6});
    for (int k = 1; k <= 12; ++k) {
      std::size_t sum = 0;
      for (auto c : filtration_census(k)) sum += c;
      CHECK(sum == (std::size_t{1} << k));
    }
    for (int k = 1; k <= 20; ++k) {
      std::vector<std::size_t> row{1};
      for (int n = 1; n <= k; ++n) {
        std::vector<std::size_t> next(n + 1, 1);
        for (int i = 1; i < n; ++i) next[i] = row[i - 1] + row[i];
        row = next;
      }
      std::size_t sum = k % 2 == 0 ? row[k / 2] : 0;
      for (int l = 0; 2 * l < k; ++l) sum += 2 * row[l];
      CHECK(sum == (std::size_t{1} << k));
    }
  }
}
