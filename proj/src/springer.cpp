#include "dcup/springer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dcup/movegraph.hpp"
#include "dcup/parallel.hpp"

namespace dcup {

BinomialQuotient::BinomialQuotient(int k)
    : k_(k), parent_(std::size_t{1} << k), ratio_(std::size_t{1} << k, Rational(1)),
      dead_(std::size_t{1} << k, 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int BinomialQuotient::find(int x) const {
  if (parent_[x] == x) return x;
  int p = parent_[x];
  int r = find(p);
  ratio_[x] *= ratio_[p];
  parent_[x] = r;
  return r;
}

void BinomialQuotient::kill(Mask u) { dead_[find(static_cast<int>(u))] = 1; }

void BinomialQuotient::relate(Mask u, const Rational& cu, Mask v, const Rational& cv) {
  const bool zu = sgn(cu) == 0;
  const bool zv = sgn(cv) == 0;
  if (zu && zv) return;
  if (zu) return kill(v);
  if (zv) return kill(u);
  int ru = find(static_cast<int>(u));
  int rv = find(static_cast<int>(v));
  Rational lhs = cu * ratio_[u];
  Rational rhs = cv * ratio_[v];
  if (ru == rv) {
    if (lhs != rhs) dead_[ru] = 1;
    return;
  }
  // lhs * x_ru = rhs * x_rv
  parent_[ru] = rv;
  ratio_[ru] = rhs / lhs;
  if (dead_[ru]) dead_[rv] = 1;
}

std::size_t BinomialQuotient::dimension() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < parent_.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i) && !dead_[i]) ++n;
  return n;
}

std::vector<std::size_t> BinomialQuotient::graded_dimension() const {
  std::vector<std::size_t> out(k_ + 1, 0);
  for (std::size_t i = 0; i < parent_.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i) && !dead_[i]) ++out[mask_size(static_cast<Mask>(i))];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

bool BinomialQuotient::is_basis(const std::vector<Mask>& monomials) const {
  std::set<int> roots;
  for (Mask m : monomials) {
    int r = find(static_cast<int>(m));
    if (dead_[r] || !roots.insert(r).second) return false;
  }
  return roots.size() == dimension();
}

namespace {

Rational power(const Rational& t, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= t;
  return r;
}

// Relations X_I - c X_J of the equivariant ring at T = t, multiplied by every monomial.
BinomialQuotient specialized(int k, const Rational& t) {
  BinomialQuotient q(k);
  const Mask full = (Mask{1} << k) - 1;
  const int size_i = (k + 1) / 2;
  const Rational c = (k % 2 == 0) ? Rational(1) : t;
  for (Mask I = 0; I <= full; ++I) {
    if (mask_size(I) != size_i) continue;
    const Mask J = full & ~I;
    for (Mask M = 0; M <= full; ++M) {
      q.relate(M ^ I, power(t, 2 * mask_size(M & I)), M ^ J, c * power(t, 2 * mask_size(M & J)));
    }
  }
  return q;
}

}  // namespace

PresentationRing presentation_ring(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  PresentationRing ring;
  ring.k = k;
  const Mask full = (Mask{1} << k) - 1;
  for (Mask I = 0; I <= full; ++I) {
    int n = mask_size(I);
    bool keep = (k % 2 == 1) ? 2 * n <= k - 1 : (2 * n < k || (2 * n == k && (I & bit(k))));
    if (keep) ring.basis.push_back(I);
  }
  std::sort(ring.basis.begin(), ring.basis.end(), [](Mask x, Mask y) {
    int dx = mask_size(x), dy = mask_size(y);
    return dx != dy ? dx < dy : x < y;
  });
  BinomialQuotient q = specialized(k, Rational(0));
  ring.dimension = q.dimension();
  ring.graded = q.graded_dimension();
  ring.basis_verified = q.is_basis(ring.basis);
  return ring;
}

std::size_t equivariant_specialization(int k, const Rational& t) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  return specialized(k, t).dimension();
}

Weight weight_of_index_set(const std::vector<int>& I, IndexConvention conv) {
  const int k = static_cast<int>(I.size());
  std::vector<int> seen(k + 1, 0);
  Weight w(std::vector<bool>(k, false));
  for (int x : I) {
    int i = x < 0 ? -x : x;
    if (i < 1 || i > k || seen[i]) throw MalformedIndexSet("index set must hold one of +-i for each i");
    seen[i] = 1;
    bool up = (conv == IndexConvention::STable) ? x > 0 : x < 0;
    w.set(i, up);
  }
  return w;
}

std::vector<int> index_set_of_weight(const Weight& w, IndexConvention conv) {
  std::vector<int> I;
  for (int i = 1; i <= w.size(); ++i) {
    bool positive = (conv == IndexConvention::STable) ? w.up(i) : !w.up(i);
    I.push_back(positive ? i : -i);
  }
  return I;
}

FixedPointTable fixed_point_table(int k, Parity parity, int jobs) {
  if (parity == Parity::All) throw std::invalid_argument("tables are built per parity");
  FixedPointTable t;
  t.k = k;
  t.parity = parity;
  t.diagrams = maximal_diagrams(k, parity);
  const std::size_t n = t.diagrams.size();
  t.cells.assign(n, std::vector<std::vector<Weight>>(n));
  parallel_for(n * n, jobs, [&](std::size_t p) {
    std::size_t x = p / n, y = p % n;
    if (x == y) {
      t.cells[x][y] = orientations_of_cup(t.diagrams[x]);
      return;
    }
    for (const auto& o : orient_circle_diagram(star(t.diagrams[x]), t.diagrams[y]))
      t.cells[x][y].push_back(o.weight);
  });
  return t;
}

FixedPointTable fixed_point_table(int r, int s, Parity parity, int jobs) {
  if (r != s)
    throw UnsupportedShape("fixed-point tables are only available for Jordan type (k,k)");
  return fixed_point_table(r, parity, jobs);
}

GradedDimension kk_graded_dimension(int k) {
  GradedDimension g;
  g.coeffs.assign(2 * (k / 2) + 1, 0);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const MoveGraph& mg = move_graph(k, p);
    const auto& nodes = mg.nodes();
    for (std::size_t x = 0; x < nodes.size(); ++x) {
      for (std::size_t y = 0; y < nodes.size(); ++y) {
        auto dec = decompose(star(nodes[x]), nodes[y]);
        if (orient_circle_diagram(star(nodes[x]), nodes[y]).empty()) continue;
        int d = mg.dist(x, y);
        int c = dec.circles();
        // q^d (1+q^2)^c
        std::size_t binom = 1;
        for (int j = 0; j <= c; ++j) {
          std::size_t deg = d + 2 * j;
          if (deg >= g.coeffs.size()) g.coeffs.resize(deg + 1, 0);
          g.coeffs[deg] += binom;
          binom = binom * (c - j) / (j + 1);
        }
      }
    }
  }
  g.total = std::accumulate(g.coeffs.begin(), g.coeffs.end(), std::size_t{0});
  return g;
}

std::vector<std::size_t> filtration_census(int k) {
  std::vector<std::size_t> out;
  for (int j = 0; j <= k / 2; ++j) out.push_back(enumerate(k, CupFilter::exact(j)).members.size());
  return out;
}

}  // namespace dcup
