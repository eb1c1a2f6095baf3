#include "dcup/ringcalc.hpp"

#include <algorithm>
#include <bit>

#include "dcup/movegraph.hpp"
#include "dcup/parallel.hpp"

namespace dcup {

int mask_size(Mask m) { return std::popcount(m); }

std::string monomial_name(Mask m) {
  if (m == 0) return "1";
  std::string s = "x";
  bool first = true;
  for (int i = 1; m >> (i - 1); ++i) {
    if (!(m & bit(i))) continue;
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s;
}

SquarefreeElement SquarefreeElement::monomial(int k, Mask m, Rational c) {
  SquarefreeElement e(k);
  e.add(m, c);
  return e;
}

Rational SquarefreeElement::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SquarefreeElement::add(Mask m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SquarefreeElement SquarefreeElement::operator+(const SquarefreeElement& o) const {
  SquarefreeElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

SquarefreeElement SquarefreeElement::operator-(const SquarefreeElement& o) const {
  SquarefreeElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, -c);
  return r;
}

SquarefreeElement SquarefreeElement::operator*(const SquarefreeElement& o) const {
  SquarefreeElement r(std::max(k_, o.k_));
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      if ((m1 & m2) == 0) r.add(m1 | m2, c1 * c2);
  return r;
}

std::string SquarefreeElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*" + monomial_name(m);
  }
  return s;
}

std::vector<Mask> QuotientPresentation::basis() const {
  std::vector<Mask> out;
  const std::size_t n = reps.size();
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
    Mask m = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((s >> i) & 1) m |= bit(reps[i]);
    out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](Mask x, Mask y) {
    int dx = mask_size(x), dy = mask_size(y);
    return dx != dy ? dx < dy : x < y;
  });
  return out;
}

std::vector<Mask> QuotientPresentation::basis(int degree) const {
  std::vector<Mask> out;
  for (Mask m : basis())
    if (mask_size(m) == degree) out.push_back(m);
  return out;
}

std::pair<int, Mask> QuotientPresentation::reduce(Mask m) const {
  int sign = 1;
  Mask out = 0;
  for (int i = 1; i <= k; ++i) {
    if (!(m & bit(i))) continue;
    const Rewrite& r = rules[i];
    if (r.sign == 0) return {0, 0};
    if (out & bit(r.target)) return {0, 0};
    out |= bit(r.target);
    sign *= r.sign;
  }
  return {sign, out};
}

SquarefreeElement QuotientPresentation::reduce(const SquarefreeElement& e) const {
  SquarefreeElement r(k);
  for (const auto& [m, c] : e.terms()) {
    auto [s, t] = reduce(m);
    if (s != 0) r.add(t, c * s);
  }
  return r;
}

QuotientPresentation quotient_Ja(const CupDiagram& a) {
  QuotientPresentation q;
  q.k = a.k();
  q.rules.assign(a.k() + 1, Rewrite{});
  for (const auto& c : a.cups()) {
    q.rules[c.left] = {c.dotted ? 1 : -1, c.right};
    q.rules[c.right] = {1, c.right};
    q.reps.push_back(c.right);
  }
  for (const auto& r : a.rays()) q.rules[r.at] = {0, r.at};
  std::sort(q.reps.begin(), q.reps.end());
  return q;
}

std::optional<QuotientPresentation> quotient_Jab(const CupDiagram& a, const CupDiagram& b) {
  if (orient_circle_diagram(star(a), b).empty()) return std::nullopt;
  ComponentDecomposition dec = decompose(star(a), b);
  QuotientPresentation q;
  q.k = a.k();
  q.rules.assign(a.k() + 1, Rewrite{});
  for (int i = 1; i <= a.k(); ++i) {
    if (dec.on_circle(i))
      q.rules[i] = {dec.sign[i], dec.mx(i)};
    else
      q.rules[i] = {0, i};
  }
  for (const auto& cls : dec.classes)
    if (cls.circle) q.reps.push_back(cls.mx);
  std::sort(q.reps.begin(), q.reps.end());
  return q;
}

namespace {

LinearMap restriction(const QuotientPresentation& from, const QuotientPresentation& to) {
  LinearMap f{from.basis(), to.basis(), {}};
  f.matrix = Matrix(f.codomain.size(), f.domain.size());
  for (std::size_t c = 0; c < f.domain.size(); ++c) {
    auto [s, t] = to.reduce(f.domain[c]);
    if (s == 0) continue;
    auto it = std::find(f.codomain.begin(), f.codomain.end(), t);
    if (it == f.codomain.end()) throw std::logic_error("reduction left the basis");
    f.matrix.at(it - f.codomain.begin(), c) = s;
  }
  return f;
}

}  // namespace

PsiPair psi(const CupDiagram& a, const CupDiagram& b) {
  auto jab = quotient_Jab(a, b);
  if (!jab) throw NotOrientable(a.encode() + " and " + b.encode() + " do not intersect");
  return PsiPair{restriction(quotient_Ja(a), *jab), restriction(quotient_Ja(b), *jab)};
}

std::size_t CentreResult::total() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

CentreResult centre(int k, Parity parity, bool with_basis, int jobs) {
  CentreResult res;
  res.k = k;
  res.parity = parity;
  const MoveGraph& g = move_graph(k, parity);
  for (std::size_t i : g.total_order()) res.diagrams.push_back(g.nodes()[i]);
  const std::size_t n = res.diagrams.size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) pairs.push_back({x, y});
  std::vector<std::optional<PsiPair>> maps(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t p) {
    const auto& a = res.diagrams[pairs[p].first];
    const auto& b = res.diagrams[pairs[p].second];
    if (quotient_Jab(a, b)) maps[p] = psi(a, b);
  });

  const int top = k / 2;
  std::vector<QuotientPresentation> qa;
  for (const auto& d : res.diagrams) qa.push_back(quotient_Ja(d));
  res.dims.assign(top + 1, 0);
  res.basis.assign(top + 1, {});
  for (int deg = 0; deg <= top; ++deg) {
    // column layout: diagram by diagram, monomials of this degree
    std::vector<std::size_t> offset(n + 1, 0);
    std::vector<std::vector<Mask>> monos(n);
    for (std::size_t x = 0; x < n; ++x) {
      monos[x] = qa[x].basis(deg);
      offset[x + 1] = offset[x] + monos[x].size();
    }
    Echelon ech(offset[n]);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!maps[p]) continue;
      const auto [x, y] = pairs[p];
      const LinearMap& fa = maps[p]->from_a;
      const LinearMap& fb = maps[p]->from_b;
      for (std::size_t r = 0; r < fa.codomain.size(); ++r) {
        if (mask_size(fa.codomain[r]) != deg) continue;
        SparseRow row;
        for (std::size_t c = 0; c < fa.domain.size(); ++c) {
          if (sgn(fa.matrix.at(r, c)) == 0) continue;
          auto pos = std::find(monos[x].begin(), monos[x].end(), fa.domain[c]) - monos[x].begin();
          row[offset[x] + pos] += fa.matrix.at(r, c);
        }
        for (std::size_t c = 0; c < fb.domain.size(); ++c) {
          if (sgn(fb.matrix.at(r, c)) == 0) continue;
          auto pos = std::find(monos[y].begin(), monos[y].end(), fb.domain[c]) - monos[y].begin();
          row[offset[y] + pos] -= fb.matrix.at(r, c);
        }
        for (auto it = row.begin(); it != row.end();)
          it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
        ech.add(std::move(row));
      }
    }
    res.dims[deg] = offset[n] - ech.rank();
    if (with_basis) {
      for (const auto& v : ech.kernel()) {
        std::vector<CentreVector> vec;
        for (const auto& [col, c] : v) {
          std::size_t x = std::upper_bound(offset.begin(), offset.end(), col) - offset.begin() - 1;
          vec.push_back({x, monos[x][col - offset[x]], c});
        }
        res.basis[deg].push_back(std::move(vec));
      }
    }
  }
  return res;
}

Dictionary diagram_basis_dictionary(const CupDiagram& a, const CupDiagram& b) {
  auto all = orient_circle_diagram(star(a), b);
  if (all.empty()) throw NotOrientable(a.encode() + " and " + b.encode() + " do not intersect");
  Dictionary dict{a, b, {}, {}};
  const auto& dec = all.front().decomposition;
  dict.transport_sign.assign(a.k() + 1, 0);
  for (int i = 1; i <= a.k(); ++i)
    if (dec.on_circle(i)) dict.transport_sign[i] = dec.sign[i];
  for (const auto& o : all) {
    Mask m = 0;
    for (std::size_t c = 0; c < dec.classes.size(); ++c)
      if (o.turns[c] == Turn::Clockwise) m |= bit(dec.classes[c].mx);
    dict.entries.push_back({m, o.weight, o.degree});
  }
  return dict;
}

namespace {

std::size_t entry_with(const Dictionary& d, Mask m) {
  for (std::size_t i = 0; i < d.entries.size(); ++i)
    if (d.entries[i].monomial == m) return i;
  throw std::logic_error("monomial " + monomial_name(m) + " missing from dictionary");
}

DiagramMap transport(const Dictionary& source, const LinearMap& f, const Dictionary& target) {
  DiagramMap out;
  for (const auto& e : source.entries) out.domain.push_back(e.orientation);
  for (const auto& e : target.entries) out.codomain.push_back(e.orientation);
  out.matrix = Matrix(out.codomain.size(), out.domain.size());
  for (std::size_t c = 0; c < source.entries.size(); ++c) {
    auto col = std::find(f.domain.begin(), f.domain.end(), source.entries[c].monomial) - f.domain.begin();
    for (std::size_t r = 0; r < f.codomain.size(); ++r) {
      if (sgn(f.matrix.at(r, col)) == 0) continue;
      out.matrix.at(entry_with(target, f.codomain[r]), c) = f.matrix.at(r, col);
    }
  }
  return out;
}

// Walks the circle of a*b through i until it meets j, counting undotted arcs.
int trace_sign(const CupDiagram& a, const CupDiagram& b, int i, int j) {
  int v = i;
  int sign = 1;
  bool use_cap = true;
  for (int steps = 0; v != j; ++steps) {
    if (steps > 2 * a.k()) throw std::logic_error("vertex not on the circle");
    const CupDiagram& half = use_cap ? a : b;
    int p = half.partner(v);
    if (p == 0) throw std::logic_error("trace reached a ray");
    if (!half.dotted_at(v)) sign = -sign;
    v = p;
    use_cap = !use_cap;
  }
  return sign;
}

DiagramMap flips(const CupDiagram& self, const CupDiagram& a, const CupDiagram& b) {
  auto domain = orient_circle_diagram(star(self), self);
  auto target = orient_circle_diagram(star(a), b);
  auto minimal = min_degree_element(a, b);
  if (!minimal) throw NotOrientable(a.encode() + " and " + b.encode() + " do not intersect");
  const auto& dec = minimal->element.decomposition;
  DiagramMap out;
  for (const auto& o : domain) out.domain.push_back(o.weight);
  for (const auto& o : target) out.codomain.push_back(o.weight);
  out.matrix = Matrix(out.codomain.size(), out.domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    Weight w = minimal->element.weight;
    int sign = 1;
    std::vector<int> used;
    for (const auto& cup : self.cups()) {
      if (domain[c].weight.up(cup.right)) continue;  // anticlockwise circle
      int i = cup.right;
      int cls = dec.class_of[i];
      if (!dec.classes[cls].circle ||
          std::find(used.begin(), used.end(), cls) != used.end()) {
        sign = 0;
        break;
      }
      used.push_back(cls);
      sign *= trace_sign(a, b, i, dec.classes[cls].mx);
      for (int v : dec.classes[cls].vertices) w.set(v, !w.up(v));
    }
    if (sign == 0) continue;
    auto r = std::find(out.codomain.begin(), out.codomain.end(), w) - out.codomain.begin();
    if (static_cast<std::size_t>(r) == out.codomain.size())
      throw std::logic_error("flipped weight is not an orientation");
    out.matrix.at(r, c) = sign;
  }
  return out;
}

}  // namespace

GammaPair gamma(const CupDiagram& a, const CupDiagram& b) {
  PsiPair p = psi(a, b);
  Dictionary dab = diagram_basis_dictionary(a, b);
  return GammaPair{transport(diagram_basis_dictionary(a, a), p.from_a, dab),
                   transport(diagram_basis_dictionary(b, b), p.from_b, dab)};
}

GammaPair gamma_by_flips(const CupDiagram& a, const CupDiagram& b) {
  return GammaPair{flips(a, a, b), flips(b, a, b)};
}

}  // namespace dcup
