#include "dcup/tableaux.hpp"

#include "dcup/orientation.hpp"

#include <algorithm>
#include <map>

namespace dcup {

bool admissible_shape(Shape sh) {
  if (sh.r < sh.s || sh.s < 0) return false;
  return sh.r == sh.s || (sh.r % 2 == 1 && sh.s % 2 == 1);
}

namespace {

void check_shape(Shape sh) {
  if (!admissible_shape(sh) || sh.r + sh.s == 0)
    throw InadmissibleShape("shape (" + std::to_string(sh.r) + "," + std::to_string(sh.s) +
                            ") is not an admissible two-row shape");
}

}  // namespace

DominoTableau DominoTableau::from_word(const std::string& word) {
  DominoTableau t;
  t.word_ = word;
  int top = 0, bottom = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case 'V':
        if (top != bottom) throw MalformedTableau("vertical domino " + std::to_string(i + 1) + " needs equal rows");
        t.cells_.push_back({{1, top + 1}, {2, bottom + 1}});
        ++top;
        ++bottom;
        break;
      case 'T':
        t.cells_.push_back({{1, top + 1}, {1, top + 2}});
        top += 2;
        break;
      case 'B':
        if (top < bottom + 2) throw MalformedTableau("bottom domino " + std::to_string(i + 1) + " has no support");
        t.cells_.push_back({{2, bottom + 1}, {2, bottom + 2}});
        bottom += 2;
        break;
      default:
        throw MalformedTableau(std::string("unknown domino letter ") + word[i]);
    }
  }
  t.shape_ = {top, bottom};
  return t;
}

DominoType DominoTableau::type(int label) const {
  if (word_[label - 1] != 'V') return DominoType::H;
  return cells_[label - 1].first.col % 2 == 1 ? DominoType::V1 : DominoType::V0;
}

bool DominoTableau::admissible() const {
  int top = 0, bottom = 0;
  for (char ch : word_) {
    if (ch == 'V') ++top, ++bottom;
    if (ch == 'T') top += 2;
    if (ch == 'B') bottom += 2;
    if (!admissible_shape({top, bottom})) return false;
  }
  return true;
}

bool DominoTableau::even_horizontals() const {
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i] != 'V' && cells_[i].first.col % 2 != 0) return false;
  return true;
}

int SignedDominoTableau::minus_count() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), -1));
}

void check_signed(const SignedDominoTableau& t) {
  if (!t.base.admissible()) throw MalformedTableau("tableau " + t.base.word() + " is not admissible");
  if (static_cast<int>(t.signs.size()) != t.base.size()) throw MalformedTableau("sign list has wrong length");
  for (int l = 1; l <= t.base.size(); ++l) {
    bool v1 = t.base.type(l) == DominoType::V1;
    int s = t.signs[l - 1];
    if (v1 != (s != 0) || (s != 0 && s != 1 && s != -1))
      throw MalformedTableau("signs belong exactly on odd-column vertical dominoes");
  }
}

namespace {

void words(Shape sh, int top, int bottom, std::string& cur, std::vector<DominoTableau>& out) {
  if (top == sh.r && bottom == sh.s) {
    out.push_back(DominoTableau::from_word(cur));
    return;
  }
  if (top == bottom && top < sh.r && bottom < sh.s) {
    cur.push_back('V');
    words(sh, top + 1, bottom + 1, cur, out);
    cur.pop_back();
  }
  if (top + 2 <= sh.r) {
    cur.push_back('T');
    words(sh, top + 2, bottom, cur, out);
    cur.pop_back();
  }
  if (bottom + 2 <= sh.s && top >= bottom + 2) {
    cur.push_back('B');
    words(sh, top, bottom + 2, cur, out);
    cur.pop_back();
  }
}

std::vector<int> v1_labels(const DominoTableau& t) {
  std::vector<int> out;
  for (int l = 1; l <= t.size(); ++l)
    if (t.type(l) == DominoType::V1) out.push_back(l);
  return out;
}

}  // namespace

std::vector<DominoTableau> enumerate_dt(Shape sh) {
  if (sh.r < sh.s || sh.s < 0 || (sh.r + sh.s) % 2 != 0)
    throw InadmissibleShape("not a two-row shape with an even number of boxes");
  std::vector<DominoTableau> out;
  std::string cur;
  words(sh, 0, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DominoTableau> enumerate_adt(Shape sh) {
  check_shape(sh);
  std::vector<DominoTableau> out;
  for (auto& t : enumerate_dt(sh))
    if (t.admissible()) out.push_back(t);
  return out;
}

std::vector<SignedDominoTableau> enumerate_signed(Shape sh) {
  std::vector<SignedDominoTableau> out;
  for (const auto& t : enumerate_adt(sh)) {
    auto v1 = v1_labels(t);
    for (std::size_t m = 0; m < (std::size_t{1} << v1.size()); ++m) {
      SignedDominoTableau st{t, std::vector<int>(t.size(), 0)};
      // first V1 varies slowest; + before -
      for (std::size_t i = 0; i < v1.size(); ++i)
        st.signs[v1[i] - 1] = ((m >> (v1.size() - 1 - i)) & 1) ? -1 : 1;
      out.push_back(std::move(st));
    }
  }
  return out;
}

std::vector<Cluster> clusters(const SignedDominoTableau& t) {
  check_signed(t);
  std::vector<Cluster> out;
  const std::string& w = t.base.word();
  for (int l = 1; l <= t.base.size(); ++l) {
    if (t.base.type(l) != DominoType::V1) continue;
    Cluster c;
    c.sign = t.signs[l - 1];
    c.labels.push_back(l);
    int m = l + 1;
    while (m <= t.base.size() && w[m - 1] != 'V') c.labels.push_back(m++);
    if (m <= t.base.size()) {
      c.labels.push_back(m);
    } else {
      c.open = true;
    }
    out.push_back(std::move(c));
  }
  return out;
}

CupDiagram to_cup(const SignedDominoTableau& t) {
  RawArcs raw{t.base.size(), {}, {}};
  const std::string& w = t.base.word();
  for (const auto& c : clusters(t)) {
    std::vector<int> stack;
    std::size_t inner_end = c.open ? c.labels.size() : c.labels.size() - 1;
    for (std::size_t i = 1; i < inner_end; ++i) {
      int l = c.labels[i];
      if (w[l - 1] == 'T') {
        stack.push_back(l);
      } else {
        if (stack.empty()) throw std::logic_error("unmatched bottom domino");
        raw.cups.push_back({stack.back(), l, false});
        stack.pop_back();
      }
    }
    if (c.open) {
      raw.rays.push_back({c.labels.front(), c.sign < 0});
      for (int l : stack) raw.rays.push_back({l, false});
    } else {
      if (!stack.empty()) throw std::logic_error("closed cluster with open cups");
      raw.cups.push_back({c.labels.front(), c.labels.back(), c.sign < 0});
    }
  }
  return validate(raw);
}

Shape shape_of_cup(const CupDiagram& c) {
  const int k = c.k();
  const int n = static_cast<int>(c.cups().size());
  if (k % 2 == 0 && 2 * n == k) return {k, k};
  int s = 2 * n + 1;
  return {2 * k - s, s};
}

SignedDominoTableau from_cup(const CupDiagram& c) {
  const int k = c.k();
  std::string w(k, '?');
  std::vector<int> signs(k, 0);
  int first_ray = k + 1;
  for (const auto& r : c.rays()) first_ray = std::min(first_ray, r.at);
  for (const auto& cup : c.cups()) {
    bool nested = std::any_of(c.cups().begin(), c.cups().end(), [&](const Cup& o) {
      return o.left < cup.left && cup.right < o.right;
    });
    if (!nested && cup.right < first_ray) {
      w[cup.left - 1] = 'V';
      w[cup.right - 1] = 'V';
      signs[cup.left - 1] = cup.dotted ? -1 : 1;
    } else {
      if (cup.dotted) throw std::logic_error("dotted cup inside a cluster");
      w[cup.left - 1] = 'T';
      w[cup.right - 1] = 'B';
    }
  }
  for (const auto& r : c.rays()) {
    if (r.at == first_ray) {
      w[r.at - 1] = 'V';
      signs[r.at - 1] = r.dotted ? -1 : 1;
    } else {
      w[r.at - 1] = 'T';
    }
  }
  SignedDominoTableau t{DominoTableau::from_word(w), signs};
  check_signed(t);
  if (t.base.shape() != shape_of_cup(c)) throw std::logic_error("shape bookkeeping failed for " + c.encode());
  return t;
}

SignedDominoTableau from_cup(const CupDiagram& c, Shape sh) {
  Shape have = shape_of_cup(c);
  if (have != sh)
    throw ShapeMismatch(c.encode() + " belongs to shape (" + std::to_string(have.r) + "," +
                        std::to_string(have.s) + ")");
  return from_cup(c);
}

DominoTableau cyc(const SignedDominoTableau& t) {
  std::string w = t.base.word();
  for (const auto& c : clusters(t)) {
    if (c.open || c.sign != 1) continue;
    w[c.labels.front() - 1] = 'T';
    w[c.labels.back() - 1] = 'B';
  }
  return DominoTableau::from_word(w);
}

SignedDominoTableau cyc_inverse(const DominoTableau& S) {
  std::string w = S.word();
  const int n = S.size();
  std::vector<int> signs(n, 0);
  int top = 0, bottom = 0;
  auto advance = [&](char ch) {
    if (ch == 'V') ++top, ++bottom;
    if (ch == 'T') top += 2;
    if (ch == 'B') bottom += 2;
  };
  for (int i = 0; i < n; ++i) {
    if (w[i] == 'T' && top == bottom && top % 2 == 0) {
      // smallest rectangle starting here: runs until the rows are level again
      int t2 = top, b2 = bottom;
      int j = i;
      for (; j < n; ++j) {
        if (w[j] == 'T') t2 += 2;
        if (w[j] == 'B') b2 += 2;
        if (w[j] == 'V') throw MalformedTableau("vertical domino inside a cycle rectangle");
        if (t2 == b2) break;
      }
      if (j == n || w[j] != 'B') throw MalformedTableau("no rectangle closes the horizontal domino " + std::to_string(i + 1));
      for (int x = i; x <= j; ++x) advance(w[x]);
      w[i] = 'V';
      w[j] = 'V';
      signs[i] = 1;
      i = j;
      continue;
    }
    advance(w[i]);
  }
  SignedDominoTableau t{DominoTableau::from_word(w), signs};
  auto cl = [&] {
    SignedDominoTableau probe = t;
    for (int l = 1; l <= n; ++l)
      if (probe.base.type(l) == DominoType::V1 && probe.signs[l - 1] == 0) probe.signs[l - 1] = -1;
    return probe;
  }();
  // open cluster gets +, remaining closed clusters -
  for (const auto& c : clusters(cl))
    if (c.open) cl.signs[c.labels.front() - 1] = 1;
  check_signed(cl);
  return cl;
}

std::vector<SignedDominoTableau> cyc_class(const DominoTableau& S) {
  SignedDominoTableau rep = cyc_inverse(S);
  std::vector<SignedDominoTableau> out{rep};
  for (const auto& c : clusters(rep)) {
    if (!c.open) continue;
    SignedDominoTableau other = rep;
    other.signs[c.labels.front() - 1] = -other.signs[c.labels.front() - 1];
    out.push_back(other);
  }
  return out;
}

bool same_class(const SignedDominoTableau& a, const SignedDominoTableau& b) {
  if (!(a.base == b.base)) return false;
  auto ca = clusters(a);
  auto cb = clusters(b);
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (!ca[i].open && ca[i].sign != cb[i].sign) return false;
  return true;
}

void check_standard(const StandardTableau& T) {
  const int k = static_cast<int>(T.top.size() + T.bottom.size());
  if (T.top.size() < T.bottom.size()) throw NotStandard("top row shorter than bottom row");
  std::vector<int> all = T.top;
  all.insert(all.end(), T.bottom.begin(), T.bottom.end());
  std::sort(all.begin(), all.end());
  for (int i = 0; i < k; ++i)
    if (all[i] != i + 1) throw NotStandard("entries must be 1..n once each");
  for (const auto* row : {&T.top, &T.bottom})
    for (std::size_t i = 1; i < row->size(); ++i)
      if ((*row)[i - 1] >= (*row)[i]) throw NotStandard("rows must increase");
  for (std::size_t i = 0; i < T.bottom.size(); ++i)
    if (T.top[i] >= T.bottom[i]) throw NotStandard("columns must increase");
}

std::vector<StandardTableau> enumerate_standard(Shape sh) {
  std::vector<StandardTableau> out;
  const int n = sh.r + sh.s;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    StandardTableau T;
    for (int i = 1; i <= n; ++i) ((m >> (i - 1)) & 1 ? T.bottom : T.top).push_back(i);
    if (static_cast<int>(T.bottom.size()) != sh.s) continue;
    try {
      check_standard(T);
    } catch (const NotStandard&) {
      continue;
    }
    out.push_back(std::move(T));
  }
  return out;
}

CupDiagram std_to_cups(const StandardTableau& T) {
  check_standard(T);
  const int k = static_cast<int>(T.top.size() + T.bottom.size());
  std::vector<char> in_bottom(k + 1, 0);
  for (int b : T.bottom) in_bottom[b] = 1;
  RawArcs raw{k, {}, {}};
  std::vector<int> open;
  for (int v = 1; v <= k; ++v) {
    if (!in_bottom[v]) {
      open.push_back(v);
    } else {
      raw.cups.push_back({open.back(), v, false});
      open.pop_back();
    }
  }
  for (int v : open) raw.rays.push_back({v, false});
  return validate(raw);
}

StandardTableau cups_to_std(const CupDiagram& c) {
  if (!c.dot_free()) throw NotStandard("standard tableaux correspond to undecorated diagrams");
  StandardTableau T;
  for (int v = 1; v <= c.k(); ++v) (c.is_ray(v) || c.is_left_end(v) ? T.top : T.bottom).push_back(v);
  return T;
}

Bitableau bitableau_of_cup(const CupDiagram& c) {
  const int k = c.k();
  std::vector<char> mark(k + 1, 0);
  int first_ray = k + 1;
  for (const auto& r : c.rays()) first_ray = std::min(first_ray, r.at);
  for (const auto& cup : c.cups()) {
    if (cup.left > first_ray) {
      mark[cup.left] = 1;
      continue;
    }
    // the enclosing top-level cup decides which endpoints are marked
    const Cup* top = &cup;
    for (const auto& o : c.cups())
      if (o.left < top->left && cup.right < o.right) top = &o;
    mark[top->dotted ? cup.right : cup.left] = 1;
  }
  for (const auto& r : c.rays()) mark[r.at] = 1;
  Bitableau b;
  for (int v = 1; v <= k; ++v) (mark[v] ? b.marked : b.unmarked).push_back(v);
  return b;
}

CupDiagram cup_of_bitableau(const Bitableau& b, std::optional<int> parity) {
  const int k = static_cast<int>(b.marked.size() + b.unmarked.size());
  const int cups = k - static_cast<int>(b.marked.size());
  if (k < 1 || cups < 0 || 2 * cups > k) throw std::invalid_argument("no cup diagram has this bitableau shape");
  std::optional<CupDiagram> found;
  Parity p = !parity ? Parity::All : (*parity == 0 ? Parity::Even : Parity::Odd);
  for (const auto& c : enumerate(k, CupFilter::exact(cups), p).members) {
    if (!(bitableau_of_cup(c) == b)) continue;
    if (found) throw std::invalid_argument("bitableau has several preimages; give a parity");
    found = c;
  }
  if (!found) throw std::invalid_argument("bitableau has no preimage");
  return *found;
}

bool is_stable(const STable& p) {
  const int k = p.k;
  if (static_cast<int>(p.col1.size()) != k || static_cast<int>(p.col2.size()) != k) return false;
  std::vector<int> seen(k + 1, 0);
  for (const auto* col : {&p.col1, &p.col2})
    for (int x : *col) {
      if (x == 0 || x > k || x < -k) return false;
      seen[std::abs(x)] += 1;
    }
  for (int i = 1; i <= k; ++i)
    if (seen[i] != 2) return false;
  std::vector<int> all = p.col1;
  all.insert(all.end(), p.col2.begin(), p.col2.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  for (int i = 0; i < k; ++i) {
    if (p.col1[i] != -p.col2[k - 1 - i]) return false;
    if (p.col1[i] >= p.col2[i]) return false;
    if (i > 0 && (p.col1[i - 1] <= p.col1[i] || p.col2[i - 1] <= p.col2[i])) return false;
  }
  return true;
}

std::vector<STable> enumerate_stables(int k) {
  std::vector<STable> out;
  for (std::size_t m = 0; m < (std::size_t{1} << k); ++m) {
    STable p{k, {}, {}};
    for (int i = 1; i <= k; ++i) p.col2.push_back(((m >> (i - 1)) & 1) ? -i : i);
    std::sort(p.col2.rbegin(), p.col2.rend());
    for (int i = 0; i < k; ++i) p.col1.push_back(-p.col2[k - 1 - i]);
    if (is_stable(p)) out.push_back(std::move(p));
  }
  return out;
}

CupDiagram stable_to_cup(const STable& p) {
  if (!is_stable(p)) throw std::invalid_argument("not an s-table");
  Weight w(std::vector<bool>(p.k, false));
  for (int x : p.col2) w.set(std::abs(x), x > 0);
  return cup_of_weight(w);
}

std::vector<STable> stables_of_cup(const CupDiagram& c) {
  std::vector<STable> out;
  for (auto& p : enumerate_stables(c.k()))
    if (stable_to_cup(p) == c) out.push_back(std::move(p));
  return out;
}

namespace {

nlohmann::ordered_json tableau_json(const DominoTableau& t, const std::vector<int>* signs) {
  nlohmann::ordered_json j;
  j["shape"] = {t.shape().r, t.shape().s};
  j["dominoes"] = nlohmann::ordered_json::array();
  for (int l = 1; l <= t.size(); ++l) {
    auto [a, b] = t.cells(l);
    nlohmann::ordered_json d;
    d["label"] = l;
    d["cells"] = {{a.row, a.col}, {b.row, b.col}};
    int s = signs ? (*signs)[l - 1] : 0;
    if (s == 0)
      d["sign"] = nullptr;
    else
      d["sign"] = s > 0 ? "+" : "-";
    j["dominoes"].push_back(d);
  }
  return j;
}

std::pair<DominoTableau, std::vector<int>> parse_tableau(const nlohmann::json& j) {
  Shape sh{j.at("shape").at(0).get<int>(), j.at("shape").at(1).get<int>()};
  const auto& ds = j.at("dominoes");
  const int n = static_cast<int>(ds.size());
  std::string w(n, '?');
  std::vector<int> signs(n, 0);
  std::vector<std::pair<Cell, Cell>> given(n);
  for (const auto& d : ds) {
    int l = d.at("label").get<int>();
    if (l < 1 || l > n || w[l - 1] != '?') throw MalformedTableau("labels must be 1..n once each");
    Cell a{d.at("cells").at(0).at(0).get<int>(), d.at("cells").at(0).at(1).get<int>()};
    Cell b{d.at("cells").at(1).at(0).get<int>(), d.at("cells").at(1).at(1).get<int>()};
    if (b < a) std::swap(a, b);
    if (a.col == b.col && a.row == 1 && b.row == 2)
      w[l - 1] = 'V';
    else if (a.row == b.row && b.col == a.col + 1)
      w[l - 1] = a.row == 1 ? 'T' : 'B';
    else
      throw MalformedTableau("domino " + std::to_string(l) + " cells are not adjacent");
    given[l - 1] = {a, b};
    if (d.contains("sign") && !d.at("sign").is_null()) {
      auto s = d.at("sign").get<std::string>();
      if (s != "+" && s != "-") throw MalformedTableau("sign must be \"+\", \"-\" or null");
      signs[l - 1] = s == "+" ? 1 : -1;
    }
  }
  DominoTableau t = DominoTableau::from_word(w);
  for (int l = 1; l <= n; ++l)
    if (t.cells(l) != given[l - 1]) throw MalformedTableau("domino " + std::to_string(l) + " is not where its label puts it");
  if (t.shape() != sh) throw MalformedTableau("shape does not match the dominoes");
  return {t, signs};
}

}  // namespace

nlohmann::ordered_json to_json(const DominoTableau& t) { return tableau_json(t, nullptr); }

nlohmann::ordered_json to_json(const SignedDominoTableau& t) { return tableau_json(t.base, &t.signs); }

nlohmann::ordered_json to_json(const Bitableau& b) {
  return nlohmann::ordered_json::array({b.marked, b.unmarked});
}

nlohmann::ordered_json to_json(const STable& p) { return nlohmann::ordered_json::array({p.col1, p.col2}); }

nlohmann::ordered_json to_json(const StandardTableau& T) {
  return nlohmann::ordered_json::array({T.top, T.bottom});
}

SignedDominoTableau signed_from_json(const nlohmann::json& j) {
  auto [t, signs] = parse_tableau(j);
  SignedDominoTableau st{t, signs};
  check_signed(st);
  return st;
}

DominoTableau tableau_from_json(const nlohmann::json& j) {
  auto [t, signs] = parse_tableau(j);
  if (std::any_of(signs.begin(), signs.end(), [](int s) { return s != 0; }))
    throw MalformedTableau("standard domino tableaux carry no signs");
  return t;
}

Bitableau bitableau_from_json(const nlohmann::json& j) {
  Bitableau b{j.at(0).get<std::vector<int>>(), j.at(1).get<std::vector<int>>()};
  std::vector<int> all = b.marked;
  all.insert(all.end(), b.unmarked.begin(), b.unmarked.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) throw std::invalid_argument("bitableau must fill 1..k");
  for (const auto* row : {&b.marked, &b.unmarked})
    if (!std::is_sorted(row->begin(), row->end())) throw std::invalid_argument("bitableau rows must increase");
  return b;
}

STable stable_from_json(const nlohmann::json& j) {
  STable p;
  p.col1 = j.at(0).get<std::vector<int>>();
  p.col2 = j.at(1).get<std::vector<int>>();
  p.k = static_cast<int>(p.col1.size());
  if (!is_stable(p)) throw std::invalid_argument("not an s-table");
  return p;
}

}  // namespace dcup
