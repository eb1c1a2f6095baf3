#include <doctest.h>

#include <algorithm>
#include <set>

#include "dcup/diagram.hpp"
#include "dcup/dsl.hpp"
#include "dcup/tableaux.hpp"

using namespace dcup;

namespace {

// Signs listed for the odd-column verticals in label order.
SignedDominoTableau make(const std::string& word, const std::string& signs) {
  auto t = DominoTableau::from_word(word);
  SignedDominoTableau s{t, std::vector<int>(t.size(), 0)};
  std::size_t next = 0;
  for (int l = 1; l <= t.size(); ++l)
    if (t.type(l) == DominoType::V1) s.signs[l - 1] = signs.at(next++) == '+' ? 1 : -1;
  REQUIRE(next == signs.size());
  return s;
}

struct Row {
  const char* word;
  const char* signs;
  const char* standard;
};

// The ten signed tableaux of shape (6,6) and their standard partners.
const Row kSix[] = {
    {"VVVVVV", "+++", "TBTBTB"}, {"VTBVVV", "++", "TTBBTB"}, {"VVVTBV", "++", "TBTTBB"},
    {"VVVVVV", "--+", "VVVVTB"}, {"VTBTBV", "+", "TTBTBB"},  {"VVVVVV", "+--", "TBVVVV"},
    {"VVVTBV", "--", "VVVTBV"},  {"VTTBBV", "+", "TTTBBB"},  {"VTBVVV", "--", "VTBVVV"},
    {"VVVVVV", "-+-", "VVTBVV"},
};

std::vector<Shape> shapes_up_to(int n_max) {
  std::vector<Shape> out;
  for (int n = 2; n <= n_max; n += 2)
    for (int s = 0; s <= n / 2; ++s)
      if (admissible_shape({n - s, s})) out.push_back({n - s, s});
  return out;
}

}  // namespace

TEST_SUITE("tableaux") {
  TEST_CASE("admissible shapes") {
    CHECK(admissible_shape({3, 3}));
    CHECK(admissible_shape({5, 3}));
    CHECK(admissible_shape({4, 4}));
    CHECK_FALSE(admissible_shape({4, 2}));
    CHECK_FALSE(admissible_shape({2, 4}));
    CHECK_THROWS_AS(enumerate_adt({4, 2}), InadmissibleShape);
  }

  TEST_CASE("shape (3,3)") {
    CHECK(enumerate_adt({3, 3}).size() == 2);
    CHECK(enumerate_signed({3, 3}).size() == 6);
    CHECK(enumerate_dt({3, 3}).size() == 3);
  }

  TEST_CASE("both admissibility tests agree on every domino tableau") {
    for (int n = 2; n <= 14; n += 2)
      for (int s = 0; s <= n / 2; ++s)
        for (const auto& t : enumerate_dt({n - s, s})) CHECK(t.admissible() == t.even_horizontals());
  }

  TEST_CASE("the ten (6,6) examples through the cycle bijection") {
    std::set<std::string> images;
    for (const auto& r : kSix) {
      auto t = make(r.word, r.signs);
      auto S = cyc(t);
      CHECK(S.word() == r.standard);
      CHECK(same_class(cyc_inverse(S), t));
      images.insert(S.word());
    }
    CHECK(images.size() == 10);
    // all minus and nothing horizontal: nothing moves
    auto all_minus = make("VVVVVV", "---");
    CHECK(cyc(all_minus).word() == "VVVVVV");
    CHECK(cyc_inverse(DominoTableau::from_word("VVVVVV")) == all_minus);
  }

  TEST_CASE("clusters of a long tableau") {
    auto t = DominoTableau::from_word("VTTBBVVVVTBVVTBTBTT");
    CHECK(t.shape() == Shape{21, 17});
    SignedDominoTableau s{t, std::vector<int>(t.size(), 0)};
    for (int l = 1; l <= t.size(); ++l)
      if (t.type(l) == DominoType::V1) s.signs[l - 1] = 1;
    auto cs = clusters(s);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0].labels == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(cs[1].labels == std::vector<int>{7, 8});
    CHECK(cs[2].labels == std::vector<int>{9, 10, 11, 12});
    CHECK(cs[3].labels == std::vector<int>{13, 14, 15, 16, 17, 18, 19});
    CHECK(!cs[0].open);
    CHECK(cs[3].open);
  }

  TEST_CASE("all-vertical tableaux have one closed cluster per pair") {
    for (int k = 2; k <= 10; k += 2) {
      auto all = enumerate_signed({k, k});
      auto it = std::find_if(all.begin(), all.end(), [&](const auto& t) { return t.base.word() == std::string(k, 'V'); });
      REQUIRE(it != all.end());
      const auto& s = *it;
      CHECK(clusters(s).size() == static_cast<std::size_t>(k / 2));
    }
  }

  TEST_CASE("cup diagrams of signed tableaux") {
    CHECK(to_cup(make("VVVVVV", "+++")).encode() == "6: c(1,2);c(3,4);c(5,6)");
    CHECK(to_cup(make("VVVVVV", "--+")).encode() == "6: c*(1,2);c*(3,4);c(5,6)");
    CHECK(to_cup(make("VTBV", "+")).encode() == "4: c(1,4);c(2,3)");
    CHECK(to_cup(make("VTB", "-")).encode() == "3: r*(1);c(2,3)");
    CHECK_THROWS_AS(from_cup(parse_dsl("4: c(1,2);c(3,4)"), Shape{5, 3}), ShapeMismatch);
  }

  TEST_CASE("to_cup and from_cup are inverse with matching parity") {
    for (const auto& sh : shapes_up_to(14)) {
      auto ts = enumerate_signed(sh);
      auto cups = enumerate((sh.r + sh.s) / 2, CupFilter::exact(sh.s / 2)).members;
      CHECK(ts.size() == cups.size());
      std::set<std::string> image;
      for (const auto& t : ts) {
        auto c = to_cup(t);
        image.insert(c.encode());
        CHECK(from_cup(c) == t);
        CHECK(from_cup(c, sh) == t);
        CHECK(c.parity() == t.minus_count() % 2);
      }
      CHECK(image.size() == cups.size());
    }
  }

  TEST_CASE("cycle moves are a bijection on classes") {
    for (const auto& sh : shapes_up_to(14)) {
      for (const auto& t : enumerate_signed(sh)) {
        auto S = cyc(t);
        CHECK(S.shape() == sh);
        CHECK(same_class(cyc_inverse(S), t));
      }
      std::size_t classes = 0;
      for (const auto& S : enumerate_dt(sh)) {
        CHECK(cyc(cyc_inverse(S)) == S);
        auto cls = cyc_class(S);
        classes += cls.size();
        for (const auto& m : cls) CHECK(cyc(m) == S);
      }
      CHECK(classes == enumerate_signed(sh).size());
    }
  }

  TEST_CASE("standard tableaux and undecorated diagrams") {
    CHECK(std_to_cups({{1, 2, 5}, {3, 4}}).encode() == "5: c(1,4);c(2,3);r(5)");
    CHECK(std_to_cups({{1, 3, 5}, {2, 4}}).encode() == "5: c(1,2);c(3,4);r(5)");
    CHECK(std_to_cups({{1, 2, 3}, {4, 5}}).encode() == "5: r(1);c(2,5);c(3,4)");
    CHECK_THROWS_AS(std_to_cups({{1, 4}, {2, 3}}), NotStandard);
    CHECK_THROWS_AS(std_to_cups({{2, 3}, {1, 4}}), NotStandard);
    for (int k = 1; k <= 10; ++k)
      for (int c = 0; 2 * c <= k; ++c) {
        auto ts = enumerate_standard({k - c, c});
        auto ds = enumerate(k, CupFilter::exact(c), Parity::All, true).members;
        CHECK(ts.size() == ds.size());
        std::set<std::string> image;
        for (const auto& T : ts) {
          auto d = std_to_cups(T);
          image.insert(d.encode());
          CHECK(cups_to_std(d) == T);
        }
        CHECK(image.size() == ds.size());
      }
  }

  TEST_CASE("bitableaux") {
    auto b = bitableau_of_cup(parse_dsl("4: c*(1,2);c(3,4)"));
    CHECK(b.marked == std::vector<int>{2, 3});
    CHECK(b.unmarked == std::vector<int>{1, 4});
    auto u = bitableau_of_cup(parse_dsl("4: c(1,2);c(3,4)"));
    CHECK(u.marked == std::vector<int>{1, 3});
    std::set<Bitableau> seen;
    for (const auto& c : maximal_diagrams(4)) seen.insert(bitableau_of_cup(c));
    CHECK(seen.size() == 6);
    // the four signed tableaux of shape (5,3) and their marked rows
    CHECK(bitableau_of_cup(parse_dsl("4: c(1,2);r(3);r(4)")).marked == std::vector<int>{1, 3, 4});
    CHECK(bitableau_of_cup(parse_dsl("4: c*(1,2);r*(3);r(4)")).marked == std::vector<int>{2, 3, 4});
    CHECK(bitableau_of_cup(parse_dsl("4: r(1);c(2,3);r(4)")).marked == std::vector<int>{1, 2, 4});
    CHECK(bitableau_of_cup(parse_dsl("4: r(1);r(2);c(3,4)")).marked == std::vector<int>{1, 2, 3});
    CHECK(bitableau_of_cup(parse_dsl("4: c(1,2);r*(3);r(4)")).marked == std::vector<int>{1, 3, 4});
  }

  TEST_CASE("bitableaux invert on the two lemma domains") {
    for (int k = 1; k <= 8; ++k) {
      if (k % 2 == 0) {
        std::set<Bitableau> seen;
        for (const auto& c : maximal_diagrams(k)) {
          auto b = bitableau_of_cup(c);
          seen.insert(b);
          CHECK(cup_of_bitableau(b) == c);
        }
        CHECK(seen.size() == maximal_diagrams(k).size());
      }
      for (int p = 0; p <= 1; ++p) {
        auto ds = maximal_diagrams(k, p == 0 ? Parity::Even : Parity::Odd);
        std::set<Bitableau> seen;
        for (const auto& c : ds) {
          auto b = bitableau_of_cup(c);
          seen.insert(b);
          CHECK(cup_of_bitableau(b, p) == c);
          CHECK(b.marked.size() == static_cast<std::size_t>(k - k / 2));
        }
        CHECK(seen.size() == ds.size());
      }
    }
  }

  TEST_CASE("s-tables") {
    auto st = enumerate_stables(4);
    for (const auto& p : st) CHECK(is_stable(p));
    auto find = [&](std::vector<int> col2) {
      for (const auto& p : st)
        if (p.col2 == col2) return stable_to_cup(p).encode();
      return std::string("none");
    };
    CHECK(find({4, 3, 2, 1}) == "4: c*(1,2);c*(3,4)");
    CHECK(find({4, 3, 1, -2}) == "4: c*(1,4);c(2,3)");
    CHECK(find({4, 2, -1, -3}) == "4: c(1,2);c(3,4)");
    CHECK(enumerate_stables(2).size() == 2);
    for (int k = 2; k <= 8; k += 2) {
      auto ps = enumerate_stables(k);
      std::set<std::string> image;
      for (const auto& p : ps) image.insert(stable_to_cup(p).encode());
      CHECK(ps.size() == maximal_diagrams(k).size());
      CHECK(image.size() == ps.size());
      for (const auto& c : maximal_diagrams(k)) CHECK(stables_of_cup(c).size() == 1);
    }
    STable bad{2, {1, 2}, {2, 1}};
    CHECK_FALSE(is_stable(bad));
  }

  TEST_CASE("json round trips") {
    for (const auto& t : enumerate_signed({5, 3})) {
      auto j = nlohmann::json::parse(to_json(t).dump());
      CHECK(signed_from_json(j) == t);
    }
    auto t = DominoTableau::from_word("VTBV");
    CHECK(to_json(t).dump() ==
          R"({"shape":[4,4],"dominoes":[{"label":1,"cells":[[1,1],[2,1]],"sign":null},{"label":2,"cells":[[1,2],[1,3]],"sign":null},{"label":3,"cells":[[2,2],[2,3]],"sign":null},{"label":4,"cells":[[1,4],[2,4]],"sign":null}]})");
    CHECK(tableau_from_json(nlohmann::json::parse(to_json(t).dump())) == t);
    auto b = bitableau_of_cup(parse_dsl("4: c*(1,2);c(3,4)"));
    CHECK(to_json(b).dump() == "[[2,3],[1,4]]");
    CHECK(bitableau_from_json(nlohmann::json::parse("[[2,3],[1,4]]")) == b);
    auto p = enumerate_stables(2).front();
    CHECK(stable_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
    CHECK_THROWS_AS(signed_from_json(nlohmann::json::parse(R"({"shape":[2,0],"dominoes":[{"label":1,"cells":[[1,1],[1,3]],"sign":null}]})")), MalformedTableau);
  }
}
