#include <catch_amalgamated.hpp>

#include <set>

#include "hecke0/permutation.hpp"
#include "hecke0/shape.hpp"

using namespace hecke0;

namespace {

Permutation P(char const* s) { return Permutation::parse(s); }

// Independent oracles: inversion sets by value (left order) and by position (right order).
// Value pairs a < b with b written first; inclusion of these orders right weak order.
std::set<std::pair<int, int>> inv_values(Permutation const& w) {
  std::set<std::pair<int, int>> out;
  for (int a = 1; a <= w.size(); ++a)
    for (int b = a + 1; b <= w.size(); ++b)
      if (w.position(b) < w.position(a)) out.emplace(a, b);
  return out;
}

// Position pairs i < j with w(i) > w(j); inclusion of these orders left weak order.
std::set<std::pair<int, int>> inv_positions(Permutation const& w) {
  std::set<std::pair<int, int>> out;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) out.emplace(i, j);
  return out;
}

bool oracle_leq(Permutation const& a, Permutation const& b, Side side) {
  auto ia = side == Side::left ? inv_positions(a) : inv_values(a);
  auto ib = side == Side::left ? inv_positions(b) : inv_values(b);
  return std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
}

IndexSet oracle_descents(Permutation const& w, Side side) {
  IndexSet d;
  for (int i = 1; i < w.size(); ++i)
    if (side == Side::right ? w(i) > w(i + 1) : w.position(i + 1) < w.position(i)) d.insert(i);
  return d;
}

}  // namespace

TEST_CASE("descents on both sides") {
  CHECK(descents(P("2134"), Side::left) == IndexSet::from({1}));
  CHECK(descents(P("53412"), Side::right) == IndexSet::from({1, 3}));
  CHECK(descents(P("1234"), Side::left).empty());
  CHECK(descents(P("1234"), Side::right).empty());
  for (int n = 1; n <= 5; ++n)
    for (auto const& w : all_permutations(n))
      for (auto side : {Side::left, Side::right}) REQUIRE(descents(w, side) == oracle_descents(w, side));
}

TEST_CASE("weak order comparisons agree with inversion-set inclusion") {
  CHECK(weak_leq(P("123"), P("321"), Side::left));
  CHECK(weak_leq(P("213"), P("321"), Side::right));
  CHECK_FALSE(weak_leq(P("213"), P("132"), Side::left));
  for (int n = 1; n <= 4; ++n)
    for (auto const& a : all_permutations(n))
      for (auto const& b : all_permutations(n))
        for (auto side : {Side::left, Side::right}) REQUIRE(weak_leq(a, b, side) == oracle_leq(a, b, side));
}

TEST_CASE("left order is right order on inverses") {
  for (int n = 1; n <= 5; ++n)
    for (auto const& a : all_permutations(n))
      for (auto const& b : all_permutations(n))
        REQUIRE(weak_leq(a, b, Side::left) == weak_leq(a.inverse(), b.inverse(), Side::right));
}

TEST_CASE("intervals") {
  auto fig = weak_interval(P("2134"), P("2143"), Side::left);
  REQUIRE(fig.size() == 2);
  REQUIRE(fig.covers.size() == 1);
  CHECK(fig.covers[0].color == 3);

  auto big = weak_interval(P("2134"), P("4321"), Side::left);
  CHECK(big.size() == 12);
  CHECK(big.bottom == P("2134"));

  auto one = weak_interval(P("3142"), P("3142"), Side::right);
  CHECK(one.elements == std::vector<Permutation>{P("3142")});
  CHECK(one.covers.empty());

  CHECK_THROWS_AS(weak_interval(P("2143"), P("2134"), Side::left), invalid_input);

  SECTION("every interval of S_4 matches the brute-force filter, covers are colored adjacent moves") {
    auto all = all_permutations(4);
    for (auto side : {Side::left, Side::right})
      for (auto const& a : all)
        for (auto const& b : all) {
          if (!oracle_leq(a, b, side)) continue;
          auto iv = weak_interval(a, b, side);
          std::set<Permutation> want;
          for (auto const& g : all)
            if (oracle_leq(a, g, side) && oracle_leq(g, b, side)) want.insert(g);
          REQUIRE(std::set<Permutation>(iv.elements.begin(), iv.elements.end()) == want);
          for (auto const& c : iv.covers) {
            REQUIRE(iv.elements[c.from].mul(c.color, side) == iv.elements[c.to]);
            REQUIRE(iv.elements[c.to].length() == iv.elements[c.from].length() + 1);
          }
        }
  }
}

TEST_CASE("translation to the identity is an order isomorphism of left intervals") {
  auto all = all_permutations(4);
  for (auto const& a : all)
    for (auto const& b : all) {
      if (!weak_leq(a, b, Side::left)) continue;
      auto I = weak_interval(a, b, Side::left);
      auto J = weak_interval(Permutation::identity(4), b * a.inverse(), Side::left);
      REQUIRE(I.size() == J.size());
      for (auto const& x : I.elements) {
        REQUIRE(J.contains(x * a.inverse()));
        for (auto const& y : I.elements)
          REQUIRE(weak_leq(x, y, Side::left) == weak_leq(x * a.inverse(), y * a.inverse(), Side::left));
      }
    }
}

TEST_CASE("w0 conjugation is an involution preserving length and descent count") {
  for (int n = 1; n <= 5; ++n) {
    auto w0 = Permutation::longest(n);
    for (auto const& g : all_permutations(n)) {
      auto c = w0 * g * w0;
      REQUIRE(w0 * c * w0 == g);
      REQUIRE(c.length() == g.length());
      REQUIRE(descents(c, Side::left).size() == descents(g, Side::left).size());
    }
  }
}

TEST_CASE("longest elements of parabolic subgroups") {
  CHECK(longest_element(4, IndexSet::from({1, 2, 3})) == P("4321"));
  CHECK(longest_element(4, IndexSet::from({1, 3})) == P("2143"));
  CHECK(longest_element(4, IndexSet{}) == P("1234"));
}

TEST_CASE("descent classes are right intervals") {
  auto iv = descent_class_interval(3, IndexSet::from({1}), IndexSet::from({1, 2}));
  CHECK(iv.side == Side::right);
  CHECK(iv.bottom == P("213"));
  CHECK(iv.top == P("321"));
  CHECK(std::set<Permutation>(iv.elements.begin(), iv.elements.end()) == std::set<Permutation>{P("213"), P("231"), P("321")});
  CHECK(descent_class_interval(4, IndexSet{}, IndexSet::full(4)).size() == 24);
  for (int n = 1; n <= 5; ++n)
    for (std::uint32_t J = 0; J < (1U << (n - 1)); ++J)
      for (std::uint32_t I = J;; I = (I - 1) & J) {
        IndexSet Is(I << 1), Js(J << 1);
        std::set<Permutation> want;
        for (auto const& g : all_permutations(n)) {
          auto d = oracle_descents(g, Side::left);
          if (Is.subset_of(d) && d.subset_of(Js)) want.insert(g);
        }
        auto got = descent_class_interval(n, Is, Js);
        REQUIRE(std::set<Permutation>(got.elements.begin(), got.elements.end()) == want);
        if (I == 0) break;
      }
}

TEST_CASE("permutation parsing rejects malformed words") {
  CHECK_THROWS_AS(P("1224"), invalid_input);
  CHECK_THROWS_AS(P("13a"), invalid_input);
  CHECK_THROWS_AS(P("235"), invalid_input);
  CHECK(P("312").str() == "312");
}

TEST_CASE("composition operations") {
  CHECK(Composition({2, 2}).complement() == Composition({1, 2, 1}));
  CHECK(Composition({1, 2, 1}).reverse() == Composition({1, 2, 1}));
  CHECK(Composition({4}).set().empty());
  for (int n = 1; n <= 8; ++n)
    for (std::uint32_t m = 0; m < (1U << (n - 1)); ++m) {
      auto a = Composition::from_set(IndexSet(m << 1), n);
      REQUIRE(a.size() == n);
      REQUIRE(a.complement().complement() == a);
      REQUIRE(a.reverse().reverse() == a);
      REQUIRE(a.set() == IndexSet(m << 1));
    }
}

TEST_CASE("star of skew shapes") {
  auto a = SkewShape::parse("(2,2)"), b = SkewShape::parse("(3,2)/(1)");
  CHECK(star(a, b) == SkewShape::parse("(5,5,3,2)/(3,3,1)"));
  CHECK(star(SkewShape::parse("(1)"), SkewShape::parse("(1)")) == SkewShape::parse("(2,1)/(1)"));
  CHECK(star(a, SkewShape({}, {})) == a);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (auto const& x : skew_shapes(i))
          for (auto const& y : skew_shapes(j))
            for (auto const& z : skew_shapes(k)) {
              REQUIRE(star(star(x, y), z) == star(x, star(y, z)));
              REQUIRE(star(x, y).size() == i + j);
            }
}

TEST_CASE("diagram predicates") {
  auto sq = SkewShape::parse("(2,2)");
  CHECK(sq.is_connected());
  CHECK_FALSE(sq.is_ribbon());

  auto dominoes = SkewShape::parse("(4,2)/(2)");
  auto comps = dominoes.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == SkewShape::parse("(2)"));
  CHECK(comps[1] == SkewShape::parse("(2)"));
  CHECK(dominoes.contains_disconnected_ribbon());

  auto x = SkewShape::parse("(3,3,1)/(1,1)");
  CHECK_FALSE(x.is_connected());
  CHECK_FALSE(x.contains_disconnected_ribbon());
}

TEST_CASE("transpose and rotation") {
  auto s = SkewShape::parse("(3,2)/(2)");
  CHECK(s.transpose() == SkewShape::parse("(2,2,1)/(1,1)"));
  CHECK(s.rotate180() == SkewShape::parse("(3,1)/(1)"));
  CHECK(SkewShape::parse("(2,2)").rotate180() == SkewShape::parse("(2,2)"));
  for (int n = 1; n <= 6; ++n)
    for (auto const& t : skew_shapes(n)) {
      REQUIRE(t.transpose().transpose() == t);
      REQUIRE(t.rotate180().rotate180() == t);
      REQUIRE(t.transpose().size() == n);
    }
}

TEST_CASE("bal and bracket") {
  CHECK(SkewShape::parse("(5,5,3,2)/(3,3,1)").balproj() == GeneralizedComposition::parse("(2,2)*(2,2)"));
  CHECK(SkewShape::parse("(2,2)").balinj() == GeneralizedComposition::parse("(1,2,1)"));
  CHECK(SkewShape::parse("(4)").balproj() == GeneralizedComposition::parse("(4)"));

  auto br = GeneralizedComposition::parse("(2)*(2)").bracket();
  CHECK(std::set<Composition>(br.begin(), br.end()) == std::set<Composition>{Composition({2, 2}), Composition({4})});
  CHECK(GeneralizedComposition::parse("(3,1)").bracket() == std::vector<Composition>{Composition({3, 1})});
  auto br3 = GeneralizedComposition::parse("(1)*(1)*(1)").bracket();
  CHECK(std::set<Composition>(br3.begin(), br3.end()) ==
        std::set<Composition>{Composition({1, 1, 1}), Composition({2, 1}), Composition({1, 2}), Composition({3})});

  for (int n = 1; n <= 6; ++n)
    for (auto const& s : skew_shapes(n)) {
      auto g = s.balproj();
      int total = 0;
      for (auto const& b : g.blocks()) total += b.size();
      REQUIRE(total == n);
      REQUIRE(g.bracket().size() == (std::size_t(1) << (g.blocks().size() - 1)));
    }
}

TEST_CASE("skew shape enumeration is basic and duplicate free") {
  // A basic shape is the star of its components, top to bottom, so counts satisfy
  // |shapes(n)| = sum over compositions c of n of prod |connected shapes(c_i)|.
  std::vector<long> connected(7, 0), total(7, 0);
  for (int n = 1; n <= 6; ++n) {
    auto v = skew_shapes(n);
    REQUIRE(std::set<SkewShape>(v.begin(), v.end()).size() == v.size());
    for (auto const& s : v) {
      REQUIRE(s.size() == n);
      auto comps = s.components();
      SkewShape rebuilt({}, {});
      for (auto const& c : comps) rebuilt = star(rebuilt, c);
      REQUIRE(rebuilt == s);
      connected[n] += s.is_connected();
    }
    total[n] = static_cast<long>(v.size());
  }
  std::vector<long> by_parts(7, 0);
  by_parts[0] = 1;
  for (int n = 1; n <= 6; ++n)
    for (int first = 1; first <= n; ++first) by_parts[n] += connected[first] * by_parts[n - first];
  for (int n = 1; n <= 6; ++n) CHECK(total[n] == by_parts[n]);
  CHECK(total[2] == 3);
}

TEST_CASE("shape parsing is strict") {
  CHECK_THROWS_AS(SkewShape::parse("(2,3)"), invalid_input);
  CHECK_THROWS_AS(SkewShape::parse("(3,2)/(3,1)x"), invalid_input);
  CHECK_THROWS_AS(SkewShape::parse("(2)/(3)"), invalid_input);
  CHECK(SkewShape::parse("(3,2)/(1)").str() == "(3,2)/(1)");
}
