#include <catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "hecke0/poset.hpp"
#include "hecke0/qsym.hpp"
#include "hecke0/tableau.hpp"

using namespace hecke0;

namespace {

Permutation P(char const* s) { return Permutation::parse(s); }
SkewShape S(char const* s) { return SkewShape::parse(s); }
Tableau T(std::vector<std::vector<int>> const& rows) { return Tableau::from_rows(rows); }

// Fillings of a shape by 1..n filtered by a predicate: an enumeration independent of the backtracking.
template <typename Pred>
std::vector<Tableau> filter_fillings(SkewShape const& s, Pred keep) {
  std::vector<int> w(s.size());
  std::iota(w.begin(), w.end(), 1);
  std::vector<Tableau> out;
  do {
    Tableau t(s, w);
    if (keep(t)) out.push_back(t);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Linear extensions by filtering S_n: i < j in P forces gamma(i) < gamma(j).
std::vector<Permutation> oracle_linexts(LabeledPoset const& Q) {
  std::vector<Permutation> out;
  for (auto const& g : all_permutations(Q.size())) {
    bool ok = true;
    for (int i = 1; i <= Q.size() && ok; ++i)
      for (int j = 1; j <= Q.size() && ok; ++j)
        if (Q.less(i, j) && g(i) > g(j)) ok = false;
    if (ok) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), length_lex_less);
  return out;
}

QSym F(std::vector<int> a) { return QSym::F(Composition(std::move(a))); }

}  // namespace

TEST_CASE("SYT enumeration") {
  CHECK(enumerate_syt(S("(2,1)")).size() == 2);
  CHECK(enumerate_syt(S("(4,2,1)/(2,1)")).size() == 12);
  CHECK(enumerate_syt(S("(1,1,1,1)")).size() == 1);
  for (int n = 1; n <= 5; ++n)
    for (auto const& s : skew_shapes(n)) {
      auto got = enumerate_syt(s);
      auto want = filter_fillings(s, [](Tableau const& t) { return t.is_standard(); });
      REQUIRE(std::set<Tableau>(got.begin(), got.end()) == std::set<Tableau>(want.begin(), want.end()));
    }
}

TEST_CASE("canonical labelings and tableaux") {
  auto s = S("(5,5,3,2)/(3,3,1)");
  CHECK(canonical(s, Canonical::tau0).rows() == std::vector<std::vector<int>>{{0, 0, 0, 2, 1}, {0, 0, 0, 4, 3}, {0, 6, 5}, {8, 7}});
  CHECK(canonical(s, Canonical::col).rows() == std::vector<std::vector<int>>{{0, 0, 0, 5, 7}, {0, 0, 0, 6, 8}, {0, 2, 4}, {1, 3}});
  auto row = S("(4)");
  CHECK(canonical(row, Canonical::row).rows() == std::vector<std::vector<int>>{{1, 2, 3, 4}});
  CHECK(canonical(row, Canonical::tau1).rows() == std::vector<std::vector<int>>{{4, 3, 2, 1}});
}

TEST_CASE("reading words") {
  CHECK(reading(T({{4, 2, 3}, {5, 1}}), T({{1, 3, 4}, {2, 5}})) == P("53412"));
  auto tau = T({{4, 2, 3}, {5, 1}});
  CHECK(reading(tau, tau) == Permutation::identity(5));
  auto s = S("(4,2,1)/(2,1)");
  CHECK(reading(canonical(s, Canonical::tau0), canonical(s, Canonical::row)) == P("2134"));
}

TEST_CASE("descent compositions of SYT") {
  CHECK(syt_descent_comp(T({{1, 2}, {3, 4}})) == Composition({2, 2}));
  CHECK(syt_descent_comp(T({{1, 2, 3}})) == Composition({3}));
  CHECK(syt_descent_comp(T({{1}, {2}, {3}})) == Composition({1, 1, 1}));
}

TEST_CASE("Schur labelings") {
  auto s = S("(2,2)/(1)");
  auto dist = distinguished_labelings(s);
  CHECK(std::find(dist.begin(), dist.end(), T({{0, 1}, {3, 2}})) != dist.end());
  CHECK(schur_labelings(S("(1)")).size() == 1);
  for (int n = 1; n <= 5; ++n)
    for (auto const& sh : skew_shapes(n)) {
      auto got = schur_labelings(sh);
      auto want = filter_fillings(sh, [](Tableau const& t) { return t.is_schur_labeling(); });
      REQUIRE(std::set<Tableau>(got.begin(), got.end()) == std::set<Tableau>(want.begin(), want.end()));
      // Rotation with complement carries Schur labelings of a shape onto those of its rotation.
      std::set<Tableau> rotated;
      for (auto const& t : got) rotated.insert(t.rotate_complement());
      auto other = schur_labelings(sh.rotate180());
      REQUIRE(rotated == std::set<Tableau>(other.begin(), other.end()));
    }
  // Schur labelings (rows decrease, columns increase) do not in general match SYT in number.
  CHECK(schur_labelings(S("(2,1)")).size() == 1);
  CHECK(enumerate_syt(S("(2,1)")).size() == 2);
}

TEST_CASE("readings of SYT give the linear extensions of poset(tau)") {
  for (int n = 1; n <= 5; ++n)
    for (auto const& s : skew_shapes(n))
      for (auto const& tau : schur_labelings(s)) {
        std::vector<Permutation> reads;
        for (auto const& t : enumerate_syt(s)) reads.push_back(reading(tau, t));
        std::sort(reads.begin(), reads.end(), length_lex_less);
        REQUIRE(reads == oracle_linexts(LabeledPoset::from_tableau(tau)));
      }
}

TEST_CASE("RSK") {
  auto [p1, q1] = rsk(P("312"));
  CHECK(p1 == T({{1, 2}, {3}}));
  CHECK(q1 == T({{1, 3}, {2}}));
  auto [p2, q2] = rsk(P("53412"));
  CHECK(p2 == T({{1, 2}, {3, 4}, {5}}));
  CHECK(q2 == T({{1, 3}, {2, 5}, {4}}));
  auto [p3, q3] = rsk(Permutation::identity(4));
  CHECK(p3 == T({{1, 2, 3, 4}}));
  CHECK(q3 == p3);
  for (int n = 1; n <= 6; ++n) {
    std::set<std::pair<Tableau, Tableau>> seen;
    for (auto const& w : all_permutations(n)) {
      auto pq = rsk(w);
      REQUIRE(pq.first.shape() == pq.second.shape());
      REQUIRE(pq.first == rsk(w.inverse()).second);
      seen.insert(pq);
    }
    REQUIRE(seen.size() == all_permutations(n).size());
  }
}

TEST_CASE("rectification") {
  auto straight = T({{1, 3}, {2}});
  CHECK(rectify(straight) == straight);
  CHECK(rectify(T({{0, 1}, {2, 3}})) == T({{1, 3}, {2}}));
  std::set<std::vector<int>> shapes;
  for (auto const& t : enumerate_syt(S("(4,2,1)/(2,1)"))) shapes.insert(rectify(t).partition());
  CHECK(shapes == std::set<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}});
  for (int n = 1; n <= 5; ++n)
    for (auto const& s : skew_shapes(n)) {
      auto t0 = canonical(s, Canonical::tau0);
      for (auto const& t : enumerate_syt(s)) {
        auto r = rectify(t);
        REQUIRE(r.shape().is_straight());
        REQUIRE(r.is_standard());
        REQUIRE(r == rsk(reading(t0, t) * Permutation::longest(n)).first);
      }
    }
}

TEST_CASE("poset(tau) and linear extensions") {
  auto chain_tau = T({{3, 2, 1}});
  auto chain = LabeledPoset::from_tableau(chain_tau);
  CHECK(chain.less(3, 2));
  CHECK(chain.less(2, 1));
  CHECK(linear_extensions(chain, Side::left) == std::vector<Permutation>{P("321")});

  auto ex = LabeledPoset::from_tableau(T({{0, 0, 2}, {3, 1}}));
  auto right = linear_extensions(ex, Side::right);
  CHECK(std::set<Permutation>(right.begin(), right.end()) == std::set<Permutation>{P("312"), P("231"), P("321")});

  auto fig = LabeledPoset::from_tableau(canonical(S("(4,2,1)/(2,1)"), Canonical::tau0));
  CHECK(linear_extensions(fig, Side::left) == weak_interval(P("2134"), P("4321"), Side::left).elements);

  auto id_chain = LabeledPoset::from_relations(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(linear_extensions(id_chain, Side::left) == std::vector<Permutation>{Permutation::identity(4)});

  auto big = LabeledPoset::from_tableau(canonical(S("(5,5,3,2)/(3,3,1)"), Canonical::tau0));
  CHECK(big.covers() == std::vector<std::pair<int, int>>{{1, 3}, {2, 1}, {2, 4}, {4, 3}, {6, 5}, {6, 7}, {8, 7}});

  for (auto const& Q : enumerate_posets(4)) REQUIRE(linear_extensions(Q, Side::left) == oracle_linexts(Q));
}

TEST_CASE("labeled poset counts") {
  std::vector<std::size_t> known{1, 1, 3, 19, 219, 4231};
  for (int n = 1; n <= 5; ++n) CHECK(enumerate_posets(n).size() == known[n]);
}

TEST_CASE("regularity") {
  CHECK_FALSE(is_regular(LabeledPoset::from_relations(3, {{1, 3}})));
  CHECK(is_regular(LabeledPoset::from_relations(4, {{2, 4}, {4, 1}, {1, 3}})));
  for (int n = 1; n <= 5; ++n)
    for (auto const& s : skew_shapes(n))
      for (auto const& tau : distinguished_labelings(s)) REQUIRE(is_regular(LabeledPoset::from_tableau(tau)));
}

TEST_CASE("Schur labeled recognition") {
  auto anti = LabeledPoset::from_relations(2, {});
  auto t = schur_recognize(anti);
  REQUIRE(t);
  CHECK(*t == T({{0, 1}, {2}}));
  // 1 below two incomparable elements forces a row ending in a larger entry.
  CHECK_FALSE(schur_recognize(LabeledPoset::from_relations(3, {{1, 2}, {1, 3}})).has_value());
  CHECK(schur_recognize(LabeledPoset::from_relations(3, {{1, 3}})).has_value());
  for (int n = 1; n <= 4; ++n)
    for (auto const& Q : enumerate_posets(n)) {
      auto r = schur_recognize(Q);
      if (r) REQUIRE(LabeledPoset::from_tableau(*r) == Q);
      bool brute = false;
      for (auto const& s : skew_shapes(n))
        for (auto const& tau : schur_labelings(s)) brute = brute || LabeledPoset::from_tableau(tau) == Q;
      REQUIRE(brute == r.has_value());
    }
}

TEST_CASE("K_P in the fundamental basis") {
  CHECK(kp(LabeledPoset::from_relations(3, {{1, 2}, {2, 3}})) == F({3}));
  auto ex = LabeledPoset::from_tableau(T({{0, 0, 2}, {3, 1}}));
  CHECK(kp(ex) == F({1, 2}) + F({2, 1}) + F({1, 1, 1}));
  CHECK(kp(LabeledPoset::from_relations(2, {})) == F({1, 1}) + F({2}));
  for (int n = 1; n <= 4; ++n)
    for (auto const& Q : schur_posets(n)) REQUIRE(to_monomials(kp(Q), n) == kp_monomial(Q, n));
}

TEST_CASE("convex standardization") {
  auto Q = LabeledPoset::from_tableau(canonical(S("(3,2)/(1)"), Canonical::tau0));
  CHECK(convex_standardize(Q, {1, 2, 3, 4}) == Q);
  CHECK(convex_standardize(Q, {3}).size() == 1);
  auto chain = LabeledPoset::from_relations(3, {{1, 2}, {2, 3}});
  CHECK_THROWS_AS(convex_standardize(chain, {1, 3}), invalid_input);
}

TEST_CASE("fundamental products and involutions") {
  CHECK(F({1}) * F({1}) == F({2}) + F({1, 1}));
  CHECK(F({2, 1}) * QSym::F(Composition(std::vector<int>{})) == F({2, 1}));
  CHECK(F({1, 2}).psi() == F({2, 1}));
  CHECK(F({1, 3}).rho() == F({3, 1}));
  auto f = F({2, 1}) + Rational(3) * F({1, 1, 1});
  CHECK(f.rho().rho() == f);
  CHECK(f.psi().psi() == f);
}

TEST_CASE("Schur functions") {
  CHECK(schur_to_f(S("(2,1)")) == F({2, 1}) + F({1, 2}));
  CHECK(schur_to_f(S("(3)")) == F({3}));
  auto e = schur_expand(schur_to_f(S("(4,2,1)/(2,1)")));
  REQUIRE(e);
  CHECK(*e == SchurExpansion{{{4}, 1}, {{3, 1}, 2}, {{2, 2}, 1}, {{2, 1, 1}, 1}});
  CHECK(*schur_expand(schur_to_f(S("(2,1)"))) == SchurExpansion{{{2, 1}, 1}});
  CHECK(*schur_expand(F({1, 2}) + F({2, 1}) + F({1, 1, 1})) == SchurExpansion{{{2, 1}, 1}, {{1, 1, 1}, 1}});
  CHECK_FALSE(schur_expand(F({2, 1})).has_value());
  for (int n = 1; n <= 6; ++n)
    for (auto const& lam : partitions(n)) {
      std::vector<int> conj;
      for (int c = 0; c < lam[0]; ++c) {
        int h = 0;
        for (int p : lam) h += p > c;
        conj.push_back(h);
      }
      REQUIRE(schur_to_f(SkewShape(lam, {})).psi() == schur_to_f(SkewShape(conj, {})));
    }
}

TEST_CASE("distinguished labelings of the displayed three-row shape") {
  // The displayed diagram has a single cell in its top row, so its shape is (3,2,2)/(2).
  auto t0 = T({{0, 0, 1}, {3, 2}, {5, 4}});
  auto t1 = T({{0, 0, 1}, {4, 2}, {5, 3}});
  auto t = T({{0, 0, 2}, {3, 1}, {5, 4}});
  REQUIRE(t0.shape() == S("(3,2,2)/(2)"));
  for (auto const& x : {t0, t1, t}) CHECK(x.is_schur_labeling());
  CHECK(t0.is_distinguished());
  CHECK(t1.is_distinguished());
  CHECK_FALSE(t.is_distinguished());
  CHECK(canonical(S("(3,2,2)/(2)"), Canonical::tau0) == t0);
  CHECK(canonical(S("(3,2,2)/(2)"), Canonical::tau1) == t1);
}
