#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "hecke0/equivalence.hpp"
#include "hecke0/module.hpp"
#include "hecke0/poset.hpp"

using namespace hecke0;

namespace {

Permutation P(char const* s) { return Permutation::parse(s); }
SkewShape S(char const* s) { return SkewShape::parse(s); }
Composition C(char const* s) { return Composition::parse(s); }
GeneralizedComposition G(char const* s) { return GeneralizedComposition::parse(s); }

// Hecke relations checked directly on the matrices.
bool satisfies_relations(HeckeModule const& M) {
  for (int i = 1; i < M.n; ++i) {
    auto const& A = M.pi(i);
    if (!(A * A == A)) return false;
    if (i + 1 < M.n) {
      auto const& B = M.pi(i + 1);
      if (!(A * B * A == B * A * B)) return false;
    }
    for (int j = i + 2; j < M.n; ++j)
      if (!(A * M.pi(j) == M.pi(j) * A)) return false;
  }
  return true;
}

bool left_descent(Permutation const& g, int i) { return g.position(i + 1) < g.position(i); }

// Action matrices of the three-case rule on a permutation basis, built independently.
std::vector<Matrix> rule_action(std::vector<Permutation> const& basis) {
  int n = basis.front().size(), d = static_cast<int>(basis.size());
  std::vector<Matrix> out;
  for (int i = 1; i < n; ++i) {
    Matrix A(d, d);
    for (int b = 0; b < d; ++b) {
      auto const& g = basis[b];
      if (left_descent(g, i)) {
        A(b, b) = 1;
        continue;
      }
      std::vector<int> w = g.word();
      for (int& x : w) x = x == i ? i + 1 : (x == i + 1 ? i : x);
      auto it = std::find(basis.begin(), basis.end(), Permutation(w));
      if (it != basis.end()) A(static_cast<int>(it - basis.begin()), b) = 1;
    }
    out.push_back(A);
  }
  return out;
}

bool matches_rule(HeckeModule const& M) {
  auto expect = rule_action(M.perms);
  for (int i = 1; i < M.n; ++i)
    if (!(M.pi(i) == expect[i - 1])) return false;
  return true;
}

Vector basis_vector(HeckeModule const& M, Permutation const& g) { return vector_of(M, {{g, 1}}); }

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> set;
    for (int i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1) set.push_back(i);
    out.push_back(Composition::from_set(IndexSet::from(set), n));
  }
  return out;
}

// Generalized compositions of n: each gap between cells merges parts, separates parts, or separates blocks.
std::vector<GeneralizedComposition> generalized(int n) {
  std::vector<GeneralizedComposition> out;
  int codes = 1;
  for (int i = 1; i < n; ++i) codes *= 3;
  for (int code = 0; code < codes; ++code) {
    std::vector<std::vector<int>> blocks{{1}};
    for (int i = 1, c = code; i < n; ++i, c /= 3) {
      if (c % 3 == 0) ++blocks.back().back();
      else if (c % 3 == 1) blocks.back().push_back(1);
      else blocks.push_back({1});
    }
    std::vector<Composition> comps;
    for (auto const& b : blocks) comps.emplace_back(b);
    out.emplace_back(comps);
  }
  return out;
}

int count_with_descents(int n, IndexSet D) {
  int c = 0;
  for (auto const& g : all_permutations(n)) c += descents(g, Side::left) == D;
  return c;
}

QSym sum(std::vector<QSym> const& xs, int n) {
  QSym out(n);
  for (auto const& x : xs) out = out + x;
  return out;
}

HeckeModule example_subset_module() {
  return subset_module({P("2314"), P("1423"), P("3214"), P("2413"), P("1432"), P("3412")});
}

}  // namespace

TEST_CASE("interval modules follow the three-case rule") {
  auto M = interval_module(P("2134"), P("2143"));
  auto b = basis_vector(M, P("2134"));
  CHECK(M.pi(3) * b == basis_vector(M, P("2143")));
  CHECK(is_zero(M.pi(2) * b));
  CHECK(M.pi(1) * b == b);
  for (auto const& g : all_permutations(4)) {
    auto single = interval_module(g, g);
    REQUIRE(single.dim == 1);
    for (int i = 1; i < 4; ++i) CHECK(single.pi(i)(0, 0) == (left_descent(g, i) ? 1 : 0));
  }
  for (auto const& lo : all_permutations(4))
    for (auto const& hi : all_permutations(4))
      if (weak_leq(lo, hi, Side::left)) {
        auto B = interval_module(lo, hi);
        CHECK(matches_rule(B));
        CHECK(satisfies_relations(B));
        CHECK_FALSE(violated_relation(B));
      }
  CHECK_THROWS_AS(interval_module(P("2143"), P("2134")), invalid_input);
}

TEST_CASE("the twelve-element interval is the poset module of tau_0") {
  auto B = interval_module(P("2134"), P("4321"));
  auto M = poset_module(LabeledPoset::from_tableau(canonical(S("(4,2,1)/(2,1)"), Canonical::tau0)));
  REQUIRE(B.dim == 12);
  REQUIRE(std::set<Permutation>(B.perms.begin(), B.perms.end()) ==
          std::set<Permutation>(M.perms.begin(), M.perms.end()));
  CHECK(matches_rule(M));
  auto X = tableau_module(S("(4,2,1)/(2,1)"));
  CHECK(is_isomorphic(X, B).verdict == IsoVerdict::isomorphic);
}

TEST_CASE("subset modules") {
  auto M = example_subset_module();
  CHECK(M.dim == 6);
  CHECK(matches_rule(M));
  CHECK(satisfies_relations(M));
  auto e = schur_expand(characteristic(M));
  REQUIRE(e);
  CHECK(*e == SchurExpansion{{{3, 1}, 1}, {{2, 1, 1}, 1}});

  auto iv = weak_interval(P("2134"), P("4231"), Side::left);
  auto A = subset_module(iv.elements);
  auto B = interval_module(P("2134"), P("4231"));
  CHECK(A.action == B.action);

  for (auto const& Q : regular_schur_posets(4)) {
    auto X = subset_module(linear_extensions(Q));
    CHECK(X.action == poset_module(Q).action);
  }
  // 123 reaches 321 through 213 and 312, but not through the missing 132.
  CHECK_THROWS_AS(subset_module({P("123"), P("213"), P("312"), P("321")}), invalid_input);
}

TEST_CASE("tableau modules") {
  auto X = tableau_module(S("(2,2)"));
  REQUIRE(X.dim == 2);
  // SYT 12/34 and 13/24: pi_2 sends the first to the second and fixes the second.
  CHECK(satisfies_relations(X));
  for (int n = 1; n <= 5; ++n) {
    auto R = tableau_module(SkewShape({n}, {}));
    REQUIRE(R.dim == 1);
    for (int i = 1; i < n; ++i) CHECK(R.pi(i)(0, 0) == 1);
  }
  for (int n = 1; n <= 5; ++n)
    for (auto const& s : skew_shapes(n)) {
      auto M = tableau_module(s);
      CHECK(satisfies_relations(M));
      CHECK(characteristic(M) == schur_to_f(s));
    }
}

TEST_CASE("projective modules") {
  auto P22 = projective(G("(2,2)"));
  CHECK(projective_interval(G("(2,2)")) == std::pair{P("2143"), P("4231")});
  CHECK(P22.dim == 5);
  CHECK(radical_top_socle(P22).top == SimpleMultiset{{C("(2,2)"), 1}});
  for (int n = 1; n <= 5; ++n) {
    auto one = projective(GeneralizedComposition({Composition({n})}));
    CHECK(one.dim == 1);
    for (auto const& a : compositions(n)) {
      auto Pa = projective(GeneralizedComposition({a}));
      CHECK(Pa.dim == count_with_descents(n, a.set()));
      CHECK(radical_top_socle(Pa).top == SimpleMultiset{{a, 1}});
      CHECK(satisfies_relations(Pa));
    }
  }
}

TEST_CASE("projectives of generalized compositions split along the bracket") {
  for (int n = 1; n <= 6; ++n)
    for (auto const& g : generalized(n)) {
      REQUIRE(g.size() == n);
      std::vector<QSym> parts;
      for (auto const& b : g.bracket()) parts.push_back(characteristic(projective(GeneralizedComposition({b}))));
      CHECK(characteristic(projective(g, 720)) == sum(parts, n));
    }
  auto split = projective(G("(2)*(2)"));
  auto ds = direct_sum({projective(G("(2,2)")), projective(G("(4)"))});
  CHECK(characteristic(split) == characteristic(ds));
  CHECK(is_isomorphic(split, ds).verdict == IsoVerdict::isomorphic);
  CHECK_FALSE(is_indecomposable(split).indecomposable);
}

TEST_CASE("characteristics of simple modules") {
  for (int n = 1; n <= 5; ++n)
    for (auto const& a : compositions(n)) {
      auto F = simple_module(a);
      CHECK(characteristic(F) == QSym::F(a));
      auto rts = radical_top_socle(F);
      CHECK(rts.radical.rank() == 0);
      CHECK(rts.top == SimpleMultiset{{a, 1}});
      CHECK(rts.socle_factors == SimpleMultiset{{a, 1}});
      CHECK(is_indecomposable(F).indecomposable);
      CHECK(is_isomorphic(twist(F, Twist::chi_dual), F).verdict == IsoVerdict::isomorphic);
    }
}

TEST_CASE("the radical quotient is semisimple") {
  std::vector<HeckeModule> mods{example_subset_module(), projective(G("(2,2)")), tableau_module(S("(3,2)/(1)")),
                                interval_module(P("2134"), P("4321"))};
  for (auto const& M : mods) {
    auto rts = radical_top_socle(M);
    auto Q = quotient(M, rts.radical.basis());
    for (int i = 1; i < M.n; ++i)
      for (int j = i + 1; j < M.n; ++j) CHECK(Q.pi(i) * Q.pi(j) == Q.pi(j) * Q.pi(i));
    int top = 0;
    for (auto const& [a, k] : rts.top) top += k;
    CHECK(top == Q.dim);
  }
}

TEST_CASE("socle of the subset module") {
  auto M = example_subset_module();
  auto rts = radical_top_socle(M);
  REQUIRE(rts.socle.size() == 3);
  Echelon E(M.dim);
  for (auto const& g : {P("3412"), P("3214"), P("1432")}) E.add(basis_vector(M, g));
  for (auto const& v : rts.socle) CHECK(E.contains(v));
}

TEST_CASE("hom spaces") {
  auto comps = compositions(4);
  for (auto const& a : comps)
    for (auto const& b : comps)
      CHECK(hom_space(simple_module(a), simple_module(b)).size() == (a == b ? 1U : 0U));
  auto X = tableau_module(S("(4,2)/(2)"));
  auto D = direct_sum({projective(G("(2,2)")), projective(G("(4)"))});
  auto r = is_isomorphic(X, D);
  REQUIRE(r.verdict == IsoVerdict::isomorphic);
  REQUIRE(r.witness);
  CHECK(is_module_map(X, D, *r.witness));
  CHECK(rank(*r.witness) == X.dim);
}

TEST_CASE("isomorphism oracle") {
  auto P22 = projective(G("(2,2)")), P121 = projective(G("(1,2,1)"));
  CHECK(is_isomorphic(P22, P121).verdict == IsoVerdict::not_isomorphic);
  CHECK(radical_top_socle(P22).top != radical_top_socle(P121).top);

  auto rsp = regular_schur_posets(4);
  for (std::size_t a = 0; a < rsp.size(); ++a)
    for (std::size_t b = a; b < rsp.size(); ++b) {
      bool same = schur_recognize(rsp[a])->shape() == schur_recognize(rsp[b])->shape();
      auto res = is_isomorphic(poset_module(rsp[a]), poset_module(rsp[b]));
      CHECK(res.verdict == (same ? IsoVerdict::isomorphic : IsoVerdict::not_isomorphic));
      if (res.witness) CHECK(is_module_map(poset_module(rsp[a]), poset_module(rsp[b]), *res.witness));
    }

  for (int n = 1; n <= 5; ++n) {
    auto shapes = skew_shapes(n);
    for (std::size_t a = 0; a < shapes.size(); ++a)
      for (std::size_t b = a + 1; b < shapes.size(); ++b)
        CHECK(is_isomorphic(tableau_module(shapes[a]), tableau_module(shapes[b])).verdict ==
              IsoVerdict::not_isomorphic);
  }
}

TEST_CASE("indecomposability") {
  CHECK(is_indecomposable(tableau_module(S("(3,3,1)/(1,1)"))).indecomposable);
  CHECK(is_indecomposable(projective(G("(2,2)"))).indecomposable);
  auto split = is_indecomposable(direct_sum({simple_module(C("(2,1)")), simple_module(C("(2,1)"))}));
  CHECK_FALSE(split.indecomposable);
  CHECK(split.endomorphism_dim == 4);
}

TEST_CASE("twists") {
  for (int n = 1; n <= 4; ++n)
    for (auto const& s : skew_shapes(n)) {
      auto X = tableau_module(s);
      auto phi = twist(X, Twist::phi);
      auto theta = twist(X, Twist::theta_hat_dual);
      CHECK(satisfies_relations(phi));
      CHECK(satisfies_relations(theta));
      CHECK(satisfies_relations(twist(X, Twist::chi_dual)));
      CHECK(characteristic(phi) == characteristic(X).rho());
      CHECK(characteristic(theta) == characteristic(X).psi());
      CHECK(is_isomorphic(phi, tableau_module(s.rotate180())).verdict == IsoVerdict::isomorphic);
      CHECK(is_isomorphic(theta, tableau_module(s.transpose())).verdict == IsoVerdict::isomorphic);
    }
  CHECK(parse_twist("phi") == Twist::phi);
  CHECK_THROWS_AS(parse_twist("psi"), invalid_input);
}

TEST_CASE("restriction blocks") {
  auto blocks = restrict_blocks(S("(2,1)"), 2);
  REQUIRE(blocks.size() == 2);
  std::set<int> lower_rows;
  for (auto const& b : blocks) {
    CHECK(b.verified);
    CHECK(b.lower.size() == 2);
    CHECK(b.upper.size() == 1);
    lower_rows.insert(b.lower.rows());
  }
  CHECK(lower_rows == std::set<int>{1, 2});
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      auto one = restrict_blocks(SkewShape({n}, {}), k);
      REQUIRE(one.size() == 1);
      CHECK(one[0].lower == SkewShape({k}, {}));
      CHECK(one[0].upper == SkewShape({n - k}, {}));
    }
  // Blocks partition the SYT basis and each is verified.
  auto s = S("(3,2)/(1)");
  std::size_t total = 0;
  for (auto const& b : restrict_blocks(s, 2)) {
    CHECK(b.verified);
    total += b.basis.size();
  }
  CHECK(total == enumerate_syt(s).size());
}

TEST_CASE("three-dimensional submodules of the subset module") {
  auto M = example_subset_module();
  auto first = verify_submodule(M, {basis_vector(M, P("3214")), basis_vector(M, P("1432")), basis_vector(M, P("3412"))});
  CHECK(first.closed);
  CHECK(first.dim == 3);
  CHECK(first.ch == QSym::F(C("(3,1)")) + QSym::F(C("(1,3)")) + QSym::F(C("(1,2,1)")));

  auto eighth = verify_submodule(M, {vector_of(M, {{P("2314"), 1}, {P("3214"), -1}}), basis_vector(M, P("2413")),
                                     basis_vector(M, P("3412"))});
  CHECK(eighth.closed);
  CHECK(eighth.ch == QSym::F(C("(2,1,1)")) + QSym::F(C("(2,2)")) + QSym::F(C("(1,2,1)")));

  CHECK_FALSE(verify_submodule(M, {basis_vector(M, P("2314"))}).closed);
}

TEST_CASE("projective cover and injective hull") {
  auto P22 = LabeledPoset::from_tableau(canonical(S("(2,2)"), Canonical::tau0));
  auto ch = proj_cover_inj_hull(P22);
  CHECK(ch.proj == G("(2,2)"));
  CHECK(ch.inj == G("(1,2,1)"));
  CHECK(ch.cover_ok);
  CHECK(ch.hull_ok);
  CHECK(S("(5,5,3,2)/(3,3,1)").balproj() == G("(2,2)*(2,2)"));
  for (int n = 1; n <= 4; ++n)
    for (auto const& Q : regular_schur_posets(n)) {
      auto r = proj_cover_inj_hull(Q);
      CHECK(r.cover_ok);
      CHECK(r.hull_ok);
      auto s = r.tau.shape();
      if (s.is_ribbon() && s.is_connected())
        CHECK(is_isomorphic(poset_module(Q), projective(r.proj)).verdict == IsoVerdict::isomorphic);
    }
  auto chain = LabeledPoset::from_relations(3, {{2, 1}, {3, 2}});
  if (!schur_recognize(chain) || !schur_recognize(chain)->is_distinguished())
    CHECK_THROWS_AS(proj_cover_inj_hull(chain), invalid_input);
}

TEST_CASE("dimension cap") {
  CHECK_THROWS_AS(interval_module(Permutation::identity(5), Permutation::longest(5), 100), invalid_input);
  CHECK_NOTHROW(interval_module(Permutation::identity(5), Permutation::longest(5), 120));
}
