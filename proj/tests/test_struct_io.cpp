#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "hecke0/equivalence.hpp"
#include "hecke0/io.hpp"
#include "hecke0/verify.hpp"

using namespace hecke0;
using namespace hecke0::io;

namespace {

Permutation P(char const* s) { return Permutation::parse(s); }
SkewShape S(char const* s) { return SkewShape::parse(s); }

WeakInterval L(char const* lo, char const* hi) { return weak_interval(P(lo), P(hi), Side::left); }

std::set<Permutation> as_set(std::vector<Permutation> const& v) { return {v.begin(), v.end()}; }

LabeledPoset big_tau0() { return LabeledPoset::from_tableau(canonical(S("(4,2,1)/(2,1)"), Canonical::tau0)); }

}  // namespace

TEST_CASE("descent-preserving equivalence") {
  CHECK(descent_preserving_equiv(L("2134", "2143"), L("2314", "2413")));
  CHECK(descent_preserving_equiv(L("2341", "2431"), L("2134", "2143")));
  CHECK(descent_preserving_equiv(L("2134", "4321"), L("2134", "4321")));
  CHECK_FALSE(descent_preserving_equiv(L("1234", "2134"), L("1234", "1324")));
  CHECK_THROWS_AS(descent_preserving_equiv(weak_interval(P("12"), P("21"), Side::right), L("12", "21")), invalid_input);
}

TEST_CASE("equivalence class of a small interval") {
  auto d = equivalence_class(P("2134"), P("2143"));
  CHECK(d.xi == P("1243"));
  CHECK(d.class_size == 3);
  CHECK(d.min.side == Side::right);
  CHECK(d.min.bottom == P("2134"));
  CHECK(d.min.top == P("2341"));
  CHECK(as_set(d.min.elements) == std::set<Permutation>{P("2134"), P("2314"), P("2341")});
  CHECK(d.max.bottom == P("2143"));
  CHECK(d.max.top == P("2431"));
  // Every member is descent-preserving equivalent to the original.
  for (auto const& s : d.min.elements)
    CHECK(descent_preserving_equiv(L("2134", "2143"), weak_interval(s, d.xi * s, Side::left)));
}

TEST_CASE("singleton classes collect a descent class") {
  for (auto const& g : all_permutations(4)) {
    auto d = equivalence_class(g, g);
    CHECK(d.xi == Permutation::identity(4));
    std::set<Permutation> expect;
    for (auto const& h : all_permutations(4))
      if (descents(h, Side::left) == descents(g, Side::left)) expect.insert(h);
    CHECK(as_set(d.min.elements) == expect);
    CHECK(d.class_size == static_cast<int>(expect.size()));
  }
}

TEST_CASE("classes of regular Schur posets collect equal shapes") {
  auto rsp = regular_schur_posets(4);
  for (auto const& Q : rsp) {
    auto ext = linear_extensions(Q);
    auto lo = *std::min_element(ext.begin(), ext.end(), length_lex_less);
    auto hi = *std::max_element(ext.begin(), ext.end(), length_lex_less);
    auto d = equivalence_class(lo, hi);
    auto shape = schur_recognize(Q)->shape();
    int same = 0;
    for (auto const& R : rsp) same += schur_recognize(R)->shape() == shape;
    CHECK(d.class_size == same);
  }
}

TEST_CASE("dual plactic closure") {
  auto r = dual_knuth_closure_test({P("231"), P("312"), P("321")});
  CHECK_FALSE(r.closed);
  REQUIRE(r.missing);
  CHECK(*r.missing == P("132"));
  CHECK(dual_knuth_closure_test(all_permutations(5)).closed);
  CHECK(dual_knuth_closure_test({}).closed);
  auto big = dual_knuth_closure_test(linear_extensions(big_tau0()));
  CHECK(big.closed);
  CHECK(big.recording.size() == 5);
}

TEST_CASE("distinguished filtrations") {
  auto F = distinguished_filtration(big_tau0());
  CHECK(F.closed);
  CHECK(F.quotients_match);
  std::vector<SchurExpansion> expect{{{{4}, 1}}, {{{3, 1}, 1}}, {{{3, 1}, 1}}, {{{2, 2}, 1}}, {{{2, 1, 1}, 1}}};
  CHECK(F.quotient_schur == expect);
  std::size_t total = 0;
  for (auto const& layer : F.layers) total += layer.size();
  CHECK(total == 12);

  // The two tableaux of equal shape may come in either order.
  auto order = F.order;
  REQUIRE(order[1].partition() == order[2].partition());
  std::swap(order[1], order[2]);
  auto F2 = distinguished_filtration(big_tau0(), order);
  CHECK(F2.closed);
  CHECK(F2.quotients_match);
  CHECK(F2.layers != F.layers);
  CHECK(F2.quotient_schur == F.quotient_schur);

  // Dominance must be respected.
  auto bad = F.order;
  std::swap(bad.front(), bad.back());
  CHECK_THROWS_AS(distinguished_filtration(big_tau0(), bad), invalid_input);

  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i < n; ++i) rel.push_back({i + 1, i});  // n < ... < 1 fills a single row
    auto C = distinguished_filtration(LabeledPoset::from_relations(n, rel));
    REQUIRE(C.layers.size() == 1);
    CHECK(C.quotient_schur.front() == SchurExpansion{{{n}, 1}});
  }
}

TEST_CASE("filtration non-existence probe") {
  auto M = verify::detail::table_module();
  std::vector<std::vector<Vector>> candidates;
  for (auto const& row : verify::detail::submodule_table()) {
    std::vector<Vector> span;
    for (auto const& terms : row.span) span.push_back(verify::detail::table_vector(M, terms));
    candidates.push_back(span);
  }
  std::vector<QSym> targets{verify::detail::schur({3, 1}), verify::detail::schur({2, 1, 1})};
  auto rows = filtration_nonexistence_probe(M, candidates, targets);
  REQUIRE(rows.size() == 9);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].closed);
    CHECK(rows[k].dim == 3);
    CHECK(rows[k].socle_dim == verify::detail::submodule_table()[k].socle_dim);
    CHECK_FALSE(rows[k].hits_target);
  }

  auto a = Composition::parse("(2,1)");
  auto D = direct_sum({simple_module(a), tableau_module(S("(2,1)"))});
  Vector e0(D.dim);
  e0[0] = 1;
  auto hit = filtration_nonexistence_probe(D, {{e0}}, {QSym::F(a)});
  CHECK(hit.front().closed);
  CHECK(hit.front().hits_target);
}

TEST_CASE("JSON round trips") {
  auto g = P("31524");
  CHECK(permutation_from_json(to_json(g)) == g);
  CHECK(permutation_from_json(json("31524")) == g);

  auto iv = L("2134", "4321");
  auto iv2 = interval_from_json(to_json(iv));
  CHECK(iv2.elements == iv.elements);
  CHECK(iv2.covers == iv.covers);

  auto gc = GeneralizedComposition::parse("(2,1)*(3)");
  CHECK(gencomp_from_json(to_json(gc)) == gc);

  auto s = S("(5,5,3,2)/(3,3,1)");
  CHECK(shape_from_json(to_json(s)) == s);

  auto t = canonical(s, Canonical::tau0);
  CHECK(tableau_from_json(to_json(t)) == t);

  auto Q = big_tau0();
  CHECK(poset_from_json(to_json(Q)) == Q);

  auto q = schur_to_f(S("(3,2)/(1)"));
  CHECK(qsym_from_json(to_json(q)) == q);

  auto M = interval_module(P("2134"), P("4231"));
  auto M2 = module_from_json(to_json(M));
  CHECK(M2.dim == M.dim);
  CHECK(M2.action == M.action);

  auto d = equivalence_class(P("2134"), P("2143"));
  auto d2 = class_from_json(to_json(d));
  CHECK(d2.xi == d.xi);
  CHECK(d2.class_size == d.class_size);
  CHECK(d2.min.elements == d.min.elements);

  auto F = distinguished_filtration(Q);
  auto F2 = filtration_from_json(to_json(F));
  CHECK(F2.order == F.order);
  CHECK(F2.layers == F.layers);
}

TEST_CASE("malformed JSON is rejected as invalid input") {
  CHECK_THROWS_AS(permutation_from_json(json::parse("[1,1,2]")), invalid_input);
  CHECK_THROWS_AS(permutation_from_json(json("21x")), invalid_input);
  CHECK_THROWS_AS(permutation_from_json(json::parse("{\"a\":1}")), invalid_input);
  auto bad_iv = to_json(L("2134", "2143"));
  bad_iv["elements"].push_back(json::array({1, 2, 3, 4}));
  CHECK_THROWS_AS(interval_from_json(bad_iv), invalid_input);
  CHECK_THROWS_AS(shape_from_json(json::parse("{\"lambda\":[2,3],\"mu\":[]}")), invalid_input);
  auto M = to_json(simple_module(Composition::parse("(1,1)")));
  M["matrices"] = json::array({json::array({json::array({"2"})})});
  CHECK_THROWS_AS(module_from_json(M), invalid_input);
  CHECK_THROWS_AS(poset_from_json(json::parse("{\"n\":2,\"covers\":[[1,2],[2,1]]}")), invalid_input);
}

TEST_CASE("DOT output") {
  auto dot = interval_dot(L("2134", "4321"));
  CHECK(dot.find("v11 [label=\"4321\"]") != std::string::npos);
  CHECK(dot.rfind("digraph", 0) == 0);
  auto mdot = module_dot(interval_module(P("2134"), P("2143")));
  CHECK(mdot.find("π") != std::string::npos);
  auto pdot = poset_dot(big_tau0());
  CHECK(pdot.find("->") != std::string::npos);
}
