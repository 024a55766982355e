#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "equivalence.hpp"
#include "io.hpp"
#include "module.hpp"
#include "poset.hpp"
#include "qsym.hpp"
#include "shape.hpp"
#include "tableau.hpp"

namespace hecke0::verify {

using io::json;

struct CheckParams {
  int n = 4;
  std::uint64_t seed = 0;
  int cap_dim = kDefaultCapDim;
  int sample = 0;   // sampled intervals in S_5 for the class sweep
  int threads = 0;  // 0 = hardware concurrency; not serialized, results do not depend on it
};

inline json params_json(CheckParams const& p) {
  return {{"n", p.n}, {"seed", p.seed}, {"cap_dim", p.cap_dim}, {"sample", p.sample}};
}

inline CheckParams params_from_json(json const& j) {
  CheckParams p;
  p.n = j.value("n", p.n);
  p.seed = j.value("seed", p.seed);
  p.cap_dim = j.value("cap_dim", p.cap_dim);
  p.sample = j.value("sample", p.sample);
  return p;
}

/// Outcome of one check. Failures carry {"check", "params", "instance", "reason"} and replay alone.
struct CheckReport {
  std::string check_id;
  CheckParams params;
  long instances = 0;
  std::vector<json> failures;
  double wall_seconds = 0;  // kept out of the JSON form so reports stay byte-identical
  bool pass() const { return failures.empty(); }
};

inline json to_json(CheckReport const& r) {
  return {{"check_id", r.check_id},
          {"params", params_json(r.params)},
          {"instances", r.instances},
          {"pass", r.pass()},
          {"failures", r.failures}};
}

using Failure = std::optional<std::string>;

struct Check {
  std::string id;
  std::string statement;
  int max_n;
  std::function<std::vector<json>(CheckParams const&)> instances;
  std::function<Failure(json const&, CheckParams const&)> eval;
};

namespace detail {

inline std::string yesno(bool b) { return b ? "yes" : "no"; }

/// Labeled poset counts on [n] for n = 0..7, used to validate the enumeration before any sweep.
inline long known_poset_count(int n) {
  static const long counts[] = {1, 1, 3, 19, 219, 4231, 130023, 6129859};
  return counts[n];
}

inline std::vector<LabeledPoset> checked_posets(int n) {
  auto ps = enumerate_posets(n);
  if (static_cast<long>(ps.size()) != known_poset_count(n))
    throw internal_failure("poset enumeration on [" + std::to_string(n) + "] gave " + std::to_string(ps.size()) +
                           " posets, expected " + std::to_string(known_poset_count(n)));
  return ps;
}

inline std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  for (std::uint32_t m = 0; m < (n > 0 ? (1U << (n - 1)) : 1U); ++m) out.push_back(Composition::from_set(IndexSet(m << 1), n));
  return out;
}

/// Every generalized composition of n: each junction between parts is a comma, a star, or absent.
inline std::vector<GeneralizedComposition> generalized_compositions(int n) {
  std::vector<GeneralizedComposition> out;
  int junctions = n - 1, total = 1;
  for (int k = 0; k < junctions; ++k) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<Composition> blocks;
    std::vector<int> parts{1};
    int c = code;
    for (int k = 0; k < junctions; ++k, c /= 3) {
      int j = c % 3;
      if (j == 0) ++parts.back();
      else if (j == 1) parts.push_back(1);
      else {
        blocks.emplace_back(parts);
        parts = {1};
      }
    }
    blocks.emplace_back(parts);
    out.emplace_back(blocks);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<SkewShape> shapes_upto(int n) {
  std::vector<SkewShape> out;
  for (int k = 1; k <= n; ++k)
    for (auto const& s : skew_shapes(k)) out.push_back(s);
  return out;
}

inline LabeledPoset tau0_poset(SkewShape const& s) { return LabeledPoset::from_tableau(canonical(s, Canonical::tau0)); }

inline std::vector<Tableau> const& distinguished_memo(SkewShape const& s) {
  static std::mutex mu;
  static std::map<SkewShape, std::vector<Tableau>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(s);
  if (it == memo.end()) it = memo.emplace(s, distinguished_labelings(s)).first;
  return it->second;
}

/// Straight tableau filled 1..n row by row.
inline Tableau row_superstandard(std::vector<int> const& lam) {
  std::vector<std::vector<int>> rows;
  int v = 0;
  for (int p : lam) {
    rows.emplace_back();
    for (int c = 0; c < p; ++c) rows.back().push_back(++v);
  }
  return Tableau::from_rows(rows);
}

/// Littlewood-Richardson multiset of a skew shape from rectification: nu appears
/// #{T : Rect(T) = the superstandard tableau of shape nu} times.
inline std::map<std::vector<int>, int> rectification_multiset(SkewShape const& s) {
  std::map<std::vector<int>, int> out;
  for (auto const& T : enumerate_syt(s)) {
    auto R = rectify(T);
    if (R == row_superstandard(R.partition())) ++out[R.partition()];
  }
  return out;
}

inline std::vector<Permutation> sorted(std::vector<Permutation> v) {
  std::sort(v.begin(), v.end(), length_lex_less);
  return v;
}

/// Downward breadth-first search from the top; independent of the upward construction.
inline int interval_size_from_top(Permutation const& bottom, Permutation const& top, Side side) {
  std::set<Permutation> seen{top};
  std::vector<Permutation> stack{top};
  while (!stack.empty()) {
    auto g = stack.back();
    stack.pop_back();
    for (int i = 1; i < g.size(); ++i) {
      if (!descents(g, side).contains(i)) continue;
      auto h = g.mul(i, side);
      if (weak_leq(bottom, h, side) && seen.insert(h).second) stack.push_back(h);
    }
  }
  return static_cast<int>(seen.size());
}

/// Shuffle product of two words, summed by descent composition; any words with the right descent sets work.
inline QSym shuffle_product(std::vector<int> u, std::vector<int> v) {
  int m = static_cast<int>(u.size()), n = m + static_cast<int>(v.size());
  for (auto& x : v) x += m;
  QSym out(n);
  std::vector<int> w(n);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != m) continue;
    std::size_t iu = 0, iv = 0;
    for (int p = 0; p < n; ++p) w[p] = ((mask >> p) & 1U) ? u[iu++] : v[iv++];
    IndexSet d;
    for (int p = 1; p < n; ++p)
      if (w[p - 1] > w[p]) d.insert(p);
    out.add_term(Composition::from_set(d, n), 1);
  }
  return out;
}

inline bool same_span(int dim, std::vector<Vector> const& a, std::vector<Vector> const& b) {
  Echelon ea(dim), eb(dim);
  for (auto const& v : a) ea.add(v);
  for (auto const& v : b) eb.add(v);
  if (ea.rank() != eb.rank()) return false;
  for (auto const& v : b)
    if (!ea.contains(v)) return false;
  return true;
}

inline Failure iso_expect(HeckeModule const& M, HeckeModule const& N, bool want, CheckParams const& p,
                          std::string const& what) {
  auto r = is_isomorphic(M, N, p.seed, p.cap_dim);
  if (want) {
    if (r.verdict != IsoVerdict::isomorphic) return what + ": expected isomorphic, got " + verdict_name(r.verdict) + " (" + r.reason + ")";
    if (!r.witness || !is_module_map(M, N, *r.witness) || rank(*r.witness) != M.dim)
      return what + ": witness is not an invertible module map";
  } else if (r.verdict != IsoVerdict::not_isomorphic) {
    return what + ": expected not isomorphic, got " + verdict_name(r.verdict) + " (" + r.reason + ")";
  }
  return std::nullopt;
}

inline std::vector<json> per_n(CheckParams const& p, int lo, int cap) {
  std::vector<json> out;
  for (int k = lo; k <= std::min(p.n, cap); ++k) out.push_back({{"n", k}});
  return out;
}

// Table of three-dimensional submodules of the six-dimensional module on B below.
struct TableRow {
  std::vector<std::vector<std::pair<char const*, int>>> span;
  int socle_dim;
  std::vector<std::vector<int>> ch;
};

inline std::vector<TableRow> const& submodule_table() {
  static const std::vector<TableRow> rows = {
      {{{{"3214", 1}}, {{"1432", 1}}, {{"3412", 1}}}, 3, {{3, 1}, {1, 3}, {1, 2, 1}}},
      {{{{"3214", 1}}, {{"1423", 1}, {"1432", -1}, {"2413", -1}}, {{"3412", 1}}}, 2, {{3, 1}, {1, 1, 2}, {1, 2, 1}}},
      {{{{"3214", 1}}, {{"2314", 1}, {"3214", -1}, {"2413", -1}}, {{"3412", 1}}}, 2, {{3, 1}, {2, 1, 1}, {1, 2, 1}}},
      {{{{"3214", 1}}, {{"2413", 1}}, {{"3412", 1}}}, 2, {{3, 1}, {2, 2}, {1, 2, 1}}},
      {{{{"1432", 1}}, {{"1423", 1}, {"1432", -1}, {"2413", -1}}, {{"3412", 1}}}, 2, {{1, 3}, {1, 1, 2}, {1, 2, 1}}},
      {{{{"1432", 1}}, {{"2314", 1}, {"3214", -1}, {"2413", -1}}, {{"3412", 1}}}, 2, {{1, 3}, {2, 1, 1}, {1, 2, 1}}},
      {{{{"1432", 1}}, {{"2413", 1}}, {{"3412", 1}}}, 2, {{1, 3}, {2, 2}, {1, 2, 1}}},
      {{{{"2314", 1}, {"3214", -1}}, {{"2413", 1}}, {{"3412", 1}}}, 1, {{2, 1, 1}, {2, 2}, {1, 2, 1}}},
      {{{{"1423", 1}, {"1432", -1}}, {{"2413", 1}}, {{"3412", 1}}}, 1, {{1, 1, 2}, {2, 2}, {1, 2, 1}}},
  };
  return rows;
}

inline HeckeModule table_module() {
  std::vector<Permutation> B;
  for (auto w : {"2314", "1423", "3214", "2413", "1432", "3412"}) B.push_back(Permutation::parse(w));
  return subset_module(B);
}

inline Vector table_vector(HeckeModule const& M, std::vector<std::pair<char const*, int>> const& terms) {
  std::vector<std::pair<Permutation, Rational>> t;
  for (auto const& [w, c] : terms) t.emplace_back(Permutation::parse(w), Rational(c));
  return vector_of(M, t);
}

inline QSym schur(std::vector<int> const& lam) { return schur_to_f(SkewShape(lam, {})); }

/// The three labelings of (4,2)/(2) with their claimed indecomposable decompositions.
inline std::pair<Tableau, HeckeModule> small_decomposition(int k) {
  auto F = [](std::vector<int> a) { return simple_module(Composition(a)); };
  auto B = [](char const* lo, char const* hi) { return interval_module(Permutation::parse(lo), Permutation::parse(hi)); };
  auto P = [](char const* g) { return projective(GeneralizedComposition::parse(g)); };
  switch (k) {
    case 1:
      return {Tableau::from_rows({{0, 0, 2, 1}, {4, 3}}), direct_sum({P("(4)"), P("(2,2)")})};
    case 2:
      return {Tableau::from_rows({{0, 0, 4, 2}, {3, 1}}),
              direct_sum({F({1, 2, 1}), B("4213", "4312"), F({3, 1}), F({2, 2}), F({4})})};
    case 3:
      return {Tableau::from_rows({{0, 0, 4, 1}, {3, 2}}),
              direct_sum({F({1, 2, 1}), B("4213", "4312"), B("2431", "3421"), F({4})})};
    default:
      throw invalid_input("labeling index must be 1, 2 or 3");
  }
}

/// Pairs of intervals in S_6 whose modules share every cheap invariant.
inline std::pair<std::string, std::string> interval_pair(int k) {
  static const char* tops[7][2] = {{"426351", "624153"}, {"354612", "561324"}, {"356412", "561342"},
                                    {"563124", "534612"}, {"536412", "563142"}, {"465312", "645132"},
                                    {"564213", "546231"}};
  if (k < 1 || k > 7) throw invalid_input("pair index must be in 1..7");
  return {tops[k - 1][0], tops[k - 1][1]};
}

}  // namespace detail

/// Above this dimension the twist check compares characters only; the isomorphism solve dominates run time.
inline constexpr int kTwistIsoDim = 30;
/// Twisted modules are re-checked against the relations up to this dimension; dense duals cost cubic time.
inline constexpr int kTwistRelationDim = 120;

// Check bodies. Each evaluator takes one instance and names what went wrong.

inline std::vector<Check> const& registry() {
  using namespace detail;
  static const std::vector<Check> checks = [] {
    std::vector<Check> c;

    c.push_back({"bw", "Sigma_L(P) is a left weak interval iff P is regular", 7,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (int k = 1; k <= p.n; ++k)
                     for (auto const& P : checked_posets(k)) out.push_back({{"poset", io::to_json(P)}});
                   return out;
                 },
                 [](json const& in, CheckParams const&) -> Failure {
                   auto P = io::poset_from_json(in.at("poset"));
                   bool iv = is_weak_interval(linear_extensions(P, Side::left), Side::left);
                   bool reg = is_regular(P);
                   if (iv != reg) return "interval " + yesno(iv) + " but regular " + yesno(reg);
                   return std::nullopt;
                 }});

    c.push_back({"intervals", "Sigma_L(poset(tau)) = [read(T_row), read(T_col)]_L and the readings of a fixed T form a right interval", 7,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (auto const& s : shapes_upto(p.n)) {
                     for (auto const& tau : distinguished_memo(s)) out.push_back({{"kind", "labeling"}, {"tau", io::to_json(tau)}});
                     for (auto const& T : enumerate_syt(s)) out.push_back({{"kind", "syt"}, {"T", io::to_json(T)}});
                   }
                   return out;
                 },
                 [](json const& in, CheckParams const&) -> Failure {
                   if (in.at("kind") == "labeling") {
                     auto tau = io::tableau_from_json(in.at("tau"));
                     auto s = tau.shape();
                     auto sigma = linear_extensions(LabeledPoset::from_tableau(tau), Side::left);
                     std::vector<Permutation> reads;
                     for (auto const& T : enumerate_syt(s)) reads.push_back(reading(tau, T));
                     if (sorted(reads) != sigma) return "readings of SYT differ from Sigma_L(poset(tau))";
                     auto iv = weak_interval(reading(tau, canonical(s, Canonical::row)), reading(tau, canonical(s, Canonical::col)), Side::left);
                     if (iv.elements != sigma) return "Sigma_L has " + std::to_string(sigma.size()) + " elements, interval has " + std::to_string(iv.size());
                     return std::nullopt;
                   }
                   auto T = io::tableau_from_json(in.at("T"));
                   auto s = T.shape();
                   std::set<Permutation> reads;
                   for (auto const& tau : distinguished_memo(s)) reads.insert(reading(tau, T));
                   auto iv = weak_interval(reading(canonical(s, Canonical::tau0), T), reading(canonical(s, Canonical::tau1), T), Side::right);
                   if (std::set<Permutation>(iv.elements.begin(), iv.elements.end()) != reads)
                     return "distinguished readings of T are not [read_tau0(T), read_tau1(T)]_R";
                   return std::nullopt;
                 }});

    c.push_back({"class_example", "class of [2134,2143]_L has three members, min [2134,2341]_R, max [2143,2431]_R", 12,
                 [](CheckParams const&) { return std::vector<json>{json::object()}; },
                 [](json const&, CheckParams const&) -> Failure {
                   auto P = [](char const* w) { return Permutation::parse(w); };
                   auto d = equivalence_class(P("2134"), P("2143"));
                   if (d.class_size != 3) return "class size " + std::to_string(d.class_size);
                   if (d.min.bottom != P("2134") || d.min.top != P("2341")) return "min(C) = [" + d.min.bottom.str() + "," + d.min.top.str() + "]_R";
                   if (d.max.bottom != P("2143") || d.max.top != P("2431")) return "max(C) = [" + d.max.bottom.str() + "," + d.max.top.str() + "]_R";
                   if (d.min.elements != std::vector<Permutation>{P("2134"), P("2314"), P("2341")}) return "min(C) elements differ";
                   auto L = [&](char const* a, char const* b) { return weak_interval(P(a), P(b), Side::left); };
                   if (!descent_preserving_equiv(L("2134", "2143"), L("2314", "2413"))) return "[2134,2143] and [2314,2413] not equivalent";
                   if (descent_preserving_equiv(L("1234", "2134"), L("1234", "1324"))) return "[1234,2134] and [1234,1324] reported equivalent";
                   return std::nullopt;
                 }});

    c.push_back({"equiv_classes", "min(C), max(C) are right intervals, C = {[g, xi g]_L : g in min(C)}, translations keep colored edges", 6,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (int k = 1; k <= std::min(p.n, 4); ++k)
                     for (auto const& b : all_permutations(k))
                       for (auto const& t : all_permutations(k))
                         if (weak_leq(b, t, Side::left)) out.push_back({{"bottom", io::to_json(b)}, {"top", io::to_json(t)}});
                   if (p.n >= 5 && p.sample > 0) {
                     std::mt19937_64 rng(p.seed);
                     auto all = all_permutations(5);
                     std::set<std::pair<Permutation, Permutation>> picked;
                     while (static_cast<int>(picked.size()) < p.sample) {
                       auto const& b = all[rng() % all.size()];
                       std::vector<Permutation> above;
                       for (auto const& t : all)
                         if (weak_leq(b, t, Side::left)) above.push_back(t);
                       picked.emplace(b, above[rng() % above.size()]);
                     }
                     for (auto const& [b, t] : picked) out.push_back({{"bottom", io::to_json(b)}, {"top", io::to_json(t)}});
                   }
                   return out;
                 },
                 [](json const& in, CheckParams const&) -> Failure {
                   auto b = io::permutation_from_json(in.at("bottom")), t = io::permutation_from_json(in.at("top"));
                   auto d = equivalence_class(b, t);
                   auto I = weak_interval(b, t, Side::left);
                   std::vector<Permutation> members;
                   for (auto const& g : all_permutations(b.size())) {
                     auto h = d.xi * g;
                     if (!weak_leq(g, h, Side::left)) continue;
                     auto J = weak_interval(g, h, Side::left);
                     if (!descent_preserving_equiv(I, J)) continue;
                     members.push_back(g);
                     auto shift = b.inverse() * g;
                     for (auto const& cv : I.covers) {
                       Cover img{J.index_of(I.elements[cv.from] * shift), J.index_of(I.elements[cv.to] * shift), cv.color};
                       if (!std::binary_search(J.covers.begin(), J.covers.end(), img))
                         return "translation to [" + g.str() + "," + h.str() + "] breaks an s" + std::to_string(cv.color) + " edge";
                     }
                   }
                   if (sorted(members) != d.min.elements) return "brute-force class has " + std::to_string(members.size()) + " members, search found " + std::to_string(d.class_size);
                   std::vector<Permutation> tops;
                   for (auto const& g : d.min.elements) tops.push_back(d.xi * g);
                   if (sorted(tops) != d.max.elements) return "max(C) is not xi min(C)";
                   return std::nullopt;
                 }});

    c.push_back({"class_union", "{Sigma_L(P) : P regular Schur labeled} is the disjoint union of the classes of the shapes", 6,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (auto const& s : shapes_upto(p.n)) out.push_back({{"shape", io::to_json(s)}});
                   return out;
                 },
                 [](json const& in, CheckParams const&) -> Failure {
                   auto s = io::shape_from_json(in.at("shape"));
                   auto sigma = linear_extensions(tau0_poset(s), Side::left);
                   auto d = equivalence_class(sigma.front(), sigma.back());
                   std::set<Permutation> bottoms;
                   for (auto const& Q : regular_schur_posets(s.size())) {
                     auto ext = linear_extensions(Q, Side::left);
                     bool in_class = d.min.contains(ext.front()) && ext.back() == d.xi * ext.front() &&
                                     weak_interval(ext.front(), ext.back(), Side::left).size() == static_cast<int>(ext.size());
                     bool same_shape = schur_recognize(Q)->shape() == s;
                     if (in_class != same_shape)
                       return "poset with shape " + schur_recognize(Q)->shape().str() + (in_class ? " lies in" : " misses") + " the class";
                     if (in_class) bottoms.insert(ext.front());
                   }
                   if (static_cast<int>(bottoms.size()) != d.class_size) return "class has members that are not Sigma_L of a poset of this shape";
                   return std::nullopt;
                 }});

    c.push_back({"classification", "M_P and M_Q are isomorphic iff tau_P and tau_Q have the same shape", 6,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (int k = 1; k <= p.n; ++k) {
                     for (auto const& P : regular_schur_posets(k)) out.push_back({{"kind", "member"}, {"poset", io::to_json(P)}});
                     auto shapes = skew_shapes(k);
                     for (std::size_t a = 0; a < shapes.size(); ++a)
                       for (std::size_t b = a + 1; b < shapes.size(); ++b)
                         out.push_back({{"kind", "pair"}, {"a", io::to_json(shapes[a])}, {"b", io::to_json(shapes[b])}});
                   }
                   return out;
                 },
                 [](json const& in, CheckParams const& p) -> Failure {
                   if (in.at("kind") == "member") {
                     auto P = io::poset_from_json(in.at("poset"));
                     auto s = schur_recognize(P)->shape();
                     return iso_expect(poset_module(P, p.cap_dim), poset_module(tau0_poset(s), p.cap_dim), true, p, "M_P vs the " + s.str() + " representative");
                   }
                   auto a = io::shape_from_json(in.at("a")), b = io::shape_from_json(in.at("b"));
                   return iso_expect(poset_module(tau0_poset(a), p.cap_dim), poset_module(tau0_poset(b), p.cap_dim), false, p, a.str() + " vs " + b.str());
                 }});

    c.push_back({"cover_hull", "P_balproj covers M_P and P_balinj is its injective hull, with checked witnesses", 7,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (int k = 1; k <= p.n; ++k)
                     for (auto const& P : regular_schur_posets(k)) out.push_back({{"poset", io::to_json(P)}});
                   return out;
                 },
                 [](json const& in, CheckParams const& p) -> Failure {
                   auto P = io::poset_from_json(in.at("poset"));
                   auto r = proj_cover_inj_hull(P, p.cap_dim);
                   auto s = r.tau.shape();
                   if (!(r.proj == s.balproj()) || !(r.inj == s.balinj())) return "cover/hull indices differ from balproj/balinj";
                   if (!r.cover_ok || !r.hull_ok) return r.failure;
                   return std::nullopt;
                 }});

    c.push_back({"dpc", "P is regular Schur labeled iff Sigma_L(P) is dual plactic closed", 7,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (int k = 1; k <= p.n; ++k)
                     for (auto const& P : checked_posets(k)) out.push_back({{"poset", io::to_json(P)}});
                   return out;
                 },
                 [](json const& in, CheckParams const&) -> Failure {
                   auto P = io::poset_from_json(in.at("poset"));
                   auto tau = schur_recognize(P);
                   bool rsp = tau && tau->is_distinguished();
                   bool closed = dual_knuth_closure_test(linear_extensions(P, Side::left)).closed;
                   if (rsp != closed) return "regular Schur labeled " + yesno(rsp) + ", dual plactic closed " + yesno(closed);
                   return std::nullopt;
                 }});

    c.push_back({"filtration", "M_P has a filtration with Schur quotients matching the rectification multiset", 7,
                 [](CheckParams const& p) {
                   std::vector<json> out{{{"example", "(4,2,1)/(2,1)"}}};
                   for (int k = 1; k <= p.n; ++k)
                     for (auto const& P : regular_schur_posets(k)) out.push_back({{"poset", io::to_json(P)}});
                   return out;
                 },
                 [](json const& in, CheckParams const&) -> Failure {
                   if (in.contains("example")) {
                     auto P = tau0_poset(SkewShape::parse(in.at("example").get<std::string>()));
                     auto F1 = distinguished_filtration(P);
                     std::vector<std::vector<int>> want{{4}, {3, 1}, {3, 1}, {2, 2}, {2, 1, 1}}, got;
                     for (auto const& e : F1.quotient_schur) got.push_back(e.size() == 1 ? e.begin()->first : std::vector<int>{});
                     if (!F1.closed || got != want) return "first order: " + F1.failure + " quotient shapes differ";
                     auto order2 = F1.order;
                     std::swap(order2[1], order2[2]);
                     auto F2 = distinguished_filtration(P, order2);
                     if (!F2.closed || !F2.quotients_match) return "second order: " + F2.failure;
                     if (F2.layers == F1.layers) return "the two orders give the same filtration";
                     return std::nullopt;
                   }
                   auto P = io::poset_from_json(in.at("poset"));
                   auto F = distinguished_filtration(P);
                   if (!F.closed || !F.quotients_match) return F.failure;
                   QSym total(P.size());
                   std::map<std::vector<int>, int> shapes;
                   for (std::size_t k = 0; k < F.layers.size(); ++k) {
                     total += F.quotient_ch[k];
                     ++shapes[F.quotient_schur[k].begin()->first];
                   }
                   auto s = F.tau.shape();
                   if (!(total == schur_to_f(s))) return "quotients do not sum to s_" + s.str();
                   if (shapes != rectification_multiset(s)) return "quotient shapes differ from the rectification multiset";
                   return std::nullopt;
                 }});

    c.push_back({"submodule_table", "the six-element module on B: character, socle, and its nine 3-dimensional submodules", 12,
                 [](CheckParams const&) { return std::vector<json>{json::object()}; },
                 [](json const&, CheckParams const&) -> Failure {
                   auto M = table_module();
                   auto ch = characteristic(M);
                   if (!(ch == schur({3, 1}) + schur({2, 1, 1}))) return "ch(M) = " + ch.str();
                   auto rts = radical_top_socle(M);
                   std::vector<Vector> soc;
                   for (auto w : {"3412", "3214", "1432"}) soc.push_back(table_vector(M, {{w, 1}}));
                   if (!same_span(M.dim, rts.socle, soc)) return "socle is not span{3412, 3214, 1432}";
                   std::vector<std::vector<Vector>> candidates;
                   int row = 0;
                   for (auto const& r : submodule_table()) {
                     ++row;
                     std::vector<Vector> span;
                     for (auto const& t : r.span) span.push_back(table_vector(M, t));
                     candidates.push_back(span);
                     auto rep = verify_submodule(M, span);
                     QSym want(4);
                     for (auto const& a : r.ch) want.add_term(Composition(a), 1);
                     if (!rep.closed) return "row " + std::to_string(row) + " is not a submodule";
                     if (rep.dim != 3 || rep.socle_dim != r.socle_dim || !(rep.ch == want))
                       return "row " + std::to_string(row) + ": dim " + std::to_string(rep.dim) + ", socle " + std::to_string(rep.socle_dim) + ", ch " + rep.ch.str();
                   }
                   for (auto const& pr : filtration_nonexistence_probe(M, candidates, {schur({3, 1}), schur({2, 1, 1})}))
                     if (pr.hits_target) return "a listed submodule has Schur characteristic";
                   std::vector<Vector> big{table_vector(M, {{"2314", 1}, {"3214", -1}}), table_vector(M, {{"1423", 1}, {"1432", -1}}),
                                           table_vector(M, {{"2413", 1}}), table_vector(M, {{"3412", 1}})};
                   auto N = restrict_to(M, big);
                   if (!N || !is_indecomposable(*N).indecomposable) return "the 4-dimensional summand is not an indecomposable submodule";
                   return std::nullopt;
                 }});

    c.push_back({"small_decomps", "decompositions of M_poset(tau_k), k = 1, 2, 3, on the shape (4,2)/(2)", 12,
                 [](CheckParams const&) { return std::vector<json>{{{"k", 1}}, {{"k", 2}}, {{"k", 3}}}; },
                 [](json const& in, CheckParams const& p) -> Failure {
                   int k = in.at("k").get<int>();
                   auto [tau, target] = small_decomposition(k);
                   auto P = LabeledPoset::from_tableau(tau);
                   auto tp = schur_recognize(P);
                   if (!tp || !(tp->shape() == SkewShape::parse("(4,2)/(2)"))) return "tau_P does not have shape (4,2)/(2)";
                   auto M = poset_module(P, p.cap_dim);
                   if (!(characteristic(M) == characteristic(target))) return "characteristics differ";
                   return iso_expect(M, target, true, p, "tau_" + std::to_string(k) + " against the stated sum");
                 }});

    c.push_back({"decomp", "connected shape gives indecomposable M_P; a disconnected ribbon pair makes it decompose", 6,
                 [](CheckParams const& p) {
                   std::vector<json> out{{{"named", "X(3,3,1)/(1,1)"}}, {{"named", "P(2)*(2)"}}};
                   for (auto const& s : shapes_upto(p.n)) out.push_back({{"shape", io::to_json(s)}});
                   return out;
                 },
                 [](json const& in, CheckParams const& p) -> Failure {
                   if (in.contains("named")) {
                     auto name = in.at("named").get<std::string>();
                     if (name == "X(3,3,1)/(1,1)") {
                       auto s = SkewShape::parse("(3,3,1)/(1,1)");
                       auto sigma = linear_extensions(tau0_poset(s), Side::left);
                       if (sigma.front() != Permutation::parse("21435") || sigma.back() != Permutation::parse("42531"))
                         return "Sigma_L is not [21435, 42531]_L";
                       if (!is_indecomposable(tableau_module(s, p.cap_dim), p.cap_dim).indecomposable) return "X is decomposable";
                       return std::nullopt;
                     }
                     if (name == "P(2)*(2)") {
                       if (is_indecomposable(projective(GeneralizedComposition::parse("(2)*(2)"), p.cap_dim), p.cap_dim).indecomposable)
                         return "P_(2)*(2) reported indecomposable";
                       return std::nullopt;
                     }
                     throw invalid_input("unknown named instance " + name);
                   }
                   auto s = io::shape_from_json(in.at("shape"));
                   bool indec = is_indecomposable(poset_module(tau0_poset(s), p.cap_dim), p.cap_dim).indecomposable;
                   bool want = !s.contains_disconnected_ribbon();
                   if (indec != want) return "indecomposable " + yesno(indec) + ", connected " + yesno(s.is_connected()) + ", disconnected ribbon " + yesno(!want);
                   return std::nullopt;
                 }});

    c.push_back({"kp", "K_P from linear extensions equals the P-partition count in n variables", 6,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (int k = 1; k <= p.n; ++k)
                     for (auto const& P : schur_posets(k)) out.push_back({{"poset", io::to_json(P)}});
                   return out;
                 },
                 [](json const& in, CheckParams const&) -> Failure {
                   auto P = io::poset_from_json(in.at("poset"));
                   if (to_monomials(kp(P), P.size()) != kp_monomial(P, P.size())) return "monomial expansions differ";
                   return std::nullopt;
                 }});

    c.push_back({"kp_symmetric", "K_P is symmetric iff P is Schur labeled; a finite sweep, no claim past the swept n", 6,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (int k = 1; k <= p.n; ++k)
                     for (auto const& P : checked_posets(k)) out.push_back({{"poset", io::to_json(P)}});
                   return out;
                 },
                 [](json const& in, CheckParams const&) -> Failure {
                   auto P = io::poset_from_json(in.at("poset"));
                   bool sym = schur_expand(kp(P)).has_value();
                   bool schur = schur_recognize(P).has_value();
                   if (sym != schur) return "K_P symmetric " + yesno(sym) + " but Schur labeled " + yesno(schur);
                   return std::nullopt;
                 }});

    c.push_back({"char_mp", "ch(M_P) = psi(K_P) = s_sh(tau_P)", 7,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (int k = 1; k <= p.n; ++k)
                     for (auto const& P : schur_posets(k)) out.push_back({{"poset", io::to_json(P)}});
                   return out;
                 },
                 [](json const& in, CheckParams const& p) -> Failure {
                   auto P = io::poset_from_json(in.at("poset"));
                   auto ch = characteristic(poset_module(P, p.cap_dim));
                   if (!(ch == kp(P).psi())) return "ch(M_P) = " + ch.str() + " but psi(K_P) = " + kp(P).psi().str();
                   if (!(ch == schur_to_f(schur_recognize(P)->shape()))) return "ch(M_P) is not the skew Schur function";
                   return std::nullopt;
                 }});

    // Property suites.

    c.push_back({"relations", "every constructed module satisfies the 0-Hecke relations", 7,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (int k = 1; k <= std::min(p.n, 4); ++k)
                     for (auto const& b : all_permutations(k))
                       for (auto const& t : all_permutations(k))
                         if (weak_leq(b, t, Side::left)) out.push_back({{"bottom", io::to_json(b)}, {"top", io::to_json(t)}});
                   for (auto const& s : shapes_upto(p.n)) out.push_back({{"shape", io::to_json(s)}});
                   for (int k = 1; k <= p.n; ++k)
                     for (auto const& g : generalized_compositions(k)) out.push_back({{"gencomp", io::to_json(g)}});
                   return out;
                 },
                 [](json const& in, CheckParams const& p) -> Failure {
                   HeckeModule M;
                   if (in.contains("bottom")) M = interval_module(io::permutation_from_json(in.at("bottom")), io::permutation_from_json(in.at("top")), p.cap_dim);
                   else if (in.contains("shape")) {
                     auto s = io::shape_from_json(in.at("shape"));
                     M = tableau_module(s, p.cap_dim);
                     if (M.dim != static_cast<int>(enumerate_syt(s).size())) return "dimension differs from the SYT count";
                   } else M = projective(io::gencomp_from_json(in.at("gencomp")), p.cap_dim);
                   if (auto bad = violated_relation(M)) return "fails " + *bad;
                   if (M.dim > kTwistRelationDim) return std::nullopt;
                   for (auto t : {Twist::phi, Twist::chi_dual, Twist::theta_hat_dual})
                     if (auto bad = violated_relation(twist(M, t))) return "twist fails " + *bad;
                   return std::nullopt;
                 }});

    c.push_back({"weak_order", "translation isomorphism, inverse duality of the weak orders, w_0 conjugation, BFS from the top", 6,
                 [](CheckParams const& p) { return per_n(p, 1, 6); },
                 [](json const& in, CheckParams const&) -> Failure {
                   int n = in.at("n").get<int>();
                   auto all = all_permutations(n);
                   auto w0 = Permutation::longest(n);
                   for (auto const& g : all) {
                     auto c = w0 * g * w0;
                     if (c.length() != g.length() || descents(c, Side::left).size() != descents(g, Side::left).size())
                       return "w_0 conjugation changes " + g.str();
                   }
                   for (auto const& a : all)
                     for (auto const& b : all) {
                       bool l = weak_leq(a, b, Side::left);
                       if (l != weak_leq(a.inverse(), b.inverse(), Side::right)) return "inverse duality fails for " + a.str() + ", " + b.str();
                       if (!l || n > 4) continue;
                       auto I = weak_interval(a, b, Side::left);
                       if (interval_size_from_top(a, b, Side::left) != I.size()) return "downward count differs on [" + a.str() + "," + b.str() + "]";
                       auto J = weak_interval(Permutation::identity(n), b * a.inverse(), Side::left);
                       if (J.size() != I.size()) return "translation changes the size of [" + a.str() + "," + b.str() + "]";
                       for (auto const& x : I.elements)
                         for (auto const& y : I.elements)
                           if (weak_leq(x, y, Side::left) != weak_leq(x * a.inverse(), y * a.inverse(), Side::left))
                             return "translation is not an order isomorphism on [" + a.str() + "," + b.str() + "]";
                     }
                   return std::nullopt;
                 }});

    c.push_back({"descent_classes", "{s : I <= Des_L(s) <= J} is the right interval [w_0(I), w_0(J^c) w_0]", 7,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (int k = 1; k <= std::min(p.n, 6); ++k)
                     for (std::uint32_t J = 0; J < (1U << (k - 1)); ++J)
                       for (std::uint32_t I = J;; I = (I - 1) & J) {
                         out.push_back({{"n", k}, {"I", IndexSet(I << 1).elements()}, {"J", IndexSet(J << 1).elements()}});
                         if (I == 0) break;
                       }
                   return out;
                 },
                 [](json const& in, CheckParams const&) -> Failure {
                   int n = in.at("n").get<int>();
                   auto I = IndexSet::from(in.at("I").get<std::vector<int>>()), J = IndexSet::from(in.at("J").get<std::vector<int>>());
                   std::vector<Permutation> brute;
                   for (auto const& g : all_permutations(n)) {
                     auto d = descents(g, Side::left);
                     if (I.subset_of(d) && d.subset_of(J)) brute.push_back(g);
                   }
                   if (descent_class_interval(n, I, J).elements != sorted(brute)) return "interval differs from brute force";
                   return std::nullopt;
                 }});

    c.push_back({"shapes", "composition involutions, transpose and rotation involutions, bal and bracket sizes, star sizes", 8,
                 [](CheckParams const& p) { return per_n(p, 1, 8); },
                 [](json const& in, CheckParams const&) -> Failure {
                   int n = in.at("n").get<int>();
                   for (auto const& a : compositions(n)) {
                     if (!(a.complement().complement() == a) || !(a.reverse().reverse() == a)) return "involution fails on " + a.str();
                     if (!(Composition::from_set(a.set(), n) == a)) return "set round trip fails on " + a.str();
                   }
                   if (n > 6) return std::nullopt;
                   for (auto const& s : skew_shapes(n)) {
                     if (!(s.transpose().transpose() == s) || !(s.rotate180().rotate180() == s)) return "shape involution fails on " + s.str();
                     auto g = s.balproj();
                     if (g.size() != n || g.blocks().size() != s.components().size()) return "balproj size wrong on " + s.str();
                     if (s.balinj().size() != n) return "balinj size wrong on " + s.str();
                     if (g.bracket().size() != (std::size_t(1) << (g.blocks().size() - 1))) return "bracket size wrong on " + s.str();
                   }
                   for (int k = 1; k < n; ++k)
                     for (auto const& a : skew_shapes(k))
                       for (auto const& b : skew_shapes(n - k)) {
                         auto ab = star(a, b);
                         if (ab.size() != n || ab.components().size() != a.components().size() + b.components().size())
                           return "star of " + a.str() + " and " + b.str() + " has the wrong size";
                       }
                   return std::nullopt;
                 }});

    c.push_back({"tableaux", "SYT counts by filtering all fillings, readings of fillings, Schur labeling enumeration", 6,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (auto const& s : shapes_upto(p.n)) out.push_back({{"shape", io::to_json(s)}});
                   return out;
                 },
                 [](json const& in, CheckParams const&) -> Failure {
                   auto s = io::shape_from_json(in.at("shape"));
                   int n = s.size();
                   auto syt = enumerate_syt(s);
                   std::vector<int> w(n);
                   std::iota(w.begin(), w.end(), 1);
                   int standard = 0, labelings = 0;
                   do {
                     Tableau t(s, w);
                     standard += t.is_standard();
                     labelings += t.is_schur_labeling();
                     if (n <= 5 || t.is_schur_labeling()) {
                       std::vector<Permutation> reads;
                       for (auto const& T : syt) reads.push_back(reading(t, T));
                       if (sorted(reads) != linear_extensions(LabeledPoset::from_tableau(t), Side::left))
                         return "readings of " + t.str() + " differ from Sigma_L";
                     }
                   } while (std::next_permutation(w.begin(), w.end()));
                   if (standard != static_cast<int>(syt.size())) return "SYT count " + std::to_string(syt.size()) + " vs filter " + std::to_string(standard);
                   if (static_cast<int>(schur_labelings(s).size()) != labelings) return "Schur labeling enumeration incomplete";
                   for (auto const& tau : distinguished_memo(s))
                     if (!is_regular(LabeledPoset::from_tableau(tau))) return "distinguished " + tau.str() + " has a non-regular poset";
                   return std::nullopt;
                 }});

    c.push_back({"rsk", "RSK is a bijection onto same-shape pairs and P(s) = Q(s^-1)", 7,
                 [](CheckParams const& p) { return per_n(p, 1, 7); },
                 [](json const& in, CheckParams const&) -> Failure {
                   int n = in.at("n").get<int>();
                   std::set<std::pair<Tableau, Tableau>> pairs;
                   for (auto const& g : all_permutations(n)) {
                     auto [P, Q] = rsk(g);
                     if (!(P.shape() == Q.shape()) || !P.is_standard() || !Q.is_standard()) return "bad pair for " + g.str();
                     if (!(P == rsk(g.inverse()).second)) return "P(s) != Q(s^-1) for " + g.str();
                     pairs.emplace(P, Q);
                   }
                   long want = 0;
                   for (auto const& lam : partitions(n)) {
                     long f = static_cast<long>(enumerate_syt(SkewShape(lam, {})).size());
                     want += f * f;
                   }
                   if (static_cast<long>(pairs.size()) != want || want != static_cast<long>(all_permutations(n).size()))
                     return "RSK image has " + std::to_string(pairs.size()) + " pairs";
                   return std::nullopt;
                 }});

    c.push_back({"rectify", "Rect(T) = P(read_tau0(T) w_0) and P(read_tau(T)) = Rect(T)^t for distinguished tau", 6,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (auto const& s : shapes_upto(p.n)) out.push_back({{"shape", io::to_json(s)}});
                   return out;
                 },
                 [](json const& in, CheckParams const&) -> Failure {
                   auto s = io::shape_from_json(in.at("shape"));
                   auto t0 = canonical(s, Canonical::tau0);
                   auto w0 = Permutation::longest(s.size());
                   auto const& dist = distinguished_memo(s);
                   for (auto const& T : enumerate_syt(s)) {
                     auto R = rectify(T);
                     if (!R.shape().is_straight() || !R.is_standard()) return "rectification of " + T.str() + " is not a straight SYT";
                     if (!(R == rsk(reading(t0, T) * w0).first)) return "jeu de taquin and RSK disagree on " + T.str();
                     auto Rt = R.transpose();
                     for (auto const& tau : dist)
                       if (!(rsk(reading(tau, T)).first == Rt)) return "P(read_tau(T)) != Rect(T)^t for tau " + tau.str() + ", T " + T.str();
                   }
                   return std::nullopt;
                 }});

    c.push_back({"qsym", "Schur independence, psi(s_l) = s_l^t, product laws, representative independence, skew expansions", 8,
                 [](CheckParams const& p) { return per_n(p, 1, 8); },
                 [](json const& in, CheckParams const&) -> Failure {
                   int n = in.at("n").get<int>();
                   auto parts = partitions(n);
                   std::map<Composition, int> row;
                   std::vector<QSym> basis;
                   for (auto const& lam : parts) basis.push_back(schur({lam}));
                   for (auto const& b : basis)
                     for (auto const& [a, c] : b.terms()) row.emplace(a, 0);
                   int r = 0;
                   for (auto& [a, i] : row) i = r++;
                   Matrix m(r, static_cast<int>(parts.size()));
                   for (std::size_t j = 0; j < parts.size(); ++j)
                     for (auto const& [a, c] : basis[j].terms()) m(row[a], static_cast<int>(j)) = c;
                   if (rank(m) != static_cast<int>(parts.size())) return "Schur functions are dependent";
                   for (std::size_t j = 0; j < parts.size(); ++j) {
                     if (!(basis[j].psi() == schur(hecke0::detail::conjugate(parts[j])))) return "psi(s_l) != s_l^t";
                     if (!(basis[j].rho().rho() == basis[j]) || !(basis[j].psi().rho() == basis[j].rho().psi())) return "involutions fail";
                   }
                   if (n > 6) return std::nullopt;
                   for (auto const& s : skew_shapes(n)) {
                     auto e = schur_expand(schur_to_f(s));
                     if (!e) return "skew Schur " + s.str() + " not symmetric";
                     std::map<std::vector<int>, int> got;
                     for (auto const& [lam, c] : *e) {
                       if (c < 0 || c.get_den() != 1) return "non-integral coefficient in " + s.str();
                       got[lam] = static_cast<int>(c.get_num().get_si());
                     }
                     if (got != rectification_multiset(s)) return "expansion of " + s.str() + " disagrees with rectification";
                   }
                   for (int k = 1; k < n; ++k)
                     for (auto const& a : compositions(k))
                       for (auto const& b : compositions(n - k)) {
                         auto fa = QSym::F(a), fb = QSym::F(b), ab = fa * fb;
                         if (!(ab == fb * fa)) return "product not commutative";
                         if (!((fa.psi() * fb.psi()) == ab.psi()) || !((fa.rho() * fb.rho()) == ab.rho())) return "involutions are not multiplicative";
                         if (k > 3 || n - k > 3) continue;
                         for (auto const& u : all_permutations(k)) {
                           if (descents(u, Side::right) != a.set()) continue;
                           if (!(shuffle_product(u.word(), longest_element(n - k, b.set()).word()) == ab))
                             return "shuffle product depends on the representative of F" + a.str();
                         }
                         for (int j = 1; j + n <= 6 && j <= 2; ++j)
                           for (auto const& c : compositions(j))
                             if (!((ab * QSym::F(c)) == (fa * (fb * QSym::F(c))))) return "product not associative";
                       }
                   return std::nullopt;
                 }});

    c.push_back({"twists", "ch under phi and theta duals, phi(X) = X of the rotation, theta dual of X = X of the transpose", 6,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (auto const& s : shapes_upto(std::min(p.n, 5))) out.push_back({{"shape", io::to_json(s)}});
                   for (int k = 1; k <= p.n; ++k)
                     for (auto const& a : compositions(k)) out.push_back({{"comp", a.parts()}});
                   return out;
                 },
                 [](json const& in, CheckParams const& p) -> Failure {
                   if (in.contains("comp")) {
                     auto F = simple_module(Composition(in.at("comp").get<std::vector<int>>()));
                     return iso_expect(twist(F, Twist::chi_dual), F, true, p, "chi dual of a simple");
                   }
                   auto s = io::shape_from_json(in.at("shape"));
                   auto X = tableau_module(s, p.cap_dim);
                   auto ch = characteristic(X);
                   auto Xp = twist(X, Twist::phi), Xt = twist(X, Twist::theta_hat_dual);
                   if (!(characteristic(Xp) == ch.rho())) return "ch(phi X) != rho(ch X)";
                   if (!(characteristic(Xt) == ch.psi())) return "ch(theta X) != psi(ch X)";
                   if (X.dim > kTwistIsoDim) return std::nullopt;
                   if (auto f = iso_expect(Xp, tableau_module(s.rotate180(), p.cap_dim), true, p, "phi twist vs rotation")) return f;
                   return iso_expect(Xt, tableau_module(s.transpose(), p.cap_dim), true, p, "theta dual vs transpose");
                 }});

    c.push_back({"projective_split", "P_g splits as the sum of P_b over the bracket of g", 7,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (int k = 1; k <= p.n; ++k)
                     for (auto const& g : generalized_compositions(k)) out.push_back({{"gencomp", io::to_json(g)}});
                   return out;
                 },
                 [](json const& in, CheckParams const& p) -> Failure {
                   auto g = io::gencomp_from_json(in.at("gencomp"));
                   auto Pg = projective(g, p.cap_dim);
                   std::vector<HeckeModule> parts;
                   QSym sum(g.size());
                   for (auto const& b : g.bracket()) {
                     parts.push_back(projective(GeneralizedComposition({b}), p.cap_dim));
                     sum += characteristic(parts.back());
                   }
                   if (!(characteristic(Pg) == sum)) return "characters differ";
                   if (g.blocks().size() == 1) {
                     auto a = g.blocks().front();
                     auto top = radical_top_socle(Pg).top;
                     if (top != SimpleMultiset{{a, 1}}) return "top of P_" + a.str() + " is not F_" + a.str();
                     int count = 0;
                     for (auto const& w : all_permutations(g.size())) count += descents(w, Side::left) == a.set();
                     if (Pg.dim != count) return "dim P_" + a.str() + " differs from the descent class size";
                   }
                   if (g.size() <= 4 && parts.size() > 1) return iso_expect(Pg, direct_sum(parts), true, p, "P_g vs the bracket sum");
                   return std::nullopt;
                 }});

    c.push_back({"restriction", "X restricted to H_k(0) x H_(n-k)(0) splits into products of smaller X", 6,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (auto const& s : shapes_upto(p.n))
                     for (int k = 1; k < s.size(); ++k) out.push_back({{"shape", io::to_json(s)}, {"k", k}});
                   return out;
                 },
                 [](json const& in, CheckParams const& p) -> Failure {
                   auto s = io::shape_from_json(in.at("shape"));
                   int k = in.at("k").get<int>();
                   int total = 0;
                   for (auto const& b : restrict_blocks(s, k, p.cap_dim)) {
                     if (!b.verified) return "block " + b.lower.str() + " x " + b.upper.str() + " fails";
                     if (b.lower.size() != k || b.upper.size() != s.size() - k) return "block sizes wrong";
                     total += static_cast<int>(b.basis.size());
                   }
                   if (total != static_cast<int>(enumerate_syt(s).size())) return "blocks do not cover the basis";
                   return std::nullopt;
                 }});

    c.push_back({"tableau_product", "ch(X_{a*b}) = ch(X_a) ch(X_b)", 7,
                 [](CheckParams const& p) {
                   std::vector<json> out;
                   for (int m = 2; m <= p.n; ++m)
                     for (int k = 1; k < m; ++k)
                       for (auto const& a : skew_shapes(k))
                         for (auto const& b : skew_shapes(m - k)) out.push_back({{"a", io::to_json(a)}, {"b", io::to_json(b)}});
                   return out;
                 },
                 [](json const& in, CheckParams const& p) -> Failure {
                   auto a = io::shape_from_json(in.at("a")), b = io::shape_from_json(in.at("b"));
                   auto lhs = characteristic(tableau_module(star(a, b), p.cap_dim));
                   auto rhs = characteristic(tableau_module(a, p.cap_dim)) * characteristic(tableau_module(b, p.cap_dim));
                   if (!(lhs == rhs)) return "ch(X_a*b) != ch(X_a) ch(X_b)";
                   return std::nullopt;
                 }});

    c.push_back({"regular_schur", "for Schur labeled P: regular iff tau_P distinguished; poset(tau_P) = P", 7,
                 [](CheckParams const& p) { return per_n(p, 1, 7); },
                 [](json const& in, CheckParams const&) -> Failure {
                   int n = in.at("n").get<int>();
                   for (auto const& P : schur_posets(n)) {
                     auto tau = schur_recognize(P);
                     if (!(LabeledPoset::from_tableau(*tau) == P)) return "round trip fails for " + tau->str();
                     if (is_regular(P) != tau->is_distinguished()) return "regularity and distinguishedness differ for " + tau->str();
                   }
                   return std::nullopt;
                 }});

    c.push_back({"left_order_shape", "a left cover s < t has Q(s) = Q(t) or sh Q(t) strictly dominated by sh Q(s)", 7,
                 [](CheckParams const& p) { return per_n(p, 1, 6); },
                 [](json const& in, CheckParams const&) -> Failure {
                   int n = in.at("n").get<int>();
                   for (auto const& g : all_permutations(n)) {
                     auto qg = rsk(g).second;
                     for (int i = 1; i < n; ++i) {
                       if (descents(g, Side::left).contains(i)) continue;
                       auto qh = rsk(g.left_mul(i)).second;
                       if (!(qg == qh) && !hecke0::detail::strictly_dominated(qh.partition(), qg.partition()))
                         return "cover " + g.str() + " < " + g.left_mul(i).str() + " breaks the shape rule";
                     }
                   }
                   return std::nullopt;
                 }});

    c.push_back({"interval_pairs", "seven pairs of intervals in S_6 with equal invariants give non-isomorphic modules", 12,
                 [](CheckParams const&) {
                   std::vector<json> out;
                   for (int k = 1; k <= 7; ++k) out.push_back({{"k", k}});
                   return out;
                 },
                 [](json const& in, CheckParams const& p) -> Failure {
                   auto [t1, t2] = interval_pair(in.at("k").get<int>());
                   auto id = Permutation::identity(6);
                   auto a = Permutation::parse(t1), b = Permutation::parse(t2);
                   auto M = interval_module(id, a, p.cap_dim), N = interval_module(id, b, p.cap_dim);
                   if (!(characteristic(M) == characteristic(N)) || descents(a, Side::left) != descents(b, Side::left))
                     return "the pair does not share the cheap invariants";
                   if (descent_preserving_equiv(weak_interval(id, a, Side::left), weak_interval(id, b, Side::left)))
                     return "the intervals are descent-preserving equivalent";
                   auto r = is_isomorphic(M, N, p.seed, p.cap_dim);
                   if (r.verdict == IsoVerdict::isomorphic) return "modules are isomorphic";
                   if (r.verdict == IsoVerdict::inconclusive) return "inconclusive: " + r.reason;
                   return std::nullopt;
                 }});

    return c;
  }();
  return checks;
}

inline Check const& find_check(std::string const& id) {
  for (auto const& c : registry())
    if (c.id == id) return c;
  throw invalid_input("unknown check id '" + id + "'");
}

/// Evaluates one instance; internal failures and rejected inputs become failure reasons.
inline Failure evaluate(Check const& c, json const& instance, CheckParams const& p) {
  try {
    return c.eval(instance, p);
  } catch (internal_failure const& e) {
    return std::string("internal failure: ") + e.what();
  } catch (invalid_input const& e) {
    return std::string("rejected input: ") + e.what();
  }
}

inline CheckReport run_check(std::string const& id, CheckParams const& p) {
  auto const& c = find_check(id);
  if (p.n < 1 || p.n > c.max_n) throw invalid_input("check " + id + " supports n in 1.." + std::to_string(c.max_n));
  CheckReport rep{id, p, 0, {}, 0};
  auto start = std::chrono::steady_clock::now();
  std::vector<json> inst;
  try {
    inst = c.instances(p);
  } catch (internal_failure const& e) {
    rep.failures.push_back({{"check", id}, {"params", params_json(p)}, {"instance", nullptr}, {"reason", e.what()}});
  }
  // Workers claim instances by index; failures are collected in instance order so output is thread-count independent.
  std::vector<Failure> results(inst.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < inst.size();) results[i] = evaluate(c, inst[i], p);
  };
  int threads = std::max(1, std::min<int>(p.threads > 0 ? p.threads : static_cast<int>(std::thread::hardware_concurrency()),
                                          static_cast<int>(inst.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < inst.size(); ++i) {
    ++rep.instances;
    if (results[i])
      rep.failures.push_back({{"check", id}, {"params", params_json(p)}, {"instance", inst[i]}, {"reason", *results[i]}});
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Re-evaluates a single failure payload.
inline CheckReport replay(json const& payload) {
  auto id = payload.at("check").get<std::string>();
  auto p = params_from_json(payload.value("params", json::object()));
  auto const& c = find_check(id);
  CheckReport rep{id, p, 1, {}, 0};
  auto start = std::chrono::steady_clock::now();
  if (payload.at("instance").is_null()) {
    rep = run_check(id, p);
  } else if (auto f = evaluate(c, payload.at("instance"), p)) {
    rep.failures.push_back({{"check", id}, {"params", params_json(p)}, {"instance", payload.at("instance")}, {"reason", *f}});
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

enum class Level { fast, full, extended };

inline Level parse_level(std::string const& s) {
  if (s == "fast") return Level::fast;
  if (s == "full") return Level::full;
  if (s == "extended") return Level::extended;
  throw invalid_input("level must be fast, full or extended");
}

/// fast: n <= 4 everywhere. full: n <= 5, shape-indexed and property checks at n = 6, sampled S_5 classes.
/// extended: the n = 6 poset sweeps and the S_6 interval pairs.
inline std::vector<std::pair<std::string, CheckParams>> suite_plan(Level level, CheckParams base) {
  std::vector<std::pair<std::string, CheckParams>> plan;
  auto add = [&](std::string id, int n, int sample = 0) {
    CheckParams p = base;
    p.n = n;
    p.sample = sample;
    // Checks that build modules for every shape or generalized composition need dim up to n!.
    if (id == "relations" || id == "projective_split" || id == "tableau_product" || id == "restriction") {
      int fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      p.cap_dim = std::max(p.cap_dim, fact);
    }
    plan.emplace_back(std::move(id), p);
  };
  if (level == Level::extended) {
    add("bw", 6);
    add("dpc", 6);
    add("kp_symmetric", 6);
    add("interval_pairs", 6);
    return plan;
  }
  bool full = level == Level::full;
  int n = full ? 5 : 4, shape_n = full ? 6 : 4;
  add("bw", n);
  add("intervals", shape_n);
  add("class_example", 4);
  add("equiv_classes", n, full ? 1000 : 0);
  add("class_union", n);
  add("classification", n);
  add("cover_hull", n);
  add("dpc", n);
  add("filtration", shape_n);
  add("submodule_table", 4);
  add("small_decomps", 4);
  add("decomp", n);
  add("kp", n);
  add("kp_symmetric", n);
  add("char_mp", n);
  add("relations", shape_n);
  add("weak_order", shape_n);
  add("descent_classes", shape_n);
  add("shapes", full ? 8 : 4);
  add("tableaux", shape_n);
  add("rsk", shape_n);
  add("rectify", shape_n);
  add("qsym", full ? 8 : 4);
  add("twists", n);
  add("projective_split", shape_n);
  add("restriction", shape_n);
  add("tableau_product", shape_n);
  add("regular_schur", shape_n);
  add("left_order_shape", shape_n);
  return plan;
}

inline std::vector<CheckReport> run_suite(Level level, CheckParams base = {}) {
  std::vector<CheckReport> out;
  for (auto const& [id, p] : suite_plan(level, base)) out.push_back(run_check(id, p));
  return out;
}

}  // namespace hecke0::verify
