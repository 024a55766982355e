#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "module.hpp"
#include "permutation.hpp"
#include "poset.hpp"
#include "qsym.hpp"
#include "tableau.hpp"

namespace hecke0 {

/// [s1, r1]_L and [s2, r2]_L are descent-preserving isomorphic iff r1 s1^{-1} = r2 s2^{-1} and the
/// translation gamma -> gamma s1^{-1} s2 keeps every left descent set.
inline bool descent_preserving_equiv(WeakInterval const& a, WeakInterval const& b) {
  if (a.side != Side::left || b.side != Side::left) throw invalid_input("expects left weak intervals");
  if (a.bottom.size() != b.bottom.size()) return false;
  if (!(a.top * a.bottom.inverse() == b.top * b.bottom.inverse())) return false;
  Permutation shift = a.bottom.inverse() * b.bottom;
  for (auto const& g : a.elements) {
    Permutation h = g * shift;
    if (!b.contains(h) || descents(g, Side::left) != descents(h, Side::left)) return false;
  }
  return true;
}

/// Equivalence class C of a left interval: C = {[s, xi s]_L}, with min(C) = {s} and max(C) = xi min(C).
struct ClassDescriptor {
  Permutation xi;
  WeakInterval min;
  WeakInterval max;
  int class_size = 0;
};

/// Breadth-first search over right covers from the bottom; min(C) and max(C) must come out as
/// right intervals, otherwise the result is reported as an internal failure.
inline ClassDescriptor equivalence_class(Permutation const& bottom, Permutation const& top) {
  auto I = weak_interval(bottom, top, Side::left);
  Permutation xi = top * bottom.inverse();
  int lxi = xi.length();
  int n = bottom.size();
  std::vector<std::pair<Permutation, IndexSet>> desc;
  for (auto const& g : I.elements) desc.emplace_back(g, descents(g, Side::left));
  Permutation binv = bottom.inverse();
  auto member = [&](Permutation const& s) {
    if ((xi * s).length() != lxi + s.length()) return false;
    Permutation shift = binv * s;
    for (auto const& [g, d] : desc)
      if (descents(g * shift, Side::left) != d) return false;
    return true;
  };
  std::unordered_set<Permutation, PermutationHash> seen{bottom};
  std::deque<Permutation> queue{bottom};
  std::vector<Permutation> mins;
  while (!queue.empty()) {
    Permutation s = queue.front();
    queue.pop_front();
    mins.push_back(s);
    for (int k = 1; k < n; ++k) {
      Permutation t = s.right_mul(k);
      if (seen.count(t) || !member(t)) continue;
      seen.insert(t);
      queue.push_back(t);
    }
  }
  std::sort(mins.begin(), mins.end(), length_lex_less);
  if (!is_weak_interval(mins, Side::right))
    throw internal_failure("min of the class of [" + bottom.str() + "," + top.str() + "] is not a right interval");
  auto lo = weak_interval(mins.front(), mins.back(), Side::right);
  std::vector<Permutation> maxs;
  for (auto const& s : mins) maxs.push_back(xi * s);
  if (!is_weak_interval(maxs, Side::right))
    throw internal_failure("max of the class of [" + bottom.str() + "," + top.str() + "] is not a right interval");
  std::sort(maxs.begin(), maxs.end(), length_lex_less);
  auto hi = weak_interval(maxs.front(), maxs.back(), Side::right);
  return {xi, lo, hi, lo.size()};
}

namespace detail {

/// Every permutation of S_n grouped by recording tableau.
inline std::map<Tableau, std::vector<Permutation>> const& recording_classes(int n) {
  static std::mutex mu;
  static std::map<int, std::map<Tableau, std::vector<Permutation>>> memo;
  if (n > 7) throw invalid_input("dual Knuth classes are tabulated for n <= 7");
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::map<Tableau, std::vector<Permutation>> classes;
  for (auto const& g : all_permutations(n)) classes[rsk(g).second].push_back(g);
  return memo.emplace(n, std::move(classes)).first->second;
}

/// Transposed partition.
inline std::vector<int> conjugate(std::vector<int> const& lam) {
  std::vector<int> out;
  for (int c = 0; !lam.empty() && c < lam[0]; ++c) {
    int h = 0;
    for (int p : lam) h += p > c ? 1 : 0;
    out.push_back(h);
  }
  return out;
}

/// Strict dominance a < b for partitions of the same size.
inline bool strictly_dominated(std::vector<int> const& a, std::vector<int> const& b) {
  if (a == b) return false;
  int sa = 0, sb = 0;
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    sa += k < a.size() ? a[k] : 0;
    sb += k < b.size() ? b[k] : 0;
    if (sa > sb) return false;
  }
  return true;
}

}  // namespace detail

struct DualKnuthReport {
  bool closed = false;
  std::vector<Tableau> recording;  // distinct recording tableaux met, sorted
  std::optional<Permutation> missing;
};

/// A set is dual plactic closed when it contains every permutation sharing a recording tableau
/// with one of its elements.
inline DualKnuthReport dual_knuth_closure_test(std::vector<Permutation> const& S) {
  DualKnuthReport rep;
  if (S.empty()) {
    rep.closed = true;
    return rep;
  }
  int n = S.front().size();
  std::unordered_set<Permutation, PermutationHash> in(S.begin(), S.end());
  std::set<Tableau> qs;
  for (auto const& g : S) qs.insert(rsk(g).second);
  rep.recording.assign(qs.begin(), qs.end());
  auto const& classes = detail::recording_classes(n);
  for (auto const& Q : qs)
    for (auto const& g : classes.at(Q))
      if (!in.count(g)) {
        rep.missing = g;
        return rep;
      }
  rep.closed = true;
  return rep;
}

struct Filtration {
  Tableau tau;                                  // tau_P
  std::vector<Tableau> order;                   // recording tableaux in filtration order
  std::vector<std::vector<Permutation>> layers; // layer k holds the class of order[k]
  std::vector<QSym> quotient_ch;
  std::vector<SchurExpansion> quotient_schur;
  bool closed = true;                           // every partial union spans a submodule
  bool quotients_match = true;                  // quotient k has characteristic s_{sh(order[k])^t}
  std::string failure;
};

/// Default order: recording shapes in increasing lexicographic order (a linear extension of
/// dominance), ties broken by row reading word.
inline std::vector<Tableau> default_filtration_order(std::vector<Tableau> qs) {
  std::sort(qs.begin(), qs.end(), [](Tableau const& a, Tableau const& b) {
    if (a.partition() != b.partition()) return a.partition() < b.partition();
    auto ra = a.rows(), rb = b.rows();
    return ra < rb;
  });
  return qs;
}

/// Filtration of M_P (P regular Schur labeled) by unions of dual Knuth classes.
/// A caller order must list the recording tableaux of Sigma_L(P) and refine dominance of shapes.
inline Filtration distinguished_filtration(LabeledPoset const& P, std::optional<std::vector<Tableau>> order = {}) {
  auto tau = schur_recognize(P);
  if (!tau || !tau->is_distinguished()) throw invalid_input("poset is not a regular Schur labeled poset");
  Filtration F;
  F.tau = *tau;
  auto sigma = linear_extensions(P, Side::left);
  std::map<Tableau, std::vector<Permutation>> classes;
  for (auto const& g : sigma) classes[rsk(g).second].push_back(g);
  std::vector<Tableau> qs;
  for (auto const& [Q, members] : classes) qs.push_back(Q);
  if (order) {
    auto given = *order, sorted_given = *order;
    std::sort(sorted_given.begin(), sorted_given.end());
    if (sorted_given != qs) throw invalid_input("order must list exactly the recording tableaux of Sigma_L(P)");
    for (std::size_t a = 0; a < given.size(); ++a)
      for (std::size_t b = a + 1; b < given.size(); ++b)
        if (detail::strictly_dominated(given[b].partition(), given[a].partition()))
          throw invalid_input("order places " + given[a].str() + " before " + given[b].str() +
                              " although its shape strictly dominates");
    F.order = given;
  } else {
    F.order = default_filtration_order(qs);
  }
  std::unordered_set<Permutation, PermutationHash> lower, all(sigma.begin(), sigma.end());
  int n = P.size();
  for (auto const& Q : F.order) {
    auto const& layer = classes.at(Q);
    F.layers.push_back(layer);
    for (auto const& g : layer) lower.insert(g);
    for (auto const& g : lower)
      for (int i = 1; i < n; ++i) {
        if (descents(g, Side::left).contains(i)) continue;
        Permutation h = g.left_mul(i);
        if (all.count(h) && !lower.count(h)) {
          F.closed = false;
          F.failure = "pi_" + std::to_string(i) + " sends " + g.str() + " outside the layer union";
        }
      }
    QSym q(n);
    for (auto const& g : layer) q.add_term(Composition::from_set(descents(g, Side::left), n).complement(), 1);
    F.quotient_ch.push_back(q);
    auto e = schur_expand(q);
    F.quotient_schur.push_back(e.value_or(SchurExpansion{}));
    SchurExpansion expect{{detail::conjugate(Q.partition()), Rational(1)}};
    if (!e || *e != expect) {
      F.quotients_match = false;
      if (F.failure.empty()) F.failure = "quotient for " + Q.str() + " has characteristic " + q.str();
    }
  }
  return F;
}

struct ProbeRow {
  bool closed = false;
  int dim = 0;
  int socle_dim = 0;
  QSym ch;
  bool hits_target = false;
};

/// Tests candidate subspaces of M for being submodules whose characteristic is one of the targets.
inline std::vector<ProbeRow> filtration_nonexistence_probe(HeckeModule const& M,
                                                           std::vector<std::vector<Vector>> const& candidates,
                                                           std::vector<QSym> const& targets) {
  std::vector<ProbeRow> out;
  for (auto const& cand : candidates) {
    auto rep = verify_submodule(M, cand);
    ProbeRow row{rep.closed, rep.dim, rep.socle_dim, rep.ch, false};
    if (rep.closed)
      for (auto const& t : targets) row.hits_target = row.hits_target || rep.ch == t;
    out.push_back(row);
  }
  return out;
}

/// Cover and hull data of M_P for a regular Schur labeled poset P.
struct CoverHull {
  Tableau tau;
  GeneralizedComposition proj;
  GeneralizedComposition inj;
  Matrix cover;  // P_proj -> M_P
  Matrix hull;   // M_P -> P_inj
  bool cover_ok = false;
  bool hull_ok = false;
  std::string failure;
};

/// Projective cover P_balproj ->> M_P built from the truncation map onto [bottom, read_tau0(T_col)]_L
/// followed by read_tau0(T) -> read_tauP(T); the injective hull M_P >-> P_balinj is the dual of the
/// transposed shape's cover, a signed monomial map. Both are checked as module maps, surjective with kernel in the
/// radical, respectively injective with image containing the socle.
inline CoverHull proj_cover_inj_hull(LabeledPoset const& P, int cap_dim = kDefaultCapDim) {
  auto tau = schur_recognize(P);
  if (!tau || !tau->is_distinguished()) throw invalid_input("poset is not a regular Schur labeled poset");
  SkewShape s = tau->shape();
  CoverHull out{*tau, s.balproj(), s.balinj(), {}, {}, false, false, ""};
  auto M = poset_module(P, cap_dim);
  auto Pp = projective(out.proj, cap_dim);
  auto Pi = projective(out.inj, cap_dim);
  Tableau t0 = canonical(s, Canonical::tau0);
  Permutation rho = reading(t0, canonical(s, Canonical::col));
  std::unordered_map<Permutation, Permutation, PermutationHash> to_tauP;
  for (auto const& T : enumerate_syt(s)) to_tauP.emplace(reading(t0, T), reading(*tau, T));
  auto idx = [](HeckeModule const& X, Permutation const& g) {
    auto it = std::find(X.perms.begin(), X.perms.end(), g);
    return it == X.perms.end() ? -1 : static_cast<int>(it - X.perms.begin());
  };
  out.cover = Matrix(M.dim, Pp.dim);
  for (int b = 0; b < Pp.dim; ++b) {
    auto const& g = Pp.perms[b];
    if (!weak_leq(g, rho, Side::left)) continue;
    auto it = to_tauP.find(g);
    int r = it == to_tauP.end() ? -1 : idx(M, it->second);
    if (r < 0) {
      out.failure = "truncation image " + g.str() + " is not a tau_0 reading word";
      return out;
    }
    out.cover(r, b) = 1;
  }
  if (!is_module_map(Pp, M, out.cover)) out.failure = "cover map fails the module map check";
  else if (rank(out.cover) != M.dim) out.failure = "cover map is not surjective";
  else {
    auto rad = radical_top_socle(Pp).radical;
    bool inside = true;
    for (auto const& v : nullspace(out.cover)) inside = inside && rad.contains(v);
    if (!inside) out.failure = "cover kernel is not inside the radical";
    else out.cover_ok = true;
  }
  // Hull support: read_tauP(T) -> read_tau0(T'') w_0 on the transposed shape, where T'' is the
  // standard tableau of the transpose with read_tau1(T'') = read_tau0(T) w_0.
  SkewShape st = s.transpose();
  Permutation w0 = Permutation::longest(s.size());
  Tableau t1t = canonical(st, Canonical::tau1), t0t = canonical(st, Canonical::tau0);
  std::unordered_map<Permutation, Permutation, PermutationHash> dual_of;
  for (auto const& U : enumerate_syt(st)) dual_of.emplace(reading(t1t, U), reading(t0t, U) * w0);
  std::unordered_map<Permutation, Permutation, PermutationHash> hull_of;
  for (auto const& [g0, gP] : to_tauP) {
    auto it = dual_of.find(g0 * w0);
    if (it == dual_of.end()) {
      out.failure = "no transposed tableau matches " + g0.str();
      return out;
    }
    hull_of.emplace(gP, it->second);
  }
  std::vector<int> f(M.dim);
  for (int b = 0; b < M.dim; ++b) {
    f[b] = idx(Pi, hull_of.at(M.perms[b]));
    if (f[b] < 0) {
      if (out.failure.empty()) out.failure = "hull support " + hull_of.at(M.perms[b]).str() + " not in P_inj";
      return out;
    }
  }
  auto X = monomial_map(M, Pi, f);
  if (!X) {
    if (out.failure.empty()) out.failure = "no module map with the hull support";
    return out;
  }
  out.hull = *X;
  auto soc = radical_top_socle(Pi).socle;
  Echelon image(Pi.dim);
  for (int b = 0; b < M.dim; ++b) image.add(out.hull.column(b));
  bool essential = true;
  for (auto const& v : soc) essential = essential && image.contains(v);
  if (image.rank() != M.dim) out.failure = "hull map is not injective";
  else if (!essential) out.failure = "hull image misses part of the socle";
  else out.hull_ok = true;
  return out;
}

}  // namespace hecke0
