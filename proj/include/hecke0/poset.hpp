#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "permutation.hpp"
#include "qsym.hpp"
#include "shape.hpp"
#include "tableau.hpp"

namespace hecke0 {

/// Partial order on {1, ..., n}; up(i) holds every j with i <= j, including i itself.
class LabeledPoset {
 public:
  LabeledPoset() = default;
  explicit LabeledPoset(int n) : n_(n), up_(n) {
    if (n < 0 || n > 16) throw invalid_input("poset size out of range");
    for (int i = 0; i < n; ++i) up_[i] = static_cast<std::uint16_t>(1U << i);
  }

  /// Reflexive-transitive closure of the given pairs (a, b) meaning a <= b; rejects cycles.
  static LabeledPoset from_relations(int n, std::vector<std::pair<int, int>> const& rel) {
    LabeledPoset p(n);
    for (auto [a, b] : rel) {
      if (a < 1 || a > n || b < 1 || b > n) throw invalid_input("poset relation out of range");
      p.up_[a - 1] |= static_cast<std::uint16_t>(1U << (b - 1));
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if ((p.up_[i] >> k) & 1U) p.up_[i] |= p.up_[k];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (((p.up_[i] >> j) & 1U) && ((p.up_[j] >> i) & 1U)) throw invalid_input("relations contain a cycle");
    return p;
  }

  /// i <= j iff the cell of i is weakly upper-left of the cell of j.
  static LabeledPoset from_tableau(Tableau const& t) {
    LabeledPoset p(t.size());
    for (int i = 1; i <= t.size(); ++i)
      for (int j = 1; j <= t.size(); ++j) {
        auto a = t.cell_of(i), b = t.cell_of(j);
        if (a.row <= b.row && a.col <= b.col) p.up_[i - 1] |= static_cast<std::uint16_t>(1U << (j - 1));
      }
    return p;
  }

  static LabeledPoset from_up_masks(std::vector<std::uint16_t> up) {
    LabeledPoset p;
    p.n_ = static_cast<int>(up.size());
    p.up_ = std::move(up);
    return p;
  }

  int size() const { return n_; }
  bool leq(int i, int j) const { return (up_[i - 1] >> (j - 1)) & 1U; }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  std::vector<std::uint16_t> const& up_masks() const { return up_; }

  /// Cover relations (a, b), a < b with nothing strictly between, sorted.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n_; ++a)
      for (int b = 1; b <= n_; ++b) {
        if (!less(a, b)) continue;
        bool cover = true;
        for (int c = 1; c <= n_ && cover; ++c) cover = !(less(a, c) && less(c, b));
        if (cover) out.emplace_back(a, b);
      }
    return out;
  }

  friend bool operator==(LabeledPoset const&, LabeledPoset const&) = default;
  friend auto operator<=>(LabeledPoset const&, LabeledPoset const&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint16_t> up_;
};

/// Sigma_L(P) = {sigma : sigma(i) <= sigma(j) whenever i <= j}; Sigma_R holds the inverses.
/// Sorted by length, then lexicographically.
inline std::vector<Permutation> linear_extensions(LabeledPoset const& P, Side side = Side::left) {
  int n = P.size();
  std::vector<std::uint16_t> below(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (P.less(i, j)) below[j - 1] |= static_cast<std::uint16_t>(1U << (i - 1));
  std::vector<int> seq;
  std::vector<Permutation> out;
  auto rec = [&](auto&& self, std::uint16_t placed) -> void {
    if (static_cast<int>(seq.size()) == n) {
      Permutation e(seq);
      out.push_back(side == Side::left ? e.inverse() : e);
      return;
    }
    for (int x = 1; x <= n; ++x) {
      if ((placed >> (x - 1)) & 1U) continue;
      if ((below[x - 1] & placed) != below[x - 1]) continue;
      seq.push_back(x);
      self(self, static_cast<std::uint16_t>(placed | (1U << (x - 1))));
      seq.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), length_lex_less);
  return out;
}

/// For x <= z and x < y < z as integers, x <= y or y <= z.
inline bool is_regular(LabeledPoset const& P) {
  int n = P.size();
  for (int x = 1; x <= n; ++x)
    for (int z = 1; z <= n; ++z) {
      if (x == z || !P.leq(x, z)) continue;
      for (int y = std::min(x, z) + 1; y < std::max(x, z); ++y)
        if (!P.leq(x, y) && !P.leq(y, z)) return false;
    }
  return true;
}

/// Every labeled poset on [n], each exactly once.
inline std::vector<LabeledPoset> enumerate_posets(int n) {
  if (n < 0 || n > 7) throw invalid_input("poset enumeration supports n <= 7");
  std::vector<std::vector<std::uint16_t>> level{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<std::uint16_t>> next;
    std::uint16_t bit = static_cast<std::uint16_t>(1U << k);
    for (auto const& up : level) {
      std::vector<std::uint16_t> down(k, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if ((up[i] >> j) & 1U) down[j] |= static_cast<std::uint16_t>(1U << i);
      std::vector<std::uint16_t> ideals, filters;
      for (std::uint32_t s = 0; s < (1U << k); ++s) {
        bool is_ideal = true, is_filter = true;
        for (int i = 0; i < k; ++i) {
          if (!((s >> i) & 1U)) continue;
          if ((down[i] & s) != down[i]) is_ideal = false;
          if ((up[i] & s) != up[i]) is_filter = false;
        }
        if (is_ideal) ideals.push_back(static_cast<std::uint16_t>(s));
        if (is_filter) filters.push_back(static_cast<std::uint16_t>(s));
      }
      for (auto D : ideals)
        for (auto U : filters) {
          if (D & U) continue;
          bool ok = true;
          for (int d = 0; d < k && ok; ++d)
            if ((D >> d) & 1U) ok = (up[d] & U) == U;
          if (!ok) continue;
          std::vector<std::uint16_t> ext(up);
          for (int d = 0; d < k; ++d)
            if ((D >> d) & 1U) ext[d] |= bit;
          ext.push_back(static_cast<std::uint16_t>(bit | U));
          next.push_back(std::move(ext));
        }
    }
    level = std::move(next);
  }
  std::vector<LabeledPoset> out;
  out.reserve(level.size());
  for (auto& up : level) out.push_back(LabeledPoset::from_up_masks(std::move(up)));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// Minimum entry of each connected component, components top to bottom.
inline std::vector<int> component_minima(Tableau const& t) {
  std::vector<int> mins;
  int r0 = 0;
  for (auto const& comp : t.shape().components()) {
    int m = t.size() + 1;
    for (int r = r0; r < r0 + comp.rows(); ++r)
      for (int c = t.shape().mu_at(r); c < t.shape().lambda()[r]; ++c) m = std::min(m, t.at(r, c));
    mins.push_back(m);
    r0 += comp.rows();
  }
  return mins;
}

inline std::map<LabeledPoset, Tableau> const& schur_table(int n) {
  static std::mutex mu;
  static std::map<int, std::map<LabeledPoset, Tableau>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::map<LabeledPoset, Tableau> table;
  for (auto const& s : skew_shapes(n))
    for (auto const& tau : schur_labelings(s)) {
      auto mins = component_minima(tau);
      if (!std::is_sorted(mins.begin(), mins.end())) continue;
      auto P = LabeledPoset::from_tableau(tau);
      auto [pos, fresh] = table.emplace(P, tau);
      if (!fresh && !(pos->second == tau))
        throw internal_failure("two normalized Schur labelings share a poset: " + pos->second.str() + " and " +
                               tau.str());
    }
  return memo.emplace(n, std::move(table)).first->second;
}

}  // namespace detail

/// tau_P: the Schur labeling of a basic shape with poset P whose component minima increase
/// top to bottom; nullopt when P is not a Schur labeling poset.
inline std::optional<Tableau> schur_recognize(LabeledPoset const& P) {
  if (P.size() > 7) throw invalid_input("Schur recognition supports n <= 7");
  auto const& table = detail::schur_table(P.size());
  auto it = table.find(P);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

/// Posets of Schur labelings of size n (SP_n), sorted.
inline std::vector<LabeledPoset> schur_posets(int n) {
  std::vector<LabeledPoset> out;
  for (auto const& [P, tau] : detail::schur_table(n)) out.push_back(P);
  return out;
}

/// Posets of distinguished Schur labelings of size n (RSP_n), sorted.
inline std::vector<LabeledPoset> regular_schur_posets(int n) {
  std::vector<LabeledPoset> out;
  for (auto const& [P, tau] : detail::schur_table(n))
    if (tau.is_distinguished()) out.push_back(P);
  return out;
}

/// P-partition generating function in the fundamental basis.
inline QSym kp(LabeledPoset const& P) {
  QSym q(P.size());
  for (auto const& g : linear_extensions(P, Side::left))
    q.add_term(Composition::from_set(descents(g, Side::left), P.size()), 1);
  return q;
}

/// Brute-force P-partition count by monomial: f maps [n] to variables 0..m-1,
/// i <= j forces f(i) <= f(j), strictly when additionally i > j.
inline std::map<std::vector<int>, Rational> kp_monomial(LabeledPoset const& P, int m) {
  int n = P.size();
  std::map<std::vector<int>, Rational> out;
  std::vector<int> f(n, 0);
  auto ok = [&]() {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j || !P.leq(i, j)) continue;
        if (f[i - 1] > f[j - 1]) return false;
        if (i > j && f[i - 1] == f[j - 1]) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int p) -> void {
    if (p == n) {
      if (!ok()) return;
      std::vector<int> e(m, 0);
      for (int v : f) ++e[v];
      out[e] += 1;
      return;
    }
    for (int v = 0; v < m; ++v) {
      f[p] = v;
      self(self, p + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Restriction of P to a convex subset, relabeled order-preservingly by 1..|S|.
inline LabeledPoset convex_standardize(LabeledPoset const& P, std::vector<int> S) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  for (int s : S)
    if (s < 1 || s > P.size()) throw invalid_input("subset element out of range");
  auto in = [&](int y) { return std::binary_search(S.begin(), S.end(), y); };
  for (int x : S)
    for (int z : S)
      for (int y = 1; y <= P.size(); ++y)
        if (P.leq(x, y) && P.leq(y, z) && !in(y)) throw invalid_input("subset is not convex");
  std::vector<std::pair<int, int>> rel;
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = 0; b < S.size(); ++b)
      if (a != b && P.leq(S[a], S[b])) rel.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
  return LabeledPoset::from_relations(static_cast<int>(S.size()), rel);
}

}  // namespace hecke0
