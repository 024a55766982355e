#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core.hpp"

namespace hecke0 {

/// Permutation of {1, ..., n} in one-line notation; (*this)(i) is the value at position i.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> const& word) {
    int n = static_cast<int>(word.size());
    if (n > kMaxN) throw invalid_input("permutation rank exceeds " + std::to_string(kMaxN));
    std::vector<bool> seen(n + 1, false);
    for (int v : word) {
      if (v < 1 || v > n || seen[v]) throw invalid_input("not a permutation word");
      seen[v] = true;
      w_.push_back(static_cast<std::uint8_t>(v));
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(w);
  }

  /// Longest element w_0 of S_n.
  static Permutation longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(w);
  }

  /// Accepts "3142" (n <= 9) or "3,1,4,2" / "[3,1,4,2]".
  static Permutation parse(std::string_view s) {
    std::vector<int> w;
    std::string t;
    for (char c : s)
      if (c != '[' && c != ']' && c != ' ') t += c;
    if (t.find(',') != std::string::npos) {
      std::size_t start = 0;
      while (start <= t.size()) {
        auto end = t.find(',', start);
        if (end == std::string::npos) end = t.size();
        auto tok = t.substr(start, end - start);
        if (tok.empty()) throw invalid_input("empty entry in permutation");
        for (char c : tok)
          if (c < '0' || c > '9') throw invalid_input("non-digit in permutation");
        w.push_back(std::stoi(tok));
        start = end + 1;
      }
    } else {
      for (char c : t) {
        if (c < '1' || c > '9') throw invalid_input("non-digit in permutation '" + std::string(s) + "'");
        w.push_back(c - '0');
      }
    }
    return Permutation(w);
  }

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }

  std::vector<int> word() const { return {w_.begin(), w_.end()}; }

  /// Position holding value v.
  int position(int v) const {
    for (int i = 0; i < size(); ++i)
      if (w_[i] == v) return i + 1;
    throw invalid_input("value not in permutation");
  }

  Permutation inverse() const {
    std::vector<int> inv(size());
    for (int i = 0; i < size(); ++i) inv[w_[i] - 1] = i + 1;
    return Permutation(inv);
  }

  /// Composition (*this o rhs)(k) = (*this)(rhs(k)).
  Permutation operator*(Permutation const& rhs) const {
    if (rhs.size() != size()) throw invalid_input("rank mismatch in product");
    std::vector<int> out(size());
    for (int k = 0; k < size(); ++k) out[k] = w_[rhs.w_[k] - 1];
    return Permutation(out);
  }

  /// s_i * this: swaps the values i and i+1.
  Permutation left_mul(int i) const {
    Permutation p = *this;
    for (auto& v : p.w_) {
      if (v == i) v = static_cast<std::uint8_t>(i + 1);
      else if (v == i + 1) v = static_cast<std::uint8_t>(i);
    }
    return p;
  }

  /// this * s_i: swaps the positions i and i+1.
  Permutation right_mul(int i) const {
    Permutation p = *this;
    std::swap(p.w_[i - 1], p.w_[i]);
    return p;
  }

  Permutation mul(int i, Side side) const { return side == Side::left ? left_mul(i) : right_mul(i); }

  int length() const {
    int l = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (w_[i] > w_[j]) ++l;
    return l;
  }

  std::string str() const {
    std::string s;
    if (size() <= 9) {
      for (auto v : w_) s += static_cast<char>('0' + v);
      return s;
    }
    s = "[";
    for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
    return s + "]";
  }

  friend auto operator<=>(Permutation const&, Permutation const&) = default;
  friend bool operator==(Permutation const&, Permutation const&) = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : w_) h = (h ^ v) * 1099511628211ULL;
    return h;
  }

 private:
  std::vector<std::uint8_t> w_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const { return p.hash(); }
};

/// Length first, then lexicographic; used to order interval elements.
inline bool length_lex_less(Permutation const& a, Permutation const& b) {
  int la = a.length(), lb = b.length();
  return la != lb ? la < lb : a < b;
}

/// Left descents {i : i+1 precedes i}; right descents {i : w_i > w_{i+1}}.
inline IndexSet descents(Permutation const& p, Side side) {
  IndexSet d;
  int n = p.size();
  if (side == Side::right) {
    for (int i = 1; i < n; ++i)
      if (p(i) > p(i + 1)) d.insert(i);
  } else {
    std::vector<int> pos(n + 1);
    for (int i = 1; i <= n; ++i) pos[p(i)] = i;
    for (int i = 1; i < n; ++i)
      if (pos[i] > pos[i + 1]) d.insert(i);
  }
  return d;
}

/// Weak order comparison by inclusion of inversion sets (positions for left, values for right).
inline bool weak_leq(Permutation const& a, Permutation const& b, Side side) {
  if (a.size() != b.size()) throw invalid_input("rank mismatch in weak order comparison");
  int n = a.size();
  if (side == Side::left) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (a(i) > a(j) && !(b(i) > b(j))) return false;
    return true;
  }
  return weak_leq(a.inverse(), b.inverse(), Side::left);
}

struct Cover {
  int from;
  int to;
  int color;
  friend auto operator<=>(Cover const&, Cover const&) = default;
};

/// Closed interval in left or right weak order, with its colored Hasse diagram.
/// Elements are sorted by length then lexicographically; covers index into elements.
struct WeakInterval {
  Side side = Side::left;
  Permutation bottom;
  Permutation top;
  std::vector<Permutation> elements;
  std::vector<Cover> covers;

  int index_of(Permutation const& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p, length_lex_less);
    if (it == elements.end() || *it != p) return -1;
    return static_cast<int>(it - elements.begin());
  }
  bool contains(Permutation const& p) const { return index_of(p) >= 0; }
  int size() const { return static_cast<int>(elements.size()); }
};

/// [bottom, top] in the chosen weak order, found by breadth-first search along covers.
inline WeakInterval weak_interval(Permutation const& bottom, Permutation const& top, Side side) {
  if (!weak_leq(bottom, top, side))
    throw invalid_input(bottom.str() + " is not below " + top.str() + " in " + side_name(side) + " weak order");
  int n = bottom.size();
  WeakInterval iv{side, bottom, top, {}, {}};
  std::unordered_map<Permutation, int, PermutationHash> seen;
  std::vector<std::tuple<Permutation, Permutation, int>> raw_edges;
  std::deque<Permutation> queue{bottom};
  seen.emplace(bottom, 0);
  while (!queue.empty()) {
    Permutation g = queue.front();
    queue.pop_front();
    iv.elements.push_back(g);
    IndexSet d = descents(g, side);
    for (int i = 1; i < n; ++i) {
      if (d.contains(i)) continue;
      Permutation h = g.mul(i, side);
      if (!weak_leq(h, top, side)) continue;
      raw_edges.emplace_back(g, h, i);
      if (seen.emplace(h, 0).second) queue.push_back(h);
    }
  }
  std::sort(iv.elements.begin(), iv.elements.end(), length_lex_less);
  for (auto const& [g, h, i] : raw_edges) iv.covers.push_back({iv.index_of(g), iv.index_of(h), i});
  std::sort(iv.covers.begin(), iv.covers.end());
  return iv;
}

/// Longest element of the parabolic subgroup generated by {s_i : i in I}.
inline Permutation longest_element(int n, IndexSet I) {
  if (!I.subset_of(IndexSet::full(n))) throw invalid_input("generator index outside [n-1]");
  std::vector<int> w(n);
  int start = 1;
  while (start <= n) {
    int end = start;
    while (end < n && I.contains(end)) ++end;
    for (int k = start; k <= end; ++k) w[k - 1] = start + end - k;
    start = end + 1;
  }
  return Permutation(w);
}

/// {sigma : I subset Des_L(sigma) subset J} as the right interval [w_0(I), w_0(J^c) w_0].
inline WeakInterval descent_class_interval(int n, IndexSet I, IndexSet J) {
  if (!I.subset_of(J)) throw invalid_input("descent class needs I contained in J");
  if (!J.subset_of(IndexSet::full(n))) throw invalid_input("descent class needs J inside [n-1]");
  return weak_interval(longest_element(n, I), longest_element(n, J.complement(n)) * Permutation::longest(n),
                       Side::right);
}

/// All of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Tests whether a set of permutations is a single interval in the chosen weak order.
inline bool is_weak_interval(std::vector<Permutation> set, Side side) {
  if (set.empty()) return false;
  std::sort(set.begin(), set.end(), length_lex_less);
  Permutation const& lo = set.front();
  Permutation const& hi = set.back();
  for (auto const& p : set)
    if (!weak_leq(lo, p, side) || !weak_leq(p, hi, side)) return false;
  return weak_interval(lo, hi, side).size() == static_cast<int>(set.size());
}

}  // namespace hecke0
