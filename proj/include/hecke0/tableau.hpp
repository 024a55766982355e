#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permutation.hpp"
#include "shape.hpp"

namespace hecke0 {

/// Bijective filling of a basic skew diagram by 1, ..., n.
class Tableau {
 public:
  Tableau() = default;

  /// entries[k] fills shape.cells()[k].
  Tableau(SkewShape shape, std::vector<int> entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
    int n = shape_.size();
    if (static_cast<int>(entries_.size()) != n) throw invalid_input("entry count does not match shape");
    where_.assign(n + 1, -1);
    for (int k = 0; k < n; ++k) {
      int v = entries_[k];
      if (v < 1 || v > n || where_[v] >= 0) throw invalid_input("tableau entries must be 1..n, each once");
      where_[v] = k;
    }
  }

  /// Rows with 0 for cells outside the diagram; empty rows and columns are compressed away.
  static Tableau from_rows(std::vector<std::vector<int>> const& rows) {
    std::vector<std::pair<Cell, int>> filled;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      for (int c = 0; c < static_cast<int>(rows[r].size()); ++c)
        if (rows[r][c] != 0) filled.push_back({{r, c}, rows[r][c]});
    std::sort(filled.begin(), filled.end());
    std::vector<Cell> cells;
    for (auto const& f : filled) cells.push_back(f.first);
    SkewShape s = SkewShape::from_cells(cells);
    std::vector<int> entries;
    for (auto const& f : filled) entries.push_back(f.second);
    return Tableau(s, entries);
  }

  SkewShape const& shape() const { return shape_; }
  std::vector<int> const& entries() const { return entries_; }
  int size() const { return shape_.size(); }

  /// Entry at (r, c), or 0 outside the diagram.
  int at(int r, int c) const {
    int k = shape_.cell_index(r, c);
    return k < 0 ? 0 : entries_[k];
  }
  Cell cell_of(int v) const { return shape_.cells()[where_.at(v)]; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(shape_.rows());
    for (int r = 0; r < shape_.rows(); ++r)
      for (int c = 0; c < shape_.lambda()[r]; ++c) out[r].push_back(at(r, c));
    return out;
  }

  /// Rows and columns increase.
  bool is_standard() const {
    for (auto const& c : shape_.cells()) {
      int v = at(c.row, c.col);
      if (shape_.contains(c.row, c.col + 1) && at(c.row, c.col + 1) < v) return false;
      if (shape_.contains(c.row + 1, c.col) && at(c.row + 1, c.col) < v) return false;
    }
    return true;
  }

  /// Rows decrease left to right, columns increase top to bottom.
  bool is_schur_labeling() const {
    for (auto const& c : shape_.cells()) {
      int v = at(c.row, c.col);
      if (shape_.contains(c.row, c.col + 1) && at(c.row, c.col + 1) > v) return false;
      if (shape_.contains(c.row + 1, c.col) && at(c.row + 1, c.col) < v) return false;
    }
    return true;
  }

  /// Every cell weakly below and weakly left of another holds the larger entry.
  bool is_distinguished() const {
    auto const& cells = shape_.cells();
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = 0; b < cells.size(); ++b)
        if (a != b && cells[a].row >= cells[b].row && cells[a].col <= cells[b].col && entries_[a] < entries_[b])
          return false;
    return true;
  }

  Tableau transpose() const {
    std::vector<std::pair<Cell, int>> filled;
    for (std::size_t k = 0; k < entries_.size(); ++k)
      filled.push_back({{shape_.cells()[k].col, shape_.cells()[k].row}, entries_[k]});
    std::sort(filled.begin(), filled.end());
    std::vector<Cell> cells;
    std::vector<int> entries;
    for (auto const& f : filled) {
      cells.push_back(f.first);
      entries.push_back(f.second);
    }
    return Tableau(SkewShape::from_cells(cells), entries);
  }

  /// Rotated by 180 degrees with every entry k replaced by n+1-k.
  Tableau rotate_complement() const {
    int n = size();
    std::vector<std::pair<Cell, int>> filled;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      auto c = shape_.cells()[k];
      filled.push_back({{shape_.rows() - 1 - c.row, shape_.cols() - 1 - c.col}, n + 1 - entries_[k]});
    }
    std::sort(filled.begin(), filled.end());
    std::vector<Cell> cells;
    std::vector<int> entries;
    for (auto const& f : filled) {
      cells.push_back(f.first);
      entries.push_back(f.second);
    }
    return Tableau(SkewShape::from_cells(cells), entries);
  }

  /// Straight shape as a partition (only meaningful when mu is empty).
  std::vector<int> partition() const { return shape_.lambda(); }

  std::string str() const {
    std::string s = "[";
    auto rs = rows();
    for (std::size_t r = 0; r < rs.size(); ++r) {
      s += r ? ",[" : "[";
      for (std::size_t c = 0; c < rs[r].size(); ++c) s += (c ? "," : "") + (rs[r][c] ? std::to_string(rs[r][c]) : "_");
      s += "]";
    }
    return s + "]";
  }

  friend bool operator==(Tableau const& a, Tableau const& b) { return a.shape_ == b.shape_ && a.entries_ == b.entries_; }
  friend auto operator<=>(Tableau const& a, Tableau const& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  SkewShape shape_;
  std::vector<int> entries_;
  std::vector<int> where_;
};

namespace detail {

/// Fills 1..n in increasing order; `ready` decides whether a cell may take the next value.
template <typename Ready>
std::vector<Tableau> fill_increasing(SkewShape const& s, Ready ready) {
  int n = s.size();
  std::vector<int> entries(n, 0);
  std::vector<Tableau> out;
  auto filled = [&](int r, int c) {
    int k = s.cell_index(r, c);
    return k < 0 || entries[k] != 0;
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      out.emplace_back(s, entries);
      return;
    }
    for (int k = 0; k < n; ++k) {
      if (entries[k] != 0) continue;
      auto c = s.cells()[k];
      if (!ready(c, filled)) continue;
      entries[k] = v;
      self(self, v + 1);
      entries[k] = 0;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Standard Young tableaux of a skew shape, sorted.
inline std::vector<Tableau> enumerate_syt(SkewShape const& s) {
  return detail::fill_increasing(
      s, [](Cell c, auto const& filled) { return filled(c.row, c.col - 1) && filled(c.row - 1, c.col); });
}

/// Schur labelings of a skew shape, sorted.
inline std::vector<Tableau> schur_labelings(SkewShape const& s) {
  return detail::fill_increasing(
      s, [](Cell c, auto const& filled) { return filled(c.row, c.col + 1) && filled(c.row - 1, c.col); });
}

inline std::vector<Tableau> distinguished_labelings(SkewShape const& s) {
  std::vector<Tableau> out;
  for (auto& t : schur_labelings(s))
    if (t.is_distinguished()) out.push_back(std::move(t));
  return out;
}

enum class Canonical { tau0, tau1, row, col };

/// tau0: right to left, top row first. tau1: top to bottom, rightmost column first.
/// row: left to right, top row first. col: top to bottom, leftmost column first.
inline Tableau canonical(SkewShape const& s, Canonical kind) {
  std::vector<Cell> order = s.cells();
  auto by_row_then = [](bool right_to_left) {
    return [right_to_left](Cell a, Cell b) {
      if (a.row != b.row) return a.row < b.row;
      return right_to_left ? a.col > b.col : a.col < b.col;
    };
  };
  auto by_col_then = [](bool right_to_left) {
    return [right_to_left](Cell a, Cell b) {
      if (a.col != b.col) return right_to_left ? a.col > b.col : a.col < b.col;
      return a.row < b.row;
    };
  };
  switch (kind) {
    case Canonical::tau0: std::sort(order.begin(), order.end(), by_row_then(true)); break;
    case Canonical::tau1: std::sort(order.begin(), order.end(), by_col_then(true)); break;
    case Canonical::row: std::sort(order.begin(), order.end(), by_row_then(false)); break;
    case Canonical::col: std::sort(order.begin(), order.end(), by_col_then(false)); break;
  }
  std::vector<int> entries(s.size());
  for (int v = 1; v <= s.size(); ++v) entries[s.cell_index(order[v - 1].row, order[v - 1].col)] = v;
  return Tableau(s, entries);
}

inline Canonical parse_canonical(std::string const& s) {
  if (s == "tau0") return Canonical::tau0;
  if (s == "tau1") return Canonical::tau1;
  if (s == "row") return Canonical::row;
  if (s == "col") return Canonical::col;
  throw invalid_input("canonical filling must be tau0, tau1, row or col");
}

/// read_tau(T): the k-th letter is the entry of T in the cell where tau holds k.
inline Permutation reading(Tableau const& tau, Tableau const& T) {
  if (!(tau.shape() == T.shape())) throw invalid_input("reading needs fillings of the same shape");
  std::vector<int> w(tau.size());
  for (int k = 1; k <= tau.size(); ++k) {
    auto c = tau.cell_of(k);
    w[k - 1] = T.at(c.row, c.col);
  }
  return Permutation(w);
}

/// {i : i+1 lies weakly left of i}.
inline IndexSet syt_descents(Tableau const& T) {
  IndexSet d;
  for (int i = 1; i < T.size(); ++i)
    if (T.cell_of(i + 1).col <= T.cell_of(i).col) d.insert(i);
  return d;
}

inline Composition syt_descent_comp(Tableau const& T) { return Composition::from_set(syt_descents(T), T.size()); }

/// Row insertion; returns the insertion and recording tableaux.
inline std::pair<Tableau, Tableau> rsk(Permutation const& w) {
  std::vector<std::vector<int>> P, Q;
  for (int i = 1; i <= w.size(); ++i) {
    int x = w(i);
    std::size_t r = 0;
    while (true) {
      if (r == P.size()) {
        P.push_back({x});
        Q.push_back({i});
        break;
      }
      auto it = std::upper_bound(P[r].begin(), P[r].end(), x);
      if (it == P[r].end()) {
        P[r].push_back(x);
        Q[r].push_back(i);
        break;
      }
      std::swap(x, *it);
      ++r;
    }
  }
  return {Tableau::from_rows(P), Tableau::from_rows(Q)};
}

/// Jeu de taquin rectification; inner corners are vacated topmost first.
inline Tableau rectify(Tableau const& T) {
  auto const& s = T.shape();
  std::map<Cell, int> filled;
  for (auto const& c : s.cells()) filled[c] = T.at(c.row, c.col);
  std::vector<int> mu(s.rows(), 0);
  for (int r = 0; r < s.rows(); ++r) mu[r] = s.mu_at(r);
  auto value = [&](int r, int c) {
    auto it = filled.find({r, c});
    return it == filled.end() ? 0 : it->second;
  };
  while (true) {
    int r = -1;
    for (int k = 0; k < static_cast<int>(mu.size()); ++k) {
      int below = k + 1 < static_cast<int>(mu.size()) ? mu[k + 1] : 0;
      if (mu[k] > 0 && below < mu[k]) {
        r = k;
        break;
      }
    }
    if (r < 0) break;
    int hr = r, hc = mu[r] - 1;
    --mu[r];
    while (true) {
      int right = value(hr, hc + 1), down = value(hr + 1, hc);
      if (right == 0 && down == 0) break;
      if (down == 0 || (right != 0 && right < down)) {
        filled[{hr, hc}] = right;
        filled.erase({hr, hc + 1});
        ++hc;
      } else {
        filled[{hr, hc}] = down;
        filled.erase({hr + 1, hc});
        ++hr;
      }
    }
  }
  std::vector<Cell> cells;
  std::vector<int> entries;
  for (auto const& [c, v] : filled) {
    cells.push_back(c);
    entries.push_back(v);
  }
  return Tableau(SkewShape::from_cells(cells), entries);
}

}  // namespace hecke0
