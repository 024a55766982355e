#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace hecke0 {

/// Composition of n; the empty composition is the unique composition of 0.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p <= 0) throw invalid_input("composition parts must be positive");
  }

  /// comp(I) for I subset [n-1].
  static Composition from_set(IndexSet I, int n) {
    if (n < 0 || !I.subset_of(IndexSet::full(n))) throw invalid_input("set not inside [n-1]");
    std::vector<int> parts;
    int prev = 0;
    for (int i : I.elements()) {
      parts.push_back(i - prev);
      prev = i;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(parts);
  }

  /// "(2,1,3)" or "2,1,3"; "()" is empty.
  static Composition parse(std::string_view s) {
    std::vector<int> parts;
    std::string tok;
    for (char c : s) {
      if (c >= '0' && c <= '9') tok += c;
      else if (c == ',' || c == ')' ) {
        if (!tok.empty()) parts.push_back(std::stoi(tok));
        tok.clear();
      } else if (c != '(' && c != ' ') {
        throw invalid_input("bad character in composition '" + std::string(s) + "'");
      }
    }
    if (!tok.empty()) parts.push_back(std::stoi(tok));
    return Composition(parts);
  }

  std::vector<int> const& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  /// Partial sums, excluding the total.
  IndexSet set() const {
    IndexSet I;
    int s = 0;
    for (std::size_t k = 0; k + 1 < parts_.size(); ++k) {
      s += parts_[k];
      I.insert(s);
    }
    return I;
  }

  Composition complement() const { return from_set(set().complement(size()), size()); }
  Composition reverse() const { return Composition({parts_.rbegin(), parts_.rend()}); }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
    return s + ")";
  }

  friend auto operator<=>(Composition const&, Composition const&) = default;
  friend bool operator==(Composition const&, Composition const&) = default;

 private:
  std::vector<int> parts_;
};

/// Sequence of compositions; written a1 * a2 * ... in text form.
class GeneralizedComposition {
 public:
  GeneralizedComposition() = default;
  explicit GeneralizedComposition(std::vector<Composition> blocks) : blocks_(std::move(blocks)) {
    for (auto const& b : blocks_)
      if (b.length() == 0) throw invalid_input("generalized composition blocks must be nonempty");
  }

  /// "(2,1)*(3)" ; the star may also be written as the unicode star operator.
  static GeneralizedComposition parse(std::string_view s) {
    std::string t(s);
    std::string star = "⋆";
    for (auto pos = t.find(star); pos != std::string::npos; pos = t.find(star)) t.replace(pos, star.size(), "*");
    std::vector<Composition> blocks;
    std::size_t start = 0;
    while (start <= t.size()) {
      auto end = t.find('*', start);
      if (end == std::string::npos) end = t.size();
      blocks.push_back(Composition::parse(t.substr(start, end - start)));
      start = end + 1;
    }
    return GeneralizedComposition(blocks);
  }

  std::vector<Composition> const& blocks() const { return blocks_; }
  int size() const {
    int s = 0;
    for (auto const& b : blocks_) s += b.size();
    return s;
  }

  /// Concatenation of all blocks.
  Composition bullet() const {
    std::vector<int> parts;
    for (auto const& b : blocks_) parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(parts);
  }

  /// Concatenation fusing the last part of each block with the first part of the next.
  Composition odot() const {
    std::vector<int> parts;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      auto const& p = blocks_[k].parts();
      std::size_t first = 0;
      if (k > 0) {
        parts.back() += p[0];
        first = 1;
      }
      parts.insert(parts.end(), p.begin() + static_cast<long>(first), p.end());
    }
    return Composition(parts);
  }

  GeneralizedComposition complement() const {
    std::vector<Composition> out;
    for (auto const& b : blocks_) out.push_back(b.complement());
    return GeneralizedComposition(out);
  }

  /// Reverses the block order and each block.
  GeneralizedComposition reverse() const {
    std::vector<Composition> out;
    for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) out.push_back(it->reverse());
    return GeneralizedComposition(out);
  }

  /// Every way of joining consecutive blocks by concatenation or fusion; 2^(k-1) results.
  std::vector<Composition> bracket() const {
    std::vector<Composition> out;
    if (blocks_.empty()) return {Composition()};
    std::size_t joins = blocks_.size() - 1;
    for (std::uint32_t mask = 0; mask < (1U << joins); ++mask) {
      std::vector<int> parts = blocks_[0].parts();
      for (std::size_t k = 1; k < blocks_.size(); ++k) {
        auto const& p = blocks_[k].parts();
        std::size_t first = 0;
        if ((mask >> (k - 1)) & 1U) {
          parts.back() += p[0];
          first = 1;
        }
        parts.insert(parts.end(), p.begin() + static_cast<long>(first), p.end());
      }
      out.emplace_back(parts);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < blocks_.size(); ++k) s += (k ? "*" : "") + blocks_[k].str();
    return s.empty() ? "()" : s;
  }

  friend auto operator<=>(GeneralizedComposition const&, GeneralizedComposition const&) = default;
  friend bool operator==(GeneralizedComposition const&, GeneralizedComposition const&) = default;

 private:
  std::vector<Composition> blocks_;
};

struct Cell {
  int row;
  int col;
  friend auto operator<=>(Cell const&, Cell const&) = default;
};

/// Skew diagram lambda/mu, always stored in basic form: no empty rows or columns.
/// Rows and columns are 0-based; row 0 is the top row.
class SkewShape {
 public:
  SkewShape() = default;

  SkewShape(std::vector<int> lambda, std::vector<int> mu) {
    check_partition(lambda, "lambda");
    check_partition(mu, "mu");
    if (mu.size() > lambda.size()) throw invalid_input("mu has more rows than lambda");
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      int m = r < mu.size() ? mu[r] : 0;
      if (m > lambda[r]) throw invalid_input("mu not contained in lambda");
      for (int c = m; c < lambda[r]; ++c) cells.push_back({static_cast<int>(r), c});
    }
    *this = from_cells(cells);
  }

  /// Compresses empty rows and columns away; throws unless the cells form a skew diagram.
  static SkewShape from_cells(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    std::set<int> rows, cols;
    for (auto const& c : cells) {
      rows.insert(c.row);
      cols.insert(c.col);
    }
    std::map<int, int> rmap, cmap;
    for (int r : rows) rmap.emplace(r, static_cast<int>(rmap.size()));
    for (int c : cols) cmap.emplace(c, static_cast<int>(cmap.size()));
    SkewShape s;
    int R = static_cast<int>(rows.size());
    s.lambda_.assign(R, 0);
    s.mu_.assign(R, -1);
    std::vector<int> count(R, 0);
    for (auto& c : cells) {
      c = {rmap[c.row], cmap[c.col]};
      s.lambda_[c.row] = std::max(s.lambda_[c.row], c.col + 1);
      if (s.mu_[c.row] < 0 || c.col < s.mu_[c.row]) s.mu_[c.row] = c.col;
      ++count[c.row];
    }
    for (int r = 0; r < R; ++r) {
      if (count[r] != s.lambda_[r] - s.mu_[r]) throw invalid_input("cells do not form a skew diagram (gap in a row)");
      if (r > 0 && (s.lambda_[r] > s.lambda_[r - 1] || s.mu_[r] > s.mu_[r - 1]))
        throw invalid_input("cells do not form a skew diagram");
    }
    while (!s.mu_.empty() && s.mu_.back() == 0) s.mu_.pop_back();
    s.cells_ = cells;
    return s;
  }

  /// "(4,2,1)/(2,1)" or "(3,2)".
  static SkewShape parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto lam = Composition::parse(s.substr(0, slash)).parts();
    std::vector<int> mu;
    if (slash != std::string::npos) {
      std::string rest = s.substr(slash + 1);
      std::vector<int> parts;
      std::string tok;
      for (char c : rest) {
        if (c >= '0' && c <= '9') tok += c;
        else if (c == ',' || c == ')') {
          if (!tok.empty()) parts.push_back(std::stoi(tok));
          tok.clear();
        } else if (c != '(' && c != ' ') {
          throw invalid_input("bad character in shape '" + s + "'");
        }
      }
      if (!tok.empty()) parts.push_back(std::stoi(tok));
      while (!parts.empty() && parts.back() == 0) parts.pop_back();
      mu = parts;
    }
    return SkewShape(lam, mu);
  }

  std::vector<int> const& lambda() const { return lambda_; }
  std::vector<int> const& mu() const { return mu_; }
  int mu_at(int r) const { return r < static_cast<int>(mu_.size()) ? mu_[r] : 0; }
  int size() const { return static_cast<int>(cells_.size()); }
  int rows() const { return static_cast<int>(lambda_.size()); }
  int cols() const { return lambda_.empty() ? 0 : lambda_[0]; }
  bool is_straight() const { return mu_.empty(); }

  /// Row-major cell list.
  std::vector<Cell> const& cells() const { return cells_; }
  bool contains(int r, int c) const { return r >= 0 && r < rows() && c >= mu_at(r) && c < lambda_[r]; }
  /// Index of a cell in cells(), or -1.
  int cell_index(int r, int c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), Cell{r, c});
    return (it != cells_.end() && *it == Cell{r, c}) ? static_cast<int>(it - cells_.begin()) : -1;
  }

  /// Connected components, top to bottom.
  std::vector<SkewShape> components() const {
    std::vector<SkewShape> out;
    std::vector<Cell> cur;
    for (int r = 0; r < rows(); ++r) {
      if (r > 0 && !(mu_at(r - 1) < lambda_[r])) {
        out.push_back(from_cells(cur));
        cur.clear();
      }
      for (int c = mu_at(r); c < lambda_[r]; ++c) cur.push_back({r, c});
    }
    if (!cur.empty()) out.push_back(from_cells(cur));
    return out;
  }

  bool is_connected() const { return components().size() <= 1; }

  /// No 2x2 square of cells.
  bool is_ribbon() const {
    for (auto const& c : cells_)
      if (contains(c.row + 1, c.col) && contains(c.row, c.col + 1) && contains(c.row + 1, c.col + 1)) return false;
    return true;
  }

  /// Some two consecutive connected components are both ribbons.
  bool contains_disconnected_ribbon() const {
    auto comps = components();
    for (std::size_t k = 0; k + 1 < comps.size(); ++k)
      if (comps[k].is_ribbon() && comps[k + 1].is_ribbon()) return true;
    return false;
  }

  SkewShape transpose() const {
    std::vector<Cell> cells;
    for (auto const& c : cells_) cells.push_back({c.col, c.row});
    return from_cells(cells);
  }

  SkewShape rotate180() const {
    std::vector<Cell> cells;
    for (auto const& c : cells_) cells.push_back({rows() - 1 - c.row, cols() - 1 - c.col});
    return from_cells(cells);
  }

  /// b placed below-left of a, separated by an empty rows(a) x cols(b) rectangle.
  friend SkewShape star(SkewShape const& a, SkewShape const& b) {
    std::vector<Cell> cells;
    for (auto const& c : a.cells_) cells.push_back({c.row, c.col + b.cols()});
    for (auto const& c : b.cells_) cells.push_back({c.row + a.rows(), c.col});
    return from_cells(cells);
  }

  /// Row lengths of each connected component, components top to bottom.
  GeneralizedComposition balproj() const {
    std::vector<Composition> blocks;
    for (auto const& comp : components()) {
      std::vector<int> parts;
      for (int r = 0; r < comp.rows(); ++r) parts.push_back(comp.lambda_[r] - comp.mu_at(r));
      blocks.emplace_back(parts);
    }
    return GeneralizedComposition(blocks);
  }

  GeneralizedComposition balinj() const { return transpose().balproj().complement().reverse(); }

  std::string str() const {
    auto fmt = [](std::vector<int> const& v) {
      std::string s = "(";
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
      return s + ")";
    };
    return mu_.empty() ? fmt(lambda_) : fmt(lambda_) + "/" + fmt(mu_);
  }

  friend auto operator<=>(SkewShape const& a, SkewShape const& b) {
    if (auto c = a.lambda_ <=> b.lambda_; c != 0) return c;
    return a.mu_ <=> b.mu_;
  }
  friend bool operator==(SkewShape const& a, SkewShape const& b) { return a.lambda_ == b.lambda_ && a.mu_ == b.mu_; }

 private:
  static void check_partition(std::vector<int> const& p, char const* what) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] < 0) throw invalid_input(std::string(what) + " has a negative part");
      if (k > 0 && p[k] > p[k - 1]) throw invalid_input(std::string(what) + " is not weakly decreasing");
    }
  }

  std::vector<int> lambda_;
  std::vector<int> mu_;
  std::vector<Cell> cells_;
};

/// Partitions of n in decreasing lexicographic order.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Every basic skew diagram with n cells, sorted.
inline std::vector<SkewShape> skew_shapes(int n) {
  if (n < 0 || n > kMaxN) throw invalid_input("shape size out of range");
  // A basic diagram with n cells is a star of connected pieces, so grow it piece by piece.
  std::set<SkewShape> out;
  if (n == 0) return {SkewShape()};
  // Connected pieces, grown upward from a bottom row starting in column 0; each row above
  // starts weakly right and ends weakly right of the row below and overlaps it.
  std::vector<std::vector<SkewShape>> connected(n + 1);
  std::vector<std::pair<int, int>> rows_up;
  auto grow = [&](auto&& self, int used) -> void {
    std::vector<Cell> cells;
    int R = static_cast<int>(rows_up.size());
    for (int k = 0; k < R; ++k)
      for (int c = rows_up[k].first; c < rows_up[k].second; ++c) cells.push_back({R - 1 - k, c});
    connected[used].push_back(SkewShape::from_cells(cells));
    auto [a0, b0] = rows_up.back();
    for (int a = a0; a < b0; ++a)
      for (int b = std::max(b0, a + 1); used + (b - a) <= n; ++b) {
        rows_up.emplace_back(a, b);
        self(self, used + (b - a));
        rows_up.pop_back();
      }
  };
  for (int len = 1; len <= n; ++len) {
    rows_up.assign(1, {0, len});
    grow(grow, len);
  }
  auto rec = [&](auto&& self, SkewShape const& acc, int rest) -> void {
    if (rest == 0) {
      out.insert(acc);
      return;
    }
    for (int k = 1; k <= rest; ++k)
      for (auto const& piece : connected[k]) self(self, acc.size() == 0 ? piece : star(acc, piece), rest - k);
  };
  rec(rec, SkewShape(), n);
  return {out.begin(), out.end()};
}

}  // namespace hecke0
