#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke0 {

/// Malformed or out-of-range input supplied by a caller.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed result violated an internal invariant.
class internal_failure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Hard upper bound on the rank of any symmetric group handled.
inline constexpr int kMaxN = 12;

/// Subset of {1, ..., n-1}; bit i is set iff i belongs to the set.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> xs) {
    for (int x : xs) insert(x);
  }
  static IndexSet from(std::vector<int> const& xs) {
    IndexSet s;
    for (int x : xs) s.insert(x);
    return s;
  }
  /// {1, ..., n-1}
  static constexpr IndexSet full(int n) {
    return n <= 1 ? IndexSet() : IndexSet(((std::uint32_t(1) << n) - 1) & ~std::uint32_t(1));
  }

  constexpr bool contains(int i) const { return i >= 0 && i < 32 && ((bits_ >> i) & 1U); }
  void insert(int i) {
    if (i < 1 || i >= 32) throw invalid_input("index out of range: " + std::to_string(i));
    bits_ |= std::uint32_t(1) << i;
  }
  void erase(int i) { bits_ &= ~(std::uint32_t(1) << i); }
  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  /// Complement inside {1, ..., n-1}.
  constexpr IndexSet complement(int n) const { return IndexSet(full(n).bits_ & ~bits_); }
  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 1; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int i : elements()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }
  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

enum class Side { left, right };

inline char const* side_name(Side s) { return s == Side::left ? "L" : "R"; }

inline Side parse_side(std::string const& s) {
  if (s == "L" || s == "left") return Side::left;
  if (s == "R" || s == "right") return Side::right;
  throw invalid_input("side must be L or R, got '" + s + "'");
}

}  // namespace hecke0
