#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "permutation.hpp"
#include "shape.hpp"
#include "tableau.hpp"

namespace hecke0 {

/// Homogeneous quasisymmetric function of fixed degree in the fundamental basis.
/// Zero coefficients are never stored.
class QSym {
 public:
  explicit QSym(int degree = 0) : degree_(degree) {}

  static QSym F(Composition const& a) {
    QSym q(a.size());
    q.terms_[a] = 1;
    return q;
  }

  int degree() const { return degree_; }
  std::map<Composition, Rational> const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(Composition const& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(Composition const& a, Rational const& c) {
    if (a.size() != degree_) throw invalid_input("degree mismatch in quasisymmetric sum");
    auto& slot = terms_[a];
    slot += c;
    if (sgn(slot) == 0) terms_.erase(a);
  }

  QSym& operator+=(QSym const& o) {
    if (o.degree_ != degree_ && !o.is_zero()) throw invalid_input("degree mismatch in quasisymmetric sum");
    for (auto const& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  QSym& operator-=(QSym const& o) {
    if (o.degree_ != degree_ && !o.is_zero()) throw invalid_input("degree mismatch in quasisymmetric sum");
    for (auto const& [a, c] : o.terms_) add_term(a, -c);
    return *this;
  }
  friend QSym operator+(QSym a, QSym const& b) { return a += b; }
  friend QSym operator-(QSym a, QSym const& b) { return a -= b; }
  friend QSym operator*(Rational const& c, QSym a) {
    if (sgn(c) == 0) return QSym(a.degree_);
    for (auto& [k, v] : a.terms_) v *= c;
    return a;
  }
  friend bool operator==(QSym const& a, QSym const& b) { return a.degree_ == b.degree_ && a.terms_ == b.terms_; }

  /// F_a -> F_{a^c}
  QSym psi() const {
    QSym q(degree_);
    for (auto const& [a, c] : terms_) q.add_term(a.complement(), c);
    return q;
  }
  /// F_a -> F_{a^r}
  QSym rho() const {
    QSym q(degree_);
    for (auto const& [a, c] : terms_) q.add_term(a.reverse(), c);
    return q;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto const& [a, c] : terms_) {
      if (!s.empty()) s += " + ";
      if (c != 1) s += rational_str(c) + "*";
      s += "F" + a.str();
    }
    return s;
  }

 private:
  int degree_;
  std::map<Composition, Rational> terms_;
};

/// F_a * F_b via shuffles of the minimal-length words with descent sets set(a) and set(b).
inline QSym f_product(Composition const& a, Composition const& b) {
  int m = a.size(), k = b.size(), n = m + k;
  if (n > kMaxN) throw invalid_input("product degree too large");
  std::vector<int> u = longest_element(m, a.set()).word();
  std::vector<int> v = longest_element(k, b.set()).word();
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

inline QSym operator*(QSym const& x, QSym const& y) {
  QSym out(x.degree() + y.degree());
  for (auto const& [a, c] : x.terms())
    for (auto const& [b, e] : y.terms()) out += (c * e) * f_product(a, b);
  return out;
}

/// s_{lambda/mu} as the sum of F over standard tableaux by descent composition.
inline QSym schur_to_f(SkewShape const& s) {
  QSym q(s.size());
  for (auto const& T : enumerate_syt(s)) q.add_term(syt_descent_comp(T), 1);
  return q;
}

using SchurExpansion = std::map<std::vector<int>, Rational>;

/// Coefficients in the Schur basis, or nullopt when f is not symmetric.
inline std::optional<SchurExpansion> schur_expand(QSym const& f) {
  int n = f.degree();
  auto parts = partitions(n);
  std::vector<QSym> basis;
  std::map<Composition, int> row_of;
  for (auto const& lam : parts) {
    basis.push_back(schur_to_f(SkewShape(lam, {})));
    for (auto const& [a, c] : basis.back().terms()) row_of.emplace(a, 0);
  }
  for (auto const& [a, c] : f.terms()) row_of.emplace(a, 0);
  int r = 0;
  for (auto& [a, idx] : row_of) idx = r++;
  Matrix m(r, static_cast<int>(parts.size()));
  Vector rhs(r);
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (auto const& [a, c] : basis[j].terms()) m(row_of[a], static_cast<int>(j)) = c;
  for (auto const& [a, c] : f.terms()) rhs[row_of[a]] = c;
  auto x = solve(m, rhs);
  if (!x) return std::nullopt;
  SchurExpansion out;
  for (std::size_t j = 0; j < parts.size(); ++j)
    if (sgn((*x)[j]) != 0) out[parts[j]] = (*x)[j];
  return out;
}

inline std::string schur_str(SchurExpansion const& e) {
  if (e.empty()) return "0";
  std::string s;
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    if (!s.empty()) s += " + ";
    if (it->second != 1) s += rational_str(it->second) + "*";
    s += "s";
    for (std::size_t k = 0; k < it->first.size(); ++k) s += (k ? "," : "(") + std::to_string(it->first[k]);
    s += ")";
  }
  return s;
}

/// Monomial expansion in m variables: exponent vector -> coefficient.
inline std::map<std::vector<int>, Rational> to_monomials(QSym const& f, int m) {
  std::map<std::vector<int>, Rational> out;
  int n = f.degree();
  for (auto const& [a, c] : f.terms()) {
    IndexSet strict = a.set();
    std::vector<int> idx(n, 0);
    // weakly increasing sequences i_1 <= ... <= i_n in [0, m) with strict ascents at set(a)
    auto rec = [&](auto&& self, int p, int lo) -> void {
      if (p == n) {
        std::vector<int> e(m, 0);
        for (int i : idx) ++e[i];
        auto& slot = out[e];
        slot += c;
        return;
      }
      int start = p == 0 ? 0 : (strict.contains(p) ? lo + 1 : lo);
      for (int v = start; v < m; ++v) {
        idx[p] = v;
        self(self, p + 1, v);
      }
    };
    rec(rec, 0, 0);
  }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace hecke0
