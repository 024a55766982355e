#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "linalg.hpp"
#include "permutation.hpp"
#include "poset.hpp"
#include "qsym.hpp"
#include "shape.hpp"
#include "tableau.hpp"

namespace hecke0 {

inline constexpr int kDefaultCapDim = 200;

/// Finite-dimensional right-acting-free representation of the 0-Hecke algebra H_n(0):
/// action[i-1] is the matrix of pi_i, whose column b is the image of basis vector b.
struct HeckeModule {
  int n = 0;
  int dim = 0;
  std::vector<Matrix> action;
  std::vector<std::string> labels;
  /// Permutation labels of the basis, when the basis is a set of permutations.
  std::vector<Permutation> perms;

  Matrix const& pi(int i) const { return action.at(i - 1); }
};

/// Multiset of simple modules F_alpha, keyed by alpha.
using SimpleMultiset = std::map<Composition, int>;

inline void check_cap(int dim, int cap_dim) {
  if (dim > cap_dim)
    throw invalid_input("module dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap_dim));
}

/// First violated defining relation of H_n(0), or nullopt.
inline std::optional<std::string> violated_relation(HeckeModule const& M) {
  for (int i = 1; i < M.n; ++i) {
    auto const& A = M.pi(i);
    if (!(A * A == A)) return "pi_" + std::to_string(i) + "^2 = pi_" + std::to_string(i);
  }
  for (int i = 1; i + 1 < M.n; ++i) {
    auto const& A = M.pi(i);
    auto const& B = M.pi(i + 1);
    if (!(A * B * A == B * A * B))
      return "pi_" + std::to_string(i) + " pi_" + std::to_string(i + 1) + " pi_" + std::to_string(i) + " = pi_" +
             std::to_string(i + 1) + " pi_" + std::to_string(i) + " pi_" + std::to_string(i + 1);
  }
  for (int i = 1; i < M.n; ++i)
    for (int j = i + 2; j < M.n; ++j)
      if (!(M.pi(i) * M.pi(j) == M.pi(j) * M.pi(i)))
        return "pi_" + std::to_string(i) + " pi_" + std::to_string(j) + " = pi_" + std::to_string(j) + " pi_" +
               std::to_string(i);
  return std::nullopt;
}

/// Span of a set of permutations with pi_i gamma = gamma for i in Des_L(gamma),
/// s_i gamma when that lies in the set, and 0 otherwise. Does not check the relations.
inline HeckeModule permutation_span_module(std::vector<Permutation> basis, int cap_dim = kDefaultCapDim) {
  if (basis.empty()) throw invalid_input("module basis must be nonempty");
  std::sort(basis.begin(), basis.end(), length_lex_less);
  if (std::adjacent_find(basis.begin(), basis.end()) != basis.end()) throw invalid_input("repeated basis element");
  int n = basis.front().size();
  for (auto const& g : basis)
    if (g.size() != n) throw invalid_input("basis permutations have different ranks");
  int d = static_cast<int>(basis.size());
  check_cap(d, cap_dim);
  std::unordered_map<Permutation, int, PermutationHash> index;
  for (int b = 0; b < d; ++b) index.emplace(basis[b], b);
  HeckeModule M{n, d, {}, {}, basis};
  for (int i = 1; i < n; ++i) {
    Matrix A(d, d);
    for (int b = 0; b < d; ++b) {
      if (descents(basis[b], Side::left).contains(i)) {
        A(b, b) = 1;
      } else if (auto it = index.find(basis[b].left_mul(i)); it != index.end()) {
        A(it->second, b) = 1;
      }
    }
    M.action.push_back(std::move(A));
  }
  for (auto const& g : basis) M.labels.push_back(g.str());
  return M;
}

/// B(sigma, rho): the module on [sigma, rho]_L.
inline HeckeModule interval_module(Permutation const& bottom, Permutation const& top, int cap_dim = kDefaultCapDim) {
  return permutation_span_module(weak_interval(bottom, top, Side::left).elements, cap_dim);
}

/// Span of an arbitrary set with the same rule; rejects sets violating a relation.
inline HeckeModule subset_module(std::vector<Permutation> const& basis, int cap_dim = kDefaultCapDim) {
  auto M = permutation_span_module(basis, cap_dim);
  if (auto bad = violated_relation(M)) throw invalid_input("set does not carry an H_n(0)-action: fails " + *bad);
  return M;
}

/// M_P: the span of Sigma_L(P).
inline HeckeModule poset_module(LabeledPoset const& P, int cap_dim = kDefaultCapDim) {
  return permutation_span_module(linear_extensions(P, Side::left), cap_dim);
}

/// X_{lambda/mu} on standard tableaux: pi_i fixes T when i is strictly left of i+1,
/// kills T when they share a column, and swaps them otherwise.
inline HeckeModule tableau_module(SkewShape const& s, int cap_dim = kDefaultCapDim) {
  auto syt = enumerate_syt(s);
  int d = static_cast<int>(syt.size());
  check_cap(d, cap_dim);
  int n = s.size();
  std::map<std::vector<int>, int> index;
  for (int b = 0; b < d; ++b) index.emplace(syt[b].entries(), b);
  HeckeModule M{n, d, {}, {}, {}};
  for (int i = 1; i < n; ++i) {
    Matrix A(d, d);
    for (int b = 0; b < d; ++b) {
      auto const& T = syt[b];
      int ci = T.cell_of(i).col, cj = T.cell_of(i + 1).col;
      if (ci < cj) {
        A(b, b) = 1;
      } else if (ci > cj) {
        auto e = T.entries();
        for (auto& v : e) v = v == i ? i + 1 : (v == i + 1 ? i : v);
        A(index.at(e), b) = 1;
      }
    }
    M.action.push_back(std::move(A));
  }
  for (auto const& T : syt) M.labels.push_back(T.str());
  return M;
}

/// F_alpha: pi_i acts by 0 for i in set(alpha) and by 1 otherwise.
inline HeckeModule simple_module(Composition const& a) {
  HeckeModule M{a.size(), 1, {}, {"F" + a.str()}, {}};
  for (int i = 1; i < a.size(); ++i) {
    Matrix A(1, 1);
    A(0, 0) = a.set().contains(i) ? 0 : 1;
    M.action.push_back(A);
  }
  return M;
}

/// Bottom and top of the interval carrying P_alpha.
inline std::pair<Permutation, Permutation> projective_interval(GeneralizedComposition const& g) {
  int n = g.size();
  return {longest_element(n, g.bullet().complement().set()),
          Permutation::longest(n) * longest_element(n, g.odot().set())};
}

/// P_alpha = B(w_0(alpha_bullet^c), w_0 w_0(alpha_odot)).
inline HeckeModule projective(GeneralizedComposition const& g, int cap_dim = kDefaultCapDim) {
  auto [lo, hi] = projective_interval(g);
  return interval_module(lo, hi, cap_dim);
}

inline HeckeModule direct_sum(std::vector<HeckeModule> const& parts) {
  if (parts.empty()) throw invalid_input("direct sum of nothing");
  int n = parts.front().n, d = 0;
  for (auto const& p : parts) {
    if (p.n != n) throw invalid_input("direct sum of modules over different algebras");
    d += p.dim;
  }
  HeckeModule M{n, d, {}, {}, {}};
  for (int i = 1; i < n; ++i) {
    Matrix A(d, d);
    int off = 0;
    for (auto const& p : parts) {
      for (int r = 0; r < p.dim; ++r)
        for (int c = 0; c < p.dim; ++c) A(off + r, off + c) = p.pi(i)(r, c);
      off += p.dim;
    }
    M.action.push_back(std::move(A));
  }
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (auto const& l : parts[k].labels) M.labels.push_back(std::to_string(k) + ":" + l);
  return M;
}

enum class Twist { phi, chi_dual, theta_hat_dual };

inline Twist parse_twist(std::string const& s) {
  if (s == "phi") return Twist::phi;
  if (s == "chi_dual") return Twist::chi_dual;
  if (s == "theta_hat_dual") return Twist::theta_hat_dual;
  throw invalid_input("twist must be phi, chi_dual or theta_hat_dual");
}

/// phi: pi_i -> pi_{n-i}. chi_dual: dual module through the anti-automorphism fixing every pi_i.
/// theta_hat_dual: dual module through pi_i -> 1 - pi_i composed with that anti-automorphism.
inline HeckeModule twist(HeckeModule const& M, Twist kind) {
  HeckeModule T{M.n, M.dim, {}, {}, {}};
  for (int i = 1; i < M.n; ++i) {
    switch (kind) {
      case Twist::phi: T.action.push_back(M.pi(M.n - i)); break;
      case Twist::chi_dual: T.action.push_back(M.pi(i).transpose()); break;
      case Twist::theta_hat_dual: T.action.push_back((Matrix::identity(M.dim) - M.pi(i)).transpose()); break;
    }
  }
  char const* tag = kind == Twist::phi ? "phi" : (kind == Twist::chi_dual ? "chi*" : "theta*");
  for (auto const& l : M.labels) T.labels.push_back(std::string(tag) + "(" + l + ")");
  return T;
}

namespace detail {

/// Order of basis vectors in which every action matrix is upper triangular, if the
/// "b' appears in pi_i b" relation on distinct basis vectors is acyclic.
inline std::optional<std::vector<int>> triangular_order(HeckeModule const& M) {
  int d = M.dim;
  std::vector<std::vector<int>> out(d);
  std::vector<int> indeg(d, 0);
  for (auto const& A : M.action)
    for (int b = 0; b < d; ++b)
      for (int r = 0; r < d; ++r)
        if (r != b && sgn(A(r, b)) != 0) {
          out[b].push_back(r);
          ++indeg[r];
        }
  std::vector<int> order, stack;
  for (int b = d - 1; b >= 0; --b)
    if (indeg[b] == 0) stack.push_back(b);
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    order.push_back(b);
    for (int r : out[b])
      if (--indeg[r] == 0) stack.push_back(r);
  }
  if (static_cast<int>(order.size()) != d) return std::nullopt;
  return order;
}

/// Matrices of the action on the subspace spanned by the columns of `basis` (assumed invariant).
inline std::vector<Matrix> restricted_action(std::vector<Matrix> const& action, std::vector<Vector> const& basis) {
  int k = static_cast<int>(basis.size());
  if (k == 0) return std::vector<Matrix>(action.size());
  int d = static_cast<int>(basis[0].size());
  // coordinates via an invertible k x k minor of the basis matrix
  Echelon rows(k);
  std::vector<int> picked;
  for (int r = 0; r < d && rows.rank() < k; ++r) {
    Vector row(k);
    for (int j = 0; j < k; ++j) row[j] = basis[j][r];
    if (rows.add(row)) picked.push_back(r);
  }
  if (static_cast<int>(picked.size()) < k) throw invalid_input("subspace basis is not independent");
  Matrix minor(k, k);
  for (int a = 0; a < k; ++a)
    for (int j = 0; j < k; ++j) minor(a, j) = basis[j][picked[a]];
  Matrix inv = *inverse(minor);
  std::vector<Matrix> out;
  for (auto const& A : action) {
    Matrix img(k, k);
    for (int j = 0; j < k; ++j) {
      Vector v = A * basis[j];
      for (int a = 0; a < k; ++a) img(a, j) = v[picked[a]];
    }
    out.push_back(inv * img);
  }
  return out;
}

/// Matrices of the action on the quotient by an invariant subspace; the quotient basis is
/// the standard vectors at non-pivot positions of `sub`.
inline std::pair<std::vector<Matrix>, std::vector<int>> quotient_action(std::vector<Matrix> const& action,
                                                                         Echelon const& sub, int d) {
  std::vector<bool> is_pivot(d, false);
  for (int p : sub.pivots()) is_pivot[p] = true;
  std::vector<int> keep;
  for (int j = 0; j < d; ++j)
    if (!is_pivot[j]) keep.push_back(j);
  int k = static_cast<int>(keep.size());
  std::vector<Matrix> out;
  for (auto const& A : action) {
    Matrix Q(k, k);
    for (int l = 0; l < k; ++l) {
      Vector v = sub.reduce(A.column(keep[l]));
      for (int a = 0; a < k; ++a) Q(a, l) = v[keep[a]];
    }
    out.push_back(std::move(Q));
  }
  return {out, keep};
}

/// Joint eigenspaces of the action inside span(basis): pi_i acts by 0 exactly for i in the key.
/// Only eigenvalues 0 and 1 are probed, which is all an idempotent can have.
inline std::vector<std::pair<IndexSet, std::vector<Vector>>> joint_eigenspaces(std::vector<Matrix> const& action,
                                                                                 std::vector<Vector> basis) {
  std::vector<std::pair<IndexSet, std::vector<Vector>>> out;
  if (basis.empty()) return out;
  int d = static_cast<int>(basis[0].size());
  auto rec = [&](auto&& self, std::size_t i, IndexSet zeros, std::vector<Vector> const& W) -> void {
    if (W.empty()) return;
    if (i == action.size()) {
      out.emplace_back(zeros, W);
      return;
    }
    for (int eps = 0; eps <= 1; ++eps) {
      int k = static_cast<int>(W.size());
      Matrix m(d, k);
      for (int j = 0; j < k; ++j) {
        Vector v = action[i] * W[j];
        for (int r = 0; r < d; ++r) m(r, j) = v[r] - (eps ? W[j][r] : Rational(0));
      }
      std::vector<Vector> next;
      for (auto const& x : nullspace(m)) {
        Vector w(d);
        for (int j = 0; j < k; ++j)
          if (sgn(x[j]) != 0)
            for (int r = 0; r < d; ++r) w[r] += x[j] * W[j][r];
        next.push_back(std::move(w));
      }
      IndexSet z = zeros;
      if (eps == 0) z.insert(static_cast<int>(i) + 1);
      self(self, i + 1, z, next);
    }
  };
  rec(rec, 0, IndexSet(), basis);
  return out;
}

inline std::vector<Vector> standard_basis(int d) {
  std::vector<Vector> out(d, Vector(d));
  for (int j = 0; j < d; ++j) out[j][j] = 1;
  return out;
}

/// Composition factors by peeling off one simple submodule at a time.
inline SimpleMultiset composition_factors_general(int n, std::vector<Matrix> action, int d) {
  SimpleMultiset out;
  while (d > 0) {
    auto spaces = joint_eigenspaces(action, standard_basis(d));
    if (spaces.empty()) throw internal_failure("module without a simple submodule");
    auto const& [zeros, W] = spaces.front();
    ++out[Composition::from_set(zeros, n)];
    Echelon line(d);
    line.add(W.front());
    action = quotient_action(action, line, d).first;
    --d;
  }
  return out;
}

}  // namespace detail

/// Composition factors as a multiset of F_alpha.
inline SimpleMultiset composition_factors(HeckeModule const& M) {
  if (M.n <= 1) return M.dim ? SimpleMultiset{{Composition::from_set({}, M.n), M.dim}} : SimpleMultiset{};
  if (auto order = detail::triangular_order(M)) {
    SimpleMultiset out;
    for (int b : *order) {
      IndexSet zeros;
      for (int i = 1; i < M.n; ++i) {
        auto const& x = M.pi(i)(b, b);
        if (sgn(x) == 0) zeros.insert(i);
        else if (x != 1) throw internal_failure("non-idempotent diagonal entry");
      }
      ++out[Composition::from_set(zeros, M.n)];
    }
    return out;
  }
  return detail::composition_factors_general(M.n, M.action, M.dim);
}

/// Quasisymmetric characteristic: sum of F_alpha over composition factors.
inline QSym characteristic(HeckeModule const& M) {
  QSym q(M.n);
  for (auto const& [a, m] : composition_factors(M)) q.add_term(a, m);
  return q;
}

/// Smallest invariant subspace containing the given vectors.
inline Echelon submodule_closure(HeckeModule const& M, std::vector<Vector> const& gens) {
  Echelon E(M.dim);
  std::vector<Vector> queue;
  for (auto const& v : gens)
    if (E.add(v)) queue.push_back(v);
  while (!queue.empty()) {
    Vector v = std::move(queue.back());
    queue.pop_back();
    for (auto const& A : M.action) {
      Vector w = A * v;
      if (E.add(w)) queue.push_back(std::move(w));
    }
  }
  return E;
}

struct RadicalTopSocle {
  Echelon radical;
  SimpleMultiset top;
  std::vector<Vector> socle;
  SimpleMultiset socle_factors;
};

namespace detail {

/// rad M is generated by the images of the commutators [pi_i, pi_j].
inline Echelon radical_of(HeckeModule const& M) {
  std::vector<Vector> gens;
  for (int i = 1; i < M.n; ++i)
    for (int j = i + 1; j < M.n; ++j) {
      Matrix C = M.pi(i) * M.pi(j) - M.pi(j) * M.pi(i);
      for (int b = 0; b < M.dim; ++b) {
        Vector v = C.column(b);
        if (!is_zero(v)) gens.push_back(std::move(v));
      }
    }
  return submodule_closure(M, gens);
}

inline SimpleMultiset semisimple_factors(int n, std::vector<Matrix> const& action, int d) {
  SimpleMultiset out;
  int total = 0;
  for (auto const& [zeros, W] : joint_eigenspaces(action, standard_basis(d))) {
    out[Composition::from_set(zeros, n)] += static_cast<int>(W.size());
    total += static_cast<int>(W.size());
  }
  if (total != d) throw internal_failure("quotient by the radical is not semisimple");
  return out;
}

}  // namespace detail

/// Radical, top multiset, socle subspace (annihilator of the radical of the dual) and socle multiset.
inline RadicalTopSocle radical_top_socle(HeckeModule const& M) {
  RadicalTopSocle r{detail::radical_of(M), {}, {}, {}};
  if (M.n <= 1) {
    r.top = composition_factors(M);
    r.socle = detail::standard_basis(M.dim);
    r.socle_factors = r.top;
    return r;
  }
  auto [q, keep] = detail::quotient_action(M.action, r.radical, M.dim);
  r.top = detail::semisimple_factors(M.n, q, static_cast<int>(keep.size()));
  auto dual = twist(M, Twist::chi_dual);
  Echelon rad_dual = detail::radical_of(dual);
  Matrix pairing(rad_dual.rank(), M.dim);
  for (int a = 0; a < rad_dual.rank(); ++a)
    for (int j = 0; j < M.dim; ++j) pairing(a, j) = rad_dual.basis()[a][j];
  r.socle = nullspace(pairing);
  auto soc_action = detail::restricted_action(M.action, r.socle);
  r.socle_factors = detail::semisimple_factors(M.n, soc_action, static_cast<int>(r.socle.size()));
  return r;
}

/// X with X A_i = B_i X for every i (X maps M to N).
inline bool is_module_map(HeckeModule const& M, HeckeModule const& N, Matrix const& X) {
  if (M.n != N.n || X.rows() != N.dim || X.cols() != M.dim) return false;
  for (int i = 1; i < M.n; ++i)
    if (!(X * M.pi(i) == N.pi(i) * X)) return false;
  return true;
}

/// Submodule spanned by vectors, restricted to that span; nullopt if not invariant.
inline std::optional<HeckeModule> restrict_to(HeckeModule const& M, std::vector<Vector> const& vectors) {
  Echelon E(M.dim);
  std::vector<Vector> basis;
  for (auto const& v : vectors)
    if (E.add(v)) basis.push_back(v);
  for (auto const& A : M.action)
    for (auto const& v : basis)
      if (!E.contains(A * v)) return std::nullopt;
  HeckeModule S{M.n, static_cast<int>(basis.size()), detail::restricted_action(M.action, basis), {}, {}};
  for (int k = 0; k < S.dim; ++k) S.labels.push_back("v" + std::to_string(k));
  return S;
}

/// Quotient M / span(vectors); the span must be invariant.
inline HeckeModule quotient(HeckeModule const& M, std::vector<Vector> const& vectors) {
  Echelon E(M.dim);
  for (auto const& v : vectors) E.add(v);
  for (auto const& A : M.action)
    for (auto const& v : E.basis())
      if (!E.contains(A * v)) throw invalid_input("quotient by a non-invariant subspace");
  auto [q, keep] = detail::quotient_action(M.action, E, M.dim);
  HeckeModule Q{M.n, static_cast<int>(keep.size()), q, {}, {}};
  for (int k : keep) Q.labels.push_back(M.labels.empty() ? std::to_string(k) : M.labels[k]);
  for (int k : keep)
    if (!M.perms.empty()) Q.perms.push_back(M.perms[k]);
  if (static_cast<int>(Q.perms.size()) != Q.dim) Q.perms.clear();
  return Q;
}

namespace detail {

/// Generators of M with every basis vector expressed through words applied to them.
struct Presentation {
  std::vector<Vector> reached;        // independent vectors word(A) * generator
  std::vector<int> generator_of;      // which generator each reached vector comes from
  std::vector<int> parent;            // reached index it was produced from, -1 for a generator
  std::vector<int> via;               // pi index applied to the parent
  int generators = 0;
  Matrix coords;                      // column j: coordinates of e_j in the reached basis
};

inline Presentation present(HeckeModule const& M) {
  Presentation p;
  int d = M.dim;
  Echelon E(d);
  std::vector<int> order;
  if (auto t = triangular_order(M)) order = *t;
  else
    for (int b = 0; b < d; ++b) order.push_back(b);
  for (int cand : order) {
    Vector e(d);
    e[cand] = 1;
    if (E.contains(e)) continue;
    int g = p.generators++;
    std::size_t head = p.reached.size();
    E.add(e);
    p.reached.push_back(e);
    p.generator_of.push_back(g);
    p.parent.push_back(-1);
    p.via.push_back(0);
    for (; head < p.reached.size(); ++head)
      for (int i = 1; i < M.n; ++i) {
        Vector w = M.pi(i) * p.reached[head];
        if (E.add(w)) {
          p.reached.push_back(std::move(w));
          p.generator_of.push_back(g);
          p.parent.push_back(static_cast<int>(head));
          p.via.push_back(i);
        }
      }
    if (E.full()) break;
  }
  p.coords = *inverse(Matrix::from_columns(p.reached, d));
  return p;
}

}  // namespace detail

/// Basis of Hom_{H_n(0)}(M, N) as matrices of size dim N x dim M.
/// A module map is fixed by the images of generators of M; the defining relations then become
/// linear conditions on those images.
inline std::vector<Matrix> hom_space(HeckeModule const& M, HeckeModule const& N, int cap_dim = kDefaultCapDim) {
  if (M.n != N.n) throw invalid_input("modules over different algebras");
  check_cap(M.dim, cap_dim);
  check_cap(N.dim, cap_dim);
  if (M.dim == 0 || N.dim == 0) return {};
  auto P = detail::present(M);
  int dN = N.dim, U = P.generators * dN, R = static_cast<int>(P.reached.size());
  // phi[k]: image of reached vector k as a linear function of the unknown generator images
  std::vector<Matrix> phi(R);
  for (int k = 0; k < R; ++k) {
    if (P.parent[k] < 0) {
      phi[k] = Matrix(dN, U);
      for (int r = 0; r < dN; ++r) phi[k](r, P.generator_of[k] * dN + r) = 1;
    } else {
      phi[k] = N.pi(P.via[k]) * phi[P.parent[k]];
    }
  }
  std::vector<std::vector<bool>> tree(R, std::vector<bool>(M.n, false));
  for (int k = 0; k < R; ++k)
    if (P.parent[k] >= 0) tree[P.parent[k]][P.via[k]] = true;
  Echelon constraints(U);
  for (int k = 0; k < R && !constraints.full(); ++k)
    for (int i = 1; i < M.n && !constraints.full(); ++i) {
      if (tree[k][i]) continue;
      Vector c = P.coords * (M.pi(i) * P.reached[k]);
      Matrix lhs = N.pi(i) * phi[k];
      for (int l = 0; l < R; ++l)
        if (sgn(c[l]) != 0) lhs = lhs - c[l] * phi[l];
      for (int r = 0; r < dN && !constraints.full(); ++r) {
        Vector row = lhs.row(r);
        if (!is_zero(row)) constraints.add(std::move(row));
      }
    }
  Matrix cm(constraints.rank(), U);
  for (int a = 0; a < constraints.rank(); ++a)
    for (int j = 0; j < U; ++j) cm(a, j) = constraints.basis()[a][j];
  std::vector<Matrix> out;
  for (auto const& w : nullspace(cm)) {
    Matrix Y(dN, R);
    for (int k = 0; k < R; ++k) {
      Vector y = phi[k] * w;
      for (int r = 0; r < dN; ++r) Y(r, k) = y[r];
    }
    Matrix X = Y * P.coords;
    if (!is_module_map(M, N, X)) throw internal_failure("hom space element fails the module map check");
    out.push_back(std::move(X));
  }
  return out;
}

/// Module map sending basis vector b of M to a nonzero multiple of basis vector f[b] of N
/// (f injective), if the scalars can be chosen so.
inline std::optional<Matrix> monomial_map(HeckeModule const& M, HeckeModule const& N, std::vector<int> const& f,
                                          std::uint64_t seed = 0) {
  int d = M.dim;
  if (static_cast<int>(f.size()) != d || M.n != N.n) return std::nullopt;
  std::vector<int> finv(N.dim, -1);
  for (int b = 0; b < d; ++b) {
    if (f[b] < 0 || f[b] >= N.dim || finv[f[b]] >= 0) return std::nullopt;
    finv[f[b]] = b;
  }
  // (X A_i)(r, b) = A_i(finv r, b) c_{finv r}; (B_i X)(r, b) = B_i(r, f b) c_b
  Echelon E(d);
  for (int i = 1; i < M.n && !E.full(); ++i)
    for (int b = 0; b < d && !E.full(); ++b)
      for (int r = 0; r < N.dim; ++r) {
        Vector row(d);
        if (finv[r] >= 0) row[finv[r]] += M.pi(i)(finv[r], b);
        row[b] -= N.pi(i)(r, f[b]);
        if (!is_zero(row)) E.add(std::move(row));
      }
  Matrix cm(E.rank(), d);
  for (int a = 0; a < E.rank(); ++a)
    for (int j = 0; j < d; ++j) cm(a, j) = E.basis()[a][j];
  auto ns = nullspace(cm);
  if (ns.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vector c(d);
    for (std::size_t k = 0; k < ns.size(); ++k) {
      Rational t = (attempt == 0 && ns.size() == 1) ? Rational(1) : Rational(coef(rng));
      for (int j = 0; j < d; ++j) c[j] += t * ns[k][j];
    }
    if (std::all_of(c.begin(), c.end(), [](Rational const& x) { return sgn(x) != 0; })) {
      Matrix X(N.dim, d);
      for (int b = 0; b < d; ++b) X(f[b], b) = c[b];
      if (!is_module_map(M, N, X)) throw internal_failure("monomial map fails the module map check");
      return X;
    }
  }
  return std::nullopt;
}

enum class IsoVerdict { isomorphic, not_isomorphic, inconclusive };

inline char const* verdict_name(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::isomorphic: return "isomorphic";
    case IsoVerdict::not_isomorphic: return "not_isomorphic";
    default: return "inconclusive";
  }
}

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::inconclusive;
  std::string reason;
  std::optional<Matrix> witness;  // M -> N, invertible module map
};

struct Invariants {
  int n = 0;
  int dim = 0;
  QSym ch;
  SimpleMultiset top;
  SimpleMultiset socle;
  friend bool operator==(Invariants const&, Invariants const&) = default;
};

inline Invariants invariants(HeckeModule const& M) {
  auto rts = radical_top_socle(M);
  return {M.n, M.dim, characteristic(M), rts.top, rts.socle_factors};
}

namespace detail {

inline std::optional<Matrix> translation_witness(HeckeModule const& M, HeckeModule const& N) {
  if (M.perms.empty() || N.perms.empty() || M.dim != N.dim) return std::nullopt;
  // gamma -> gamma * sigma_1^{-1} * sigma_2 with sigma_k the shortest basis elements
  Permutation shift = M.perms.front().inverse() * N.perms.front();
  std::unordered_map<Permutation, int, PermutationHash> where;
  for (int b = 0; b < N.dim; ++b) where.emplace(N.perms[b], b);
  std::vector<int> f(M.dim);
  for (int b = 0; b < M.dim; ++b) {
    auto it = where.find(M.perms[b] * shift);
    if (it == where.end()) return std::nullopt;
    f[b] = it->second;
  }
  return monomial_map(M, N, f);
}

inline bool invertible(Matrix const& X) { return X.rows() == X.cols() && rank(X) == X.rows(); }

}  // namespace detail

/// Isomorphism test: invariant rejection, then a translation witness, then a seeded search
/// inside Hom(M, N). Exhaustive small-coefficient search when dim Hom <= 6.
inline IsoResult is_isomorphic(HeckeModule const& M, HeckeModule const& N, std::uint64_t seed = 0,
                               int cap_dim = kDefaultCapDim) {
  if (M.n != N.n) return {IsoVerdict::not_isomorphic, "different n", std::nullopt};
  if (M.dim != N.dim) return {IsoVerdict::not_isomorphic, "different dimension", std::nullopt};
  if (!(characteristic(M) == characteristic(N)))
    return {IsoVerdict::not_isomorphic, "different characteristic", std::nullopt};
  auto rm = radical_top_socle(M), rn = radical_top_socle(N);
  if (rm.top != rn.top) return {IsoVerdict::not_isomorphic, "different top", std::nullopt};
  if (rm.socle_factors != rn.socle_factors) return {IsoVerdict::not_isomorphic, "different socle", std::nullopt};
  if (auto w = detail::translation_witness(M, N)) return {IsoVerdict::isomorphic, "translation witness", w};
  if (M.dim > cap_dim) return {IsoVerdict::inconclusive, "dimension cap reached", std::nullopt};
  auto H = hom_space(M, N, cap_dim);
  if (H.empty()) return {IsoVerdict::not_isomorphic, "Hom(M,N) = 0", std::nullopt};
  auto HM = hom_space(M, M, cap_dim), HN = hom_space(N, N, cap_dim);
  if (HM.size() != H.size() || HN.size() != H.size())
    return {IsoVerdict::not_isomorphic, "dim Hom(M,N) differs from dim End", std::nullopt};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  auto combine = [&](std::vector<int> const& c) {
    Matrix X(N.dim, M.dim);
    for (std::size_t k = 0; k < H.size(); ++k)
      if (c[k] != 0) X = X + Rational(c[k]) * H[k];
    return X;
  };
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<int> c(H.size());
    for (auto& x : c) x = coef(rng);
    Matrix X = combine(c);
    if (detail::invertible(X)) return {IsoVerdict::isomorphic, "random element of Hom(M,N)", X};
  }
  if (H.size() <= 6) {
    std::vector<int> c(H.size(), -2);
    while (true) {
      Matrix X = combine(c);
      if (detail::invertible(X)) return {IsoVerdict::isomorphic, "exhaustive search in Hom(M,N)", X};
      std::size_t k = 0;
      while (k < c.size() && c[k] == 2) c[k++] = -2;
      if (k == c.size()) break;
      ++c[k];
    }
  }
  return {IsoVerdict::inconclusive, "no invertible element found", std::nullopt};
}

struct IndecomposableResult {
  bool indecomposable = false;
  int endomorphism_dim = 0;
  int semisimple_quotient_dim = 0;  // dim End / rad End
};

/// M is indecomposable iff End(M) is local; rad End is the kernel of the trace form.
inline IndecomposableResult is_indecomposable(HeckeModule const& M, int cap_dim = kDefaultCapDim) {
  auto E = hom_space(M, M, cap_dim);
  int k = static_cast<int>(E.size());
  Matrix G(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      Rational t = 0;
      for (int p = 0; p < M.dim; ++p)
        for (int q = 0; q < M.dim; ++q)
          if (sgn(E[a](p, q)) != 0 && sgn(E[b](q, p)) != 0) t += E[a](p, q) * E[b](q, p);
      G(a, b) = t;
      G(b, a) = t;
    }
  int r = rank(G);
  return {M.dim > 0 && r == 1, k, r};
}

struct SubmoduleReport {
  bool closed = false;
  int dim = 0;
  QSym ch;
  int socle_dim = 0;
  SimpleMultiset socle_factors;
};

/// Checks that the span of the vectors is invariant and describes it.
inline SubmoduleReport verify_submodule(HeckeModule const& M, std::vector<Vector> const& vectors) {
  SubmoduleReport rep;
  auto S = restrict_to(M, vectors);
  if (!S) return rep;
  rep.closed = true;
  rep.dim = S->dim;
  rep.ch = characteristic(*S);
  auto rts = radical_top_socle(*S);
  rep.socle_dim = static_cast<int>(rts.socle.size());
  rep.socle_factors = rts.socle_factors;
  return rep;
}

/// Vector in M given as a combination of permutation basis labels.
inline Vector vector_of(HeckeModule const& M, std::vector<std::pair<Permutation, Rational>> const& terms) {
  Vector v(M.dim);
  for (auto const& [g, c] : terms) {
    auto it = std::find(M.perms.begin(), M.perms.end(), g);
    if (it == M.perms.end()) throw invalid_input(g.str() + " is not a basis element");
    v[it - M.perms.begin()] += c;
  }
  return v;
}

struct RestrictionBlock {
  SkewShape lower;   // cells holding 1..k
  SkewShape upper;   // cells holding k+1..n
  std::vector<int> basis;
  bool verified = false;
};

/// Splits X_{lambda/mu} restricted to H_k(0) x H_{n-k}(0) by the cells holding 1..k; each block
/// is checked to be closed and to match X_lower (x) X_upper under T -> (T|<=k, T|>k - k).
inline std::vector<RestrictionBlock> restrict_blocks(SkewShape const& s, int k, int cap_dim = kDefaultCapDim) {
  int n = s.size();
  if (k < 0 || k > n) throw invalid_input("restriction index out of range");
  auto M = tableau_module(s, cap_dim);
  auto syt = enumerate_syt(s);
  std::map<std::vector<Cell>, std::vector<int>> groups;
  for (int b = 0; b < static_cast<int>(syt.size()); ++b) {
    std::vector<Cell> low;
    for (int v = 1; v <= k; ++v) low.push_back(syt[b].cell_of(v));
    std::sort(low.begin(), low.end());
    groups[low].push_back(b);
  }
  auto piece = [&](Tableau const& T, int lo, int hi) {
    std::vector<std::pair<Cell, int>> filled;
    for (int v = lo; v <= hi; ++v) filled.push_back({T.cell_of(v), v - lo + 1});
    std::sort(filled.begin(), filled.end());
    std::vector<Cell> cells;
    std::vector<int> entries;
    for (auto const& [c, v] : filled) {
      cells.push_back(c);
      entries.push_back(v);
    }
    return Tableau(SkewShape::from_cells(cells), entries);
  };
  std::vector<RestrictionBlock> out;
  for (auto const& [low, members] : groups) {
    RestrictionBlock blk;
    blk.basis = members;
    auto const& T0 = syt[members.front()];
    blk.lower = k > 0 ? piece(T0, 1, k).shape() : SkewShape();
    blk.upper = k < n ? piece(T0, k + 1, n).shape() : SkewShape();
    auto XL = tableau_module(blk.lower, cap_dim), XU = tableau_module(blk.upper, cap_dim);
    auto syt_l = enumerate_syt(blk.lower), syt_u = enumerate_syt(blk.upper);
    bool ok = static_cast<int>(members.size()) == XL.dim * XU.dim;
    std::map<int, std::pair<int, int>> coord;
    for (int b : members) {
      auto tl = k > 0 ? piece(syt[b], 1, k) : Tableau();
      auto tu = k < n ? piece(syt[b], k + 1, n) : Tableau();
      int il = static_cast<int>(std::lower_bound(syt_l.begin(), syt_l.end(), tl) - syt_l.begin());
      int iu = static_cast<int>(std::lower_bound(syt_u.begin(), syt_u.end(), tu) - syt_u.begin());
      ok = ok && il < XL.dim && iu < XU.dim && syt_l[il] == tl && syt_u[iu] == tu;
      coord[b] = {il, iu};
    }
    for (int i = 1; i < n && ok; ++i) {
      if (i == k) continue;
      for (int b : members) {
        auto [il, iu] = coord[b];
        for (int r = 0; r < M.dim; ++r) {
          auto const& x = M.pi(i)(r, b);
          bool inside = coord.count(r) > 0;
          if (!inside) {
            ok = ok && sgn(x) == 0;
            continue;
          }
          auto [rl, ru] = coord[r];
          Rational expect = i < k ? (ru == iu ? XL.pi(i)(rl, il) : Rational(0))
                                  : (rl == il ? XU.pi(i - k)(ru, iu) : Rational(0));
          ok = ok && x == expect;
        }
      }
    }
    blk.verified = ok;
    out.push_back(std::move(blk));
  }
  return out;
}

}  // namespace hecke0
