#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "equivalence.hpp"
#include "module.hpp"
#include "permutation.hpp"
#include "poset.hpp"
#include "qsym.hpp"
#include "shape.hpp"
#include "tableau.hpp"

namespace hecke0::io {

using json = nlohmann::json;

namespace detail {

template <typename F>
auto guarded(char const* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (json::exception const& e) {
    throw invalid_input(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace detail

// Permutations: 1-based one-line arrays; readers also accept compact strings.

inline json to_json(Permutation const& p) { return p.word(); }

inline Permutation permutation_from_json(json const& j) {
  if (j.is_string()) return Permutation::parse(j.get<std::string>());
  return detail::guarded("permutation", [&] { return Permutation(j.get<std::vector<int>>()); });
}

inline json to_json(WeakInterval const& iv) {
  json elems = json::array(), covers = json::array();
  for (auto const& g : iv.elements) elems.push_back(to_json(g));
  for (auto const& c : iv.covers) covers.push_back({c.from, c.to, c.color});
  return {{"side", side_name(iv.side)},
          {"bottom", to_json(iv.bottom)},
          {"top", to_json(iv.top)},
          {"elements", elems},
          {"covers", covers}};
}

/// Recomputes the interval from its ends and rejects payloads whose elements or covers disagree.
inline WeakInterval interval_from_json(json const& j) {
  return detail::guarded("interval", [&] {
    auto side = parse_side(j.at("side").get<std::string>());
    auto iv = weak_interval(permutation_from_json(j.at("bottom")), permutation_from_json(j.at("top")), side);
    if (j.contains("elements")) {
      std::vector<Permutation> given;
      for (auto const& e : j.at("elements")) given.push_back(permutation_from_json(e));
      if (given != iv.elements) throw invalid_input("interval elements do not match its ends");
    }
    if (j.contains("covers")) {
      std::vector<Cover> given;
      for (auto const& c : j.at("covers")) given.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()});
      if (given != iv.covers) throw invalid_input("interval covers do not match its ends");
    }
    return iv;
  });
}

inline json to_json(Composition const& a) { return a.parts(); }

inline json to_json(GeneralizedComposition const& g) {
  json out = json::array();
  for (auto const& b : g.blocks()) out.push_back(b.parts());
  return out;
}

inline GeneralizedComposition gencomp_from_json(json const& j) {
  return detail::guarded("generalized composition", [&] {
    std::vector<Composition> blocks;
    for (auto const& b : j) blocks.emplace_back(b.get<std::vector<int>>());
    return GeneralizedComposition(blocks);
  });
}

inline json to_json(SkewShape const& s) { return {{"lambda", s.lambda()}, {"mu", s.mu()}}; }

inline SkewShape shape_from_json(json const& j) {
  if (j.is_string()) return SkewShape::parse(j.get<std::string>());
  return detail::guarded("shape", [&] {
    auto mu = j.contains("mu") ? j.at("mu").get<std::vector<int>>() : std::vector<int>{};
    return SkewShape(j.at("lambda").get<std::vector<int>>(), mu);
  });
}

/// Rows of the diagram, null for the cells of mu.
inline json to_json(Tableau const& t) {
  json rows = json::array();
  for (auto const& r : t.rows()) {
    json row = json::array();
    for (int v : r) row.push_back(v ? json(v) : json(nullptr));
    rows.push_back(row);
  }
  return rows;
}

inline Tableau tableau_from_json(json const& j) {
  return detail::guarded("tableau", [&] {
    std::vector<std::vector<int>> rows;
    for (auto const& r : j) {
      std::vector<int> row;
      for (auto const& v : r) row.push_back(v.is_null() ? 0 : v.get<int>());
      rows.push_back(row);
    }
    return Tableau::from_rows(rows);
  });
}

inline json to_json(LabeledPoset const& P) {
  json covers = json::array();
  for (auto [a, b] : P.covers()) covers.push_back({a, b});
  return {{"n", P.size()}, {"covers", covers}};
}

inline LabeledPoset poset_from_json(json const& j) {
  return detail::guarded("poset", [&] {
    std::vector<std::pair<int, int>> rel;
    for (auto const& c : j.at("covers")) rel.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    return LabeledPoset::from_relations(j.at("n").get<int>(), rel);
  });
}

inline json to_json(QSym const& q) {
  json terms = json::array();
  for (auto const& [a, c] : q.terms()) terms.push_back({{"comp", a.parts()}, {"coef", rational_str(c)}});
  return {{"degree", q.degree()}, {"terms", terms}};
}

inline QSym qsym_from_json(json const& j) {
  return detail::guarded("quasisymmetric function", [&] {
    QSym q(j.at("degree").get<int>());
    for (auto const& t : j.at("terms"))
      q.add_term(Composition(t.at("comp").get<std::vector<int>>()), parse_rational(t.at("coef").get<std::string>()));
    return q;
  });
}

inline json schur_json(SchurExpansion const& e) {
  json out = json::array();
  for (auto const& [lam, c] : e) out.push_back({{"shape", lam}, {"coef", rational_str(c)}});
  return out;
}

inline json multiset_json(SimpleMultiset const& m) {
  json out = json::array();
  for (auto const& [a, k] : m) out.push_back({{"comp", a.parts()}, {"mult", k}});
  return out;
}

inline json to_json(Matrix const& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_str(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Matrix matrix_from_json(json const& j, int rows, int cols) {
  return detail::guarded("matrix", [&] {
    if (static_cast<int>(j.size()) != rows) throw invalid_input("matrix row count mismatch");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      if (static_cast<int>(j.at(i).size()) != cols) throw invalid_input("matrix column count mismatch");
      for (int c = 0; c < cols; ++c) {
        auto const& v = j.at(i).at(c);
        m(i, c) = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
      }
    }
    return m;
  });
}

inline json to_json(HeckeModule const& M) {
  json mats = json::array();
  for (auto const& A : M.action) mats.push_back(to_json(A));
  return {{"n", M.n}, {"dim", M.dim}, {"matrices", mats}, {"labels", M.labels}};
}

/// Rebuilds a module and re-checks the Hecke relations; labels that parse as permutations restore the basis.
inline HeckeModule module_from_json(json const& j) {
  return detail::guarded("module", [&] {
    HeckeModule M{j.at("n").get<int>(), j.at("dim").get<int>(), {}, {}, {}};
    if (M.n < 1 || M.n > kMaxN || M.dim < 0) throw invalid_input("module size out of range");
    auto const& mats = j.at("matrices");
    if (static_cast<int>(mats.size()) != M.n - 1) throw invalid_input("module needs n-1 matrices");
    for (auto const& m : mats) M.action.push_back(matrix_from_json(m, M.dim, M.dim));
    if (j.contains("labels")) M.labels = j.at("labels").get<std::vector<std::string>>();
    if (!M.labels.empty() && static_cast<int>(M.labels.size()) != M.dim) throw invalid_input("label count mismatch");
    if (auto bad = violated_relation(M)) throw invalid_input("module fails " + *bad);
    try {
      for (auto const& l : M.labels) M.perms.push_back(Permutation::parse(l));
      if (!M.perms.empty() && M.perms.front().size() != M.n) M.perms.clear();
    } catch (invalid_input const&) {
      M.perms.clear();
    }
    return M;
  });
}

inline json to_json(ClassDescriptor const& d) {
  return {{"xi", to_json(d.xi)}, {"min", to_json(d.min)}, {"max", to_json(d.max)}, {"class_size", d.class_size}};
}

inline ClassDescriptor class_from_json(json const& j) {
  return detail::guarded("class descriptor", [&] {
    ClassDescriptor d{permutation_from_json(j.at("xi")), interval_from_json(j.at("min")),
                      interval_from_json(j.at("max")), j.at("class_size").get<int>()};
    if (d.min.side != Side::right || d.max.side != Side::right) throw invalid_input("class ends must be right intervals");
    if (d.class_size != d.min.size()) throw invalid_input("class size disagrees with min(C)");
    return d;
  });
}

inline json to_json(Filtration const& F) {
  json order = json::array(), layers = json::array(), qs = json::array(), schur = json::array();
  for (auto const& Q : F.order) order.push_back(to_json(Q));
  for (auto const& layer : F.layers) {
    json l = json::array();
    for (auto const& g : layer) l.push_back(g.str());
    layers.push_back(l);
  }
  for (auto const& q : F.quotient_ch) qs.push_back(to_json(q));
  for (auto const& e : F.quotient_schur) schur.push_back(schur_json(e));
  return {{"tau", to_json(F.tau)},         {"order", order},      {"layers", layers},
          {"quotient_chars", qs},          {"quotient_schur", schur}, {"closed", F.closed},
          {"quotients_match", F.quotients_match}, {"failure", F.failure}};
}

inline Filtration filtration_from_json(json const& j) {
  return detail::guarded("filtration", [&] {
    Filtration F;
    F.tau = tableau_from_json(j.at("tau"));
    for (auto const& q : j.at("order")) F.order.push_back(tableau_from_json(q));
    for (auto const& l : j.at("layers")) {
      std::vector<Permutation> layer;
      for (auto const& g : l) layer.push_back(permutation_from_json(g));
      F.layers.push_back(layer);
    }
    for (auto const& q : j.at("quotient_chars")) F.quotient_ch.push_back(qsym_from_json(q));
    for (auto const& e : j.at("quotient_schur")) {
      SchurExpansion s;
      for (auto const& t : e) s[t.at("shape").get<std::vector<int>>()] = parse_rational(t.at("coef").get<std::string>());
      F.quotient_schur.push_back(s);
    }
    F.closed = j.at("closed").get<bool>();
    F.quotients_match = j.at("quotients_match").get<bool>();
    F.failure = j.value("failure", "");
    return F;
  });
}

// DOT output. Node ids are positions in the element list; labels carry the permutation.

inline std::string interval_dot(WeakInterval const& iv) {
  std::ostringstream os;
  os << "digraph interval {\n  rankdir=BT;\n";
  for (int k = 0; k < iv.size(); ++k) os << "  v" << k << " [label=\"" << iv.elements[k].str() << "\"];\n";
  for (auto const& c : iv.covers) os << "  v" << c.from << " -> v" << c.to << " [label=\"s" << c.color << "\"];\n";
  os << "}\n";
  return os.str();
}

/// Action digraph: loops list the pi_i fixing a basis vector, edges go to the single basis
/// vector hit or to a shared zero node; images that are not a basis vector get a "lin" node.
inline std::string module_dot(HeckeModule const& M) {
  std::ostringstream os;
  os << "digraph module {\n  rankdir=BT;\n  zero [label=\"0\", shape=plaintext];\n";
  auto label = [&](int b) { return M.labels.empty() ? std::to_string(b) : M.labels[b]; };
  for (int b = 0; b < M.dim; ++b) os << "  v" << b << " [label=\"" << label(b) << "\"];\n";
  int extra = 0;
  for (int b = 0; b < M.dim; ++b) {
    std::string loops, kills;
    std::map<int, std::string> moves;
    for (int i = 1; i < M.n; ++i) {
      Vector img = M.action[i - 1].column(b);
      std::string pi = "π_" + std::to_string(i);
      int nz = 0, where = -1;
      for (int c = 0; c < M.dim; ++c)
        if (sgn(img[c]) != 0) ++nz, where = c;
      if (nz == 0) kills += (kills.empty() ? "" : ", ") + pi;
      else if (nz == 1 && img[where] == 1 && where == b) loops += (loops.empty() ? "" : ", ") + pi;
      else if (nz == 1 && img[where] == 1) moves[where] += (moves[where].empty() ? "" : ", ") + pi;
      else {
        std::string terms;
        for (int c = 0; c < M.dim; ++c)
          if (sgn(img[c]) != 0) terms += (terms.empty() ? "" : " + ") + rational_str(img[c]) + "*" + label(c);
        os << "  lin" << extra << " [label=\"" << terms << "\", shape=box];\n";
        os << "  v" << b << " -> lin" << extra++ << " [label=\"" << pi << "\"];\n";
      }
    }
    if (!loops.empty()) os << "  v" << b << " -> v" << b << " [label=\"" << loops << "\"];\n";
    for (auto const& [c, l] : moves) os << "  v" << b << " -> v" << c << " [label=\"" << l << "\"];\n";
    if (!kills.empty()) os << "  v" << b << " -> zero [label=\"" << kills << "\", style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string poset_dot(LabeledPoset const& P) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (int i = 1; i <= P.size(); ++i) os << "  p" << i << " [label=\"" << i << "\"];\n";
  for (auto [a, b] : P.covers()) os << "  p" << a << " -> p" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hecke0::io
