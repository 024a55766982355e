// Command-line front end. Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 1 invalid input, 2 internal failure, 3 a mathematical check failed.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hecke0/equivalence.hpp"
#include "hecke0/io.hpp"
#include "hecke0/module.hpp"
#include "hecke0/poset.hpp"
#include "hecke0/verify.hpp"

using namespace hecke0;
using io::json;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitInternal = 2;
constexpr int kExitCheck = 3;

struct Globals {
  std::string format;
  std::uint64_t seed = 0;
  int cap_n = 6;
  int cap_dim = kDefaultCapDim;
};

int env_int(char const* name, int fallback) {
  char const* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (std::exception const&) {
    throw invalid_input(std::string(name) + " must be an integer");
  }
}

std::string slurp(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Inline JSON, or "@path" for a file.
json load_json(std::string const& text) {
  std::string body = !text.empty() && text[0] == '@' ? slurp(text.substr(1)) : text;
  try {
    return json::parse(body);
  } catch (json::parse_error const& e) {
    throw invalid_input(std::string("payload is not JSON: ") + e.what());
  }
}

Permutation parse_perm(std::string const& s) {
  if (!s.empty() && s[0] == '[') return io::permutation_from_json(load_json(s));
  return Permutation::parse(s);
}

SkewShape parse_shape(std::string const& s) {
  if (!s.empty() && (s[0] == '{' || s[0] == '@')) return io::shape_from_json(load_json(s));
  return SkewShape::parse(s);
}

void check_n(Globals const& g, int n, std::string const& what) {
  if (n > g.cap_n) throw invalid_input(what + " has size " + std::to_string(n) + ", above --cap-n " + std::to_string(g.cap_n));
}

/// Prints in the requested format; a format without a renderer is a usage error.
void emit(Globals const& g, json const& j, std::optional<std::string> table = {}, std::optional<std::string> dot = {}) {
  std::string f = g.format.empty() ? "json" : g.format;
  if (f == "json") std::cout << j.dump() << "\n";
  else if (f == "table") std::cout << (table ? *table : j.dump(2) + "\n");
  else if (f == "dot") {
    if (!dot) throw invalid_input("this command has no DOT rendering");
    std::cout << *dot;
  } else throw invalid_input("format must be json, dot or table");
}

std::string perm_lines(std::vector<Permutation> const& v) {
  std::string out;
  for (auto const& p : v) out += p.str() + "\n";
  return out;
}

/// Module sources: shape:S (M of the tau0 poset), xshape:S (tableau module), poset:JSON,
/// interval:B..T, subset:w,w,..., proj:G, module:JSON. JSON parts accept @file.
HeckeModule build_module(Globals const& g, std::string const& src) {
  auto colon = src.find(':');
  if (colon == std::string::npos) throw invalid_input("module source needs kind:value, got '" + src + "'");
  auto kind = src.substr(0, colon), val = src.substr(colon + 1);
  if (kind == "shape") {
    auto s = parse_shape(val);
    check_n(g, s.size(), "shape");
    return poset_module(LabeledPoset::from_tableau(canonical(s, Canonical::tau0)), g.cap_dim);
  }
  if (kind == "xshape") {
    auto s = parse_shape(val);
    check_n(g, s.size(), "shape");
    return tableau_module(s, g.cap_dim);
  }
  if (kind == "poset") {
    auto P = io::poset_from_json(load_json(val));
    check_n(g, P.size(), "poset");
    return poset_module(P, g.cap_dim);
  }
  if (kind == "interval") {
    auto dots = val.find("..");
    if (dots == std::string::npos) throw invalid_input("interval source is bottom..top");
    auto b = parse_perm(val.substr(0, dots)), t = parse_perm(val.substr(dots + 2));
    check_n(g, b.size(), "interval");
    return interval_module(b, t, g.cap_dim);
  }
  if (kind == "subset") {
    std::vector<Permutation> B;
    std::stringstream ss(val);
    for (std::string w; std::getline(ss, w, ',');) B.push_back(parse_perm(w));
    if (B.empty()) throw invalid_input("subset source is empty");
    check_n(g, B.front().size(), "subset");
    return subset_module(B, g.cap_dim);
  }
  if (kind == "proj") {
    auto gc = GeneralizedComposition::parse(val);
    check_n(g, gc.size(), "composition");
    return projective(gc, g.cap_dim);
  }
  if (kind == "module") {
    auto M = io::module_from_json(load_json(val));
    check_n(g, M.n, "module");
    check_cap(M.dim, g.cap_dim);
    return M;
  }
  throw invalid_input("unknown module source kind '" + kind + "'");
}

LabeledPoset schur_poset_source(Globals const& g, std::string const& shape, std::string const& poset) {
  if (!shape.empty() == !poset.empty()) throw invalid_input("give exactly one of --shape or --poset");
  if (!shape.empty()) {
    auto s = parse_shape(shape);
    check_n(g, s.size(), "shape");
    return LabeledPoset::from_tableau(canonical(s, Canonical::tau0));
  }
  auto P = io::poset_from_json(load_json(poset));
  check_n(g, P.size(), "poset");
  return P;
}

std::string report_table(std::vector<verify::CheckReport> const& reps) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "check" << std::setw(4) << "n" << std::setw(10) << "instances" << std::setw(10)
     << "failures" << std::setw(8) << "result" << "seconds\n";
  for (auto const& r : reps)
    os << std::setw(18) << r.check_id << std::setw(4) << r.params.n << std::setw(10) << r.instances << std::setw(10)
       << r.failures.size() << std::setw(8) << (r.pass() ? "PASS" : "FAIL") << std::fixed << std::setprecision(2)
       << r.wall_seconds << "\n";
  for (auto const& r : reps)
    for (auto const& f : r.failures) os << "  " << r.check_id << ": " << f.at("reason").get<std::string>() << "\n";
  return os.str();
}

/// JSON lines to stdout (or a table), optional JSON-lines file; exit 3 when anything failed.
int emit_reports(Globals const& g, std::vector<verify::CheckReport> const& reps, std::string const& report_path) {
  std::string lines;
  for (auto const& r : reps) lines += verify::to_json(r).dump() + "\n";
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw invalid_input("cannot write " + report_path);
    out << lines;
  }
  std::string f = g.format.empty() ? "table" : g.format;
  if (f == "json") std::cout << lines;
  else if (f == "table") std::cout << report_table(reps);
  else throw invalid_input("verify output is json or table");
  for (auto const& r : reps)
    if (!r.pass()) return kExitCheck;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"0-Hecke modules of skew shape posets: construction, queries and verification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  int exit_code = 0;
  try {
    g.cap_n = env_int("HECKE0_CAP_N", g.cap_n);
    g.cap_dim = env_int("HECKE0_CAP_DIM", g.cap_dim);
  } catch (invalid_input const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  app.add_option("--format", g.format, "json, dot or table")->check(CLI::IsMember({"json", "dot", "table"}));
  app.add_option("--seed", g.seed, "seed for randomized Hom searches and sampling");
  app.add_option("--cap-n", g.cap_n, "largest n accepted (default from HECKE0_CAP_N, else 6)")->check(CLI::Range(1, kMaxN));
  app.add_option("--cap-dim", g.cap_dim, "largest module dimension built (default from HECKE0_CAP_DIM, else 200)")
      ->check(CLI::PositiveNumber);

  // poset
  auto* poset = app.add_subcommand("poset", "labeled posets");
  poset->require_subcommand(1);
  std::string poset_in;
  std::vector<std::function<void()>> actions;
  auto poset_cmd = [&](char const* name, char const* help, std::function<void(LabeledPoset const&)> f) {
    auto* c = poset->add_subcommand(name, help);
    c->add_option("--poset", poset_in, "poset JSON {\"n\",\"covers\"} or @file")->required();
    c->callback([&, f] {
      auto P = io::poset_from_json(load_json(poset_in));
      check_n(g, P.size(), "poset");
      f(P);
    });
  };
  poset_cmd("check-regular", "regularity and whether Sigma_L(P) is a left interval", [&](LabeledPoset const& P) {
    bool reg = is_regular(P), iv = is_weak_interval(linear_extensions(P, Side::left), Side::left);
    emit(g, {{"regular", reg}, {"left_interval", iv}},
         std::string("regular ") + (reg ? "yes" : "no") + "\nleft interval " + (iv ? "yes" : "no") + "\n", io::poset_dot(P));
  });
  poset_cmd("linexts", "Sigma_L(P) in length-lex order", [&](LabeledPoset const& P) {
    auto ext = linear_extensions(P, Side::left);
    json j = json::array();
    for (auto const& w : ext) j.push_back(io::to_json(w));
    emit(g, j, perm_lines(ext));
  });
  poset_cmd("tau", "the Schur labeling with poset(tau) = P, if any", [&](LabeledPoset const& P) {
    auto t = schur_recognize(P);
    if (!t) {
      emit(g, {{"tau", nullptr}}, std::string("not Schur labeled\n"));
      return;
    }
    emit(g, {{"tau", io::to_json(*t)}, {"shape", t->shape().str()}, {"distinguished", t->is_distinguished()}},
         t->str() + "\nshape " + t->shape().str() + (t->is_distinguished() ? ", distinguished\n" : "\n"));
  });
  poset_cmd("kp", "K_P in the fundamental basis", [&](LabeledPoset const& P) {
    auto q = kp(P);
    emit(g, io::to_json(q), q.str() + "\n");
  });

  // interval
  auto* interval = app.add_subcommand("interval", "weak order intervals");
  interval->require_subcommand(1);
  std::string bottom, top, side = "left";
  auto interval_opts = [&](CLI::App* c) {
    c->add_option("--bottom", bottom, "lower end")->required();
    c->add_option("--top", top, "upper end")->required();
  };
  auto* icompute = interval->add_subcommand("compute", "elements and colored covers");
  interval_opts(icompute);
  icompute->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  icompute->callback([&] {
    auto b = parse_perm(bottom);
    check_n(g, b.size(), "interval");
    auto iv = weak_interval(b, parse_perm(top), parse_side(side));
    emit(g, io::to_json(iv), perm_lines(iv.elements), io::interval_dot(iv));
  });
  auto* iclass = interval->add_subcommand("class", "descent-preserving equivalence class of a left interval");
  interval_opts(iclass);
  iclass->callback([&] {
    auto b = parse_perm(bottom);
    check_n(g, b.size(), "interval");
    auto d = equivalence_class(b, parse_perm(top));
    std::string t = "xi " + d.xi.str() + "\nsize " + std::to_string(d.class_size) + "\nmin [" + d.min.bottom.str() + ", " +
                    d.min.top.str() + "]_R\nmax [" + d.max.bottom.str() + ", " + d.max.top.str() + "]_R\n";
    emit(g, io::to_json(d), t);
  });
  auto* idot = interval->add_subcommand("dot", "Hasse diagram with s_i edge labels");
  interval_opts(idot);
  idot->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  idot->callback([&] {
    auto b = parse_perm(bottom);
    check_n(g, b.size(), "interval");
    std::cout << io::interval_dot(weak_interval(b, parse_perm(top), parse_side(side)));
  });

  // module
  auto* module = app.add_subcommand("module", "0-Hecke modules");
  module->require_subcommand(1);
  std::vector<std::string> sources;
  std::string mshape, mposet;
  auto one_source = [&](CLI::App* c) {
    c->add_option("--source", sources, "shape:S, xshape:S, poset:J, interval:B..T, subset:w,..., proj:G, module:J")->expected(1);
    c->add_option("--shape", mshape, "shorthand for shape:S");
  };
  auto the_module = [&] {
    if (!mshape.empty()) sources.insert(sources.begin(), "shape:" + mshape);
    if (sources.size() != 1) throw invalid_input("give exactly one module source");
    return build_module(g, sources.front());
  };
  auto* mbuild = module->add_subcommand("build", "action matrices");
  one_source(mbuild);
  mbuild->callback([&] {
    auto M = the_module();
    std::string t = "n " + std::to_string(M.n) + ", dim " + std::to_string(M.dim) + "\n";
    for (int i = 1; i < M.n; ++i) {
      t += "pi_" + std::to_string(i) + ":\n";
      for (int r = 0; r < M.dim; ++r) {
        for (int c = 0; c < M.dim; ++c) t += " " + rational_str(M.pi(i)(r, c));
        t += "\n";
      }
    }
    emit(g, io::to_json(M), t, io::module_dot(M));
  });
  auto* mch = module->add_subcommand("ch", "quasisymmetric characteristic and Schur expansion");
  one_source(mch);
  mch->callback([&] {
    auto q = characteristic(the_module());
    auto e = schur_expand(q);
    emit(g, {{"ch", io::to_json(q)}, {"schur", e ? io::schur_json(*e) : json(nullptr)}},
         q.str() + "\n" + (e ? schur_str(*e) : std::string("not symmetric")) + "\n");
  });
  auto cover_hull = [&](bool cover) {
    auto* c = module->add_subcommand(cover ? "cover" : "hull", cover ? "projective cover of M_P" : "injective hull of M_P");
    c->add_option("--shape", mshape, "skew shape; uses the tau0 poset");
    c->add_option("--poset", mposet, "regular Schur labeled poset JSON");
    c->callback([&, cover] {
      auto r = proj_cover_inj_hull(schur_poset_source(g, mshape, mposet), g.cap_dim);
      bool ok = cover ? r.cover_ok : r.hull_ok;
      auto idx = cover ? r.proj : r.inj;
      json j{{"tau", io::to_json(r.tau)}, {cover ? "proj" : "inj", io::to_json(idx)}, {"map", io::to_json(cover ? r.cover : r.hull)},
             {"verified", ok}};
      if (!ok) j["failure"] = r.failure;
      emit(g, j, std::string(cover ? "P_" : "P_") + idx.str() + (ok ? " verified\n" : " FAILED: " + r.failure + "\n"));
      if (!ok) exit_code = kExitCheck;
    });
  };
  cover_hull(true);
  cover_hull(false);
  auto* miso = module->add_subcommand("iso", "isomorphism test with witness");
  miso->add_option("--source", sources, "two module sources")->expected(2)->required();
  miso->callback([&] {
    auto M = build_module(g, sources[0]), N = build_module(g, sources[1]);
    auto r = is_isomorphic(M, N, g.seed, g.cap_dim);
    json j{{"verdict", verdict_name(r.verdict)}, {"reason", r.reason}};
    if (r.witness) j["witness"] = io::to_json(*r.witness);
    emit(g, j, verdict_name(r.verdict) + (r.reason.empty() ? "" : " (" + r.reason + ")") + "\n");
  });
  auto* mind = module->add_subcommand("indecomp", "indecomposability via End(M)");
  one_source(mind);
  mind->callback([&] {
    auto r = is_indecomposable(the_module(), g.cap_dim);
    emit(g, {{"indecomposable", r.indecomposable}, {"endomorphism_dim", r.endomorphism_dim}, {"semisimple_quotient_dim", r.semisimple_quotient_dim}},
         std::string(r.indecomposable ? "indecomposable" : "decomposable") + ", dim End " + std::to_string(r.endomorphism_dim) + "\n");
  });
  auto* mfilt = module->add_subcommand("filtration", "distinguished filtration of M_P");
  mfilt->add_option("--shape", mshape, "skew shape; uses the tau0 poset");
  mfilt->add_option("--poset", mposet, "regular Schur labeled poset JSON");
  std::string order_in;
  mfilt->add_option("--order", order_in, "JSON array of recording tableaux, dominance-compatible");
  mfilt->callback([&] {
    auto P = schur_poset_source(g, mshape, mposet);
    std::optional<std::vector<Tableau>> order;
    if (!order_in.empty()) {
      order.emplace();
      for (auto const& t : load_json(order_in)) order->push_back(io::tableau_from_json(t));
    }
    auto F = distinguished_filtration(P, order);
    std::string t;
    for (std::size_t k = 0; k < F.layers.size(); ++k)
      t += "Q " + F.order[k].str() + "  " + schur_str(F.quotient_schur[k]) + "\n";
    if (!F.closed || !F.quotients_match) t += "FAILED: " + F.failure + "\n";
    emit(g, io::to_json(F), t);
    if (!F.closed || !F.quotients_match) exit_code = kExitCheck;
  });

  // shape
  auto* shape = app.add_subcommand("shape", "skew shapes and generalized compositions");
  shape->require_subcommand(1);
  std::string shape_in, gencomp_in;
  auto* sbal = shape->add_subcommand("bal", "balproj and balinj");
  sbal->add_option("--shape", shape_in, "skew shape")->required();
  sbal->callback([&] {
    auto s = parse_shape(shape_in);
    emit(g, {{"balproj", io::to_json(s.balproj())}, {"balinj", io::to_json(s.balinj())}},
         "balproj " + s.balproj().str() + "\nbalinj " + s.balinj().str() + "\n");
  });
  auto* sbr = shape->add_subcommand("bracket", "compositions obtained by merging the blocks");
  sbr->add_option("--gencomp", gencomp_in, "generalized composition, e.g. (2)*(1,1)")->required();
  sbr->callback([&] {
    auto gc = GeneralizedComposition::parse(gencomp_in);
    json j = json::array();
    std::string t;
    for (auto const& a : gc.bracket()) {
      j.push_back(io::to_json(a));
      t += a.str() + "\n";
    }
    emit(g, j, t);
  });
  auto* spred = shape->add_subcommand("predicates", "size, components, connectivity, ribbon tests");
  spred->add_option("--shape", shape_in, "skew shape")->required();
  spred->callback([&] {
    auto s = parse_shape(shape_in);
    json j{{"shape", s.str()},
           {"size", s.size()},
           {"components", s.components().size()},
           {"connected", s.is_connected()},
           {"ribbon", s.is_ribbon()},
           {"straight", s.is_straight()},
           {"contains_disconnected_ribbon", s.contains_disconnected_ribbon()}};
    std::string t;
    for (auto const& [k, v] : j.items()) t += k + " " + v.dump() + "\n";
    emit(g, j, t);
  });

  // tableau
  auto* tab = app.add_subcommand("tableau", "tableaux, readings and insertion");
  tab->require_subcommand(1);
  std::string kind = "syt", tab_in, tau_in, perm_in;
  auto* tenum = tab->add_subcommand("enumerate", "SYT, Schur labelings or distinguished labelings of a shape");
  tenum->add_option("--shape", shape_in, "skew shape")->required();
  tenum->add_option("--kind", kind, "syt, schur or distinguished")->check(CLI::IsMember({"syt", "schur", "distinguished"}));
  tenum->callback([&] {
    auto s = parse_shape(shape_in);
    check_n(g, s.size(), "shape");
    auto ts = kind == "syt" ? enumerate_syt(s) : kind == "schur" ? schur_labelings(s) : distinguished_labelings(s);
    json j = json::array();
    std::string t;
    for (auto const& x : ts) {
      j.push_back(io::to_json(x));
      t += x.str() + "\n";
    }
    emit(g, j, t);
  });
  auto* trsk = tab->add_subcommand("rsk", "insertion and recording tableaux");
  trsk->add_option("--perm", perm_in, "permutation")->required();
  trsk->callback([&] {
    auto w = parse_perm(perm_in);
    check_n(g, w.size(), "permutation");
    auto [P, Q] = rsk(w);
    emit(g, {{"P", io::to_json(P)}, {"Q", io::to_json(Q)}}, "P " + P.str() + "\nQ " + Q.str() + "\n");
  });
  auto* trect = tab->add_subcommand("rectify", "jeu de taquin rectification");
  trect->add_option("--tableau", tab_in, "tableau rows JSON, null for skew cells")->required();
  trect->callback([&] {
    auto T = io::tableau_from_json(load_json(tab_in));
    check_n(g, T.size(), "tableau");
    auto R = rectify(T);
    emit(g, io::to_json(R), R.str() + "\n");
  });
  auto* tread = tab->add_subcommand("reading", "read_tau(T)");
  tread->add_option("--tau", tau_in, "Schur labeling rows JSON")->required();
  tread->add_option("--tableau", tab_in, "standard tableau rows JSON of the same shape")->required();
  tread->callback([&] {
    auto tau = io::tableau_from_json(load_json(tau_in)), T = io::tableau_from_json(load_json(tab_in));
    check_n(g, T.size(), "tableau");
    auto w = reading(tau, T);
    emit(g, io::to_json(w), w.str() + "\n");
  });

  // verify
  auto* ver = app.add_subcommand("verify", "verification checks");
  ver->require_subcommand(1);
  std::string check_id, level = "fast", report_path, payload_in;
  int vn = 4, sample = 0, threads = 0;
  ver->add_option("--report", report_path, "also write JSON-lines reports to this file");
  ver->add_option("--threads", threads, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  auto* vrun = ver->add_subcommand("run", "one check");
  vrun->add_option("--check", check_id, "check id; see verify list")->required();
  vrun->add_option("--n", vn, "size parameter");
  vrun->add_option("--sample", sample, "sampled S_5 intervals for equiv_classes");
  vrun->callback([&] {
    check_n(g, vn, "check");
    verify::CheckParams p{vn, g.seed, g.cap_dim, sample, threads};
    exit_code = emit_reports(g, {verify::run_check(check_id, p)}, report_path);
  });
  auto* vsuite = ver->add_subcommand("suite", "fast, full or extended suite");
  vsuite->add_option("--level", level, "fast, full or extended")->check(CLI::IsMember({"fast", "full", "extended"}));
  vsuite->callback([&] {
    verify::CheckParams base{4, g.seed, g.cap_dim, 0, threads};
    auto lv = verify::parse_level(level);
    if (lv != verify::Level::fast && g.cap_n < 6) throw invalid_input(level + " suite needs --cap-n 6");
    exit_code = emit_reports(g, verify::run_suite(lv, base), report_path);
  });
  auto* vrep = ver->add_subcommand("replay", "re-run one failure payload");
  vrep->add_option("--payload", payload_in, "failure JSON or @file")->required();
  vrep->callback([&] {
    auto payload = load_json(payload_in);
    auto rep = verify::replay(payload);
    check_n(g, rep.params.n, "check");
    exit_code = emit_reports(g, {rep}, report_path);
  });
  auto* vlist = ver->add_subcommand("list", "registered checks");
  vlist->callback([&] {
    json j = json::array();
    std::string t;
    for (auto const& c : verify::registry()) {
      j.push_back({{"id", c.id}, {"statement", c.statement}, {"max_n", c.max_n}});
      t += c.id + ": " + c.statement + "\n";
    }
    emit(g, j, t);
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  } catch (invalid_input const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (internal_failure const& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (std::exception const& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitInternal;
  }
  return exit_code;
}
