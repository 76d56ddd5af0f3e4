// linset: construct, analyze and verify F_q-linear sets of PG(1, q^n).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "linset/codec.hpp"
#include "linset/construct.hpp"
#include "linset/equiv.hpp"
#include "linset/exec.hpp"
#include "linset/suites.hpp"

using namespace linset;

namespace {

struct FieldOpts {
  int q = 0, p = 0, h = 1, n = 4;
  std::string moduli;  // tower JSON
};

struct Global {
  std::string emit = "json";
  std::string elements = "coeffs";
  int threads = -1;  // unset
  bool allow_large = false;
};

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, what + ": " + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) usage("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

// Elements may be given bare ("g^3") or as JSON.
json element_arg(const std::string& s) {
  if (s.empty() || s[0] == '[' || s[0] == '"') return parse_json(s, "element");
  return json(s);
}

TowerPtr make_tower(const FieldOpts& f, const Global& g) {
  if (!f.moduli.empty()) return tower_from_json(parse_json(f.moduli, "--field"), g.allow_large);
  TowerSpec s;
  s.n = f.n;
  s.allow_large = g.allow_large;
  if (f.q) {
    auto pp = prime_power(f.q);
    if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(f.q) + " is not a prime power");
    s.p = pp->first;
    s.h = pp->second;
  } else if (f.p) {
    s.p = f.p;
    s.h = f.h;
  } else {
    s.p = 2;
  }
  return FieldTower::make(s);
}

void add_field(CLI::App* c, FieldOpts& f) {
  c->add_option("--q", f.q, "base field order (prime power)");
  c->add_option("--p", f.p, "characteristic, with --h");
  c->add_option("--h", f.h, "q = p^h");
  c->add_option("--n", f.n, "extension degree")->capture_default_str();
  c->add_option("--field", f.moduli, "tower JSON {p, h, n, base_modulus?, ext_modulus?}");
}

// Indented key: value rendering for --emit pretty.
void render(std::ostream& o, const json& j, int depth) {
  const std::string pad(2 * depth, ' ');
  auto scalar_array = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) { return !x.is_object(); }) && a.dump().size() < 100;
  };
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) {
      if (k == "schema") continue;
      if (v.is_object() || (v.is_array() && !scalar_array(v))) {
        o << pad << k << ":\n";
        render(o, v, depth + 1);
      } else {
        o << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        o << pad << "-\n";
        render(o, v, depth + 1);
      } else {
        o << pad << "- " << v.dump() << "\n";
      }
    }
  } else {
    o << pad << j.dump() << "\n";
  }
}

void emit(const Global& g, const json& j) {
  if (g.emit == "pretty") {
    render(std::cout, j, 0);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

ElementStyle style(const Global& g) { return g.elements == "power" ? ElementStyle::Power : ElementStyle::Coeffs; }

// ---- field ----

json cmd_field(const TowerPtr& F) {
  json subs = json::array();
  for (int t : F->divisors_of_n()) subs.push_back({{"t", t}, {"size", ipow(F->q(), t)}});
  json mp = json::array();
  for (uint32_t c : F->min_poly(F->generator())) mp.push_back(F->fq_digits(c));
  return with_schema("field", {{"tower", tower_to_json(*F)},
                               {"q", F->q()},
                               {"order", F->size()},
                               {"generator", element_to_json(*F, F->generator())},
                               {"generator_min_poly", mp},
                               {"automorphisms", F->aut_order()},
                               {"subfields", subs}});
}

// ---- dual-basis ----

struct DualOpts {
  std::string basis, lambda, method = "auto";
};

json cmd_dual(const TowerPtr& F, const DualOpts& o) {
  DualPair dp;
  std::string method = o.method;
  if (!o.basis.empty()) {
    if (method == "auto") method = "cofactor";
    if (method != "cofactor") usage("--basis works with the cofactor method only");
    dp = dual_basis_cofactor(OrderedBasis(F, elements_from_json(*F, parse_json(o.basis, "--basis"))));
  } else if (!o.lambda.empty()) {
    uint32_t l = element_from_json(*F, element_arg(o.lambda));
    auto mp = F->min_poly(l);
    if (method == "auto") method = "polybasis";
    if (method == "cofactor") {
      dp = dual_basis_cofactor(OrderedBasis::power(F, l));
    } else if (method == "polybasis") {
      dp = dual_basis_polybasis(F, l);
    } else if (method == "binomial") {
      dp = dual_basis_binomial(F, l, F->fq_neg(mp[0]));
    } else if (method == "trinomial") {
      int k = 1;
      for (int i = 1; i + 1 < static_cast<int>(mp.size()); ++i)
        if (mp[i]) k = i;
      dp = dual_basis_trinomial(F, l, F->fq_neg(mp[k]), k);
    } else {
      usage("unknown method " + method);
    }
  } else {
    usage("dual-basis needs --basis or --lambda");
  }
  json j = dual_pair_to_json(dp);
  j["method"] = method;
  j["orthonormal"] = is_dual(dp.basis, dp.dual.elems());
  if (auto w = weakly_self_dual(dp)) j["weakly_self_dual"] = {{"delta", element_to_json(*F, w->delta)}, {"perm", w->perm}};
  if (!j["orthonormal"].get<bool>()) throw Error(ErrorKind::VerificationFailed, "dual basis is not orthonormal", j.dump());
  return with_schema("dual-basis", j);
}

// ---- projection ----

struct ProjOpts {
  std::string T, S, basis;
  int t = 0;
};

json cmd_projection(const TowerPtr& F, const ProjOpts& o) {
  Subspace T, S;
  if (!o.basis.empty()) {
    auto b = elements_from_json(*F, parse_json(o.basis, "--basis"));
    if (o.t < 1 || o.t >= static_cast<int>(b.size())) usage("--t must lie in [1, n)");
    T = Subspace::span(F, std::vector<uint32_t>(b.begin(), b.begin() + o.t));
    S = Subspace::span(F, std::vector<uint32_t>(b.begin() + o.t, b.end()));
  } else if (!o.T.empty() && !o.S.empty()) {
    T = Subspace::span(F, elements_from_json(*F, parse_json(o.T, "--T")));
    S = Subspace::span(F, elements_from_json(*F, parse_json(o.S, "--S")));
  } else {
    usage("projection needs --T and --S, or --basis and --t");
  }
  auto cr = graph_certificate(T, S);
  json j{{"T", subspace_to_json(T)},
         {"S", subspace_to_json(S)},
         {"poly", poly_to_json(cr.p)},
         {"display", poly_pretty(cr.p, output_style())},
         {"graph_match", cr.graph_match},
         {"spectra_match", cr.spectra_match},
         {"spectrum_U", spectrum_to_json(cr.spectrum_U)},
         {"spectrum_p", spectrum_to_json(cr.spectrum_p)},
         {"map", mat2_to_json(*F, cr.phi)}};
  if (!cr.graph_match || !cr.spectra_match)
    throw Error(ErrorKind::VerificationFailed, "(1 1; 0 1) does not carry T x S onto the graph of p", j.dump());
  return with_schema("projection", j);
}

// ---- analyze ----

struct AnalyzeOpts {
  std::string poly, subspace, from;
  bool points = false;
};

json cmd_analyze(TowerPtr F, AnalyzeOpts o) {
  json input;
  if (!o.from.empty()) {
    json prev = read_file(o.from);
    if (!prev.contains("tower") || !prev.contains("input")) usage(o.from + " is not an analyze report");
    F = tower_from_json(prev["tower"], true);
    input = prev["input"];
    o.points = prev["linear_set"].contains("points");
  } else if (!o.poly.empty()) {
    input["poly"] = o.poly == "trace" ? poly_to_json(LinPoly::trace(F)) : parse_json(o.poly, "--poly");
  } else if (!o.subspace.empty()) {
    input["subspace"] = parse_json(o.subspace, "--subspace");
  } else {
    usage("analyze needs --poly, --subspace or --from");
  }
  json j{{"tower", tower_to_json(*F)}};
  Subspace U;
  if (input.contains("poly")) {
    LinPoly f = poly_from_json(F, input["poly"]);
    input["poly"] = poly_to_json(f);
    if (f.m() != F->n()) usage("the polynomial must be over F_{q^n}");
    U = graph_space(f);
    auto sc = is_scattered(f);
    json sj{{"scattered", sc.scattered}, {"ratio_image_size", ratio_image_size(f)}};
    if (sc.witness) sj["witness"] = {{"m", element_to_json(*F, *sc.witness)}, {"kernel_dim", sc.witness_dim}};
    j["poly"] = {{"display", poly_pretty(f, output_style())}, {"q_degree", f.q_degree()}};
    j["scatteredness"] = sj;
  } else {
    U = subspace_from_json(F, input["subspace"]);
    if (U.ambient() != Ambient::Fqn2) usage("the subspace must live in F_{q^n}^2");
    input["subspace"] = subspace_to_json(U);
  }
  j["input"] = input;
  auto L = linear_set(U);
  j["linear_set"] = linear_set_to_json(L, o.points);
  if (auto cp = complementary_pair(L))
    j["complementary_pair"] = {{"P", vec2_to_json(*F, representative(*F, cp->P))},
                               {"Q", vec2_to_json(*F, representative(*F, cp->Q))},
                               {"weights", {cp->s, cp->t}}};
  auto b = check_bound_two_weight(L);
  if (b.applicable)
    j["two_weight_bound"] = {{"t", b.t}, {"s", b.s}, {"lower", b.lower}, {"upper", b.upper}, {"ok", b.ok}};
  return with_schema("analysis", j);
}

// ---- construct ----

struct ConstructOpts {
  std::string family, lambda, mu, xi, eta, f;
  int t = 0, s = 1, t1 = 0, t2 = 0;
  bool opt_in = false;
};

json cmd_construct(const TowerPtr& F, const ConstructOpts& o) {
  const int n = F->n();
  auto elem = [&](const std::string& s) { return element_from_json(*F, element_arg(s)); };
  auto lambda = [&] { return o.lambda.empty() ? first_full_degree(*F) : elem(o.lambda); };
  auto half = [&] {
    if (n % 2) usage(o.family + " needs n = 2t");
    if (o.t && o.t != n / 2) usage("t must equal n/2 here");
    return n / 2;
  };
  Construction c;
  if (o.family == "ex1") {
    int t = half();
    uint32_t xi = o.xi.empty() ? first_outside_subfield(*F, t) : elem(o.xi);
    uint32_t eta = o.eta.empty() ? xi : elem(o.eta);
    uint32_t mu = o.mu.empty() ? 0 : elem(o.mu);
    LinPoly f = o.f.empty() ? LinPoly::monomial(F, o.s, 1, t) : poly_from_json(F, parse_json(o.f, "--f"));
    c = ex1_space(f, mu, eta, xi);
    c.poly = pol2w(f, xi);
    if (mu) c.poly.reset();
  } else if (o.family == "ex2") {
    int t = half();
    Ex2Params p;
    if (o.xi.empty() && o.mu.empty()) {
      p = find_ex2_params(F, o.s);
    } else {
      p.xi = o.xi.empty() ? first_outside_subfield(*F, t) : elem(o.xi);
      p.mu = o.mu.empty() ? find_ex2_mu(F, o.s, p.xi) : elem(o.mu);
    }
    c = ex2_space(F, o.s, p.mu, p.xi);
    c.poly = ex2_poly(F, o.s, p.mu, p.xi).p;
  } else if (o.family == "minsize") {
    int t = o.t ? o.t : 1;
    uint32_t l = lambda();
    LinPoly p = minsize_poly(F, l, t);
    c = certify("minsize", graph_space(p), p, jvdv_expected(F->q(), std::min(t, n - t), std::max(t, n - t)));
    c.params = {{"lambda", l}};
  } else if (o.family == "jvdv") {
    int t1 = o.t1 ? o.t1 : 1, t2 = o.t2 ? o.t2 : n - t1;
    c = jvdv_space(F, lambda(), t1, t2);
  } else if (auto fam = catalog_from_name(o.family)) {
    c = pg1q4_catalog(F, *fam);
  } else {
    const auto& rows = table1_rows();
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Table1Row& r) { return r.name == o.family; });
    if (it == rows.end()) usage("unknown family " + o.family);
    LinPoly p = table1_instance(F, o.family, o.s, o.opt_in);
    c = certify(o.family, graph_space(p), p, {{1, theta(F->q(), n)}});
  }
  json j = construction_to_json(c);
  if (c.poly) j["display"] = poly_pretty(*c.poly, output_style());
  j["tower"] = tower_to_json(*F);
  return with_schema("construction", j);
}

// ---- equiv ----

struct EquivOpts {
  std::string T, S, T2, S2, U, U2, method = "both";
  uint64_t budget = kDefaultBudget;
};

json witness_json(const FieldTower& F, const SemilinearMap& m) { return map_to_json(F, m); }

json cmd_equiv(const TowerPtr& F, const EquivOpts& o) {
  auto span = [&](const std::string& s, const char* what) {
    return Subspace::span(F, elements_from_json(*F, parse_json(s, what)));
  };
  const bool factors = !o.T.empty() && !o.S.empty() && !o.T2.empty() && !o.S2.empty();
  Subspace U, U2, T, S, T2, S2;
  if (factors) {
    T = span(o.T, "--T"), S = span(o.S, "--S"), T2 = span(o.T2, "--T2"), S2 = span(o.S2, "--S2");
    U = product_space(T, S);
    U2 = product_space(T2, S2);
  } else if (!o.U.empty() && !o.U2.empty()) {
    if (o.method != "brute") usage("criteria need the factors --T --S --T2 --S2");
    U = subspace_from_json(F, parse_json(o.U, "--U"));
    U2 = subspace_from_json(F, parse_json(o.U2, "--U2"));
  } else {
    usage("equiv needs --T --S --T2 --S2, or --U --U2 with --method brute");
  }
  json j{{"U", subspace_to_json(U)}, {"U2", subspace_to_json(U2)}, {"method", o.method}};
  std::optional<bool> crit, brute;
  if (o.method == "criteria" || o.method == "both") {
    auto w = criteria_equivalent(S, T, S2, T2);
    json cj{{"equivalent", w.has_value()}, {"exhaustive", true}};
    if (w) {
      cj["witness"] = witness_json(*F, w->map(*F));
      cj["lambda"] = element_to_json(*F, w->lambda);
      cj["mu"] = element_to_json(*F, w->mu);
      cj["swapped"] = w->swapped;
    } else {
      cj["verdict"] = "none (complete)";
    }
    j["criteria"] = cj;
    crit = w.has_value();
  }
  if (o.method == "brute" || o.method == "both") {
    json bj;
    try {
      auto r = brute_equivalent(U, U2, o.budget);
      bj = {{"equivalent", r.witness.has_value()}, {"exhaustive", true}, {"checked", r.checked}, {"required", r.required}};
      if (r.witness) {
        bj["witness"] = witness_json(*F, *r.witness);
      } else {
        bj["verdict"] = "none (complete)";
      }
      brute = r.witness.has_value();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      bj = {{"equivalent", nullptr}, {"exhaustive", false}, {"verdict", "none within budget (truncated)"},
            {"detail", e.detail()}, {"budget", o.budget}};
    }
    j["brute"] = bj;
  }
  if (crit && brute) {
    j["agree"] = *crit == *brute;
    if (*crit != *brute) throw Error(ErrorKind::VerificationFailed, "criteria and brute force disagree", j.dump());
  }
  return with_schema("equivalence", j);
}

// ---- verify ----

struct VerifyOpts {
  std::string suite = "all";
  int samples = 0;
  uint64_t seed = 1;
};

int cmd_verify(const FieldOpts& f, const Global& g, const VerifyOpts& o) {
  if (!f.moduli.empty() || f.p) usage("verify takes --q and --n");
  SuiteParams p;
  p.q = f.q ? static_cast<uint64_t>(f.q) : 2;
  p.n = f.n;
  p.samples = o.samples;
  p.seed = o.seed;
  p.progress = [](const std::string& s) { std::cerr << "[verify] " << s << "\n"; };
  auto reports = run_suites(o.suite, p);
  json arr = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(r.to_json());
    arr.back()["seconds"] = r.seconds;
    ok = ok && r.ok();
  }
  emit(g, with_schema("verify", {{"q", p.q}, {"n", p.n}, {"seed", p.seed}, {"ok", ok}, {"suites", arr}}));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact F_q-linear sets of PG(1, q^n)"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Global g;
  app.add_option("--emit", g.emit, "json or pretty")->check(CLI::IsMember({"json", "pretty"}))->capture_default_str();
  app.add_option("--elements", g.elements, "coeffs or power")
      ->check(CLI::IsMember({"coeffs", "power"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads")->envname("LINSET_THREADS");
  app.add_flag("--allow-large", g.allow_large, "lift the desk-scale size limit");

  FieldOpts f;
  auto* field = app.add_subcommand("field", "describe the field tower");
  add_field(field, f);

  DualOpts dual;
  auto* dualc = app.add_subcommand("dual-basis", "trace-dual basis");
  add_field(dualc, f);
  dualc->add_option("--basis", dual.basis, "JSON array of n elements");
  dualc->add_option("--lambda", dual.lambda, "element generating a polynomial basis");
  dualc->add_option("--method", dual.method, "auto, cofactor, polybasis, binomial, trinomial")
      ->check(CLI::IsMember({"auto", "cofactor", "polybasis", "binomial", "trinomial"}));

  ProjOpts proj;
  auto* projc = app.add_subcommand("projection", "projection polynomial p_{T,S}");
  add_field(projc, f);
  projc->add_option("--T", proj.T, "JSON elements spanning T");
  projc->add_option("--S", proj.S, "JSON elements spanning S");
  projc->add_option("--basis", proj.basis, "ordered basis; T is the first t elements");
  projc->add_option("--t", proj.t, "dim T with --basis");

  AnalyzeOpts an;
  auto* anc = app.add_subcommand("analyze", "linear set, weights and scatteredness");
  add_field(anc, f);
  anc->add_option("--poly", an.poly, "JSON coefficient array, or 'trace'");
  anc->add_option("--subspace", an.subspace, "JSON subspace of F_{q^n}^2");
  anc->add_option("--from", an.from, "re-run an earlier analyze report");
  anc->add_flag("--points", an.points, "list every point with its weight");

  ConstructOpts co;
  auto* coc = app.add_subcommand("construct", "build and certify a family");
  add_field(coc, f);
  coc->add_option("family", co.family, "ex1, ex2, minsize, jvdv, a PG(1,q^4) family or a scattered polynomial row")
      ->required();
  coc->add_option("--t", co.t, "t (n = 2t for ex1, ex2; kernel dimension for minsize)");
  coc->add_option("--s", co.s, "Frobenius exponent")->capture_default_str();
  coc->add_option("--t1", co.t1);
  coc->add_option("--t2", co.t2);
  coc->add_option("--lambda", co.lambda);
  coc->add_option("--mu", co.mu);
  coc->add_option("--xi", co.xi);
  coc->add_option("--eta", co.eta);
  coc->add_option("--f", co.f, "q-polynomial over F_{q^t} for ex1");
  coc->add_flag("--opt-in", co.opt_in, "allow rows that are off by default");

  EquivOpts eq;
  auto* eqc = app.add_subcommand("equiv", "GammaL(2,q^n)-equivalence of two subspaces");
  add_field(eqc, f);
  eqc->add_option("--T", eq.T);
  eqc->add_option("--S", eq.S);
  eqc->add_option("--T2", eq.T2);
  eqc->add_option("--S2", eq.S2);
  eqc->add_option("--U", eq.U, "JSON subspace (brute only)");
  eqc->add_option("--U2", eq.U2, "JSON subspace (brute only)");
  eqc->add_option("--method", eq.method)->check(CLI::IsMember({"criteria", "brute", "both"}))->capture_default_str();
  eqc->add_option("--budget", eq.budget, "maximum number of candidate maps")->capture_default_str();

  VerifyOpts vo;
  auto* vc = app.add_subcommand("verify", "run property suites");
  add_field(vc, f);
  vc->add_option("--suite", vo.suite, "suite name or all")->capture_default_str();
  vc->add_option("--samples", vo.samples, "override the suite sample counts");
  vc->add_option("--seed", vo.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g.threads != -1 && g.threads < 1) usage("parallelism must be at least 1");
    if (g.threads > 0) set_threads(g.threads);
    set_output_style(style(g));
    if (vc->parsed()) return cmd_verify(f, g, vo);
    if (anc->parsed() && !an.from.empty()) {
      emit(g, cmd_analyze(nullptr, an));
      return 0;
    }
    TowerPtr F = make_tower(f, g);
    if (field->parsed()) emit(g, cmd_field(F));
    if (dualc->parsed()) emit(g, cmd_dual(F, dual));
    if (projc->parsed()) emit(g, cmd_projection(F, proj));
    if (anc->parsed()) emit(g, cmd_analyze(F, an));
    if (coc->parsed()) emit(g, cmd_construct(F, co));
    if (eqc->parsed()) emit(g, cmd_equiv(F, eq));
    return 0;
  } catch (const Error& e) {
    json w = nullptr;
    if (!e.witness().empty()) {
      try {
        w = json::parse(e.witness());
      } catch (const json::exception&) {
        w = e.witness();
      }
    }
    std::cout << with_schema("error", {{"error", error_name(e.kind())}, {"detail", e.detail()}, {"witness", w}}).dump(2)
              << "\n";
    return e.kind() == ErrorKind::VerificationFailed ? 1 : 2;
  }
}
