// Command-line front end: construct root systems, list Weyl groups and
// tabloids, compute polytabloids and Garnir relations, classify subsystem
// pairs, and run the self-checking suites.  Text by default, JSON with
// --json; everything is deterministic, so identical invocations produce
// byte-identical output.

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "garnir/errors.hpp"
#include "garnir/verify.hpp"

using json = nlohmann::ordered_json;
using namespace garnir;

namespace {

struct Options {
  std::string type;
  int rank = 0;
  bool json_out = false;
  std::vector<std::string> J, Jp, Jstar;
  std::string d = "e";
  std::string order_name = "bruhat";
  std::string suite;
  bool all_jstar = false;
};

// The documented spellings -Jp and -Jstar are single-dash multi-letter
// names, which the option parser does not take directly; map them onto
// their double-dash twins before parsing.
std::vector<std::string> rewrite_args(int argc, char** argv) {
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    for (const char* name : {"-Jp", "-Jstar"}) {
      std::string n(name);
      if (a == n || a.rfind(n + "=", 0) == 0) a = "-" + a;
    }
    out.push_back(a);
  }
  return out;
}

RootSystem build_system(const Options& o) {
  if (o.rank > 0) {
    if (o.type.size() != 1)
      throw std::invalid_argument("--rank goes with a bare family letter, e.g. --type A --rank 3");
    return RootSystem::build(o.type[0], o.rank);
  }
  return RootSystem::build(o.type);
}

std::vector<std::string> coeff_tokens(const RootSystem& phi, const std::vector<int>& idxs) {
  std::vector<std::string> out;
  for (int r : idxs) out.push_back(phi.coeff_str(r));
  return out;
}

std::string set_str(const RootSystem& phi, const std::vector<int>& idxs) {
  std::string s = "{";
  for (std::size_t i = 0; i < idxs.size(); ++i) s += (i ? "," : "") + phi.coeff_str(idxs[i]);
  return s + "}";
}

int run_roots(const Options& o) {
  RootSystem phi = build_system(o);
  if (o.json_out) {
    json doc;
    doc["root_system"] = phi.label();
    doc["rank"] = phi.rank();
    doc["ambient_dim"] = phi.ambient_dim();
    json arr = json::array();
    for (int i = 0; i < phi.num_positive(); ++i)
      arr.push_back({{"coeff", phi.coeff_str(i)}, {"coords", coords_str(phi.root(i))}});
    doc["positive_roots"] = arr;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::size_t width = 0;
  for (int i = 0; i < phi.num_positive(); ++i) width = std::max(width, phi.coeff_str(i).size());
  std::cout << phi.label() << ": " << phi.num_positive() << " positive roots\n";
  for (int i = 0; i < phi.num_positive(); ++i)
    std::cout << "  " << std::left << std::setw(static_cast<int>(width + 2)) << phi.coeff_str(i)
              << coords_str(phi.root(i)) << "\n";
  return 0;
}

int run_group(const Options& o) {
  RootSystem phi = build_system(o);
  WeylGroup w = WeylGroup::generate(phi);
  std::vector<int> idx(w.order());
  std::iota(idx.begin(), idx.end(), 0);
  idx = w.sorted(idx);
  if (o.json_out) {
    json doc;
    doc["root_system"] = phi.label();
    doc["order"] = w.order();
    json arr = json::array();
    for (int e : idx)
      arr.push_back({{"word", w.element(e).word_str()},
                     {"length", w.length(e)},
                     {"sign", w.sign(e)}});
    doc["elements"] = arr;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::size_t width = 1;
  for (int e : idx) width = std::max(width, w.element(e).word_str().size());
  std::cout << "W(" << phi.label() << "): order " << w.order() << "\n";
  for (int e : idx)
    std::cout << "  " << std::left << std::setw(static_cast<int>(width + 2))
              << w.element(e).word_str() << "length " << w.length(e) << "  sign "
              << (w.sign(e) < 0 ? "-" : "+") << "\n";
  return 0;
}

int run_tabloids(const Options& o) {
  RootSystem phi = build_system(o);
  WeylGroup w = WeylGroup::generate(phi);
  Subsystem psi = Subsystem::from_coeff_strings(phi, o.J);
  Subsystem psip = o.Jp.empty() ? Subsystem::empty(phi)
                                : Subsystem::from_coeff_strings(phi, o.Jp);
  TabloidSpace space(w, psi, psip);
  std::vector<Tabloid> tabs = space.all_tabloids();
  if (o.json_out) {
    json doc;
    doc["root_system"] = phi.label();
    doc["J"] = coeff_tokens(phi, psi.simple());
    doc["J_prime"] = coeff_tokens(phi, psip.simple());
    json arr = json::array();
    for (const Tabloid& t : tabs)
      arr.push_back({{"canonical_rep", t.rep().word_str()}, {"display", t.display()}});
    doc["tabloids"] = arr;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::size_t width = 1;
  for (const Tabloid& t : tabs) width = std::max(width, t.rep().word_str().size());
  std::cout << phi.label() << ", J=" << set_str(phi, psi.simple()) << ", J'="
            << set_str(phi, psip.simple()) << ": " << tabs.size() << " tabloids\n";
  for (const Tabloid& t : tabs)
    std::cout << "  " << std::left << std::setw(static_cast<int>(width + 2))
              << t.rep().word_str() << t.display() << "\n";
  return 0;
}

int run_polytabloid(const Options& o) {
  RootSystem phi = build_system(o);
  WeylGroup w = WeylGroup::generate(phi);
  SystemPair pair(w, Subsystem::from_coeff_strings(phi, o.J),
                  o.Jp.empty() ? Subsystem::empty(phi)
                               : Subsystem::from_coeff_strings(phi, o.Jp));
  Element d = w.parse_word(o.d);
  ModuleVector e = polytabloid(d, pair);
  if (o.json_out) {
    json doc;
    doc["root_system"] = phi.label();
    doc["J"] = coeff_tokens(phi, pair.psi().simple());
    doc["J_prime"] = coeff_tokens(phi, pair.psi_prime().simple());
    doc["d"] = d.word_str();
    doc["polytabloid"] = e.str();
    json arr = json::array();
    for (const auto& [pos, c] : e.terms())
      arr.push_back({{"tabloid", Tabloid(&pair.space(), pos).display()}, {"coeff", rat_str(c)}});
    doc["terms"] = arr;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << polytabloid_label(d) << " = " << e.str() << "\n";
  return 0;
}

// Everything one (pair, d, J*) relation report needs, computed once.
struct RelationOut {
  GarnirContext ctx;
  std::optional<Pairing> pairing;
  AlgebraElement g;
  std::optional<StraightenReport> sr;
};

RelationOut compute_relation(const SystemPair& pair, const Element& d, const Subsystem& js) {
  RelationOut out{make_context(pair, d, js), std::nullopt, AlgebraElement(pair.group()),
                  std::nullopt};
  out.pairing = find_pairing(out.ctx);
  out.g = garnir_element(out.ctx);
  if (out.pairing) {
    verify_annihilation(out.ctx);
    out.sr = straighten(out.ctx);
  }
  return out;
}

json garnir_terms_json(const AlgebraElement& g) {
  const WeylGroup& w = g.group();
  std::vector<int> keys;
  for (const auto& [e, c] : g.terms()) keys.push_back(e);
  keys = w.sorted(keys);
  json arr = json::array();
  for (int e : keys)
    arr.push_back({{"word", w.element(e).word_str()}, {"sign", g.coeff(e) < 0 ? -1 : 1}});
  return arr;
}

json relation_json(const RelationOut& r) {
  const SystemPair& pair = *r.ctx.pair;
  const RootSystem& phi = pair.group().roots();
  json ctx;
  ctx["root_system"] = phi.label();
  ctx["J"] = coeff_tokens(phi, pair.psi().simple());
  ctx["J_prime"] = coeff_tokens(phi, pair.psi_prime().simple());
  ctx["J_star"] = coeff_tokens(phi, r.ctx.j_star.simple());
  ctx["d"] = r.ctx.d.word_str();
  ctx["H_order"] = r.ctx.h.order();
  json creps = json::array();
  for (const Element& c : r.ctx.c) creps.push_back(c.word_str());
  ctx["C"] = creps;
  ctx["product_set_size"] = r.ctx.y.size();

  json rep;
  rep["context"] = ctx;
  rep["pairing_found"] = bool(r.pairing);
  rep["global_rho"] = nullptr;
  if (r.pairing && r.pairing->global_rho) rep["global_rho"] = r.pairing->global_rho->word_str();
  rep["garnir_element"] = garnir_terms_json(r.g);
  if (r.sr) {
    rep["annihilation_zero"] = true;
    rep["straighten_lhs"] = r.sr->lhs.str();
    rep["straighten_rhs"] = r.sr->rhs.str();
    rep["reduced_form"] = r.sr->standard_str ? json(*r.sr->standard_str)
                                             : json(r.sr->collected_str);
  } else {
    rep["annihilation_zero"] = nullptr;
    rep["straighten_lhs"] = nullptr;
    rep["straighten_rhs"] = nullptr;
    rep["reduced_form"] = nullptr;
  }
  return rep;
}

void print_relation(const RelationOut& r) {
  const SystemPair& pair = *r.ctx.pair;
  const RootSystem& phi = pair.group().roots();
  std::cout << phi.label() << ": J=" << set_str(phi, pair.psi().simple()) << ", J'="
            << set_str(phi, pair.psi_prime().simple()) << ", J*="
            << set_str(phi, r.ctx.j_star.simple()) << ", d = " << r.ctx.d.word_str() << "\n";
  std::cout << "  |H| = " << r.ctx.h.order() << ", product set size " << r.ctx.y.size() << "\n";
  std::cout << "  coset representatives:";
  for (const Element& c : r.ctx.c) std::cout << " [" << c.word_str() << "]";
  std::cout << "\n";
  std::cout << "  garnir element: " << r.g.str() << "\n";
  if (!r.pairing) {
    std::cout << "  pairing: none found; hypothesis fails, nothing asserted\n";
    return;
  }
  if (r.pairing->global_rho)
    std::cout << "  pairing: global rho = " << r.pairing->global_rho->word_str() << "\n";
  else
    std::cout << "  pairing: matched elementwise\n";
  std::cout << "  annihilation: exact zero\n";
  std::cout << "  " << polytabloid_label(r.ctx.d) << " = " << r.sr->lhs.str() << "\n";
  std::cout << "  reduced form: "
            << (r.sr->standard_str ? *r.sr->standard_str : r.sr->collected_str) << "\n";
}

int run_garnir(const Options& o) {
  if (!o.all_jstar && o.Jstar.empty())
    throw std::invalid_argument("give -Jstar or --all-jstar");
  RootSystem phi = build_system(o);
  WeylGroup w = WeylGroup::generate(phi);
  SystemPair pair(w, Subsystem::from_coeff_strings(phi, o.J),
                  Subsystem::from_coeff_strings(phi, o.Jp));
  Element d = w.parse_word(o.d);

  if (!o.all_jstar) {
    RelationOut r = compute_relation(pair, d, Subsystem::from_coeff_strings(phi, o.Jstar));
    if (o.json_out)
      std::cout << relation_json(r).dump(2) << "\n";
    else
      print_relation(r);
    return 0;
  }

  std::vector<RelationOut> admissible;
  std::size_t tried = 0;
  for (const Subsystem& js : all_subsystems(phi)) {
    ++tried;
    RelationOut r = compute_relation(pair, d, js);
    if (r.pairing) admissible.push_back(std::move(r));
  }
  if (o.json_out) {
    json arr = json::array();
    for (const RelationOut& r : admissible) arr.push_back(relation_json(r));
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  std::cout << admissible.size() << " of " << tried
            << " auxiliary systems admit a pairing\n\n";
  for (std::size_t i = 0; i < admissible.size(); ++i) {
    if (i) std::cout << "\n";
    print_relation(admissible[i]);
  }
  return 0;
}

int run_verify(const Options& o) {
  std::string label = build_system(o).label();
  std::vector<SuiteResult> results;
  if (!o.suite.empty())
    results.push_back(run_suite(o.suite, label));
  else
    results = run_all_suites(label);
  bool ok = true;
  for (const SuiteResult& r : results) ok = ok && r.passed();

  if (o.json_out) {
    json doc;
    doc["root_system"] = label;
    json arr = json::array();
    for (const SuiteResult& r : results)
      arr.push_back({{"name", r.name},
                     {"checks", r.checks},
                     {"failures", r.failures},
                     {"passed", r.passed()},
                     {"notes", json(r.notes)}});
    doc["suites"] = arr;
    doc["passed"] = ok;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const SuiteResult& r : results) {
      std::cout << std::left << std::setw(15) << r.name << std::right << std::setw(7) << r.checks
                << " checks  " << (r.passed() ? "pass" : "FAIL") << "\n";
      for (const std::string& n : r.notes) std::cout << "    " << n << "\n";
    }
    std::cout << (ok ? "all suites passed" : "verification FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int run_classify(const Options& o) {
  RootSystem phi = build_system(o);
  WeylGroup w = WeylGroup::generate(phi);
  RepOrder ord = o.order_name == "length" ? RepOrder::length : RepOrder::bruhat;

  struct Row {
    std::string J, Jp;
    json row;
  };
  std::vector<Row> rows;
  std::vector<Subsystem> subs = all_subsystems(phi);
  for (const Subsystem& a : subs)
    for (const Subsystem& b : subs) {
      bool disjoint = true;
      for (int r : b.roots())
        if (a.contains(r)) disjoint = false;
      if (!disjoint) continue;
      SystemPair p(w, a, b);
      bool useful = p.is_useful();
      bool good = useful && p.is_good();
      bool vgb = good && p.is_very_good(RepOrder::bruhat);
      bool vgl = good && p.is_very_good(RepOrder::length);
      bool vgo = ord == RepOrder::bruhat ? vgb : vgl;
      bool perfect = vgo && p.is_perfect(ord);
      int rank = specht_span(p).rank;
      json row;
      row["phi"] = phi.label();
      row["J"] = coeff_tokens(phi, a.simple());
      row["J'"] = coeff_tokens(phi, b.simple());
      row["useful"] = useful;
      row["good"] = good;
      row["very_good_bruhat"] = vgb;
      row["very_good_length"] = vgl;
      row["perfect"] = perfect;
      row["specht_rank"] = rank;
      rows.push_back({set_str(phi, a.simple()), set_str(phi, b.simple()), std::move(row)});
    }

  if (o.json_out) {
    json doc;
    doc["root_system"] = phi.label();
    doc["order"] = o.order_name;
    json arr = json::array();
    for (const Row& r : rows) arr.push_back(r.row);
    doc["pairs"] = arr;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::size_t wj = 2, wjp = 2;
  for (const Row& r : rows) {
    wj = std::max(wj, r.J.size());
    wjp = std::max(wjp, r.Jp.size());
  }
  std::cout << phi.label() << ": " << rows.size()
            << " disjoint ordered pairs (perfect judged in " << o.order_name << " order)\n";
  std::cout << "  " << std::left << std::setw(static_cast<int>(wj + 2)) << "J"
            << std::setw(static_cast<int>(wjp + 2)) << "J'"
            << "useful  good  vg.bruhat  vg.length  perfect  rank\n";
  for (const Row& r : rows) {
    auto yn = [](const json& v) { return v.get<bool>() ? "yes" : "no"; };
    std::cout << "  " << std::left << std::setw(static_cast<int>(wj + 2)) << r.J
              << std::setw(static_cast<int>(wjp + 2)) << r.Jp << std::setw(8)
              << yn(r.row["useful"]) << std::setw(6) << yn(r.row["good"]) << std::setw(11)
              << yn(r.row["very_good_bruhat"]) << std::setw(11) << yn(r.row["very_good_length"])
              << std::setw(9) << yn(r.row["perfect"]) << r.row["specht_rank"].get<int>() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Garnir relations for Specht modules of Weyl groups"};
  app.require_subcommand(1);
  Options o;

  auto add_type = [&](CLI::App* cmd) {
    cmd->add_option("--type", o.type, "Root system label (G2, A3, ...) or bare family letter")
        ->required();
    cmd->add_option("--rank", o.rank, "Rank, when --type is a bare family letter");
  };
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.json_out, "Emit JSON instead of text");
  };
  auto add_j = [&](CLI::App* cmd, bool jp_required) {
    cmd->add_option("-J,--J", o.J, "Row simple system, comma-separated coefficient strings")
        ->required()
        ->delimiter(',');
    auto* jp = cmd->add_option("--Jp", o.Jp, "Column simple system (spell -Jp or --Jp)");
    jp->delimiter(',');
    if (jp_required) jp->required();
  };

  CLI::App* roots_cmd = app.add_subcommand("roots", "List the positive roots");
  add_type(roots_cmd);
  add_json(roots_cmd);

  CLI::App* group_cmd = app.add_subcommand("group", "List the Weyl group");
  add_type(group_cmd);
  add_json(group_cmd);

  CLI::App* tab_cmd = app.add_subcommand("tabloids", "List the tabloids of a subsystem pair");
  add_type(tab_cmd);
  add_json(tab_cmd);
  add_j(tab_cmd, false);

  CLI::App* poly_cmd = app.add_subcommand("polytabloid", "Print one polytabloid");
  add_type(poly_cmd);
  add_json(poly_cmd);
  add_j(poly_cmd, false);
  poly_cmd->add_option("-d,--d", o.d, "Group element as a word (default e)");

  CLI::App* gar_cmd = app.add_subcommand("garnir", "Garnir element and straightening relation");
  add_type(gar_cmd);
  add_json(gar_cmd);
  add_j(gar_cmd, true);
  CLI::Option* jstar_opt =
      gar_cmd->add_option("--Jstar", o.Jstar, "Auxiliary simple system (spell -Jstar or --Jstar)");
  jstar_opt->delimiter(',');
  gar_cmd->add_option("-d,--d", o.d, "Distinguished column representative, as a word")
      ->required();
  CLI::Option* all_flag =
      gar_cmd->add_flag("--all-jstar", o.all_jstar, "Sweep every auxiliary subsystem");
  jstar_opt->excludes(all_flag);

  CLI::App* ver_cmd = app.add_subcommand("verify", "Run the self-checking suites");
  add_type(ver_cmd);
  add_json(ver_cmd);
  ver_cmd->add_option("--suite", o.suite, "Run a single suite by name")
      ->check(CLI::IsMember(suite_names()));

  CLI::App* cls_cmd = app.add_subcommand("classify", "Classify every disjoint subsystem pair");
  add_type(cls_cmd);
  add_json(cls_cmd);
  cls_cmd->add_option("--order", o.order_name, "Representative order judging perfection")
      ->check(CLI::IsMember({"bruhat", "length"}))
      ->capture_default_str();

  try {
    std::vector<std::string> args = rewrite_args(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(roots_cmd)) return run_roots(o);
    if (app.got_subcommand(group_cmd)) return run_group(o);
    if (app.got_subcommand(tab_cmd)) return run_tabloids(o);
    if (app.got_subcommand(poly_cmd)) return run_polytabloid(o);
    if (app.got_subcommand(gar_cmd)) return run_garnir(o);
    if (app.got_subcommand(ver_cmd)) return run_verify(o);
    if (app.got_subcommand(cls_cmd)) return run_classify(o);
  } catch (const invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
