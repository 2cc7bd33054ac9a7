#include "garnir/verify.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace garnir {

namespace {

struct Tally {
  SuiteResult* r;

  void check(bool ok, const std::string& what) {
    ++r->checks;
    if (!ok) {
      ++r->failures;
      r->notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { r->notes.push_back(s); }
};

std::vector<std::pair<Subsystem, Subsystem>> disjoint_pairs(const RootSystem& phi) {
  std::vector<std::pair<Subsystem, Subsystem>> out;
  std::vector<Subsystem> subs = all_subsystems(phi);
  for (const Subsystem& a : subs)
    for (const Subsystem& b : subs) {
      bool disjoint = true;
      for (int r : b.roots())
        if (a.contains(r)) {
          disjoint = false;
          break;
        }
      if (disjoint) out.emplace_back(a, b);
    }
  return out;
}

bool very_good_length(const SystemPair& p) {
  return p.is_useful() && p.is_good() && p.is_very_good(RepOrder::length);
}

std::string pair_tag(const SystemPair& p) {
  const RootSystem& phi = p.group().roots();
  std::string s = "J={";
  const std::vector<int>& rows = p.psi().simple();
  for (std::size_t i = 0; i < rows.size(); ++i)
    s += (i ? "," : "") + phi.coeff_str(rows[i]);
  s += "} J'={";
  const std::vector<int>& cols = p.psi_prime().simple();
  for (std::size_t i = 0; i < cols.size(); ++i)
    s += (i ? "," : "") + phi.coeff_str(cols[i]);
  return s + "}";
}

void suite_peel(const WeylGroup& w, Tally& t) {
  std::vector<Subgroup> subs;
  if (w.order() <= 24) {
    subs = all_subgroups(w);
    t.note("subgroup lattice by brute force: " + std::to_string(subs.size()) + " subgroups");
  } else {
    subs = reflection_generated_subgroups(w);
    t.note("reflection-generated subgroups only: " + std::to_string(subs.size()));
  }
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j) {
      auto [lhs, rhs] = peel_product(subs[i], subs[j]);
      t.check(lhs == rhs, "product identity for subgroup pair (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    }
}

void suite_action(const WeylGroup& w, Tally& t) {
  const RootSystem& phi = w.roots();
  for (const Subsystem& psi : all_subsystems(phi)) {
    TabloidSpace space(w, psi, Subsystem::empty(phi));
    std::vector<Tabloid> tabs = space.all_tabloids();
    for (const Tabloid& tab : tabs)
      t.check(space.act(w.identity(), tab) == tab, "identity action fixes every tabloid");
    for (std::size_t x = 0; x < w.order(); ++x)
      for (std::size_t y = 0; y < w.order(); ++y) {
        Element ex = w.element(static_cast<int>(x));
        Element ey = w.element(static_cast<int>(y));
        Element xy = ex * ey;
        for (const Tabloid& tab : tabs)
          t.check(space.act(xy, tab) == space.act(ex, space.act(ey, tab)),
                  "action is compatible with composition");
      }
    Subgroup rows = space.row_group();
    for (std::size_t x = 0; x < w.order(); ++x)
      for (int rho : rows.elements())
        t.check(space.tabloid(w.element(static_cast<int>(x))) ==
                    space.tabloid(w.element(w.compose(static_cast<int>(x), rho))),
                "row elements do not move the class");
  }
}

void suite_sign(const WeylGroup& w, Tally& t) {
  const RootSystem& phi = w.roots();
  for (const auto& [psi, psip] : disjoint_pairs(phi)) {
    SystemPair pair(w, psi, psip);
    for (std::size_t x = 0; x < w.order(); ++x) {
      Element wx = w.element(static_cast<int>(x));
      ModuleVector ew = polytabloid(wx, pair);
      std::vector<int> moved;
      for (int r : pair.space().col_roots()) moved.push_back(wx.apply(r));
      Subgroup stab = Subgroup::from_roots(w, moved);
      for (int sigma : stab.elements()) {
        ModuleVector expect = ew;
        if (w.sign(sigma) == -1) expect = -expect;
        t.check(AlgebraElement::unit(w.element(sigma)).apply(ew) == expect,
                "column reflections act by sign on " + pair_tag(pair));
      }
    }
  }
}

void suite_coset(const WeylGroup& w, Tally& t) {
  const RootSystem& phi = w.roots();
  for (const auto& [psi, psip] : disjoint_pairs(phi)) {
    SystemPair pair(w, psi, psip);
    for (std::size_t x = 0; x < w.order(); ++x) {
      Element wx = w.element(static_cast<int>(x));
      auto [d, rho] = decompose(wx, pair.psi_prime());
      ModuleVector expect = polytabloid(d, pair);
      if (rho.sign() == -1) expect = -expect;
      t.check(polytabloid(wx, pair) == expect,
              "reduction to the distinguished representative on " + pair_tag(pair));
    }
  }
}

// Shared sweep for the annihilation and rewriting suites: every length-order
// very good pair, every distinguished column representative, every auxiliary
// subsystem whose context admits a pairing.
template <typename F>
void sweep_contexts(const WeylGroup& w, Tally& t, F&& body) {
  const RootSystem& phi = w.roots();
  int contexts = 0, paired = 0;
  for (const auto& [psi, psip] : disjoint_pairs(phi)) {
    SystemPair pair(w, psi, psip);
    if (!very_good_length(pair)) continue;
    for (int d : distinguished_reps(w, pair.psi_prime()))
      for (const Subsystem& js : all_subsystems(phi)) {
        GarnirContext ctx = make_context(pair, w.element(d), js);
        ++contexts;
        auto pairing = find_pairing(ctx);
        if (!pairing) continue;
        ++paired;
        body(pair, ctx, *pairing);
      }
  }
  t.note(std::to_string(paired) + " of " + std::to_string(contexts) +
         " contexts admitted a pairing");
}

void suite_annihilation(const WeylGroup& w, Tally& t) {
  sweep_contexts(w, t, [&](const SystemPair& pair, const GarnirContext& ctx, const Pairing& p) {
    for (const auto& [v, v2] : p.partner) {
      int r = p.rho.at(v);
      t.check(ctx.moved_rows.contains(r) && w.sign(r) == -1 &&
                  w.compose(r, r) == w.identity().index() && w.compose(v, r) == v2 &&
                  p.partner.at(v2) == v && v2 != v,
              "pairing invariants on " + pair_tag(pair));
    }
    t.check(annihilation_residual(ctx).is_zero(),
            "signed auxiliary sum annihilates the polytabloid on " + pair_tag(pair));
  });
}

void suite_straightening(const WeylGroup& w, Tally& t) {
  const RootSystem& phi = w.roots();
  sweep_contexts(w, t, [&](const SystemPair& pair, const GarnirContext& ctx, const Pairing&) {
    try {
      StraightenReport rep = straighten(ctx);
      t.check(rep.lhs == rep.rhs, "both sides agree on " + pair_tag(pair));
      ModuleVector rebuilt(pair.space());
      bool reps_ok = true;
      for (const auto& [e, coef] : rep.collected) {
        for (int j : pair.psi_prime().simple())
          if (!phi.is_positive(w.element(e).apply(j))) reps_ok = false;
        ModuleVector part = polytabloid(w.element(e), pair);
        part *= coef;
        rebuilt += part;
      }
      t.check(reps_ok, "collected terms sit at distinguished representatives on " +
                           pair_tag(pair));
      t.check(rebuilt == rep.rhs, "collected form rebuilds the right side on " + pair_tag(pair));
      if (rep.standard) {
        ModuleVector std_rebuilt(pair.space());
        for (const auto& [e, coef] : *rep.standard) {
          ModuleVector part = polytabloid(w.element(e), pair);
          part *= coef;
          std_rebuilt += part;
        }
        t.check(std_rebuilt == rep.rhs,
                "standard form rebuilds the right side on " + pair_tag(pair));
      }
    } catch (const std::exception& e) {
      t.check(false, std::string("rewriting threw: ") + e.what());
    }
  });
}

void suite_structure(const WeylGroup& w, Tally& t) {
  const RootSystem& phi = w.roots();
  static const std::map<std::string, std::size_t> orders = {
      {"A1", 2},  {"A2", 6},  {"A3", 24}, {"A4", 120}, {"B2", 8},   {"B3", 48},  {"B4", 384},
      {"C2", 8},  {"C3", 48}, {"C4", 384}, {"D2", 4},  {"D3", 24},  {"D4", 192}, {"G2", 12}};
  auto it = orders.find(phi.label());
  if (it != orders.end())
    t.check(w.order() == it->second, "group order matches the classification");

  // The longest element: unique at maximal length, an involution, and a
  // bijection from positive onto negative roots.
  int w0 = 0;
  for (std::size_t x = 1; x < w.order(); ++x)
    if (w.length(static_cast<int>(x)) > w.length(w0)) w0 = static_cast<int>(x);
  int at_max = 0;
  for (std::size_t x = 0; x < w.order(); ++x)
    if (w.length(static_cast<int>(x)) == w.length(w0)) ++at_max;
  t.check(at_max == 1, "unique longest element");
  t.check(w.compose(w0, w0) == w.identity().index(), "longest element is an involution");
  bool flips = true;
  for (int r = 0; r < phi.num_positive(); ++r)
    if (phi.is_positive(w.element(w0).apply(r))) flips = false;
  t.check(flips, "longest element sends every positive root to a negative root");

  for (const Subsystem& psi : all_subsystems(phi)) {
    std::vector<int> reps = distinguished_reps(w, psi);
    Subgroup sub = Subgroup::from_roots(w, psi.simple());
    t.check(reps.size() * sub.order() == w.order(),
            "representative count times subgroup order is the group order");
    std::vector<int> covered(w.order(), 0);
    for (int d : reps)
      for (int rho : sub.elements()) ++covered[w.compose(d, rho)];
    bool once = true;
    for (std::size_t x = 0; x < w.order(); ++x)
      if (covered[x] != 1) once = false;
    t.check(once, "cosets of the reflection subgroup cover the group exactly once");
  }
}

void suite_example(const WeylGroup& w, Tally& t) {
  const RootSystem& phi = w.roots();
  if (phi.label() != "G2") {
    t.note("worked example is specific to G2; nothing to do for " + phi.label());
    return;
  }

  SystemPair pair(w, Subsystem::from_coeff_strings(phi, {"10", "32"}),
                  Subsystem::from_coeff_strings(phi, {"11"}));
  Element d = w.parse_word("t1");
  GarnirContext ctx = make_context(pair, d, Subsystem::from_coeff_strings(phi, {"10", "21"}));

  std::vector<Tabloid> tabs = pair.space().all_tabloids();
  t.check(tabs.size() == 3, "three tabloids");
  const std::string displays[3] = {"{10,32;11}", "{11,31;10}", "{21,01;-10}"};
  for (int i = 0; i < 3; ++i) t.check(tabs[i].display() == displays[i], displays[i]);
  t.check(pair.space().make_tableau(d).display(phi) == "{-10,32;21}",
          "the moved tableau displays as {-10,32;21}");

  auto parse_all = [&](const std::vector<std::string>& words) {
    std::set<int> out;
    for (const std::string& s : words) out.insert(w.parse_word(s).index());
    return out;
  };
  std::set<int> rows_set(ctx.moved_rows.elements().begin(), ctx.moved_rows.elements().end());
  std::set<int> cols_set(ctx.moved_cols.elements().begin(), ctx.moved_cols.elements().end());
  t.check(rows_set == parse_all({"e", "t1", "t2 t1 t2 t1 t2", "t2 t1 t2 t1 t2 t1"}),
          "moved row group as listed");
  t.check(cols_set == parse_all({"e", "t1 t2 t1 t2 t1"}), "moved column group as listed");

  std::set<int> y_set(ctx.y.begin(), ctx.y.end());
  std::set<int> star_set(ctx.star.elements().begin(), ctx.star.elements().end());
  t.check(y_set == star_set, "the product set collapses onto the auxiliary group");

  t.check(ctx.c.size() == 3 && ctx.c[0].word_str() == "e" && ctx.c[1].word_str() == "t1" &&
              ctx.c[2].word_str() == "t2 t1 t2",
          "coset representatives e, t1, t2 t1 t2");
  t.check(garnir_element(ctx).str() == "e - t1 - t2 t1 t2", "the signed coset sum");

  auto pairing = find_pairing(ctx);
  t.check(pairing && pairing->global && pairing->global_rho &&
              pairing->global_rho->word_str() == "t1",
          "global pairing through t1");
  t.check(annihilation_residual(ctx).is_zero(), "annihilation");

  StraightenReport rep = straighten(ctx);
  t.check(rep.lhs == polytabloid(d, pair), "left side is the moved polytabloid");
  t.check(rep.lhs.str() == "{10,32;11} - {11,31;10}", "left side as a tabloid combination");
  t.check(rep.standard_str && *rep.standard_str == "e(J,J') - e(t2 J, t2 J')",
          "standard form");
  if (rep.standard_str)
    t.note("e(t1 J, t1 J') = " + *rep.standard_str);

  t.check(pair.common_reps().size() == 2 && pair.is_perfect(RepOrder::bruhat) &&
              pair.is_perfect(RepOrder::length) && specht_span(pair).rank == 2,
          "the pair is perfect of rank two");
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"peel",         "action",        "sign",      "coset",
          "annihilation", "straightening", "structure", "example"};
}

SuiteResult run_suite(const std::string& suite, const std::string& type_label) {
  RootSystem phi = RootSystem::build(type_label);
  WeylGroup w = WeylGroup::generate(phi);
  SuiteResult r;
  r.name = suite;
  Tally t{&r};
  if (suite == "peel")
    suite_peel(w, t);
  else if (suite == "action")
    suite_action(w, t);
  else if (suite == "sign")
    suite_sign(w, t);
  else if (suite == "coset")
    suite_coset(w, t);
  else if (suite == "annihilation")
    suite_annihilation(w, t);
  else if (suite == "straightening")
    suite_straightening(w, t);
  else if (suite == "structure")
    suite_structure(w, t);
  else if (suite == "example")
    suite_example(w, t);
  else
    throw std::invalid_argument("unknown suite: " + suite);
  return r;
}

std::vector<SuiteResult> run_all_suites(const std::string& type_label) {
  std::vector<SuiteResult> out;
  for (const std::string& name : suite_names()) out.push_back(run_suite(name, type_label));
  return out;
}

}  // namespace garnir
