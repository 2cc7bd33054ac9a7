#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "garnir/errors.hpp"
#include "garnir/garnir.hpp"

using namespace garnir;

namespace {

struct Worked {
  RootSystem phi = RootSystem::build("G2");
  WeylGroup w = WeylGroup::generate(phi);
  SystemPair pair{w, Subsystem::from_coeff_strings(phi, {"10", "32"}),
                  Subsystem::from_coeff_strings(phi, {"11"})};
  Subsystem j_star = Subsystem::from_coeff_strings(phi, {"10", "21"});
  GarnirContext ctx = make_context(pair, w.parse_word("t1"), j_star);
};

const Worked& worked() {
  static Worked f;
  return f;
}

std::set<int> parse_all(const WeylGroup& w, const std::vector<std::string>& words) {
  std::set<int> out;
  for (const std::string& s : words) out.insert(w.parse_word(s).index());
  return out;
}

std::set<int> as_set(const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("product sets") {
  const auto& f = worked();
  const WeylGroup& w = f.w;

  // U e = U, for a subgroup and for a bare element list.
  std::vector<int> idty = {w.identity().index()};
  CHECK(product_set(w, f.ctx.star.elements(), idty) == w.sorted(f.ctx.star.elements()));
  CHECK(product_set(w, {w.parse_word("t1").index()}, {w.parse_word("t2").index()}) ==
        std::vector<int>{w.parse_word("t1 t2").index()});

  // The worked example collapses: W(J*) W(dJ') = W(J*).
  CHECK(as_set(f.ctx.y) == as_set(f.ctx.star.elements()));

  // |UV| |U n V| = |U| |V| over the whole subgroup lattice.
  std::vector<Subgroup> subs = all_subgroups(w);
  CHECK(subs.size() == 16);
  for (const Subgroup& u : subs)
    for (const Subgroup& v : subs) {
      std::size_t common = Subgroup::intersection(u, v).order();
      CHECK(product_set(u, v).size() * common == u.order() * v.order());
    }
}

TEST_CASE("peel identity across whole subgroup lattices") {
  for (const std::string label : {"A2", "B2", "G2", "A3"}) {
    RootSystem phi = RootSystem::build(label);
    WeylGroup w = WeylGroup::generate(phi);
    for (const Subgroup& u : all_subgroups(w))
      for (const Subgroup& v : all_subgroups(w)) {
        auto [lhs, rhs] = peel_product(u, v);
        CHECK(lhs == rhs);
      }
  }

  const auto& f = worked();
  auto [lhs, rhs] = peel_product(f.ctx.star, f.ctx.star);
  AlgebraElement kap = kappa(f.ctx.star);
  AlgebraElement scaled = kap;
  scaled *= Rat(static_cast<long>(f.ctx.star.order()));
  CHECK(lhs == scaled);
  CHECK(rhs == scaled);

  std::vector<int> not_closed = {f.w.identity().index(), f.w.parse_word("t1").index(),
                                 f.w.parse_word("t2").index()};
  CHECK_THROWS_AS(peel_product(f.w, not_closed, not_closed), std::domain_error);
}

TEST_CASE("context assembly for the worked example") {
  const auto& f = worked();
  const WeylGroup& w = f.w;

  CHECK(f.ctx.star.order() == 6);
  CHECK(f.ctx.h.order() == 2);
  CHECK(f.ctx.c.size() == 3);
  CHECK(f.ctx.c[0].word_str() == "e");
  CHECK(f.ctx.c[1].word_str() == "t1");
  CHECK(f.ctx.c[2].word_str() == "t2 t1 t2");

  CHECK(as_set(f.ctx.moved_rows.elements()) ==
        parse_all(w, {"e", "t1", "t2 t1 t2 t1 t2", "t2 t1 t2 t1 t2 t1"}));
  CHECK(as_set(f.ctx.moved_cols.elements()) == parse_all(w, {"e", "t1 t2 t1 t2 t1"}));
  CHECK(as_set(f.ctx.h.elements()) == as_set(f.ctx.moved_cols.elements()));

  CHECK_THROWS_AS(make_context(f.pair, w.parse_word("t1 t2"), f.j_star), std::domain_error);

  RootSystem other = RootSystem::build("A2");
  WeylGroup ow = WeylGroup::generate(other);
  CHECK_THROWS_AS(make_context(f.pair, ow.parse_word("t1"), f.j_star), std::domain_error);
  CHECK_THROWS_AS(
      make_context(f.pair, w.parse_word("t1"), Subsystem::from_coeff_strings(other, {"10"})),
      std::domain_error);
}

TEST_CASE("pairing for the worked example") {
  const auto& f = worked();
  const WeylGroup& w = f.w;

  auto p = find_pairing(f.ctx);
  REQUIRE(p.has_value());
  CHECK(p->global);
  REQUIRE(p->global_rho.has_value());
  CHECK(p->global_rho->word_str() == "t1");

  for (int v : f.ctx.y) {
    REQUIRE(p->partner.count(v));
    int v2 = p->partner.at(v);
    int r = p->rho.at(v);
    CHECK(v2 != v);
    CHECK(p->partner.at(v2) == v);
    CHECK(w.compose(v, r) == v2);
    CHECK(f.ctx.moved_rows.contains(r));
    CHECK(w.compose(r, r) == w.identity().index());
    CHECK(w.sign(r) == -1);
  }
}

TEST_CASE("pairing absence") {
  const auto& f = worked();
  const WeylGroup& w = f.w;

  // Odd product set: empty columns and empty auxiliary system leave {e}.
  SystemPair no_cols(w, Subsystem::from_coeff_strings(f.phi, {"10", "32"}),
                     Subsystem::empty(f.phi));
  GarnirContext odd = make_context(no_cols, w.identity(), Subsystem::empty(f.phi));
  CHECK(odd.y.size() == 1);
  CHECK_FALSE(find_pairing(odd).has_value());

  // No sign -1 involutions when the moved row group is trivial.
  SystemPair no_rows(w, Subsystem::empty(f.phi), Subsystem::from_coeff_strings(f.phi, {"11"}));
  GarnirContext bare =
      make_context(no_rows, w.identity(), Subsystem::from_coeff_strings(f.phi, {"11"}));
  CHECK(bare.y.size() % 2 == 0);
  CHECK_FALSE(find_pairing(bare).has_value());

  // Candidates exist but none stays inside the product set.
  GarnirContext stuck = make_context(f.pair, w.parse_word("t1"), Subsystem::empty(f.phi));
  CHECK(stuck.y.size() == 2);
  CHECK_FALSE(find_pairing(stuck).has_value());
}

TEST_CASE("annihilation") {
  const auto& f = worked();
  const WeylGroup& w = f.w;

  CHECK(annihilation_residual(f.ctx).is_zero());
  CHECK(verify_annihilation(f.ctx));

  // Without a pairing the claim is not made, and the residual there
  // really is nonzero.
  SystemPair no_rows(w, Subsystem::empty(f.phi), Subsystem::from_coeff_strings(f.phi, {"11"}));
  GarnirContext bare =
      make_context(no_rows, w.identity(), Subsystem::from_coeff_strings(f.phi, {"11"}));
  CHECK_THROWS_AS(verify_annihilation(bare), precondition_error);
  CHECK_FALSE(annihilation_residual(bare).is_zero());
}

TEST_CASE("annihilation sweep over auxiliary systems") {
  const auto& f = worked();
  const WeylGroup& w = f.w;

  int found = 0;
  for (const Subsystem& js : all_subsystems(f.phi))
    for (int d : distinguished_reps(w, f.pair.psi_prime())) {
      GarnirContext ctx = make_context(f.pair, w.element(d), js);
      if (!find_pairing(ctx)) continue;
      ++found;
      CHECK(verify_annihilation(ctx));
    }
  CHECK(found > 0);
}

TEST_CASE("garnir elements") {
  const auto& f = worked();
  const WeylGroup& w = f.w;

  AlgebraElement g = garnir_element(f.ctx);
  CHECK(g.str() == "e - t1 - t2 t1 t2");
  CHECK(g.terms().size() == f.ctx.star.order() / f.ctx.h.order());
  CHECK(g.coeff(w.identity().index()) == 1);

  // H = W(J*) collapses the element to the identity.
  GarnirContext tight =
      make_context(f.pair, w.parse_word("t1"), Subsystem::from_coeff_strings(f.phi, {"21"}));
  CHECK(tight.c.size() == 1);
  CHECK(garnir_element(tight).str() == "e");
}

TEST_CASE("straightening the worked example") {
  const auto& f = worked();
  const WeylGroup& w = f.w;

  StraightenReport rep = straighten(f.ctx);
  CHECK(rep.lhs.str() == "{10,32;11} - {11,31;10}");
  CHECK(rep.lhs == rep.rhs);

  REQUIRE(rep.terms.size() == 2);
  CHECK(rep.terms[0].sigma.word_str() == "t1");
  CHECK(rep.terms[0].rep.word_str() == "e");
  CHECK(rep.terms[0].coeff == 1);
  CHECK(rep.terms[1].sigma.word_str() == "t2 t1 t2");
  CHECK(rep.terms[1].rep.word_str() == "t2 t1 t2 t1");
  CHECK(rep.terms[1].coeff == 1);

  CHECK(rep.collected_str == "e(J,J') + e(t2 t1 t2 t1 J, t2 t1 t2 t1 J')");

  REQUIRE(rep.standard.has_value());
  REQUIRE(rep.standard_str.has_value());
  CHECK(*rep.standard_str == "e(J,J') - e(t2 J, t2 J')");
  CHECK(rep.standard->at(w.identity().index()) == 1);
  CHECK(rep.standard->at(w.parse_word("t2").index()) == -1);

  // The standard form reconstructs the right side exactly.
  ModuleVector rebuilt(f.pair.space());
  for (const auto& [e, coef] : *rep.standard) {
    ModuleVector part = polytabloid(w.element(e), f.pair);
    part *= coef;
    rebuilt += part;
  }
  CHECK(rebuilt == rep.rhs);

  // No pairing, nothing to assert.
  GarnirContext stuck = make_context(f.pair, w.parse_word("t1"), Subsystem::empty(f.phi));
  CHECK_THROWS_AS(straighten(stuck), precondition_error);
}

TEST_CASE("straightening sweep over auxiliary systems") {
  const auto& f = worked();
  const WeylGroup& w = f.w;

  for (const Subsystem& js : all_subsystems(f.phi))
    for (int d : distinguished_reps(w, f.pair.psi_prime())) {
      GarnirContext ctx = make_context(f.pair, w.element(d), js);
      if (!find_pairing(ctx)) continue;
      StraightenReport rep = straighten(ctx);
      CHECK(rep.lhs == rep.rhs);

      // Every reduced term sits at a distinguished column representative,
      // and the collected form rebuilds the right side.
      ModuleVector rebuilt(f.pair.space());
      for (const auto& [e, coef] : rep.collected) {
        for (int j : f.pair.psi_prime().simple())
          CHECK(f.phi.is_positive(w.element(e).apply(j)));
        ModuleVector part = polytabloid(w.element(e), f.pair);
        part *= coef;
        rebuilt += part;
      }
      CHECK(rebuilt == rep.rhs);
    }
}

TEST_CASE("polytabloid labels") {
  const auto& f = worked();
  CHECK(polytabloid_label(f.w.identity()) == "e(J,J')");
  CHECK(polytabloid_label(f.w.parse_word("t2")) == "e(t2 J, t2 J')");
}
