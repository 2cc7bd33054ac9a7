#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "garnir/errors.hpp"
#include "garnir/rootsys.hpp"
#include "garnir/weyl.hpp"

using namespace garnir;

namespace {

const RootSystem& sys(const std::string& label) {
  static std::map<std::string, RootSystem> cache;
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, RootSystem::build(label)).first;
  return it->second;
}

const WeylGroup& grp(const std::string& label) {
  static std::map<std::string, WeylGroup> cache;
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, WeylGroup::generate(sys(label))).first;
  return it->second;
}

int pw(const WeylGroup& w, const std::string& word) { return w.parse_word(word).index(); }

// Test-side recomputation: the number of positive roots an element sends
// negative, counted through the public action only.
int inversion_count(const Element& w) {
  const RootSystem& phi = w.group().roots();
  int count = 0;
  for (int i = 0; i < phi.num_positive(); ++i)
    if (!phi.is_positive(w.apply(i))) ++count;
  return count;
}

Subsystem sub(const std::string& label, const std::vector<std::string>& coeffs) {
  return Subsystem::from_coeff_strings(sys(label), coeffs);
}

}  // namespace

TEST_CASE("group orders match the classification") {
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"A1", 2},  {"A2", 6},   {"A3", 24},  {"A4", 120}, {"B2", 8},
      {"B3", 48}, {"B4", 384}, {"C2", 8},   {"C3", 48},  {"C4", 384},
      {"D2", 4},  {"D3", 24},  {"D4", 192}, {"G2", 12},
  };
  for (const auto& [label, order] : expected) {
    CAPTURE(label);
    CHECK(grp(label).order() == order);
  }
}

TEST_CASE("order cap stops enumeration") {
  CHECK_THROWS_AS(WeylGroup::generate(sys("B4"), 100), resource_error);
  CHECK_NOTHROW(WeylGroup::generate(sys("G2"), 12));
  CHECK_THROWS_AS(WeylGroup::generate(sys("G2"), 11), resource_error);
}

TEST_CASE("identity and generator basics") {
  const WeylGroup& w = grp("G2");
  CHECK(w.identity().index() == 0);
  CHECK(w.identity().length() == 0);
  CHECK(w.identity().sign() == 1);
  CHECK(w.identity().word_str() == "e");
  for (int k = 0; k < 2; ++k) {
    Element t = w.simple_reflection(k);
    CHECK(t.length() == 1);
    CHECK(t.sign() == -1);
    CHECK(t.word_str() == "t" + std::to_string(k + 1));
    CHECK((t * t) == w.identity());
  }
  CHECK_THROWS_AS(w.simple_reflection(2), std::domain_error);
  CHECK_THROWS_AS(w.element(12), std::domain_error);
  CHECK_THROWS_AS(w.element(-1), std::domain_error);
}

TEST_CASE("length equals inversion count") {
  for (const std::string label : {"G2", "B3", "A3"}) {
    const WeylGroup& w = grp(label);
    for (int i = 0; i < static_cast<int>(w.order()); ++i) {
      Element x = w.element(i);
      CHECK(x.length() == inversion_count(x));
      CHECK(static_cast<int>(x.word().size()) == x.length());
    }
  }
}

TEST_CASE("words round-trip through the parser") {
  for (const std::string label : {"G2", "B2"}) {
    const WeylGroup& w = grp(label);
    for (int i = 0; i < static_cast<int>(w.order()); ++i) {
      Element x = w.element(i);
      CHECK(w.parse_word(x.word_str()) == x);
    }
  }
  const WeylGroup& w = grp("G2");
  CHECK(pw(w, "e") == 0);
  CHECK(pw(w, "t1 t1") == 0);
  CHECK(pw(w, "t2 t2") == 0);
  CHECK(pw(w, "t1 t2") != pw(w, "t2 t1"));
}

TEST_CASE("composition applies the right factor first") {
  const WeylGroup& w = grp("G2");
  const RootSystem& phi = w.roots();
  for (int a = 0; a < static_cast<int>(w.order()); ++a)
    for (int b = 0; b < static_cast<int>(w.order()); ++b) {
      Element ab = w.element(a) * w.element(b);
      for (int r = 0; r < phi.size(); ++r)
        CHECK(ab.apply(r) == w.element(a).apply(w.element(b).apply(r)));
    }
  // Index action and vector action agree.
  for (int a = 0; a < static_cast<int>(w.order()); ++a)
    for (int r = 0; r < phi.size(); ++r)
      CHECK(phi.index_of(w.element(a).apply(phi.root(r))) == w.element(a).apply(r));
  CHECK((w.simple_reflection(0) * w.simple_reflection(1)) == w.parse_word("t1 t2"));
}

TEST_CASE("inverses and signs") {
  const WeylGroup& w = grp("G2");
  for (int a = 0; a < static_cast<int>(w.order()); ++a) {
    Element x = w.element(a);
    CHECK((x * x.inverse()) == w.identity());
    CHECK((x.inverse() * x) == w.identity());
    CHECK(x.inverse().length() == x.length());
    for (int b = 0; b < static_cast<int>(w.order()); ++b)
      CHECK((w.element(a) * w.element(b)).sign() == w.element(a).sign() * w.element(b).sign());
  }
}

TEST_CASE("longest element") {
  for (const std::string label : {"G2", "B2", "A3"}) {
    const WeylGroup& w = grp(label);
    const RootSystem& phi = w.roots();
    std::vector<int> longest;
    for (int i = 0; i < static_cast<int>(w.order()); ++i)
      if (w.length(i) == phi.num_positive()) longest.push_back(i);
    REQUIRE(longest.size() == 1);
    Element w0 = w.element(longest[0]);
    for (int i = 0; i < static_cast<int>(w.order()); ++i) CHECK(w.length(i) <= w0.length());
    CHECK((w0 * w0) == w.identity());
    for (int r = 0; r < phi.num_positive(); ++r) CHECK_FALSE(phi.is_positive(w0.apply(r)));
  }
  // Breadth-first search meets the longest element of the order-12 group
  // through its generator-1-first spelling.
  const WeylGroup& g2 = grp("G2");
  Element w0 = g2.parse_word("t1 t2 t1 t2 t1 t2");
  CHECK(w0.length() == 6);
  CHECK(w0.word_str() == "t1 t2 t1 t2 t1 t2");
  CHECK(g2.parse_word("t2 t1 t2 t1 t2 t1") == w0);
}

TEST_CASE("parser rejects malformed words") {
  const WeylGroup& w = grp("G2");
  CHECK_THROWS_AS(w.parse_word("t3"), std::domain_error);
  CHECK_THROWS_AS(w.parse_word("t0"), std::domain_error);
  CHECK_THROWS_AS(w.parse_word("s1"), std::domain_error);
  CHECK_THROWS_AS(w.parse_word("t1x"), std::domain_error);
  CHECK_THROWS_AS(w.parse_word("t"), std::domain_error);
  CHECK_THROWS_AS(w.parse_word(""), std::domain_error);
  CHECK_THROWS_AS(w.parse_word("   "), std::domain_error);
}

TEST_CASE("reflections in non-simple roots") {
  const WeylGroup& w = grp("G2");
  const RootSystem& phi = w.roots();
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"10", "t1"},        {"01", "t2"},
      {"31", "t1 t2 t1"},  {"11", "t2 t1 t2"},
      {"21", "t1 t2 t1 t2 t1"}, {"32", "t2 t1 t2 t1 t2"},
  };
  for (const auto& [coeff, word] : expected) {
    CAPTURE(coeff);
    int r = phi.parse_coeff_str(coeff);
    CHECK(w.reflection(r) == w.parse_word(word));
    CHECK(w.reflection(phi.negate(r)) == w.parse_word(word));
    CHECK((w.reflection(r) * w.reflection(r)) == w.identity());
  }
}

TEST_CASE("subgroups generated by elements") {
  const WeylGroup& w = grp("G2");
  CHECK(Subgroup::trivial(w).elements() == std::vector<int>{0});
  CHECK(Subgroup::whole(w).order() == 12);
  CHECK(Subgroup::generated_by(w, {}).elements() == std::vector<int>{0});

  Subgroup rot = Subgroup::generated_by(w, {pw(w, "t1 t2")});
  CHECK(rot.order() == 6);
  CHECK(rot.contains(pw(w, "t2 t1")));
  CHECK_FALSE(rot.contains(pw(w, "t1")));

  CHECK_THROWS_AS(Subgroup::generated_by(w, {99}), std::domain_error);
}

TEST_CASE("reflection subgroup element sets") {
  const WeylGroup& w = grp("G2");
  const RootSystem& phi = w.roots();
  auto idx = [&](const std::string& c) { return phi.parse_coeff_str(c); };

  // The two orthogonal roots alpha_1 and 3 alpha_1 + 2 alpha_2 give a
  // Klein four-group whose nontrivial elements are the two reflections
  // and the longest element.
  Subgroup v4 = Subgroup::from_roots(w, {idx("10"), idx("32")});
  std::set<int> got(v4.elements().begin(), v4.elements().end());
  std::set<int> want = {pw(w, "e"), pw(w, "t1"), pw(w, "t2 t1 t2 t1 t2"),
                        pw(w, "t1 t2 t1 t2 t1 t2")};
  CHECK(got == want);
  CHECK(v4.generator_roots() == std::vector<int>{idx("10"), idx("32")});

  CHECK(Subgroup::from_roots(w, {idx("11")}).elements() ==
        std::vector<int>({pw(w, "e"), pw(w, "t2 t1 t2")}));
  CHECK(Subgroup::from_roots(w, {phi.negate(idx("11"))}).elements() ==
        Subgroup::from_roots(w, {idx("11")}).elements());

  CHECK_THROWS_AS(Subgroup::from_roots(w, {phi.size()}), std::domain_error);

  // Long and short A2 reflection subgroups share exactly the rotation
  // subgroup of order three.
  Subgroup long_a2 = Subgroup::from_roots(w, {idx("01"), idx("31")});
  Subgroup short_a2 = Subgroup::from_roots(w, {idx("10"), idx("11")});
  CHECK(long_a2.order() == 6);
  CHECK(short_a2.order() == 6);
  Subgroup meet = Subgroup::intersection(long_a2, short_a2);
  std::set<int> meet_set(meet.elements().begin(), meet.elements().end());
  CHECK(meet_set == std::set<int>({pw(w, "e"), pw(w, "t1 t2 t1 t2"), pw(w, "t2 t1 t2 t1")}));
}

TEST_CASE("closed_under_product recognizes subgroups") {
  const WeylGroup& w = grp("G2");
  CHECK(closed_under_product(w, Subgroup::whole(w).elements()));
  CHECK(closed_under_product(w, {0}));
  CHECK_FALSE(closed_under_product(w, {}));
  CHECK_FALSE(closed_under_product(w, {pw(w, "t1")}));
  CHECK_FALSE(closed_under_product(w, {0, pw(w, "t1"), pw(w, "t2")}));
}

TEST_CASE("distinguished representatives for the orthogonal row pair") {
  const WeylGroup& w = grp("G2");
  Subsystem psi = sub("G2", {"10", "32"});
  std::vector<int> reps = distinguished_reps(w, psi);
  CHECK(reps == std::vector<int>({pw(w, "e"), pw(w, "t2"), pw(w, "t1 t2")}));

  CHECK(distinguished_reps(w, Subsystem::full(w.roots())) == std::vector<int>{0});
  std::vector<int> all = distinguished_reps(w, Subsystem::empty(w.roots()));
  CHECK(all.size() == 12);
  CHECK(all.front() == 0);
}

TEST_CASE("representatives pick one shortest element per coset") {
  for (const std::string label : {"G2", "B2"}) {
    const WeylGroup& w = grp(label);
    for (const Subsystem& psi : all_subsystems(w.roots())) {
      Subgroup wj = Subgroup::from_roots(w, psi.simple());
      std::vector<int> reps = distinguished_reps(w, psi);
      CHECK(reps.size() * wj.order() == w.order());

      std::vector<char> covered(w.order(), 0);
      for (int d : reps)
        for (int h : wj.elements()) {
          int x = w.compose(d, h);
          CHECK_FALSE(covered[x]);
          covered[x] = 1;
          if (x != d) CHECK(w.length(d) < w.length(x));
        }
      CHECK(std::count(covered.begin(), covered.end(), 1) == static_cast<long>(w.order()));

      for (size_t i = 1; i < reps.size(); ++i) CHECK(w.elem_less(reps[i - 1], reps[i]));
    }
  }
}

TEST_CASE("decompose factors through the representative") {
  const WeylGroup& w = grp("G2");
  for (const Subsystem& psi : all_subsystems(w.roots())) {
    Subgroup wj = Subgroup::from_roots(w, psi.simple());
    std::vector<int> reps = distinguished_reps(w, psi);
    for (int i = 0; i < static_cast<int>(w.order()); ++i) {
      auto [d, rho] = decompose(w.element(i), psi);
      CHECK(std::count(reps.begin(), reps.end(), d.index()) == 1);
      CHECK(wj.contains(rho.index()));
      CHECK((d * rho) == w.element(i));

      // The representative really is the shortest element of the coset.
      int best = i;
      for (int h : wj.elements()) {
        int x = w.compose(i, h);
        if (w.length(x) < w.length(best)) best = x;
      }
      CHECK(best == d.index());
    }
  }
}

TEST_CASE("bruhat order matches the subword closure oracle") {
  for (const std::string label : {"G2", "B2"}) {
    const WeylGroup& w = grp(label);
    for (int v = 0; v < static_cast<int>(w.order()); ++v) {
      // Collect products of every subword of v's reduced word.
      const std::vector<int>& word = w.word(v);
      std::set<int> below;
      for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
        int cur = 0;
        for (size_t i = 0; i < word.size(); ++i)
          if (mask & (1u << i)) cur = w.compose(cur, w.simple_reflection(word[i]).index());
        below.insert(cur);
      }
      for (int u = 0; u < static_cast<int>(w.order()); ++u)
        CHECK(bruhat_leq(w.element(u), w.element(v)) == (below.count(u) > 0));
    }
  }

  const WeylGroup& w = grp("G2");
  for (int u = 0; u < static_cast<int>(w.order()); ++u) {
    CHECK(bruhat_leq(w.element(u), w.element(u)));
    CHECK(bruhat_leq(w.identity(), w.element(u)));
    CHECK(bruhat_leq(w.element(u), w.parse_word("t1 t2 t1 t2 t1 t2")));
    for (int v = 0; v < static_cast<int>(w.order()); ++v) {
      if (bruhat_leq(w.element(u), w.element(v))) {
        CHECK(length_leq(w.element(u), w.element(v)));
        if (u != v) CHECK_FALSE(bruhat_leq(w.element(v), w.element(u)));
      }
    }
  }
}

TEST_CASE("all subgroups of the order-12 group") {
  const WeylGroup& w = grp("G2");
  std::vector<Subgroup> subs = all_subgroups(w);
  CHECK(subs.size() == 16);

  std::map<std::size_t, int> by_order;
  for (const Subgroup& s : subs) {
    ++by_order[s.order()];
    CHECK(closed_under_product(w, s.elements()));
  }
  CHECK(by_order == std::map<std::size_t, int>(
                        {{1, 1}, {2, 7}, {3, 1}, {4, 3}, {6, 3}, {12, 1}}));

  std::set<std::vector<int>> distinct;
  for (const Subgroup& s : subs) distinct.insert(s.elements());
  CHECK(distinct.size() == subs.size());
  CHECK(subs.front() == Subgroup::trivial(w));
  CHECK(subs.back() == Subgroup::whole(w));
}

TEST_CASE("reflection generated subgroups") {
  const WeylGroup& w = grp("G2");
  std::vector<Subgroup> subs = reflection_generated_subgroups(w);
  CHECK(subs.size() == 13);
  std::map<std::size_t, int> by_order;
  for (const Subgroup& s : subs) ++by_order[s.order()];
  CHECK(by_order ==
        std::map<std::size_t, int>({{1, 1}, {2, 6}, {4, 3}, {6, 2}, {12, 1}}));

  // Each one is recoverable from a subsystem, and vice versa.
  std::set<std::vector<int>> from_psi;
  for (const Subsystem& psi : all_subsystems(w.roots()))
    from_psi.insert(Subgroup::from_roots(w, psi.simple()).elements());
  std::set<std::vector<int>> got;
  for (const Subgroup& s : subs) got.insert(s.elements());
  CHECK(got == from_psi);
}

TEST_CASE("conjugation carries reflection subgroups to reflection subgroups") {
  const WeylGroup& w = grp("G2");
  for (const Subsystem& psi : all_subsystems(w.roots())) {
    Subgroup wj = Subgroup::from_roots(w, psi.simple());
    for (int a = 0; a < static_cast<int>(w.order()); ++a) {
      std::vector<int> moved;
      for (int r : psi.simple()) moved.push_back(w.act_root(a, r));
      std::set<int> conjugate;
      for (int h : wj.elements()) conjugate.insert(w.compose(w.compose(a, h), w.inverse(a)));
      Subgroup moved_sub = Subgroup::from_roots(w, moved);
      std::set<int> moved_set(moved_sub.elements().begin(), moved_sub.elements().end());
      CHECK(moved_set == conjugate);
    }
  }
}

TEST_CASE("sorted element listing is deterministic") {
  const WeylGroup& w = grp("G2");
  std::vector<int> all(w.order());
  for (std::size_t i = 0; i < w.order(); ++i) all[i] = static_cast<int>(i);
  std::vector<int> ordered = w.sorted(all);
  CHECK(ordered.size() == w.order());
  CHECK(ordered.front() == 0);
  CHECK(w.length(ordered.back()) == 6);
  for (size_t i = 1; i < ordered.size(); ++i) {
    CHECK(w.elem_less(ordered[i - 1], ordered[i]));
    CHECK(w.length(ordered[i - 1]) <= w.length(ordered[i]));
  }
  CHECK(w.sorted(ordered) == ordered);
}
