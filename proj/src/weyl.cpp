#include "garnir/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "garnir/errors.hpp"

namespace garnir {

int Element::length() const { return g_->length(idx_); }
int Element::sign() const { return g_->sign(idx_); }
const std::vector<int>& Element::word() const { return g_->word(idx_); }

std::string Element::word_str() const {
  const std::vector<int>& w = word();
  if (w.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += 't' + std::to_string(w[i] + 1);
  }
  return s;
}

Element Element::operator*(const Element& other) const {
  if (g_ != other.g_) throw std::domain_error("elements of different groups");
  return Element(g_, g_->compose(idx_, other.idx_));
}

Element Element::inverse() const { return Element(g_, g_->inverse(idx_)); }

int Element::apply(int root_idx) const { return g_->act_root(idx_, root_idx); }

RootVector Element::apply(const RootVector& v) const {
  RootVector r = v;
  const std::vector<int>& w = word();
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    r = reflect(g_->roots().simple_root(*it), r);
  return r;
}

WeylGroup WeylGroup::generate(const RootSystem& phi, std::size_t order_cap) {
  WeylGroup w;
  w.phi_ = &phi;
  w.rank_ = phi.rank();
  const int n = phi.size();

  std::vector<Perm> gens(phi.rank());
  for (int k = 0; k < phi.rank(); ++k) {
    gens[k].resize(n);
    for (int v = 0; v < n; ++v) gens[k][v] = static_cast<std::uint8_t>(phi.reflect_root(k, v));
  }

  Perm id(n);
  for (int i = 0; i < n; ++i) id[i] = static_cast<std::uint8_t>(i);
  w.perms_.push_back(id);
  w.words_.push_back({});
  w.lengths_.push_back(0);
  w.key_to_idx_[Perm(id.begin(), id.begin() + w.rank_)] = 0;

  for (std::size_t head = 0; head < w.perms_.size(); ++head) {
    for (int k = 0; k < phi.rank(); ++k) {
      // Right multiplication by generator k.
      Perm next(n);
      for (int i = 0; i < n; ++i) next[i] = w.perms_[head][gens[k][i]];
      Perm key(next.begin(), next.begin() + w.rank_);
      if (w.key_to_idx_.count(key)) continue;
      if (w.perms_.size() >= order_cap)
        throw resource_error("group order exceeds cap " + std::to_string(order_cap));
      w.key_to_idx_[key] = static_cast<int>(w.perms_.size());
      std::vector<int> word = w.words_[head];
      word.push_back(k);
      w.perms_.push_back(std::move(next));
      w.words_.push_back(std::move(word));
      w.lengths_.push_back(w.lengths_[head] + 1);
    }
  }

  // Breadth-first layering must agree with the inversion count.
  for (std::size_t e = 0; e < w.perms_.size(); ++e) {
    int inversions = 0;
    for (int i = 0; i < phi.num_positive(); ++i)
      if (!phi.is_positive(w.perms_[e][i])) ++inversions;
    if (inversions != w.lengths_[e])
      throw invariant_error("length disagrees with inversion count");
  }

  w.inverses_.resize(w.perms_.size());
  for (std::size_t e = 0; e < w.perms_.size(); ++e) {
    Perm inv(n);
    for (int i = 0; i < n; ++i) inv[w.perms_[e][i]] = static_cast<std::uint8_t>(i);
    w.inverses_[e] = w.lookup(inv);
  }
  return w;
}

int WeylGroup::lookup(const Perm& p) const {
  auto it = key_to_idx_.find(Perm(p.begin(), p.begin() + rank_));
  if (it == key_to_idx_.end()) throw invariant_error("permutation not in enumerated group");
  return it->second;
}

Element WeylGroup::element(int idx) const {
  if (idx < 0 || idx >= static_cast<int>(order()))
    throw std::domain_error("element index out of range");
  return Element(this, idx);
}

Element WeylGroup::simple_reflection(int k) const {
  if (k < 0 || k >= rank_) throw std::domain_error("no such simple reflection");
  return reflection(k);
}

Element WeylGroup::reflection(int root_idx) const {
  const int n = phi_->size();
  Perm p(n);
  for (int v = 0; v < n; ++v) p[v] = static_cast<std::uint8_t>(phi_->reflect_root(root_idx, v));
  return Element(this, lookup(p));
}

Element WeylGroup::parse_word(const std::string& text) const {
  std::istringstream in(text);
  std::string tok;
  std::vector<int> gens;
  bool saw_e = false;
  while (in >> tok) {
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    if (tok.size() < 2 || tok[0] != 't')
      throw std::domain_error("bad generator token '" + tok + "'");
    int k = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(tok[i])))
        throw std::domain_error("bad generator token '" + tok + "'");
      k = k * 10 + (tok[i] - '0');
    }
    if (k < 1 || k > rank_)
      throw std::domain_error("generator '" + tok + "' out of range for rank " +
                              std::to_string(rank_));
    gens.push_back(k - 1);
  }
  if (gens.empty() && !saw_e)
    throw std::domain_error("empty word (use 'e' for the identity)");
  return from_word(gens);
}

Element WeylGroup::from_word(const std::vector<int>& gens) const {
  int cur = 0;
  for (int g : gens) {
    if (g < 0 || g >= rank_) throw std::domain_error("generator index out of range");
    cur = compose(cur, simple_reflection(g).index());
  }
  return Element(this, cur);
}

int WeylGroup::compose(int a, int b) const {
  Perm pref(rank_);
  for (int i = 0; i < rank_; ++i) pref[i] = perms_[a][perms_[b][i]];
  auto it = key_to_idx_.find(pref);
  if (it == key_to_idx_.end()) throw invariant_error("composition left the group");
  return it->second;
}

int WeylGroup::inverse(int a) const { return inverses_.at(a); }

int WeylGroup::act_root(int elem, int root_idx) const { return perms_.at(elem).at(root_idx); }

bool WeylGroup::elem_less(int a, int b) const {
  if (lengths_[a] != lengths_[b]) return lengths_[a] < lengths_[b];
  for (int i = 0; i < rank_; ++i)
    if (perms_[a][i] != perms_[b][i]) return perms_[a][i] < perms_[b][i];
  return false;
}

std::vector<int> WeylGroup::sorted(std::vector<int> elems) const {
  std::sort(elems.begin(), elems.end(), [this](int a, int b) { return elem_less(a, b); });
  return elems;
}

Subgroup::Subgroup(const WeylGroup* w, std::vector<int> elems) : w_(w), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  member_.assign(w_->order(), 0);
  for (int e : elems_) member_[e] = 1;
}

Subgroup Subgroup::trivial(const WeylGroup& w) { return Subgroup(&w, {0}); }

Subgroup Subgroup::whole(const WeylGroup& w) {
  std::vector<int> all(w.order());
  for (std::size_t i = 0; i < w.order(); ++i) all[i] = static_cast<int>(i);
  return Subgroup(&w, std::move(all));
}

Subgroup Subgroup::generated_by(const WeylGroup& w, const std::vector<int>& elems) {
  std::vector<char> member(w.order(), 0);
  std::vector<int> queue = {0};
  member[0] = 1;
  for (int g : elems) {
    if (g < 0 || g >= static_cast<int>(w.order()))
      throw std::domain_error("element index out of range");
    if (!member[g]) {
      member[g] = 1;
      queue.push_back(g);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int g : elems) {
      int x = w.compose(queue[head], g);
      if (!member[x]) {
        member[x] = 1;
        queue.push_back(x);
      }
    }
  std::vector<int> out;
  for (std::size_t i = 0; i < w.order(); ++i)
    if (member[i]) out.push_back(static_cast<int>(i));
  return Subgroup(&w, std::move(out));
}

Subgroup Subgroup::from_roots(const WeylGroup& w, const std::vector<int>& root_indices) {
  std::vector<int> gens;
  for (int r : root_indices) {
    if (r < 0 || r >= w.roots().size())
      throw std::domain_error("root index out of range");
    gens.push_back(w.reflection(r).index());
  }
  Subgroup s = generated_by(w, gens);
  s.generator_roots_ = root_indices;
  return s;
}

Subgroup Subgroup::intersection(const Subgroup& a, const Subgroup& b) {
  if (a.w_ != b.w_) throw std::domain_error("subgroups of different groups");
  std::vector<int> out;
  for (int e : a.elems_)
    if (b.contains(e)) out.push_back(e);
  return Subgroup(a.w_, std::move(out));
}

bool closed_under_product(const WeylGroup& w, const std::vector<int>& elems) {
  if (elems.empty()) return false;
  std::vector<char> member(w.order(), 0);
  for (int e : elems) {
    if (e < 0 || e >= static_cast<int>(w.order())) return false;
    member[e] = 1;
  }
  for (int a : elems)
    for (int b : elems)
      if (!member[w.compose(a, b)]) return false;
  return true;
}

std::vector<int> distinguished_reps(const WeylGroup& w, const Subsystem& psi) {
  if (&psi.parent() != &w.roots()) throw std::domain_error("subsystem of a different root system");
  std::vector<int> reps;
  for (std::size_t e = 0; e < w.order(); ++e) {
    bool ok = true;
    for (int j : psi.simple())
      if (!w.roots().is_positive(w.act_root(static_cast<int>(e), j))) {
        ok = false;
        break;
      }
    if (ok) reps.push_back(static_cast<int>(e));
  }
  return w.sorted(std::move(reps));
}

std::pair<Element, Element> decompose(const Element& w, const Subsystem& psi) {
  const WeylGroup& g = w.group();
  if (&psi.parent() != &g.roots()) throw std::domain_error("subsystem of a different root system");
  int d = w.index();
  int rho = 0;
  bool progressing = true;
  while (progressing) {
    progressing = false;
    for (int j : psi.simple()) {
      if (!g.roots().is_positive(g.act_root(d, j))) {
        int tj = g.reflection(j).index();
        d = g.compose(d, tj);
        rho = g.compose(tj, rho);
        progressing = true;
        break;
      }
    }
  }
  if (g.compose(d, rho) != w.index()) throw invariant_error("coset factorization failed");
  return {Element(&g, d), Element(&g, rho)};
}

bool bruhat_leq(const Element& u, const Element& v) {
  if (&u.group() != &v.group()) throw std::domain_error("elements of different groups");
  const WeylGroup& g = u.group();
  const int lu = u.length(), lv = v.length();
  if (lu > lv) return false;
  if (u.index() == v.index()) return true;
  if (lu == lv) return false;
  const std::vector<int>& word = v.word();
  // If u <= v, some reduced spelling of u survives as a subword, so only
  // subsets of size length(u) need checking.
  std::vector<int> gen_elem(g.roots().rank());
  for (int k = 0; k < g.roots().rank(); ++k) gen_elem[k] = g.simple_reflection(k).index();
  for (std::uint32_t mask = 0; mask < (1u << lv); ++mask) {
    if (__builtin_popcount(mask) != lu) continue;
    int cur = 0;
    for (int i = 0; i < lv; ++i)
      if (mask & (1u << i)) cur = g.compose(cur, gen_elem[word[i]]);
    if (cur == u.index()) return true;
  }
  return false;
}

bool length_leq(const Element& u, const Element& v) {
  if (&u.group() != &v.group()) throw std::domain_error("elements of different groups");
  return u.length() <= v.length();
}

std::vector<Subgroup> all_subgroups(const WeylGroup& w) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  std::vector<std::vector<int>> frontier;

  Subgroup triv = Subgroup::trivial(w);
  seen.insert(triv.elements());
  frontier.push_back(triv.elements());
  out.push_back(triv);

  for (std::size_t head = 0; head < frontier.size(); ++head) {
    std::vector<int> base = frontier[head];
    for (std::size_t g = 0; g < w.order(); ++g) {
      if (std::binary_search(base.begin(), base.end(), static_cast<int>(g))) continue;
      std::vector<int> gens = base;
      gens.push_back(static_cast<int>(g));
      Subgroup grown = Subgroup::generated_by(w, gens);
      if (seen.insert(grown.elements()).second) {
        frontier.push_back(grown.elements());
        out.push_back(grown);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<Subgroup> reflection_generated_subgroups(const WeylGroup& w) {
  // A set of reflections generates the reflection subgroup of the
  // subsystem its roots generate, so sweeping subsystems is exhaustive.
  std::vector<Subgroup> out;
  std::set<std::vector<int>> seen;
  for (const Subsystem& psi : all_subsystems(w.roots())) {
    Subgroup s = Subgroup::from_roots(w, psi.simple());
    if (seen.insert(s.elements()).second) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace garnir
