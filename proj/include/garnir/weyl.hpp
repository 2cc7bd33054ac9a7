#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "garnir/rootsys.hpp"

/* The Weyl group W(Phi) and its reflection subgroups, enumerated exactly.

   Elements are stored as permutations of the root index set and identified
   by their canonical key: the tuple of images of the simple roots, which
   determines the element.  Enumeration is breadth-first over the simple
   reflections, so element index order is by length, each element carries a
   reduced word, and everything is deterministic.

   A word is rendered with generator tokens "t1".."tn" separated by single
   spaces, the identity as "e"; "t2 t1" means: apply t1 first, then t2.
*/

namespace garnir {

class WeylGroup;

// Value handle onto an element of an enumerated group. Cheap to copy;
// valid as long as the group is.
class Element {
 public:
  Element() = default;
  Element(const WeylGroup* g, int idx) : g_(g), idx_(idx) {}

  const WeylGroup& group() const { return *g_; }
  int index() const { return idx_; }
  int length() const;
  int sign() const;  // (-1)^length
  const std::vector<int>& word() const;
  std::string word_str() const;

  Element operator*(const Element& other) const;  // composition, other first
  Element inverse() const;
  int apply(int root_idx) const;
  RootVector apply(const RootVector& v) const;

  bool operator==(const Element& o) const { return g_ == o.g_ && idx_ == o.idx_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

 private:
  const WeylGroup* g_ = nullptr;
  int idx_ = 0;
};

class WeylGroup {
 public:
  // Enumerates W(phi). Throws resource_error if the group would exceed
  // order_cap elements.
  static WeylGroup generate(const RootSystem& phi, std::size_t order_cap = 10000);

  const RootSystem& roots() const { return *phi_; }
  std::size_t order() const { return perms_.size(); }

  Element identity() const { return Element(this, 0); }
  Element element(int idx) const;
  Element simple_reflection(int k) const;
  // tau_alpha for any root index of Phi.
  Element reflection(int root_idx) const;
  // Word strings as described above; throws std::domain_error on bad tokens.
  Element parse_word(const std::string& text) const;
  Element from_word(const std::vector<int>& gens) const;

  int compose(int a, int b) const;  // index of a.b
  int inverse(int a) const;
  int act_root(int elem, int root_idx) const;
  int length(int elem) const { return lengths_.at(elem); }
  int sign(int elem) const { return lengths_.at(elem) % 2 ? -1 : 1; }
  const std::vector<int>& word(int elem) const { return words_.at(elem); }

  // True if a precedes b in the (length, canonical key) order used for
  // all deterministic element listings.
  bool elem_less(int a, int b) const;
  std::vector<int> sorted(std::vector<int> elems) const;

 private:
  WeylGroup() = default;
  using Perm = std::vector<std::uint8_t>;
  int lookup(const Perm& p) const;

  const RootSystem* phi_ = nullptr;
  std::vector<Perm> perms_;
  std::vector<std::vector<int>> words_;
  std::vector<int> lengths_;
  std::vector<int> inverses_;
  std::map<Perm, int> key_to_idx_;  // keyed on the rank-length prefix
  int rank_ = 0;
};

/* A subgroup given by its full element list (ascending element index) plus
   a membership bitmap.  Root-generated subgroups remember their generating
   roots. */
class Subgroup {
 public:
  static Subgroup trivial(const WeylGroup& w);
  static Subgroup whole(const WeylGroup& w);
  static Subgroup generated_by(const WeylGroup& w, const std::vector<int>& elems);
  // Reflection subgroup W(J) for any set of roots J of Phi (signs free).
  static Subgroup from_roots(const WeylGroup& w, const std::vector<int>& root_indices);

  const WeylGroup& group() const { return *w_; }
  const std::vector<int>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }
  bool contains(int elem) const { return member_.at(elem) != 0; }
  const std::vector<int>& generator_roots() const { return generator_roots_; }

  static Subgroup intersection(const Subgroup& a, const Subgroup& b);
  bool operator==(const Subgroup& o) const { return w_ == o.w_ && elems_ == o.elems_; }

 private:
  Subgroup(const WeylGroup* w, std::vector<int> elems);

  const WeylGroup* w_ = nullptr;
  std::vector<int> elems_;
  std::vector<char> member_;
  std::vector<int> generator_roots_;
};

// Whether a plain element set is closed under composition (hence a
// subgroup, the sets being finite and nonempty with closure).
bool closed_under_product(const WeylGroup& w, const std::vector<int>& elems);

/* Distinguished coset representatives D_Psi: the elements sending every
   canonical simple root of psi to a positive root.  Each is the unique
   shortest element of its coset w W(J); returned in (length, key) order. */
std::vector<int> distinguished_reps(const WeylGroup& w, const Subsystem& psi);

// Unique factorization w = d.rho with d in D_Psi and rho in W(J).
std::pair<Element, Element> decompose(const Element& w, const Subsystem& psi);

/* Bruhat order, by the subword characterization: u <= v iff some
   spelling of u arises by deleting letters from a fixed reduced word
   of v.  Exponential in length(v), which is at most 16 here. */
bool bruhat_leq(const Element& u, const Element& v);

// Comparison by length alone (the coarser option where an order on
// representatives is needed).
bool length_leq(const Element& u, const Element& v);

// Every subgroup, by closure-growing from the trivial subgroup;
// sorted by (order, element list). Intended for |W| <= a few dozen.
std::vector<Subgroup> all_subgroups(const WeylGroup& w);

// Subgroups generated by subsets of the reflections, deduplicated.
std::vector<Subgroup> reflection_generated_subgroups(const WeylGroup& w);

}  // namespace garnir
