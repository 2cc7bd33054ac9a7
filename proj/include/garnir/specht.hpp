#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "garnir/rational.hpp"
#include "garnir/tableaux.hpp"
#include "garnir/weyl.hpp"

/* The permutation module with tabloid basis, the group algebra acting on
   it, polytabloids, Specht spans, and the classification chain for a
   configured pair: useful, good, very good, perfect.

   All coefficients are exact rationals.  Zero coefficients are never
   stored, so equality is plain map equality.
*/

namespace garnir {

// Exact linear combination of the tabloids of one space, keyed by
// tabloid position.
class ModuleVector {
 public:
  explicit ModuleVector(const TabloidSpace& space) : space_(&space) {}
  static ModuleVector unit(const Tabloid& t);

  const TabloidSpace& space() const { return *space_; }
  const std::map<int, Rat>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coeff(int pos) const;
  Rat coeff(const Tabloid& t) const { return coeff(t.index()); }
  void add(int pos, const Rat& v);  // accumulate, dropping zeros

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& operator*=(const Rat& c);
  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector operator-() const;
  bool operator==(const ModuleVector& o) const;
  bool operator!=(const ModuleVector& o) const { return !(*this == o); }

  // "{10,32;11} - {21,01;-10}", terms in tabloid order; "0" when empty.
  std::string str() const;

 private:
  const TabloidSpace* space_;
  std::map<int, Rat> coeffs_;
};

// Finite rational combination of group elements; multiplication is the
// usual convolution product of the group algebra.
class AlgebraElement {
 public:
  explicit AlgebraElement(const WeylGroup& w) : w_(&w) {}
  static AlgebraElement identity(const WeylGroup& w);
  static AlgebraElement unit(const Element& x);
  // The signed sum over an explicit element set.
  static AlgebraElement signed_sum(const WeylGroup& w, const std::vector<int>& elems);

  const WeylGroup& group() const { return *w_; }
  const std::map<int, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(int elem) const;
  void add(int elem, const Rat& v);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rat& c);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  // Linear extension of the tabloid action.
  ModuleVector apply(const ModuleVector& m) const;

  // "e - t1 - t2 t1 t2", terms in (length, key) order; "0" when empty.
  std::string str() const;

 private:
  const WeylGroup* w_;
  std::map<int, Rat> terms_;
};

// kappa for any root set: the signed sum over the reflection subgroup
// the roots generate.
AlgebraElement kappa(const WeylGroup& w, const std::vector<int>& root_indices);
AlgebraElement kappa(const Subgroup& h);

enum class RepOrder { bruhat, length };

/* A configured pair (Psi, Psi') with Psi' disjoint from Psi as root sets,
   its tabloid space, both perpendicular subsystems, and the cached
   classification chain.  Each predicate requires the previous one and
   throws precondition_error when called out of order. */
class SystemPair {
 public:
  SystemPair(const WeylGroup& w, Subsystem psi, Subsystem psi_prime);

  const WeylGroup& group() const { return space_.group(); }
  const TabloidSpace& space() const { return space_; }
  const Subsystem& psi() const { return space_.rows(); }
  const Subsystem& psi_prime() const { return space_.cols(); }
  const Subsystem& psi_perp() const { return psi_perp_; }
  const Subsystem& psi_prime_perp() const { return psi_prime_perp_; }
  const Subgroup& row_group() const { return space_.row_group(); }
  const Subgroup& col_group() const { return col_group_; }
  // D_Psi' in (length, key) order, and its intersection with D_Psi.
  const std::vector<int>& col_reps() const { return col_reps_; }
  const std::vector<int>& common_reps() const { return common_reps_; }

  bool is_useful() const;
  bool is_good() const;
  bool is_very_good(RepOrder order) const;
  bool is_perfect(RepOrder order) const;

 private:
  TabloidSpace space_;
  Subsystem psi_perp_;
  Subsystem psi_prime_perp_;
  Subgroup col_group_;
  std::vector<int> col_reps_;
  std::vector<int> common_reps_;
  mutable std::optional<bool> useful_, good_, vg_bruhat_, vg_length_;
  mutable std::optional<int> rank_;

  int specht_rank_cached() const;
};

// e_{wJ,wJ'}: the signed column-group sum of wJ' applied to the class
// of the tableau wJbar.
ModuleVector polytabloid(const Element& w, const SystemPair& pair);

struct SpanResult {
  std::vector<ModuleVector> basis;  // reduced echelon, pivots ascending
  int rank = 0;
};

// Span of all W-translates of the polytabloid, reduced exactly.
SpanResult specht_span(const SystemPair& pair);

// Reduced echelon form of an arbitrary vector list (deterministic pivot
// order: tabloid position).
std::vector<ModuleVector> echelon(std::vector<ModuleVector> vectors);

// Render a signed rational combination: "a - 2 b + 1/3 c", or "0".
std::string signed_sum_str(const std::vector<std::pair<std::string, Rat>>& parts);

}  // namespace garnir
