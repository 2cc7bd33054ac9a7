#pragma once

#include <string>
#include <vector>

#include "garnir/rootsys.hpp"
#include "garnir/weyl.hpp"

/* Tableaux and tabloids over a reference pair (J; J').

   The reference is the ordered root list J (rows) followed by J' (columns).
   A tableau is the elementwise image of that list under a group element,
   kept in order; roots may land on either sign.  Two tableaux are
   row-equivalent when their witnesses differ by a factor in W(J), and a
   tabloid is such an equivalence class, represented canonically by the
   distinguished representative of the witness coset.

   Displays use coefficient notation, rows then columns:  "{21,01;-10}".
*/

namespace garnir {

class TabloidSpace;

struct Tableau {
  std::vector<int> rows;  // root indices, images of J in order
  std::vector<int> cols;  // root indices, images of J' in order
  Element witness;

  std::string display(const RootSystem& phi) const;
};

// A row-equivalence class, identified by the position of its canonical
// representative in the distinguished-representative listing.
class Tabloid {
 public:
  Tabloid() = default;
  Tabloid(const TabloidSpace* space, int pos) : space_(space), pos_(pos) {}

  const TabloidSpace& space() const { return *space_; }
  int index() const { return pos_; }
  Element rep() const;
  std::string display() const;

  bool operator==(const Tabloid& o) const { return space_ == o.space_ && pos_ == o.pos_; }
  bool operator!=(const Tabloid& o) const { return !(*this == o); }
  bool operator<(const Tabloid& o) const { return pos_ < o.pos_; }

 private:
  const TabloidSpace* space_ = nullptr;
  int pos_ = 0;
};

/* The configured pair and everything derived from it: D_Psi, the coset
   partition of W, and the tabloid list in representative order.  The row
   subsystem alone drives equivalence; columns ride along for display and
   for the polytabloid machinery built on top. */
class TabloidSpace {
 public:
  TabloidSpace(const WeylGroup& w, Subsystem psi, Subsystem psi_prime);

  const WeylGroup& group() const { return *w_; }
  const Subsystem& rows() const { return psi_; }
  const Subsystem& cols() const { return psi_prime_; }
  // The ordered reference lists (row and column roots as configured).
  const std::vector<int>& row_roots() const { return row_roots_; }
  const std::vector<int>& col_roots() const { return col_roots_; }
  const Subgroup& row_group() const { return w_psi_; }

  std::size_t size() const { return reps_.size(); }
  const std::vector<int>& reps() const { return reps_; }

  Tableau make_tableau(const Element& w) const;
  bool row_equivalent(const Tableau& a, const Tableau& b) const;
  Tabloid tabloid_of(const Tableau& t) const;
  // tabloid_of(make_tableau(w)) without building the tableau.
  Tabloid tabloid(const Element& w) const;
  std::vector<Tabloid> all_tabloids() const;
  Tabloid act(const Element& sigma, const Tabloid& t) const;

 private:
  const WeylGroup* w_;
  Subsystem psi_;
  Subsystem psi_prime_;
  std::vector<int> row_roots_;
  std::vector<int> col_roots_;
  Subgroup w_psi_;
  std::vector<int> reps_;
  std::vector<int> class_of_;  // element index -> tabloid position
};

}  // namespace garnir
