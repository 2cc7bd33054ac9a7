#pragma once

#include <string>
#include <vector>

#include "garnir/rational.hpp"

/* Finite crystallographic root systems with exact rational coordinates.

   Conventions fixed here and relied on everywhere else:

   - A root system Phi lives in an ambient rational vector space with the
     standard inner product.  Families and ambient coordinates:
       A_n  in (n+1)-space, simple roots e_i - e_{i+1};
       B_n  in n-space, simple roots e_1-e_2, ..., e_{n-1}-e_n, e_n;
       C_n  in n-space, simple roots e_1-e_2, ..., e_{n-1}-e_n, 2e_n;
       D_n  in n-space, simple roots e_1-e_2, ..., e_{n-1}-e_n, e_{n-1}+e_n;
       G_2  in 3-space, simple roots e_1-e_2 and -2e_1+e_2+e_3.
     Supported ranks: A 1..4, B/C/D 2..4, G exactly 2.

   - Roots are indexed 0..|Phi|-1.  Positive roots come first, ordered with
     the simple roots in construction order and the rest by increasing
     height then lexicographic coefficient vector; root i+P is the negative
     of root i, where P = |Phi+|.  Simple root k therefore has index k.

   - Every root is an integer combination of the simple roots.  The
     coefficient string of a root concatenates those coefficients, each an
     optionally signed digit: "32" is 3a_1 + 2a_2, "-10" is -a_1.  This is
     the notation used for all root input and output.
*/

namespace garnir {

struct RootVector {
  std::vector<Rat> coords;

  RootVector() = default;
  explicit RootVector(std::vector<Rat> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
};

bool operator==(const RootVector& a, const RootVector& b);
bool operator!=(const RootVector& a, const RootVector& b);
bool operator<(const RootVector& a, const RootVector& b);  // lexicographic

RootVector operator+(const RootVector& a, const RootVector& b);
RootVector operator-(const RootVector& a, const RootVector& b);
RootVector operator-(const RootVector& a);
RootVector operator*(const Rat& c, const RootVector& a);

// Standard inner product. Throws std::domain_error on dimension mismatch.
Rat inner(const RootVector& a, const RootVector& b);

// Reflection of v in the hyperplane normal to alpha:
//   v - 2 (alpha,v)/(alpha,alpha) alpha.
// Throws std::domain_error if alpha is zero or dimensions differ.
RootVector reflect(const RootVector& alpha, const RootVector& v);

// "(1,-1,0)"
std::string coords_str(const RootVector& v);

class RootSystem {
 public:
  // Builds from a label like "G2" or "A3". Throws std::invalid_argument
  // for unknown families or ranks outside the supported range.
  static RootSystem build(const std::string& label);
  static RootSystem build(char family, int rank);

  const std::string& label() const { return label_; }
  char family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }

  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }
  const std::vector<RootVector>& roots() const { return roots_; }
  const RootVector& root(int idx) const { return roots_.at(idx); }
  const RootVector& simple_root(int k) const { return roots_.at(k); }

  bool is_positive(int idx) const { return idx < num_positive_; }
  int negate(int idx) const;
  // Index of v in the root list, or -1 if v is not a root.
  int index_of(const RootVector& v) const;

  // Image of root v under the reflection in root alpha (precomputed).
  int reflect_root(int alpha_idx, int v_idx) const;

  // Integer coefficients of root idx over the simple roots.
  const std::vector<long>& simple_coeffs(int idx) const;
  // "32", "-10"; see the header comment for the notation.
  std::string coeff_str(int idx) const;
  // Parses a coefficient string to a root index. Throws std::domain_error
  // naming the offending token if it does not denote a root of this system.
  int parse_coeff_str(const std::string& token) const;

  Rat norm2(int idx) const;  // (alpha, alpha)

 private:
  RootSystem() = default;
  void close_and_index(std::vector<RootVector> simples);
  void check_invariants() const;

  std::string label_;
  char family_ = 0;
  int rank_ = 0;
  int ambient_dim_ = 0;
  int num_positive_ = 0;
  std::vector<RootVector> roots_;
  std::vector<std::vector<long>> coeffs_;       // over simple roots
  std::vector<std::vector<int>> reflect_table_; // [alpha][v]
};

/* A subsystem Psi of Phi: a subset of roots closed under reflection in its
   own members.  It is stored with

   - generators: the positive roots it was built from, in input order;
   - simple:     the canonical simple system, i.e. the roots of
                 Psi cap Phi+ that are not sums of two of them.  When the
                 generator set equals that canonical set, generator order
                 is kept; otherwise the canonical roots are sorted by index.

   All quotient and tabloid machinery downstream keys on simple(), which is
   the unique simple system of Psi contained in Phi+.  Generator sets that
   are not simple systems are legitimate input; they determine the same
   subsystem and the same reflection subgroup. */
class Subsystem {
 public:
  // J: indices of pairwise non-proportional positive roots of phi.
  // Throws std::domain_error on out-of-range, non-positive, or
  // proportional entries.
  static Subsystem from_simples(const RootSystem& phi, const std::vector<int>& J);
  static Subsystem from_coeff_strings(const RootSystem& phi,
                                      const std::vector<std::string>& tokens);
  static Subsystem full(const RootSystem& phi);
  static Subsystem empty(const RootSystem& phi);

  const RootSystem& parent() const { return *phi_; }
  const std::vector<int>& roots() const { return roots_; }
  const std::vector<int>& simple() const { return simple_; }
  const std::vector<int>& generators() const { return generators_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  bool contains(int root_idx) const;
  bool same_roots(const Subsystem& other) const;

  // Connected components of the Coxeter graph on simple(), each a list of
  // simple root indices, ordered by least member.
  const std::vector<std::vector<int>>& components() const { return components_; }

  /* Isomorphism-type label, e.g. "A2", "B3", "A1+~A1", "" for the empty
     subsystem.  Components are labelled by their Cartan type; when the
     subsystem mixes two root lengths, components made of the shorter
     roots are prefixed with "~".  Component labels are joined with "+"
     in string-sorted order. */
  const std::string& diagram_label() const { return diagram_label_; }

 private:
  Subsystem() = default;
  void finish(const RootSystem& phi);

  const RootSystem* phi_ = nullptr;
  std::vector<int> roots_;       // ascending
  std::vector<char> member_;     // size |Phi|
  std::vector<int> simple_;
  std::vector<int> generators_;
  std::vector<std::vector<int>> components_;
  std::string diagram_label_;
};

// Largest subsystem orthogonal to psi: all roots of the parent
// perpendicular to every root of psi.
Subsystem orthogonal_subsystem(const Subsystem& psi);

// Every subsystem of phi, deduplicated, sorted by (size, root set).
// Enumerated via linearly independent pairwise-obtuse subsets of Phi+,
// which hit every subsystem through its canonical simple system.
std::vector<Subsystem> all_subsystems(const RootSystem& phi);

}  // namespace garnir
