#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "garnir/specht.hpp"

/* Relations that annihilate a polytabloid.

   Fix a classified pair and a distinguished column representative d.
   Pick an auxiliary subsystem with simple system J*.  Whenever the
   product set W(J*)W(dJ') admits a fixed-point-free involution w -> w
   rho_w through sign -1 involutions rho_w of the moved row group W(dJ),
   the signed sum over W(J*) kills e_{dJ,dJ'}.  Dividing out
   H = W(J*) n W(dJ') leaves the Garnir element, a signed sum over coset
   representatives, and the identity it induces rewrites e_{dJ,dJ'} in
   terms of polytabloids at shorter representatives.
*/

namespace garnir {

// {uv : u in U, v in V}, deduplicated, in (length, key) order.  Inputs
// are arbitrary element sets of one group.
std::vector<int> product_set(const WeylGroup& w, const std::vector<int>& u,
                             const std::vector<int>& v);
std::vector<int> product_set(const Subgroup& u, const Subgroup& v);

// Both sides of the product identity
//   (sum_U s(u) u)(sum_V s(v) v) = |U n V| sum_{UV} s(y) y
// for subgroups U, V.  The left side is computed by full convolution,
// the right from the product set, so comparing them is a real check.
// Inputs failing the closure test are rejected.
std::pair<AlgebraElement, AlgebraElement> peel_product(const WeylGroup& w,
                                                       const std::vector<int>& u,
                                                       const std::vector<int>& v);
std::pair<AlgebraElement, AlgebraElement> peel_product(const Subgroup& u, const Subgroup& v);

// Everything the relation machinery needs about one (pair, d, J*)
// choice.  Built by make_context; fields are immutable afterwards.
struct GarnirContext {
  const SystemPair* pair;
  Element d;          // member of D_Psi'
  Subsystem j_star;
  Subgroup star;      // W(J*)
  Subgroup moved_rows;  // W(dJ)
  Subgroup moved_cols;  // W(dJ')
  Subgroup h;         // W(J*) n W(dJ')
  std::vector<Element> c;  // left coset reps of h in star, shortest first,
                           // identity leading
  std::vector<int> y;      // product set W(J*) W(dJ')

  const WeylGroup& group() const { return pair->group(); }
};

// Validates d against the column system and assembles the subgroup,
// coset, and product-set data.
GarnirContext make_context(const SystemPair& pair, const Element& d,
                           const Subsystem& j_star);

// A fixed-point-free involution w -> w rho_w on the product set, with
// every rho_w a sign -1 involution of the moved row group.
struct Pairing {
  bool global = false;               // one rho serves every w
  std::optional<Element> global_rho;
  std::map<int, int> partner;        // w -> w rho_w
  std::map<int, int> rho;            // w -> rho_w
};

// Searches the product set for a pairing: first a single global rho,
// then a backtracking perfect matching.  Absence is a value; an odd
// product set or an empty candidate list short-circuits.
std::optional<Pairing> find_pairing(const GarnirContext& ctx);

// The signed sum over W(J*) applied to e_{dJ,dJ'}, unconditionally.
ModuleVector annihilation_residual(const GarnirContext& ctx);

// Asserts the residual vanishes.  Demands a pairing first; a nonzero
// residual under a valid pairing is an internal defect.
bool verify_annihilation(const GarnirContext& ctx);

// Signed sum over the coset representatives c.
AlgebraElement garnir_element(const GarnirContext& ctx);

// "e(J,J')" for the identity, otherwise "e(<word> J, <word> J')".
std::string polytabloid_label(const Element& w);

// One term of the rewritten right side: sigma runs over the nonidentity
// coset representatives, and sigma d reduces to the distinguished rep
// with the stated coefficient.
struct StraightenTerm {
  Element sigma;
  Element rep;
  Rat coeff;
};

struct StraightenReport {
  ModuleVector lhs;  // e_{dJ,dJ'}
  ModuleVector rhs;  // -(sum over c minus identity of s(sigma) sigma) e_{dJ,dJ'}
  std::vector<StraightenTerm> terms;
  std::map<int, Rat> collected;  // right side by distinguished rep
  std::string collected_str;
  // The same vector resolved against the common-representative
  // polytabloids, when they determine it uniquely.
  std::optional<std::map<int, Rat>> standard;
  std::optional<std::string> standard_str;
};

// Evaluates both sides of the rewriting identity, reduces each term to
// its distinguished representative, and resolves the standard form.
// Unequal sides under a valid pairing are an internal defect.
StraightenReport straighten(const GarnirContext& ctx);

}  // namespace garnir
