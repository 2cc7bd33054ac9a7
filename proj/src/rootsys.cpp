#include "garnir/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "garnir/errors.hpp"

namespace garnir {

namespace {

RootVector unit_diff(int dim, int i, int j) {  // e_i - e_j, 1-based
  std::vector<Rat> c(dim, Rat(0));
  c[i - 1] = 1;
  c[j - 1] = -1;
  return RootVector(std::move(c));
}

RootVector unit(int dim, int i, const Rat& scale) {
  std::vector<Rat> c(dim, Rat(0));
  c[i - 1] = scale;
  return RootVector(std::move(c));
}

/* Exact solve of g x = b for a square nonsingular system; used to express
   roots over the simple basis.  Sizes are at most the rank, so plain
   elimination with the first nonzero pivot is fine. */
std::vector<Rat> solve_square(std::vector<std::vector<Rat>> g, std::vector<Rat> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (g[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw invariant_error("singular system in root coordinate solve");
    std::swap(g[piv], g[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || g[r][col] == 0) continue;
      Rat f = g[r][col] / g[col][col];
      for (int c = col; c < n; ++c) g[r][c] -= f * g[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / g[i][i];
  return x;
}

long height(const std::vector<long>& coeffs) {
  long h = 0;
  for (long c : coeffs) h += c;
  return h;
}

// Rank of a set of vectors, by elimination. Exact.
int rank_of(std::vector<RootVector> vecs) {
  int rank = 0;
  const int dim = vecs.empty() ? 0 : vecs[0].dim();
  for (int col = 0; col < dim; ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(vecs.size()); ++r)
      if (vecs[r].coords[col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(vecs[piv], vecs[rank]);
    for (int r = rank + 1; r < static_cast<int>(vecs.size()); ++r) {
      if (vecs[r].coords[col] == 0) continue;
      Rat f = vecs[r].coords[col] / vecs[rank].coords[col];
      for (int c = col; c < dim; ++c) vecs[r].coords[c] -= f * vecs[rank].coords[c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool RootVector::is_zero() const {
  for (const Rat& c : coords)
    if (c != 0) return false;
  return true;
}

bool operator==(const RootVector& a, const RootVector& b) { return a.coords == b.coords; }
bool operator!=(const RootVector& a, const RootVector& b) { return !(a == b); }

bool operator<(const RootVector& a, const RootVector& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (int i = 0; i < a.dim(); ++i) {
    int c = cmp(a.coords[i], b.coords[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

RootVector operator+(const RootVector& a, const RootVector& b) {
  if (a.dim() != b.dim()) throw std::domain_error("vector dimension mismatch");
  RootVector r = a;
  for (int i = 0; i < r.dim(); ++i) r.coords[i] += b.coords[i];
  return r;
}

RootVector operator-(const RootVector& a, const RootVector& b) {
  if (a.dim() != b.dim()) throw std::domain_error("vector dimension mismatch");
  RootVector r = a;
  for (int i = 0; i < r.dim(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

RootVector operator-(const RootVector& a) {
  RootVector r = a;
  for (Rat& c : r.coords) c = -c;
  return r;
}

RootVector operator*(const Rat& c, const RootVector& a) {
  RootVector r = a;
  for (Rat& x : r.coords) x *= c;
  return r;
}

Rat inner(const RootVector& a, const RootVector& b) {
  if (a.dim() != b.dim()) throw std::domain_error("vector dimension mismatch");
  Rat s(0);
  for (int i = 0; i < a.dim(); ++i) s += a.coords[i] * b.coords[i];
  return s;
}

RootVector reflect(const RootVector& alpha, const RootVector& v) {
  if (alpha.dim() != v.dim()) throw std::domain_error("vector dimension mismatch");
  Rat aa = inner(alpha, alpha);
  if (aa == 0) throw std::domain_error("reflection in the zero vector");
  Rat f = 2 * inner(alpha, v) / aa;
  RootVector r = v;
  for (int i = 0; i < r.dim(); ++i) r.coords[i] -= f * alpha.coords[i];
  return r;
}

std::string coords_str(const RootVector& v) {
  std::string s = "(";
  for (int i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += rat_str(v.coords[i]);
  }
  s += ")";
  return s;
}

RootSystem RootSystem::build(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("bad root system label: '" + label + "'");
  char fam = label[0];
  const std::string rank_part = label.substr(1);
  for (char ch : rank_part)
    if (!isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("bad root system label: '" + label + "'");
  return build(fam, std::stoi(rank_part));
}

RootSystem RootSystem::build(char family, int rank) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("unsupported root system " + std::string(1, family) +
                                 std::to_string(rank) + ": " + why);
  };
  std::vector<RootVector> simples;
  int dim = 0;
  switch (family) {
    case 'A':
      if (rank < 1 || rank > 4) throw bad("rank must be 1..4");
      dim = rank + 1;
      for (int i = 1; i <= rank; ++i) simples.push_back(unit_diff(dim, i, i + 1));
      break;
    case 'B':
      if (rank < 2 || rank > 4) throw bad("rank must be 2..4");
      dim = rank;
      for (int i = 1; i < rank; ++i) simples.push_back(unit_diff(dim, i, i + 1));
      simples.push_back(unit(dim, rank, Rat(1)));
      break;
    case 'C':
      if (rank < 2 || rank > 4) throw bad("rank must be 2..4");
      dim = rank;
      for (int i = 1; i < rank; ++i) simples.push_back(unit_diff(dim, i, i + 1));
      simples.push_back(unit(dim, rank, Rat(2)));
      break;
    case 'D':
      if (rank < 2 || rank > 4) throw bad("rank must be 2..4");
      dim = rank;
      for (int i = 1; i < rank; ++i) simples.push_back(unit_diff(dim, i, i + 1));
      {
        std::vector<Rat> c(dim, Rat(0));
        c[rank - 2] = 1;
        c[rank - 1] = 1;
        simples.push_back(RootVector(std::move(c)));
      }
      break;
    case 'G': {
      if (rank != 2) throw bad("rank must be 2");
      dim = 3;
      simples.push_back(unit_diff(dim, 1, 2));
      std::vector<Rat> c = {Rat(-2), Rat(1), Rat(1)};
      simples.push_back(RootVector(std::move(c)));
      break;
    }
    default:
      throw bad("family must be one of A, B, C, D, G");
  }

  RootSystem phi;
  phi.family_ = family;
  phi.rank_ = rank;
  phi.ambient_dim_ = dim;
  phi.label_ = std::string(1, family) + std::to_string(rank);
  phi.close_and_index(std::move(simples));
  phi.check_invariants();
  return phi;
}

void RootSystem::close_and_index(std::vector<RootVector> simples) {
  std::set<RootVector> closure(simples.begin(), simples.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RootVector> snapshot(closure.begin(), closure.end());
    for (const RootVector& a : snapshot)
      for (const RootVector& b : snapshot) {
        RootVector r = reflect(a, b);
        if (closure.insert(r).second) grew = true;
      }
    if (closure.size() > 1000)
      throw invariant_error("root closure did not stabilize");
  }

  // Coefficients over the simple basis, via the Gram matrix.
  std::vector<std::vector<Rat>> gram(rank_, std::vector<Rat>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) gram[i][j] = inner(simples[i], simples[j]);

  struct Entry {
    RootVector vec;
    std::vector<long> coeffs;
  };
  std::vector<Entry> pos, neg;
  for (const RootVector& v : closure) {
    std::vector<Rat> b(rank_);
    for (int i = 0; i < rank_; ++i) b[i] = inner(simples[i], v);
    std::vector<Rat> x = solve_square(gram, std::move(b));
    std::vector<long> coeffs(rank_);
    bool nonneg = true, nonpos = true;
    for (int i = 0; i < rank_; ++i) {
      coeffs[i] = rat_to_long(x[i]);  // throws if a coordinate is fractional
      if (coeffs[i] > 0) nonpos = false;
      if (coeffs[i] < 0) nonneg = false;
    }
    RootVector recon(std::vector<Rat>(ambient_dim_, Rat(0)));
    for (int i = 0; i < rank_; ++i) recon = recon + Rat(coeffs[i]) * simples[i];
    if (recon != v) throw invariant_error("root does not lie in the simple-root lattice");
    if (nonneg && !nonpos)
      pos.push_back({v, std::move(coeffs)});
    else if (nonpos && !nonneg)
      neg.push_back({v, std::move(coeffs)});
    else
      throw invariant_error("root with mixed-sign coefficients");
  }
  if (pos.size() != neg.size()) throw invariant_error("positive/negative count mismatch");

  // Simple roots first in construction order, then by height and
  // coefficient vector; negatives mirror the positives.
  std::sort(pos.begin(), pos.end(), [&](const Entry& a, const Entry& b) {
    long sa = height(a.coeffs) == 1 && *std::max_element(a.coeffs.begin(), a.coeffs.end()) == 1 ? 0 : 1;
    long sb = height(b.coeffs) == 1 && *std::max_element(b.coeffs.begin(), b.coeffs.end()) == 1 ? 0 : 1;
    if (sa != sb) return sa < sb;
    if (sa == 0) {  // both simple: construction order = position of the 1
      int ia = static_cast<int>(std::find(a.coeffs.begin(), a.coeffs.end(), 1) - a.coeffs.begin());
      int ib = static_cast<int>(std::find(b.coeffs.begin(), b.coeffs.end(), 1) - b.coeffs.begin());
      return ia < ib;
    }
    long ha = height(a.coeffs), hb = height(b.coeffs);
    if (ha != hb) return ha < hb;
    return a.coeffs < b.coeffs;
  });

  num_positive_ = static_cast<int>(pos.size());
  roots_.clear();
  coeffs_.clear();
  for (const Entry& e : pos) {
    roots_.push_back(e.vec);
    coeffs_.push_back(e.coeffs);
  }
  for (int i = 0; i < num_positive_; ++i) {
    roots_.push_back(-roots_[i]);
    std::vector<long> c = coeffs_[i];
    for (long& x : c) x = -x;
    coeffs_.push_back(std::move(c));
  }

  const int n = size();
  reflect_table_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int v = 0; v < n; ++v) {
      int img = index_of(reflect(roots_[a], roots_[v]));
      if (img < 0) throw invariant_error("reflection left the root set");
      reflect_table_[a][v] = img;
    }
}

void RootSystem::check_invariants() const {
  const int n = size();
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
      int img = reflect_table_[a][v];
      if (seen[img]) throw invariant_error("reflection is not a permutation of the roots");
      seen[img] = 1;
      if (reflect_table_[a][img] != v) throw invariant_error("reflection is not an involution");
    }
    if (reflect_table_[a][a] != negate(a)) throw invariant_error("reflection fails to negate its root");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Rat cartan = 2 * inner(roots_[a], roots_[b]) / norm2(b);
      if (cartan.get_den() != 1) throw invariant_error("non-integral Cartan number");
    }
}

int RootSystem::negate(int idx) const {
  if (idx < 0 || idx >= size()) throw std::domain_error("root index out of range");
  return idx < num_positive_ ? idx + num_positive_ : idx - num_positive_;
}

int RootSystem::index_of(const RootVector& v) const {
  for (int i = 0; i < size(); ++i)
    if (roots_[i] == v) return i;
  return -1;
}

int RootSystem::reflect_root(int alpha_idx, int v_idx) const {
  return reflect_table_.at(alpha_idx).at(v_idx);
}

const std::vector<long>& RootSystem::simple_coeffs(int idx) const { return coeffs_.at(idx); }

std::string RootSystem::coeff_str(int idx) const {
  std::string s;
  for (long c : coeffs_.at(idx)) {
    if (c < -9 || c > 9) throw invariant_error("coefficient notation needs single digits");
    if (c < 0) {
      s += '-';
      c = -c;
    }
    s += static_cast<char>('0' + c);
  }
  return s;
}

int RootSystem::parse_coeff_str(const std::string& token) const {
  std::vector<long> coeffs;
  for (size_t i = 0; i < token.size();) {
    long sign = 1;
    if (token[i] == '-') {
      sign = -1;
      ++i;
    }
    if (i >= token.size() || !isdigit(static_cast<unsigned char>(token[i])))
      throw std::domain_error("bad root token '" + token + "' for " + label_);
    coeffs.push_back(sign * (token[i] - '0'));
    ++i;
  }
  if (static_cast<int>(coeffs.size()) != rank_)
    throw std::domain_error("root token '" + token + "' has " + std::to_string(coeffs.size()) +
                            " coefficients; " + label_ + " needs " + std::to_string(rank_));
  RootVector v(std::vector<Rat>(ambient_dim_, Rat(0)));
  for (int i = 0; i < rank_; ++i) v = v + Rat(coeffs[i]) * roots_[i];
  int idx = index_of(v);
  if (idx < 0) throw std::domain_error("'" + token + "' is not a root of " + label_);
  return idx;
}

Rat RootSystem::norm2(int idx) const { return inner(roots_.at(idx), roots_.at(idx)); }

namespace {

/* Positive members of `member` that are not sums of two positive members:
   the canonical simple system of the subsystem the set forms. */
std::vector<int> indecomposable_positives(const RootSystem& phi, const std::vector<char>& member) {
  std::vector<int> positives;
  for (int i = 0; i < phi.num_positive(); ++i)
    if (member[i]) positives.push_back(i);
  std::vector<int> simple;
  for (int p : positives) {
    bool decomposable = false;
    for (int q : positives) {
      if (q == p) continue;
      int r = phi.index_of(phi.root(p) - phi.root(q));
      if (r >= 0 && r < phi.num_positive() && member[r]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(p);
  }
  return simple;
}

std::string component_type(const RootSystem& phi, const std::vector<int>& comp) {
  const int k = static_cast<int>(comp.size());
  if (k == 1) return "A1";
  auto bond = [&](int a, int b) {
    Rat ip = inner(phi.root(a), phi.root(b));
    return rat_to_long(4 * ip * ip / (phi.norm2(a) * phi.norm2(b)));
  };
  if (k == 2) {
    switch (bond(comp[0], comp[1])) {
      case 1: return "A2";
      case 2: return "B2";
      case 3: return "G2";
      default: throw invariant_error("unexpected bond in rank-2 component");
    }
  }
  // Tree structure from pairwise non-orthogonality.
  std::vector<std::vector<int>> adj(k);
  int edges = 0;
  int double_a = -1, double_b = -1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (inner(phi.root(comp[i]), phi.root(comp[j])) == 0) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
      if (bond(comp[i], comp[j]) == 2) {
        double_a = i;
        double_b = j;
      } else if (bond(comp[i], comp[j]) != 1) {
        throw invariant_error("unexpected bond multiplicity in component");
      }
    }
  if (edges != k - 1) throw invariant_error("component diagram is not a tree");
  bool branch = false;
  for (int i = 0; i < k; ++i)
    if (adj[i].size() == 3) branch = true;
  if (branch) {
    if (k == 4 && double_a < 0) return "D4";
    throw invariant_error("unsupported branched component");
  }
  if (double_a < 0) return k == 3 ? "A3" : "A4";
  // One double bond on a chain; it must sit at an end here.
  int end = adj[double_a].size() == 1 ? double_a : double_b;
  int other = end == double_a ? double_b : double_a;
  if (adj[end].size() != 1) throw invariant_error("unsupported interior double bond");
  bool short_end = phi.norm2(comp[end]) < phi.norm2(comp[other]);
  if (k == 3) return short_end ? "B3" : "C3";
  return short_end ? "B4" : "C4";
}

}  // namespace

Subsystem Subsystem::from_simples(const RootSystem& phi, const std::vector<int>& J) {
  for (int j : J) {
    if (j < 0 || j >= phi.size()) throw std::domain_error("root index out of range");
    if (!phi.is_positive(j)) throw std::domain_error("subsystem generators must be positive roots");
  }
  for (size_t a = 0; a < J.size(); ++a)
    for (size_t b = a + 1; b < J.size(); ++b)
      if (J[a] == J[b]) throw std::domain_error("proportional generators in subsystem");

  Subsystem psi;
  psi.phi_ = &phi;
  psi.generators_ = J;
  psi.member_.assign(phi.size(), 0);
  for (int j : J) psi.member_[j] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot;
    for (int i = 0; i < phi.size(); ++i)
      if (psi.member_[i]) snapshot.push_back(i);
    for (int a : snapshot)
      for (int v : snapshot) {
        int img = phi.reflect_root(a, v);
        if (!psi.member_[img]) {
          psi.member_[img] = 1;
          grew = true;
        }
      }
  }
  psi.finish(phi);
  return psi;
}

Subsystem Subsystem::from_coeff_strings(const RootSystem& phi,
                                        const std::vector<std::string>& tokens) {
  std::vector<int> J;
  for (const std::string& t : tokens) J.push_back(phi.parse_coeff_str(t));
  return from_simples(phi, J);
}

Subsystem Subsystem::full(const RootSystem& phi) {
  std::vector<int> J;
  for (int k = 0; k < phi.rank(); ++k) J.push_back(k);
  return from_simples(phi, J);
}

Subsystem Subsystem::empty(const RootSystem& phi) { return from_simples(phi, {}); }

void Subsystem::finish(const RootSystem& phi) {
  roots_.clear();
  for (int i = 0; i < phi.size(); ++i)
    if (member_[i]) roots_.push_back(i);

  std::vector<int> canonical = indecomposable_positives(phi, member_);
  // Keep the caller's order when the generators are exactly the canonical
  // simple system; otherwise use the canonical roots in index order.
  std::vector<int> gen_sorted = generators_, can_sorted = canonical;
  std::sort(gen_sorted.begin(), gen_sorted.end());
  std::sort(can_sorted.begin(), can_sorted.end());
  simple_ = (gen_sorted == can_sorted) ? generators_ : can_sorted;

  // Components of the Coxeter graph on the simple roots.
  const int k = static_cast<int>(simple_.size());
  std::vector<int> comp_of(k, -1);
  components_.clear();
  for (int s = 0; s < k; ++s) {
    if (comp_of[s] >= 0) continue;
    std::vector<int> stack = {s}, comp;
    comp_of[s] = static_cast<int>(components_.size());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y = 0; y < k; ++y)
        if (comp_of[y] < 0 && inner(phi.root(simple_[x]), phi.root(simple_[y])) != 0) {
          comp_of[y] = comp_of[s];
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<int> comp_roots;
    for (int x : comp) comp_roots.push_back(simple_[x]);
    components_.push_back(std::move(comp_roots));
  }

  // Diagram label; short components of a mixed-length subsystem get "~".
  Rat max_norm(0);
  for (const auto& comp : components_)
    for (int r : comp) max_norm = std::max(max_norm, phi.norm2(r));
  std::vector<std::string> labels;
  for (const auto& comp : components_) {
    Rat comp_norm(0);
    for (int r : comp) comp_norm = std::max(comp_norm, phi.norm2(r));
    std::string t = component_type(phi, comp);
    if (comp_norm < max_norm) t = "~" + t;
    labels.push_back(t);
  }
  std::sort(labels.begin(), labels.end());
  diagram_label_.clear();
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) diagram_label_ += "+";
    diagram_label_ += labels[i];
  }
}

bool Subsystem::contains(int root_idx) const {
  if (root_idx < 0 || root_idx >= static_cast<int>(member_.size()))
    throw std::domain_error("root index out of range");
  return member_[root_idx] != 0;
}

bool Subsystem::same_roots(const Subsystem& other) const {
  return phi_ == other.phi_ && roots_ == other.roots_;
}

Subsystem orthogonal_subsystem(const Subsystem& psi) {
  const RootSystem& phi = psi.parent();
  std::vector<char> member(phi.size(), 1);
  for (int i = 0; i < phi.size(); ++i)
    for (int s : psi.simple())
      if (inner(phi.root(i), phi.root(s)) != 0) {
        member[i] = 0;
        break;
      }
  return Subsystem::from_simples(phi, indecomposable_positives(phi, member));
}

std::vector<Subsystem> all_subsystems(const RootSystem& phi) {
  std::vector<Subsystem> out;
  std::set<std::vector<int>> seen;
  std::vector<int> pick;

  /* Candidate simple systems: independent pairwise-obtuse subsets of the
     positive roots.  Every subsystem shows up through its canonical simple
     system, which has both properties; duplicates are dropped by root set. */
  auto emit = [&]() {
    std::vector<RootVector> vecs;
    for (int i : pick) vecs.push_back(phi.root(i));
    if (rank_of(vecs) != static_cast<int>(pick.size())) return;
    Subsystem psi = Subsystem::from_simples(phi, pick);
    if (seen.insert(psi.roots()).second) out.push_back(std::move(psi));
  };
  auto rec = [&](auto&& self, int next) -> void {
    emit();
    if (static_cast<int>(pick.size()) == phi.rank()) return;
    for (int cand = next; cand < phi.num_positive(); ++cand) {
      bool obtuse = true;
      for (int p : pick)
        if (inner(phi.root(p), phi.root(cand)) > 0) {
          obtuse = false;
          break;
        }
      if (!obtuse) continue;
      pick.push_back(cand);
      self(self, cand + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [](const Subsystem& a, const Subsystem& b) {
    if (a.num_roots() != b.num_roots()) return a.num_roots() < b.num_roots();
    return a.roots() < b.roots();
  });
  return out;
}

}  // namespace garnir
