#include "garnir/garnir.hpp"

#include <algorithm>
#include <stdexcept>

#include "garnir/errors.hpp"

namespace garnir {

std::vector<int> product_set(const WeylGroup& w, const std::vector<int>& u,
                             const std::vector<int>& v) {
  std::vector<char> seen(w.order(), 0);
  for (int a : u)
    for (int b : v) seen[w.compose(a, b)] = 1;
  std::vector<int> out;
  for (std::size_t i = 0; i < w.order(); ++i)
    if (seen[i]) out.push_back(static_cast<int>(i));
  return w.sorted(std::move(out));
}

std::vector<int> product_set(const Subgroup& u, const Subgroup& v) {
  if (&u.group() != &v.group()) throw std::domain_error("subgroups of different groups");
  return product_set(u.group(), u.elements(), v.elements());
}

std::pair<AlgebraElement, AlgebraElement> peel_product(const WeylGroup& w,
                                                       const std::vector<int>& u,
                                                       const std::vector<int>& v) {
  if (!closed_under_product(w, u) || !closed_under_product(w, v))
    throw std::domain_error("input set is not a subgroup");

  AlgebraElement lhs = AlgebraElement::signed_sum(w, u) * AlgebraElement::signed_sum(w, v);

  std::vector<char> in_u(w.order(), 0);
  for (int a : u) in_u[a] = 1;
  int common = 0;
  for (int b : v)
    if (in_u[b]) ++common;

  AlgebraElement rhs = AlgebraElement::signed_sum(w, product_set(w, u, v));
  rhs *= Rat(common);
  return {std::move(lhs), std::move(rhs)};
}

std::pair<AlgebraElement, AlgebraElement> peel_product(const Subgroup& u, const Subgroup& v) {
  if (&u.group() != &v.group()) throw std::domain_error("subgroups of different groups");
  return peel_product(u.group(), u.elements(), v.elements());
}

GarnirContext make_context(const SystemPair& pair, const Element& d,
                           const Subsystem& j_star) {
  const WeylGroup& w = pair.group();
  const RootSystem& phi = w.roots();
  if (&d.group() != &w) throw std::domain_error("representative from a different group");
  if (&j_star.parent() != &phi)
    throw std::domain_error("auxiliary subsystem from a different root system");
  for (int j : pair.psi_prime().simple())
    if (!phi.is_positive(d.apply(j)))
      throw std::domain_error(
          "the representative must send the column simple system to positive roots; "
          "reduce w = d rho against the column group first");

  Subgroup star = Subgroup::from_roots(w, j_star.simple());
  std::vector<int> dj, djp;
  for (int r : pair.psi().simple()) dj.push_back(d.apply(r));
  for (int r : pair.psi_prime().simple()) djp.push_back(d.apply(r));
  Subgroup moved_rows = Subgroup::from_roots(w, dj);
  Subgroup moved_cols = Subgroup::from_roots(w, djp);
  Subgroup h = Subgroup::intersection(star, moved_cols);

  std::vector<Element> c;
  std::vector<char> assigned(w.order(), 0);
  for (int x : w.sorted(star.elements())) {
    if (assigned[x]) continue;
    c.push_back(w.element(x));
    for (int y : h.elements()) assigned[w.compose(x, y)] = 1;
  }
  if (c.empty() || c.front().length() != 0)
    throw invariant_error("coset listing lost the identity");
  if (c.size() * h.order() != star.order())
    throw invariant_error("cosets fail to partition the auxiliary group");

  std::vector<int> y = product_set(star, moved_cols);
  return GarnirContext{&pair,     d, j_star,       std::move(star), std::move(moved_rows),
                       std::move(moved_cols), std::move(h), std::move(c), std::move(y)};
}

namespace {

bool extend_matching(const std::vector<int>& order,
                     const std::map<int, std::vector<std::pair<int, int>>>& adj,
                     std::map<int, int>& partner, std::map<int, int>& rho) {
  int u = -1;
  for (int v : order)
    if (!partner.count(v)) {
      u = v;
      break;
    }
  if (u < 0) return true;
  auto it = adj.find(u);
  if (it == adj.end()) return false;
  for (const auto& [v, r] : it->second) {
    if (partner.count(v)) continue;
    partner[u] = v;
    partner[v] = u;
    rho[u] = r;
    rho[v] = r;
    if (extend_matching(order, adj, partner, rho)) return true;
    partner.erase(u);
    partner.erase(v);
    rho.erase(u);
    rho.erase(v);
  }
  return false;
}

}  // namespace

std::optional<Pairing> find_pairing(const GarnirContext& ctx) {
  const WeylGroup& w = ctx.group();
  if (ctx.y.size() % 2) return std::nullopt;

  std::vector<int> candidates;
  for (int r : ctx.moved_rows.elements())
    if (w.sign(r) == -1 && w.compose(r, r) == w.identity().index()) candidates.push_back(r);
  candidates = w.sorted(std::move(candidates));
  if (candidates.empty()) return std::nullopt;

  std::vector<char> in_y(w.order(), 0);
  for (int v : ctx.y) in_y[v] = 1;

  for (int r : candidates) {
    bool stable = true;
    for (int v : ctx.y)
      if (!in_y[w.compose(v, r)]) {
        stable = false;
        break;
      }
    if (!stable) continue;
    Pairing p;
    p.global = true;
    p.global_rho = w.element(r);
    for (int v : ctx.y) {
      p.partner[v] = w.compose(v, r);
      p.rho[v] = r;
    }
    return p;
  }

  std::map<int, std::vector<std::pair<int, int>>> adj;
  for (int v : ctx.y)
    for (int r : candidates) {
      int v2 = w.compose(v, r);
      if (in_y[v2]) adj[v].emplace_back(v2, r);
    }
  Pairing p;
  if (!extend_matching(ctx.y, adj, p.partner, p.rho)) return std::nullopt;
  return p;
}

ModuleVector annihilation_residual(const GarnirContext& ctx) {
  return kappa(ctx.star).apply(polytabloid(ctx.d, *ctx.pair));
}

bool verify_annihilation(const GarnirContext& ctx) {
  if (!find_pairing(ctx))
    throw precondition_error("annihilation is only asserted under a pairing witness");
  if (!annihilation_residual(ctx).is_zero())
    throw invariant_error("annihilation failed under a valid pairing");
  return true;
}

AlgebraElement garnir_element(const GarnirContext& ctx) {
  std::vector<int> reps;
  for (const Element& e : ctx.c) reps.push_back(e.index());
  return AlgebraElement::signed_sum(ctx.group(), reps);
}

std::string polytabloid_label(const Element& w) {
  if (w.length() == 0) return "e(J,J')";
  std::string ws = w.word_str();
  return "e(" + ws + " J, " + ws + " J')";
}

namespace {

// Unique exact solution x of A x = b, with A given by columns; absent
// when the columns are dependent or b lies outside their span.
std::optional<std::vector<Rat>> solve_columns(const std::vector<ModuleVector>& cols,
                                              const ModuleVector& b, int dim) {
  const int m = static_cast<int>(cols.size());
  std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(m + 1, Rat(0)));
  for (int i = 0; i < m; ++i)
    for (const auto& [p, coef] : cols[i].terms()) a[p][i] = coef;
  for (const auto& [p, coef] : b.terms()) a[p][m] = coef;

  std::vector<int> where(m, -1);
  int row = 0;
  for (int col = 0; col < m && row < dim; ++col) {
    int sel = -1;
    for (int i = row; i < dim; ++i)
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[sel], a[row]);
    Rat inv = Rat(1) / a[row][col];
    for (int j = col; j <= m; ++j) a[row][j] *= inv;
    for (int i = 0; i < dim; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = col; j <= m; ++j) a[i][j] -= f * a[row][j];
    }
    where[col] = row;
    ++row;
  }
  for (int col = 0; col < m; ++col)
    if (where[col] < 0) return std::nullopt;
  for (int i = row; i < dim; ++i)
    if (a[i][m] != 0) return std::nullopt;
  std::vector<Rat> x(m, Rat(0));
  for (int col = 0; col < m; ++col) x[col] = a[where[col]][m];
  return x;
}

}  // namespace

StraightenReport straighten(const GarnirContext& ctx) {
  if (!find_pairing(ctx))
    throw precondition_error("straightening is only asserted under a pairing witness");
  const WeylGroup& w = ctx.group();
  const SystemPair& pair = *ctx.pair;

  ModuleVector lhs = polytabloid(ctx.d, pair);
  AlgebraElement flip(w);
  for (std::size_t i = 1; i < ctx.c.size(); ++i)
    flip.add(ctx.c[i].index(), -w.sign(ctx.c[i].index()));
  ModuleVector rhs = flip.apply(lhs);
  if (lhs != rhs) throw invariant_error("straightening identity failed");

  std::vector<StraightenTerm> terms;
  std::map<int, Rat> collected;
  for (std::size_t i = 1; i < ctx.c.size(); ++i) {
    const Element& sigma = ctx.c[i];
    auto [rep, tail] = decompose(sigma * ctx.d, pair.psi_prime());
    Rat coeff(-sigma.sign() * tail.sign());
    terms.push_back(StraightenTerm{sigma, rep, coeff});
    collected[rep.index()] += coeff;
    if (collected[rep.index()] == 0) collected.erase(rep.index());
  }

  ModuleVector recheck(pair.space());
  for (const auto& [e, coef] : collected) {
    ModuleVector part = polytabloid(w.element(e), pair);
    part *= coef;
    recheck += part;
  }
  if (recheck != rhs) throw invariant_error("collected form disagrees with the right side");

  std::vector<int> keys;
  for (const auto& [e, coef] : collected) keys.push_back(e);
  keys = w.sorted(std::move(keys));
  std::vector<std::pair<std::string, Rat>> parts;
  for (int e : keys) parts.emplace_back(polytabloid_label(w.element(e)), collected.at(e));
  std::string collected_str = signed_sum_str(parts);

  std::optional<std::map<int, Rat>> standard;
  std::optional<std::string> standard_str;
  std::vector<ModuleVector> basis;
  for (int e : pair.common_reps()) basis.push_back(polytabloid(w.element(e), pair));
  if (auto x = solve_columns(basis, rhs, pair.space().size())) {
    std::map<int, Rat> by_rep;
    std::vector<std::pair<std::string, Rat>> sparts;
    for (std::size_t i = 0; i < x->size(); ++i) {
      if ((*x)[i] == 0) continue;
      int e = pair.common_reps()[i];
      by_rep[e] = (*x)[i];
      sparts.emplace_back(polytabloid_label(w.element(e)), (*x)[i]);
    }
    standard = std::move(by_rep);
    standard_str = signed_sum_str(sparts);
  }

  return StraightenReport{std::move(lhs),       std::move(rhs),          std::move(terms),
                          std::move(collected), std::move(collected_str), std::move(standard),
                          std::move(standard_str)};
}

}  // namespace garnir
