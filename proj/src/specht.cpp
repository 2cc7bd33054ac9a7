#include "garnir/specht.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "garnir/errors.hpp"

namespace garnir {

namespace {

void check_same_space(const ModuleVector& a, const ModuleVector& b) {
  if (&a.space() != &b.space()) throw std::domain_error("vectors from different spaces");
}

void check_same_group(const AlgebraElement& a, const AlgebraElement& b) {
  if (&a.group() != &b.group()) throw std::domain_error("algebra elements of different groups");
}

}  // namespace

std::string signed_sum_str(const std::vector<std::pair<std::string, Rat>>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    const Rat& c = parts[i].second;
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1) out += rat_str(mag) + " ";
    out += parts[i].first;
  }
  return out;
}

ModuleVector ModuleVector::unit(const Tabloid& t) {
  ModuleVector v(t.space());
  v.add(t.index(), 1);
  return v;
}

Rat ModuleVector::coeff(int pos) const {
  auto it = coeffs_.find(pos);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void ModuleVector::add(int pos, const Rat& v) {
  if (pos < 0 || pos >= static_cast<int>(space_->size()))
    throw std::domain_error("tabloid position out of range");
  auto it = coeffs_.find(pos);
  if (it == coeffs_.end()) {
    if (v != 0) coeffs_.emplace(pos, v);
    return;
  }
  it->second += v;
  if (it->second == 0) coeffs_.erase(it);
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  check_same_space(*this, o);
  for (const auto& [pos, c] : o.coeffs_) add(pos, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  check_same_space(*this, o);
  for (const auto& [pos, c] : o.coeffs_) add(pos, -c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [pos, v] : coeffs_) v *= c;
  return *this;
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  ModuleVector r = *this;
  r += o;
  return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
  ModuleVector r = *this;
  r -= o;
  return r;
}

ModuleVector ModuleVector::operator-() const {
  ModuleVector r = *this;
  r *= Rat(-1);
  return r;
}

bool ModuleVector::operator==(const ModuleVector& o) const {
  return space_ == o.space_ && coeffs_ == o.coeffs_;
}

std::string ModuleVector::str() const {
  std::vector<std::pair<std::string, Rat>> parts;
  for (const auto& [pos, c] : coeffs_)
    parts.emplace_back(Tabloid(space_, pos).display(), c);
  return signed_sum_str(parts);
}

AlgebraElement AlgebraElement::identity(const WeylGroup& w) {
  AlgebraElement a(w);
  a.add(0, 1);
  return a;
}

AlgebraElement AlgebraElement::unit(const Element& x) {
  AlgebraElement a(x.group());
  a.add(x.index(), 1);
  return a;
}

AlgebraElement AlgebraElement::signed_sum(const WeylGroup& w, const std::vector<int>& elems) {
  AlgebraElement a(w);
  for (int e : elems) a.add(e, w.sign(e));
  return a;
}

Rat AlgebraElement::coeff(int elem) const {
  auto it = terms_.find(elem);
  return it == terms_.end() ? Rat(0) : it->second;
}

void AlgebraElement::add(int elem, const Rat& v) {
  if (elem < 0 || elem >= static_cast<int>(w_->order()))
    throw std::domain_error("element index out of range");
  auto it = terms_.find(elem);
  if (it == terms_.end()) {
    if (v != 0) terms_.emplace(elem, v);
    return;
  }
  it->second += v;
  if (it->second == 0) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same_group(*this, o);
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same_group(*this, o);
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r += o;
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r -= o;
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_same_group(*this, o);
  AlgebraElement r(*w_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) r.add(w_->compose(a, b), ca * cb);
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return w_ == o.w_ && terms_ == o.terms_;
}

ModuleVector AlgebraElement::apply(const ModuleVector& m) const {
  if (&m.space().group() != w_)
    throw std::domain_error("vector lives over a different group");
  ModuleVector out(m.space());
  for (const auto& [e, c] : terms_) {
    Element sigma = w_->element(e);
    for (const auto& [pos, v] : m.terms())
      out.add(m.space().act(sigma, Tabloid(&m.space(), pos)).index(), c * v);
  }
  return out;
}

std::string AlgebraElement::str() const {
  std::vector<int> order;
  for (const auto& [e, c] : terms_) order.push_back(e);
  std::sort(order.begin(), order.end(), [this](int a, int b) { return w_->elem_less(a, b); });
  std::vector<std::pair<std::string, Rat>> parts;
  for (int e : order) parts.emplace_back(w_->element(e).word_str(), coeff(e));
  return signed_sum_str(parts);
}

AlgebraElement kappa(const WeylGroup& w, const std::vector<int>& root_indices) {
  return kappa(Subgroup::from_roots(w, root_indices));
}

AlgebraElement kappa(const Subgroup& h) {
  return AlgebraElement::signed_sum(h.group(), h.elements());
}

SystemPair::SystemPair(const WeylGroup& w, Subsystem psi, Subsystem psi_prime)
    : space_(w, std::move(psi), std::move(psi_prime)),
      psi_perp_(orthogonal_subsystem(space_.rows())),
      psi_prime_perp_(orthogonal_subsystem(space_.cols())),
      col_group_(Subgroup::from_roots(w, space_.cols().simple())) {
  for (int r : space_.cols().roots())
    if (space_.rows().contains(r))
      throw std::domain_error("column system must lie outside the row system");
  col_reps_ = distinguished_reps(w, space_.cols());
  std::set<int> cols(col_reps_.begin(), col_reps_.end());
  for (int d : space_.reps())
    if (cols.count(d)) common_reps_.push_back(d);
  common_reps_ = w.sorted(common_reps_);
}

bool SystemPair::is_useful() const {
  if (useful_) return *useful_;
  const WeylGroup& w = group();
  bool ok = Subgroup::intersection(row_group(), col_group()).order() == 1;
  if (ok) {
    Subgroup perp = Subgroup::from_roots(w, psi_perp_.simple());
    Subgroup perp_prime = Subgroup::from_roots(w, psi_prime_perp_.simple());
    ok = Subgroup::intersection(perp, perp_prime).order() == 1;
  }
  useful_ = ok;
  return ok;
}

bool SystemPair::is_good() const {
  if (good_) return *good_;
  if (!is_useful()) throw precondition_error("good is only defined for useful systems");
  const WeylGroup& w = group();
  ModuleVector e0 = polytabloid(w.identity(), *this);
  bool ok = true;
  const std::vector<int>& reps = space_.reps();
  for (size_t p = 0; p < reps.size() && ok; ++p) {
    bool disjoint = true;
    for (int r : psi().roots())
      if (psi_prime().contains(w.act_root(reps[p], r))) {
        disjoint = false;
        break;
      }
    if (disjoint && e0.coeff(static_cast<int>(p)) == 0) ok = false;
  }
  good_ = ok;
  return ok;
}

bool SystemPair::is_very_good(RepOrder order) const {
  auto& cache = order == RepOrder::bruhat ? vg_bruhat_ : vg_length_;
  if (cache) return *cache;
  if (!is_good()) throw precondition_error("very good is only defined for good systems");
  const WeylGroup& w = group();
  std::set<int> rep_set(space_.reps().begin(), space_.reps().end());
  bool ok = true;
  for (int d : common_reps_) {
    for (int sigma : col_group().elements()) {
      for (int rho : row_group().elements()) {
        int dp = w.compose(w.compose(d, sigma), rho);
        if (!rep_set.count(dp)) continue;
        bool le = order == RepOrder::bruhat
                      ? bruhat_leq(w.element(d), w.element(dp))
                      : length_leq(w.element(d), w.element(dp));
        if (!le) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  cache = ok;
  return ok;
}

int SystemPair::specht_rank_cached() const {
  if (!rank_) rank_ = specht_span(*this).rank;
  return *rank_;
}

bool SystemPair::is_perfect(RepOrder order) const {
  if (!is_very_good(order))
    throw precondition_error("perfect is only defined for very good systems");
  std::vector<ModuleVector> gens;
  for (int d : common_reps_) gens.push_back(polytabloid(group().element(d), *this));
  int gen_rank = static_cast<int>(echelon(std::move(gens)).size());
  return gen_rank == static_cast<int>(common_reps_.size()) &&
         gen_rank == specht_rank_cached();
}

ModuleVector polytabloid(const Element& w, const SystemPair& pair) {
  if (&w.group() != &pair.group()) throw std::domain_error("element of a different group");
  std::vector<int> moved_cols;
  for (int r : pair.space().col_roots()) moved_cols.push_back(w.apply(r));
  AlgebraElement k = kappa(pair.group(), moved_cols);
  return k.apply(ModuleVector::unit(pair.space().tabloid(w)));
}

std::vector<ModuleVector> echelon(std::vector<ModuleVector> vectors) {
  std::vector<ModuleVector> rows;
  for (ModuleVector& v : vectors) {
    for (const ModuleVector& r : rows) {
      if (v.is_zero()) break;
      int pivot = r.terms().begin()->first;
      Rat c = v.coeff(pivot);
      if (c != 0) v -= ModuleVector(r) *= c;
    }
    if (v.is_zero()) continue;
    int pivot = v.terms().begin()->first;
    v *= Rat(1) / v.coeff(pivot);
    for (ModuleVector& r : rows) {
      Rat c = r.coeff(pivot);
      if (c != 0) r -= ModuleVector(v) *= c;
    }
    rows.push_back(std::move(v));
  }
  std::sort(rows.begin(), rows.end(), [](const ModuleVector& a, const ModuleVector& b) {
    return a.terms().begin()->first < b.terms().begin()->first;
  });
  return rows;
}

SpanResult specht_span(const SystemPair& pair) {
  std::vector<ModuleVector> vs;
  for (std::size_t i = 0; i < pair.group().order(); ++i)
    vs.push_back(polytabloid(pair.group().element(static_cast<int>(i)), pair));
  SpanResult out;
  out.basis = echelon(std::move(vs));
  out.rank = static_cast<int>(out.basis.size());
  return out;
}

}  // namespace garnir
