#include "garnir/tableaux.hpp"

#include <stdexcept>

#include "garnir/errors.hpp"

namespace garnir {

namespace {
const Subsystem& same_system(const WeylGroup& w, const Subsystem& s) {
  if (&s.parent() != &w.roots()) throw std::domain_error("subsystem of a different root system");
  return s;
}
}  // namespace

std::string Tableau::display(const RootSystem& phi) const {
  std::string s = "{";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ',';
    s += phi.coeff_str(rows[i]);
  }
  s += ';';
  for (size_t i = 0; i < cols.size(); ++i) {
    if (i) s += ',';
    s += phi.coeff_str(cols[i]);
  }
  s += '}';
  return s;
}

Element Tabloid::rep() const { return space_->group().element(space_->reps().at(pos_)); }

std::string Tabloid::display() const {
  return space_->make_tableau(rep()).display(space_->group().roots());
}

TabloidSpace::TabloidSpace(const WeylGroup& w, Subsystem psi, Subsystem psi_prime)
    : w_(&w),
      psi_(std::move(psi)),
      psi_prime_(std::move(psi_prime)),
      w_psi_(Subgroup::from_roots(w, same_system(w, psi_).simple())) {
  same_system(w, psi_prime_);
  row_roots_ = psi_.generators();
  col_roots_ = psi_prime_.generators();
  reps_ = distinguished_reps(w, psi_);

  class_of_.assign(w.order(), -1);
  for (size_t p = 0; p < reps_.size(); ++p)
    for (int h : w_psi_.elements()) class_of_[w.compose(reps_[p], h)] = static_cast<int>(p);
  for (int c : class_of_)
    if (c < 0) throw invariant_error("coset partition left an element unassigned");
}

Tableau TabloidSpace::make_tableau(const Element& w) const {
  if (&w.group() != w_) throw std::domain_error("element of a different group");
  Tableau t;
  t.witness = w;
  for (int r : row_roots_) t.rows.push_back(w.apply(r));
  for (int r : col_roots_) t.cols.push_back(w.apply(r));
  return t;
}

bool TabloidSpace::row_equivalent(const Tableau& a, const Tableau& b) const {
  return w_psi_.contains(w_->compose(w_->inverse(a.witness.index()), b.witness.index()));
}

Tabloid TabloidSpace::tabloid_of(const Tableau& t) const {
  return Tabloid(this, class_of_.at(t.witness.index()));
}

Tabloid TabloidSpace::tabloid(const Element& w) const {
  if (&w.group() != w_) throw std::domain_error("element of a different group");
  return Tabloid(this, class_of_.at(w.index()));
}

std::vector<Tabloid> TabloidSpace::all_tabloids() const {
  std::vector<Tabloid> out;
  for (size_t p = 0; p < reps_.size(); ++p) out.emplace_back(this, static_cast<int>(p));
  return out;
}

Tabloid TabloidSpace::act(const Element& sigma, const Tabloid& t) const {
  if (&sigma.group() != w_) throw std::domain_error("element of a different group");
  if (&t.space() != this) throw std::domain_error("tabloid of a different space");
  return Tabloid(this, class_of_.at(w_->compose(sigma.index(), reps_.at(t.index()))));
}

}  // namespace garnir
