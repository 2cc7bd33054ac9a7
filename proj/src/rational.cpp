#include "garnir/rational.hpp"

#include <stdexcept>

namespace garnir {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

long rat_to_long(const Rat& q) {
  if (q.get_den() != 1)
    throw std::domain_error("not an integer: " + rat_str(q));
  const mpz_class& num = q.get_num();
  if (!num.fits_slong_p())
    throw std::domain_error("integer out of range: " + rat_str(q));
  return num.get_si();
}

}  // namespace garnir
