#pragma once

#include <gmpxx.h>

#include <string>

namespace garnir {

/* Every quantity in this library is exact.  Rat is an arbitrary-precision
   rational kept in canonical form: numerator and denominator coprime, the
   denominator positive, zero represented as 0/1.  GMP maintains that form
   through arithmetic; the parser below restores it after construction. */
using Rat = mpq_class;

// Parses "3", "-1/2", "0". Throws std::invalid_argument on anything else.
Rat parse_rat(const std::string& text);

// Canonical rendering: "3", "-1/2", "0". Inverse of parse_rat.
std::string rat_str(const Rat& q);

// Returns q as a plain int. Throws std::domain_error unless q is an
// integer that fits.
long rat_to_long(const Rat& q);

}  // namespace garnir
