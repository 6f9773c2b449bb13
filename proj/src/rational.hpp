#ifndef NEFCERT_RATIONAL_HPP
#define NEFCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nefcert {

// All divisor arithmetic is exact. Rat is GMP's canonical rational:
// lowest terms, positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

/* Parse "p" or "p/q" (q > 0, decimal digits, optional leading '-' on p).
 * Throws std::invalid_argument on anything else. */
Rat rat_from_string(std::string_view s);

/* Lowest terms, positive denominator; integers print without "/1". */
std::string rat_to_string(const Rat& r);

/* Divide by the gcd of the entries; zero vectors stay zero. Direction is
 * preserved (no sign flip). */
void make_primitive(std::vector<Int>& v);

/* 1/2^e as an exact rational. */
Rat half_power(unsigned long e);

}  // namespace nefcert

#endif
