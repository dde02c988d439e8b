#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace okbody {

/// Arbitrary precision rational, always kept canonical (reduced, positive
/// denominator). Every geometric quantity in the library is a Rat.
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" (surrounding whitespace allowed). Throws
/// Error{Parse} on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

/// Decimal rendering rounded half away from zero at `places` digits.
std::string to_decimal(const Rat& value, int places);

/// n/d in canonical form; d must be nonzero.
inline Rat make_rat(long n, long d) {
  Rat r{mpz_class(n), mpz_class(d)};
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& value) { return value.get_den() == 1; }

inline int sign(const Rat& value) { return sgn(value); }

}  // namespace okbody
