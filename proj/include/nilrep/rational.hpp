#ifndef NILREP_RATIONAL_HPP
#define NILREP_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nilrep {

/// Exact rational scalar. GMP keeps values canonical: positive denominator,
/// coprime numerator and denominator, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Parses "p/q" or "p" (q = 1). Rejects malformed text and zero denominators.
inline Rational parse_rational(const std::string& text) {
  Rational value;
  try {
    value = Rational(text);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw ParseError("zero denominator: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace nilrep

#endif
