#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mgl {

/// Thrown for every contract violation in the library.  Messages name the
/// violated condition so the CLI can print them verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration refused because its size exceeds the configured cap.
class GuardError : public Error {
 public:
  using Error::Error;
};

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q" (canonicalized).  Throws Error on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline int sign_of(const Rational& value) { return sgn(value); }

}  // namespace mgl
