#ifndef FGI_RATIONAL_HPP
#define FGI_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fgi {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional sign, decimal digits only, q > 0).
/// The result is canonical. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& value);

Integer factorial(unsigned n);

/// Multiplies two positive counts, throwing fgi::resource_error on overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_factorial(unsigned n);

}  // namespace fgi

#endif  // FGI_RATIONAL_HPP
