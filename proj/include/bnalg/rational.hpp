#ifndef BNALG_RATIONAL_HPP
#define BNALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bnalg {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws InvalidInput on malformed text or q = 0.
Rational parse_rational(std::string_view text);

}  // namespace bnalg

#endif  // BNALG_RATIONAL_HPP
