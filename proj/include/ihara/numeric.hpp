#pragma once

// Scalar types shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace ihara {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Working precision for evaluations: x87 extended, 64-bit mantissa.
using Real = long double;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

Real to_real(const Rational& q);

/// Exact binary value of a finite floating-point number.
Rational exact_rational(Real x);

/// Best rational approximation with denominator at most `max_den`
/// (continued-fraction convergents and semiconvergents).
Rational rationalize(Real x, std::uint64_t max_den);

/// Decimal string with `digits` significant digits.
std::string format_real(Real x, int digits = 17);

}  // namespace ihara
