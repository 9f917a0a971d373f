#include "ihara/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace ihara {

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Real to_real(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (num == 0) return 0;
  // Integer quotient carrying ~70 significant bits, then split into two
  // halves that convert to double exactly.
  const long shift = static_cast<long>(msb(abs(num))) - static_cast<long>(msb(den)) - 70;
  BigInt scaled = shift >= 0 ? BigInt(abs(num) / (den << shift)) : BigInt((abs(num) << -shift) / den);
  const BigInt high = scaled >> 36;
  const BigInt low = scaled - (high << 36);
  const Real magnitude = std::ldexp(static_cast<Real>(high.convert_to<double>()), 36) +
                         static_cast<Real>(low.convert_to<double>());
  const Real value = std::ldexp(magnitude, static_cast<int>(shift));
  return num < 0 ? -value : value;
}

Rational exact_rational(Real x) {
  if (!std::isfinite(x)) throw std::domain_error("exact_rational: non-finite value");
  if (x == 0) return Rational(0);
  int exponent = 0;
  const Real mantissa = std::frexp(x, &exponent);
  constexpr int kBits = std::numeric_limits<Real>::digits;
  const auto integral = static_cast<unsigned long long>(std::ldexp(std::fabs(mantissa), kBits));
  exponent -= kBits;
  Rational r{BigInt(integral)};
  if (x < 0) r = -r;
  if (exponent >= 0) {
    r *= Rational(BigInt(1) << exponent);
  } else {
    r /= Rational(BigInt(1) << -exponent);
  }
  return r;
}

Rational rationalize(Real x, std::uint64_t max_den) {
  if (max_den == 0) throw std::invalid_argument("rationalize: max_den must be positive");
  const Rational target = exact_rational(x);
  // Convergents h/k of the continued fraction of target.
  BigInt h_prev = 0, h = 1, k_prev = 1, k = 0;
  Rational rest = target;
  Rational best = Rational(BigInt(boost::multiprecision::numerator(target) / boost::multiprecision::denominator(target)));
  while (true) {
    const BigInt num = boost::multiprecision::numerator(rest);
    const BigInt den = boost::multiprecision::denominator(rest);
    BigInt a = num / den;
    if (num < 0 && a * den != num) a -= 1;  // floor
    const BigInt h_next = a * h + h_prev;
    const BigInt k_next = a * k + k_prev;
    if (k_next > max_den) {
      // Best semiconvergent within the bound.
      const BigInt t = (BigInt(max_den) - k_prev) / k;
      const Rational semi(h_prev + t * h, k_prev + t * k);
      const Rational conv(h, k);
      best = abs(semi - target) < abs(conv - target) ? semi : conv;
      break;
    }
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    best = Rational(h, k);
    const Rational frac = rest - Rational(a);
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return best;
}

std::string format_real(Real x, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*Lg", digits, x);
  return buffer;
}

}  // namespace ihara
