#include "rvbent/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace rvbent {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

double log2_bigint(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log2_bigint: value must be positive");
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(value));
  if ((value & (value - 1)) == 0) return static_cast<double>(bits);
  // Scale into [1, 2^64) so the double conversion keeps full precision.
  if (bits < 64) return std::log2(static_cast<double>(value));
  const unsigned shift = bits - 63;
  const double mantissa = static_cast<double>(BigInt(value >> shift));
  return std::log2(mantissa) + static_cast<double>(shift);
}

BigRational dyadic_pow(long exponent) {
  if (exponent >= 0) return BigRational(pow2(static_cast<unsigned>(exponent)));
  return BigRational(1, pow2(static_cast<unsigned>(-exponent)));
}

std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace rvbent
