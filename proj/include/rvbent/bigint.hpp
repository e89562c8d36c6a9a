#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rvbent {

// Exact arithmetic backing all counts and overlaps. Counts at desk scale fit
// in 64 bits, but pair sums do not in general, so everything count-like is
// kept arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(unsigned n, unsigned k);

// floor(log2) would lose the fractional part; this keeps ~1e-16 relative
// accuracy at any magnitude and is exact for powers of two.
double log2_bigint(const BigInt& v);

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

// 2^e for possibly negative e, as an exact rational.
BigRational dyadic_pow(long e);

std::string to_string(const BigInt& v);

}  // namespace rvbent
