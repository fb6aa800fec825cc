#ifndef BLOCKPAT_EXACT_HPP
#define BLOCKPAT_EXACT_HPP

// Arbitrary-precision integers/rationals used wherever floating point would
// silently lose the game: expectation sums, mechanical-word comparisons,
// integer square roots.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace blockpat {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Correctly handles magnitudes far outside double range (via a wide binary
// float intermediate), not just num/den that fit in a double.
double to_double(const BigRat& r);

BigInt ipow(BigInt base, unsigned exp);

// floor(sqrt(x)); requires x >= 0.
BigInt isqrt_floor(const BigInt& x);

BigInt factorial(unsigned n);

// Lowest-terms "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const BigRat& r);

// floor/ceil to BigInt.
BigInt rat_floor(const BigRat& r);
BigInt rat_ceil(const BigRat& r);

}  // namespace blockpat

#endif  // BLOCKPAT_EXACT_HPP
