#include "blockpat/exact.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>

namespace blockpat {

double to_double(const BigRat& r) {
  using Wide = boost::multiprecision::cpp_bin_float_50;
  Wide num(boost::multiprecision::numerator(r));
  Wide den(boost::multiprecision::denominator(r));
  return static_cast<double>(num / den);
}

BigInt ipow(BigInt base, unsigned exp) {
  BigInt result = 1;
  while (exp) {
    if (exp & 1u) result *= base;
    exp >>= 1u;
    if (exp) base *= base;
  }
  return result;
}

BigInt isqrt_floor(const BigInt& x) {
  if (x < 0) throw std::invalid_argument("isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(x);
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

std::string rat_to_string(const BigRat& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt rat_floor(const BigRat& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt rat_ceil(const BigRat& r) { return -rat_floor(-r); }

}  // namespace blockpat
