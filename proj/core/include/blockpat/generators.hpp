#ifndef BLOCKPAT_GENERATORS_HPP
#define BLOCKPAT_GENERATORS_HPP

// Named word constructions: classic binary words (Thue-Morse, Fibonacci,
// mechanical/Sturmian), the recursive avoiders used in the anti-power
// threshold bounds, and the finite witness words.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "blockpat/exact.hpp"
#include "blockpat/words.hpp"

namespace blockpat {

// Raised when a decimal-angle computation cannot certify which side of an
// interval endpoint a value falls on. Re-run with more digits (or --prec).
struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A real given either exactly (eps == 0) or as value +/- eps.
struct ApproxReal {
  BigRat value;
  BigRat eps;
  bool exact() const { return eps == 0; }
};

// Rotation angle theta and starting point x0 for mechanical words.
// theta must be strictly inside (0,1) after reduction mod 1; x0 is reduced
// to [0,1). Decimal inputs carry an uncertainty radius of one unit in the
// last given place, or 2^-prec_bits when the caller vouches for more.
class Angle {
 public:
  Angle(ApproxReal theta, ApproxReal x0);

  static Angle from_rationals(const BigRat& theta, const BigRat& x0);

  // Each text is "p/q", a decimal like "0.38196", or an integer.
  static Angle parse(std::string_view theta, std::string_view x0,
                     std::optional<unsigned> prec_bits = std::nullopt);

  // theta = x0 = 2 - phi, to 48 decimal places; mechanical() on this angle
  // reproduces the Fibonacci word.
  static const Angle& fibonacci_preset();

  const ApproxReal& theta() const noexcept { return theta_; }
  const ApproxReal& x0() const noexcept { return x0_; }

 private:
  ApproxReal theta_;
  ApproxReal x0_;
};

enum class MechanicalVariant { kUpper, kLower };

// The sequence v_1, v_2, ... seeding a sesquipower: w_1 = v_1 and
// w_{n+1} = w_n v_{n+1} w_n, each v used once in order.
struct SesquipowerSeed {
  std::function<Word(std::uint64_t)> v;  // 1-based
  int alphabet_size = kUnboundedAlphabet;
};

// t[n] = parity of the popcount of n-1; prefix "01101001...".
InfiniteWord thue_morse();

// Limit of S1 = "0", S2 = "01", S_n = S_{n-1} S_{n-2}; prefix "01001010...".
InfiniteWord fibonacci_word();

// s[n] = 1 iff frac((n-1)*theta + x0) lies in [1-theta, 1) (upper variant)
// or (1-theta, 1) (lower variant). Exact for rational angles; decimal
// angles are certified per index and raise PrecisionExhausted when the
// stated precision cannot separate the value from an endpoint.
InfiniteWord mechanical(const Angle& a, MechanicalVariant variant);

InfiniteWord sesquipower(const SesquipowerSeed& seed);

// w_0 = "0", w_{n+1} = w_n 1^{(k-3)|w_n|} w_n; requires k >= 6.
// |w_n| = (k-1)^n; letters are resolved by descending the recursion.
InfiniteWord recurrent_avoider(int k);

// x[j] = 1 iff j = gamma_i for some i. The rule must be positive and grow
// at least geometrically: gamma_{i+1} >= (k+1) * gamma_i (checked lazily as
// values are queried; violations raise std::runtime_error). Default rule:
// gamma_i = (k+1)^(i-1). Requires k >= 4.
InfiniteWord gamma_word(int k,
                        std::function<BigInt(std::uint64_t)> gamma = {});

// 1 1 2 2 2 2 3 3 3 3 3 3 3 3 ... : letter i repeated 2^i times, over the
// unbounded alphabet.
InfiniteWord infinite_alphabet_power_free();

// 1 (0^{k-1} 1)^{k-2} 0^{k-2} 1 0^{k-2} (1 0^{k-1})^{k-2} 1, of length
// 2k^2 - 2k - 1. Requires k >= 4.
Word lower_bound_word(int k);

// 0^{k-1} (1 0^{k-1})^e with e = k - floor((sqrt(8*sigma+1)+1)/2) - 1.
// Requires k >= 2, sigma >= 1, and e >= 0 (std::invalid_argument otherwise).
Word sigma_avoider_word(int k, std::int64_t sigma);

// M = ceil(1 / min(theta, 1-theta)) + 1.
std::int64_t sturmian_power_bound(const Angle& a);

}  // namespace blockpat

#endif  // BLOCKPAT_GENERATORS_HPP
