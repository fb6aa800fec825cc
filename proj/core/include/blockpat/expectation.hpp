#ifndef BLOCKPAT_EXPECTATION_HPP
#define BLOCKPAT_EXPECTATION_HPP

// Expected numbers of block-patterns, powers, and anti-powers in a uniform
// random word: closed forms, an exact enumeration oracle for small cases,
// and a seeded Monte-Carlo estimator for everything else.

#include <cstdint>
#include <map>
#include <vector>

#include "blockpat/exact.hpp"
#include "blockpat/patterns.hpp"

namespace blockpat {

struct ExpectationQuery {
  std::uint64_t n;     // word length, >= k
  int k;               // block count, >= 1
  int alpha;           // alphabet size, >= 2
  BlockSignature mu;   // shape with mu.k() == k
};

// Number of ways to partition k labeled blocks into classes with mu_s
// classes of size s: k! / prod_s ((s!)^mu_s * mu_s!).
BigInt signature_partition_count(const BlockSignature& mu);

// Expected number of factors of shape mu in a uniform random word of length
// n over alpha letters:
//   sum_{m=1}^{floor(n/k)} (n+1-km) * W(mu) * falling(alpha^m, p) / alpha^{km}
// with p the number of classes and W the partition count above. All
// combinatorics in exact arithmetic; only the final value is rounded.
BigRat expected_block_patterns_exact(const ExpectationQuery& q);
double expected_block_patterns(const ExpectationQuery& q);

// Closed form for expected k-power count (geometric sums in q = alpha^{1-k});
// equals expected_block_patterns with mu = (0,...,0,1). Requires k >= 2,
// n >= k, alpha >= 2 (so q != 1 and the sums never degenerate).
double expected_k_powers_closed(std::uint64_t n, int k, int alpha);

// sum_{m} (n+1-km) * prod_{l=0}^{k-1} (1 - l/alpha^m); equals
// expected_block_patterns with mu = (k,0,...,0). Requires k >= 1.
double expected_anti_powers(std::uint64_t n, int k, int alpha);

// Exact expectation by enumerating all alpha^n words. Guarded to
// alpha^n <= 10^7 (std::invalid_argument beyond).
BigRat brute_force_expectation(const ExpectationQuery& q);

// One full-enumeration pass shared across signatures: total factor counts
// per shape (dense mu vector) summed over all alpha^n words. Same guard.
std::map<std::vector<int>, std::uint64_t> brute_force_signature_totals(
    std::uint64_t n, int k, int alpha);

struct MonteCarloResult {
  double mean;
  double ci99_half_width;  // 99% normal-approximation interval half-width
  std::uint64_t trials;
  std::uint64_t seed;
};

// Deterministic given (query, trials, seed) regardless of worker count:
// trials are split over 64 fixed logical streams (mt19937_64 seeded via
// splitmix64), and the integer tallies are combined in stream order.
// Requires trials >= 100.
MonteCarloResult monte_carlo_expectation(const ExpectationQuery& q,
                                         std::uint64_t trials,
                                         std::uint64_t seed);

}  // namespace blockpat

#endif  // BLOCKPAT_EXPECTATION_HPP
