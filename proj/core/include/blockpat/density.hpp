#ifndef BLOCKPAT_DENSITY_HPP
#define BLOCKPAT_DENSITY_HPP

// Prefix membership sets of an infinite word: for which m is the length-km
// prefix a (k,lambda)-anti-power (AP sets), or within a pair budget sigma
// (D sets)? Plus finite lower/upper density proxies for those sets.

#include <cstdint>
#include <optional>
#include <vector>

#include "blockpat/words.hpp"

namespace blockpat {

enum class PrefixSetKind { kAntiPower, kPairBudget };

// Every m in [1, n_max] was decided; members holds the qualifying m sorted.
struct PrefixSet {
  PrefixSetKind kind;
  int k;
  int lambda;          // meaningful for kAntiPower
  std::int64_t sigma;  // meaningful for kPairBudget
  std::uint64_t n_max;
  std::vector<std::uint64_t> members;
};

// m in members iff the prefix of length k*m is a (k,lambda)-anti-power.
// Requires 1 <= lambda <= k, n_max >= 1.
PrefixSet ap_set(const InfiniteWord& x, int k, int lambda,
                 std::uint64_t n_max);

// m in members iff the k-block signature of the length-k*m prefix has at
// most sigma equal pairs. Requires k >= 1, sigma >= 0, n_max >= 1.
PrefixSet d_set(const InfiniteWord& x, int k, std::int64_t sigma,
                std::uint64_t n_max);

// ratios[i] = |S intersect [i+1]| / (i+1) for i+1 in [1, n_max].
// lower/upper proxies are the min/max ratio over the tail window
// [tail_begin, n_max]; true liminf/limsup are out of reach of finite data,
// so these are labeled proxies everywhere.
struct DensityEstimate {
  std::vector<double> ratios;
  double lower_proxy;
  double upper_proxy;
  std::uint64_t tail_begin;
};

// tail_begin = 0 selects the default window start ceil(n_max / 2).
// Requires n_max >= 2 and tail_begin <= n_max.
DensityEstimate density_estimate(const PrefixSet& s,
                                 std::uint64_t tail_begin = 0);

// Smallest m <= bound such that the prefix of length k*m is a k-anti-power,
// or nullopt if there is none in range.
std::optional<std::uint64_t> minimal_antipower_prefix(const InfiniteWord& x,
                                                      int k,
                                                      std::uint64_t bound);

}  // namespace blockpat

#endif  // BLOCKPAT_DENSITY_HPP
