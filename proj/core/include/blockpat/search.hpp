#ifndef BLOCKPAT_SEARCH_HPP
#define BLOCKPAT_SEARCH_HPP

// Exhaustive search for the longest word over a given alphabet avoiding
// both ell-powers and an anti-power-style constraint, yielding the Ramsey
// thresholds N_alpha, plus the left-extension analysis around maximality.

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "blockpat/patterns.hpp"
#include "blockpat/words.hpp"

namespace blockpat {

struct AvoidanceSpec {
  int alpha;                   // alphabet size >= 1
  int ell;                     // forbidden power order >= 2
  FactorPredicate constraint;  // anti-power / (k,lambda) / pair-budget, k >= 2
};

struct SearchCaps {
  // 0 = derive from the constraint (only defined when ell == k; an explicit
  // cap is required otherwise).
  std::uint64_t length_cap = 0;
  // 0 = no time limit.
  std::chrono::milliseconds time_cap{0};
  // Prefix depth whose subtrees are distributed across workers.
  int split_depth = 8;
  // 0 = runtime default (hardware, capped by BP_THREADS).
  int workers = 0;
};

struct SearchResult {
  std::uint64_t threshold;        // max avoiding length + 1
  Word witness;                   // lexicographically least maximal word,
                                  // in first-occurrence canonical form
  std::uint64_t nodes_explored;
  bool truncated;                 // length or time cap cut the search short
  std::chrono::milliseconds elapsed;
};

// The a-priori termination bound used when no explicit cap is given:
//   (k,lambda):  floor((k^2-k)/(lambda^2+lambda)) * (k^3-k^2+k)
//   pair budget: floor(C(k,2)/max(sigma,1))       * (k^3-k^2+k)
// Only defined for ell == k (throws std::invalid_argument otherwise).
std::uint64_t default_length_cap(const AvoidanceSpec& spec);

// Depth-first search over words grown letter by letter, pruning the moment
// a forbidden factor ends at the last position. Only first-occurrence
// canonical words are explored (letter c+1 only after 0..c), which is
// sound because both forbidden families are invariant under alphabet
// permutation. Letters are tried in ascending order and subtree results
// are reduced in a fixed order, so the outcome is identical for any worker
// count. The returned witness is re-verified with the detector scans.
SearchResult max_avoiding_length(const AvoidanceSpec& spec,
                                 SearchCaps caps = {});

// Threshold N_alpha(ell, k): every word of this length over alpha letters
// contains an ell-power or a k-anti-power. Throws std::runtime_error if the
// search was truncated (inconclusive).
std::uint64_t n_alpha(int ell, int k, int alpha, SearchCaps caps = {});

// 2k^2 - 2k <= n_value <= (k^3 - k^2 + k) * C(k,2); requires k >= 4.
bool bound_check(int k, std::uint64_t n_value);

enum class ExclusionCause { kPowerPrefix, kConstraint };

struct LeftExtension {
  std::vector<Letter> allowed;  // letters a with a*w still avoiding
  std::vector<std::pair<Letter, ExclusionCause>> excluded;
};

// Which of the letters 0..alpha (one fresh letter beyond the alphabet) can
// be prepended to w without creating an ell-power or constraint violation?
// Requires w itself to avoid both families (std::invalid_argument if not).
// Each excluded letter is attributed to the power prefix it creates, or
// else to the constraint.
LeftExtension extendable_left(const Word& w, const AvoidanceSpec& spec);

// Is the alphabet large enough that a maximal avoiding word admits no
// avoiding superword? True iff alpha > n_value/k - k + 3, where n_value is
// the measured threshold for (k, k). Decided in integers
// (k*alpha + k^2 - 3k > n), no rounding.
bool witness_rigidity_condition(int k, int alpha, std::uint64_t n_value);

}  // namespace blockpat

#endif  // BLOCKPAT_SEARCH_HPP
