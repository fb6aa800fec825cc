#ifndef BLOCKPAT_PATTERNS_HPP
#define BLOCKPAT_PATTERNS_HPP

// Block patterns of equal-length factorizations.
//
// Cutting a word of length km into k blocks of length m induces a partition
// of the block indices by block equality. A BlockSignature records that
// partition's shape: mu[s-1] = number of equality classes of size s, so
// sum s*mu_s = k. A k-power has shape (0,...,0,1); a k-anti-power has shape
// (k,0,...,0); the relaxed families sit in between, measured either by the
// largest class size (lambda) or by the number of equal block pairs (sigma).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockpat/words.hpp"

namespace blockpat {

class BlockSignature {
 public:
  // mu is indexed by class size: mu[s-1] classes of size s, 1 <= s <= k.
  // Trailing zeros may be omitted. Requires sum s*mu_s == k.
  BlockSignature(int k, std::vector<int> mu);

  static BlockSignature k_power(int k);
  static BlockSignature k_anti_power(int k);

  // Text form "k=5;2:2,1:1" lists size:count pairs, largest size first,
  // zero counts omitted.
  static BlockSignature from_text(std::string_view text);
  std::string to_text() const;

  int k() const noexcept { return k_; }
  const std::vector<int>& mu() const noexcept { return mu_; }

  // Number of equality classes (sum of mu_s).
  int class_count() const noexcept;

  friend bool operator==(const BlockSignature& a, const BlockSignature& b) {
    return a.k_ == b.k_ && a.mu_ == b.mu_;
  }

 private:
  int k_;
  std::vector<int> mu_;  // always length k_
};

// All signatures with k blocks (one per partition of k), ordered by the
// underlying partition in descending-lexicographic order, so the k-power
// shape comes first and the k-anti-power shape last.
std::vector<BlockSignature> all_signatures(int k);

// Number of unordered pairs of equal blocks: sum mu_s * C(s,2).
std::int64_t equal_pair_count(const BlockSignature& sig);

// O(1)-per-query equality of same-length factors of a fixed word
// (hash prefilter, every positive answer confirmed letter by letter).
class FactorComparer {
 public:
  explicit FactorComparer(const Word& w);

  // Exact: w[i..i+len-1] == w[j..j+len-1]? Starts are 1-based.
  bool equal(std::size_t i, std::size_t j, std::size_t len) const;

  std::size_t size() const noexcept { return word_.size(); }
  const Word& word() const noexcept { return word_; }

 private:
  Word word_;
  std::vector<std::uint64_t> prefix_;  // prefix_[i] = hash of w[1..i]
  std::vector<std::uint64_t> power_;
  std::uint64_t range_hash(std::size_t start, std::size_t len) const;
};

// Shape of the k-block factorization of w. Same preconditions as blocks().
BlockSignature block_signature(const Word& w, int k);

bool is_k_power(const Word& w, int k);
bool is_anti_power(const Word& w, int k);

// Largest block-equality class has size <= lambda (and k | |w|, w nonempty).
// Requires 1 <= lambda <= k.
bool is_k_lambda_anti_power(const Word& w, int k, int lambda);

// A factor property to scan for: ell-powers, or one of the anti-power
// relaxations of order k.
class FactorPredicate {
 public:
  enum class Kind { kPower, kAntiPower, kLambdaAntiPower, kPairBudget };

  static FactorPredicate power(int ell);
  static FactorPredicate anti_power(int k);
  static FactorPredicate k_lambda_anti_power(int k, int lambda);
  static FactorPredicate pair_budget(int k, std::int64_t sigma);

  Kind kind() const noexcept { return kind_; }
  // Number of blocks (ell for powers, k otherwise).
  int order() const noexcept { return order_; }
  int lambda() const noexcept { return lambda_; }
  std::int64_t sigma() const noexcept { return sigma_; }

  std::string describe() const;

 private:
  FactorPredicate(Kind kind, int order, int lambda, std::int64_t sigma);
  Kind kind_;
  int order_;
  int lambda_;
  std::int64_t sigma_;
};

struct FactorMatch {
  std::uint64_t start;      // 1-based start of the matching factor
  std::uint64_t block_len;  // m; the factor has length order*m
  friend bool operator==(const FactorMatch&, const FactorMatch&) = default;
};

// First factor of w (in (start, block_len) lexicographic order) satisfying
// the predicate, or nullopt.
std::optional<FactorMatch> contains(const Word& w, const FactorPredicate& p);

// Number of factors of w whose k-block factorization has exactly the given
// shape.
std::uint64_t count_block_patterns(const Word& w, const BlockSignature& sig);

}  // namespace blockpat

#endif  // BLOCKPAT_PATTERNS_HPP
