#include "blockpat/density.hpp"

#include <algorithm>
#include <stdexcept>

#include "blockpat/patterns.hpp"
#include "block_scan.hpp"

namespace blockpat {

namespace {

void check_args(int k, std::uint64_t n_max, const char* who) {
  if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be >= 1");
  if (n_max < 1) {
    throw std::invalid_argument(std::string(who) + ": n_max must be >= 1");
  }
}

}  // namespace

PrefixSet ap_set(const InfiniteWord& x, int k, int lambda,
                 std::uint64_t n_max) {
  check_args(k, n_max, "ap_set");
  if (lambda < 1 || lambda > k) {
    throw std::invalid_argument("ap_set: need 1 <= lambda <= k");
  }
  Word prefix = x.prefix(static_cast<std::size_t>(k) * n_max);
  FactorComparer cmp(prefix);
  detail::ClassScratch scratch(k);
  PrefixSet out{PrefixSetKind::kAntiPower, k, lambda, 0, n_max, {}};
  for (std::uint64_t m = 1; m <= n_max; ++m) {
    if (detail::lambda_at(cmp, 1, k, m, lambda, scratch)) {
      out.members.push_back(m);
    }
  }
  return out;
}

PrefixSet d_set(const InfiniteWord& x, int k, std::int64_t sigma,
                std::uint64_t n_max) {
  check_args(k, n_max, "d_set");
  if (sigma < 0) throw std::invalid_argument("d_set: sigma must be >= 0");
  Word prefix = x.prefix(static_cast<std::size_t>(k) * n_max);
  FactorComparer cmp(prefix);
  detail::ClassScratch scratch(k);
  PrefixSet out{PrefixSetKind::kPairBudget, k, 0, sigma, n_max, {}};
  for (std::uint64_t m = 1; m <= n_max; ++m) {
    if (detail::budget_at(cmp, 1, k, m, sigma, scratch)) {
      out.members.push_back(m);
    }
  }
  return out;
}

DensityEstimate density_estimate(const PrefixSet& s, std::uint64_t tail_begin) {
  if (s.n_max < 2) {
    throw std::invalid_argument("density_estimate: n_max must be >= 2");
  }
  if (tail_begin == 0) tail_begin = (s.n_max + 1) / 2;
  if (tail_begin > s.n_max) {
    throw std::invalid_argument("density_estimate: tail window is empty");
  }
  DensityEstimate out;
  out.tail_begin = tail_begin;
  out.ratios.reserve(static_cast<std::size_t>(s.n_max));
  out.lower_proxy = 1.0;
  out.upper_proxy = 0.0;
  std::size_t seen = 0;
  for (std::uint64_t n = 1; n <= s.n_max; ++n) {
    if (seen < s.members.size() && s.members[seen] == n) ++seen;
    double ratio = static_cast<double>(seen) / static_cast<double>(n);
    out.ratios.push_back(ratio);
    if (n >= tail_begin) {
      out.lower_proxy = std::min(out.lower_proxy, ratio);
      out.upper_proxy = std::max(out.upper_proxy, ratio);
    }
  }
  return out;
}

std::optional<std::uint64_t> minimal_antipower_prefix(const InfiniteWord& x,
                                                      int k,
                                                      std::uint64_t bound) {
  check_args(k, bound, "minimal_antipower_prefix");
  Word prefix = x.prefix(static_cast<std::size_t>(k) * bound);
  FactorComparer cmp(prefix);
  detail::ClassScratch scratch(k);
  for (std::uint64_t m = 1; m <= bound; ++m) {
    if (detail::lambda_at(cmp, 1, k, m, 1, scratch)) return m;
  }
  return std::nullopt;
}

}  // namespace blockpat
