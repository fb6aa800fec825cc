#include "blockpat/expectation.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "blockpat/exact.hpp"
#include "blockpat/patterns.hpp"

using namespace blockpat;

namespace {

ExpectationQuery query(std::uint64_t n, int k, int alpha, std::vector<int> mu) {
  return ExpectationQuery{n, k, alpha, BlockSignature(k, std::move(mu))};
}

// Generates every partition of k (parts descending) and hands each one over
// as a signature vector mu with mu[s-1] = number of parts of size s.
template <typename Fn>
void for_each_signature(int k, Fn&& fn) {
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      std::vector<int> mu(k, 0);
      for (int p : parts) ++mu[p - 1];
      fn(mu);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, k, k);
}

// Counts the set partitions of {0,...,k-1} with each class-size shape, by
// direct enumeration: an independent tally to pit against the closed form.
std::map<std::vector<int>, BigInt> shape_counts_by_enumeration(int k) {
  std::map<std::vector<int>, BigInt> counts;
  std::vector<int> owner(k, 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == k) {
      std::vector<int> size(used, 0);
      for (int j = 0; j < k; ++j) ++size[owner[j]];
      std::vector<int> mu(k, 0);
      for (int s : size) ++mu[s - 1];
      counts[mu] += 1;
      return;
    }
    for (int c = 0; c <= used; ++c) {
      owner[i] = c;
      self(self, i + 1, c == used ? used + 1 : used);
    }
  };
  rec(rec, 0, 0);
  return counts;
}

}  // namespace

TEST_CASE("fixed expectation values") {
  CHECK(expected_block_patterns(query(2, 2, 2, {2, 0})) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(expected_block_patterns(query(6, 2, 2, {2, 0})) ==
        doctest::Approx(5.625).epsilon(1e-12));
  CHECK(expected_block_patterns(query(6, 2, 2, {0, 1})) ==
        doctest::Approx(3.375).epsilon(1e-12));
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(expected_block_patterns(query(6, 2, 1, {2, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(expected_block_patterns(query(1, 2, 2, {2, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      expected_block_patterns(ExpectationQuery{6, 3, 2, BlockSignature(2, {2})}),
      std::invalid_argument);
}

TEST_CASE("power expectation closed form") {
  CHECK(expected_k_powers_closed(6, 2, 2) == doctest::Approx(3.375));
  CHECK(expected_k_powers_closed(8, 3, 2) == doctest::Approx(1.6875));
  for (int k : {2, 3, 5}) {
    for (int alpha : {2, 3}) {
      CHECK(expected_k_powers_closed(k, k, alpha) ==
            doctest::Approx(std::pow(alpha, 1 - k)));
    }
  }
  CHECK_THROWS_AS(expected_k_powers_closed(6, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(expected_k_powers_closed(1, 2, 2), std::invalid_argument);
}

TEST_CASE("anti-power expectation") {
  CHECK(expected_anti_powers(6, 2, 2) == doctest::Approx(5.625));
  CHECK(expected_anti_powers(2, 2, 2) == doctest::Approx(0.5));
  // k = 1: every one of the n(n+1)/2 factors counts (empty product).
  for (std::uint64_t n : {1, 5, 12}) {
    CHECK(expected_anti_powers(n, 1, 2) ==
          doctest::Approx(double(n * (n + 1)) / 2));
  }
}

TEST_CASE("brute force oracle fixed cases") {
  CHECK(brute_force_expectation(query(2, 2, 2, {2, 0})) == BigRat(1, 2));
  CHECK(brute_force_expectation(query(4, 2, 2, {0, 1})) == BigRat(7, 4));
  CHECK(brute_force_expectation(query(3, 3, 2, {3, 0, 0})) == 0);
  CHECK_THROWS_AS(brute_force_expectation(query(40, 2, 2, {2, 0})),
                  std::invalid_argument);
}

TEST_CASE("closed form equals exhaustive enumeration everywhere it fits") {
  // One enumeration pass per (n, k, alpha) feeds every shape's comparison.
  for (int alpha : {2, 3}) {
    for (int k = 2; k <= 4; ++k) {
      for (std::uint64_t n = k; n <= 8; ++n) {
        auto totals = brute_force_signature_totals(n, k, alpha);
        BigInt words = ipow(BigInt(alpha), static_cast<unsigned>(n));
        for_each_signature(k, [&](const std::vector<int>& mu) {
          ExpectationQuery q = query(n, k, alpha, mu);
          BigRat exact = expected_block_patterns_exact(q);
          auto it = totals.find(mu);
          BigRat enumerated =
              it == totals.end() ? BigRat(0) : BigRat(BigInt(it->second), words);
          CAPTURE(n);
          CAPTURE(k);
          CAPTURE(alpha);
          CHECK(exact == enumerated);
          CHECK(expected_block_patterns(q) ==
                doctest::Approx(to_double(exact)).epsilon(1e-9));
        });
      }
    }
  }
}

TEST_CASE("specialized forms agree with the general one") {
  for (int alpha = 2; alpha <= 4; ++alpha) {
    for (int k = 2; k <= 6; ++k) {
      for (std::uint64_t n :
           {std::uint64_t(k), std::uint64_t(7), std::uint64_t(25),
            std::uint64_t(100), std::uint64_t(200)}) {
        if (n < std::uint64_t(k)) continue;
        std::vector<int> power_mu(k, 0), anti_mu(k, 0);
        power_mu[k - 1] = 1;
        anti_mu[0] = k;
        double general_power = expected_block_patterns(query(n, k, alpha, power_mu));
        double general_anti = expected_block_patterns(query(n, k, alpha, anti_mu));
        CHECK(general_power ==
              doctest::Approx(expected_k_powers_closed(n, k, alpha)).epsilon(1e-9));
        CHECK(general_anti ==
              doctest::Approx(expected_anti_powers(n, k, alpha)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("signature weights count set partitions") {
  for (int k = 1; k <= 8; ++k) {
    auto counts = shape_counts_by_enumeration(k);
    BigInt bell = 0;
    for_each_signature(k, [&](const std::vector<int>& mu) {
      auto it = counts.find(mu);
      REQUIRE(it != counts.end());
      CHECK(signature_partition_count(BlockSignature(k, mu)) == it->second);
      bell += it->second;
    });
    BigInt direct = 0;
    for (const auto& [mu, c] : counts) direct += c;
    CHECK(bell == direct);
  }
}

TEST_CASE("per-window pattern probabilities sum to one") {
  // For a fixed block length m, a random window of length km has exactly one
  // shape, so the shape probabilities must exhaust the space. This pins the
  // combinatorial weight: swapping it for any other factor breaks the sum.
  for (int alpha : {2, 3, 5}) {
    for (int k = 1; k <= 8; ++k) {
      for (unsigned m : {1u, 2u}) {
        BigInt am = ipow(BigInt(alpha), m);
        BigRat sum = 0;
        for_each_signature(k, [&](const std::vector<int>& mu) {
          BlockSignature sig(k, mu);
          int classes = sig.class_count();
          BigInt ways = signature_partition_count(sig);
          BigInt choices = 1;
          for (int l = 0; l < classes; ++l) choices *= am - l;
          sum += BigRat(ways * choices,
                        ipow(am, static_cast<unsigned>(k)));
        });
        CAPTURE(alpha);
        CAPTURE(k);
        CAPTURE(m);
        CHECK(sum == 1);
      }
    }
  }
}

TEST_CASE("anti-power counts grow quadratically, power counts linearly") {
  for (std::uint64_t n : {100, 500, 1000, 2000}) {
    double anti = expected_block_patterns(query(n, 3, 2, {3, 0, 0}));
    double power = expected_block_patterns(query(n, 3, 2, {0, 0, 1}));
    double anti_ratio = anti / double(n * n);
    double power_ratio = power / double(n);
    CHECK(anti_ratio > 0.05);
    CHECK(anti_ratio < 0.5);
    CHECK(power_ratio > 0.2);
    CHECK(power_ratio < 0.5);
  }
}

TEST_CASE("monte carlo is deterministic and tracks the oracle") {
  ExpectationQuery q = query(6, 2, 2, {2, 0});
  MonteCarloResult a = monte_carlo_expectation(q, 100000, 42);
  MonteCarloResult b = monte_carlo_expectation(q, 100000, 42);
  CHECK(a.mean == b.mean);
  CHECK(a.ci99_half_width == b.ci99_half_width);
  CHECK(a.trials == 100000);
  CHECK(a.seed == 42);

  CHECK(std::abs(a.mean - 5.625) <= a.ci99_half_width);

  MonteCarloResult c = monte_carlo_expectation(q, 100000, 43);
  CHECK(c.mean != a.mean);  // different stream, different sample

  CHECK_THROWS_AS(monte_carlo_expectation(q, 99, 1), std::invalid_argument);
}

TEST_CASE("monte carlo covers a closed form beyond the oracle range") {
  ExpectationQuery q = query(50, 3, 2, {3, 0, 0});
  double reference = expected_anti_powers(50, 3, 2);
  MonteCarloResult r = monte_carlo_expectation(q, 20000, 7);
  CHECK(std::abs(r.mean - reference) <= r.ci99_half_width);
}
