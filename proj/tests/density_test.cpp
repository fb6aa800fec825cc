#include "blockpat/density.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "blockpat/generators.hpp"
#include "blockpat/patterns.hpp"
#include "blockpat/words.hpp"

using namespace blockpat;

namespace {

InfiniteWord constant_word() {
  return InfiniteWord("constant", 1, [](std::uint64_t) -> Letter { return 0; });
}

std::vector<std::uint64_t> range_1_to(std::uint64_t n) {
  std::vector<std::uint64_t> out(n);
  for (std::uint64_t i = 0; i < n; ++i) out[i] = i + 1;
  return out;
}

bool is_subset(const std::vector<std::uint64_t>& a,
               const std::vector<std::uint64_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Distinct-blocks check straight from the definition, no detector involved.
bool blocks_all_distinct(const Word& w, int k) {
  std::size_t m = w.size() / k;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (factor(w, i * m + 1, (i + 1) * m) == factor(w, j * m + 1, (j + 1) * m))
        return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("ap_set fixed cases") {
  CHECK(ap_set(thue_morse(), 2, 1, 5).members == range_1_to(5));
  CHECK(ap_set(constant_word(), 2, 1, 10).members.empty());
  CHECK(ap_set(constant_word(), 3, 3, 10).members == range_1_to(10));

  PrefixSet s = ap_set(thue_morse(), 3, 2, 7);
  CHECK(s.kind == PrefixSetKind::kAntiPower);
  CHECK(s.k == 3);
  CHECK(s.lambda == 2);
  CHECK(s.n_max == 7);

  CHECK_THROWS_AS(ap_set(thue_morse(), 2, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(ap_set(thue_morse(), 2, 3, 5), std::invalid_argument);
}

TEST_CASE("d_set fixed cases") {
  CHECK(d_set(constant_word(), 3, 3, 10).members == range_1_to(10));
  CHECK(d_set(constant_word(), 3, 2, 10).members.empty());
  CHECK(d_set(thue_morse(), 2, 0, 5).members == range_1_to(5));
  CHECK_THROWS_AS(d_set(thue_morse(), 2, -1, 5), std::invalid_argument);
}

TEST_CASE("d_set matches the signature pair count directly") {
  InfiniteWord tm = thue_morse();
  for (int k : {2, 3, 4}) {
    for (std::int64_t sigma = 0; sigma <= 3; ++sigma) {
      PrefixSet s = d_set(tm, k, sigma, 30);
      for (std::uint64_t m = 1; m <= 30; ++m) {
        Word p = tm.prefix(k * m);
        bool in = equal_pair_count(block_signature(p, k)) <= sigma;
        bool listed = std::binary_search(s.members.begin(), s.members.end(), m);
        CHECK(in == listed);
      }
    }
  }
}

TEST_CASE("ap_set with lambda 1 is the plain distinct-blocks set") {
  std::vector<InfiniteWord> words{thue_morse(), fibonacci_word(),
                                  constant_word()};
  for (const InfiniteWord& x : words) {
    for (int k = 2; k <= 5; ++k) {
      PrefixSet s = ap_set(x, k, 1, 50);
      for (std::uint64_t m = 1; m <= 50; ++m) {
        bool direct = blocks_all_distinct(x.prefix(k * m), k);
        bool listed = std::binary_search(s.members.begin(), s.members.end(), m);
        CHECK(direct == listed);
      }
    }
  }
}

TEST_CASE("prefixes outside an AP set exceed the matching pair budget") {
  // A prefix that is not a (k,lambda)-anti-power has an equality class of
  // size lambda+1 or more, which forces at least C(lambda+1,2) equal
  // pairs. So AP-set non-members can never sit inside the pair budget
  // C(lambda+1,2) - 1.
  std::vector<InfiniteWord> words{thue_morse(), fibonacci_word(),
                                  gamma_word(4)};
  for (const InfiniteWord& x : words) {
    for (int k = 2; k <= 5; ++k) {
      for (int lambda = 1; lambda < k; ++lambda) {
        std::int64_t pairs_forced =
            std::int64_t(lambda + 1) * lambda / 2;  // C(lambda+1, 2)
        PrefixSet ap = ap_set(x, k, lambda, 50);
        PrefixSet d = d_set(x, k, pairs_forced - 1, 50);
        for (std::uint64_t m = 1; m <= 50; ++m) {
          bool in_ap =
              std::binary_search(ap.members.begin(), ap.members.end(), m);
          bool in_d = std::binary_search(d.members.begin(), d.members.end(), m);
          if (!in_ap) CHECK_FALSE(in_d);
        }
      }
    }
  }
}

TEST_CASE("prefix sets grow with their slack parameter") {
  std::vector<InfiniteWord> words{thue_morse(), fibonacci_word(),
                                  gamma_word(4)};
  for (const InfiniteWord& x : words) {
    for (int k = 2; k <= 5; ++k) {
      for (int lambda = 1; lambda < k; ++lambda) {
        CHECK(is_subset(ap_set(x, k, lambda, 40).members,
                        ap_set(x, k, lambda + 1, 40).members));
      }
      for (std::int64_t sigma = 0; sigma < k * (k - 1) / 2; ++sigma) {
        CHECK(is_subset(d_set(x, k, sigma, 40).members,
                        d_set(x, k, sigma + 1, 40).members));
      }
    }
  }
}

TEST_CASE("density_estimate endpoints") {
  PrefixSet full{PrefixSetKind::kAntiPower, 2, 1, 0, 10, range_1_to(10)};
  DensityEstimate e = density_estimate(full);
  CHECK(e.ratios.size() == 10);
  CHECK(e.lower_proxy == 1.0);
  CHECK(e.upper_proxy == 1.0);

  PrefixSet empty{PrefixSetKind::kAntiPower, 2, 1, 0, 10, {}};
  e = density_estimate(empty);
  CHECK(e.lower_proxy == 0.0);
  CHECK(e.upper_proxy == 0.0);

  PrefixSet evens{PrefixSetKind::kPairBudget, 2, 0, 1, 100, {}};
  for (std::uint64_t m = 2; m <= 100; m += 2) evens.members.push_back(m);
  e = density_estimate(evens);
  CHECK(e.lower_proxy >= 0.49);
  CHECK(e.upper_proxy <= 0.51);
  CHECK(e.lower_proxy <= e.upper_proxy);
  CHECK(e.tail_begin == 50);

  // ratios hold the whole grid: ratio at n is |S cap [n]| / n.
  CHECK(e.ratios[0] == 0.0);
  CHECK(e.ratios[1] == doctest::Approx(0.5));
  CHECK(e.ratios[99] == doctest::Approx(0.5));

  // An explicit tail window start overrides the default.
  DensityEstimate whole = density_estimate(evens, 1);
  CHECK(whole.lower_proxy == 0.0);
  CHECK(whole.tail_begin == 1);

  CHECK_THROWS_AS(density_estimate(PrefixSet{PrefixSetKind::kAntiPower, 2, 1,
                                             0, 1, {1}}),
                  std::invalid_argument);
}

TEST_CASE("minimal_antipower_prefix fixed cases") {
  InfiniteWord tm = thue_morse();
  CHECK(minimal_antipower_prefix(tm, 2, 10) == 1);
  CHECK(minimal_antipower_prefix(tm, 3, 10) == 5);
  CHECK_FALSE(minimal_antipower_prefix(constant_word(), 2, 10).has_value());

  // m = 5 really is a 3-anti-power split and everything smaller fails.
  CHECK(blocks_all_distinct(tm.prefix(15), 3));
  for (std::uint64_t m = 1; m < 5; ++m) {
    CHECK_FALSE(blocks_all_distinct(tm.prefix(3 * m), 3));
  }

  // Consistency with the AP set: the minimum is the first member.
  PrefixSet s = ap_set(tm, 3, 1, 10);
  REQUIRE_FALSE(s.members.empty());
  CHECK(s.members.front() == 5);
}
