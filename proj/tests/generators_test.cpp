#include "blockpat/generators.hpp"

#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "blockpat/patterns.hpp"
#include "blockpat/words.hpp"

using namespace blockpat;

TEST_CASE("thue_morse prefixes") {
  InfiniteWord t = thue_morse();
  CHECK(t.at(1) == 0);
  CHECK(t.prefix(8).to_text() == "01101001");
  CHECK(t.prefix(16).to_text() == "0110100110010110");
}

TEST_CASE("fibonacci_word prefixes") {
  InfiniteWord f = fibonacci_word();
  CHECK(f.prefix(3).to_text() == "010");
  CHECK(f.prefix(8).to_text() == "01001010");
  CHECK(f.prefix(13).to_text() == "0100101001001");
}

TEST_CASE("mechanical word, rational angles") {
  Angle half = Angle::from_rationals(BigRat(1, 2), BigRat(0));
  CHECK(mechanical(half, MechanicalVariant::kUpper).prefix(4).to_text() ==
        "0101");

  // Boundary: theta = x0 = 1/2 puts position 1 exactly on 1-theta. The
  // upper interval [1-theta, 1) contains it, the lower (1-theta, 1) does not.
  Angle boundary = Angle::from_rationals(BigRat(1, 2), BigRat(1, 2));
  CHECK(mechanical(boundary, MechanicalVariant::kUpper).at(1) == 1);
  CHECK(mechanical(boundary, MechanicalVariant::kLower).at(1) == 0);

  // Rational angles give purely periodic words with period q.
  for (int q : {3, 5, 7}) {
    Angle a = Angle::from_rationals(BigRat(1, q), BigRat(1, 3));
    for (auto variant : {MechanicalVariant::kUpper, MechanicalVariant::kLower}) {
      InfiniteWord s = mechanical(a, variant);
      for (std::uint64_t n = 1; n <= std::uint64_t(3 * q); ++n) {
        CHECK(s.at(n) == s.at(n + q));
      }
    }
  }
}

TEST_CASE("mechanical word, fibonacci preset") {
  InfiniteWord m =
      mechanical(Angle::fibonacci_preset(), MechanicalVariant::kUpper);
  CHECK(m.prefix(8).to_text() == "01001010");

  InfiniteWord f = fibonacci_word();
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    REQUIRE(m.at(n) == f.at(n));
  }
}

TEST_CASE("angle parsing and reduction") {
  // Bare decimals are taken exactly; 0.9 forces min(theta,1-theta) = 1/10.
  CHECK(sturmian_power_bound(Angle::parse("0.9", "0")) == 11);
  CHECK(sturmian_power_bound(Angle::parse("1/2", "0")) == 3);
  CHECK(sturmian_power_bound(Angle::fibonacci_preset()) == 4);

  // theta is reduced mod 1, x0 into [0,1).
  CHECK(sturmian_power_bound(Angle::parse("5/2", "7/3")) == 3);

  CHECK_THROWS_AS(Angle::parse("1", "0"), std::invalid_argument);
  CHECK_THROWS_AS(Angle::parse("0", "0"), std::invalid_argument);
  CHECK_THROWS_AS(Angle::parse("3/1", "0"), std::invalid_argument);
}

TEST_CASE("stated precision too coarse raises instead of guessing") {
  // With only 2 certified bits, theta = 0.5 +/- 1/4: position 2 cannot be
  // separated from the interval endpoint 1-theta.
  Angle coarse = Angle::parse("0.5", "0", 2);
  InfiniteWord s = mechanical(coarse, MechanicalVariant::kUpper);
  CHECK(s.at(1) == 0);  // position 0 is certifiably below 1-theta
  CHECK_THROWS_AS(s.at(2), PrecisionExhausted);

  // The power bound has the same certification duty.
  CHECK_THROWS_AS(sturmian_power_bound(Angle::parse("0.3", "0", 2)),
                  PrecisionExhausted);
}

TEST_CASE("sesquipower expansion") {
  SesquipowerSeed ones{[](std::uint64_t) { return Word::from_text("1"); }, 2};
  CHECK(sesquipower(ones).prefix(7).to_text() == "1111111");

  SesquipowerSeed mixed{
      [](std::uint64_t n) { return Word::from_text(n == 1 ? "0" : "1"); }, 2};
  CHECK(sesquipower(mixed).prefix(7).to_text() == "0101010");
}

TEST_CASE("sesquipower factors recur") {
  // Every factor of w_n occurs at least twice in w_{n+2}: w_{n+2} contains
  // two disjoint copies of w_{n+1}, hence four of w_n.
  SesquipowerSeed seed{
      [](std::uint64_t n) { return Word::from_text(n % 2 == 1 ? "01" : "1"); },
      2};
  InfiniteWord x = sesquipower(seed);

  // |w_1| = 2, |w_2| = 5, |w_3| = 12, |w_4| = 25, |w_5| = 52.
  std::vector<std::size_t> lens{2, 5, 12, 25, 52};
  for (int n = 0; n + 2 < static_cast<int>(lens.size()); ++n) {
    Word small = x.prefix(lens[n]);
    Word big = x.prefix(lens[n + 2]);
    for (std::size_t i = 1; i <= small.size(); ++i) {
      for (std::size_t j = i; j <= small.size(); ++j) {
        Word f = factor(small, i, j);
        int occurrences = 0;
        for (std::size_t s = 1; s + f.size() - 1 <= big.size(); ++s) {
          if (factor(big, s, s + f.size() - 1) == f) ++occurrences;
        }
        CHECK(occurrences >= 2);
      }
    }
  }
}

TEST_CASE("recurrent_avoider structure") {
  InfiniteWord r6 = recurrent_avoider(6);
  CHECK(r6.prefix(5).to_text() == "01110");
  // w_2 = w_1 1^15 w_1 of length 25.
  CHECK(r6.prefix(25).to_text() == "01110" + std::string(15, '1') + "01110");

  CHECK(recurrent_avoider(7).prefix(6).to_text() == "011110");
  CHECK_THROWS_AS(recurrent_avoider(5), std::invalid_argument);
}

TEST_CASE("recurrent_avoider is the sesquipower of its own tail seeds") {
  const int k = 6;
  // First seed w_1 = 0 1^{k-3} 0, then v_n = 1^{(k-3)(k-1)^{n-1}}.
  SesquipowerSeed seed{[k](std::uint64_t n) {
                         if (n == 1) {
                           return Word::from_text(
                               "0" + std::string(k - 3, '1') + "0");
                         }
                         std::uint64_t len = k - 3;
                         for (std::uint64_t i = 1; i < n; ++i) len *= k - 1;
                         return Word(std::vector<Letter>(len, 1), 2);
                       },
                       2};
  CHECK(sesquipower(seed).prefix(625) == recurrent_avoider(k).prefix(625));
}

TEST_CASE("gamma_word marks exactly the rule positions") {
  InfiniteWord g = gamma_word(4);  // default gamma_i = 5^{i-1}
  CHECK(g.prefix(6).to_text() == "100010");
  CHECK(g.at(25) == 1);
  CHECK(g.at(24) == 0);
  CHECK(g.at(26) == 0);

  InfiniteWord custom = gamma_word(4, [](std::uint64_t i) {
    BigInt v = 2;
    for (std::uint64_t j = 1; j < i; ++j) v *= 6;
    return v;  // 2, 12, 72, ...
  });
  CHECK(custom.prefix(13).to_text() == "0100000000010");

  // gamma_2 = 6 < 5 * gamma_1 breaks the growth requirement.
  InfiniteWord bad = gamma_word(4, [](std::uint64_t i) {
    return BigInt(i == 1 ? 2 : 6);
  });
  CHECK_THROWS_AS(bad.at(7), std::runtime_error);
  CHECK_THROWS_AS(gamma_word(3), std::invalid_argument);
}

TEST_CASE("infinite alphabet word doubles each letter run") {
  InfiniteWord y = infinite_alphabet_power_free();
  CHECK(y.prefix(6).to_text() == "int:1,1,2,2,2,2");
  CHECK(y.at(7) == 3);
  CHECK(y.at(14) == 3);
  CHECK(y.at(15) == 4);
  CHECK(y.alphabet_size() == kUnboundedAlphabet);
}

TEST_CASE("lower_bound_word shape and avoidance") {
  Word w4 = lower_bound_word(4);
  CHECK(w4.to_text() == "10001000100100100010001");
  CHECK(w4.size() == 23);
  CHECK(lower_bound_word(5).size() == 39);
  CHECK_THROWS_AS(lower_bound_word(3), std::invalid_argument);

  for (int k : {4, 5}) {
    Word w = lower_bound_word(k);
    CHECK(w.size() == std::size_t(2 * k * k - 2 * k - 1));
    CHECK_FALSE(contains(w, FactorPredicate::power(k)).has_value());
    CHECK_FALSE(contains(w, FactorPredicate::anti_power(k)).has_value());
  }
}

TEST_CASE("sigma_avoider_word shape and avoidance") {
  CHECK(sigma_avoider_word(4, 1).to_text() == "0001000");
  CHECK(sigma_avoider_word(5, 3).to_text() == "000010000");
  CHECK_THROWS_AS(sigma_avoider_word(2, 3), std::invalid_argument);

  for (auto [k, sigma] : {std::pair{4, 1}, {5, 1}, {5, 3}, {6, 1}}) {
    Word w = sigma_avoider_word(k, sigma);
    CHECK_FALSE(contains(w, FactorPredicate::power(k)).has_value());
    CHECK_FALSE(contains(w, FactorPredicate::pair_budget(k, sigma)).has_value());
  }
}

TEST_CASE("infinite alphabet word has bounded powers of every factor") {
  InfiniteWord y = infinite_alphabet_power_free();
  Word p = y.prefix(2100);

  // The run of letter i has length exactly 2^i, so the highest power of the
  // single letter i is 2^i: large but finite, and different for every i.
  for (Letter i = 1; i <= 10; ++i) {
    std::size_t longest = 0, current = 0;
    for (std::size_t pos = 1; pos <= p.size(); ++pos) {
      current = p.at1(pos) == i ? current + 1 : 0;
      longest = std::max(longest, current);
    }
    CHECK(longest == (std::size_t(1) << i));
  }

  // A factor touching two different letters pins down its position, so it
  // occurs exactly once and its square never occurs.
  Word q = y.prefix(1022);
  for (std::size_t i = 1; i + 3 <= q.size(); ++i) {
    Word f = factor(q, i, i + 3);
    bool mixed = false;
    for (std::size_t j = 2; j <= f.size(); ++j) {
      if (f.at1(j) != f.at1(1)) mixed = true;
    }
    if (!mixed) continue;
    int occurrences = 0;
    for (std::size_t s = 1; s + 3 <= q.size(); ++s) {
      if (factor(q, s, s + 3) == f) ++occurrences;
    }
    CHECK(occurrences == 1);
  }
}

TEST_CASE("infinite alphabet word has no 17-anti-power prefix") {
  InfiniteWord y = infinite_alphabet_power_free();
  for (std::uint64_t m = 1; m <= 50; ++m) {
    CAPTURE(m);
    CHECK_FALSE(is_anti_power(y.prefix(17 * m), 17));
  }
}

TEST_CASE("recurrent_avoider(6) has no (6,1)-anti-power factor") {
  Word p = recurrent_avoider(6).prefix(625);
  CHECK_FALSE(contains(p, FactorPredicate::k_lambda_anti_power(6, 1)).has_value());
}

TEST_CASE("gamma_word avoids (k, k-3)-anti-power factors") {
  for (int k : {4, 5}) {
    CAPTURE(k);
    Word p = gamma_word(k).prefix(4000);
    CHECK_FALSE(
        contains(p, FactorPredicate::k_lambda_anti_power(k, k - 3)).has_value());
  }
}
