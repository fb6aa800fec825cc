#include "blockpat/expectation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "blockpat/runtime.hpp"

namespace blockpat {

namespace {

void validate_query(const ExpectationQuery& q, const char* who) {
  if (q.k < 1) throw std::invalid_argument(std::string(who) + ": k must be >= 1");
  if (q.alpha < 2) {
    throw std::invalid_argument(std::string(who) + ": alpha must be >= 2");
  }
  if (q.n < static_cast<std::uint64_t>(q.k)) {
    throw std::invalid_argument(std::string(who) + ": need k <= n");
  }
  if (q.mu.k() != q.k) {
    throw std::invalid_argument(std::string(who) + ": mu is not a k-signature");
  }
}

// Enumeration guard: all alpha^n words are materialized.
std::uint64_t checked_word_count(std::uint64_t n, int alpha, const char* who) {
  constexpr std::uint64_t kLimit = 10'000'000;
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(alpha);
    if (total > kLimit) {
      throw std::invalid_argument(std::string(who) +
                                  ": alpha^n exceeds the 10^7 guard");
    }
  }
  return total;
}

// Direct (hash-free) signature of the k x m factor at 0-based offset s;
// independent of the FactorComparer machinery on purpose, so enumeration
// results can serve as an oracle for it.
void factor_signature(const std::vector<Letter>& w, std::size_t s, int k,
                      std::size_t m, std::vector<std::size_t>& rep,
                      std::vector<int>& count, std::vector<int>& mu) {
  int classes = 0;
  for (int b = 0; b < k; ++b) {
    std::size_t a = s + static_cast<std::size_t>(b) * m;
    bool placed = false;
    for (int r = 0; r < classes; ++r) {
      if (std::equal(w.begin() + a, w.begin() + a + m, w.begin() + rep[r])) {
        ++count[r];
        placed = true;
        break;
      }
    }
    if (!placed) {
      rep[classes] = a;
      count[classes] = 1;
      ++classes;
    }
  }
  mu.assign(static_cast<std::size_t>(k), 0);
  for (int r = 0; r < classes; ++r) ++mu[static_cast<std::size_t>(count[r]) - 1];
}

std::uint64_t count_matching_factors(const std::vector<Letter>& w, int k,
                                     const std::vector<int>& target,
                                     std::vector<std::size_t>& rep,
                                     std::vector<int>& count,
                                     std::vector<int>& mu) {
  std::uint64_t hits = 0;
  std::size_t n = w.size();
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t max_m = (n - s) / static_cast<std::size_t>(k);
    for (std::size_t m = 1; m <= max_m; ++m) {
      factor_signature(w, s, k, m, rep, count, mu);
      if (mu == target) ++hits;
    }
  }
  return hits;
}

// Visits all alpha^n words in odometer order.
template <class F>
void for_each_word(std::uint64_t n, int alpha, F&& body) {
  std::vector<Letter> w(n, 0);
  while (true) {
    body(w);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++w[pos] < alpha) break;
      w[pos] = 0;
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

double pow_int(double base, std::uint64_t exp) {
  double result = 1.0;
  while (exp) {
    if (exp & 1u) result *= base;
    exp >>= 1u;
    if (exp) base *= base;
  }
  return result;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr int kStreams = 64;
constexpr double kZ99 = 2.5758293035489004;  // two-sided 99% normal quantile

}  // namespace

BigInt signature_partition_count(const BlockSignature& mu) {
  BigInt numer = factorial(static_cast<unsigned>(mu.k()));
  BigInt denom = 1;
  for (int s = 1; s <= mu.k(); ++s) {
    int count = mu.mu()[static_cast<std::size_t>(s) - 1];
    if (count == 0) continue;
    denom *= ipow(factorial(static_cast<unsigned>(s)),
                  static_cast<unsigned>(count));
    denom *= factorial(static_cast<unsigned>(count));
  }
  BigInt q = numer / denom;
  if (q * denom != numer) {
    throw std::logic_error("signature_partition_count: non-integer result");
  }
  return q;
}

BigRat expected_block_patterns_exact(const ExpectationQuery& q) {
  validate_query(q, "expected_block_patterns");
  const std::uint64_t big_m = q.n / static_cast<std::uint64_t>(q.k);
  const int p = q.mu.class_count();
  const BigInt w_mu = signature_partition_count(q.mu);
  // Accumulate over the common denominator alpha^(k*M):
  //   sum_m (n+1-km) * W * falling(alpha^m, p) * alpha^{k(M-m)}
  BigInt numer = 0;
  for (std::uint64_t m = 1; m <= big_m; ++m) {
    BigInt am = ipow(q.alpha, static_cast<unsigned>(m));
    BigInt falling = 1;  // hits 0 when alpha^m < p (too few distinct blocks)
    for (int l = 0; l < p && falling != 0; ++l) falling *= am - l;
    if (falling == 0) continue;
    BigInt positions = BigInt(q.n + 1) - BigInt(q.k) * m;
    BigInt shift =
        ipow(q.alpha, static_cast<unsigned>(q.k) *
                          static_cast<unsigned>(big_m - m));
    numer += positions * w_mu * falling * shift;
  }
  BigInt denom = ipow(q.alpha, static_cast<unsigned>(q.k) *
                                   static_cast<unsigned>(big_m));
  return BigRat(numer, denom);
}

double expected_block_patterns(const ExpectationQuery& q) {
  return to_double(expected_block_patterns_exact(q));
}

double expected_k_powers_closed(std::uint64_t n, int k, int alpha) {
  if (k < 2) throw std::invalid_argument("expected_k_powers_closed: k >= 2");
  if (alpha < 2) {
    throw std::invalid_argument("expected_k_powers_closed: alpha >= 2");
  }
  if (n < static_cast<std::uint64_t>(k)) {
    throw std::invalid_argument("expected_k_powers_closed: need n >= k");
  }
  // q = alpha^(1-k) < 1 always (alpha >= 2, k >= 2), so the geometric sums
  // below never degenerate.
  const double q = 1.0 / pow_int(static_cast<double>(alpha),
                                 static_cast<std::uint64_t>(k) - 1);
  const std::uint64_t big_m = n / static_cast<std::uint64_t>(k);
  const double q_m = pow_int(q, big_m);
  const double one_minus = 1.0 - q;
  const double s1 = q * (1.0 - q_m) / one_minus;
  const double s2 = q *
                    (1.0 - static_cast<double>(big_m + 1) * q_m +
                     static_cast<double>(big_m) * q_m * q) /
                    (one_minus * one_minus);
  return static_cast<double>(n + 1) * s1 - static_cast<double>(k) * s2;
}

double expected_anti_powers(std::uint64_t n, int k, int alpha) {
  if (k < 1) throw std::invalid_argument("expected_anti_powers: k >= 1");
  if (alpha < 2) {
    throw std::invalid_argument("expected_anti_powers: alpha >= 2");
  }
  const std::uint64_t big_m = n / static_cast<std::uint64_t>(k);
  double total = 0.0;
  for (std::uint64_t m = 1; m <= big_m; ++m) {
    double am = pow_int(static_cast<double>(alpha), m);
    double prob = 1.0;
    for (int l = 1; l < k && prob > 0.0; ++l) {
      prob *= 1.0 - static_cast<double>(l) / am;
    }
    if (prob <= 0.0) continue;
    total += static_cast<double>(n + 1 - static_cast<std::uint64_t>(k) * m) *
             prob;
  }
  return total;
}

BigRat brute_force_expectation(const ExpectationQuery& q) {
  validate_query(q, "brute_force_expectation");
  std::uint64_t words = checked_word_count(q.n, q.alpha, "brute_force_expectation");
  std::vector<std::size_t> rep(static_cast<std::size_t>(q.k));
  std::vector<int> count(static_cast<std::size_t>(q.k));
  std::vector<int> mu;
  std::uint64_t total = 0;
  for_each_word(q.n, q.alpha, [&](const std::vector<Letter>& w) {
    total += count_matching_factors(w, q.k, q.mu.mu(), rep, count, mu);
  });
  return BigRat(BigInt(total), BigInt(words));
}

std::map<std::vector<int>, std::uint64_t> brute_force_signature_totals(
    std::uint64_t n, int k, int alpha) {
  if (k < 1) throw std::invalid_argument("brute_force_signature_totals: k >= 1");
  if (alpha < 2) {
    throw std::invalid_argument("brute_force_signature_totals: alpha >= 2");
  }
  checked_word_count(n, alpha, "brute_force_signature_totals");
  std::vector<std::size_t> rep(static_cast<std::size_t>(k));
  std::vector<int> count(static_cast<std::size_t>(k));
  std::vector<int> mu;
  std::map<std::vector<int>, std::uint64_t> totals;
  for_each_word(n, alpha, [&](const std::vector<Letter>& w) {
    for (std::size_t s = 0; s < w.size(); ++s) {
      std::size_t max_m = (w.size() - s) / static_cast<std::size_t>(k);
      for (std::size_t m = 1; m <= max_m; ++m) {
        factor_signature(w, s, k, m, rep, count, mu);
        ++totals[mu];
      }
    }
  });
  return totals;
}

MonteCarloResult monte_carlo_expectation(const ExpectationQuery& q,
                                         std::uint64_t trials,
                                         std::uint64_t seed) {
  validate_query(q, "monte_carlo_expectation");
  if (trials < 100) {
    throw std::invalid_argument("monte_carlo_expectation: trials must be >= 100");
  }

  struct StreamTally {
    std::uint64_t sum = 0;
    unsigned __int128 sum_sq = 0;
  };
  std::vector<StreamTally> tallies(kStreams);

  // Stream s always simulates the same trials for a given seed, no matter
  // how many workers run; tallies are merged in stream order.
  auto run_stream = [&](int s) {
    std::uint64_t quota = trials / kStreams +
                          (static_cast<std::uint64_t>(s) < trials % kStreams);
    if (quota == 0) return;
    std::mt19937_64 eng(
        splitmix64(seed ^ (0xD1B54A32D192ED03ULL * (s + 1))));
    const std::uint64_t alpha = static_cast<std::uint64_t>(q.alpha);
    const std::uint64_t reject_from =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % alpha;
    std::vector<Letter> w(q.n);
    std::vector<std::size_t> rep(static_cast<std::size_t>(q.k));
    std::vector<int> count(static_cast<std::size_t>(q.k));
    std::vector<int> mu;
    StreamTally& tally = tallies[static_cast<std::size_t>(s)];
    for (std::uint64_t t = 0; t < quota; ++t) {
      for (auto& letter : w) {
        std::uint64_t v;
        do {
          v = eng();
        } while (v >= reject_from);
        letter = static_cast<Letter>(v % alpha);
      }
      std::uint64_t c = count_matching_factors(w, q.k, q.mu.mu(), rep, count, mu);
      tally.sum += c;
      tally.sum_sq += static_cast<unsigned __int128>(c) * c;
    }
  };

  int workers = std::min(worker_count(), kStreams);
  if (workers <= 1) {
    for (int s = 0; s < kStreams; ++s) run_stream(s);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) {
      pool.emplace_back([&] {
        for (int s = next.fetch_add(1); s < kStreams; s = next.fetch_add(1)) {
          run_stream(s);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::uint64_t sum = 0;
  unsigned __int128 sum_sq = 0;
  for (const auto& tally : tallies) {
    sum += tally.sum;
    sum_sq += tally.sum_sq;
  }

  const double t = static_cast<double>(trials);
  const double mean = static_cast<double>(sum) / t;
  double variance = 0.0;
  if (trials > 1) {
    variance = (static_cast<double>(sum_sq) -
                static_cast<double>(sum) * static_cast<double>(sum) / t) /
               (t - 1.0);
    variance = std::max(variance, 0.0);
  }
  MonteCarloResult out;
  out.mean = mean;
  out.ci99_half_width = kZ99 * std::sqrt(variance / t);
  out.trials = trials;
  out.seed = seed;
  return out;
}

}  // namespace blockpat
