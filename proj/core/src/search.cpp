#include "blockpat/search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "blockpat/runtime.hpp"
#include "block_scan.hpp"
#include "hash61.hpp"

namespace blockpat {

namespace {

using detail::encode_letter;
using detail::kHashBase;
using detail::mod61;
using detail::mulmod61;

struct ConstraintView {
  bool budget_mode;
  int k;
  int lambda;
  std::int64_t sigma;
};

ConstraintView view_of(const FactorPredicate& p) {
  switch (p.kind()) {
    case FactorPredicate::Kind::kAntiPower:
      return {false, p.order(), 1, 0};
    case FactorPredicate::Kind::kLambdaAntiPower:
      return {false, p.order(), p.lambda(), 0};
    case FactorPredicate::Kind::kPairBudget:
      return {true, p.order(), 0, p.sigma()};
    case FactorPredicate::Kind::kPower:
      break;
  }
  throw std::invalid_argument(
      "search: the constraint must be an anti-power family predicate");
}

void validate_spec(const AvoidanceSpec& spec) {
  if (spec.alpha < 1) {
    throw std::invalid_argument("search: alpha must be >= 1");
  }
  if (spec.ell < 2) throw std::invalid_argument("search: ell must be >= 2");
  ConstraintView con = view_of(spec.constraint);
  if (con.k < 2) {
    throw std::invalid_argument("search: constraint order k must be >= 2");
  }
}

// One depth-first worker: the current word, its rolling prefix hashes, and
// the best avoiding word seen. Words are grown letter by letter; a node is
// abandoned the moment some forbidden factor ends at its last position
// (factors ending earlier were checked at shallower depths).
class Frontier {
 public:
  Frontier(const AvoidanceSpec& spec, std::uint64_t cap,
           std::atomic<bool>* stop,
           std::chrono::steady_clock::time_point deadline, bool has_deadline)
      : alpha_(spec.alpha),
        ell_(spec.ell),
        con_(view_of(spec.constraint)),
        cap_(cap),
        scratch_(con_.k),
        stop_(stop),
        deadline_(deadline),
        has_deadline_(has_deadline) {
    hash_.push_back(0);
    pow_.push_back(1);
  }

  void seed_from(const std::vector<Letter>& prefix) {
    for (Letter c : prefix) push(c);
  }

  // Explores all canonical extensions of the current word. used_max is the
  // largest letter used so far (-1 for the empty word); the canonical form
  // admits letters 0..used_max+1 only.
  void dfs(int used_max) {
    if (word_.size() >= cap_) {
      cap_reached = true;
      return;
    }
    const int limit = std::min(alpha_ - 1, used_max + 1);
    for (int c = 0; c <= limit; ++c) {
      if (stop_->load(std::memory_order_relaxed)) return;
      push(static_cast<Letter>(c));
      ++nodes;
      if ((nodes & 0xFFF) == 0) check_clock();
      if (!forbidden_tail()) {
        if (word_.size() > best_len) {
          best_len = word_.size();
          best_word = word_;
        }
        dfs(std::max(used_max, c));
      }
      pop();
    }
  }

  // Same walk, but cut at depth `depth`: prefixes reaching it are handed
  // back as independent subtasks instead of being explored.
  void collect_tasks(int used_max, std::size_t depth,
                     std::vector<std::pair<std::vector<Letter>, int>>& out) {
    if (word_.size() == depth) {
      out.emplace_back(word_, used_max);
      return;
    }
    const int limit = std::min(alpha_ - 1, used_max + 1);
    for (int c = 0; c <= limit; ++c) {
      push(static_cast<Letter>(c));
      ++nodes;
      if (!forbidden_tail()) {
        if (word_.size() > best_len) {
          best_len = word_.size();
          best_word = word_;
        }
        collect_tasks(std::max(used_max, c), depth, out);
      }
      pop();
    }
  }

  std::uint64_t nodes = 0;
  std::size_t best_len = 0;
  std::vector<Letter> best_word;
  bool cap_reached = false;

 private:
  void push(Letter c) {
    word_.push_back(c);
    hash_.push_back(mod61(mulmod61(hash_.back(), kHashBase) + encode_letter(c)));
    pow_.push_back(mulmod61(pow_.back(), kHashBase));
  }

  void pop() {
    word_.pop_back();
    hash_.pop_back();
    pow_.pop_back();
  }

  void check_clock() {
    if (has_deadline_ && std::chrono::steady_clock::now() > deadline_) {
      stop_->store(true, std::memory_order_relaxed);
    }
  }

  // Exact equality of word_[i-1 ..] and word_[j-1 ..] spans (1-based starts,
  // matching the block_scan helpers).
  bool equal(std::size_t i, std::size_t j, std::size_t len) const {
    const Letter* base = word_.data();
    --i;
    --j;
    if (len <= 4) {
      return std::equal(base + i, base + i + len, base + j);
    }
    std::uint64_t hi = hash_[i + len] + detail::kHashMod -
                       mulmod61(hash_[i], pow_[len]);
    std::uint64_t hj = hash_[j + len] + detail::kHashMod -
                       mulmod61(hash_[j], pow_[len]);
    if (hi % detail::kHashMod != hj % detail::kHashMod) return false;
    return std::equal(base + i, base + i + len, base + j);
  }

  struct Cmp {
    const Frontier* f;
    bool equal(std::size_t i, std::size_t j, std::size_t len) const {
      return f->equal(i, j, len);
    }
  };

  // Does some forbidden factor end at the last position?
  bool forbidden_tail() {
    const std::size_t n = word_.size();
    const Cmp cmp{this};
    for (std::size_t m = 1; m * static_cast<std::size_t>(ell_) <= n; ++m) {
      std::size_t start = n - m * static_cast<std::size_t>(ell_) + 1;
      if (detail::power_at(cmp, start, ell_, m)) return true;
    }
    const std::size_t k = static_cast<std::size_t>(con_.k);
    for (std::size_t m = 1; m * k <= n; ++m) {
      std::size_t start = n - m * k + 1;
      bool hit = con_.budget_mode
                     ? detail::budget_at(cmp, start, con_.k, m, con_.sigma,
                                         scratch_)
                     : detail::lambda_at(cmp, start, con_.k, m, con_.lambda,
                                         scratch_);
      if (hit) return true;
    }
    return false;
  }

  const int alpha_;
  const int ell_;
  const ConstraintView con_;
  const std::uint64_t cap_;
  std::vector<Letter> word_;
  std::vector<std::uint64_t> hash_;  // hash_[i] = hash of the first i letters
  std::vector<std::uint64_t> pow_;
  detail::ClassScratch scratch_;
  std::atomic<bool>* stop_;
  const std::chrono::steady_clock::time_point deadline_;
  const bool has_deadline_;
};

}  // namespace

std::uint64_t default_length_cap(const AvoidanceSpec& spec) {
  validate_spec(spec);
  ConstraintView con = view_of(spec.constraint);
  if (spec.ell != con.k) {
    throw std::invalid_argument(
        "default_length_cap: no a-priori bound for ell != k; supply an "
        "explicit length cap");
  }
  const std::uint64_t k = static_cast<std::uint64_t>(con.k);
  const std::uint64_t base = k * k * k - k * k + k;
  std::uint64_t mult;
  if (con.budget_mode) {
    std::uint64_t sigma = con.sigma < 1 ? 1 : static_cast<std::uint64_t>(con.sigma);
    mult = (k * (k - 1) / 2) / sigma;
  } else {
    const std::uint64_t lam = static_cast<std::uint64_t>(con.lambda);
    mult = (k * k - k) / (lam * lam + lam);
  }
  return std::max(mult * base, k);
}

SearchResult max_avoiding_length(const AvoidanceSpec& spec, SearchCaps caps) {
  validate_spec(spec);
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t cap =
      caps.length_cap > 0 ? caps.length_cap : default_length_cap(spec);
  const bool has_deadline = caps.time_cap.count() > 0;
  const auto deadline = t0 + caps.time_cap;

  std::atomic<bool> stop{false};
  Frontier seed(spec, cap, &stop, deadline, has_deadline);

  std::size_t best_len = 0;
  std::vector<Letter> best_word;
  std::uint64_t nodes = 0;
  bool cap_reached = false;

  const std::size_t split_depth =
      std::min<std::uint64_t>(std::max(caps.split_depth, 0), cap);
  std::vector<std::pair<std::vector<Letter>, int>> tasks;
  if (split_depth == cap) {
    // Cap shallower than the split depth: just run the plain DFS.
    seed.dfs(-1);
  } else {
    seed.collect_tasks(-1, split_depth, tasks);
  }
  best_len = seed.best_len;
  best_word = seed.best_word;
  nodes = seed.nodes;
  cap_reached = seed.cap_reached;

  if (!tasks.empty()) {
    struct TaskResult {
      std::size_t best_len = 0;
      std::vector<Letter> best_word;
      std::uint64_t nodes = 0;
      bool cap_reached = false;
    };
    std::vector<TaskResult> results(tasks.size());

    auto run_task = [&](std::size_t t) {
      Frontier frontier(spec, cap, &stop, deadline, has_deadline);
      frontier.seed_from(tasks[t].first);
      frontier.dfs(tasks[t].second);
      results[t] = {frontier.best_len, std::move(frontier.best_word),
                    frontier.nodes, frontier.cap_reached};
    };

    int workers = std::min<std::size_t>(worker_count(caps.workers), tasks.size());
    if (workers <= 1) {
      for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int i = 0; i < workers; ++i) {
        pool.emplace_back([&] {
          for (std::size_t t = next.fetch_add(1); t < tasks.size();
               t = next.fetch_add(1)) {
            run_task(t);
          }
        });
      }
      for (auto& th : pool) th.join();
    }

    // Tasks are in DFS (lexicographic) order; taking the first task that
    // attains the maximum keeps the witness the lexicographically least
    // maximal word no matter how the workers were scheduled.
    for (const auto& r : results) {
      nodes += r.nodes;
      cap_reached = cap_reached || r.cap_reached;
      if (r.best_len > best_len) {
        best_len = r.best_len;
        best_word = r.best_word;
      }
    }
  }

  SearchResult out;
  out.threshold = best_len + 1;
  out.witness = Word(std::move(best_word), spec.alpha);
  out.nodes_explored = nodes;
  out.truncated = stop.load() || cap_reached;
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);

  // A wrong witness here would mean the incremental pruning and the
  // reference scans disagree; fail loudly rather than report it.
  if (contains(out.witness, FactorPredicate::power(spec.ell)) ||
      contains(out.witness, spec.constraint)) {
    throw std::logic_error("max_avoiding_length: witness failed re-verification");
  }
  return out;
}

std::uint64_t n_alpha(int ell, int k, int alpha, SearchCaps caps) {
  AvoidanceSpec spec{alpha, ell, FactorPredicate::anti_power(k)};
  SearchResult result = max_avoiding_length(spec, caps);
  if (result.truncated) {
    throw std::runtime_error(
        "n_alpha: search inconclusive (length or time cap reached at "
        "threshold >= " +
        std::to_string(result.threshold) + ")");
  }
  return result.threshold;
}

bool bound_check(int k, std::uint64_t n_value) {
  if (k < 4) throw std::invalid_argument("bound_check: k must be >= 4");
  const std::uint64_t kk = static_cast<std::uint64_t>(k);
  const std::uint64_t lower = 2 * kk * kk - 2 * kk;
  const std::uint64_t upper =
      (kk * kk * kk - kk * kk + kk) * (kk * (kk - 1) / 2);
  return lower <= n_value && n_value <= upper;
}

LeftExtension extendable_left(const Word& w, const AvoidanceSpec& spec) {
  validate_spec(spec);
  for (Letter c : w.letters()) {
    if (c >= spec.alpha) {
      throw std::invalid_argument("extendable_left: w is not over [alpha]");
    }
  }
  if (contains(w, FactorPredicate::power(spec.ell)) ||
      contains(w, spec.constraint)) {
    throw std::invalid_argument(
        "extendable_left: w does not avoid the forbidden families");
  }

  const ConstraintView con = view_of(spec.constraint);
  detail::ClassScratch scratch(con.k);
  LeftExtension out;
  for (int a = 0; a <= spec.alpha; ++a) {  // one fresh letter beyond [alpha]
    std::vector<Letter> letters;
    letters.reserve(w.size() + 1);
    letters.push_back(static_cast<Letter>(a));
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    Word extended(std::move(letters), spec.alpha + 1);
    FactorComparer cmp(extended);
    const std::size_t n = extended.size();

    // Only factors touching the new first position -- i.e. prefixes -- can
    // newly violate; w itself was verified above.
    bool power_hit = false;
    for (std::size_t m = 1; m * static_cast<std::size_t>(spec.ell) <= n; ++m) {
      if (detail::power_at(cmp, 1, spec.ell, m)) {
        power_hit = true;
        break;
      }
    }
    if (power_hit) {
      out.excluded.emplace_back(static_cast<Letter>(a),
                                ExclusionCause::kPowerPrefix);
      continue;
    }
    bool constraint_hit = false;
    for (std::size_t m = 1; m * static_cast<std::size_t>(con.k) <= n; ++m) {
      bool hit = con.budget_mode
                     ? detail::budget_at(cmp, 1, con.k, m, con.sigma, scratch)
                     : detail::lambda_at(cmp, 1, con.k, m, con.lambda, scratch);
      if (hit) {
        constraint_hit = true;
        break;
      }
    }
    if (constraint_hit) {
      out.excluded.emplace_back(static_cast<Letter>(a),
                                ExclusionCause::kConstraint);
    } else {
      out.allowed.push_back(static_cast<Letter>(a));
    }
  }
  return out;
}

bool witness_rigidity_condition(int k, int alpha, std::uint64_t n_value) {
  if (k < 1) throw std::invalid_argument("witness_rigidity_condition: k >= 1");
  if (alpha < 1) {
    throw std::invalid_argument("witness_rigidity_condition: alpha >= 1");
  }
  // alpha > n/k - k + 3  <=>  k*alpha + k^2 > n + 3k  (exact in integers)
  const std::uint64_t kk = static_cast<std::uint64_t>(k);
  return kk * static_cast<std::uint64_t>(alpha) + kk * kk > n_value + 3 * kk;
}

}  // namespace blockpat
