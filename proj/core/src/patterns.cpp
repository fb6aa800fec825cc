#include "blockpat/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "block_scan.hpp"
#include "hash61.hpp"

namespace blockpat {

namespace {

using detail::budget_at;
using detail::ClassScratch;
using detail::encode_letter;
using detail::kHashBase;
using detail::kHashMod;
using detail::lambda_at;
using detail::mulmod61;
using detail::power_at;
using detail::signature_at;

void check_order(int k, const char* who) {
  if (k < 1) {
    throw std::invalid_argument(std::string(who) + ": k must be >= 1");
  }
}

long parse_int(std::string_view tok, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument(std::string("BlockSignature: bad ") + what +
                                " '" + std::string(tok) + "'");
  }
  return value;
}

void partitions_desc(int remaining, int max_part, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_desc(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

BlockSignature::BlockSignature(int k, std::vector<int> mu) : k_(k), mu_(std::move(mu)) {
  check_order(k_, "BlockSignature");
  if (mu_.size() > static_cast<std::size_t>(k_)) {
    throw std::invalid_argument("BlockSignature: mu has more than k entries");
  }
  mu_.resize(static_cast<std::size_t>(k_), 0);
  long long total = 0;
  for (int s = 1; s <= k_; ++s) {
    int count = mu_[static_cast<std::size_t>(s) - 1];
    if (count < 0) {
      throw std::invalid_argument("BlockSignature: negative multiplicity");
    }
    total += static_cast<long long>(s) * count;
  }
  if (total != k_) {
    throw std::invalid_argument(
        "BlockSignature: class sizes must account for all k blocks (sum "
        "s*mu_s == k)");
  }
}

BlockSignature BlockSignature::k_power(int k) {
  check_order(k, "BlockSignature::k_power");
  std::vector<int> mu(static_cast<std::size_t>(k), 0);
  mu.back() = 1;
  return BlockSignature(k, std::move(mu));
}

BlockSignature BlockSignature::k_anti_power(int k) {
  check_order(k, "BlockSignature::k_anti_power");
  std::vector<int> mu(static_cast<std::size_t>(k), 0);
  mu.front() = k;
  return BlockSignature(k, std::move(mu));
}

BlockSignature BlockSignature::from_text(std::string_view text) {
  if (text.substr(0, 2) != "k=") {
    throw std::invalid_argument("BlockSignature: text must start with 'k='");
  }
  std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw std::invalid_argument("BlockSignature: missing ';'");
  }
  long k = parse_int(text.substr(2, semi - 2), "k");
  if (k < 1 || k > 1 << 20) {
    throw std::invalid_argument("BlockSignature: k out of range");
  }
  std::vector<int> mu(static_cast<std::size_t>(k), 0);
  std::string_view rest = text.substr(semi + 1);
  while (!rest.empty()) {
    std::size_t comma = rest.find(',');
    std::string_view pair = rest.substr(0, comma);
    std::size_t colon = pair.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("BlockSignature: expected 'size:count'");
    }
    long s = parse_int(pair.substr(0, colon), "class size");
    long c = parse_int(pair.substr(colon + 1), "class count");
    if (s < 1 || s > k || c < 0) {
      throw std::invalid_argument("BlockSignature: size:count out of range");
    }
    mu[static_cast<std::size_t>(s) - 1] += static_cast<int>(c);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return BlockSignature(static_cast<int>(k), std::move(mu));
}

std::string BlockSignature::to_text() const {
  std::string out = "k=" + std::to_string(k_) + ";";
  bool first = true;
  for (int s = k_; s >= 1; --s) {
    int count = mu_[static_cast<std::size_t>(s) - 1];
    if (count == 0) continue;
    if (!first) out.push_back(',');
    out += std::to_string(s) + ":" + std::to_string(count);
    first = false;
  }
  return out;
}

int BlockSignature::class_count() const noexcept {
  int total = 0;
  for (int c : mu_) total += c;
  return total;
}

std::vector<BlockSignature> all_signatures(int k) {
  check_order(k, "all_signatures");
  std::vector<std::vector<int>> parts;
  std::vector<int> current;
  partitions_desc(k, k, current, parts);
  std::vector<BlockSignature> out;
  out.reserve(parts.size());
  for (const auto& partition : parts) {
    std::vector<int> mu(static_cast<std::size_t>(k), 0);
    for (int p : partition) ++mu[static_cast<std::size_t>(p) - 1];
    out.emplace_back(k, std::move(mu));
  }
  return out;
}

std::int64_t equal_pair_count(const BlockSignature& sig) {
  std::int64_t pairs = 0;
  const auto& mu = sig.mu();
  for (int s = 1; s <= sig.k(); ++s) {
    pairs += static_cast<std::int64_t>(mu[static_cast<std::size_t>(s) - 1]) *
             (static_cast<std::int64_t>(s) * (s - 1) / 2);
  }
  return pairs;
}

FactorComparer::FactorComparer(const Word& w) : word_(w) {
  std::size_t n = word_.size();
  prefix_.resize(n + 1);
  power_.resize(n + 1);
  prefix_[0] = 0;
  power_[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    prefix_[i] = detail::mod61(mulmod61(prefix_[i - 1], kHashBase) +
                               encode_letter(word_[i - 1]));
    power_[i] = mulmod61(power_[i - 1], kHashBase);
  }
}

std::uint64_t FactorComparer::range_hash(std::size_t start,
                                         std::size_t len) const {
  std::uint64_t shifted = mulmod61(prefix_[start - 1], power_[len]);
  std::uint64_t h = prefix_[start + len - 1] + kHashMod - shifted;
  return h >= kHashMod ? h - kHashMod : h;
}

bool FactorComparer::equal(std::size_t i, std::size_t j,
                           std::size_t len) const {
  if (len == 0) return true;
  if (i < 1 || j < 1 || i + len - 1 > word_.size() ||
      j + len - 1 > word_.size()) {
    throw std::out_of_range("FactorComparer::equal: range outside word");
  }
  if (i == j) return true;
  const Letter* base = word_.letters().data();
  if (len <= 4) {  // short blocks: direct comparison beats hashing
    return std::equal(base + i - 1, base + i - 1 + len, base + j - 1);
  }
  if (range_hash(i, len) != range_hash(j, len)) return false;
  return std::equal(base + i - 1, base + i - 1 + len, base + j - 1);
}

BlockSignature block_signature(const Word& w, int k) {
  check_order(k, "block_signature");
  if (w.empty()) {
    throw std::invalid_argument("block_signature: word is empty");
  }
  if (w.size() % static_cast<std::size_t>(k) != 0) {
    throw std::invalid_argument("block_signature: k does not divide |w|");
  }
  FactorComparer cmp(w);
  ClassScratch scratch(k);
  std::vector<int> mu;
  signature_at(cmp, 1, k, w.size() / static_cast<std::size_t>(k), scratch, mu);
  return BlockSignature(k, std::move(mu));
}

bool is_k_power(const Word& w, int k) {
  check_order(k, "is_k_power");
  if (w.empty() || w.size() % static_cast<std::size_t>(k) != 0) return false;
  FactorComparer cmp(w);
  return power_at(cmp, 1, k, w.size() / static_cast<std::size_t>(k));
}

bool is_anti_power(const Word& w, int k) {
  return is_k_lambda_anti_power(w, k, 1);
}

bool is_k_lambda_anti_power(const Word& w, int k, int lambda) {
  check_order(k, "is_k_lambda_anti_power");
  if (lambda < 1 || lambda > k) {
    throw std::invalid_argument(
        "is_k_lambda_anti_power: need 1 <= lambda <= k");
  }
  if (w.empty() || w.size() % static_cast<std::size_t>(k) != 0) return false;
  FactorComparer cmp(w);
  ClassScratch scratch(k);
  return lambda_at(cmp, 1, k, w.size() / static_cast<std::size_t>(k), lambda,
                   scratch);
}

FactorPredicate::FactorPredicate(Kind kind, int order, int lambda,
                                 std::int64_t sigma)
    : kind_(kind), order_(order), lambda_(lambda), sigma_(sigma) {}

FactorPredicate FactorPredicate::power(int ell) {
  check_order(ell, "FactorPredicate::power");
  return FactorPredicate(Kind::kPower, ell, 0, 0);
}

FactorPredicate FactorPredicate::anti_power(int k) {
  check_order(k, "FactorPredicate::anti_power");
  return FactorPredicate(Kind::kAntiPower, k, 1, 0);
}

FactorPredicate FactorPredicate::k_lambda_anti_power(int k, int lambda) {
  check_order(k, "FactorPredicate::k_lambda_anti_power");
  if (lambda < 1 || lambda > k) {
    throw std::invalid_argument(
        "FactorPredicate::k_lambda_anti_power: need 1 <= lambda <= k");
  }
  return FactorPredicate(Kind::kLambdaAntiPower, k, lambda, 0);
}

FactorPredicate FactorPredicate::pair_budget(int k, std::int64_t sigma) {
  check_order(k, "FactorPredicate::pair_budget");
  if (sigma < 0) {
    throw std::invalid_argument("FactorPredicate::pair_budget: sigma >= 0");
  }
  return FactorPredicate(Kind::kPairBudget, k, 0, sigma);
}

std::string FactorPredicate::describe() const {
  switch (kind_) {
    case Kind::kPower:
      return std::to_string(order_) + "-power";
    case Kind::kAntiPower:
      return std::to_string(order_) + "-anti-power";
    case Kind::kLambdaAntiPower:
      return "(" + std::to_string(order_) + "," + std::to_string(lambda_) +
             ")-anti-power";
    case Kind::kPairBudget:
      return std::to_string(order_) + "-blocks<=" + std::to_string(sigma_) +
             "-pairs";
  }
  return "?";
}

std::optional<FactorMatch> contains(const Word& w, const FactorPredicate& p) {
  const int k = p.order();
  const std::size_t n = w.size();
  if (n < static_cast<std::size_t>(k)) return std::nullopt;
  FactorComparer cmp(w);
  ClassScratch scratch(k);
  for (std::size_t s = 1; s <= n; ++s) {
    std::size_t max_m = (n - s + 1) / static_cast<std::size_t>(k);
    for (std::size_t m = 1; m <= max_m; ++m) {
      bool hit = false;
      switch (p.kind()) {
        case FactorPredicate::Kind::kPower:
          hit = power_at(cmp, s, k, m);
          break;
        case FactorPredicate::Kind::kAntiPower:
          hit = lambda_at(cmp, s, k, m, 1, scratch);
          break;
        case FactorPredicate::Kind::kLambdaAntiPower:
          hit = lambda_at(cmp, s, k, m, p.lambda(), scratch);
          break;
        case FactorPredicate::Kind::kPairBudget:
          hit = budget_at(cmp, s, k, m, p.sigma(), scratch);
          break;
      }
      if (hit) return FactorMatch{s, m};
    }
  }
  return std::nullopt;
}

std::uint64_t count_block_patterns(const Word& w, const BlockSignature& sig) {
  const int k = sig.k();
  const std::size_t n = w.size();
  if (n < static_cast<std::size_t>(k)) return 0;
  FactorComparer cmp(w);
  ClassScratch scratch(k);
  std::vector<int> mu;
  std::uint64_t total = 0;
  for (std::size_t s = 1; s <= n; ++s) {
    std::size_t max_m = (n - s + 1) / static_cast<std::size_t>(k);
    for (std::size_t m = 1; m <= max_m; ++m) {
      signature_at(cmp, s, k, m, scratch, mu);
      if (mu == sig.mu()) ++total;
    }
  }
  return total;
}

}  // namespace blockpat
