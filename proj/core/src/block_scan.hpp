#ifndef BLOCKPAT_BLOCK_SCAN_HPP
#define BLOCKPAT_BLOCK_SCAN_HPP

// Block-equality classification of one factor, shared by the detector
// scans, the prefix-set builders, and the avoidance search. Cmp is any type
// with bool equal(i, j, len) deciding exact factor equality (1-based starts).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace blockpat::detail {

// Reused across factors so scans stay allocation-free.
struct ClassScratch {
  std::vector<std::size_t> rep_start;
  std::vector<int> rep_count;
  explicit ClassScratch(int k)
      : rep_start(static_cast<std::size_t>(k)),
        rep_count(static_cast<std::size_t>(k)) {}
};

// All helpers view w[start .. start + k*m - 1] as k blocks of length m.

template <class Cmp>
bool power_at(const Cmp& c, std::size_t start, int k, std::size_t m) {
  for (int b = 0; b + 1 < k; ++b) {
    std::size_t a = start + static_cast<std::size_t>(b) * m;
    if (!c.equal(a, a + m, m)) return false;
  }
  return true;
}

// True iff every block-equality class has size <= lambda.
template <class Cmp>
bool lambda_at(const Cmp& c, std::size_t start, int k, std::size_t m,
               int lambda, ClassScratch& scratch) {
  int classes = 0;
  for (int b = 0; b < k; ++b) {
    std::size_t a = start + static_cast<std::size_t>(b) * m;
    bool placed = false;
    for (int r = 0; r < classes; ++r) {
      if (c.equal(a, scratch.rep_start[r], m)) {
        if (++scratch.rep_count[r] > lambda) return false;
        placed = true;
        break;
      }
    }
    if (!placed) {
      scratch.rep_start[classes] = a;
      scratch.rep_count[classes] = 1;
      ++classes;
    }
  }
  return true;
}

// True iff the number of equal block pairs is <= sigma.
template <class Cmp>
bool budget_at(const Cmp& c, std::size_t start, int k, std::size_t m,
               std::int64_t sigma, ClassScratch& scratch) {
  int classes = 0;
  std::int64_t pairs = 0;
  for (int b = 0; b < k; ++b) {
    std::size_t a = start + static_cast<std::size_t>(b) * m;
    bool placed = false;
    for (int r = 0; r < classes; ++r) {
      if (c.equal(a, scratch.rep_start[r], m)) {
        pairs += scratch.rep_count[r]++;  // joining a class of size t adds t pairs
        if (pairs > sigma) return false;
        placed = true;
        break;
      }
    }
    if (!placed) {
      scratch.rep_start[classes] = a;
      scratch.rep_count[classes] = 1;
      ++classes;
    }
  }
  return true;
}

template <class Cmp>
void signature_at(const Cmp& c, std::size_t start, int k, std::size_t m,
                  ClassScratch& scratch, std::vector<int>& mu) {
  int classes = 0;
  for (int b = 0; b < k; ++b) {
    std::size_t a = start + static_cast<std::size_t>(b) * m;
    bool placed = false;
    for (int r = 0; r < classes; ++r) {
      if (c.equal(a, scratch.rep_start[r], m)) {
        ++scratch.rep_count[r];
        placed = true;
        break;
      }
    }
    if (!placed) {
      scratch.rep_start[classes] = a;
      scratch.rep_count[classes] = 1;
      ++classes;
    }
  }
  mu.assign(static_cast<std::size_t>(k), 0);
  for (int r = 0; r < classes; ++r) {
    ++mu[static_cast<std::size_t>(scratch.rep_count[r]) - 1];
  }
}

}  // namespace blockpat::detail

#endif  // BLOCKPAT_BLOCK_SCAN_HPP
