#ifndef BLOCKPAT_HASH61_HPP
#define BLOCKPAT_HASH61_HPP

// Polynomial rolling hash mod 2^61 - 1, shared by the factor comparer and
// the avoidance search. Hashes are only ever used as a prefilter: a hash
// mismatch proves inequality, a hash match is confirmed letter by letter.

#include <cstdint>

#include "blockpat/words.hpp"

namespace blockpat::detail {

inline constexpr std::uint64_t kHashMod = (std::uint64_t(1) << 61) - 1;
inline constexpr std::uint64_t kHashBase = 0x2545F4914F6CDD1DULL % kHashMod;

inline std::uint64_t mod61(std::uint64_t x) {
  std::uint64_t r = (x & kHashMod) + (x >> 61);
  return r >= kHashMod ? r - kHashMod : r;
}

inline std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kHashMod);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t r = lo + hi;
  return r >= kHashMod ? r - kHashMod : r;
}

inline std::uint64_t encode_letter(Letter v) {
  return static_cast<std::uint64_t>(v) + 1;  // avoid mapping letter 0 to 0
}

}  // namespace blockpat::detail

#endif  // BLOCKPAT_HASH61_HPP
