#ifndef BLOCKPAT_WORDS_HPP
#define BLOCKPAT_WORDS_HPP

// Finite and infinite words over integer alphabets, plus the small set of
// factor/block/border operations everything else is built on.
//
// Conventions used throughout the library:
//   * letters are non-negative integers; an alphabet of size a is {0,...,a-1}
//   * positions are 1-based in the public API (w[1..n])
//   * alphabet_size() == kUnboundedAlphabet means "all non-negative integers"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blockpat {

using Letter = std::int32_t;

inline constexpr int kUnboundedAlphabet = 0;

class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, int alphabet_size);

  // Text form: one character per letter (0-9a-zA-Z covers letters 0..61),
  // or the escaped form "int:3,0,77" for letters outside that range.
  static Word from_text(std::string_view text);
  std::string to_text() const;

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // 1-based checked access, w.at1(1) is the first letter.
  Letter at1(std::size_t i) const;

  // 0-based unchecked access for hot loops.
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }

  int alphabet_size() const noexcept { return alphabet_size_; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  int alphabet_size_ = 1;
};

// An infinite word given by a letter rule; index is 1-based.
// Rules must be pure (or internally synchronized if they memoize): a shared
// InfiniteWord may be queried from several threads at once.
class InfiniteWord {
 public:
  using Rule = std::function<Letter(std::uint64_t)>;

  InfiniteWord(std::string description, int alphabet_size, Rule letter_at);

  Letter at(std::uint64_t index) const;
  Word prefix(std::size_t n) const;

  const std::string& description() const noexcept { return description_; }
  int alphabet_size() const noexcept { return alphabet_size_; }

 private:
  std::string description_;
  int alphabet_size_ = kUnboundedAlphabet;
  Rule rule_;
};

// w[i..j], 1 <= i <= j <= |w|; throws std::out_of_range otherwise.
Word factor(const Word& w, std::size_t i, std::size_t j);

// Split w into k blocks of equal length; requires k >= 1, w nonempty and
// k | |w| (std::invalid_argument otherwise).
std::vector<Word> blocks(const Word& w, int k);

// Longest v with |v| < |w| that is both a prefix and a suffix of w.
// Requires w nonempty. May return the empty word.
Word longest_proper_border(const Word& w);

// Given a border v of w, let u be the prefix of w with |u| = |w| - |v|.
// If |w| >= ell*|u|, returns u after directly verifying that u^ell is a
// prefix of w; otherwise returns nullopt. Throws std::invalid_argument if
// v is not actually a border of w, or if ell < 1.
std::optional<Word> power_from_border(const Word& w, const Word& v, int ell);

// Reads words from a stream, one per line; blank lines and lines starting
// with '#' are skipped.
std::vector<Word> read_words(std::istream& in);

}  // namespace blockpat

#endif  // BLOCKPAT_WORDS_HPP
