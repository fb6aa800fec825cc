#include "blockpat/generators.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <vector>

namespace blockpat {

namespace {

constexpr std::string_view kGoldenDigits =
    "0.381966011250105151795413165634361882279690820194";  // 2 - phi

BigRat frac_part(const BigRat& r) { return r - BigRat(rat_floor(r)); }

// Distance from a to b on the unit circle R/Z; both already in [0,1).
BigRat circular_distance(const BigRat& a, const BigRat& b) {
  BigRat d = a < b ? b - a : a - b;
  BigRat wrap = 1 - d;
  return d < wrap ? d : wrap;
}

BigInt parse_bigint(std::string_view tok, const char* what) {
  if (tok.empty() ||
      tok.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument(std::string("Angle: bad ") + what + " '" +
                                std::string(tok) + "'");
  }
  return BigInt(std::string(tok));
}

ApproxReal parse_real(std::string_view text,
                      std::optional<unsigned> prec_bits) {
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("Angle: empty value");

  ApproxReal out;
  if (std::size_t slash = text.find('/'); slash != std::string_view::npos) {
    BigInt p = parse_bigint(text.substr(0, slash), "numerator");
    BigInt q = parse_bigint(text.substr(slash + 1), "denominator");
    if (q == 0) throw std::invalid_argument("Angle: zero denominator");
    out.value = BigRat(p, q);
    out.eps = 0;
  } else if (std::size_t dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    BigInt int_part = ip.empty() ? BigInt(0) : parse_bigint(ip, "integer part");
    BigInt frac_digits = fp.empty() ? BigInt(0) : parse_bigint(fp, "fraction");
    BigInt scale = ipow(10, static_cast<unsigned>(fp.size()));
    out.value = BigRat(int_part * scale + frac_digits, scale);
    // A bare decimal denotes the exact rational it spells. prec_bits is the
    // caller's assertion that the text truncates some real to within
    // 2^-prec_bits; that radius is then tracked through every comparison.
    out.eps = prec_bits ? BigRat(1, ipow(2, *prec_bits)) : BigRat(0);
  } else {
    out.value = BigRat(parse_bigint(text, "integer"));
    out.eps = 0;
  }
  if (negative) out.value = -out.value;
  return out;
}

}  // namespace

Angle::Angle(ApproxReal theta, ApproxReal x0)
    : theta_(std::move(theta)), x0_(std::move(x0)) {
  if (theta_.eps < 0 || x0_.eps < 0) {
    throw std::invalid_argument("Angle: negative uncertainty");
  }
  theta_.value = frac_part(theta_.value);
  x0_.value = frac_part(x0_.value);
  if (theta_.exact()) {
    if (theta_.value == 0) {
      throw std::invalid_argument(
          "Angle: theta reduces to an integer; need 0 < theta < 1");
    }
  } else {
    // An approximate theta this close to an integer cannot be certified to
    // lie inside (0,1) at all.
    BigRat zero(0);
    if (circular_distance(theta_.value, zero) <= theta_.eps) {
      throw PrecisionExhausted(
          "Angle: theta is within its uncertainty of an integer; supply more "
          "digits or an exact fraction");
    }
  }
}

Angle Angle::from_rationals(const BigRat& theta, const BigRat& x0) {
  return Angle(ApproxReal{theta, 0}, ApproxReal{x0, 0});
}

Angle Angle::parse(std::string_view theta, std::string_view x0,
                   std::optional<unsigned> prec_bits) {
  return Angle(parse_real(theta, prec_bits), parse_real(x0, prec_bits));
}

const Angle& Angle::fibonacci_preset() {
  // 2 - phi truncated to 48 places, carried with its true uncertainty so
  // every emitted letter is certified to match the irrational angle's word.
  static const Angle preset = [] {
    ApproxReal golden = parse_real(kGoldenDigits, std::nullopt);
    golden.eps = BigRat(1, ipow(10, 48));
    return Angle(golden, golden);
  }();
  return preset;
}

InfiniteWord thue_morse() {
  return InfiniteWord("thue-morse", 2, [](std::uint64_t n) -> Letter {
    return static_cast<Letter>(std::popcount(n - 1) & 1);
  });
}

InfiniteWord fibonacci_word() {
  // lengths[i] = |S_i|, S_1 = "0", S_2 = "01", S_n = S_{n-1} S_{n-2}.
  static const std::vector<std::uint64_t> lengths = [] {
    std::vector<std::uint64_t> f{0, 1, 2};
    while (f.back() < (std::uint64_t(1) << 62)) {
      f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    }
    return f;
  }();
  return InfiniteWord("fibonacci", 2, [](std::uint64_t n) -> Letter {
    if (n >= lengths.back()) {
      throw std::out_of_range("fibonacci_word: index too large");
    }
    std::size_t level = 1;
    while (lengths[level] < n) ++level;
    std::uint64_t i = n;
    while (level > 2) {
      if (i <= lengths[level - 1]) {
        --level;
      } else {
        i -= lengths[level - 1];
        level -= 2;
      }
    }
    if (level == 1) return 0;
    return i == 1 ? 0 : 1;
  });
}

InfiniteWord mechanical(const Angle& a, MechanicalVariant variant) {
  const ApproxReal theta = a.theta();
  const ApproxReal x0 = a.x0();
  const bool upper = variant == MechanicalVariant::kUpper;
  std::string desc = std::string("mechanical-") + (upper ? "upper" : "lower");
  return InfiniteWord(desc, 2, [theta, x0, upper](std::uint64_t n) -> Letter {
    BigRat pos = frac_part(BigRat(n - 1) * theta.value + x0.value);
    BigRat endpoint = 1 - theta.value;
    if (!theta.exact() || !x0.exact()) {
      // pos is only known to within u; the interval endpoint 1-theta only
      // to within theta.eps. Certify the membership decision or refuse.
      // A pos with u == 0 is exact, so the 0/1 wrap needs no certificate.
      BigRat u = BigRat(n - 1) * theta.eps + x0.eps;
      BigRat zero(0);
      if ((u > 0 && circular_distance(pos, zero) <= u) ||
          circular_distance(pos, endpoint) <= u + theta.eps) {
        throw PrecisionExhausted(
            "mechanical: cannot certify letter at index " + std::to_string(n) +
            " with the given precision; supply more digits or --prec");
      }
    }
    bool one = upper ? pos >= endpoint : pos > endpoint;
    return one ? 1 : 0;
  });
}

InfiniteWord sesquipower(const SesquipowerSeed& seed) {
  if (!seed.v) {
    throw std::invalid_argument("sesquipower: missing v rule");
  }
  auto rule = seed.v;
  if (rule(1).empty()) {
    throw std::invalid_argument("sesquipower: v_1 must be nonempty");
  }
  return InfiniteWord(
      "sesquipower", seed.alphabet_size, [rule](std::uint64_t n) -> Letter {
        // lengths[j] = |w_j| with w_0 empty, w_j = w_{j-1} v_j w_{j-1}.
        std::vector<std::uint64_t> lengths{0};
        std::vector<Word> vs{Word()};
        while (lengths.back() < n) {
          vs.push_back(rule(vs.size()));
          std::uint64_t next = 2 * lengths.back() + vs.back().size();
          if (next <= lengths.back()) {
            throw std::out_of_range("sesquipower: index too large");
          }
          lengths.push_back(next);
        }
        std::uint64_t i = n;
        for (std::size_t level = lengths.size() - 1; level > 0; --level) {
          std::uint64_t left = lengths[level - 1];
          std::uint64_t mid = vs[level].size();
          if (i <= left) continue;
          if (i <= left + mid) {
            return vs[level].at1(static_cast<std::size_t>(i - left));
          }
          i -= left + mid;
        }
        throw std::logic_error("sesquipower: descent failed");
      });
}

InfiniteWord recurrent_avoider(int k) {
  if (k < 6) {
    throw std::invalid_argument("recurrent_avoider: k must be >= 6");
  }
  const std::uint64_t ratio = static_cast<std::uint64_t>(k) - 1;
  return InfiniteWord(
      "recurrent-avoider", 2, [ratio, k](std::uint64_t n) -> Letter {
        std::vector<std::uint64_t> lengths{1};  // |w_0| = 1
        while (lengths.back() < n) {
          if (lengths.back() > std::numeric_limits<std::uint64_t>::max() / ratio) {
            throw std::out_of_range("recurrent_avoider: index too large");
          }
          lengths.push_back(lengths.back() * ratio);
        }
        std::uint64_t i = n;
        for (std::size_t level = lengths.size() - 1; level > 0; --level) {
          std::uint64_t left = lengths[level - 1];
          // w_level = w_{level-1} 1^{(k-3)|w_{level-1}|} w_{level-1}
          if (i <= left) continue;
          if (i <= left * static_cast<std::uint64_t>(k - 2)) return 1;
          i -= left * static_cast<std::uint64_t>(k - 2);
        }
        return 0;
      });
}

InfiniteWord gamma_word(int k, std::function<BigInt(std::uint64_t)> gamma) {
  if (k < 4) {
    throw std::invalid_argument("gamma_word: k must be >= 4");
  }
  if (!gamma) {
    gamma = [k](std::uint64_t i) {
      return ipow(BigInt(k + 1), static_cast<unsigned>(i - 1));
    };
  }
  return InfiniteWord("gamma-word", 2, [k, gamma](std::uint64_t n) -> Letter {
    BigInt target(n);
    BigInt prev = 0;
    for (std::uint64_t i = 1;; ++i) {
      BigInt g = gamma(i);
      bool ok = i == 1 ? g >= 1 : g >= BigInt(k + 1) * prev;
      if (!ok) {
        throw std::runtime_error(
            "gamma_word: growth violation at index " + std::to_string(i) +
            " (need gamma_{i+1} >= (k+1) * gamma_i and gamma_1 >= 1)");
      }
      if (g == target) return 1;
      if (g > target) return 0;
      prev = g;
    }
  });
}

InfiniteWord infinite_alphabet_power_free() {
  return InfiniteWord(
      "inf-alphabet", kUnboundedAlphabet, [](std::uint64_t n) -> Letter {
        if (n > (std::uint64_t(1) << 62)) {
          throw std::out_of_range("infinite_alphabet_power_free: index too large");
        }
        // letter i occupies positions (2^i - 2, 2^{i+1} - 2]
        Letter i = 1;
        std::uint64_t hi = 2;
        while (hi < n) {
          ++i;
          hi = 2 * hi + 2;
        }
        return i;
      });
}

Word lower_bound_word(int k) {
  if (k < 4) {
    throw std::invalid_argument("lower_bound_word: k must be >= 4");
  }
  std::vector<Letter> w;
  w.reserve(static_cast<std::size_t>(2 * k * k));
  auto zeros = [&w](int count) { w.insert(w.end(), count, 0); };
  w.push_back(1);
  for (int r = 0; r < k - 2; ++r) {
    zeros(k - 1);
    w.push_back(1);
  }
  zeros(k - 2);
  w.push_back(1);
  zeros(k - 2);
  for (int r = 0; r < k - 2; ++r) {
    w.push_back(1);
    zeros(k - 1);
  }
  w.push_back(1);
  if (w.size() != static_cast<std::size_t>(2 * k * k - 2 * k - 1)) {
    throw std::logic_error("lower_bound_word: length check failed");
  }
  return Word(std::move(w), 2);
}

Word sigma_avoider_word(int k, std::int64_t sigma) {
  if (k < 2) {
    throw std::invalid_argument("sigma_avoider_word: k must be >= 2");
  }
  if (sigma < 1) {
    throw std::invalid_argument("sigma_avoider_word: sigma must be >= 1");
  }
  BigInt root = isqrt_floor(BigInt(8) * sigma + 1);
  long long j = static_cast<long long>((root + 1) / 2);
  long long e = static_cast<long long>(k) - j - 1;
  if (e < 0) {
    throw std::invalid_argument(
        "sigma_avoider_word: degenerate exponent (sigma too large for k)");
  }
  std::vector<Letter> w;
  w.reserve(static_cast<std::size_t>(k) * (e + 1));
  w.insert(w.end(), k - 1, 0);
  for (long long r = 0; r < e; ++r) {
    w.push_back(1);
    w.insert(w.end(), k - 1, 0);
  }
  return Word(std::move(w), 2);
}

std::int64_t sturmian_power_bound(const Angle& a) {
  const ApproxReal& theta = a.theta();
  BigRat lo = theta.value - theta.eps;
  BigRat hi = theta.value + theta.eps;
  // min(theta, 1-theta) over the uncertainty interval
  BigRat m_lo = std::min(lo, BigRat(1 - hi));
  BigRat m_hi = std::min(hi, BigRat(1 - lo));
  if (m_lo <= 0) {
    throw PrecisionExhausted(
        "sturmian_power_bound: theta too close to an integer at the given "
        "precision");
  }
  BigInt c_lo = rat_ceil(1 / m_hi);
  BigInt c_hi = rat_ceil(1 / m_lo);
  if (c_lo != c_hi) {
    throw PrecisionExhausted(
        "sturmian_power_bound: ceiling is ambiguous at the given precision; "
        "supply more digits");
  }
  BigInt m = c_lo + 1;
  if (m > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("sturmian_power_bound: M does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(m);
}

}  // namespace blockpat
