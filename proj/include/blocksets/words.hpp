#ifndef BLOCKSETS_WORDS_HPP
#define BLOCKSETS_WORDS_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blocksets/error.hpp"

namespace blocksets {

using Symbol = std::uint8_t;

inline constexpr std::size_t kMaxWordLength = 64;
inline constexpr unsigned kMaxAlphabet = 9;

/// Largest length n for which every word of [m]^n has a packed index that
/// fits in 64 bits, i.e. m^n <= 2^64.
constexpr std::size_t packed_capacity(unsigned m) noexcept {
  if (m < 2) return kMaxWordLength;
  unsigned __int128 power = 1;
  constexpr unsigned __int128 limit = static_cast<unsigned __int128>(1) << 64;
  std::size_t n = 0;
  while (n < kMaxWordLength && power * m <= limit) {
    power *= m;
    ++n;
  }
  return n;
}

/// A word over the alphabet [m] = {1,...,m}. Symbols are stored 1-based so
/// that printed words read exactly like the digit strings used throughout
/// the block-set literature; the packed index uses digit (symbol - 1) in
/// base m with coordinate 1 least significant.
class Word {
 public:
  Word() = default;

  static Word encode(std::span<const Symbol> symbols, unsigned m) {
    if (m < 2 || m > kMaxAlphabet) {
      throw Error(ErrorKind::InvalidArgument, "alphabet size must lie in [2, 9], got " + std::to_string(m));
    }
    if (symbols.size() > packed_capacity(m)) {
      throw Error(ErrorKind::CapacityExceeded,
                  "length " + std::to_string(symbols.size()) + " exceeds packed capacity " +
                      std::to_string(packed_capacity(m)) + " for m=" + std::to_string(m));
    }
    Word w;
    w.m_ = static_cast<std::uint8_t>(m);
    w.n_ = static_cast<std::uint8_t>(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      if (symbols[i] < 1 || symbols[i] > m) {
        throw Error(ErrorKind::InvalidSymbol, "symbol " + std::to_string(symbols[i]) + " at coordinate " +
                                                  std::to_string(i + 1) + " is outside [" + std::to_string(m) + "]");
      }
      w.sym_[i] = symbols[i];
    }
    w.reindex();
    return w;
  }

  static Word parse(std::string_view digits, unsigned m) {
    std::vector<Symbol> symbols;
    symbols.reserve(digits.size());
    for (char c : digits) {
      if (c < '0' || c > '9') {
        throw Error(ErrorKind::InvalidSymbol, std::string("non-digit character '") + c + "' in word");
      }
      symbols.push_back(static_cast<Symbol>(c - '0'));
    }
    return encode(symbols, m);
  }

  static Word decode(std::uint64_t index, std::size_t n, unsigned m) {
    if (n > packed_capacity(m)) {
      throw Error(ErrorKind::CapacityExceeded, "length exceeds packed capacity");
    }
    std::vector<Symbol> symbols(n);
    for (std::size_t i = 0; i < n; ++i) {
      symbols[i] = static_cast<Symbol>(index % m + 1);
      index /= m;
    }
    if (index != 0) throw Error(ErrorKind::DomainError, "packed index out of range for [m]^n");
    return encode(symbols, m);
  }

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }
  unsigned alphabet() const noexcept { return m_; }
  std::uint64_t index() const noexcept { return index_; }

  /// 0-based access.
  Symbol operator[](std::size_t i) const noexcept { return sym_[i]; }

  std::span<const Symbol> symbols() const noexcept { return {sym_.data(), n_}; }

  /// Copy with coordinate i (0-based) replaced.
  Word with(std::size_t i, Symbol s) const {
    std::vector<Symbol> copy(symbols().begin(), symbols().end());
    if (i >= copy.size()) throw Error(ErrorKind::IndexOutOfRange, "coordinate out of range");
    copy[i] = s;
    return encode(copy, m_);
  }

  std::string to_string() const {
    std::string out(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<char>('0' + sym_[i]);
    return out;
  }

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return std::ranges::equal(a.symbols(), b.symbols());
  }

  /// Length first, then lexicographic with coordinate 1 most significant.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.sym_.begin(), a.sym_.begin() + a.n_, b.sym_.begin(),
                                                  b.sym_.begin() + b.n_);
  }

 private:
  void reindex() noexcept {
    index_ = 0;
    for (std::size_t i = n_; i-- > 0;) index_ = index_ * m_ + (sym_[i] - 1u);
  }

  std::uint8_t m_ = 2;
  std::uint8_t n_ = 0;
  std::uint64_t index_ = 0;
  std::array<Symbol, kMaxWordLength> sym_{};
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    // equality ignores the alphabet, so hash symbols rather than the packed index
    std::uint64_t h = 0xcbf29ce484222325ull ^ w.size();
    for (Symbol s : w.symbols()) h = (h ^ s) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

inline Word encode_word(std::span<const Symbol> symbols, unsigned m) { return Word::encode(symbols, m); }

inline std::vector<Symbol> decode_word(const Word& w) { return {w.symbols().begin(), w.symbols().end()}; }

/// Occurrence counts n_1..n_m of each symbol.
struct Profile {
  std::vector<std::size_t> counts;

  std::size_t total() const noexcept { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }
  friend bool operator==(const Profile&, const Profile&) = default;
};

inline Profile profile(const Word& w) {
  Profile p{std::vector<std::size_t>(w.alphabet(), 0)};
  for (Symbol s : w.symbols()) ++p.counts[s - 1];
  return p;
}

/// Saturating arithmetic would hide errors in counting tests, so overflow throws.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > UINT64_MAX) throw Error(ErrorKind::CapacityExceeded, "binomial overflow");
  }
  return static_cast<std::uint64_t>(result);
}

inline std::uint64_t multinomial(std::span<const std::size_t> counts) {
  std::uint64_t result = 1;
  std::uint64_t placed = 0;
  for (std::size_t c : counts) {
    placed += c;
    unsigned __int128 r = static_cast<unsigned __int128>(result) * binomial(placed, c);
    if (r > UINT64_MAX) throw Error(ErrorKind::CapacityExceeded, "multinomial overflow");
    result = static_cast<std::uint64_t>(r);
  }
  return result;
}

/// Every word of length n with a given profile, in lexicographic order.
/// Single-pass range; iteration is std::next_permutation over the sorted
/// multiset, which visits each distinct rearrangement exactly once.
class WordsWithProfile {
 public:
  WordsWithProfile(std::size_t n, unsigned m, Profile p) : m_(m) {
    if (p.counts.size() != m) {
      throw Error(ErrorKind::ProfileMismatch, "profile has " + std::to_string(p.counts.size()) +
                                                  " entries for alphabet of size " + std::to_string(m));
    }
    if (p.total() != n) {
      throw Error(ErrorKind::ProfileMismatch,
                  "profile sums to " + std::to_string(p.total()) + " but length is " + std::to_string(n));
    }
    for (unsigned s = 0; s < m; ++s) first_.insert(first_.end(), p.counts[s], static_cast<Symbol>(s + 1));
    if (n > packed_capacity(m)) throw Error(ErrorKind::CapacityExceeded, "length exceeds packed capacity");
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::vector<Symbol> current, unsigned m) : current_(std::move(current)), m_(m), done_(false) {
      load();
    }

    const Word& operator*() const noexcept { return word_; }
    const Word* operator->() const noexcept { return &word_; }

    iterator& operator++() {
      if (!std::next_permutation(current_.begin(), current_.end())) {
        done_ = true;
      } else {
        load();
      }
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept { return it.done_; }

   private:
    void load() { word_ = Word::encode(current_, m_); }

    std::vector<Symbol> current_;
    unsigned m_ = 2;
    bool done_ = true;
    Word word_;
  };

  iterator begin() const { return iterator(first_, m_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  unsigned m_;
  std::vector<Symbol> first_;
};

inline WordsWithProfile enumerate_with_profile(std::size_t n, unsigned m, const Profile& p) {
  return WordsWithProfile(n, m, p);
}

/// Visits every word of [m]^n in packed-index order.
template <class F>
void for_each_word(std::size_t n, unsigned m, F&& f) {
  if (n > packed_capacity(m)) throw Error(ErrorKind::CapacityExceeded, "length exceeds packed capacity");
  std::vector<Symbol> symbols(n, 1);
  while (true) {
    f(Word::encode(symbols, m));
    std::size_t i = 0;
    while (i < n && symbols[i] == m) symbols[i++] = 1;
    if (i == n) return;
    ++symbols[i];
  }
}

}  // namespace blocksets

#endif  // BLOCKSETS_WORDS_HPP
