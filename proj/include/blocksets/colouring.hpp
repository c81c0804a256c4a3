#ifndef BLOCKSETS_COLOURING_HPP
#define BLOCKSETS_COLOURING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "blocksets/error.hpp"
#include "blocksets/point.hpp"
#include "blocksets/words.hpp"

namespace blocksets {

using ColourId = std::uint64_t;

/// Pure map Word -> ColourId with a declared colour-count bound. Copies
/// share the underlying evaluator, which must be reentrant.
class Colouring {
 public:
  using Fn = std::function<ColourId(const Word&)>;

  Colouring(std::string name, ColourId bound, Fn fn) : name_(std::move(name)), bound_(bound), fn_(std::move(fn)) {
    if (bound_ == 0) throw Error(ErrorKind::InvalidArgument, "colour bound must be positive");
  }

  ColourId operator()(const Word& w) const { return fn_(w); }
  const std::string& name() const noexcept { return name_; }
  ColourId bound() const noexcept { return bound_; }

 private:
  std::string name_;
  ColourId bound_;
  Fn fn_;
};

inline Colouring constant_colouring(ColourId colour = 0) {
  return Colouring("constant:c=" + std::to_string(colour), colour + 1, [colour](const Word&) { return colour; });
}

// ---------------------------------------------------------------------------
// Mixed-radix tupling. Component 0 is least significant.

inline std::optional<ColourId> radix_product(std::span<const ColourId> radices) {
  unsigned __int128 total = 1;
  for (ColourId r : radices) {
    total *= r;
    if (total > UINT64_MAX) return std::nullopt;
  }
  return static_cast<ColourId>(total);
}

inline ColourId encode_mixed_radix(std::span<const ColourId> digits, std::span<const ColourId> radices) {
  ColourId id = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= radices[i]) throw Error(ErrorKind::DomainError, "digit exceeds its radix");
    id = id * radices[i] + digits[i];
  }
  return id;
}

inline std::vector<ColourId> decode_mixed_radix(ColourId id, std::span<const ColourId> radices) {
  std::vector<ColourId> digits(radices.size());
  for (std::size_t i = 0; i < radices.size(); ++i) {
    digits[i] = id % radices[i];
    id /= radices[i];
  }
  return digits;
}

// ---------------------------------------------------------------------------
// Contribution colouring.
//
// Each coordinate i holding a 1 contributes the basis vector e_{a_i} of
// Z_modulus^length, where a_i counts the 1's and 2's strictly before i,
// reduced mod length. Coordinates holding anything else contribute 0. The
// colour is the sum of contributions.
//
// With modulus d+1 and length d^2+1 no block set of template 1 2^d 3^(d^3)
// whose blocks have size <= d is monochromatic: the per-block offsets b_i
// (1's and 2's of the reference before block i, mod length) pigeonhole
// d+1 blocks onto one offset, and moving the single 1 among those blocks
// shifts its contribution to d+1 distinct slots that a block of size <= d
// cannot cancel. verify_absence checks this exhaustively at small n.

class ContributionColouring {
 public:
  ContributionColouring(unsigned modulus, unsigned length) : modulus_(modulus), length_(length) {
    if (modulus_ < 2) throw Error(ErrorKind::InvalidArgument, "contribution modulus must be >= 2");
    if (length_ < 1) throw Error(ErrorKind::InvalidArgument, "contribution length must be >= 1");
    radices_.assign(length_, modulus_);
    auto count = radix_product(radices_);
    if (!count) throw Error(ErrorKind::CapacityExceeded, "modulus^length does not fit a 64-bit colour id");
    count_ = *count;
  }

  unsigned modulus() const noexcept { return modulus_; }
  unsigned length() const noexcept { return length_; }
  ColourId colour_count() const noexcept { return count_; }

  std::vector<ColourId> vector(const Word& x) const {
    std::vector<ColourId> c(length_, 0);
    std::size_t ones_and_twos = 0;
    for (Symbol s : x.symbols()) {
      if (s == 1) {
        auto& slot = c[ones_and_twos % length_];
        slot = (slot + 1) % modulus_;
      }
      if (s == 1 || s == 2) ++ones_and_twos;
    }
    return c;
  }

  ColourId id(const Word& x) const {
    // Same computation as vector(), folded straight into the radix encoding.
    std::uint64_t digits[64] = {};
    std::vector<ColourId> heap;
    std::uint64_t* c = digits;
    if (length_ > 64) {
      heap.assign(length_, 0);
      c = heap.data();
    }
    std::size_t ones_and_twos = 0;
    for (Symbol s : x.symbols()) {
      if (s == 1) {
        auto& slot = c[ones_and_twos % length_];
        slot = (slot + 1) % modulus_;
      }
      if (s == 1 || s == 2) ++ones_and_twos;
    }
    ColourId out = 0;
    for (std::size_t i = length_; i-- > 0;) out = out * modulus_ + c[i];
    return out;
  }

  std::vector<ColourId> vector_of(ColourId id) const { return decode_mixed_radix(id, radices_); }
  ColourId id_of(std::span<const ColourId> vec) const { return encode_mixed_radix(vec, radices_); }

  std::string name() const {
    return "contribution:m=" + std::to_string(modulus_) + ",l=" + std::to_string(length_);
  }

  Colouring as_colouring() const {
    auto self = *this;
    return Colouring(name(), count_, [self](const Word& w) { return self.id(w); });
  }

 private:
  unsigned modulus_;
  unsigned length_;
  std::vector<ColourId> radices_;
  ColourId count_ = 1;
};

inline std::vector<ColourId> contribution_colour(const Word& x, unsigned modulus, unsigned length) {
  return ContributionColouring(modulus, length).vector(x);
}

// ---------------------------------------------------------------------------
// Table and product colourings.

class TableColouring {
 public:
  using Map = std::unordered_map<Word, ColourId, WordHash>;

  TableColouring(Map entries, ColourId bound, std::string name = "table")
      : entries_(std::make_shared<const Map>(std::move(entries))), bound_(bound), name_(std::move(name)) {
    if (bound_ == 0) throw Error(ErrorKind::InvalidArgument, "colour bound must be positive");
    for (const auto& [w, c] : *entries_)
      if (c >= bound_) throw Error(ErrorKind::DomainError, "table colour " + std::to_string(c) + " exceeds bound");
  }

  /// Table over all of [m]^n; refuses domains above 2^24 words.
  template <class F>
  static TableColouring tabulate(std::size_t n, unsigned m, ColourId bound, F&& f, std::string name = "table") {
    check_domain(n, m);
    Map entries;
    for_each_word(n, m, [&](const Word& w) { entries.emplace(w, f(w)); });
    return TableColouring(std::move(entries), bound, std::move(name));
  }

  static TableColouring from_colouring(const Colouring& c, std::size_t n, unsigned m) {
    return tabulate(n, m, c.bound(), c, "table(" + c.name() + ")");
  }

  static TableColouring random(std::size_t n, unsigned m, ColourId k, std::uint64_t seed) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "random table needs k >= 1");
    std::mt19937_64 rng(seed);
    return tabulate(n, m, k, [&](const Word&) { return rng() % k; },
                    "random:k=" + std::to_string(k) + ",seed=" + std::to_string(seed));
  }

  ColourId at(const Word& w) const {
    auto it = entries_->find(w);
    if (it == entries_->end()) throw Error(ErrorKind::DomainError, "word " + w.to_string() + " not in table domain");
    return it->second;
  }
  ColourId operator()(const Word& w) const { return at(w); }

  bool contains(const Word& w) const { return entries_->count(w) != 0; }
  const Map& entries() const noexcept { return *entries_; }
  ColourId bound() const noexcept { return bound_; }
  const std::string& name() const noexcept { return name_; }

  Colouring as_colouring() const {
    auto self = *this;
    return Colouring(name_, bound_, [self](const Word& w) { return self.at(w); });
  }

  static void check_domain(std::size_t n, unsigned m) {
    unsigned __int128 size = 1;
    for (std::size_t i = 0; i < n; ++i) {
      size *= m;
      if (size > (1u << 24)) throw Error(ErrorKind::CapacityExceeded, "table domain larger than 2^24 words");
    }
  }

 private:
  std::shared_ptr<const Map> entries_;
  ColourId bound_;
  std::string name_;
};

inline TableColouring table_colouring(TableColouring::Map entries, ColourId bound) {
  return TableColouring(std::move(entries), bound);
}

/// Tuple of component colours, tupled by mixed radix over the component
/// bounds (component 0 least significant).
inline Colouring product_colouring(std::vector<Colouring> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "product of zero colourings");
  std::vector<ColourId> radices;
  std::string name = "product(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    radices.push_back(parts[i].bound());
    name += (i ? "," : "") + parts[i].name();
  }
  auto bound = radix_product(radices);
  if (!bound) throw Error(ErrorKind::CapacityExceeded, "product colour count does not fit 64 bits");
  return Colouring(name + ")", *bound, [parts = std::move(parts), radices](const Word& w) {
    ColourId id = 0;
    for (std::size_t i = parts.size(); i-- > 0;) id = id * radices[i] + parts[i](w);
    return id;
  });
}

// ---------------------------------------------------------------------------
// Substitution of a 12-word into the 2-positions of a word, the chi family,
// z-words and the induced colouring.

/// Splices w into the 2-positions of x (x has no 1's and exactly |w| 2's).
inline Word substitute(const Word& x, const Word& w) {
  std::vector<Symbol> out(x.symbols().begin(), x.symbols().end());
  std::size_t next = 0;
  for (auto& s : out) {
    if (s == 1) throw Error(ErrorKind::SubstitutionMismatch, "x contains a 1: " + x.to_string());
    if (s == 2) {
      if (next >= w.size()) break;
      s = w[next++];
    }
  }
  std::size_t twos = 0;
  for (Symbol s : x.symbols()) twos += (s == 2);
  if (twos != w.size()) {
    throw Error(ErrorKind::SubstitutionMismatch,
                "x has " + std::to_string(twos) + " 2's but w has length " + std::to_string(w.size()));
  }
  return Word::encode(out, std::max(3u, x.alphabet()));
}

struct ChiFamily {
  std::size_t k = 0;
  std::vector<Word> words;  // lexicographic

  std::size_t size() const noexcept { return words.size(); }
};

/// All length-(2k+2) words over [2] with exactly k+1 1's, lexicographic.
inline ChiFamily chi_words(std::size_t k) {
  ChiFamily chi{k, {}};
  for (const Word& w : enumerate_with_profile(2 * k + 2, 2, Profile{{k + 1, k + 1}})) chi.words.push_back(w);
  return chi;
}

/// k+1 copies of "12" with copy i (1-based) flipped to "21".
inline Word z_word(std::size_t i, std::size_t k) {
  if (i < 1 || i > k + 1) {
    throw Error(ErrorKind::IndexOutOfRange,
                "z-word index " + std::to_string(i) + " outside [1, " + std::to_string(k + 1) + "]");
  }
  std::vector<Symbol> s;
  for (std::size_t b = 1; b <= k + 1; ++b) {
    if (b == i) {
      s.push_back(2);
      s.push_back(1);
    } else {
      s.push_back(1);
      s.push_back(2);
    }
  }
  return Word::encode(s, 2);
}

/// Family A for parameter k: exactly 2k+2 2's and no 1's.
inline bool in_family_a(const Word& x, std::size_t k) {
  std::size_t twos = 0;
  for (Symbol s : x.symbols()) {
    if (s == 1) return false;
    twos += (s == 2);
  }
  return twos == 2 * k + 2;
}

/// Word with 2's exactly on the given 1-based coordinates and 3's elsewhere.
inline Word twos_on(std::size_t n, std::span<const std::size_t> coords) {
  std::vector<Symbol> s(n, 3);
  for (std::size_t c : coords) s.at(c - 1) = 2;
  return Word::encode(s, 3);
}

/// Theta(x) = (theta(f(x, w_1)), ..., theta(f(x, w_s))) for x in family A.
class InducedColouring {
 public:
  InducedColouring(Colouring base, std::size_t k) : base_(std::move(base)), chi_(chi_words(k)) {}

  std::size_t k() const noexcept { return chi_.k; }
  const ChiFamily& chi() const noexcept { return chi_; }
  const Colouring& base() const noexcept { return base_; }

  std::vector<ColourId> operator()(const Word& x) const {
    if (!in_family_a(x, chi_.k)) {
      throw Error(ErrorKind::NotInFamilyA, x.to_string() + " does not have exactly " + std::to_string(2 * chi_.k + 2) +
                                               " 2's and no 1's");
    }
    std::vector<ColourId> tuple;
    tuple.reserve(chi_.size());
    for (const Word& w : chi_.words) tuple.push_back(base_(substitute(x, w)));
    return tuple;
  }

  /// base.bound()^s when that fits 64 bits.
  std::optional<ColourId> bound() const {
    std::vector<ColourId> radices(chi_.size(), base_.bound());
    return radix_product(radices);
  }

  std::string name() const { return "induced:base=" + base_.name() + ",k=" + std::to_string(chi_.k); }

  /// Dense-id view; only available while the tuple space fits 64 bits.
  Colouring as_colouring() const {
    auto b = bound();
    if (!b) throw Error(ErrorKind::CapacityExceeded, "induced colour space exceeds 64 bits");
    auto self = *this;
    std::vector<ColourId> radices(chi_.size(), base_.bound());
    return Colouring(name(), *b, [self, radices](const Word& x) { return encode_mixed_radix(self(x), radices); });
  }

 private:
  Colouring base_;
  ChiFamily chi_;
};

inline std::vector<ColourId> induced_colour(const InducedColouring& theta, const Word& x) { return theta(x); }

// ---------------------------------------------------------------------------

/// 0 iff the coordinate sum, reduced into [0, 2d), lies in [0, d).
inline ColourId coordinate_sum_colour(const LatticePoint& x, std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "coordinate-sum colouring needs d >= 1");
  std::int64_t r = x.sum() % (2 * d);
  if (r < 0) r += 2 * d;
  return r < d ? 0 : 1;
}

}  // namespace blocksets

#endif  // BLOCKSETS_COLOURING_HPP
