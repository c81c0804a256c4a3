#ifndef BLOCKSETS_BLOCKSET_HPP
#define BLOCKSETS_BLOCKSET_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "blocksets/error.hpp"
#include "blocksets/words.hpp"

namespace blocksets {

/// A non-decreasing word over [m], kept together with its multiplicity
/// vector. Symbols of multiplicity zero are allowed.
class Template {
 public:
  static Template from_counts(unsigned m, std::vector<std::size_t> counts) {
    if (m < 2 || m > kMaxAlphabet) throw Error(ErrorKind::InvalidArgument, "alphabet size must lie in [2, 9]");
    if (counts.size() != m) {
      throw Error(ErrorKind::InvalidArgument, "template needs exactly m=" + std::to_string(m) + " counts");
    }
    Template t;
    t.m_ = m;
    t.counts_ = std::move(counts);
    for (unsigned s = 0; s < m; ++s) t.word_.insert(t.word_.end(), t.counts_[s], static_cast<Symbol>(s + 1));
    if (t.word_.empty()) throw Error(ErrorKind::EmptyTemplate, "all multiplicities are zero");
    t.arrangements_.push_back(t.word_);
    auto perm = t.word_;
    while (std::next_permutation(perm.begin(), perm.end())) t.arrangements_.push_back(perm);
    return t;
  }

  /// Parses a digit string such as "11223". With m == 0 the alphabet is the
  /// largest symbol present (at least 2).
  static Template parse(std::string_view word, unsigned m = 0) {
    if (word.empty()) throw Error(ErrorKind::EmptyTemplate, "empty template word");
    unsigned top = 2;
    std::vector<Symbol> symbols;
    for (char c : word) {
      if (c < '1' || c > '9') throw Error(ErrorKind::InvalidSymbol, std::string("bad template symbol '") + c + "'");
      symbols.push_back(static_cast<Symbol>(c - '0'));
      top = std::max<unsigned>(top, symbols.back());
    }
    if (!std::is_sorted(symbols.begin(), symbols.end())) {
      throw Error(ErrorKind::InvalidArgument, "template word must be non-decreasing: " + std::string(word));
    }
    if (m == 0) m = top;
    if (top > m) throw Error(ErrorKind::InvalidSymbol, "template symbol exceeds alphabet");
    std::vector<std::size_t> counts(m, 0);
    for (Symbol s : symbols) ++counts[s - 1];
    return from_counts(m, std::move(counts));
  }

  unsigned alphabet() const noexcept { return m_; }
  std::size_t size() const noexcept { return word_.size(); }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }
  const std::vector<Symbol>& canonical() const noexcept { return word_; }

  /// Distinct rearrangements of the canonical word, lexicographic.
  const std::vector<std::vector<Symbol>>& arrangements() const noexcept { return arrangements_; }

  std::string to_string() const {
    std::string out;
    for (Symbol s : word_) out.push_back(static_cast<char>('0' + s));
    return out;
  }

  friend bool operator==(const Template& a, const Template& b) noexcept {
    return a.m_ == b.m_ && a.counts_ == b.counts_;
  }

 private:
  Template() = default;

  unsigned m_ = 2;
  std::vector<std::size_t> counts_;
  std::vector<Symbol> word_;
  std::vector<std::vector<Symbol>> arrangements_;
};

inline Template template_from_counts(unsigned m, std::vector<std::size_t> counts) {
  return Template::from_counts(m, std::move(counts));
}

struct SizeMode {
  enum class Kind { Equal, Mixed };
  Kind kind = Kind::Equal;
  std::size_t d = 1;

  static SizeMode equal(std::size_t d) { return {Kind::Equal, d}; }
  static SizeMode mixed(std::size_t d) { return {Kind::Mixed, d}; }

  std::size_t min_size() const noexcept { return kind == Kind::Equal ? d : 1; }
  std::size_t max_size() const noexcept { return d; }
  bool allows(std::size_t size) const noexcept { return size >= min_size() && size <= max_size(); }

  std::string to_string() const { return (kind == Kind::Equal ? "equal:" : "mixed:") + std::to_string(d); }

  friend bool operator==(const SizeMode&, const SizeMode&) = default;
};

using Block = std::vector<std::size_t>;      // 1-based coordinates, ascending
using BlockFamily = std::vector<Block>;      // sorted by minimum element

/// Disjoint coordinate blocks plus a reference word on the complement.
/// The reference is stored at full length with 0 on block coordinates.
/// Blocks are canonicalised (each ascending, family sorted by minimum) so
/// two placements differing only in block labelling compare equal.
class Placement {
 public:
  Placement() = default;

  Placement(std::size_t n, BlockFamily blocks, std::vector<Symbol> reference)
      : n_(n), blocks_(std::move(blocks)), reference_(std::move(reference)) {
    if (n_ > kMaxWordLength) throw Error(ErrorKind::CapacityExceeded, "ambient length too large");
    if (reference_.empty() && n_ > 0) reference_.assign(n_, 0);
    if (reference_.size() != n_) {
      throw Error(ErrorKind::InvalidPlacement, "reference must have length n=" + std::to_string(n_));
    }
    std::vector<bool> used(n_ + 1, false);
    for (auto& b : blocks_) {
      if (b.empty()) throw Error(ErrorKind::InvalidPlacement, "empty block");
      std::sort(b.begin(), b.end());
      for (std::size_t c : b) {
        if (c < 1 || c > n_) throw Error(ErrorKind::InvalidPlacement, "coordinate " + std::to_string(c) + " outside [n]");
        if (used[c]) throw Error(ErrorKind::InvalidPlacement, "blocks overlap at coordinate " + std::to_string(c));
        used[c] = true;
      }
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    for (std::size_t c = 1; c <= n_; ++c) {
      bool has_ref = reference_[c - 1] != 0;
      if (used[c] && has_ref) {
        throw Error(ErrorKind::InvalidPlacement, "reference assigns block coordinate " + std::to_string(c));
      }
      if (!used[c] && !has_ref) {
        throw Error(ErrorKind::InvalidPlacement, "reference missing at coordinate " + std::to_string(c));
      }
    }
  }

  std::size_t n() const noexcept { return n_; }
  const BlockFamily& blocks() const noexcept { return blocks_; }
  const std::vector<Symbol>& reference() const noexcept { return reference_; }

  std::size_t covered() const noexcept {
    std::size_t total = 0;
    for (const auto& b : blocks_) total += b.size();
    return total;
  }

  bool satisfies(SizeMode mode) const noexcept {
    return std::all_of(blocks_.begin(), blocks_.end(), [&](const Block& b) { return mode.allows(b.size()); });
  }

  /// Reference rendered as a word string with '_' on block coordinates.
  std::string reference_string() const {
    std::string out(n_, '_');
    for (std::size_t i = 0; i < n_; ++i)
      if (reference_[i] != 0) out[i] = static_cast<char>('0' + reference_[i]);
    return out;
  }

  friend bool operator==(const Placement&, const Placement&) = default;
  friend auto operator<=>(const Placement& a, const Placement& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.blocks_ <=> b.blocks_; c != 0) return c;
    return a.reference_ <=> b.reference_;
  }

 private:
  std::size_t n_ = 0;
  BlockFamily blocks_;
  std::vector<Symbol> reference_;
};

using Pattern = std::string;

inline Pattern pattern_of_family(const BlockFamily& blocks) {
  std::vector<std::pair<std::size_t, std::size_t>> owner;  // (coordinate, block)
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t c : blocks[b]) owner.emplace_back(c, b);
  std::sort(owner.begin(), owner.end());
  std::vector<int> label(blocks.size(), -1);
  int next = 0;
  Pattern out;
  out.reserve(owner.size());
  for (auto [coord, b] : owner) {
    if (label[b] < 0) label[b] = next++;
    out.push_back(static_cast<char>('A' + label[b]));
  }
  return out;
}

inline Pattern pattern_of(const Placement& p) { return pattern_of_family(p.blocks()); }

/// Writes one arrangement of the template into the block coordinates of `out`.
inline void fill_blocks(const BlockFamily& blocks, std::span<const Symbol> arrangement, std::vector<Symbol>& out) {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t c : blocks[b]) out[c - 1] = arrangement[b];
}

/// Calls f(word) for every point of the block set, in lexicographic order.
template <class F>
void for_each_point(const Placement& p, const Template& t, F&& f) {
  if (p.blocks().size() != t.size()) {
    throw Error(ErrorKind::ArityMismatch, std::to_string(p.blocks().size()) + " blocks for a template of length " +
                                              std::to_string(t.size()));
  }
  std::vector<Symbol> buffer = p.reference();
  for (const auto& arrangement : t.arrangements()) {
    fill_blocks(p.blocks(), arrangement, buffer);
    f(Word::encode(buffer, t.alphabet()));
  }
}

inline std::vector<Word> blockset_points(const Placement& p, const Template& t) {
  std::vector<Word> out;
  out.reserve(t.arrangements().size());
  for_each_point(p, t, [&](const Word& w) { out.push_back(w); });
  return out;
}

namespace detail {

inline void grow_block(std::size_t n, std::size_t blocks_needed, SizeMode mode, std::uint64_t& used, Block& current,
                       BlockFamily& family, std::vector<BlockFamily>& out);

/// Chooses the block with index family.size(), whose minimum must exceed
/// the previous block's minimum.
inline void next_block(std::size_t n, std::size_t blocks_needed, SizeMode mode, std::uint64_t& used,
                       BlockFamily& family, std::vector<BlockFamily>& out) {
  if (family.size() == blocks_needed) {
    out.push_back(family);
    return;
  }
  std::size_t start = family.empty() ? 1 : family.back().front() + 1;
  for (std::size_t c = start; c <= n; ++c) {
    if (used >> c & 1u) continue;
    // every later block lives strictly above c
    std::size_t free_above = 0;
    for (std::size_t e = c + 1; e <= n; ++e) free_above += !(used >> e & 1u);
    std::size_t later = blocks_needed - family.size() - 1;
    if (free_above + 1 < later * mode.min_size() + mode.min_size()) break;
    used |= std::uint64_t{1} << c;
    Block current{c};
    grow_block(n, blocks_needed, mode, used, current, family, out);
    used &= ~(std::uint64_t{1} << c);
  }
}

inline void grow_block(std::size_t n, std::size_t blocks_needed, SizeMode mode, std::uint64_t& used, Block& current,
                       BlockFamily& family, std::vector<BlockFamily>& out) {
  if (mode.allows(current.size())) {
    family.push_back(current);
    next_block(n, blocks_needed, mode, used, family, out);
    family.pop_back();
  }
  if (current.size() >= mode.max_size()) return;
  for (std::size_t e = current.back() + 1; e <= n; ++e) {
    if (used >> e & 1u) continue;
    used |= std::uint64_t{1} << e;
    current.push_back(e);
    grow_block(n, blocks_needed, mode, used, current, family, out);
    current.pop_back();
    used &= ~(std::uint64_t{1} << e);
  }
}

}  // namespace detail

/// All unordered families of `count` disjoint blocks in [n] allowed by the
/// size mode, each sorted by minimum, in lexicographic order of the block
/// sequence. An optional pattern filter keeps only matching families.
inline std::vector<BlockFamily> block_families(std::size_t n, std::size_t count, SizeMode mode,
                                               const std::optional<Pattern>& filter = std::nullopt) {
  if (n >= kMaxWordLength) throw Error(ErrorKind::CapacityExceeded, "ambient length too large");
  if (mode.d == 0) throw Error(ErrorKind::InvalidArgument, "block size bound must be >= 1");
  if (n < count * mode.min_size()) {
    throw Error(ErrorKind::AmbientTooSmall, "n=" + std::to_string(n) + " cannot hold " + std::to_string(count) +
                                                " blocks of size >= " + std::to_string(mode.min_size()));
  }
  std::vector<BlockFamily> out;
  std::uint64_t used = 0;
  BlockFamily family;
  detail::next_block(n, count, mode, used, family, out);
  if (filter) {
    std::erase_if(out, [&](const BlockFamily& f) { return pattern_of_family(f) != *filter; });
  }
  return out;
}

/// Lexicographic odometer over reference symbols on the free coordinates.
class ReferenceOdometer {
 public:
  ReferenceOdometer(std::size_t n, const BlockFamily& family, std::vector<Symbol> domain)
      : domain_(std::move(domain)), buffer_(n, 0) {
    std::vector<bool> used(n + 1, false);
    for (const auto& b : family)
      for (std::size_t c : b) used[c] = true;
    for (std::size_t c = 1; c <= n; ++c)
      if (!used[c]) free_.push_back(c - 1);
    digit_.assign(free_.size(), 0);
    for (std::size_t i : free_) buffer_[i] = domain_.front();
  }

  /// Reference with 0 on block coordinates.
  const std::vector<Symbol>& current() const noexcept { return buffer_; }

  std::uint64_t size() const {
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < free_.size(); ++i) {
      total *= domain_.size();
      if (total > UINT64_MAX) throw Error(ErrorKind::CapacityExceeded, "reference space too large");
    }
    return static_cast<std::uint64_t>(total);
  }

  bool advance() noexcept {
    for (std::size_t k = free_.size(); k-- > 0;) {
      if (++digit_[k] < domain_.size()) {
        buffer_[free_[k]] = domain_[digit_[k]];
        return true;
      }
      digit_[k] = 0;
      buffer_[free_[k]] = domain_.front();
    }
    return false;
  }

 private:
  std::vector<Symbol> domain_;
  std::vector<Symbol> buffer_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> digit_;
};

inline std::vector<Symbol> full_domain(unsigned m) {
  std::vector<Symbol> out(m);
  for (unsigned s = 0; s < m; ++s) out[s] = static_cast<Symbol>(s + 1);
  return out;
}

struct PlacementQuery {
  std::size_t n = 0;
  SizeMode mode;
  std::optional<Pattern> filter;
  std::optional<std::vector<Symbol>> reference_domain;
};

inline std::vector<Symbol> reference_domain_of(const PlacementQuery& q, const Template& t) {
  if (!q.reference_domain) return full_domain(t.alphabet());
  auto dom = *q.reference_domain;
  std::sort(dom.begin(), dom.end());
  dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
  if (dom.empty()) throw Error(ErrorKind::InvalidArgument, "empty reference domain");
  for (Symbol s : dom)
    if (s < 1 || s > t.alphabet()) throw Error(ErrorKind::InvalidSymbol, "reference symbol outside alphabet");
  return dom;
}

/// Visits every placement (block family x reference) in canonical order:
/// families lexicographically, then references lexicographically. f may
/// return bool; returning false stops the enumeration.
template <class F>
void for_each_placement(const PlacementQuery& q, const Template& t, F&& f) {
  auto families = block_families(q.n, t.size(), q.mode, q.filter);
  auto domain = reference_domain_of(q, t);
  for (const auto& family : families) {
    ReferenceOdometer odo(q.n, family, domain);
    do {
      Placement p(q.n, family, odo.current());
      if constexpr (std::is_same_v<std::invoke_result_t<F&, const Placement&>, bool>) {
        if (!f(p)) return;
      } else {
        f(p);
      }
    } while (odo.advance());
  }
}

inline std::vector<Placement> enumerate_placements(const PlacementQuery& q, const Template& t) {
  std::vector<Placement> out;
  for_each_placement(q, t, [&](const Placement& p) { out.push_back(p); });
  return out;
}

}  // namespace blocksets

#endif  // BLOCKSETS_BLOCKSET_HPP
