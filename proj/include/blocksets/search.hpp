#ifndef BLOCKSETS_SEARCH_HPP
#define BLOCKSETS_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "blocksets/blockset.hpp"
#include "blocksets/colouring.hpp"
#include "blocksets/error.hpp"
#include "blocksets/parallel.hpp"
#include "blocksets/words.hpp"

namespace blocksets {

struct Hit {
  Placement placement;
  ColourId colour = 0;

  friend bool operator==(const Hit&, const Hit&) = default;
};

struct SearchReport {
  // parameters
  std::size_t n = 0;
  std::string template_word;
  SizeMode mode;
  std::optional<Pattern> filter;
  std::string colouring;

  std::uint64_t examined = 0;
  std::vector<Hit> found;
  double elapsed_ms = 0;
  std::size_t workers = 1;
  bool budget_exhausted = false;
};

template <class C>
std::string colouring_name(const C& c) {
  if constexpr (requires { { c.name() } -> std::convertible_to<std::string>; }) {
    return c.name();
  } else {
    return "custom";
  }
}

namespace detail {

/// Evaluates one block set, points in lexicographic order, stopping at the
/// first colour mismatch. Returns the common colour when monochromatic.
template <class C>
std::optional<ColourId> monochromatic_colour(const BlockFamily& family, const Template& t, const C& colour,
                                             std::vector<Symbol>& buffer) {
  const auto& arrangements = t.arrangements();
  fill_blocks(family, arrangements.front(), buffer);
  const ColourId first = colour(Word::encode(buffer, t.alphabet()));
  for (std::size_t a = 1; a < arrangements.size(); ++a) {
    fill_blocks(family, arrangements[a], buffer);
    if (colour(Word::encode(buffer, t.alphabet())) != first) return std::nullopt;
  }
  return first;
}

struct FamilyScan {
  std::vector<Hit> hits;
  std::uint64_t examined = 0;
};

/// Scans every reference of one family. With stop_at_first the scan ends
/// at the first hit and `examined` counts up to and including it.
template <class C>
FamilyScan scan_family(std::size_t n, const BlockFamily& family, const Template& t, const C& colour,
                       const std::vector<Symbol>& domain, bool stop_at_first) {
  FamilyScan out;
  ReferenceOdometer odo(n, family, domain);
  std::vector<Symbol> buffer;
  do {
    ++out.examined;
    buffer = odo.current();
    if (auto c = monochromatic_colour(family, t, colour, buffer)) {
      out.hits.push_back({Placement(n, family, odo.current()), *c});
      if (stop_at_first) break;
    }
  } while (odo.advance());
  return out;
}

template <class C>
void reverify(const Hit& hit, const Template& t, const C& colour) {
  for (const Word& w : blockset_points(hit.placement, t)) {
    if (colour(w) != hit.colour) {
      throw Error(ErrorKind::ExtractionContradiction,
                  "reported placement is not monochromatic at point " + w.to_string());
    }
  }
}

inline std::uint64_t references_per_family(std::size_t n, const BlockFamily& family, std::size_t domain) {
  std::size_t covered = 0;
  for (const auto& b : family) covered += b.size();
  unsigned __int128 total = 1;
  for (std::size_t i = covered; i < n; ++i) {
    total *= domain;
    if (total > UINT64_MAX) throw Error(ErrorKind::CapacityExceeded, "placement space too large");
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace detail

/// Canonically-first monochromatic placement, or nullopt after exhausting
/// the placement space. The answer does not depend on `workers`: each block
/// family is one task, and the lowest family index with a hit wins.
template <class C>
std::optional<Hit> find_monochromatic(const C& colour, const PlacementQuery& q, const Template& t,
                                      std::size_t workers = 1, std::uint64_t* examined = nullptr) {
  const auto families = block_families(q.n, t.size(), q.mode, q.filter);
  const auto domain = reference_domain_of(q, t);
  if (workers == 0) workers = default_workers();

  std::vector<std::optional<Hit>> first(families.size());
  std::vector<std::uint64_t> scanned(families.size(), 0);
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  parallel_for(families.size(), workers, [&](std::size_t f) {
    if (f > best.load(std::memory_order_relaxed)) return;
    auto scan = detail::scan_family(q.n, families[f], t, colour, domain, true);
    scanned[f] = scan.examined;
    if (!scan.hits.empty()) {
      first[f] = std::move(scan.hits.front());
      std::size_t cur = best.load();
      while (f < cur && !best.compare_exchange_weak(cur, f)) {
      }
    }
  });

  std::uint64_t count = 0;
  for (std::size_t f = 0; f < families.size(); ++f) {
    if (first[f]) {
      count += scanned[f];
      if (examined) *examined = count;
      detail::reverify(*first[f], t, colour);
      return first[f];
    }
    count += detail::references_per_family(q.n, families[f], domain.size());
  }
  if (examined) *examined = count;
  return std::nullopt;
}

namespace detail {

inline SearchReport make_report(const PlacementQuery& q, const Template& t, std::string name, std::size_t workers) {
  SearchReport r;
  r.n = q.n;
  r.template_word = t.to_string();
  r.mode = q.mode;
  r.filter = q.filter;
  r.colouring = std::move(name);
  r.workers = workers == 0 ? default_workers() : workers;
  return r;
}

inline double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

/// find_monochromatic wrapped in a report; `examined` counts placements in
/// canonical order up to and including the hit.
template <class C>
SearchReport search_monochromatic(const C& colour, const PlacementQuery& q, const Template& t,
                                  std::size_t workers = 1) {
  auto start = std::chrono::steady_clock::now();
  auto report = detail::make_report(q, t, colouring_name(colour), workers);
  if (auto hit = find_monochromatic(colour, q, t, workers, &report.examined)) report.found.push_back(*hit);
  report.elapsed_ms = detail::elapsed_since(start);
  return report;
}

/// Examines every placement and lists all monochromatic ones in canonical order.
template <class C>
SearchReport verify_absence(const C& colour, const PlacementQuery& q, const Template& t, std::size_t workers = 1) {
  auto start = std::chrono::steady_clock::now();
  auto report = detail::make_report(q, t, colouring_name(colour), workers);
  const auto families = block_families(q.n, t.size(), q.mode, q.filter);
  const auto domain = reference_domain_of(q, t);

  std::vector<detail::FamilyScan> scans(families.size());
  parallel_for(families.size(), report.workers, [&](std::size_t f) {
    scans[f] = detail::scan_family(q.n, families[f], t, colour, domain, false);
  });
  for (auto& scan : scans) {
    report.examined += scan.examined;
    for (auto& hit : scan.hits) {
      detail::reverify(hit, t, colour);
      report.found.push_back(std::move(hit));
    }
  }
  report.elapsed_ms = detail::elapsed_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// Witness colourings by backtracking.

struct WitnessResult {
  enum class Status { Found, Exhausted, BudgetExceeded };

  Status status = Status::Exhausted;
  std::optional<TableColouring> witness;
  std::uint64_t nodes = 0;
  std::size_t variables = 0;
  std::size_t constraints = 0;
};

inline std::string_view to_string(WitnessResult::Status s) noexcept {
  switch (s) {
    case WitnessResult::Status::Found: return "found";
    case WitnessResult::Status::Exhausted: return "exhausted";
    case WitnessResult::Status::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

namespace detail {

class WitnessSolver {
 public:
  WitnessSolver(std::vector<std::vector<int>> constraints, std::size_t variables, unsigned k, std::uint64_t budget)
      : cons_(std::move(constraints)), k_(k), budget_(budget), colour_(variables, -1), of_var_(variables) {
    const std::uint64_t all = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    domain_.assign(variables, all);
    for (std::size_t c = 0; c < cons_.size(); ++c)
      for (int v : cons_[c]) of_var_[v].push_back(static_cast<int>(c));
  }

  WitnessResult::Status solve() {
    // A single-point constraint is monochromatic under every colouring.
    for (const auto& c : cons_)
      if (c.size() == 1) return WitnessResult::Status::Exhausted;
    try {
      return dfs(-1) ? WitnessResult::Status::Found : WitnessResult::Status::Exhausted;
    } catch (const OutOfBudget&) {
      return WitnessResult::Status::BudgetExceeded;
    }
  }

  const std::vector<int>& colours() const noexcept { return colour_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  struct OutOfBudget {};

  int pick() const {
    int best = -1;
    int best_size = 65;
    for (std::size_t v = 0; v < colour_.size(); ++v) {
      if (colour_[v] >= 0) continue;
      int size = std::popcount(domain_[v]);
      if (size < best_size) {
        best = static_cast<int>(v);
        best_size = size;
      }
    }
    return best;
  }

  /// Assigns v = c and forward-checks every constraint through v.
  bool assign(int v, int c, std::vector<std::pair<int, std::uint64_t>>& trail) {
    colour_[v] = c;
    for (int ci : of_var_[v]) {
      int unassigned = -1, open = 0;
      bool uniform = true;
      for (int u : cons_[ci]) {
        if (colour_[u] < 0) {
          unassigned = u;
          ++open;
        } else if (colour_[u] != c) {
          uniform = false;
          break;
        }
      }
      if (!uniform) continue;
      if (open == 0) return false;
      if (open == 1) {
        std::uint64_t bit = std::uint64_t{1} << c;
        if (domain_[unassigned] & bit) {
          trail.emplace_back(unassigned, domain_[unassigned]);
          domain_[unassigned] &= ~bit;
          if (domain_[unassigned] == 0) return false;
        }
      }
    }
    return true;
  }

  bool dfs(int max_used) {
    int v = pick();
    if (v < 0) return true;
    int top = std::min<int>(static_cast<int>(k_) - 1, max_used + 1);
    for (int c = 0; c <= top; ++c) {
      if (!(domain_[v] >> c & 1u)) continue;
      if (++nodes_ > budget_) throw OutOfBudget{};
      std::vector<std::pair<int, std::uint64_t>> trail;
      if (assign(v, c, trail) && dfs(std::max(max_used, c))) return true;
      colour_[v] = -1;
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) domain_[it->first] = it->second;
    }
    return false;
  }

  std::vector<std::vector<int>> cons_;
  unsigned k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> colour_;
  std::vector<std::uint64_t> domain_;
  std::vector<std::vector<int>> of_var_;
};

}  // namespace detail

/// Backtracking search for a k-colouring of [m]^n with no monochromatic
/// placement. Forward checking removes colour c from the last open point of
/// any placement whose other points are all c; colours are introduced in
/// order of first use, which is complete because unused colours are
/// interchangeable. Words outside every placement are coloured 0.
inline WitnessResult witness_search(const PlacementQuery& q, const Template& t, unsigned k, std::uint64_t budget) {
  if (k < 1 || k > 64) throw Error(ErrorKind::InvalidArgument, "witness search needs 1 <= k <= 64");
  TableColouring::check_domain(q.n, t.alphabet());

  std::unordered_map<Word, int, WordHash> ids;
  std::vector<Word> words;
  std::vector<std::vector<int>> constraints;
  for_each_placement(q, t, [&](const Placement& p) {
    std::vector<int> c;
    for_each_point(p, t, [&](const Word& w) {
      auto [it, fresh] = ids.emplace(w, static_cast<int>(words.size()));
      if (fresh) words.push_back(w);
      c.push_back(it->second);
    });
    constraints.push_back(std::move(c));
  });

  WitnessResult result;
  result.variables = words.size();
  result.constraints = constraints.size();
  detail::WitnessSolver solver(std::move(constraints), words.size(), k, budget);
  result.status = solver.solve();
  result.nodes = solver.nodes();
  if (result.status == WitnessResult::Status::Found) {
    const auto& colours = solver.colours();
    result.witness = TableColouring::tabulate(
        q.n, t.alphabet(), k,
        [&](const Word& w) -> ColourId {
          auto it = ids.find(w);
          return it == ids.end() ? 0 : static_cast<ColourId>(colours[it->second]);
        },
        "witness:k=" + std::to_string(k));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Homogeneous subsets: explicit search in place of a Ramsey bound.

template <class T>
struct HomogeneousSet {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<std::size_t> members;  // 1-based, ascending
  T colour{};
};

namespace detail {

template <class F, class T>
class HomogeneousSearch {
 public:
  HomogeneousSearch(std::size_t n, std::size_t r, std::size_t target, F& colour)
      : n_(n), r_(r), target_(target), colour_(colour) {}

  std::optional<HomogeneousSet<T>> run() {
    if (extend(1)) return HomogeneousSet<T>{n_, r_, chosen_, *reference_};
    return std::nullopt;
  }

 private:
  /// True when every r-subset containing the last chosen element matches.
  bool consistent() {
    const std::size_t size = chosen_.size();
    if (size < r_) return true;
    if (size == r_) {
      reference_ = colour_(std::span<const std::size_t>(chosen_));
      return true;
    }
    // choose r-1 of the first size-1 elements, plus the new one
    std::vector<std::size_t> pick(r_ - 1);
    for (std::size_t i = 0; i < r_ - 1; ++i) pick[i] = i;
    std::vector<std::size_t> subset(r_);
    while (true) {
      for (std::size_t i = 0; i < r_ - 1; ++i) subset[i] = chosen_[pick[i]];
      subset[r_ - 1] = chosen_.back();
      if (!(colour_(std::span<const std::size_t>(subset)) == *reference_)) return false;
      std::size_t i = r_ - 1;
      while (i > 0 && pick[i - 1] == size - 1 - (r_ - 1) + (i - 1)) --i;
      if (i == 0) return true;
      ++pick[i - 1];
      for (std::size_t j = i; j < r_ - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  bool extend(std::size_t from) {
    if (chosen_.size() == target_) return true;
    for (std::size_t x = from; x + (target_ - chosen_.size()) <= n_ + 1; ++x) {
      chosen_.push_back(x);
      if (consistent() && extend(x + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::size_t n_, r_, target_;
  F& colour_;
  std::vector<std::size_t> chosen_;
  std::optional<T> reference_;
};

}  // namespace detail

/// Lexicographically first `target`-subset of [n] all of whose r-subsets get
/// the same colour. colour(span of ascending 1-based elements) may return
/// any equality-comparable type.
template <class F>
auto homogeneous_subset_search(std::size_t n, std::size_t r, std::size_t target, F&& colour)
    -> std::optional<HomogeneousSet<std::decay_t<std::invoke_result_t<F&, std::span<const std::size_t>>>>> {
  using T = std::decay_t<std::invoke_result_t<F&, std::span<const std::size_t>>>;
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "uniformity r must be >= 1");
  if (target < r) throw Error(ErrorKind::InvalidArgument, "target size must be >= r");
  detail::HomogeneousSearch<std::remove_reference_t<F>, T> search(n, r, target, colour);
  return search.run();
}

/// The induced colouring viewed on (2k+2)-subsets of [n]: a subset maps to
/// Theta of the word with 2's on it and 3's elsewhere.
inline auto induced_subset_colouring(const InducedColouring& theta, std::size_t n) {
  return [&theta, n](std::span<const std::size_t> subset) { return theta(twos_on(n, subset)); };
}

// ---------------------------------------------------------------------------
// ABCCBA extraction.

struct Extraction {
  Placement placement;
  ColourId colour = 0;
  std::size_t i = 0;  // z-word indices with equal colour, i < j
  std::size_t j = 0;
};

/// Given S homogeneous for the colouring induced from theta, returns a
/// monochromatic block set of template 123 with pattern ABCCBA on S.
///
/// Relative to S, with x having 2's on the first 2k+2 positions of S and
/// 3's elsewhere, two z-words z_i, z_j (i < j) share a colour by pigeonhole.
/// The blocks are {2i-1, 2j+2}, {2i, 2j+1}, {2i+1, 2j}; the remaining k-1
/// pairs of S carry "12" and everything outside S is 3. Every one of the 6
/// points is a rearrangement of 3's inside S of f(x, z_i) or f(x, z_j), so
/// homogeneity forces one colour. The points are re-evaluated regardless.
inline Extraction theorem3_extract(const Colouring& theta, std::size_t k,
                                   const HomogeneousSet<std::vector<ColourId>>& s) {
  const std::size_t width = 2 * k + 4;
  const std::size_t n = s.n;
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "extraction needs k >= 1");
  if (s.members.size() != width || s.r != 2 * k + 2) {
    throw Error(ErrorKind::InvalidArgument, "homogeneous set must have size 2k+4 with r = 2k+2");
  }
  if (!std::is_sorted(s.members.begin(), s.members.end()) || s.members.front() < 1 || s.members.back() > n ||
      std::adjacent_find(s.members.begin(), s.members.end()) != s.members.end()) {
    throw Error(ErrorKind::InvalidArgument, "homogeneous set members must be distinct, ascending, in [n]");
  }

  InducedColouring induced(theta, k);
  auto subset_colour = induced_subset_colouring(induced, n);
  {
    std::vector<std::size_t> subset;
    for (std::size_t skip_a = 0; skip_a < width; ++skip_a) {
      for (std::size_t skip_b = skip_a + 1; skip_b < width; ++skip_b) {
        subset.clear();
        for (std::size_t p = 0; p < width; ++p)
          if (p != skip_a && p != skip_b) subset.push_back(s.members[p]);
        if (subset_colour(subset) != s.colour) {
          throw Error(ErrorKind::NotHomogeneous, "Theta differs from the recorded colour on a (2k+2)-subset of S");
        }
      }
    }
  }

  const Word x = twos_on(n, std::span<const std::size_t>(s.members.data(), 2 * k + 2));
  std::vector<ColourId> zc;
  for (std::size_t i = 1; i <= k + 1; ++i) zc.push_back(theta(substitute(x, z_word(i, k))));
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 1; i <= k + 1 && bi == 0; ++i) {
    for (std::size_t j = i + 1; j <= k + 1; ++j) {
      if (zc[i - 1] == zc[j - 1]) {
        bi = i;
        bj = j;
        break;
      }
    }
  }
  if (bi == 0) {
    throw Error(ErrorKind::ExtractionContradiction,
                "no two z-words share a colour; the base colouring uses more than k colours on them");
  }

  auto at = [&](std::size_t rel) { return s.members[rel - 1]; };
  BlockFamily blocks = {{at(2 * bi - 1), at(2 * bj + 2)}, {at(2 * bi), at(2 * bj + 1)}, {at(2 * bi + 1), at(2 * bj)}};
  std::vector<Symbol> reference(n, 3);
  std::vector<bool> in_block(width + 1, false);
  for (std::size_t rel : {2 * bi - 1, 2 * bi, 2 * bi + 1, 2 * bj, 2 * bj + 1, 2 * bj + 2}) {
    in_block[rel] = true;
    reference[at(rel) - 1] = 0;
  }
  Symbol next = 1;
  for (std::size_t rel = 1; rel <= width; ++rel) {
    if (in_block[rel]) continue;
    reference[at(rel) - 1] = next;
    next = next == 1 ? 2 : 1;
  }

  Extraction out{Placement(n, std::move(blocks), std::move(reference)), zc[bi - 1], bi, bj};
  const Template t123 = Template::parse("123");
  for (const Word& w : blockset_points(out.placement, t123)) {
    if (theta(w) != out.colour) {
      throw Error(ErrorKind::ExtractionContradiction, "point " + w.to_string() + " has colour " +
                                                          std::to_string(theta(w)) + ", expected " +
                                                          std::to_string(out.colour));
    }
  }
  return out;
}

/// Full pipeline at desk scale: homogeneous search for the induced colouring
/// on [n], then extraction. nullopt when no homogeneous (2k+4)-set exists.
inline std::optional<Extraction> theorem3_pipeline(const Colouring& theta, std::size_t k, std::size_t n) {
  InducedColouring induced(theta, k);
  auto s = homogeneous_subset_search(n, 2 * k + 2, 2 * k + 4, induced_subset_colouring(induced, n));
  if (!s) return std::nullopt;
  return theorem3_extract(theta, k, *s);
}

}  // namespace blocksets

#endif  // BLOCKSETS_SEARCH_HPP
