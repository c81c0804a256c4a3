#ifndef BLOCKSETS_LATTICE_HPP
#define BLOCKSETS_LATTICE_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blocksets/colouring.hpp"
#include "blocksets/error.hpp"
#include "blocksets/parallel.hpp"
#include "blocksets/point.hpp"
#include "blocksets/words.hpp"

namespace blocksets {

/// Positions of the 1's of v relative to those of w, matched in sorted order.
inline LatticePoint word_to_lattice(const Word& v, const Word& w) {
  if (v.size() != w.size()) throw Error(ErrorKind::EncodingMismatch, "words have different lengths");
  std::vector<std::int64_t> ones_v, ones_w;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 2 || w[i] > 2) throw Error(ErrorKind::EncodingMismatch, "lattice encoding needs words over {1,2}");
    if (v[i] == 1) ones_v.push_back(static_cast<std::int64_t>(i));
    if (w[i] == 1) ones_w.push_back(static_cast<std::int64_t>(i));
  }
  if (ones_v.size() != ones_w.size()) {
    throw Error(ErrorKind::EncodingMismatch, "words have " + std::to_string(ones_v.size()) + " and " +
                                                 std::to_string(ones_w.size()) + " 1's");
  }
  LatticePoint out(ones_v.size());
  for (std::size_t i = 0; i < ones_v.size(); ++i) out[i] = ones_v[i] - ones_w[i];
  return out;
}

inline std::int64_t l1_norm(const LatticePoint& p) noexcept {
  std::int64_t total = 0;
  for (auto c : p.coords()) total += c < 0 ? -c : c;
  return total;
}

/// Nonzero vectors u_1..u_t of Z^n with pairwise disjoint supports.
class GeneratorSet {
 public:
  GeneratorSet(std::size_t n, std::vector<LatticePoint> generators) : n_(n), u_(std::move(generators)) {
    std::vector<int> owner(n_, -1);
    for (std::size_t g = 0; g < u_.size(); ++g) {
      if (u_[g].dim() != n_) throw Error(ErrorKind::InvalidArgument, "generator dimension differs from n");
      bool nonzero = false;
      for (std::size_t i = 0; i < n_; ++i) {
        if (u_[g][i] == 0) continue;
        nonzero = true;
        if (owner[i] >= 0) {
          throw Error(ErrorKind::SupportOverlap, "generators " + std::to_string(owner[i] + 1) + " and " +
                                                     std::to_string(g + 1) + " share coordinate " + std::to_string(i + 1));
        }
        owner[i] = static_cast<int>(g);
      }
      if (!nonzero) throw Error(ErrorKind::InvalidArgument, "generator " + std::to_string(g + 1) + " is zero");
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return u_.size(); }
  const std::vector<LatticePoint>& generators() const noexcept { return u_; }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::size_t n_;
  std::vector<LatticePoint> u_;
};

namespace detail {

template <class F>
void for_each_lambda(std::size_t t, std::int64_t budget, std::vector<std::int64_t>& lambda, F& f) {
  if (lambda.size() == t) {
    f(lambda);
    return;
  }
  for (std::int64_t v = -budget; v <= budget; ++v) {
    lambda.push_back(v);
    for_each_lambda(t, budget - (v < 0 ? -v : v), lambda, f);
    lambda.pop_back();
  }
}

}  // namespace detail

/// Offsets sum(lambda_i u_i) with sum |lambda_i| <= r, sorted. Disjoint
/// nonzero generators make these pairwise distinct.
inline std::vector<LatticePoint> l1_ball(const GeneratorSet& g, std::int64_t r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "radius must be >= 0");
  std::vector<LatticePoint> out;
  std::vector<std::int64_t> lambda;
  auto emit = [&](const std::vector<std::int64_t>& l) {
    LatticePoint p(g.n());
    for (std::size_t i = 0; i < l.size(); ++i)
      if (l[i] != 0) p += l[i] * g.generators()[i];
    out.push_back(std::move(p));
  };
  detail::for_each_lambda(g.size(), r, lambda, emit);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

class LatticeColouring {
 public:
  using Fn = std::function<ColourId(const LatticePoint&)>;

  LatticeColouring(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  ColourId operator()(const LatticePoint& p) const { return fn_(p); }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  Fn fn_;
};

inline LatticeColouring coordinate_sum_lattice_colouring(std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "coordinate-sum colouring needs d >= 1");
  return {"coordsum:d=" + std::to_string(d), [d](const LatticePoint& p) { return coordinate_sum_colour(p, d); }};
}

inline LatticeColouring constant_lattice_colouring(ColourId c = 0) {
  return {"constant:c=" + std::to_string(c), [c](const LatticePoint&) { return c; }};
}

/// Seeded hash colouring: pure, so it can stand in for a random table on
/// unbounded domains.
inline LatticeColouring random_lattice_colouring(ColourId k, std::uint64_t seed) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "random colouring needs k >= 1");
  return {"random:k=" + std::to_string(k) + ",seed=" + std::to_string(seed), [k, seed](const LatticePoint& p) {
            auto mix = [](std::uint64_t z) {
              z += 0x9e3779b97f4a7c15ull;
              z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
              z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
              return z ^ (z >> 31);
            };
            std::uint64_t h = mix(seed ^ p.dim());
            for (auto c : p.coords()) h = mix(h ^ static_cast<std::uint64_t>(c));
            return h % k;
          }};
}

/// Axis-aligned box [lo_i, hi_i] in Z^n.
struct Box {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;

  static Box cube(std::int64_t lo, std::int64_t hi, std::size_t n) {
    if (lo > hi) throw Error(ErrorKind::InvalidArgument, "empty box");
    return {std::vector<std::int64_t>(n, lo), std::vector<std::int64_t>(n, hi)};
  }

  /// "lo..hi^n", e.g. "0..3^4".
  static Box parse(std::string_view spec) {
    auto dots = spec.find("..");
    auto caret = spec.find('^');
    if (dots == std::string_view::npos || caret == std::string_view::npos || caret < dots) {
      throw Error(ErrorKind::InvalidArgument, "box spec must look like lo..hi^n: " + std::string(spec));
    }
    try {
      std::int64_t lo = std::stoll(std::string(spec.substr(0, dots)));
      std::int64_t hi = std::stoll(std::string(spec.substr(dots + 2, caret - dots - 2)));
      long long n = std::stoll(std::string(spec.substr(caret + 1)));
      if (n < 1) throw Error(ErrorKind::InvalidArgument, "box dimension must be >= 1");
      return cube(lo, hi, static_cast<std::size_t>(n));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidArgument, "box spec must look like lo..hi^n: " + std::string(spec));
    }
  }

  std::size_t dim() const noexcept { return lo.size(); }

  bool contains(const LatticePoint& p) const noexcept {
    if (p.dim() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (p[i] < lo[i] || p[i] > hi[i]) return false;
    return true;
  }

  std::string to_string() const {
    bool uniform = std::all_of(lo.begin(), lo.end(), [&](auto v) { return v == lo.front(); }) &&
                   std::all_of(hi.begin(), hi.end(), [&](auto v) { return v == hi.front(); });
    if (uniform && dim() > 0) {
      return std::to_string(lo.front()) + ".." + std::to_string(hi.front()) + "^" + std::to_string(dim());
    }
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i)
      out += (i ? "x" : "") + std::string("[") + std::to_string(lo[i]) + "," + std::to_string(hi[i]) + "]";
    return out;
  }

  /// Points with the given first coordinate, lexicographic.
  template <class F>
  bool for_each_with_first(std::int64_t first, F&& f) const {
    LatticePoint p(lo);
    p[0] = first;
    while (true) {
      if (!f(static_cast<const LatticePoint&>(p))) return false;
      bool advanced = false;
      for (std::size_t i = dim(); i > 1 && !advanced;) {
        --i;
        if (p[i] < hi[i]) {
          ++p[i];
          advanced = true;
        } else {
          p[i] = lo[i];
        }
      }
      if (!advanced) return true;
    }
  }
};

/// Nonzero vectors of Z^n with l1 norm d whose first nonzero coordinate is
/// positive, lexicographic. v and -v give the same configurations, so only
/// this representative is searched.
inline std::vector<LatticePoint> canonical_norm_vectors(std::size_t n, std::int64_t d) {
  std::vector<LatticePoint> out;
  std::vector<std::int64_t> v;
  auto rec = [&](auto&& self, std::int64_t left, bool seen_nonzero) -> void {
    if (v.size() == n) {
      if (left == 0 && seen_nonzero) out.emplace_back(v);
      return;
    }
    for (std::int64_t c = -left; c <= left; ++c) {
      if (!seen_nonzero && c < 0) continue;
      v.push_back(c);
      self(self, left - (c < 0 ? -c : c), seen_nonzero || c != 0);
      v.pop_back();
    }
  };
  rec(rec, d, false);
  return out;
}

struct ApHit {
  LatticePoint x;
  LatticePoint v;
  ColourId colour = 0;

  friend bool operator==(const ApHit&, const ApHit&) = default;
};

struct BallHit {
  LatticePoint centre;
  GeneratorSet generators;
  ColourId colour = 0;
};

namespace detail {

/// Canonical-first search over centres x (lex, split by first coordinate
/// across workers) and a fixed ordered list of offset configurations.
/// Each configuration is a sorted offset list including the origin.
template <class Config>
std::optional<std::pair<LatticePoint, std::size_t>> search_configurations(
    const LatticeColouring& c, const Box& box, const std::vector<Config>& configs, std::size_t workers,
    const std::function<const std::vector<LatticePoint>&(const Config&)>& offsets_of) {
  if (box.dim() == 0) throw Error(ErrorKind::InvalidArgument, "box must have dimension >= 1");
  const std::int64_t first_lo = box.lo[0], first_hi = box.hi[0];
  const std::size_t slabs = static_cast<std::size_t>(first_hi - first_lo + 1);
  std::vector<std::optional<std::pair<LatticePoint, std::size_t>>> hit(slabs);
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  parallel_for(slabs, workers, [&](std::size_t slab) {
    if (slab > best.load(std::memory_order_relaxed)) return;
    box.for_each_with_first(first_lo + static_cast<std::int64_t>(slab), [&](const LatticePoint& x) {
      for (std::size_t k = 0; k < configs.size(); ++k) {
        const auto& offsets = offsets_of(configs[k]);
        bool inside = true;
        for (const auto& o : offsets) {
          if (!box.contains(x + o)) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        const ColourId colour = c(x + offsets.front());
        bool mono = true;
        for (std::size_t i = 1; i < offsets.size() && mono; ++i) mono = c(x + offsets[i]) == colour;
        if (mono) {
          hit[slab] = std::make_pair(x, k);
          std::size_t cur = best.load();
          while (slab < cur && !best.compare_exchange_weak(cur, slab)) {
          }
          return false;
        }
      }
      return true;
    });
  });
  for (auto& h : hit)
    if (h) return h;
  return std::nullopt;
}

}  // namespace detail

/// Canonically-first (x, v) with ||v||_1 = d and x - v, x, x + v one colour,
/// all three inside the box. Exploration harness: a None answer says
/// nothing beyond this box.
inline std::optional<ApHit> search_l1_ap(const LatticeColouring& c, const Box& box, std::int64_t d,
                                         std::size_t workers = 1) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "norm d must be >= 1");
  struct Config {
    LatticePoint v;
    std::vector<LatticePoint> offsets;
  };
  std::vector<Config> configs;
  for (auto& v : canonical_norm_vectors(box.dim(), d)) {
    std::vector<LatticePoint> offsets{-v, LatticePoint(box.dim()), v};
    configs.push_back({std::move(v), std::move(offsets)});
  }
  auto found = detail::search_configurations<Config>(c, box, configs, workers,
                                                     [](const Config& cfg) -> const auto& { return cfg.offsets; });
  if (!found) return std::nullopt;
  ApHit out{found->first, configs[found->second].v, c(found->first)};
  if (l1_norm(out.v) != d || c(out.x - out.v) != out.colour || c(out.x + out.v) != out.colour) {
    throw Error(ErrorKind::ExtractionContradiction, "returned progression failed re-verification");
  }
  return out;
}

/// Canonically-first centre and generator set (t disjointly supported
/// vectors of norm d, lexicographically increasing, sign-canonical) whose
/// generated l1 ball of radius r sits monochromatic inside the box.
inline std::optional<BallHit> search_generated_ball(const LatticeColouring& c, const Box& box, std::int64_t r,
                                                    std::size_t t, std::int64_t d, std::size_t workers = 1) {
  if (r < 1 || t < 1) throw Error(ErrorKind::InvalidArgument, "ball search needs r >= 1 and t >= 1");
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "norm d must be >= 1");
  const std::size_t n = box.dim();
  const auto candidates = canonical_norm_vectors(n, d);

  struct Config {
    std::vector<std::size_t> pick;
    std::vector<LatticePoint> offsets;
  };
  std::vector<Config> configs;
  std::vector<std::size_t> pick;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == t) {
      std::vector<LatticePoint> gens;
      for (auto i : pick) gens.push_back(candidates[i]);
      configs.push_back({pick, l1_ball(GeneratorSet(n, std::move(gens)), r)});
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const auto& u = candidates[i];
      bool clash = false;
      for (std::size_t k = 0; k < n && !clash; ++k) clash = u[k] != 0 && used[k];
      if (clash) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (u[k] != 0) used[k] = true;
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
      for (std::size_t k = 0; k < n; ++k)
        if (u[k] != 0) used[k] = false;
    }
  };
  rec(rec, 0);

  auto found = detail::search_configurations<Config>(c, box, configs, workers,
                                                     [](const Config& cfg) -> const auto& { return cfg.offsets; });
  if (!found) return std::nullopt;
  std::vector<LatticePoint> gens;
  for (auto i : configs[found->second].pick) gens.push_back(candidates[i]);
  BallHit out{found->first, GeneratorSet(n, std::move(gens)), c(found->first)};
  for (const auto& o : l1_ball(out.generators, r)) {
    if (!box.contains(out.centre + o) || c(out.centre + o) != out.colour) {
      throw Error(ErrorKind::ExtractionContradiction, "returned ball failed re-verification");
    }
  }
  return out;
}

}  // namespace blocksets

#endif  // BLOCKSETS_LATTICE_HPP
