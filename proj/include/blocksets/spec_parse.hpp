#ifndef BLOCKSETS_SPEC_PARSE_HPP
#define BLOCKSETS_SPEC_PARSE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blocksets/blockset.hpp"
#include "blocksets/colouring.hpp"
#include "blocksets/error.hpp"
#include "blocksets/json_io.hpp"
#include "blocksets/lattice.hpp"

namespace blocksets {

/// Domain information some colouring specs need (random tables).
struct SpecContext {
  std::size_t n = 0;
  unsigned m = 3;
  std::uint64_t seed = 0;
};

/// A parsed word colouring. Induced colourings produce tuples, so they are
/// kept apart from the dense-id view.
struct ParsedColouring {
  std::optional<Colouring> colouring;  // empty when ids would overflow 64 bits
  std::optional<ContributionColouring> contribution;
  std::optional<InducedColouring> induced;

  const Colouring& dense() const {
    if (!colouring) throw Error(ErrorKind::CapacityExceeded, "colour space of this colouring exceeds 64 bits");
    return *colouring;
  }
};

namespace detail {

inline std::map<std::string, std::string> parse_params(std::string_view text, std::string_view spec) {
  std::map<std::string, std::string> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(ErrorKind::InvalidArgument, "expected key=value in colouring spec '" + std::string(spec) + "'");
    }
    out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

inline std::uint64_t param_u64(const std::map<std::string, std::string>& p, const std::string& key,
                               std::string_view spec, std::optional<std::uint64_t> fallback = std::nullopt) {
  auto it = p.find(key);
  if (it == p.end()) {
    if (fallback) return *fallback;
    throw Error(ErrorKind::InvalidArgument, "colouring spec '" + std::string(spec) + "' needs " + key + "=");
  }
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(it->second, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != it->second.size()) {
    throw Error(ErrorKind::InvalidArgument, "parameter " + key + " in '" + std::string(spec) + "' is not a number");
  }
  return v;
}

inline void only_keys(const std::map<std::string, std::string>& p, std::initializer_list<std::string_view> keys,
                      std::string_view spec) {
  for (const auto& [k, v] : p) {
    bool known = false;
    for (auto key : keys) known = known || key == k;
    if (!known) throw Error(ErrorKind::InvalidArgument, "unknown parameter '" + k + "' in '" + std::string(spec) + "'");
  }
}

}  // namespace detail

/// Word colourings:
///   contribution:m=M,l=L    constant[:c=C]    random:k=K[,seed=S]
///   table:@file.json        induced:base=<spec>,k=K  (or induced:k=K,base=<spec>)
/// In the induced form the base spec runs to the end of the string, except
/// that a trailing ",k=K" belongs to the induced colouring itself.
inline ParsedColouring parse_colouring(std::string_view spec, const SpecContext& ctx) {
  auto colon = spec.find(':');
  const std::string kind(spec.substr(0, colon));
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (kind == "induced") {
    std::string_view base;
    std::optional<std::string_view> own;
    if (rest.starts_with("base=")) {
      base = rest.substr(5);
      auto last = base.rfind(',');
      if (last != std::string_view::npos && base.substr(last + 1).starts_with("k=")) {
        own = base.substr(last + 1);
        base = base.substr(0, last);
      }
    } else {
      auto at = rest.find(",base=");
      if (at == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "induced spec needs base=<spec>");
      own = rest.substr(0, at);
      base = rest.substr(at + 6);
    }
    if (!own) throw Error(ErrorKind::InvalidArgument, "induced spec needs k=");
    auto params = detail::parse_params(*own, spec);
    detail::only_keys(params, {"k"}, spec);
    const auto k = detail::param_u64(params, "k", spec);
    auto inner = parse_colouring(base, ctx);
    InducedColouring induced(inner.dense(), k);
    std::optional<Colouring> dense;
    if (induced.bound()) dense = induced.as_colouring();
    return {dense, std::nullopt, induced};
  }

  if (kind == "table") {
    if (!rest.starts_with("@")) throw Error(ErrorKind::InvalidArgument, "table spec must be table:@file.json");
    auto table = load_table(std::string(rest.substr(1)));
    return {Colouring("table:@" + std::string(rest.substr(1)), table.bound(), [table](const Word& w) { return table.at(w); }),
            std::nullopt, std::nullopt};
  }

  auto params = detail::parse_params(rest, spec);
  if (kind == "contribution") {
    detail::only_keys(params, {"m", "l"}, spec);
    ContributionColouring c(static_cast<unsigned>(detail::param_u64(params, "m", spec)),
                            static_cast<unsigned>(detail::param_u64(params, "l", spec)));
    return {c.as_colouring(), c, std::nullopt};
  }
  if (kind == "constant") {
    detail::only_keys(params, {"c"}, spec);
    return {constant_colouring(detail::param_u64(params, "c", spec, 0)), std::nullopt, std::nullopt};
  }
  if (kind == "random") {
    detail::only_keys(params, {"k", "seed"}, spec);
    auto k = detail::param_u64(params, "k", spec);
    auto seed = detail::param_u64(params, "seed", spec, ctx.seed);
    if (ctx.n == 0) throw Error(ErrorKind::InvalidArgument, "random table colouring needs --n");
    return {TableColouring::random(ctx.n, ctx.m, k, seed).as_colouring(), std::nullopt, std::nullopt};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown word colouring '" + kind + "'");
}

/// Lattice colourings: coordsum:d=D, constant[:c=C], random:k=K[,seed=S].
inline LatticeColouring parse_lattice_colouring(std::string_view spec, std::uint64_t default_seed = 0) {
  auto colon = spec.find(':');
  const std::string kind(spec.substr(0, colon));
  auto params = detail::parse_params(colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1), spec);
  if (kind == "coordsum") {
    detail::only_keys(params, {"d"}, spec);
    return coordinate_sum_lattice_colouring(static_cast<std::int64_t>(detail::param_u64(params, "d", spec)));
  }
  if (kind == "constant") {
    detail::only_keys(params, {"c"}, spec);
    return constant_lattice_colouring(detail::param_u64(params, "c", spec, 0));
  }
  if (kind == "random") {
    detail::only_keys(params, {"k", "seed"}, spec);
    return random_lattice_colouring(detail::param_u64(params, "k", spec),
                                    detail::param_u64(params, "seed", spec, default_seed));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown lattice colouring '" + kind + "'");
}

inline bool is_lattice_colouring_spec(std::string_view spec) { return spec.starts_with("coordsum"); }

/// "11223" or "counts:2,2,1".
inline Template parse_template(std::string_view spec) {
  if (spec.starts_with("counts:")) {
    std::vector<std::size_t> counts;
    std::string_view rest = spec.substr(7);
    while (true) {
      auto comma = rest.find(',');
      try {
        counts.push_back(std::stoul(std::string(rest.substr(0, comma))));
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidArgument, "bad template counts '" + std::string(spec) + "'");
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return Template::from_counts(static_cast<unsigned>(counts.size()), std::move(counts));
  }
  return Template::parse(spec);
}

/// "equal:D" or "mixed:D".
inline SizeMode parse_sizemode(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "sizemode must be equal:D or mixed:D");
  std::size_t d = 0;
  try {
    d = std::stoul(std::string(spec.substr(colon + 1)));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "sizemode must be equal:D or mixed:D");
  }
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "block size bound must be >= 1");
  auto kind = spec.substr(0, colon);
  if (kind == "equal") return SizeMode::equal(d);
  if (kind == "mixed") return SizeMode::mixed(d);
  throw Error(ErrorKind::InvalidArgument, "sizemode must be equal:D or mixed:D");
}

/// "1,6;2,5;3,4" -> {{1,6},{2,5},{3,4}}.
inline BlockFamily parse_blocks(std::string_view spec) {
  BlockFamily out;
  while (!spec.empty()) {
    auto semi = spec.find(';');
    std::string_view part = spec.substr(0, semi);
    Block b;
    while (!part.empty()) {
      auto comma = part.find(',');
      try {
        b.push_back(std::stoul(std::string(part.substr(0, comma))));
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidPlacement, "bad block list '" + std::string(spec) + "'");
      }
      if (comma == std::string_view::npos) break;
      part.remove_prefix(comma + 1);
    }
    out.push_back(std::move(b));
    if (semi == std::string_view::npos) break;
    spec.remove_prefix(semi + 1);
  }
  return out;
}

/// Digit string of length n with '_' (or '.') on block coordinates.
inline std::vector<Symbol> parse_reference(std::string_view spec) {
  std::vector<Symbol> out;
  for (char c : spec) {
    if (c == '_' || c == '.') {
      out.push_back(0);
    } else if (c >= '1' && c <= '9') {
      out.push_back(static_cast<Symbol>(c - '0'));
    } else {
      throw Error(ErrorKind::InvalidSymbol, std::string("bad reference character '") + c + "'");
    }
  }
  return out;
}

inline std::vector<std::int64_t> parse_int_list(std::string_view spec) {
  std::vector<std::int64_t> out;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    try {
      out.push_back(std::stoll(std::string(spec.substr(0, comma))));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidArgument, "bad integer list '" + std::string(spec) + "'");
    }
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace blocksets

#endif  // BLOCKSETS_SPEC_PARSE_HPP
