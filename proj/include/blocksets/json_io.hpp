#ifndef BLOCKSETS_JSON_IO_HPP
#define BLOCKSETS_JSON_IO_HPP

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "blocksets/blockset.hpp"
#include "blocksets/colouring.hpp"
#include "blocksets/error.hpp"
#include "blocksets/lattice.hpp"
#include "blocksets/search.hpp"

namespace blocksets {

using Json = nlohmann::ordered_json;

inline Json to_json(const Placement& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks()) blocks.push_back(b);
  Json reference = Json::object();
  for (std::size_t i = 0; i < p.n(); ++i)
    if (p.reference()[i] != 0) reference[std::to_string(i + 1)] = std::string(1, static_cast<char>('0' + p.reference()[i]));
  return Json{{"n", p.n()}, {"blocks", blocks}, {"reference", reference}, {"pattern", pattern_of(p)}};
}

inline Placement placement_from_json(const Json& j) {
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    BlockFamily blocks = j.at("blocks").get<BlockFamily>();
    std::vector<Symbol> reference(n, 0);
    for (const auto& [key, value] : j.at("reference").items()) {
      std::size_t coord = std::stoul(key);
      const auto text = value.get<std::string>();
      if (coord < 1 || coord > n || text.size() != 1 || text[0] < '1' || text[0] > '9') {
        throw Error(ErrorKind::InvalidPlacement, "bad reference entry " + key);
      }
      reference[coord - 1] = static_cast<Symbol>(text[0] - '0');
    }
    Placement p(n, std::move(blocks), std::move(reference));
    if (j.contains("pattern") && j.at("pattern").get<std::string>() != pattern_of(p)) {
      throw Error(ErrorKind::InvalidPlacement, "pattern field disagrees with blocks");
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidPlacement, std::string("malformed placement JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorKind::InvalidPlacement, std::string("malformed placement JSON: ") + e.what());
  }
}

/// With `stable`, elapsed_ms is written as 0 so reports can be diffed.
inline Json to_json(const SearchReport& r, bool stable = false) {
  Json params{{"n", r.n},
              {"template", r.template_word},
              {"sizemode", r.mode.to_string()},
              {"pattern", r.filter ? Json(*r.filter) : Json(nullptr)},
              {"colouring", r.colouring}};
  Json found = Json::array();
  for (const auto& hit : r.found) found.push_back(Json{{"placement", to_json(hit.placement)}, {"colour", hit.colour}});
  return Json{{"params", params},
              {"examined", r.examined},
              {"found", found},
              {"elapsed_ms", stable ? 0.0 : r.elapsed_ms},
              {"workers", r.workers},
              {"budget_exhausted", r.budget_exhausted}};
}

inline std::string blocks_to_text(const BlockFamily& blocks) {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += '|';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) out += (i ? " " : "") + std::to_string(blocks[b][i]);
  }
  return out;
}

/// One row per found placement plus a header.
inline std::string to_csv(const SearchReport& r) {
  std::ostringstream out;
  out << "n,blocks,reference,pattern,colour\n";
  for (const auto& hit : r.found) {
    out << hit.placement.n() << ',' << blocks_to_text(hit.placement.blocks()) << ','
        << hit.placement.reference_string() << ',' << pattern_of(hit.placement) << ',' << hit.colour << '\n';
  }
  return out.str();
}

inline std::string to_text(const SearchReport& r) {
  std::ostringstream out;
  out << "template " << r.template_word << ", n=" << r.n << ", " << r.mode.to_string();
  if (r.filter) out << ", pattern " << *r.filter;
  out << ", colouring " << r.colouring << '\n';
  out << "examined " << r.examined << " placements, " << r.found.size() << " monochromatic";
  if (r.budget_exhausted) out << " (budget exhausted)";
  out << '\n';
  for (const auto& hit : r.found) {
    out << "  blocks " << blocks_to_text(hit.placement.blocks()) << "  reference " << hit.placement.reference_string()
        << "  pattern " << pattern_of(hit.placement) << "  colour " << hit.colour << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Table colourings: a JSON object mapping word strings to colour ids.

inline Json to_json(const TableColouring& t) {
  std::vector<std::pair<Word, ColourId>> rows(t.entries().begin(), t.entries().end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json out = Json::object();
  for (const auto& [w, c] : rows) out[w.to_string()] = c;
  return out;
}

/// The alphabet is the largest symbol present (at least 2) unless given;
/// the bound is one more than the largest colour unless given.
inline TableColouring table_from_json(const Json& j, unsigned m = 0, ColourId bound = 0) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "table file must hold a JSON object");
  unsigned top = 2;
  ColourId max_colour = 0;
  for (const auto& [key, value] : j.items()) {
    for (char ch : key)
      if (ch >= '1' && ch <= '9') top = std::max<unsigned>(top, static_cast<unsigned>(ch - '0'));
    if (!value.is_number_unsigned()) throw Error(ErrorKind::InvalidArgument, "colour for " + key + " is not an id");
    max_colour = std::max(max_colour, value.get<ColourId>());
  }
  if (m == 0) m = top;
  TableColouring::Map entries;
  for (const auto& [key, value] : j.items()) entries.emplace(Word::parse(key, m), value.get<ColourId>());
  return TableColouring(std::move(entries), bound == 0 ? max_colour + 1 : bound);
}

inline TableColouring load_table(const std::string& path, unsigned m = 0) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open table file " + path);
  try {
    return table_from_json(Json::parse(in), m);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, "table file " + path + " is not valid JSON: " + e.what());
  }
}

// ---------------------------------------------------------------------------

inline Json to_json(const LatticePoint& p) { return Json(p.coords()); }

inline LatticePoint lattice_point_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "lattice point must be an integer array");
  return LatticePoint(j.get<std::vector<std::int64_t>>());
}

inline Json to_json(const GeneratorSet& g) {
  Json out = Json::array();
  for (const auto& u : g.generators()) out.push_back(to_json(u));
  return out;
}

/// Validates disjoint supports through the GeneratorSet constructor.
inline GeneratorSet generator_set_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::InvalidArgument, "generator set must be a non-empty array");
  std::vector<LatticePoint> gens;
  for (const auto& u : j) gens.push_back(lattice_point_from_json(u));
  const std::size_t n = gens.front().dim();
  return GeneratorSet(n, std::move(gens));
}

}  // namespace blocksets

#endif  // BLOCKSETS_JSON_IO_HPP
