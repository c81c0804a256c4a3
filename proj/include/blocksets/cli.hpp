#ifndef BLOCKSETS_CLI_HPP
#define BLOCKSETS_CLI_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "blocksets/blockset.hpp"
#include "blocksets/colouring.hpp"
#include "blocksets/error.hpp"
#include "blocksets/json_io.hpp"
#include "blocksets/lattice.hpp"
#include "blocksets/search.hpp"
#include "blocksets/spec_parse.hpp"

namespace blocksets::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kBudgetExceeded = 2 };

struct RunConfig {
  std::string command;

  std::string colouring;
  std::string template_spec;
  std::string word;
  std::string point;
  std::string blocks;
  std::string reference;
  std::string sizemode;
  std::string pattern;
  std::string reference_domain;
  std::string box;
  std::string set;
  std::string pq;

  std::size_t n = 0;
  unsigned m = 0;
  unsigned k = 0;
  std::size_t d = 0;
  std::int64_t r = 1;
  std::size_t t = 1;
  bool equal = false;

  std::size_t workers = 0;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  bool stable = false;
};

/// A serialised report plus the exit code it should produce.
struct Output {
  std::string body;
  int code = kOk;
};

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string tuple_text(const std::vector<ColourId>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::optional<Pattern> pattern_option(const RunConfig& c) {
  if (c.pattern.empty()) return std::nullopt;
  return c.pattern;
}

inline PlacementQuery query_of(const RunConfig& c) {
  PlacementQuery q;
  q.n = c.n;
  q.mode = c.sizemode.empty() ? SizeMode::equal(1) : parse_sizemode(c.sizemode);
  q.filter = pattern_option(c);
  if (!c.reference_domain.empty()) q.reference_domain = parse_reference(c.reference_domain);
  return q;
}

inline Output emit_report(const SearchReport& r, const RunConfig& c, const std::optional<ContributionColouring>& vec = {},
                          const Json& extra_params = Json::object()) {
  if (c.format == "csv") return {to_csv(r)};
  if (c.format == "text") return {to_text(r)};
  Json j = to_json(r, c.stable);
  for (const auto& [key, value] : extra_params.items()) j["params"][key] = value;
  if (vec) {
    for (auto& f : j["found"]) f["colour_vector"] = vec->vector_of(f["colour"].get<ColourId>());
  }
  return {dump(j)};
}

// ---------------------------------------------------------------------------

inline Output colour_eval(const RunConfig& c) {
  if (!c.point.empty() || is_lattice_colouring_spec(c.colouring)) {
    auto colouring = parse_lattice_colouring(c.colouring, c.seed);
    LatticePoint p(parse_int_list(c.point));
    ColourId colour = colouring(p);
    if (c.format == "text") return {std::to_string(colour) + "\n"};
    if (c.format == "csv") return {"point,colour\n\"" + p.to_string() + "\"," + std::to_string(colour) + "\n"};
    return {dump(Json{{"colouring", colouring.name()}, {"point", to_json(p)}, {"colour", colour}})};
  }

  unsigned top = 3;
  for (char ch : c.word)
    if (ch >= '1' && ch <= '9') top = std::max<unsigned>(top, static_cast<unsigned>(ch - '0'));
  const unsigned m = c.m ? c.m : top;
  const Word w = Word::parse(c.word, m);
  auto parsed = parse_colouring(c.colouring, SpecContext{w.size(), m, c.seed});

  Json j{{"colouring", c.colouring}, {"word", w.to_string()}};
  std::string text;
  if (parsed.induced) {
    auto tuple = (*parsed.induced)(w);
    j["colour"] = tuple;
    text = tuple_text(tuple);
  } else if (parsed.contribution) {
    auto vec = parsed.contribution->vector(w);
    ColourId id = parsed.contribution->id_of(vec);
    j["colour"] = id;
    j["vector"] = vec;
    text = tuple_text(vec) + " id=" + std::to_string(id);
  } else {
    ColourId id = parsed.dense()(w);
    j["colour"] = id;
    text = std::to_string(id);
  }
  if (c.format == "text") return {text + "\n"};
  if (c.format == "csv") return {"word,colour\n" + w.to_string() + ",\"" + text + "\"\n"};
  return {dump(j)};
}

inline Output blockset_points_cmd(const RunConfig& c) {
  const Template t = parse_template(c.template_spec);
  BlockFamily blocks = parse_blocks(c.blocks);
  std::vector<Symbol> reference;
  if (!c.reference.empty()) reference = parse_reference(c.reference);
  const Placement p(c.n, std::move(blocks), std::move(reference));
  const auto points = blockset_points(p, t);
  if (c.format == "text" || c.format == "csv") {
    std::string out = c.format == "csv" ? "word\n" : "";
    for (const auto& w : points) out += w.to_string() + "\n";
    return {out};
  }
  Json words = Json::array();
  for (const auto& w : points) words.push_back(w.to_string());
  return {dump(Json{{"template", t.to_string()}, {"placement", to_json(p)}, {"count", points.size()}, {"points", words}})};
}

inline Output blockset_enum_cmd(const RunConfig& c) {
  const Template t = parse_template(c.template_spec);
  const auto q = query_of(c);
  const auto placements = enumerate_placements(q, t);
  if (c.format == "csv" || c.format == "text") {
    std::string out = c.format == "csv" ? "n,blocks,reference,pattern\n" : "";
    for (const auto& p : placements) {
      std::string sep = c.format == "csv" ? "," : "  ";
      out += std::to_string(p.n()) + sep + blocks_to_text(p.blocks()) + sep + p.reference_string() + sep +
             pattern_of(p) + "\n";
    }
    return {out};
  }
  Json list = Json::array();
  for (const auto& p : placements) list.push_back(to_json(p));
  Json params{{"n", c.n},
              {"template", t.to_string()},
              {"sizemode", q.mode.to_string()},
              {"pattern", q.filter ? Json(*q.filter) : Json(nullptr)}};
  return {dump(Json{{"params", params}, {"count", placements.size()}, {"placements", list}})};
}

inline Output search_mono_cmd(const RunConfig& c) {
  const Template t = parse_template(c.template_spec);
  const auto q = query_of(c);
  auto parsed = parse_colouring(c.colouring, SpecContext{c.n, t.alphabet(), c.seed});
  auto report = search_monochromatic(parsed.dense(), q, t, c.workers);
  report.colouring = c.colouring;
  return emit_report(report, c, parsed.contribution);
}

inline Output search_witness_cmd(const RunConfig& c) {
  const Template t = parse_template(c.template_spec);
  const auto q = query_of(c);
  auto start = std::chrono::steady_clock::now();
  auto result = witness_search(q, t, c.k, c.budget);
  double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool over = result.status == WitnessResult::Status::BudgetExceeded;
  const int code = over ? kBudgetExceeded : kOk;

  if (c.format == "text") {
    std::ostringstream out;
    out << "witness search " << t.to_string() << " n=" << c.n << " " << q.mode.to_string() << " k=" << c.k << ": "
        << to_string(result.status) << " after " << result.nodes << " nodes (" << result.variables << " words, "
        << result.constraints << " placements)\n";
    return {out.str(), code};
  }
  if (c.format == "csv") {
    std::string out = "word,colour\n";
    if (result.witness) {
      std::vector<std::pair<Word, ColourId>> rows(result.witness->entries().begin(), result.witness->entries().end());
      std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [w, col] : rows) out += w.to_string() + "," + std::to_string(col) + "\n";
    }
    return {out, code};
  }
  Json params{{"n", c.n}, {"template", t.to_string()}, {"sizemode", q.mode.to_string()}, {"k", c.k},
              {"budget", c.budget}};
  Json j{{"params", params},
         {"status", std::string(to_string(result.status))},
         {"nodes", result.nodes},
         {"variables", result.variables},
         {"constraints", result.constraints},
         {"witness", result.witness ? to_json(*result.witness) : Json(nullptr)},
         {"elapsed_ms", c.stable ? 0.0 : elapsed},
         {"workers", 1},
         {"budget_exhausted", over}};
  return {dump(j), code};
}

/// Template 1 2^p 3^q with contribution modulus d+1 and length p*d+1;
/// the defaults p = d, q = d^3 give length d^2+1.
inline Output verify_thm2_cmd(const RunConfig& c) {
  std::size_t p = c.d, q = c.d * c.d * c.d;
  if (!c.pq.empty()) {
    auto values = parse_int_list(c.pq);
    if (values.size() != 2 || values[0] < 1 || values[1] < 0) {
      throw Error(ErrorKind::InvalidArgument, "--pq expects p,q with p >= 1, q >= 0");
    }
    p = static_cast<std::size_t>(values[0]);
    q = static_cast<std::size_t>(values[1]);
  }
  const Template t = Template::from_counts(3, {1, p, q});
  ContributionColouring contribution(static_cast<unsigned>(c.d + 1), static_cast<unsigned>(p * c.d + 1));
  PlacementQuery query;
  query.n = c.n;
  query.mode = c.equal ? SizeMode::equal(c.d) : SizeMode::mixed(c.d);
  auto report = verify_absence(contribution.as_colouring(), query, t, c.workers);
  Json extra{{"d", c.d}, {"p", p}, {"q", q}, {"modulus", contribution.modulus()}, {"length", contribution.length()}};
  return emit_report(report, c, contribution, extra);
}

inline Output extract_thm3_cmd(const RunConfig& c) {
  auto parsed = parse_colouring(c.colouring, SpecContext{c.n, 3, c.seed});
  const Colouring& theta = parsed.dense();
  InducedColouring induced(theta, c.k);
  auto subset_colour = induced_subset_colouring(induced, c.n);
  std::optional<HomogeneousSet<std::vector<ColourId>>> s;
  auto start = std::chrono::steady_clock::now();
  if (!c.set.empty()) {
    HomogeneousSet<std::vector<ColourId>> given;
    given.n = c.n;
    given.r = 2 * c.k + 2;
    for (auto v : parse_int_list(c.set)) {
      if (v < 1) throw Error(ErrorKind::InvalidArgument, "--set members must be >= 1");
      given.members.push_back(static_cast<std::size_t>(v));
    }
    if (given.members.size() < given.r || !std::is_sorted(given.members.begin(), given.members.end()) ||
        given.members.back() > c.n) {
      throw Error(ErrorKind::InvalidArgument, "--set must list 2k+4 ascending coordinates in [n]");
    }
    given.colour = subset_colour(std::span<const std::size_t>(given.members.data(), given.r));
    s = given;
  } else {
    s = homogeneous_subset_search(c.n, 2 * c.k + 2, 2 * c.k + 4, subset_colour);
  }
  std::optional<Extraction> ex;
  if (s) ex = theorem3_extract(theta, c.k, *s);
  double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (c.format == "text") {
    if (!ex) return {"no homogeneous set of size " + std::to_string(2 * c.k + 4) + " in [" + std::to_string(c.n) + "]\n"};
    return {"z-words " + std::to_string(ex->i) + "," + std::to_string(ex->j) + " share colour " +
            std::to_string(ex->colour) + "; blocks " + blocks_to_text(ex->placement.blocks()) + " reference " +
            ex->placement.reference_string() + " pattern " + pattern_of(ex->placement) + "\n"};
  }
  if (c.format == "csv") {
    std::string out = "n,blocks,reference,pattern,colour\n";
    if (ex)
      out += std::to_string(c.n) + "," + blocks_to_text(ex->placement.blocks()) + "," +
             ex->placement.reference_string() + "," + pattern_of(ex->placement) + "," + std::to_string(ex->colour) + "\n";
    return {out};
  }
  Json found = Json::array();
  if (ex) {
    found.push_back(Json{{"placement", to_json(ex->placement)},
                         {"colour", ex->colour},
                         {"z_pair", {ex->i, ex->j}}});
  }
  Json j{{"params", Json{{"colouring", c.colouring}, {"k", c.k}, {"n", c.n}}},
         {"homogeneous_set", s ? Json(s->members) : Json(nullptr)},
         {"found", found},
         {"elapsed_ms", c.stable ? 0.0 : elapsed},
         {"workers", 1},
         {"budget_exhausted", false}};
  return {dump(j)};
}

inline Output lattice_ap_cmd(const RunConfig& c) {
  auto colouring = parse_lattice_colouring(c.colouring, c.seed);
  const Box box = Box::parse(c.box);
  auto start = std::chrono::steady_clock::now();
  auto hit = search_l1_ap(colouring, box, static_cast<std::int64_t>(c.d), c.workers);
  double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (c.format == "text") {
    if (!hit) return {"no monochromatic x-v, x, x+v with |v|_1 = " + std::to_string(c.d) + " in " + box.to_string() + "\n"};
    return {"x=" + hit->x.to_string() + " v=" + hit->v.to_string() + " colour " + std::to_string(hit->colour) + "\n"};
  }
  if (c.format == "csv") {
    std::string out = "x,v,colour\n";
    if (hit) out += "\"" + hit->x.to_string() + "\",\"" + hit->v.to_string() + "\"," + std::to_string(hit->colour) + "\n";
    return {out};
  }
  Json found = Json::array();
  if (hit) found.push_back(Json{{"x", to_json(hit->x)}, {"v", to_json(hit->v)}, {"colour", hit->colour}});
  Json params{{"colouring", colouring.name()}, {"box", box.to_string()}, {"d", c.d}};
  return {dump(Json{{"params", params},
                    {"found", found},
                    {"elapsed_ms", c.stable ? 0.0 : elapsed},
                    {"workers", c.workers ? c.workers : default_workers()},
                    {"budget_exhausted", false}})};
}

inline Output lattice_ball_cmd(const RunConfig& c) {
  auto colouring = parse_lattice_colouring(c.colouring, c.seed);
  const Box box = Box::parse(c.box);
  auto start = std::chrono::steady_clock::now();
  auto hit = search_generated_ball(colouring, box, c.r, c.t, static_cast<std::int64_t>(c.d), c.workers);
  double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  auto gens_text = [](const GeneratorSet& g) {
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i) out += (i ? " " : "") + g.generators()[i].to_string();
    return out;
  };
  if (c.format == "text") {
    if (!hit) return {"no monochromatic generated ball in " + box.to_string() + "\n"};
    return {"centre=" + hit->centre.to_string() + " generators " + gens_text(hit->generators) + " colour " +
            std::to_string(hit->colour) + "\n"};
  }
  if (c.format == "csv") {
    std::string out = "centre,generators,colour\n";
    if (hit)
      out += "\"" + hit->centre.to_string() + "\",\"" + gens_text(hit->generators) + "\"," +
             std::to_string(hit->colour) + "\n";
    return {out};
  }
  Json found = Json::array();
  if (hit) {
    found.push_back(Json{{"centre", to_json(hit->centre)}, {"generators", to_json(hit->generators)},
                         {"colour", hit->colour}});
  }
  Json params{{"colouring", colouring.name()}, {"box", box.to_string()}, {"r", c.r}, {"t", c.t}, {"d", c.d}};
  return {dump(Json{{"params", params},
                    {"found", found},
                    {"elapsed_ms", c.stable ? 0.0 : elapsed},
                    {"workers", c.workers ? c.workers : default_workers()},
                    {"budget_exhausted", false}})};
}

/// Collects every problem with the configuration so the user sees them at once.
inline std::vector<std::string> validate(const RunConfig& c) {
  std::vector<std::string> errs;
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) errs.push_back(msg);
  };
  need(c.format == "json" || c.format == "csv" || c.format == "text", "--format must be json, csv or text");
  const auto& cmd = c.command;
  if (cmd == "colour eval") {
    need(!c.colouring.empty(), "--colouring is required");
    need(c.word.empty() != c.point.empty(), "exactly one of --word or --point is required");
  } else if (cmd == "blockset points") {
    need(!c.template_spec.empty(), "--template is required");
    need(!c.blocks.empty(), "--blocks is required");
    need(c.n > 0, "--n is required");
  } else if (cmd == "blockset enum" || cmd == "search mono" || cmd == "search witness") {
    need(!c.template_spec.empty(), "--template is required");
    need(c.n > 0, "--n is required");
    if (cmd == "search mono") need(!c.colouring.empty(), "--colouring is required");
    if (cmd == "search witness") need(c.k >= 1 && c.k <= 64, "--k must lie in [1, 64]");
  } else if (cmd == "verify thm2") {
    need(c.d >= 1, "--d must be >= 1");
    need(c.n > 0, "--n is required");
  } else if (cmd == "extract thm3") {
    need(!c.colouring.empty(), "--colouring is required");
    need(c.k >= 1, "--k must be >= 1");
    need(c.n >= 2 * c.k + 4, "--n must be at least 2k+4");
  } else if (cmd == "lattice ap" || cmd == "lattice ball") {
    need(!c.colouring.empty(), "--colouring is required");
    need(!c.box.empty(), "--box is required");
    need(c.d >= 1, "--d must be >= 1");
    if (cmd == "lattice ball") need(c.r >= 1 && c.t >= 1, "--r and --t must be >= 1");
  }
  return errs;
}

inline Output dispatch(const RunConfig& c) {
  const auto& cmd = c.command;
  if (cmd == "colour eval") return colour_eval(c);
  if (cmd == "blockset points") return blockset_points_cmd(c);
  if (cmd == "blockset enum") return blockset_enum_cmd(c);
  if (cmd == "search mono") return search_mono_cmd(c);
  if (cmd == "search witness") return search_witness_cmd(c);
  if (cmd == "verify thm2") return verify_thm2_cmd(c);
  if (cmd == "extract thm3") return extract_thm3_cmd(c);
  if (cmd == "lattice ap") return lattice_ap_cmd(c);
  if (cmd == "lattice ball") return lattice_ball_cmd(c);
  throw Error(ErrorKind::InvalidArgument, "unknown command " + cmd);
}

inline void add_output_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "json | csv | text")->capture_default_str();
  sub->add_option("--out", c.out, "write the report to this path instead of stdout");
  sub->add_flag("--stable", c.stable, "zero timing fields for byte-stable output");
}

inline void add_search_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--template", c.template_spec, "template word (e.g. 123) or counts:n1,n2,...");
  sub->add_option("--n", c.n, "ambient word length");
  sub->add_option("--sizemode", c.sizemode, "equal:D or mixed:D (default equal:1)");
  sub->add_option("--pattern", c.pattern, "keep only placements with this pattern, e.g. ABCCBA");
  sub->add_option("--reference-domain", c.reference_domain, "symbols allowed in the reference, e.g. 12");
  sub->add_option("--workers", c.workers, "worker threads (0 = available parallelism)");
}

}  // namespace detail

/// Parses argv, runs one subcommand and writes its report to `out` (or the
/// --out path). Usage errors go to `err` and never produce a partial report.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Block-set colouring engine: placements, colourings, searches and lattice experiments"};
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, std::string>> leaves;
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help) {
    auto* sub = group->add_subcommand(name, help);
    leaves.emplace_back(sub, group->get_name() + " " + name);
    detail::add_output_options(sub, c);
    sub->add_option("--seed", c.seed, "seed for random colourings");
    return sub;
  };

  auto* colour = app.add_subcommand("colour", "evaluate colourings")->require_subcommand(1);
  auto* eval = leaf(colour, "eval", "colour of one word or lattice point");
  eval->add_option("--colouring", c.colouring, "colouring spec");
  eval->add_option("--word", c.word, "word as a digit string");
  eval->add_option("--point", c.point, "lattice point as comma-separated integers");
  eval->add_option("--m", c.m, "alphabet size of the word (default: max(3, largest symbol))");

  auto* blockset = app.add_subcommand("blockset", "block sets and placements")->require_subcommand(1);
  auto* points = leaf(blockset, "points", "points of one block set");
  points->add_option("--template", c.template_spec, "template word or counts:...");
  points->add_option("--blocks", c.blocks, "blocks such as 1,6;2,5;3,4");
  points->add_option("--n", c.n, "ambient word length");
  points->add_option("--reference", c.reference, "reference word with _ on block coordinates");
  auto* enumerate = leaf(blockset, "enum", "enumerate placements");
  detail::add_search_options(enumerate, c);

  auto* search = app.add_subcommand("search", "monochromatic block-set searches")->require_subcommand(1);
  auto* mono = leaf(search, "mono", "canonically-first monochromatic placement");
  detail::add_search_options(mono, c);
  mono->add_option("--colouring", c.colouring, "colouring spec");
  auto* witness = leaf(search, "witness", "backtracking search for a colouring with no monochromatic placement");
  detail::add_search_options(witness, c);
  witness->add_option("--k", c.k, "number of colours");
  witness->add_option("--budget", c.budget, "node limit")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "exhaustive absence checks")->require_subcommand(1);
  auto* thm2 = leaf(verify, "thm2", "contribution colouring versus template 1 2^p 3^q, blocks of size <= d");
  thm2->add_option("--d", c.d, "block size bound");
  thm2->add_option("--n", c.n, "ambient word length");
  thm2->add_option("--pq", c.pq, "override p,q (length becomes p*d+1)");
  thm2->add_flag("--equal", c.equal, "require all blocks to have size exactly d");
  thm2->add_option("--workers", c.workers, "worker threads (0 = available parallelism)");

  auto* extract = app.add_subcommand("extract", "constructive extraction")->require_subcommand(1);
  auto* thm3 = leaf(extract, "thm3", "ABCCBA block set for template 123 from a homogeneous set");
  thm3->add_option("--colouring", c.colouring, "base colouring of [3]^n");
  thm3->add_option("--k", c.k, "number of colours / chi parameter");
  thm3->add_option("--n", c.n, "ambient word length");
  thm3->add_option("--set", c.set, "use this homogeneous set instead of searching");

  auto* lattice = app.add_subcommand("lattice", "l1 lattice experiments")->require_subcommand(1);
  auto* ap = leaf(lattice, "ap", "monochromatic x-v, x, x+v with |v|_1 = d");
  ap->add_option("--colouring", c.colouring, "lattice colouring spec");
  ap->add_option("--box", c.box, "box lo..hi^n");
  ap->add_option("--d", c.d, "l1 norm of v");
  ap->add_option("--workers", c.workers, "worker threads (0 = available parallelism)");
  auto* ball = leaf(lattice, "ball", "monochromatic generated l1 ball");
  ball->add_option("--colouring", c.colouring, "lattice colouring spec");
  ball->add_option("--box", c.box, "box lo..hi^n");
  ball->add_option("--r", c.r, "radius");
  ball->add_option("--t", c.t, "number of generators");
  ball->add_option("--d", c.d, "l1 norm of each generator");
  ball->add_option("--workers", c.workers, "worker threads (0 = available parallelism)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  for (const auto& [sub, name] : leaves)
    if (sub->parsed()) c.command = name;

  if (auto errs = detail::validate(c); !errs.empty()) {
    err << "usage error: " << detail::join(errs, "; ") << "\n";
    return kUsage;
  }

  Output result;
  try {
    result = detail::dispatch(c);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (c.out.empty()) {
    out << result.body;
  } else {
    std::ofstream file(c.out, std::ios::binary);
    if (!file || !(file << result.body) || !file.flush()) {
      err << "error: cannot write " << c.out << "\n";
      return kUsage;
    }
  }
  return result.code;
}

}  // namespace blocksets::cli

#endif  // BLOCKSETS_CLI_HPP
