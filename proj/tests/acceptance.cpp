// Acceptance checks, one line per criterion. Exit status is the number of
// failed criteria (0 when all pass).
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace blocksets;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  void note(const std::string& s) {
    if (out_.ok) out_.detail = s;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0) c.expect(secs <= limit_s, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  const auto r = c.result();
  if (!r.ok) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (r.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << timing
            << (r.detail.empty() ? "" : "; " + r.detail) << ")" << std::endl;
}

std::uint64_t pascal(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j > 0; --j) row[j] += row[j - 1];
  return row[k];
}

}  // namespace

int main() {
  const std::size_t workers = default_workers();
  std::cout << "acceptance suite, " << workers << " worker(s)" << std::endl;

  criterion(1, "every 5-block placement of template 11223 has 30 points", 0, [](Check& c) {
    const Template t = Template::parse("11223");
    std::size_t placements = 0;
    for (std::size_t n = 5; n <= 7; ++n) {
      for_each_placement({n, SizeMode::mixed(2), {}, {}}, t, [&](const Placement& p) {
        ++placements;
        const auto pts = blockset_points(p, t);
        std::set<std::string> distinct;
        for (const auto& w : pts) distinct.insert(w.to_string());
        c.expect(pts.size() == 30 && distinct.size() == 30, "placement with " + std::to_string(distinct.size()) +
                                                               " points: " + blocks_to_text(p.blocks()));
        c.expect(oracle::points(n, p.blocks(), p.reference(), t.counts()).size() == 30, "oracle disagrees");
      });
    }
    c.note(std::to_string(placements) + " placements, n=5..7, block sizes <= 2");
  });

  criterion(2, "substitute(2322333222, 121212) = 1321333212", 0, [](Check& c) {
    const auto got = substitute(Word::parse("2322333222", 3), Word::parse("121212", 2)).to_string();
    c.expect(got == "1321333212", "got " + got);
  });

  criterion(3, "|chi| = C(2k+2,k+1) for k <= 6; z-words at k=2", 0, [](Check& c) {
    for (std::size_t k = 0; k <= 6; ++k) {
      const auto chi = chi_words(k);
      c.expect(chi.size() == pascal(2 * k + 2, k + 1), "k=" + std::to_string(k) + " size " + std::to_string(chi.size()));
    }
    const std::vector<std::string> z{"211212", "122112", "121221"};
    for (std::size_t i = 1; i <= 3; ++i) c.expect(z_word(i, 2).to_string() == z[i - 1], "z_" + std::to_string(i));
  });

  criterion(4, "contribution(2,2) has no monochromatic 123, block sizes <= 1, n <= 12", 60, [&](Check& c) {
    ContributionColouring colour(2, 2);
    const Template t = Template::parse("123");
    std::uint64_t examined = 0, found = 0;
    for (std::size_t n = 3; n <= 12; ++n) {
      auto r = verify_absence(colour.as_colouring(), {n, SizeMode::mixed(1), {}, {}}, t, workers);
      examined += r.examined;
      found += r.found.size();
    }
    c.expect(found == 0, std::to_string(found) + " monochromatic placements");
    c.note(std::to_string(examined) + " placements examined, 0 found");
  });

  criterion(5, "contribution(3,3) has no monochromatic 1233, block sizes <= 2, n <= 10", 600, [&](Check& c) {
    ContributionColouring colour(3, 3);
    const Template t = Template::parse("1233");
    std::uint64_t examined = 0, found = 0, confirmed = 0;
    std::string first;
    for (std::size_t n = 4; n <= 10; ++n) {
      auto r = verify_absence(colour.as_colouring(), {n, SizeMode::mixed(2), {}, {}}, t, workers);
      examined += r.examined;
      found += r.found.size();
      for (const auto& hit : r.found) {
        std::set<std::vector<unsigned>> colours;
        for (const auto& w : oracle::points(n, hit.placement.blocks(), hit.placement.reference(), t.counts()))
          colours.insert(oracle::contribution_vector(w, 3, 3));
        confirmed += colours.size() == 1;
        if (first.empty())
          first = "first at n=" + std::to_string(n) + ": blocks " + blocks_to_text(hit.placement.blocks()) +
                  " reference " + hit.placement.reference_string();
      }
    }
    c.expect(found == 0, std::to_string(found) + " monochromatic placements, " + std::to_string(confirmed) +
                             " confirmed by direct evaluation; " + first);
    c.note(std::to_string(examined) + " placements examined, 0 found");
  });

  criterion(6, "k=3 extraction yields ABCCBA blocks {1,6},{2,5},{3,4}, all 6 points one colour", 0, [](Check& c) {
    const std::size_t k = 3, n = 10;
    // colour depends only on the 12-subsequence; z_1 and z_2 share colour 0
    const auto table = oracle::subsequence_table(n, k, {0, 0, 1, 2}, 3);
    const auto theta = table.as_colouring();
    auto ex = theorem3_pipeline(theta, k, n);
    c.expect(ex.has_value(), "no homogeneous set found");
    if (!ex) return;
    c.expect(ex->placement.blocks() == BlockFamily{{1, 6}, {2, 5}, {3, 4}},
             "blocks " + blocks_to_text(ex->placement.blocks()));
    c.expect(pattern_of(ex->placement) == "ABCCBA", "pattern " + pattern_of(ex->placement));
    std::set<std::string> words;
    for (const auto& w : oracle::points(n, ex->placement.blocks(), ex->placement.reference(), {1, 1, 1})) {
      c.expect(table.at(encode_word(w, 3)) == ex->colour, oracle::str(w) + " has a different colour");
      words.insert(oracle::str(w));
    }
    c.expect(words.size() == 6, "expected 6 points");
    c.expect(words.count("3211231212") && words.count("1233211212"), "displayed words missing");
  });

  criterion(7, "substitute is a bijection A x chi -> words with k+1 1's and k+1 2's (k=1,n=6; k=2,n=8)", 10,
            [](Check& c) {
              for (auto [k, n] : {std::pair<std::size_t, std::size_t>{1, 6}, {2, 8}}) {
                const auto chi = chi_words(k);
                std::set<std::vector<Symbol>> image;
                std::size_t pairs = 0;
                for (const auto& w : oracle::all_words(n, 3)) {
                  if (std::count(w.begin(), w.end(), 1) != 0 || std::count(w.begin(), w.end(), 2) != 2 * (long)k + 2)
                    continue;
                  const Word x = encode_word(w, 3);
                  for (const Word& z : chi.words) {
                    ++pairs;
                    const auto s = substitute(x, z).symbols();
                    image.emplace(s.begin(), s.end());
                  }
                }
                std::size_t target = 0;
                for (const auto& w : oracle::all_words(n, 3))
                  target += std::count(w.begin(), w.end(), 1) == (long)k + 1 && std::count(w.begin(), w.end(), 2) == (long)k + 1;
                bool onto = true;
                for (const auto& w : image)
                  onto = onto && std::count(w.begin(), w.end(), 1) == (long)k + 1 &&
                         std::count(w.begin(), w.end(), 2) == (long)k + 1;
                c.expect(image.size() == pairs, "not injective at k=" + std::to_string(k));
                c.expect(onto && image.size() == target, "image is not the target set at k=" + std::to_string(k));
              }
            });

  criterion(8, "coordinate-sum colour flips under any v with d unit coordinates (d <= 3, x in [0,2d)^4)", 5,
            [](Check& c) {
              std::size_t checks = 0;
              for (std::int64_t d = 1; d <= 3; ++d) {
                for (unsigned mask = 0; mask < 16; ++mask) {
                  if (std::popcount(mask) != d) continue;
                  LatticePoint v(4);
                  for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1;
                  for (const auto& digits : oracle::all_words(4, static_cast<unsigned>(2 * d))) {
                    LatticePoint x(4);
                    for (int i = 0; i < 4; ++i) x[i] = digits[i] - 1;
                    ++checks;
                    c.expect(coordinate_sum_colour(x, d) != coordinate_sum_colour(x + v, d),
                             "no flip at x=" + x.to_string() + " v=" + v.to_string());
                  }
                }
              }
              c.note(std::to_string(checks) + " (x, v) pairs");
            });

  criterion(9, "l1-ball sizes: 3 at (t=1,r=1), 13 at (t=2,r=2), lambda counts for t,r <= 3", 0, [](Check& c) {
    std::vector<LatticePoint> gens{LatticePoint(std::vector<std::int64_t>{1, -1, 0, 0, 0}),
                                   LatticePoint(std::vector<std::int64_t>{0, 0, 2, 0, 0}),
                                   LatticePoint(std::vector<std::int64_t>{0, 0, 0, 1, 3})};
    for (std::size_t t = 1; t <= 3; ++t) {
      const GeneratorSet g(5, std::vector<LatticePoint>(gens.begin(), gens.begin() + t));
      for (std::int64_t r = 0; r <= 3; ++r) {
        const auto size = l1_ball(g, r).size();
        c.expect(size == oracle::lambda_count(t, r),
                 "t=" + std::to_string(t) + " r=" + std::to_string(r) + " size " + std::to_string(size));
      }
    }
    c.expect(l1_ball(GeneratorSet(5, {gens[0]}), 1).size() == 3, "t=1 r=1");
    c.expect(l1_ball(GeneratorSet(5, {gens[0], gens[1]}), 2).size() == 13, "t=2 r=2");
  });

  criterion(10, "oracle equivalence (50 tables), 1 vs 8 workers, witness search vs brute force at n=3", 120,
            [](Check& c) {
              struct Q {
                std::size_t n;
                std::string tw;
                bool equal;
                std::size_t d;
              };
              const std::vector<Q> qs{{4, "12", true, 1},  {5, "123", true, 1}, {6, "123", false, 2},
                                      {6, "12", true, 2},  {5, "112", false, 2}, {6, "123", true, 2}};
              for (std::uint64_t seed = 0; seed < 50; ++seed) {
                const Q& q = qs[seed % qs.size()];
                const Template t = Template::parse(q.tw, 3);
                const PlacementQuery pq{q.n, q.equal ? SizeMode::equal(q.d) : SizeMode::mixed(q.d), {}, {}};
                const auto table = TableColouring::random(q.n, 3, 2 + seed % 2, 5000 + seed);
                const auto all = oracle::placements(q.n, t.size(), 3, q.equal, q.d);
                const auto mono = oracle::all_monochromatic(
                    all, t.counts(), [&](const std::vector<Symbol>& w) { return table.at(encode_word(w, 3)); });
                auto hit1 = find_monochromatic(table, pq, t, 1);
                auto hit8 = find_monochromatic(table, pq, t, 8);
                const std::string tag = "seed " + std::to_string(seed);
                c.expect(hit1.has_value() == !mono.empty(), tag + ": existence differs from oracle");
                if (hit1 && !mono.empty()) {
                  c.expect(hit1->placement == mono.front().first, tag + ": first placement differs from oracle");
                }
                c.expect(hit1 == hit8, tag + ": 1 vs 8 workers differ");
                auto r1 = verify_absence(table, pq, t, 1);
                auto r8 = verify_absence(table, pq, t, 8);
                c.expect(r1.found == r8.found && r1.examined == r8.examined, tag + ": reports differ by workers");
                c.expect(r1.found.size() == mono.size(), tag + ": monochromatic count differs from oracle");
              }
              // lattice searches are worker-independent too
              for (std::uint64_t seed = 0; seed < 5; ++seed) {
                const auto lc = random_lattice_colouring(2, seed);
                c.expect(search_l1_ap(lc, Box::cube(0, 4, 3), 2, 1) == search_l1_ap(lc, Box::cube(0, 4, 3), 2, 8),
                         "lattice search differs by workers");
              }
              const std::vector<Q> ws{{3, "12", true, 1}, {3, "123", true, 1}, {3, "12", false, 2}, {3, "112", true, 1}};
              for (const Q& q : ws) {
                const Template t = Template::parse(q.tw, 3);
                const auto all = oracle::placements(q.n, t.size(), 3, q.equal, q.d);
                for (unsigned k = 1; k <= 3; ++k) {
                  auto r = witness_search({q.n, q.equal ? SizeMode::equal(q.d) : SizeMode::mixed(q.d), {}, {}}, t, k,
                                          100'000'000);
                  c.expect((r.status == WitnessResult::Status::Found) == oracle::witness_exists(all, t.counts(), k),
                           "witness outcome differs from brute force for T=" + q.tw + " k=" + std::to_string(k));
                }
              }
            });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures;
}
