#include "catch_amalgamated.hpp"

#include <bit>
#include <set>

#include "oracles.hpp"

using namespace blocksets;

namespace {

bool throws_kind(ErrorKind kind, const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

// Direct transcription of the definition, independent of the library.
std::vector<ColourId> contribution_oracle(const std::vector<Symbol>& x, unsigned mc, unsigned lc) {
  std::vector<ColourId> v(lc, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 1) continue;
    std::size_t before = 0;
    for (std::size_t j = 0; j < i; ++j) before += (x[j] == 1 || x[j] == 2);
    v[before % lc] = (v[before % lc] + 1) % mc;
  }
  return v;
}

std::string splice(const std::string& x, const std::string& w) {
  std::string out = x;
  std::size_t next = 0;
  for (auto& c : out)
    if (c == '2') c = w[next++];
  return out;
}

}  // namespace

TEST_CASE("contribution colour examples", "[colourings]") {
  CHECK(contribution_colour(Word::parse("33333", 3), 3, 5) == std::vector<ColourId>(5, 0));
  CHECK(contribution_colour(Word::parse("121", 3), 2, 2) == std::vector<ColourId>{0, 0});
  CHECK(contribution_colour(Word::parse("211", 3), 2, 2) == std::vector<ColourId>{1, 1});
  ContributionColouring c(2, 2);
  CHECK(c.colour_count() == 4);
  CHECK(c.id(Word::parse("211", 3)) == 3);
  CHECK(c.vector_of(3) == std::vector<ColourId>{1, 1});
  CHECK(ContributionColouring(3, 5).colour_count() == 243);
}

TEST_CASE("contribution colour matches the definition on [3]^n, n <= 7", "[colourings]") {
  for (unsigned mc : {2u, 3u}) {
    for (unsigned lc : {1u, 2u, 3u, 5u}) {
      ContributionColouring c(mc, lc);
      for (std::size_t n = 0; n <= 7; ++n) {
        for (const auto& w : oracle::all_words(n, 3)) {
          const Word x = encode_word(w, 3);
          const auto expect = contribution_oracle(w, mc, lc);
          REQUIRE(c.vector(x) == expect);
          REQUIRE(c.id(x) == c.id_of(expect));
          REQUIRE(c.id(x) < c.colour_count());
        }
      }
    }
  }
}

TEST_CASE("contribution colour depends only on the 12-subsequence (n <= 8)", "[colourings]") {
  ContributionColouring c(3, 3);
  std::map<std::string, ColourId> seen;
  for (const auto& w : oracle::all_words(8, 3)) {
    const auto key = oracle::twelve_subsequence(w);
    const ColourId id = c.id(encode_word(w, 3));
    auto [it, fresh] = seen.emplace(key, id);
    REQUIRE(it->second == id);
  }
}

TEST_CASE("mixed-radix encoding", "[colourings]") {
  const std::vector<ColourId> radices{3, 4, 5};
  for (ColourId id = 0; id < 60; ++id) REQUIRE(encode_mixed_radix(decode_mixed_radix(id, radices), radices) == id);
  const std::vector<ColourId> digits{2, 0, 1};
  CHECK(encode_mixed_radix(digits, radices) == 2 + 0 * 3 + 1 * 12);
  const std::vector<ColourId> huge(70, 2);
  CHECK_FALSE(radix_product(huge).has_value());
}

TEST_CASE("substitute examples", "[colourings]") {
  CHECK(substitute(Word::parse("2322333222", 3), Word::parse("121212", 2)).to_string() == "1321333212");
  CHECK(substitute(Word::parse("222222", 3), Word::parse("211212", 2)).to_string() == "211212");
  CHECK(throws_kind(ErrorKind::SubstitutionMismatch,
                    [] { substitute(Word::parse("2322333222", 3), Word::parse("12121", 2)); }));
  CHECK(throws_kind(ErrorKind::SubstitutionMismatch,
                    [] { substitute(Word::parse("1322333222", 3), Word::parse("12121", 2)); }));
}

TEST_CASE("substitute agrees with a string splice", "[colourings]") {
  const auto chi = chi_words(1);
  for (const auto& w : oracle::all_words(7, 3)) {
    const Word x = encode_word(w, 3);
    if (!in_family_a(x, 1)) continue;
    for (const Word& z : chi.words) REQUIRE(substitute(x, z).to_string() == splice(x.to_string(), z.to_string()));
  }
}

TEST_CASE("substitute is a bijection from A x chi onto words with k+1 1's and k+1 2's", "[colourings]") {
  for (auto [k, n] : {std::pair<std::size_t, std::size_t>{1, 6}, {2, 8}}) {
    const auto chi = chi_words(k);
    std::set<std::string> image;
    std::size_t pairs = 0;
    for (const auto& w : oracle::all_words(n, 3)) {
      const Word x = encode_word(w, 3);
      if (!in_family_a(x, k)) continue;
      for (const Word& z : chi.words) {
        ++pairs;
        image.insert(substitute(x, z).to_string());
      }
    }
    std::set<std::string> target;
    for (const auto& w : oracle::all_words(n, 3)) {
      const auto p = profile(encode_word(w, 3)).counts;
      if (p[0] == k + 1 && p[1] == k + 1) target.insert(oracle::str(w));
    }
    INFO("k=" << k);
    CHECK(image.size() == pairs);
    CHECK(image == target);
  }
}

TEST_CASE("chi_words examples", "[colourings]") {
  CHECK(chi_words(2).size() == 20);
  const auto chi0 = chi_words(0);
  REQUIRE(chi0.size() == 2);
  CHECK(chi0.words[0].to_string() == "12");
  CHECK(chi0.words[1].to_string() == "21");
  for (std::size_t k = 0; k <= 6; ++k) {
    const auto chi = chi_words(k);
    REQUIRE(chi.size() == binomial(2 * k + 2, k + 1));
    for (std::size_t i = 1; i < chi.size(); ++i) REQUIRE(chi.words[i - 1].to_string() < chi.words[i].to_string());
    for (const auto& w : chi.words) REQUIRE(profile(w).counts == std::vector<std::size_t>{k + 1, k + 1});
    for (std::size_t i = 1; i <= k + 1; ++i) {
      const Word z = z_word(i, k);
      REQUIRE(std::find(chi.words.begin(), chi.words.end(), z) != chi.words.end());
    }
  }
}

TEST_CASE("z_word examples", "[colourings]") {
  CHECK(z_word(1, 2).to_string() == "211212");
  CHECK(z_word(2, 2).to_string() == "122112");
  CHECK(z_word(3, 2).to_string() == "121221");
  CHECK(throws_kind(ErrorKind::IndexOutOfRange, [] { z_word(0, 2); }));
  CHECK(throws_kind(ErrorKind::IndexOutOfRange, [] { z_word(4, 2); }));
}

TEST_CASE("induced colour", "[colourings]") {
  InducedColouring constant(constant_colouring(4), 1);
  std::size_t members = 0;
  for (const auto& w : oracle::all_words(8, 3)) {
    const Word x = encode_word(w, 3);
    if (!in_family_a(x, 1)) continue;
    ++members;
    REQUIRE(induced_colour(constant, x) == std::vector<ColourId>(6, 4));
  }
  CHECK(members == binomial(8, 4));

  InducedColouring k2(constant_colouring(), 2);
  CHECK(k2(Word::parse("222222", 3)).size() == 20);
  CHECK(throws_kind(ErrorKind::NotInFamilyA, [&] { k2(Word::parse("122222", 3)); }));
  CHECK(throws_kind(ErrorKind::NotInFamilyA, [&] { k2(Word::parse("22222", 3)); }));

  ContributionColouring base(2, 2);
  InducedColouring theta(base.as_colouring(), 1);
  const auto chi = chi_words(1);
  for (const auto& w : oracle::all_words(8, 3)) {
    const Word x = encode_word(w, 3);
    if (!in_family_a(x, 1)) continue;
    const auto tuple = theta(x);
    for (std::size_t i = 0; i < chi.size(); ++i) REQUIRE(tuple[i] == base.id(substitute(x, chi.words[i])));
  }
}

TEST_CASE("induced colour takes at most k^s values (k=1, n=7)", "[colourings]") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto base = TableColouring::random(7, 3, 1, seed).as_colouring();
    InducedColouring theta(base, 1);
    std::set<std::vector<ColourId>> values;
    for (const auto& w : oracle::all_words(7, 3)) {
      const Word x = encode_word(w, 3);
      if (in_family_a(x, 1)) values.insert(theta(x));
    }
    CHECK(values.size() <= 1);  // k^s with k = 1
  }
  // two colours: still bounded by 2^6
  auto base = TableColouring::random(7, 3, 2, 11).as_colouring();
  InducedColouring theta(base, 1);
  std::set<std::vector<ColourId>> values;
  for (const auto& w : oracle::all_words(7, 3)) {
    const Word x = encode_word(w, 3);
    if (in_family_a(x, 1)) values.insert(theta(x));
  }
  CHECK(values.size() <= 64);
  CHECK(theta.bound() == std::optional<ColourId>(64));
}

TEST_CASE("coordinate-sum colour", "[colourings]") {
  for (std::int64_t d = 1; d <= 3; ++d) CHECK(coordinate_sum_colour(LatticePoint(4), d) == 0);
  CHECK(coordinate_sum_colour(LatticePoint(std::vector<std::int64_t>{1, 0, 0}), 1) == 1);
  CHECK(coordinate_sum_colour(LatticePoint(std::vector<std::int64_t>{-1}), 2) == 1);   // -1 = 3 mod 4
  CHECK(coordinate_sum_colour(LatticePoint(std::vector<std::int64_t>{-4, -1}), 3) == 0);  // -5 = 1 mod 6

  // d=2 on {0..3}^4: adding two unit coordinates always flips
  for (std::int64_t d = 1; d <= 3; ++d) {
    for (int mask = 0; mask < 16; ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) != d) continue;
      LatticePoint v(4);
      for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1;
      for (std::int64_t a = 0; a < 2 * d; ++a)
        for (std::int64_t b = 0; b < 2 * d; ++b)
          for (std::int64_t c = 0; c < 2 * d; ++c)
            for (std::int64_t e = 0; e < 2 * d; ++e) {
              LatticePoint x(std::vector<std::int64_t>{a, b, c, e});
              REQUIRE(coordinate_sum_colour(x, d) != coordinate_sum_colour(x + v, d));
            }
    }
  }
}

TEST_CASE("table and product colourings", "[colourings]") {
  ContributionColouring c(2, 2);
  auto table = TableColouring::from_colouring(c.as_colouring(), 5, 3);
  CHECK(table.entries().size() == 243);
  for_each_word(5, 3, [&](const Word& w) { REQUIRE(table.at(w) == c.id(w)); });
  CHECK(throws_kind(ErrorKind::DomainError, [&] { table.at(Word::parse("1111", 3)); }));

  auto single = product_colouring({c.as_colouring()});
  auto pair = product_colouring({constant_colouring(1), constant_colouring(0)});
  std::set<ColourId> pair_values;
  for_each_word(4, 3, [&](const Word& w) {
    REQUIRE(single(w) == c.id(w));
    pair_values.insert(pair(w));
  });
  CHECK(pair_values.size() == 1);

  auto mixed = product_colouring({c.as_colouring(), constant_colouring(1)});
  for_each_word(4, 3, [&](const Word& w) { REQUIRE(mixed(w) == c.id(w) + 4 * 1); });

  auto r1 = TableColouring::random(4, 3, 5, 99);
  auto r2 = TableColouring::random(4, 3, 5, 99);
  for_each_word(4, 3, [&](const Word& w) {
    REQUIRE(r1.at(w) == r2.at(w));
    REQUIRE(r1.at(w) < 5);
  });
}
