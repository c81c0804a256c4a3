#include "catch_amalgamated.hpp"

#include <algorithm>
#include <unordered_set>

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

}  // namespace

TEST_CASE("encode_word packs base m with coordinate 1 least significant", "[words]") {
  CHECK(Word::parse("111", 3).index() == 0);
  CHECK(Word::parse("123", 3).index() == 21);
  const std::vector<Symbol> s{3, 1, 2, 2};
  CHECK(encode_word(s, 3).index() == oracle::packed(s, 3));
  CHECK(encode_word(s, 3).to_string() == "3122");
}

TEST_CASE("encode_word rejects bad symbols and over-long words", "[words]") {
  CHECK(throws_kind(ErrorKind::InvalidSymbol, [] { Word::parse("124", 3); }));
  CHECK(throws_kind(ErrorKind::InvalidSymbol, [] { Word::parse("102", 3); }));
  const std::vector<Symbol> zero{0, 1};
  CHECK(throws_kind(ErrorKind::InvalidSymbol, [&] { encode_word(zero, 3); }));
  CHECK(throws_kind(ErrorKind::CapacityExceeded, [] { Word::parse(std::string(41, '1'), 3); }));
  CHECK_NOTHROW(Word::parse(std::string(40, '3'), 3));
  CHECK(throws_kind(ErrorKind::CapacityExceeded, [] { Word::parse(std::string(65, '1'), 2); }));
  CHECK_NOTHROW(Word::parse(std::string(64, '2'), 2));
}

TEST_CASE("decode(encode(x)) = x for all words of length <= 6 over [3]", "[words]") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& w : oracle::all_words(n, 3)) {
      const Word x = encode_word(w, 3);
      REQUIRE(decode_word(x) == w);
      REQUIRE(Word::decode(x.index(), n, 3) == x);
    }
  }
}

TEST_CASE("encode/decode is a bijection on [3]^8", "[words]") {
  const std::size_t n = 8;
  const std::uint64_t total = 6561;
  std::vector<bool> hit(total, false);
  for (const auto& w : oracle::all_words(n, 3)) {
    const Word x = encode_word(w, 3);
    REQUIRE(x.index() < total);
    REQUIRE_FALSE(hit[x.index()]);
    hit[x.index()] = true;
  }
  CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  for (std::uint64_t i = 0; i < total; ++i) REQUIRE(Word::decode(i, n, 3).index() == i);
}

TEST_CASE("word equality follows symbols; with() returns a new word", "[words]") {
  const Word a = Word::parse("1212", 2);
  const Word b = Word::parse("1212", 3);
  CHECK(a == b);
  CHECK(WordHash{}(a) == WordHash{}(b));
  const Word c = a.with(0, 2);
  CHECK(c.to_string() == "2212");
  CHECK(a.to_string() == "1212");
  CHECK(a != c);
}

TEST_CASE("profile counts each symbol", "[words]") {
  CHECK(profile(Word::parse("2322333222", 3)).counts == std::vector<std::size_t>{0, 6, 4});
  CHECK(profile(Word::parse("111", 3)).counts == std::vector<std::size_t>{3, 0, 0});
  CHECK(profile(Word::parse("", 3)).counts == std::vector<std::size_t>{0, 0, 0});
  CHECK(profile(Word::parse("2322333222", 3)).total() == 10);
}

TEST_CASE("enumerate_with_profile examples", "[words]") {
  std::vector<std::string> got;
  for (const Word& w : enumerate_with_profile(5, 3, Profile{{2, 2, 1}})) got.push_back(w.to_string());
  CHECK(got.size() == 30);
  CHECK(got.front() == "11223");
  CHECK(got.back() == "32211");

  got.clear();
  for (const Word& w : enumerate_with_profile(3, 3, Profile{{1, 1, 1}})) got.push_back(w.to_string());
  CHECK(got == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});

  CHECK(throws_kind(ErrorKind::ProfileMismatch, [] { enumerate_with_profile(2, 2, Profile{{2, 1}}); }));
  CHECK(throws_kind(ErrorKind::ProfileMismatch, [] { enumerate_with_profile(3, 3, Profile{{2, 1}}); }));
}

TEST_CASE("enumeration matches a naive filter and the multinomial, n <= 10, m <= 3", "[words]") {
  for (unsigned m = 2; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 10; ++n) {
      std::map<std::vector<std::size_t>, std::vector<std::string>> naive;
      for (const auto& w : oracle::all_words(n, m)) {
        std::vector<std::size_t> counts(m, 0);
        for (Symbol s : w) ++counts[s - 1];
        naive[counts].push_back(oracle::str(w));
      }
      for (auto& [counts, words] : naive) {
        std::sort(words.begin(), words.end());
        std::vector<std::string> got;
        for (const Word& w : enumerate_with_profile(n, m, Profile{counts})) got.push_back(w.to_string());
        REQUIRE(got == words);
        REQUIRE(got.size() == multinomial(counts));
        REQUIRE(std::adjacent_find(got.begin(), got.end(), std::greater_equal<>()) == got.end());
      }
    }
  }
}

TEST_CASE("binomial and multinomial", "[words]") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(14, 7) == 3432);
  CHECK(binomial(3, 5) == 0);
  const std::vector<std::size_t> c{2, 2, 1};
  CHECK(multinomial(c) == 30);
  const std::vector<std::size_t> big{40, 40, 40};
  CHECK(throws_kind(ErrorKind::CapacityExceeded, [&] { multinomial(big); }));
}

TEST_CASE("for_each_word visits [m]^n in packed-index order", "[words]") {
  std::uint64_t expect = 0;
  for_each_word(5, 3, [&](const Word& w) { REQUIRE(w.index() == expect++); });
  CHECK(expect == 243);
}
