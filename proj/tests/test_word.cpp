#include <doctest.h>

#include <random>

#include "artin/errors.hpp"
#include "artin/word.hpp"
#include "support/fixtures.hpp"

using namespace artin;
using namespace artin::testing;

namespace {

Word w(const char* text) { return parse_word(text); }

// Cancels a uniformly random adjacent inverse pair until none remain.
Word random_cancellation(std::mt19937& rng, Word x) {
  while (true) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      if (x[i + 1] == x[i].inverse()) spots.push_back(i);
    if (spots.empty()) return x;
    std::uniform_int_distribution<std::size_t> pick(0, spots.size() - 1);
    const auto at = static_cast<std::ptrdiff_t>(spots[pick(rng)]);
    x.letters.erase(x.letters.begin() + at, x.letters.begin() + at + 2);
  }
}

}  // namespace

TEST_CASE("alternating words") {
  CHECK(alternating_word("a", "b", 2) == w("ab"));
  CHECK(alternating_word("a", "b", 3) == w("aba"));
  CHECK(alternating_word("b", "a", 4) == w("baba"));
  CHECK(alternating_word("a", "b", 0).empty());
  CHECK_THROWS_AS(alternating_word("a", "a", 2), InvalidInput);
  CHECK_THROWS_AS(alternating_word("a", "b", -1), InvalidInput);
}

TEST_CASE("alternating word letter counts") {
  for (int m = 0; m <= 12; ++m) {
    const auto x = alternating_word("u", "v", m);
    int u = 0, v = 0;
    for (const auto& l : x) (l.gen == "u" ? u : v)++;
    CHECK(u == (m + 1) / 2);
    CHECK(v == m / 2);
  }
}

TEST_CASE("free reduction examples") {
  CHECK(free_reduce(w("a a' b")) == w("b"));
  CHECK(free_reduce(Word{}).empty());
  CHECK(free_reduce(w("a b b' a'")).empty());
  CHECK(free_reduce(w("a' a a")) == w("a"));
}

TEST_CASE("word syntax") {
  CHECK(w("a b' a") == Word{{"a", 1}, {"b", -1}, {"a", 1}});
  CHECK(w("ab'a") == w("a b' a"));
  CHECK(w("a^-1 b") == w("a' b"));
  CHECK(w("a^3") == w("aaa"));
  CHECK(w("b^-2") == w("b'b'"));
  CHECK(w("1").empty());
  CHECK(w("").empty());
  CHECK(w("x1 x2'") == Word{{"x1", 1}, {"x2", -1}});
  CHECK(parse_word("betaa1", {"beta", "a1"}) == Word{{"beta", 1}, {"a1", 1}});
  CHECK_THROWS_AS(parse_word("a z", {"a", "b"}), InvalidInput);
  CHECK_THROWS_AS(parse_word("a * b"), ParseError);
  CHECK_THROWS_AS(parse_word("a^"), ParseError);
}

TEST_CASE("rendering") {
  CHECK(to_text(Word{}) == "1");
  CHECK(to_text(w("a b' a")) == "ab'a");
  CHECK(to_text(Word{{"x1", 1}, {"x2", -1}}) == "x1 x2'");
  CHECK(parse_word(to_text(w("ab'ba'"))) == w("ab'ba'"));
}

TEST_CASE("word algebra") {
  CHECK(inverse(w("a b'")) == w("b a'"));
  CHECK(power(w("ab"), 2) == w("abab"));
  CHECK(power(w("ab"), -1) == w("b'a'"));
  CHECK(commutator(w("a"), w("b")) == w("a b a' b'"));
  CHECK(exponent_sum(w("a b a' a a"), "a") == 2);
  CHECK(restrict_to(w("a c d b"), {"a", "b"}) == w("ab"));
}

TEST_CASE("defining relations") {
  ArtinGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  g.add_edge("a", "b", 3);
  g.add_edge("b", "c");
  const auto rel = defining_relations(g);
  REQUIRE(rel.size() == 2);
  CHECK(rel[0] == std::pair{w("aba"), w("bab")});
  CHECK(rel[1] == std::pair{w("bc"), w("cb")});
}

TEST_CASE("property: free reduction is confluent, idempotent and never lengthens") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = random_word(rng, {"a", "b", "c"}, 20);
    const auto r = free_reduce(x);
    CHECK(r.size() <= x.size());
    CHECK(free_reduce(r) == r);
    CHECK(random_cancellation(rng, x) == r);
  }
}
