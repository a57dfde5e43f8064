#include <doctest.h>

#include "artin/errors.hpp"
#include "artin/json_io.hpp"
#include "support/fixtures.hpp"

using namespace artin;
using namespace artin::testing;

TEST_CASE("verdict json") {
  const auto j = to_json(classify(path3(2, 3)));
  CHECK(j["problems"]["rational_subset"] == "undecidable");
  CHECK(j["problems"]["submonoid"] == "undecidable");
  CHECK(j["problems"]["subgroup_separable"] == "undecidable");
  CHECK(j["evidence"]["type"] == "Path3");
  CHECK(j["evidence"]["vertices"] == Json::array({"a", "b", "c"}));
  CHECK(j["evidence"]["labels"] == Json::array({2, 3}));
  CHECK(j["notes"].size() >= 1);

  const auto d = to_json(classify(triangle(2, 5, 2)));
  CHECK(d["problems"]["submonoid"] == "decidable");
  CHECK(d["evidence"]["description"] == "Z × D_5");
  CHECK(d["evidence"]["decomposition"]["kind"] == "DirectZ");
  CHECK(d["evidence"]["decomposition"]["vertex"] == "a");
  CHECK(d["evidence"]["decomposition"]["children"][0]["label"] == 5);
}

TEST_CASE("pattern json round trip") {
  for (const auto& g : {path4(), cycle4(), chordal_square(3), chordal_square(4, 5), path3(2, 4), triangle(3, 3, 4)}) {
    const auto p = *find_forbidden(g);
    CHECK(pattern_from_json(to_json(p)) == p);
    CHECK(pattern_from_json(Json::parse(to_json(p).dump())) == p);
  }
  CHECK_THROWS_AS(pattern_from_json(Json{{"type", "Pentagon"}, {"vertices", Json::array()}, {"labels", Json::array()}}),
                  ParseError);
  CHECK_THROWS_AS(pattern_from_json(Json{{"type", "P4"}}), ParseError);
}

TEST_CASE("witness json") {
  const auto g = path3(2, 3);
  const auto j = to_json(verify_witness(g, make_witness(g, *find_forbidden(g))));
  CHECK(j["target"] == "P4");
  CHECK(j["assignment"][2]["word"] == "bcbbcb");
  CHECK(j["checks"].size() == 3);
  CHECK(j["checks"][1]["method"] == "dihedral");
  CHECK(j["verified"] == true);
}

TEST_CASE("normal form and membership json") {
  const auto nf = to_json(garside_nf(3, parse_word("a'b")));
  CHECK(nf["delta_power"] == -1);
  CHECK(nf["simples"][0]["first"] == "a");
  CHECK(nf["simples"][0]["length"] == 2);
  CHECK(nf["text"] == "Δ^-1 · ab · b");

  const auto z = GroupContext::raag(make_graph({"a"}, {}));
  const auto hit = to_json(member_submonoid(z, {parse_word("aa"), parse_word("aaa")}, gen_power("a", 7), 4));
  CHECK(hit["outcome"] == "member");
  CHECK(hit["certificate"]["factorization"] == Json::array({0, 0, 1}));
  const auto miss = to_json(member_submonoid(z, {parse_word("aa")}, parse_word("a"), 4));
  CHECK(miss["outcome"] == "unknown");
  CHECK(miss["certificate"].is_null());
}
