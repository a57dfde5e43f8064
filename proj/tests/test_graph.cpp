#include <doctest.h>

#include <random>

#include "artin/errors.hpp"
#include "artin/graph.hpp"
#include "support/fixtures.hpp"

using namespace artin;
using namespace artin::testing;

TEST_CASE("parse a dihedral graph") {
  const auto g = parse_graph("vertex a\nvertex b\nedge a b 3");
  CHECK(g.vertices() == std::vector<std::string>{"a", "b"});
  CHECK(g.label("a", "b") == 3);
  CHECK(g.edge_count() == 1);
  CHECK(g == dihedral_graph(3));
}

TEST_CASE("parse a single vertex") {
  const auto g = parse_graph("vertex a");
  CHECK(g.size() == 1);
  CHECK(g.edges().empty());
}

TEST_CASE("unlabeled edges default to 2, comments and blank lines are skipped") {
  const auto g = parse_graph("# header\n\nvertex a   # first\nvertex b\nedge a b\n");
  CHECK(g.label("a", "b") == 2);
  CHECK(g.right_angled());
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("vertex a\nedge a a 2") == 2);
  CHECK(line_of("vertex a\nvertex a") == 2);
  CHECK(line_of("vertex a\nedge a b") == 2);
  CHECK(line_of("vertex a\nvertex b\nedge a b 1") == 3);
  CHECK(line_of("vertex a\nvertex b\nedge a b 3\nedge b a 4") == 4);
  CHECK(line_of("vertices a") == 1);
  CHECK(line_of("vertex a\nvertex b\nedge a b x") == 3);
  CHECK(line_of("vertex a b") == 1);
  CHECK(line_of("vertex\n") == 1);
}

TEST_CASE("repeating an edge with the same label is harmless") {
  const auto g = parse_graph("vertex a\nvertex b\nedge a b 3\nedge b a 3");
  CHECK(g.edge_count() == 1);
}

TEST_CASE("infinite labels are not part of the format") {
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex b\nedge a b inf"), ParseError);
}

TEST_CASE("induced subgraph examples") {
  CHECK(induced_subgraph(chordal_square(3), VertexSet{"a", "b", "c", "d"}) == chordal_square(3));

  const auto ac = induced_subgraph(path4(), VertexSet{"a", "c"});
  CHECK(ac.vertices() == std::vector<std::string>{"a", "c"});
  CHECK(ac.edges().empty());

  const auto bc = induced_subgraph(triangle(2, 3, 4), VertexSet{"b", "c"});
  CHECK(bc.size() == 2);
  CHECK(bc.label("b", "c") == 3);

  CHECK_THROWS_AS(induced_subgraph(path4(), VertexSet{"a", "z"}), InvalidInput);
}

TEST_CASE("induced subgraph keeps declaration order") {
  const auto g = induced_subgraph(path4(), VertexSet{"d", "b"});
  CHECK(g.vertices() == std::vector<std::string>{"b", "d"});
}

TEST_CASE("connected components ordered by least member") {
  const auto g = make_graph({"a", "b", "c", "d", "e"}, {{"a", "d", 2}, {"b", "e", 3}});
  const auto cc = connected_components(g);
  REQUIRE(cc.size() == 3);
  CHECK(cc[0] == std::vector<std::size_t>{0, 3});
  CHECK(cc[1] == std::vector<std::size_t>{1, 4});
  CHECK(cc[2] == std::vector<std::size_t>{2});
}

TEST_CASE("dot export labels only edges above 2") {
  const auto dot = graph_to_dot(triangle(2, 3, 4), {"a"});
  CHECK(dot.find("label=\"3\"") != std::string::npos);
  CHECK(dot.find("label=\"4\"") != std::string::npos);
  CHECK(dot.find("label=\"2\"") == std::string::npos);
  CHECK(dot.find("filled") != std::string::npos);
}

TEST_CASE("property: full induced subgraph, monotone restriction, serialization round trip") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> nv(0, 7);
    const auto g = random_graph(rng, nv(rng), {2, 3, 4, 5});
    CHECK(induced_subgraph(g, g.vertices()) == g);
    CHECK(parse_graph(serialize_graph(g)) == g);

    VertexSet t, s;
    std::bernoulli_distribution coin(0.6);
    for (const auto& v : g.vertices())
      if (coin(rng)) {
        t.push_back(v);
        if (coin(rng)) s.push_back(v);
      }
    CHECK(induced_subgraph(induced_subgraph(g, t), s) == induced_subgraph(g, s));
  }
}
