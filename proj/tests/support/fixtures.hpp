#pragma once

// Named graphs and seeded random generators shared by the test suites.

#include <random>
#include <string>
#include <vector>

#include "artin/graph.hpp"
#include "artin/word.hpp"

namespace artin::testing {

inline ArtinGraph make_graph(const std::vector<std::string>& vertices,
                             const std::vector<std::tuple<std::string, std::string, int>>& edges) {
  ArtinGraph g;
  for (const auto& v : vertices) g.add_vertex(v);
  for (const auto& [u, v, m] : edges) g.add_edge(u, v, m);
  return g;
}

inline ArtinGraph path4() {
  return make_graph({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}});
}

inline ArtinGraph cycle4() {
  return make_graph({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"d", "a", 2}});
}

/// Square a-b-c-d-a with label-2 sides and chord b-d labeled p.
inline ArtinGraph chordal_square(int p) {
  return make_graph({"a", "b", "c", "d"},
                    {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"d", "a", 2}, {"d", "b", p}});
}

/// As chordal_square(p) with the second chord a-c labeled q.
inline ArtinGraph chordal_square(int p, int q) {
  auto g = chordal_square(p);
  g.add_edge("c", "a", q);
  return g;
}

/// Path a-b-c with labels m on ab and n on bc.
inline ArtinGraph path3(int m, int n) {
  return make_graph({"a", "b", "c"}, {{"a", "b", m}, {"b", "c", n}});
}

/// Triangle with ab = l, bc = m, ca = n. Delta_{2,2,5} with a central is triangle(2, 5, 2).
inline ArtinGraph triangle(int l, int m, int n) {
  return make_graph({"a", "b", "c"}, {{"a", "b", l}, {"b", "c", m}, {"c", "a", n}});
}

inline ArtinGraph dihedral_graph(int m) { return make_graph({"a", "b"}, {{"a", "b", m}}); }

/// Star with center beta and leaves a1..an, all labels 2.
inline ArtinGraph star(int n) {
  ArtinGraph g;
  g.add_vertex("beta");
  for (int i = 1; i <= n; ++i) {
    g.add_vertex("a" + std::to_string(i));
    g.add_edge("beta", "a" + std::to_string(i));
  }
  return g;
}

/// Random graph on `n` vertices v0..v{n-1}: edge probability drawn uniformly
/// from [0, 1] once per graph, labels uniform in `labels`.
inline ArtinGraph random_graph(std::mt19937& rng, int n, const std::vector<int>& labels) {
  ArtinGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double density = unit(rng);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit(rng) < density) g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j), labels[pick(rng)]);
  return g;
}

inline Word random_word(std::mt19937& rng, const std::vector<std::string>& gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::bernoulli_distribution sign(0.5);
  Word w;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) w.letters.push_back({gens[pick(rng)], sign(rng) ? 1 : -1});
  return w;
}

/// Splits w at a random position and inserts `piece` there.
inline Word insert_at_random(std::mt19937& rng, const Word& w, const Word& piece) {
  std::uniform_int_distribution<std::size_t> pos(0, w.size());
  const auto at = static_cast<std::ptrdiff_t>(pos(rng));
  Word out;
  out.letters.assign(w.letters.begin(), w.letters.begin() + at);
  out *= piece;
  out.letters.insert(out.letters.end(), w.letters.begin() + at, w.letters.end());
  return out;
}

}  // namespace artin::testing
