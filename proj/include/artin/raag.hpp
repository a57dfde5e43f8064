#pragma once

#include "artin/graph.hpp"
#include "artin/word.hpp"

namespace artin {

/// A right-angled Artin group: every edge is a commutation.
class RaagContext {
 public:
  /// Throws UnsupportedContext if some edge label differs from 2.
  explicit RaagContext(ArtinGraph graph);

  const ArtinGraph& graph() const noexcept { return graph_; }

  /// Declaration index of a generator; throws InvalidInput if unknown.
  std::size_t index(const std::string& gen) const;
  bool commute(std::size_t i, std::size_t j) const { return i == j || graph_.adjacent(i, j); }

 private:
  ArtinGraph graph_;
};

/// Canonical representative of w: cancel every pair g^e ... g^-e separated
/// only by letters commuting with g, then take the lexicographically least
/// shuffle of the result (letters ordered by vertex, then + before -).
/// Two words are equal in the group iff their outputs are equal.
Word raag_reduce(const RaagContext& ctx, const Word& w);

/// Retraction onto the parabolic subgroup on `s`: letters outside s are
/// deleted and the rest is reduced in the induced context.
Word raag_retraction(const RaagContext& ctx, const VertexSet& s, const Word& w);

}  // namespace artin
