#pragma once

#include <memory>
#include <string>

#include "artin/decomposer.hpp"
#include "artin/graph.hpp"
#include "artin/word.hpp"

namespace artin {

namespace detail {
struct KeyNode;
}

/// Word problem context for an Artin group whose graph is clean.
class CleanContext {
 public:
  /// Decomposes g; throws PoisonousGraph if g has a forbidden pattern.
  explicit CleanContext(ArtinGraph graph);
  ~CleanContext();
  CleanContext(const CleanContext&);
  CleanContext& operator=(const CleanContext&);
  CleanContext(CleanContext&&) noexcept;
  CleanContext& operator=(CleanContext&&) noexcept;

  const ArtinGraph& graph() const noexcept { return graph_; }
  const DecompositionTree& tree() const noexcept { return tree_; }
  const detail::KeyNode& root() const { return *root_; }

 private:
  ArtinGraph graph_;
  DecompositionTree tree_;
  std::shared_ptr<const detail::KeyNode> root_;
};

/// Canonical key of the element represented by w, built along the tree:
///   Z(v)              "v:k"                  k = exponent sum
///   Dihedral          "D<p>:s1.s2..."        Garside normal form
///   DirectZ(v, c)     "v:k|<key of c>"       residual word keyed in c
///   FreeProduct       "(<k1>)(<k2>)..."      reduced syllables; "1" if none
/// Throws InvalidInput for a letter outside the graph.
std::string normal_key(const CleanContext& ctx, const Word& w);

/// Equality in A(graph).
bool elementary_equal(const CleanContext& ctx, const Word& w1, const Word& w2);

}  // namespace artin
