#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/graph.hpp"

namespace artin {

/// Elementary decomposition of a clean Artin group.
///
///   Trivial                      the empty graph
///   Z(v)                         a single vertex
///   Dihedral(m; u, v)            two vertices joined by a label m > 2
///   FreeProduct(children...)     one child per connected component
///   DirectZ(v, child)            v is central (label 2 to every other vertex)
struct DecompositionTree {
  enum class Kind { Trivial, Z, Dihedral, FreeProduct, DirectZ };

  Kind kind = Kind::Trivial;
  std::vector<std::string> vertices;  // Z: {v}; Dihedral: {u, v}; DirectZ: {central}
  int label = 0;                      // Dihedral only
  std::vector<DecompositionTree> children;

  bool operator==(const DecompositionTree&) const = default;
};

std::string to_string(DecompositionTree::Kind kind);

/// Least vertex (declaration order) joined to every other vertex by a
/// label-2 edge.
std::optional<std::string> find_central_vertex(const ArtinGraph& g);

/// The decomposition recursion without the forbidden-subgraph precheck.
/// Returns nullopt as soon as a connected stage with at least two vertices
/// is neither a single labeled edge nor has a central vertex.
std::optional<DecompositionTree> decompose_structural(const ArtinGraph& g);

/// Decomposition of a clean graph. Throws PoisonousGraph if g contains a
/// forbidden pattern and InternalContradiction if a clean connected stage
/// has no central vertex or violates the labeled-edge link structure.
DecompositionTree decompose(const ArtinGraph& g);

/// For a connected graph: for every edge {x, y} with label p > 2, every
/// other vertex adjacent to x or y must be adjacent to both by label 2, the
/// link L of the edge must be complete with label 2, and every edge from L
/// to the rest F must have label 2. Returns a description of the first
/// violation, or nullopt.
std::optional<std::string> labeled_edge_link_violation(const ArtinGraph& g);

/// Text form over Z, D_m, x, *; runs of central factors become Z^k and
/// free factors of Z become F_k.
std::string tree_describe(const DecompositionTree& t);

std::string tree_to_dot(const DecompositionTree& t);

/// Leaf vertices (Z, Dihedral, DirectZ centrals) in tree order.
std::vector<std::string> tree_vertices(const DecompositionTree& t);

}  // namespace artin
