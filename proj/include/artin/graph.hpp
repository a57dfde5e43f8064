#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace artin {

struct Edge {
  std::size_t u;  // declaration index, u < v
  std::size_t v;
  int label;

  bool operator==(const Edge&) const = default;
};

/// Subset of a graph's vertices, kept in declaration order.
using VertexSet = std::vector<std::string>;

/// Finite simplicial graph with integer edge labels >= 2.
///
/// Vertices are kept in declaration order; that order is the tie-breaking
/// order for every search in the library. An absent edge means the two
/// generators satisfy no relation.
class ArtinGraph {
 public:
  ArtinGraph() = default;

  /// Appends a vertex. Throws InvalidInput on a duplicate or malformed name.
  std::size_t add_vertex(std::string name);

  /// Adds {u, v} with label m. Re-adding the same edge with the same label is
  /// a no-op; a conflicting label, a self-loop, an unknown endpoint or m < 2
  /// throws InvalidInput.
  void add_edge(std::string_view u, std::string_view v, int label = 2);
  void add_edge(std::size_t u, std::size_t v, int label = 2);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::vector<std::string>& vertices() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  /// Edge label, or 0 when the vertices are not adjacent (or i == j).
  int label(std::size_t i, std::size_t j) const { return labels_[i][j]; }
  int label(std::string_view u, std::string_view v) const;
  bool adjacent(std::size_t i, std::size_t j) const { return labels_[i][j] != 0; }

  /// All edges ordered by (u, v) declaration index.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  /// True when every edge carries label 2.
  bool right_angled() const;

  bool operator==(const ArtinGraph& other) const {
    return names_ == other.names_ && labels_ == other.labels_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<int>> labels_;
};

bool is_valid_vertex_name(std::string_view name);

/// Parses the line-oriented graph format:
///
///     # comment
///     vertex a
///     edge a b 3
///     edge b c        # label 2
///
/// Errors carry the offending line number.
ArtinGraph parse_graph(std::string_view text);

/// Reads and parses a graph file. Throws ParseError if unreadable.
ArtinGraph load_graph(const std::string& path);

std::string serialize_graph(const ArtinGraph& g);

/// Graphviz rendering; label-2 edges are drawn without a label. Vertices in
/// `highlight` are filled.
std::string graph_to_dot(const ArtinGraph& g, const VertexSet& highlight = {});

/// The Artin subgraph induced by `s`. Vertices keep g's relative order.
ArtinGraph induced_subgraph(const ArtinGraph& g, const VertexSet& s);
ArtinGraph induced_subgraph(const ArtinGraph& g, const std::vector<std::size_t>& indices);

/// Connected components as sorted index lists, ordered by least member.
std::vector<std::vector<std::size_t>> connected_components(const ArtinGraph& g);

}  // namespace artin
