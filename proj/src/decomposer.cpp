#include "artin/decomposer.hpp"

#include <sstream>

#include "artin/detector.hpp"
#include "artin/errors.hpp"

namespace artin {

std::string to_string(DecompositionTree::Kind kind) {
  using K = DecompositionTree::Kind;
  switch (kind) {
    case K::Trivial: return "Trivial";
    case K::Z: return "Z";
    case K::Dihedral: return "Dihedral";
    case K::FreeProduct: return "FreeProduct";
    case K::DirectZ: return "DirectZ";
  }
  return "?";
}

std::optional<std::string> find_central_vertex(const ArtinGraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool central = true;
    for (std::size_t u = 0; u < g.size() && central; ++u)
      if (u != v && g.label(u, v) != 2) central = false;
    if (central) return g.name(v);
  }
  return std::nullopt;
}

std::optional<std::string> labeled_edge_link_violation(const ArtinGraph& g) {
  const std::size_t n = g.size();
  for (const auto& e : g.edges()) {
    if (e.label <= 2) continue;
    std::vector<std::size_t> link, rest;
    for (std::size_t w = 0; w < n; ++w) {
      if (w == e.u || w == e.v) continue;
      const int lu = g.label(w, e.u), lv = g.label(w, e.v);
      if (lu == 0 && lv == 0) {
        rest.push_back(w);
        continue;
      }
      if (lu != 2 || lv != 2) {
        return "vertex " + g.name(w) + " meets edge {" + g.name(e.u) + "," + g.name(e.v) +
               "} without label-2 edges to both endpoints";
      }
      link.push_back(w);
    }
    for (std::size_t i = 0; i < link.size(); ++i)
      for (std::size_t j = i + 1; j < link.size(); ++j)
        if (g.label(link[i], link[j]) != 2)
          return "link of {" + g.name(e.u) + "," + g.name(e.v) + "} is not complete with label 2 at {" +
                 g.name(link[i]) + "," + g.name(link[j]) + "}";
    for (auto l : link)
      for (auto f : rest)
        if (const int m = g.label(l, f); m != 0 && m != 2)
          return "link-to-rest edge {" + g.name(l) + "," + g.name(f) + "} has label " +
                 std::to_string(m);
  }
  return std::nullopt;
}

namespace {

using Kind = DecompositionTree::Kind;

std::optional<DecompositionTree> build(const ArtinGraph& g, bool checked) {
  if (g.empty()) return DecompositionTree{};
  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    DecompositionTree t{Kind::FreeProduct, {}, 0, {}};
    for (const auto& c : comps) {
      auto child = build(induced_subgraph(g, c), checked);
      if (!child) return std::nullopt;
      t.children.push_back(std::move(*child));
    }
    return t;
  }
  if (g.size() == 1) return DecompositionTree{Kind::Z, {g.name(0)}, 0, {}};
  if (g.size() == 2 && g.label(0, 1) > 2)
    return DecompositionTree{Kind::Dihedral, {g.name(0), g.name(1)}, g.label(0, 1), {}};
  if (checked && g.size() >= 3) {
    if (auto bad = labeled_edge_link_violation(g)) throw InternalContradiction(*bad);
  }
  const auto central = find_central_vertex(g);
  if (!central) {
    if (checked) {
      throw InternalContradiction("clean connected graph on " + std::to_string(g.size()) +
                                  " vertices has no central vertex");
    }
    return std::nullopt;
  }
  VertexSet rest;
  for (const auto& v : g.vertices())
    if (v != *central) rest.push_back(v);
  auto child = build(induced_subgraph(g, rest), checked);
  if (!child) return std::nullopt;
  DecompositionTree t{Kind::DirectZ, {*central}, 0, {}};
  t.children.push_back(std::move(*child));
  return t;
}

bool is_free_of_z(const DecompositionTree& t) {
  if (t.kind != Kind::FreeProduct) return false;
  for (const auto& c : t.children)
    if (c.kind != Kind::Z) return false;
  return true;
}

std::string describe(const DecompositionTree& t);

std::string describe_factor(const DecompositionTree& t) {
  if (t.kind == Kind::DirectZ || (t.kind == Kind::FreeProduct && !is_free_of_z(t)))
    return "(" + describe(t) + ")";
  return describe(t);
}

std::string describe(const DecompositionTree& t) {
  switch (t.kind) {
    case Kind::Trivial: return "1";
    case Kind::Z: return "Z";
    case Kind::Dihedral: return "D_" + std::to_string(t.label);
    case Kind::FreeProduct: {
      std::size_t rank = 0;
      for (const auto& c : t.children) rank += c.kind == Kind::Z;
      std::string out;
      bool free_part_done = false;
      for (const auto& c : t.children) {
        std::string part;
        if (c.kind == Kind::Z) {
          if (free_part_done) continue;
          free_part_done = true;
          part = rank == 1 ? "Z" : "F_" + std::to_string(rank);
        } else {
          part = describe_factor(c);
        }
        out += (out.empty() ? "" : " ∗ ") + part;
      }
      return out;
    }
    case Kind::DirectZ: {
      int k = 0;
      const DecompositionTree* node = &t;
      while (node->kind == Kind::DirectZ) {
        ++k;
        node = &node->children.front();
      }
      std::string out = k == 1 ? "Z" : "Z^" + std::to_string(k);
      // The non-central remainder; a lone Z there is the free group of rank 1.
      const std::string rest = node->kind == Kind::Z ? "F_1" : describe_factor(*node);
      return out + " × " + rest;
    }
  }
  return "?";
}

void dot_node(const DecompositionTree& t, int& counter, std::ostringstream& out) {
  const int id = counter++;
  std::string label = to_string(t.kind);
  if (t.kind == Kind::Z || t.kind == Kind::DirectZ) label += "(" + t.vertices.front() + ")";
  if (t.kind == Kind::Dihedral)
    label = "D_" + std::to_string(t.label) + "(" + t.vertices[0] + "," + t.vertices[1] + ")";
  out << "  n" << id << " [label=\"" << label << "\"];\n";
  for (const auto& c : t.children) {
    const int child = counter;
    dot_node(c, counter, out);
    out << "  n" << id << " -> n" << child << ";\n";
  }
}

void collect(const DecompositionTree& t, std::vector<std::string>& out) {
  out.insert(out.end(), t.vertices.begin(), t.vertices.end());
  for (const auto& c : t.children) collect(c, out);
}

}  // namespace

std::optional<DecompositionTree> decompose_structural(const ArtinGraph& g) { return build(g, false); }

DecompositionTree decompose(const ArtinGraph& g) {
  if (auto pat = find_forbidden(g)) {
    std::string where;
    for (const auto& v : pat->vertices) where += (where.empty() ? "" : ",") + v;
    throw PoisonousGraph("graph contains forbidden " + std::string(to_string(pat->kind)) + " on {" +
                         where + "}");
  }
  auto t = build(g, true);
  if (!t) throw InternalContradiction("decomposition failed on a clean graph");
  return *t;
}

std::string tree_describe(const DecompositionTree& t) { return describe(t); }

std::string tree_to_dot(const DecompositionTree& t) {
  std::ostringstream out;
  out << "digraph decomposition {\n";
  int counter = 0;
  dot_node(t, counter, out);
  out << "}\n";
  return out.str();
}

std::vector<std::string> tree_vertices(const DecompositionTree& t) {
  std::vector<std::string> out;
  collect(t, out);
  return out;
}

}  // namespace artin
