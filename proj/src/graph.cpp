#include "artin/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

bool is_valid_vertex_name(std::string_view name) {
  if (name.empty()) return false;
  auto ident = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  };
  if (name.front() >= '0' && name.front() <= '9') return false;
  if (name == "_") return false;  // reserved for epsilon in rational expressions
  return std::all_of(name.begin(), name.end(), ident);
}

std::size_t ArtinGraph::add_vertex(std::string name) {
  if (!is_valid_vertex_name(name)) throw InvalidInput("invalid vertex name '" + name + "'");
  if (index_.count(name)) throw InvalidInput("duplicate vertex '" + name + "'");
  const std::size_t idx = names_.size();
  index_.emplace(name, idx);
  names_.push_back(std::move(name));
  for (auto& row : labels_) row.push_back(0);
  labels_.emplace_back(names_.size(), 0);
  return idx;
}

void ArtinGraph::add_edge(std::size_t u, std::size_t v, int label) {
  if (u >= size() || v >= size()) throw InvalidInput("edge endpoint out of range");
  if (u == v) throw InvalidInput("self-loop on vertex '" + names_[u] + "'");
  if (label < 2) {
    throw InvalidInput("edge " + names_[u] + " " + names_[v] + " has label " +
                       std::to_string(label) + " < 2");
  }
  const int existing = labels_[u][v];
  if (existing != 0 && existing != label) {
    throw InvalidInput("duplicate edge " + names_[u] + " " + names_[v] +
                       " with conflicting labels " + std::to_string(existing) + " and " +
                       std::to_string(label));
  }
  labels_[u][v] = labels_[v][u] = label;
}

void ArtinGraph::add_edge(std::string_view u, std::string_view v, int label) {
  const auto iu = index_of(u);
  if (!iu) throw InvalidInput("unknown endpoint '" + std::string(u) + "'");
  const auto iv = index_of(v);
  if (!iv) throw InvalidInput("unknown endpoint '" + std::string(v) + "'");
  add_edge(*iu, *iv, label);
}

std::optional<std::size_t> ArtinGraph::index_of(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int ArtinGraph::label(std::string_view u, std::string_view v) const {
  const auto iu = index_of(u);
  const auto iv = index_of(v);
  if (!iu || !iv) throw InvalidInput("unknown vertex in label query");
  return labels_[*iu][*iv];
}

std::vector<Edge> ArtinGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (labels_[i][j] != 0) out.push_back({i, j, labels_[i][j]});
  return out;
}

std::size_t ArtinGraph::edge_count() const { return edges().size(); }

bool ArtinGraph::right_angled() const {
  for (const auto& e : edges())
    if (e.label != 2) return false;
  return true;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

ArtinGraph parse_graph(std::string_view text) {
  ArtinGraph g;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_tokens(line);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "vertex") {
        if (tok.size() != 2) throw ParseError("expected 'vertex <name>'", line_no);
        g.add_vertex(std::string(tok[1]));
      } else if (tok[0] == "edge") {
        if (tok.size() != 3 && tok.size() != 4)
          throw ParseError("expected 'edge <u> <v> [m]'", line_no);
        int label = 2;
        if (tok.size() == 4) {
          const auto s = tok[3];
          const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), label);
          if (ec != std::errc() || ptr != s.data() + s.size())
            throw ParseError("edge label '" + std::string(s) + "' is not an integer", line_no);
        }
        g.add_edge(tok[1], tok[2], label);
      } else {
        throw ParseError("unknown statement '" + std::string(tok[0]) + "'", line_no);
      }
    } catch (const InvalidInput& e) {
      throw ParseError(e.what(), line_no);
    }
    if (eol == text.size()) break;
  }
  return g;
}

ArtinGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize_graph(const ArtinGraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) out << "vertex " << v << '\n';
  for (const auto& e : g.edges()) {
    out << "edge " << g.name(e.u) << ' ' << g.name(e.v);
    if (e.label != 2) out << ' ' << e.label;
    out << '\n';
  }
  return out.str();
}

std::string graph_to_dot(const ArtinGraph& g, const VertexSet& highlight) {
  const std::set<std::string> marked(highlight.begin(), highlight.end());
  std::ostringstream out;
  out << "graph artin {\n";
  for (const auto& v : g.vertices()) {
    out << "  \"" << v << '"';
    if (marked.count(v)) out << " [style=filled, fillcolor=\"#f4a6a6\"]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  \"" << g.name(e.u) << "\" -- \"" << g.name(e.v) << '"';
    const bool hot = marked.count(g.name(e.u)) && marked.count(g.name(e.v));
    if (e.label != 2 || hot) {
      out << " [";
      if (e.label != 2) out << "label=\"" << e.label << '"';
      if (e.label != 2 && hot) out << ", ";
      if (hot) out << "color=red, penwidth=2";
      out << ']';
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

ArtinGraph induced_subgraph(const ArtinGraph& g, const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("vertex set contains duplicates");
  ArtinGraph h;
  for (const auto i : sorted) {
    if (i >= g.size()) throw InvalidInput("vertex index out of range");
    h.add_vertex(g.name(i));
  }
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b)
      if (const int m = g.label(sorted[a], sorted[b]); m != 0) h.add_edge(a, b, m);
  return h;
}

ArtinGraph induced_subgraph(const ArtinGraph& g, const VertexSet& s) {
  std::vector<std::size_t> idx;
  idx.reserve(s.size());
  for (const auto& name : s) {
    const auto i = g.index_of(name);
    if (!i) throw InvalidInput("vertex '" + name + "' is not declared in the graph");
    idx.push_back(*i);
  }
  return induced_subgraph(g, idx);
}

std::vector<std::vector<std::size_t>> connected_components(const ArtinGraph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (std::size_t y = 0; y < g.size(); ++y) {
        if (g.adjacent(x, y) && comp[y] == -1) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace artin
