#include "artin/elementary.hpp"

#include <unordered_map>

#include "artin/errors.hpp"
#include "artin/garside.hpp"

namespace artin {

namespace detail {

struct KeyNode {
  DecompositionTree::Kind kind;
  std::vector<std::string> vertices;
  int label = 0;
  std::vector<KeyNode> children;
  std::unordered_map<std::string, std::size_t> component;  // FreeProduct: generator -> child
  std::string identity;
};

}  // namespace detail

namespace {

using detail::KeyNode;
using Kind = DecompositionTree::Kind;

std::string key_of(const KeyNode& node, const Word& w);

std::string free_product_key(const KeyNode& node, const Word& w) {
  struct Syllable {
    std::size_t comp;
    Word word;
    std::string key;
  };
  std::vector<Syllable> stack;
  auto push = [&](std::size_t comp, Word word) {
    if (!stack.empty() && stack.back().comp == comp) {
      stack.back().word *= word;
      stack.back().key = key_of(node.children[comp], stack.back().word);
      if (stack.back().key == node.children[comp].identity) stack.pop_back();
      return;
    }
    std::string key = key_of(node.children[comp], word);
    if (key != node.children[comp].identity) stack.push_back({comp, std::move(word), std::move(key)});
  };

  std::size_t i = 0;
  while (i < w.size()) {
    const std::size_t comp = node.component.at(w[i].gen);
    Word run;
    while (i < w.size() && node.component.at(w[i].gen) == comp) run.letters.push_back(w[i++]);
    push(comp, std::move(run));
  }

  if (stack.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < stack.size(); ++k) {
    if (k > 0 && stack[k].comp == stack[k - 1].comp)
      throw InternalContradiction("free product normal form has adjacent syllables of one factor");
    out += "(" + stack[k].key + ")";
  }
  return out;
}

std::string key_of(const KeyNode& node, const Word& w) {
  switch (node.kind) {
    case Kind::Trivial:
      if (!w.empty()) throw InvalidInput("word over the trivial group must be empty");
      return "1";
    case Kind::Z: return node.vertices[0] + ":" + std::to_string(exponent_sum(w, node.vertices[0]));
    case Kind::Dihedral: {
      const auto& a = node.vertices[0];
      const auto& b = node.vertices[1];
      return "[" + a + "," + b + "]" + nf_key(garside_nf(node.label, w, a, b), a, b);
    }
    case Kind::DirectZ: {
      const auto& z = node.vertices[0];
      Word residual;
      int k = 0;
      for (const auto& l : w) {
        if (l.gen == z)
          k += l.exp;
        else
          residual.letters.push_back(l);
      }
      return z + ":" + std::to_string(k) + "|" + key_of(node.children[0], residual);
    }
    case Kind::FreeProduct: return free_product_key(node, w);
  }
  throw InternalContradiction("unknown tree node");
}

KeyNode build(const DecompositionTree& t) {
  KeyNode node{t.kind, t.vertices, t.label, {}, {}, {}};
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    node.children.push_back(build(t.children[i]));
    if (t.kind == Kind::FreeProduct)
      for (const auto& v : tree_vertices(t.children[i])) node.component.emplace(v, i);
  }
  node.identity = key_of(node, Word{});
  return node;
}

}  // namespace

CleanContext::CleanContext(ArtinGraph graph)
    : graph_(std::move(graph)),
      tree_(decompose(graph_)),
      root_(std::make_shared<const KeyNode>(build(tree_))) {}

CleanContext::~CleanContext() = default;
CleanContext::CleanContext(const CleanContext&) = default;
CleanContext& CleanContext::operator=(const CleanContext&) = default;
CleanContext::CleanContext(CleanContext&&) noexcept = default;
CleanContext& CleanContext::operator=(CleanContext&&) noexcept = default;

std::string normal_key(const CleanContext& ctx, const Word& w) {
  for (const auto& l : w)
    if (!ctx.graph().contains(l.gen))
      throw InvalidInput("generator '" + l.gen + "' is not a vertex of the graph");
  return key_of(ctx.root(), w);
}

bool elementary_equal(const CleanContext& ctx, const Word& w1, const Word& w2) {
  return normal_key(ctx, w1) == normal_key(ctx, w2);
}

}  // namespace artin
