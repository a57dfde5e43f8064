#include "artin/detector.hpp"

#include <algorithm>
#include <array>

#include "artin/errors.hpp"

namespace artin {

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::P4: return "P4";
    case PatternKind::C4: return "C4";
    case PatternKind::ChordalSquareP: return "ChordalSquareP";
    case PatternKind::ChordalSquarePQ: return "ChordalSquarePQ";
    case PatternKind::Path3: return "Path3";
    case PatternKind::Triangle: return "Triangle";
  }
  return "?";
}

std::optional<PatternKind> pattern_kind_from_string(std::string_view s) {
  for (auto k : {PatternKind::P4, PatternKind::C4, PatternKind::ChordalSquareP,
                 PatternKind::ChordalSquarePQ, PatternKind::Path3, PatternKind::Triangle})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::string_view to_string(Decidability d) {
  return d == Decidability::Decidable ? "decidable" : "undecidable";
}

namespace {

// Checks the role predicate of `kind` on vertex tuple `r` and fills labels.
bool roles_hold(const ArtinGraph& g, PatternKind kind, const std::vector<std::size_t>& r,
                std::vector<int>& labels) {
  auto L = [&](std::size_t i, std::size_t j) { return g.label(r[i], r[j]); };
  labels.clear();
  switch (kind) {
    case PatternKind::Path3: {
      if (r.size() != 3) return false;
      const int m = L(0, 1), n = L(1, 2);
      if (m == 0 || n == 0 || L(0, 2) != 0 || m + n <= 4) return false;
      labels = {m, n};
      return true;
    }
    case PatternKind::Triangle: {
      if (r.size() != 3) return false;
      const int l = L(0, 1), m = L(1, 2), n = L(2, 0);
      if (l == 0 || m == 0 || n == 0) return false;
      if (!(l <= m && m <= n) || m <= 2) return false;
      labels = {l, m, n};
      return true;
    }
    default: break;
  }
  if (r.size() != 4) return false;
  const bool outer2 = L(0, 1) == 2 && L(1, 2) == 2 && L(2, 3) == 2 && L(3, 0) == 2;
  switch (kind) {
    case PatternKind::P4:
      return L(0, 1) == 2 && L(1, 2) == 2 && L(2, 3) == 2 && L(0, 2) == 0 && L(1, 3) == 0 &&
             L(0, 3) == 0;
    case PatternKind::C4:
      return outer2 && L(0, 2) == 0 && L(1, 3) == 0;
    case PatternKind::ChordalSquareP: {
      const int p = L(1, 3);
      if (!outer2 || L(0, 2) != 0 || p <= 2) return false;
      labels = {p};
      return true;
    }
    case PatternKind::ChordalSquarePQ: {
      const int p = L(1, 3), q = L(0, 2);
      if (!outer2 || p <= 2 || q <= 2 || p > q) return false;
      labels = {p, q};
      return true;
    }
    default: return false;
  }
}

constexpr std::array<PatternKind, 2> kThreeVertexKinds{PatternKind::Path3, PatternKind::Triangle};
constexpr std::array<PatternKind, 4> kFourVertexKinds{PatternKind::P4, PatternKind::C4,
                                                      PatternKind::ChordalSquareP,
                                                      PatternKind::ChordalSquarePQ};

// Least role order of the sorted subset that fits some kind.
std::optional<ForbiddenPattern> match_subset(const ArtinGraph& g, std::vector<std::size_t> subset) {
  std::vector<int> labels;
  auto try_kinds = [&](auto const& kinds) -> std::optional<ForbiddenPattern> {
    for (const auto kind : kinds) {
      std::vector<std::size_t> perm = subset;  // sorted: permutations come out in lex order
      do {
        if (roles_hold(g, kind, perm, labels)) {
          ForbiddenPattern pat{kind, {}, labels};
          for (auto i : perm) pat.vertices.push_back(g.name(i));
          return pat;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
  };
  if (subset.size() == 3) return try_kinds(kThreeVertexKinds);
  return try_kinds(kFourVertexKinds);
}

}  // namespace

bool pattern_matches(const ArtinGraph& g, const ForbiddenPattern& pat) {
  std::vector<std::size_t> r;
  for (const auto& v : pat.vertices) {
    const auto i = g.index_of(v);
    if (!i) return false;
    r.push_back(*i);
  }
  std::vector<std::size_t> sorted = r;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  std::vector<int> labels;
  return roles_hold(g, pat.kind, r, labels) && labels == pat.labels;
}

std::optional<ForbiddenPattern> find_forbidden(const ArtinGraph& g) {
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (auto p = match_subset(g, {a, b, c})) return p;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (auto p = match_subset(g, {a, b, c, d})) return p;
  return std::nullopt;
}

Verdict classify(const ArtinGraph& g) {
  if (auto pat = find_forbidden(g)) {
    Verdict v{Decidability::Undecidable, Decidability::Undecidable, Decidability::Undecidable,
              *pat, {}};
    const bool square = pat->kind == PatternKind::C4 || pat->kind == PatternKind::ChordalSquareP ||
                        pat->kind == PatternKind::ChordalSquarePQ;
    const std::string target = square ? "A(C4)" : "A(P4)";
    v.notes.push_back("induced " + std::string(to_string(pat->kind)) + " on {" +
                      [&] {
                        std::string s;
                        for (const auto& x : pat->vertices) s += (s.empty() ? "" : ",") + x;
                        return s;
                      }() +
                      "}: the group contains " + target + " (see `witness`)");
    if (square) {
      v.notes.push_back(
          "A(C4) = F2 x F2 contains a subgroup where membership is undecidable (Mikhailova), so "
          "the group is not subgroup separable and its rational subset problem is undecidable");
    } else {
      v.notes.push_back(
          "A(P4) contains a submonoid where membership is undecidable (Lohrey-Steinberg), and is "
          "not subgroup separable");
    }
    return v;
  }
  DecompositionTree tree;
  try {
    tree = decompose(g);
  } catch (const PoisonousGraph& e) {
    throw InternalContradiction(std::string("clean graph reported poisonous: ") + e.what());
  }
  Verdict v{Decidability::Decidable, Decidability::Decidable, Decidability::Decidable, tree, {}};
  v.notes.push_back("no forbidden induced subgraph; A = " + tree_describe(tree));
  v.notes.push_back(
      "elementary Artin group: built from Z and dihedral Artin groups by free products and direct "
      "products with Z, all of which preserve decidable rational subset membership and subgroup "
      "separability");
  return v;
}

}  // namespace artin
