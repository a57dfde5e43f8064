#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "artin/decomposer.hpp"
#include "artin/graph.hpp"

namespace artin {

enum class PatternKind { P4, C4, ChordalSquareP, ChordalSquarePQ, Path3, Triangle };

std::string_view to_string(PatternKind kind);
std::optional<PatternKind> pattern_kind_from_string(std::string_view s);

/// A labeled induced subgraph that rules out decidable membership.
///
/// Vertices are listed in role order:
///   Path3            (a, b, c)     edges ab = m, bc = n;          labels (m, n)
///   Triangle         (a, b, c)     ab = l, bc = m, ca = n, l<=m<=n; labels (l, m, n)
///   P4               (a, b, c, d)  path a-b-c-d, label 2;         labels ()
///   C4               (a, b, c, d)  cycle a-b-c-d-a, label 2;      labels ()
///   ChordalSquareP   (a, b, c, d)  square as C4, chord bd = p;    labels (p)
///   ChordalSquarePQ  (a, b, c, d)  chords bd = p, ac = q, p<=q;   labels (p, q)
/// Among the role orders that fit, the lexicographically least tuple of
/// declaration indices is used.
struct ForbiddenPattern {
  PatternKind kind;
  std::vector<std::string> vertices;
  std::vector<int> labels;

  bool operator==(const ForbiddenPattern&) const = default;
};

/// True iff the listed vertices induce exactly the claimed labeled pattern.
bool pattern_matches(const ArtinGraph& g, const ForbiddenPattern& pat);

/// First forbidden pattern in scan order: all 3-subsets in lexicographic
/// order of declaration indices, then all 4-subsets.
std::optional<ForbiddenPattern> find_forbidden(const ArtinGraph& g);

enum class Decidability { Decidable, Undecidable };
std::string_view to_string(Decidability d);

struct Verdict {
  Decidability rational_subset;
  Decidability submonoid;
  Decidability subgroup_separable;
  std::variant<ForbiddenPattern, DecompositionTree> evidence;
  std::vector<std::string> notes;

  bool decidable() const { return rational_subset == Decidability::Decidable; }
};

/// Decides all three problems at once. Throws InternalContradiction if a
/// clean graph fails to decompose.
Verdict classify(const ArtinGraph& g);

}  // namespace artin
