#pragma once

#include <string>
#include <utility>
#include <vector>

#include "artin/detector.hpp"
#include "artin/graph.hpp"
#include "artin/word.hpp"

namespace artin {

enum class WitnessTarget { P4, C4 };
std::string_view to_string(WitnessTarget t);

/// One claimed commutation between two assigned words.
struct WitnessCheck {
  std::size_t first;               // positions in WitnessReport::assignment
  std::size_t second;
  std::vector<std::string> support;  // generators used by the pair, declaration order
  int label = 0;                   // label of the support edge; 0 if not an edge or one vertex
  std::string method;              // "trivial", "raag" or "dihedral"
  bool verified = false;
};

/// Words in the ambient group that generate a copy of A(P4) or A(C4).
/// assignment lists the target vertices in path or cycle order; each entry
/// pairs a display name with the ambient word.
struct WitnessReport {
  ForbiddenPattern pattern;
  WitnessTarget target = WitnessTarget::P4;
  std::vector<std::pair<std::string, Word>> assignment;
  std::vector<WitnessCheck> checks;
  bool verified = false;
  std::string citation;
};

/// Builds the witness words for a pattern found in g.
/// Throws InvalidInput if the pattern does not re-validate against g.
WitnessReport make_witness(const ArtinGraph& g, const ForbiddenPattern& pat);

/// Checks every target edge inside its two-generator parabolic subgroup.
/// Throws UnsupportedVerification if a pair uses more than two generators,
/// InternalContradiction if the checked pairs are not the target's edges.
WitnessReport verify_witness(const ArtinGraph& g, WitnessReport r);

/// Edge list of the target graph in path or cycle order.
std::vector<std::pair<std::size_t, std::size_t>> target_edges(WitnessTarget t);

}  // namespace artin
