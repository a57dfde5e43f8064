#include "artin/witness.hpp"

#include <algorithm>
#include <set>

#include "artin/errors.hpp"
#include "artin/garside.hpp"
#include "artin/raag.hpp"

namespace artin {

std::string_view to_string(WitnessTarget t) { return t == WitnessTarget::P4 ? "P4" : "C4"; }

std::vector<std::pair<std::size_t, std::size_t>> target_edges(WitnessTarget t) {
  if (t == WitnessTarget::P4) return {{0, 1}, {1, 2}, {2, 3}};
  return {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
}

namespace {

std::string square_name(const std::string& v) { return v + "^2"; }
std::string center_name(const std::string& u, const std::string& v) {
  return "z(" + u + "," + v + ")^2";
}

}  // namespace

WitnessReport make_witness(const ArtinGraph& g, const ForbiddenPattern& pat) {
  if (!pattern_matches(g, pat))
    throw InvalidInput("pattern " + std::string(to_string(pat.kind)) +
                       " does not match the induced subgraph of the graph");
  WitnessReport r;
  r.pattern = pat;
  const auto& v = pat.vertices;
  switch (pat.kind) {
    case PatternKind::P4:
    case PatternKind::C4:
      r.target = pat.kind == PatternKind::P4 ? WitnessTarget::P4 : WitnessTarget::C4;
      for (const auto& x : v) r.assignment.emplace_back(x, Word{{x, 1}});
      r.citation =
          "the vertices induce the poisonous graph itself; a standard parabolic subgroup of an "
          "induced subgraph embeds, split by the retraction sending the other vertices to 1";
      break;
    case PatternKind::ChordalSquareP:
    case PatternKind::ChordalSquarePQ:
      r.target = WitnessTarget::C4;
      for (const auto& x : v) r.assignment.emplace_back(square_name(x), gen_power(x, 2));
      r.citation =
          "Crisp-Paris (Tits conjecture): squares of the vertices generate the RAAG on the label-2 "
          "edges; squares across a chord labeled > 2 are free, leaving A(C4)";
      break;
    case PatternKind::Path3: {
      // Orient the path so the first edge carries the smaller label.
      std::string a = v[0], b = v[1], c = v[2];
      int m = pat.labels[0], n = pat.labels[1];
      if (m > n) {
        std::swap(a, c);
        std::swap(m, n);
      }
      const Word z_ab = alternating_word(a, b, m);
      const Word z_bc = alternating_word(b, c, n);
      r.target = WitnessTarget::P4;
      r.assignment = {{center_name(a, b), power(z_ab, 2)},
                      {square_name(b), gen_power(b, 2)},
                      {center_name(b, c), power(z_bc, 2)},
                      {square_name(c), gen_power(c, 2)}};
      r.citation =
          "Jankiewicz-Schreve: for m <= n and m + n > 4 the subgroup generated by z_ab^2, b^2, "
          "z_bc^2, c^2 is a RAAG isomorphic to A(P4)";
      break;
    }
    case PatternKind::Triangle: {
      const std::string &a = v[0], &b = v[1], &c = v[2];
      const int m = pat.labels[1], n = pat.labels[2];
      const Word z_bc = alternating_word(b, c, m);
      const Word z_ac = alternating_word(c, a, n);
      r.target = WitnessTarget::P4;
      r.assignment = {{square_name(b), gen_power(b, 2)},
                      {center_name(b, c), power(z_bc, 2)},
                      {square_name(c), gen_power(c, 2)},
                      {center_name(c, a), power(z_ac, 2)}};
      r.citation =
          "Jankiewicz-Schreve: with labels l <= m <= n and m, n > 2 the subgroup generated by b^2, "
          "z_bc^2, c^2, z_ac^2 is a RAAG isomorphic to A(P4)";
      break;
    }
  }
  return r;
}

WitnessReport verify_witness(const ArtinGraph& g, WitnessReport r) {
  if (!pattern_matches(g, r.pattern))
    throw InvalidInput("witness pattern does not match the graph");
  r.checks.clear();
  for (const auto& [i, j] : target_edges(r.target)) {
    const Word& u = r.assignment.at(i).second;
    const Word& w = r.assignment.at(j).second;
    std::set<std::size_t> ids;
    for (const auto* word : {&u, &w})
      for (const auto& l : *word) {
        const auto idx = g.index_of(l.gen);
        if (!idx) throw InvalidInput("witness word uses unknown generator '" + l.gen + "'");
        ids.insert(*idx);
      }
    WitnessCheck check{i, j, {}, 0, "trivial", false};
    for (auto id : ids) check.support.push_back(g.name(id));
    if (ids.size() > 2) {
      throw UnsupportedVerification("pair (" + r.assignment[i].first + ", " +
                                    r.assignment[j].first + ") uses " + std::to_string(ids.size()) +
                                    " generators");
    }
    if (ids.size() <= 1) {
      check.verified = true;
    } else {
      const auto& s = check.support;
      check.label = g.label(s[0], s[1]);
      if (check.label == 0 || check.label == 2) {
        check.method = "raag";
        const RaagContext ctx(induced_subgraph(g, s));
        check.verified = raag_reduce(ctx, commutator(u, w)).empty();
      } else {
        check.method = "dihedral";
        check.verified = dihedral_commutes(check.label, u, w, s[0], s[1]);
      }
    }
    r.checks.push_back(std::move(check));
  }

  // The checked pairs must be exactly the target's edges; all other pairs
  // are the target's non-edges and stay unchecked.
  std::set<std::pair<std::size_t, std::size_t>> checked, expected;
  for (const auto& c : r.checks) checked.insert(std::minmax(c.first, c.second));
  for (const auto& [i, j] : target_edges(r.target)) expected.insert(std::minmax(i, j));
  if (checked != expected || r.assignment.size() != 4)
    throw InternalContradiction("witness checks do not match the target graph");

  r.verified = std::all_of(r.checks.begin(), r.checks.end(),
                           [](const WitnessCheck& c) { return c.verified; });
  return r;
}

}  // namespace artin
