#include "artin/raag.hpp"

#include "artin/errors.hpp"

namespace artin {

RaagContext::RaagContext(ArtinGraph graph) : graph_(std::move(graph)) {
  if (!graph_.right_angled())
    throw UnsupportedContext("right-angled context requires every edge label to be 2");
}

std::size_t RaagContext::index(const std::string& gen) const {
  const auto i = graph_.index_of(gen);
  if (!i) throw InvalidInput("generator '" + gen + "' is not a vertex of the graph");
  return *i;
}

namespace {

struct Sym {
  std::size_t gen;
  int exp;
};

// Deletes one cancellable pair; returns false when the word is fully reduced.
bool cancel_one(const RaagContext& ctx, std::vector<Sym>& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j].gen == w[i].gen) {
        if (w[j].exp == -w[i].exp) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
          return true;
        }
        break;
      }
      if (!ctx.commute(w[i].gen, w[j].gen)) break;
    }
  }
  return false;
}

}  // namespace

Word raag_reduce(const RaagContext& ctx, const Word& w) {
  std::vector<Sym> syms;
  syms.reserve(w.size());
  for (const auto& l : w) syms.push_back({ctx.index(l.gen), l.exp});
  while (cancel_one(ctx, syms)) {
  }

  // Greedy lexicographically least shuffle: repeatedly emit the least letter
  // that commutes with everything before it.
  Word out;
  std::vector<bool> used(syms.size(), false);
  for (std::size_t emitted = 0; emitted < syms.size(); ++emitted) {
    std::size_t best = syms.size();
    std::vector<std::size_t> blockers;  // unused letters seen so far
    for (std::size_t k = 0; k < syms.size(); ++k) {
      if (used[k]) continue;
      bool free = true;
      for (auto b : blockers)
        if (syms[b].gen == syms[k].gen || !ctx.commute(syms[b].gen, syms[k].gen)) {
          free = false;
          break;
        }
      if (free) {
        const auto key = [&](std::size_t x) { return std::pair{syms[x].gen, -syms[x].exp}; };
        if (best == syms.size() || key(k) < key(best)) best = k;
      }
      blockers.push_back(k);
    }
    used[best] = true;
    out.letters.push_back({ctx.graph().name(syms[best].gen), syms[best].exp});
  }
  return out;
}

Word raag_retraction(const RaagContext& ctx, const VertexSet& s, const Word& w) {
  for (const auto& v : s) ctx.index(v);
  for (const auto& l : w) ctx.index(l.gen);
  const RaagContext sub(induced_subgraph(ctx.graph(), s));
  return raag_reduce(sub, restrict_to(w, s));
}

}  // namespace artin
