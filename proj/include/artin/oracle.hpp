#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "artin/elementary.hpp"
#include "artin/graph.hpp"
#include "artin/raag.hpp"
#include "artin/word.hpp"

namespace artin {

/// A group with a solvable word problem, exposed through a canonical key.
class GroupContext {
 public:
  enum class Kind { Raag, CleanArtin, Dihedral };

  static GroupContext raag(ArtinGraph g);
  static GroupContext clean(ArtinGraph g);
  /// D_m on generators a, b.
  static GroupContext dihedral(int m);
  /// Right-angled graphs (poisonous or not) use the RAAG normal form, other
  /// clean graphs the elementary one. Anything else throws UnsupportedContext.
  static GroupContext for_graph(ArtinGraph g);

  Kind kind() const;
  std::string_view kind_name() const;
  const std::vector<std::string>& generators() const { return generators_; }

  /// Throws InvalidInput if w uses a letter outside the context.
  void validate(const Word& w) const;
  std::string normal_key(const Word& w) const;
  bool equal(const Word& u, const Word& v) const { return normal_key(u) == normal_key(v); }

 private:
  struct Dihedral {
    int m;
  };
  using Impl = std::variant<RaagContext, CleanContext, Dihedral>;

  explicit GroupContext(Impl impl, std::vector<std::string> gens)
      : impl_(std::move(impl)), generators_(std::move(gens)) {}

  Impl impl_;
  std::vector<std::string> generators_;
};

/// Regular expression over signed generators.
struct RationalExpr {
  enum class Op { Epsilon, Atom, Union, Concat, Star };

  Op op = Op::Epsilon;
  Letter atom;
  std::vector<RationalExpr> children;

  static RationalExpr epsilon() { return {}; }
  static RationalExpr letter(Letter l) { return {Op::Atom, std::move(l), {}}; }
  static RationalExpr word(const Word& w);
  static RationalExpr alt(std::vector<RationalExpr> parts);
  static RationalExpr concat(std::vector<RationalExpr> parts);
  static RationalExpr star(RationalExpr inner);

  bool operator==(const RationalExpr&) const = default;
};

/// Syntax: atoms `a`, `a'`, `a^-1`; `|`, juxtaposition, postfix `*`,
/// parentheses, `_` for the empty word. Identifier runs are split against
/// `alphabet` by longest match (single characters if it is empty).
RationalExpr parse_rational(std::string_view text, const std::vector<std::string>& alphabet = {});
std::string to_text(const RationalExpr& e);

/// Kleene star of the union of the given words.
RationalExpr submonoid_expr(const std::vector<Word>& gens);

struct MembershipResult {
  enum class Outcome { Member, Unknown };

  Outcome outcome = Outcome::Unknown;
  std::optional<std::vector<std::size_t>> factorization;  // submonoid hits only
  Word certificate;                        // evaluated product or accepted word
  int bound = 0;
  std::size_t explored = 0;  // distinct configurations visited

  bool member() const { return outcome == Outcome::Member; }
};

/// Breadth-first search over products of at most `bound` generators,
/// deduplicated by normal key. A hit carries the shortest factorization,
/// lexicographically least among the shortest. Never reports non-membership.
MembershipResult member_submonoid(const GroupContext& ctx, const std::vector<Word>& gens,
                                  const Word& target, int bound);

/// Breadth-first search over (automaton state, normal key) pairs reading at
/// most `bound` letters. A hit carries the accepted word.
MembershipResult member_rational(const GroupContext& ctx, const RationalExpr& expr,
                                 const Word& target, int bound);

}  // namespace artin
