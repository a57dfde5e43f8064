#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace artin {

class ArtinGraph;

/// A generator raised to +1 or -1.
struct Letter {
  std::string gen;
  int exp = 1;

  Letter inverse() const { return {gen, -exp}; }
  auto operator<=>(const Letter&) const = default;
};

/// Signed generator sequence. The empty word is the identity.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> l) : letters(l) {}
  explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  const Letter& operator[](std::size_t i) const { return letters[i]; }

  auto begin() const { return letters.begin(); }
  auto end() const { return letters.end(); }

  Word& operator*=(const Word& rhs);
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

Word operator*(Word lhs, const Word& rhs);
Word inverse(const Word& w);
Word power(const Word& w, int k);
Word commutator(const Word& u, const Word& v);  // u v u^-1 v^-1

/// Letter g^k expanded to |k| letters.
Word gen_power(const std::string& gen, int k);

/// Length-m prefix of u v u v ...; throws InvalidInput if u == v or m < 0.
Word alternating_word(const std::string& u, const std::string& v, int m);

/// Free reduction by a single left-to-right stack pass.
Word free_reduce(const Word& w);

/// Exponent sum per generator (zero entries omitted).
std::map<std::string, int> exponent_sums(const Word& w);
int exponent_sum(const Word& w, std::string_view gen);

/// Keeps only letters whose generator is listed.
Word restrict_to(const Word& w, const std::vector<std::string>& gens);

/// Defining relations of A(g): one pair ((u,v)_m, (v,u)_m) per edge.
std::vector<std::pair<Word, Word>> defining_relations(const ArtinGraph& g);

/// Renders a word. Single-character generators are juxtaposed
/// ("ab'a"), otherwise letters are space separated ("x1 x2'").
std::string to_text(const Word& w);

/// Parses word syntax.
///
/// Letters are separated by whitespace or juxtaposed. A suffix `'` or `^-1`
/// inverts a letter, `^k` repeats it. With a non-empty alphabet, identifier
/// runs are split by greedy longest match against it and unknown generators
/// are rejected; without one, a multi-character run that is not separated by
/// whitespace is treated as a run of single-character generators.
/// `1` and the empty string denote the identity.
Word parse_word(std::string_view text, const std::vector<std::string>& alphabet = {});

}  // namespace artin
