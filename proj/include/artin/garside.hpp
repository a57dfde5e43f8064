#pragma once

#include <string>
#include <vector>

#include "artin/word.hpp"

namespace artin {

/// A simple element of the dihedral Artin monoid of type m: the alternating
/// word of length `length` starting with generator `first` (0 = a, 1 = b).
/// Length 0 is the identity and length m is the Garside element.
struct Simple {
  int first = 0;
  int length = 0;

  int last() const { return length % 2 == 1 ? first : 1 - first; }
  bool operator==(const Simple&) const = default;
};

/// Left-weighted normal form Delta^p s_1 ... s_r of an element of D_m.
/// The s_i are proper simples and last(s_i) == first(s_{i+1}).
struct GarsideNF {
  int m = 2;
  int delta_power = 0;
  std::vector<Simple> simples;

  bool is_identity() const { return delta_power == 0 && simples.empty(); }
  bool operator==(const GarsideNF&) const = default;
};

/// Normal form of w in D_m = <a, b | (a,b)_m = (b,a)_m>.
/// Throws InvalidInput for m < 2 or a letter outside {a, b}.
GarsideNF garside_nf(int m, const Word& w, const std::string& a = "a", const std::string& b = "b");

/// True iff u and v commute in D_m.
bool dihedral_commutes(int m, const Word& u, const Word& v, const std::string& a = "a",
                       const std::string& b = "b");

/// Image of w in Z/n under the coset map of D_{2n} whose kernel is
/// H_n = <x^n, a, x a x^-1, ...> with x = ab; equals the exponent sum of b
/// modulo n, as a residue in [0, n).
int hn_coset(int n, const Word& w, const std::string& a = "a", const std::string& b = "b");

/// Word spelled by a simple.
Word simple_word(const Simple& s, const std::string& a = "a", const std::string& b = "b");

/// Word for the whole normal form: Delta^p followed by the simples.
Word nf_word(const GarsideNF& nf, const std::string& a = "a", const std::string& b = "b");

/// "Δ^p · s1 · s2 ..." with simples spelled as alternating words.
std::string render(const GarsideNF& nf, const std::string& a = "a", const std::string& b = "b");

/// ASCII key "D<p>:s1.s2..." used for hashing and normal keys.
std::string nf_key(const GarsideNF& nf, const std::string& a = "a", const std::string& b = "b");

}  // namespace artin
