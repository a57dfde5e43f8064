#include "artin/garside.hpp"

#include "artin/errors.hpp"

namespace artin {

namespace {

void check_label(int m) {
  if (m < 2) throw InvalidInput("dihedral label must be >= 2, got " + std::to_string(m));
}

int letter_index(const Letter& l, const std::string& a, const std::string& b) {
  if (l.gen == a) return 0;
  if (l.gen == b) return 1;
  throw InvalidInput("letter '" + l.gen + "' is not one of the dihedral generators " + a + ", " + b);
}

}  // namespace

GarsideNF garside_nf(int m, const Word& w, const std::string& a, const std::string& b) {
  check_label(m);
  const bool odd = m % 2 == 1;

  // Pass 1: w = Delta^p * X with X positive. Inverse letters become
  // Delta^-1 (Delta g^-1); Delta^-1 moves left past earlier letters through
  // the flip, applied lazily: the true letter is stored ^ flip.
  int p = 0;
  int flip = 0;
  std::vector<int> stored;
  stored.reserve(w.size() * static_cast<std::size_t>(m));
  for (const auto& l : w) {
    const int g = letter_index(l, a, b);
    if (l.exp > 0) {
      stored.push_back(g ^ flip);
      continue;
    }
    --p;
    if (odd) flip ^= 1;
    // Delta g^-1: length m - 1, last letter differs from g.
    const int last = 1 - g;
    const int first = (m - 1) % 2 == 1 ? last : 1 - last;
    for (int k = 0; k < m - 1; ++k) stored.push_back(((k % 2 == 0) ? first : 1 - first) ^ flip);
  }

  // Pass 2: left normal form of the positive part, one letter at a time.
  // Completing a Delta moves it to the front, flipping the simples before it.
  int q = 0;
  int sflip = 0;  // true first letter = stored first ^ sflip
  std::vector<Simple> simples;
  for (const int raw : stored) {
    const int x = raw ^ flip;
    if (!simples.empty()) {
      Simple& s = simples.back();
      const Simple actual{s.first ^ sflip, s.length};
      if (actual.last() != x) {
        if (++s.length == m) {
          simples.pop_back();
          ++q;
          if (odd) sflip ^= 1;
        }
        continue;
      }
    }
    simples.push_back({x ^ sflip, 1});
  }
  GarsideNF nf{m, p + q, {}};
  nf.simples.reserve(simples.size());
  for (const auto& s : simples) nf.simples.push_back({s.first ^ sflip, s.length});
  return nf;
}

bool dihedral_commutes(int m, const Word& u, const Word& v, const std::string& a,
                       const std::string& b) {
  return garside_nf(m, commutator(u, v), a, b).is_identity();
}

int hn_coset(int n, const Word& w, const std::string& a, const std::string& b) {
  if (n < 1) throw InvalidInput("coset modulus must be >= 1");
  int sum = 0;
  for (const auto& l : w)
    if (letter_index(l, a, b) == 1) sum += l.exp;
  return ((sum % n) + n) % n;
}

Word simple_word(const Simple& s, const std::string& a, const std::string& b) {
  const std::string& f = s.first == 0 ? a : b;
  const std::string& o = s.first == 0 ? b : a;
  return alternating_word(f, o, s.length);
}

Word nf_word(const GarsideNF& nf, const std::string& a, const std::string& b) {
  Word out = power(alternating_word(a, b, nf.m), nf.delta_power);
  for (const auto& s : nf.simples) out *= simple_word(s, a, b);
  return out;
}

std::string render(const GarsideNF& nf, const std::string& a, const std::string& b) {
  std::string out = "Δ^" + std::to_string(nf.delta_power);
  for (const auto& s : nf.simples) out += " · " + to_text(simple_word(s, a, b));
  return out;
}

std::string nf_key(const GarsideNF& nf, const std::string& a, const std::string& b) {
  std::string out = "D" + std::to_string(nf.delta_power) + ":";
  for (std::size_t i = 0; i < nf.simples.size(); ++i) {
    if (i) out += '.';
    out += to_text(simple_word(nf.simples[i], a, b));
  }
  return out;
}

}  // namespace artin
