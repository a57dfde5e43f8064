#include "artin/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "artin/errors.hpp"
#include "artin/graph.hpp"

namespace artin {

Word& Word::operator*=(const Word& rhs) {
  letters.insert(letters.end(), rhs.letters.begin(), rhs.letters.end());
  return *this;
}

Word operator*(Word lhs, const Word& rhs) {
  lhs *= rhs;
  return lhs;
}

Word inverse(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(it->inverse());
  return out;
}

Word power(const Word& w, int k) {
  const Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

Word commutator(const Word& u, const Word& v) { return u * v * inverse(u) * inverse(v); }

Word gen_power(const std::string& gen, int k) {
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out.letters.push_back({gen, k > 0 ? 1 : -1});
  return out;
}

Word alternating_word(const std::string& u, const std::string& v, int m) {
  if (u == v) throw InvalidInput("alternating word needs two distinct generators");
  if (m < 0) throw InvalidInput("alternating word length must be non-negative");
  Word out;
  for (int i = 0; i < m; ++i) out.letters.push_back({i % 2 == 0 ? u : v, 1});
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().gen == l.gen && out.letters.back().exp == -l.exp)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

std::map<std::string, int> exponent_sums(const Word& w) {
  std::map<std::string, int> out;
  for (const auto& l : w.letters) out[l.gen] += l.exp;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

int exponent_sum(const Word& w, std::string_view gen) {
  int s = 0;
  for (const auto& l : w.letters)
    if (l.gen == gen) s += l.exp;
  return s;
}

Word restrict_to(const Word& w, const std::vector<std::string>& gens) {
  Word out;
  for (const auto& l : w.letters)
    if (std::find(gens.begin(), gens.end(), l.gen) != gens.end()) out.letters.push_back(l);
  return out;
}

std::vector<std::pair<Word, Word>> defining_relations(const ArtinGraph& g) {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& e : g.edges()) {
    const auto& u = g.name(e.u);
    const auto& v = g.name(e.v);
    out.emplace_back(alternating_word(u, v, e.label), alternating_word(v, u, e.label));
  }
  return out;
}

std::string to_text(const Word& w) {
  if (w.empty()) return "1";
  const bool compact =
      std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.gen.size() == 1; });
  std::string out;
  for (const auto& l : w.letters) {
    if (!compact && !out.empty()) out += ' ';
    out += l.gen;
    if (l.exp < 0) out += '\'';
  }
  return out;
}

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Splits an identifier run into generator names.
std::vector<std::string> split_run(std::string_view run, const std::vector<std::string>& alphabet,
                                   bool whole_token) {
  if (alphabet.empty()) {
    if (whole_token && run.size() > 1 && std::isdigit(static_cast<unsigned char>(run.back())) &&
        !std::isdigit(static_cast<unsigned char>(run.front()))) {
      // Names such as x1 stay whole when they stand alone.
      return {std::string(run)};
    }
    std::vector<std::string> out;
    for (char c : run) {
      if (std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("unexpected digit in word '" + std::string(run) + "'");
      out.emplace_back(1, c);
    }
    return out;
  }
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < run.size()) {
    std::size_t best = 0;
    for (const auto& name : alphabet)
      if (name.size() > best && run.substr(i, name.size()) == name) best = name.size();
    if (best == 0)
      throw InvalidInput("unknown generator in '" + std::string(run) + "' at offset " + std::to_string(i));
    out.emplace_back(run.substr(i, best));
    i += best;
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& alphabet) {
  Word out;
  std::size_t i = 0;
  const auto n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < n && text[i] == '1') {
    std::size_t j = i + 1;
    while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == n) return out;
  }
  while (true) {
    skip_ws();
    if (i >= n) break;
    if (!ident_char(text[i]) || std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in word");
    const std::size_t start = i;
    while (i < n && ident_char(text[i])) ++i;
    const std::string_view run = text.substr(start, i - start);
    const bool whole = i >= n || !ident_char(text[i]);
    auto gens = split_run(run, alphabet, whole);
    int exp = 1;
    if (i < n && text[i] == '\'') {
      exp = -1;
      ++i;
    } else if (i < n && text[i] == '^') {
      ++i;
      std::size_t j = i;
      if (j < n && (text[j] == '-' || text[j] == '+')) ++j;
      const std::size_t digits = j;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == digits) throw ParseError("expected an integer exponent after '^'");
      exp = std::stoi(std::string(text.substr(i, j - i)));
      i = j;
    }
    // A suffix binds to the last generator of the run only.
    for (std::size_t k = 0; k + 1 < gens.size(); ++k) out.letters.push_back({gens[k], 1});
    out *= gen_power(gens.back(), exp);
  }
  return out;
}

}  // namespace artin
