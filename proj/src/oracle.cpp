#include "artin/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

#include "artin/errors.hpp"
#include "artin/garside.hpp"

namespace artin {

// ---------------------------------------------------------------------------
// GroupContext

GroupContext GroupContext::raag(ArtinGraph g) {
  auto gens = g.vertices();
  return GroupContext(RaagContext(std::move(g)), std::move(gens));
}

GroupContext GroupContext::clean(ArtinGraph g) {
  auto gens = g.vertices();
  return GroupContext(CleanContext(std::move(g)), std::move(gens));
}

GroupContext GroupContext::dihedral(int m) {
  if (m < 2) throw InvalidInput("dihedral label must be >= 2");
  return GroupContext(Dihedral{m}, {"a", "b"});
}

GroupContext GroupContext::for_graph(ArtinGraph g) {
  if (g.right_angled()) return raag(std::move(g));
  return clean(std::move(g));
}

GroupContext::Kind GroupContext::kind() const {
  switch (impl_.index()) {
    case 0: return Kind::Raag;
    case 1: return Kind::CleanArtin;
    default: return Kind::Dihedral;
  }
}

std::string_view GroupContext::kind_name() const {
  switch (kind()) {
    case Kind::Raag: return "raag";
    case Kind::CleanArtin: return "clean-artin";
    case Kind::Dihedral: return "dihedral";
  }
  return "?";
}

void GroupContext::validate(const Word& w) const {
  for (const auto& l : w)
    if (std::find(generators_.begin(), generators_.end(), l.gen) == generators_.end())
      throw InvalidInput("generator '" + l.gen + "' is not in the group context");
}

std::string GroupContext::normal_key(const Word& w) const {
  validate(w);
  if (const auto* r = std::get_if<RaagContext>(&impl_)) return to_text(raag_reduce(*r, w));
  if (const auto* c = std::get_if<CleanContext>(&impl_)) return artin::normal_key(*c, w);
  return nf_key(garside_nf(std::get<Dihedral>(impl_).m, w));
}

// ---------------------------------------------------------------------------
// Rational expressions

RationalExpr RationalExpr::word(const Word& w) {
  if (w.empty()) return epsilon();
  if (w.size() == 1) return letter(w[0]);
  std::vector<RationalExpr> parts;
  for (const auto& l : w) parts.push_back(letter(l));
  return concat(std::move(parts));
}

RationalExpr RationalExpr::alt(std::vector<RationalExpr> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  return {Op::Union, {}, std::move(parts)};
}

RationalExpr RationalExpr::concat(std::vector<RationalExpr> parts) {
  if (parts.empty()) return epsilon();
  if (parts.size() == 1) return std::move(parts.front());
  return {Op::Concat, {}, std::move(parts)};
}

RationalExpr RationalExpr::star(RationalExpr inner) { return {Op::Star, {}, {std::move(inner)}}; }

RationalExpr submonoid_expr(const std::vector<Word>& gens) {
  std::vector<RationalExpr> parts;
  for (const auto& g : gens) parts.push_back(RationalExpr::word(g));
  if (parts.empty()) return RationalExpr::epsilon();
  return RationalExpr::star(RationalExpr::alt(std::move(parts)));
}

namespace {

class RationalParser {
 public:
  RationalParser(std::string_view text, const std::vector<std::string>& alphabet)
      : s_(text), alphabet_(alphabet) {}

  RationalExpr parse() {
    auto e = parse_union();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("rational expression, offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static bool ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  RationalExpr parse_union() {
    std::vector<RationalExpr> parts{parse_concat()};
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == '|') {
      ++pos_;
      parts.push_back(parse_concat());
      skip_ws();
    }
    return RationalExpr::alt(std::move(parts));
  }

  RationalExpr parse_concat() {
    std::vector<RationalExpr> parts;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] == '|' || s_[pos_] == ')') break;
      auto items = parse_primary();
      skip_ws();
      while (pos_ < s_.size() && s_[pos_] == '*') {
        items.back() = RationalExpr::star(std::move(items.back()));
        ++pos_;
        skip_ws();
      }
      for (auto& it : items) parts.push_back(std::move(it));
    }
    if (parts.empty()) fail("empty alternative (use _ for the empty word)");
    return RationalExpr::concat(std::move(parts));
  }

  // One parenthesised group, epsilon, or an identifier run (several atoms;
  // postfix operators bind to the last one).
  std::vector<RationalExpr> parse_primary() {
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = parse_union();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return {std::move(inner)};
    }
    if (c == '_' && (pos_ + 1 >= s_.size() || !ident(s_[pos_ + 1]))) {
      ++pos_;
      return {RationalExpr::epsilon()};
    }
    if (!ident(c) || std::isdigit(static_cast<unsigned char>(c))) fail("expected an atom");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && ident(s_[pos_])) ++pos_;
    const std::string_view run = s_.substr(start, pos_ - start);
    std::vector<std::string> names;
    if (alphabet_.empty()) {
      for (char ch : run) {
        if (ch == '_' || std::isdigit(static_cast<unsigned char>(ch)))
          fail("'" + std::string(run) + "' is not a run of single-letter generators");
        names.emplace_back(1, ch);
      }
    } else {
      std::size_t i = 0;
      while (i < run.size()) {
        std::size_t best = 0;
        for (const auto& n : alphabet_)
          if (n.size() > best && run.substr(i, n.size()) == n) best = n.size();
        if (best == 0) throw InvalidInput("unknown generator in '" + std::string(run) + "'");
        names.emplace_back(run.substr(i, best));
        i += best;
      }
    }
    int exp = 1;
    if (pos_ < s_.size() && s_[pos_] == '\'') {
      exp = -1;
      ++pos_;
    } else if (s_.substr(pos_, 3) == "^-1") {
      exp = -1;
      pos_ += 3;
    }
    std::vector<RationalExpr> out;
    for (std::size_t k = 0; k < names.size(); ++k)
      out.push_back(RationalExpr::letter({names[k], k + 1 == names.size() ? exp : 1}));
    return out;
  }

  std::string_view s_;
  const std::vector<std::string>& alphabet_;
  std::size_t pos_ = 0;
};

std::string letter_text(const Letter& l) { return l.gen + (l.exp < 0 ? "'" : ""); }

int precedence(RationalExpr::Op op) {
  switch (op) {
    case RationalExpr::Op::Union: return 0;
    case RationalExpr::Op::Concat: return 1;
    default: return 2;
  }
}

std::string render_expr(const RationalExpr& e, int outer) {
  using Op = RationalExpr::Op;
  std::string out;
  switch (e.op) {
    case Op::Epsilon: return "_";
    case Op::Atom: return letter_text(e.atom);
    case Op::Star: return render_expr(e.children[0], 3) + "*";
    case Op::Union:
    case Op::Concat:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += e.op == Op::Union ? "|" : " ";
        out += render_expr(e.children[i], precedence(e.op) + 1);
      }
      break;
  }
  return precedence(e.op) < outer ? "(" + out + ")" : out;
}

// Thompson automaton. State ids are assigned in construction order.
struct Nfa {
  struct State {
    std::vector<int> eps;
    std::vector<std::pair<Letter, int>> moves;
  };
  std::vector<State> states;
  int start = 0;
  int accept = 0;

  int add() {
    states.emplace_back();
    return static_cast<int>(states.size()) - 1;
  }

  std::pair<int, int> build(const RationalExpr& e) {
    using Op = RationalExpr::Op;
    const int s = add();
    const int t = add();
    switch (e.op) {
      case Op::Epsilon: states[s].eps.push_back(t); break;
      case Op::Atom: states[s].moves.emplace_back(e.atom, t); break;
      case Op::Union:
        for (const auto& c : e.children) {
          const auto [cs, ct] = build(c);
          states[s].eps.push_back(cs);
          states[ct].eps.push_back(t);
        }
        break;
      case Op::Concat: {
        int cur = s;
        for (const auto& c : e.children) {
          const auto [cs, ct] = build(c);
          states[cur].eps.push_back(cs);
          cur = ct;
        }
        states[cur].eps.push_back(t);
        break;
      }
      case Op::Star: {
        const auto [cs, ct] = build(e.children[0]);
        states[s].eps.push_back(cs);
        states[s].eps.push_back(t);
        states[ct].eps.push_back(cs);
        states[ct].eps.push_back(t);
        break;
      }
    }
    return {s, t};
  }

  explicit Nfa(const RationalExpr& e) {
    const auto [s, t] = build(e);
    start = s;
    accept = t;
  }

  // Sorted epsilon closure.
  std::vector<int> closure(int from) const {
    std::vector<int> out;
    std::vector<bool> seen(states.size(), false);
    std::vector<int> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      out.push_back(x);
      for (int y : states[x].eps)
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool accepts(const Word& w) const {
    std::set<int> cur;
    for (int x : closure(start)) cur.insert(x);
    for (const auto& l : w) {
      std::set<int> next;
      for (int x : cur)
        for (const auto& [atom, y] : states[x].moves)
          if (atom == l)
            for (int z : closure(y)) next.insert(z);
      cur = std::move(next);
    }
    return cur.count(accept) > 0;
  }
};

void collect_atoms(const RationalExpr& e, std::vector<Word>& out) {
  if (e.op == RationalExpr::Op::Atom) out.push_back(Word{e.atom});
  for (const auto& c : e.children) collect_atoms(c, out);
}

void check_bound(int bound) {
  if (bound < 0) throw InvalidInput("search bound must be >= 0");
}

}  // namespace

RationalExpr parse_rational(std::string_view text, const std::vector<std::string>& alphabet) {
  return RationalParser(text, alphabet).parse();
}

std::string to_text(const RationalExpr& e) { return render_expr(e, 0); }

// ---------------------------------------------------------------------------
// Searches

MembershipResult member_submonoid(const GroupContext& ctx, const std::vector<Word>& gens,
                                  const Word& target, int bound) {
  check_bound(bound);
  for (const auto& g : gens) ctx.validate(g);
  const std::string goal = ctx.normal_key(target);

  struct Node {
    std::vector<std::size_t> factors;
    Word word;
  };
  MembershipResult result;
  result.bound = bound;
  const std::string identity = ctx.normal_key(Word{});
  std::unordered_set<std::string> seen{identity};
  std::vector<Node> frontier{Node{}};
  const Node* hit = nullptr;
  Node found;

  if (identity == goal) hit = &frontier.front();
  for (int depth = 1; depth <= bound && !hit && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    // Frontier is in lexicographic order of factorizations, so the first
    // time a key appears it carries the least shortest factorization.
    for (const auto& node : frontier) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Word w = node.word * gens[i];
        std::string key = ctx.normal_key(w);
        if (!seen.insert(key).second) continue;
        Node child{node.factors, std::move(w)};
        child.factors.push_back(i);
        if (key == goal && !hit) {
          found = child;
          hit = &found;
        }
        next.push_back(std::move(child));
      }
      if (hit) break;
    }
    frontier = std::move(next);
  }
  result.explored = seen.size();
  if (!hit) return result;

  Word product;
  for (auto i : hit->factors) product *= gens.at(i);
  if (ctx.normal_key(product) != goal)
    throw InternalContradiction("submonoid certificate does not evaluate to the target");
  result.outcome = MembershipResult::Outcome::Member;
  result.factorization = hit->factors;
  result.certificate = std::move(product);
  return result;
}

MembershipResult member_rational(const GroupContext& ctx, const RationalExpr& expr,
                                 const Word& target, int bound) {
  check_bound(bound);
  {
    std::vector<Word> atoms;
    collect_atoms(expr, atoms);
    for (const auto& a : atoms) ctx.validate(a);
  }
  const std::string goal = ctx.normal_key(target);
  const Nfa nfa(expr);

  struct Config {
    int state;
    std::string key;
    Word word;
  };
  MembershipResult result;
  result.bound = bound;
  std::set<std::pair<int, std::string>> seen;
  std::vector<Config> layer;
  const std::string identity = ctx.normal_key(Word{});
  for (int s : nfa.closure(nfa.start))
    if (seen.insert({s, identity}).second) layer.push_back({s, identity, {}});

  const Config* hit = nullptr;
  for (int len = 0;; ++len) {
    for (const auto& c : layer)
      if (c.state == nfa.accept && c.key == goal) {
        hit = &c;
        break;
      }
    if (hit || len == bound || layer.empty()) break;
    std::vector<Config> next;
    for (const auto& c : layer) {
      for (const auto& [atom, to] : nfa.states[c.state].moves) {
        Word w = c.word * Word{atom};
        const std::string key = ctx.normal_key(w);
        for (int s : nfa.closure(to))
          if (seen.insert({s, key}).second) next.push_back({s, key, w});
      }
    }
    layer = std::move(next);
  }
  result.explored = seen.size();
  if (!hit) return result;

  if (ctx.normal_key(hit->word) != goal || !nfa.accepts(hit->word))
    throw InternalContradiction("rational certificate is not an accepted word for the target");
  result.outcome = MembershipResult::Outcome::Member;
  result.certificate = hit->word;
  return result;
}

}  // namespace artin
