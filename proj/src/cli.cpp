#include "artin/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <sstream>

#include "artin/decomposer.hpp"
#include "artin/detector.hpp"
#include "artin/elementary.hpp"
#include "artin/errors.hpp"
#include "artin/garside.hpp"
#include "artin/json_io.hpp"
#include "artin/oracle.hpp"
#include "artin/raag.hpp"
#include "artin/witness.hpp"

namespace artin {

namespace {

enum class Format { Json, Text, Dot };

struct FormatFlags {
  bool json = false;
  bool text = false;
  bool dot = false;

  void attach(CLI::App* app, bool allow_dot, bool text_default = false) {
    app->add_flag("--json", json, text_default ? "JSON output" : "JSON output (default)");
    app->add_flag("--text", text, text_default ? "plain text output (default)" : "plain text output");
    if (allow_dot) app->add_flag("--dot", dot, "Graphviz output");
  }

  Format resolve() const {
    if (json + text + dot > 1) throw CLI::ValidationError("choose one of --json, --text, --dot");
    if (text) return Format::Text;
    if (dot) return Format::Dot;
    return Format::Json;
  }
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

std::string join_ints(const std::vector<int>& xs) {
  std::vector<std::string> s;
  for (int x : xs) s.push_back(std::to_string(x));
  return join(s, ",");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_analyze(const std::string& path, Format fmt, std::ostream& out) {
  const auto g = load_graph(path);
  const auto v = classify(g);
  switch (fmt) {
    case Format::Json: emit_json(out, to_json(v)); break;
    case Format::Dot: {
      VertexSet marked;
      if (const auto* p = std::get_if<ForbiddenPattern>(&v.evidence)) marked = p->vertices;
      out << graph_to_dot(g, marked);
      break;
    }
    case Format::Text:
      out << "rational_subset: " << to_string(v.rational_subset) << '\n'
          << "submonoid: " << to_string(v.submonoid) << '\n'
          << "subgroup_separable: " << to_string(v.subgroup_separable) << '\n';
      if (const auto* p = std::get_if<ForbiddenPattern>(&v.evidence)) {
        out << "evidence: " << to_string(p->kind) << " on " << join(p->vertices, ",");
        if (!p->labels.empty()) out << " labels " << join_ints(p->labels);
        out << '\n';
      } else {
        out << "evidence: " << tree_describe(std::get<DecompositionTree>(v.evidence)) << '\n';
      }
      for (const auto& n : v.notes) out << "note: " << n << '\n';
      break;
  }
  return kExitOk;
}

int cmd_decompose(const std::string& path, Format fmt, std::ostream& out) {
  const auto t = decompose(load_graph(path));
  switch (fmt) {
    case Format::Json: emit_json(out, Json{{"description", tree_describe(t)}, {"tree", to_json(t)}}); break;
    case Format::Text: out << tree_describe(t) << '\n'; break;
    case Format::Dot: out << tree_to_dot(t); break;
  }
  return kExitOk;
}

int cmd_witness(const std::string& path, Format fmt, std::ostream& out) {
  const auto g = load_graph(path);
  const auto pat = find_forbidden(g);
  if (!pat)
    throw UnsupportedContext("graph has no forbidden induced subgraph; there is no poisonous witness");
  const auto r = verify_witness(g, make_witness(g, *pat));
  if (fmt == Format::Json) {
    emit_json(out, to_json(r));
    return kExitOk;
  }
  out << to_string(r.pattern.kind) << " on " << join(r.pattern.vertices, ",") << " -> A("
      << to_string(r.target) << ")\n";
  for (std::size_t i = 0; i < r.assignment.size(); ++i)
    out << "  t" << i << " = " << r.assignment[i].first << " = " << to_text(r.assignment[i].second)
        << '\n';
  for (const auto& c : r.checks) {
    out << "  [t" << c.first << ", t" << c.second << "] = 1 in <" << join(c.support, ",") << ">";
    if (c.label) out << " (label " << c.label << ")";
    out << " via " << c.method << ": " << (c.verified ? "ok" : "FAILED") << '\n';
  }
  out << "verified: " << (r.verified ? "yes" : "no") << '\n' << "cite: " << r.citation << '\n';
  return kExitOk;
}

struct NfArgs {
  int dihedral = 0;
  std::string raag;
  std::string artin;
  std::string word;
};

int cmd_nf(const NfArgs& a, Format fmt, std::ostream& out) {
  const int modes = (a.dihedral != 0) + !a.raag.empty() + !a.artin.empty();
  if (modes != 1) throw CLI::ValidationError("nf needs exactly one of --dihedral, --raag, --artin");
  if (a.dihedral != 0) {
    const auto nf = garside_nf(a.dihedral, parse_word(a.word, {"a", "b"}));
    if (fmt == Format::Json)
      emit_json(out, to_json(nf));
    else
      out << render(nf) << '\n';
    return kExitOk;
  }
  if (!a.raag.empty()) {
    const RaagContext ctx(load_graph(a.raag));
    const auto w = raag_reduce(ctx, parse_word(a.word, ctx.graph().vertices()));
    if (fmt == Format::Json)
      emit_json(out, Json{{"normal_form", to_text(w)}, {"length", w.size()}});
    else
      out << to_text(w) << '\n';
    return kExitOk;
  }
  const auto g = load_graph(a.artin);
  if (const auto pat = find_forbidden(g)) {
    throw UnsupportedContext("graph contains a forbidden " + std::string(to_string(pat->kind)) +
                             " on {" + join(pat->vertices, ",") +
                             "}; no word problem solver for it here (run `analyze` for details)");
  }
  const CleanContext ctx(g);
  const auto key = normal_key(ctx, parse_word(a.word, g.vertices()));
  if (fmt == Format::Json)
    emit_json(out, Json{{"normal_key", key}, {"decomposition", tree_describe(ctx.tree())}});
  else
    out << key << '\n';
  return kExitOk;
}

struct MemberArgs {
  std::string graph;
  int dihedral = 0;
  std::string gens;
  std::string regex;
  std::string target;
  int bound = 10;
};

int cmd_member(const MemberArgs& a, Format fmt, std::ostream& out) {
  if ((a.dihedral != 0) == !a.graph.empty())
    throw CLI::ValidationError("member needs exactly one of --graph, --dihedral");
  if (a.gens.empty() == a.regex.empty())
    throw CLI::ValidationError("member needs exactly one of --gens, --regex");
  const GroupContext ctx =
      a.dihedral != 0 ? GroupContext::dihedral(a.dihedral) : GroupContext::for_graph(load_graph(a.graph));
  const auto& alphabet = ctx.generators();
  const Word target = parse_word(a.target, alphabet);
  MembershipResult r;
  Json query;
  if (!a.gens.empty()) {
    std::vector<Word> gens;
    std::vector<std::string> shown;
    for (const auto& s : split_list(a.gens)) {
      gens.push_back(parse_word(s, alphabet));
      shown.push_back(to_text(gens.back()));
    }
    r = member_submonoid(ctx, gens, target, a.bound);
    query = Json{{"problem", "submonoid"}, {"generators", shown}};
  } else {
    const auto expr = parse_rational(a.regex, alphabet);
    r = member_rational(ctx, expr, target, a.bound);
    query = Json{{"problem", "rational"}, {"expression", to_text(expr)}};
  }
  if (fmt == Format::Json) {
    Json j = to_json(r);
    query["context"] = ctx.kind_name();
    query["target"] = to_text(target);
    j["query"] = std::move(query);
    emit_json(out, j);
  } else {
    out << (r.member() ? "member" : "unknown") << '\n';
    if (r.member()) {
      out << "certificate: " << to_text(r.certificate) << '\n';
      if (r.factorization) {
        std::vector<int> f(r.factorization->begin(), r.factorization->end());
        out << "factorization: " << join_ints(f) << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide submonoid and rational subset membership decidability for Artin groups",
               "artinmem"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "artinmem 0.1.0");

  std::string graph_path;
  FormatFlags analyze_fmt, decompose_fmt, witness_fmt, nf_fmt, member_fmt;

  auto* analyze = app.add_subcommand("analyze", "classify an Artin graph");
  analyze->add_option("graph", graph_path, "graph file")->required();
  analyze_fmt.attach(analyze, true);

  auto* decomp = app.add_subcommand("decompose", "elementary decomposition of a clean graph");
  decomp->add_option("graph", graph_path, "graph file")->required();
  decompose_fmt.attach(decomp, true);

  auto* witness = app.add_subcommand("witness", "verified poisonous subgroup for a forbidden pattern");
  witness->add_option("graph", graph_path, "graph file")->required();
  witness_fmt.attach(witness, false);

  NfArgs nf_args;
  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("--dihedral", nf_args.dihedral, "dihedral label m (generators a, b)")
      ->check(CLI::Range(2, 1 << 20));
  nf->add_option("--raag", nf_args.raag, "right-angled graph file");
  nf->add_option("--artin", nf_args.artin, "clean Artin graph file");
  nf->add_option("word", nf_args.word, "word, e.g. \"a b' a\"")->required();
  nf_fmt.attach(nf, false, true);

  MemberArgs member_args;
  auto* member = app.add_subcommand("member", "bounded membership search");
  member->add_option("--graph", member_args.graph, "graph file");
  member->add_option("--dihedral", member_args.dihedral, "dihedral label m")->check(CLI::Range(2, 1 << 20));
  member->add_option("--gens", member_args.gens, "comma separated generator words");
  member->add_option("--regex", member_args.regex, "rational expression");
  member->add_option("--target", member_args.target, "target word")->required();
  member->add_option("--bound", member_args.bound, "search bound")->check(CLI::NonNegativeNumber);
  member_fmt.attach(member, false);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(graph_path, analyze_fmt.resolve(), out);
    if (decomp->parsed()) return cmd_decompose(graph_path, decompose_fmt.resolve(), out);
    if (witness->parsed()) return cmd_witness(graph_path, witness_fmt.resolve(), out);
    if (nf->parsed()) {
      // nf defaults to text; --json switches to structured output.
      const Format fmt = nf_fmt.resolve() == Format::Json && nf_fmt.json ? Format::Json : Format::Text;
      return cmd_nf(nf_args, fmt, out);
    }
    if (member->parsed()) return cmd_member(member_args, member_fmt.resolve(), out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UnsupportedContext& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const UnsupportedVerification& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const InternalContradiction& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace artin
