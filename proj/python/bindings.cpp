#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "artin/cli.hpp"
#include "artin/decomposer.hpp"
#include "artin/detector.hpp"
#include "artin/elementary.hpp"
#include "artin/errors.hpp"
#include "artin/garside.hpp"
#include "artin/json_io.hpp"
#include "artin/oracle.hpp"
#include "artin/raag.hpp"
#include "artin/witness.hpp"

namespace py = pybind11;
using namespace artin;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Word word_arg(const std::string& text, const std::vector<std::string>& alphabet) {
  return parse_word(text, alphabet);
}

std::vector<Word> words_arg(const std::vector<std::string>& texts, const std::vector<std::string>& alphabet) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(parse_word(t, alphabet));
  return out;
}

}  // namespace

PYBIND11_MODULE(artinmem, m) {
  m.doc() = "Membership decidability for Artin groups";

  static py::exception<Error> error(m, "Error");
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<InvalidInput> invalid_input(m, "InvalidInput", error.ptr());
  static py::exception<UnsupportedContext> unsupported(m, "UnsupportedContext", error.ptr());
  static py::exception<PoisonousGraph> poisonous(m, "PoisonousGraph", unsupported.ptr());
  static py::exception<UnsupportedVerification> unsupported_verification(m, "UnsupportedVerification", error.ptr());
  static py::exception<InternalContradiction> contradiction(m, "InternalContradiction", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const InvalidInput& e) {
      py::set_error(invalid_input, e.what());
    } catch (const PoisonousGraph& e) {
      py::set_error(poisonous, e.what());
    } catch (const UnsupportedContext& e) {
      py::set_error(unsupported, e.what());
    } catch (const UnsupportedVerification& e) {
      py::set_error(unsupported_verification, e.what());
    } catch (const InternalContradiction& e) {
      py::set_error(contradiction, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<ArtinGraph>(m, "Graph")
      .def(py::init<>())
      .def_static("parse", &parse_graph, py::arg("text"))
      .def_static("load", &load_graph, py::arg("path"))
      .def("add_vertex", &ArtinGraph::add_vertex, py::arg("name"))
      .def("add_edge", py::overload_cast<std::string_view, std::string_view, int>(&ArtinGraph::add_edge),
           py::arg("u"), py::arg("v"), py::arg("label") = 2)
      .def_property_readonly("vertices", &ArtinGraph::vertices)
      .def("label", py::overload_cast<std::string_view, std::string_view>(&ArtinGraph::label, py::const_))
      .def("edges",
           [](const ArtinGraph& g) {
             std::vector<std::tuple<std::string, std::string, int>> out;
             for (const auto& e : g.edges()) out.emplace_back(g.name(e.u), g.name(e.v), e.label);
             return out;
           })
      .def("induced", [](const ArtinGraph& g, const VertexSet& s) { return induced_subgraph(g, s); })
      .def("serialize", &serialize_graph)
      .def("to_dot", &graph_to_dot, py::arg("highlight") = VertexSet{})
      .def("__len__", &ArtinGraph::size)
      .def("__eq__", &ArtinGraph::operator==)
      .def("__repr__", [](const ArtinGraph& g) {
        return "<Graph " + std::to_string(g.size()) + " vertices, " + std::to_string(g.edge_count()) + " edges>";
      });

  m.def(
      "find_forbidden",
      [](const ArtinGraph& g) -> py::object {
        const auto p = find_forbidden(g);
        return p ? to_py(to_json(*p)) : py::none();
      },
      py::arg("graph"));
  m.def("classify", [](const ArtinGraph& g) { return to_py(to_json(classify(g))); }, py::arg("graph"));
  m.def(
      "decompose",
      [](const ArtinGraph& g) {
        const auto t = decompose(g);
        return to_py(Json{{"description", tree_describe(t)}, {"tree", to_json(t)}});
      },
      py::arg("graph"));
  m.def(
      "witness",
      [](const ArtinGraph& g) {
        const auto p = find_forbidden(g);
        if (!p) throw UnsupportedContext("graph has no forbidden induced subgraph");
        return to_py(to_json(verify_witness(g, make_witness(g, *p))));
      },
      py::arg("graph"));

  m.def(
      "garside_nf",
      [](int mm, const std::string& w) { return to_py(to_json(garside_nf(mm, word_arg(w, {"a", "b"})))); },
      py::arg("m"), py::arg("word"));
  m.def(
      "dihedral_commutes",
      [](int mm, const std::string& u, const std::string& v) {
        return dihedral_commutes(mm, word_arg(u, {"a", "b"}), word_arg(v, {"a", "b"}));
      },
      py::arg("m"), py::arg("u"), py::arg("v"));
  m.def(
      "hn_coset", [](int n, const std::string& w) { return hn_coset(n, word_arg(w, {"a", "b"})); }, py::arg("n"),
      py::arg("word"));
  m.def(
      "raag_reduce",
      [](const ArtinGraph& g, const std::string& w) {
        const RaagContext ctx(g);
        return to_text(raag_reduce(ctx, word_arg(w, g.vertices())));
      },
      py::arg("graph"), py::arg("word"));
  m.def(
      "normal_key",
      [](const ArtinGraph& g, const std::string& w) {
        const CleanContext ctx(g);
        return normal_key(ctx, word_arg(w, g.vertices()));
      },
      py::arg("graph"), py::arg("word"));

  py::class_<GroupContext>(m, "GroupContext")
      .def_static("raag", &GroupContext::raag)
      .def_static("clean", &GroupContext::clean)
      .def_static("dihedral", &GroupContext::dihedral)
      .def_static("for_graph", &GroupContext::for_graph)
      .def_property_readonly("kind", [](const GroupContext& c) { return std::string(c.kind_name()); })
      .def_property_readonly("generators", &GroupContext::generators)
      .def("normal_key",
           [](const GroupContext& c, const std::string& w) { return c.normal_key(word_arg(w, c.generators())); })
      .def("equal", [](const GroupContext& c, const std::string& u, const std::string& v) {
        return c.equal(word_arg(u, c.generators()), word_arg(v, c.generators()));
      });

  m.def(
      "member_submonoid",
      [](const GroupContext& c, const std::vector<std::string>& gens, const std::string& target, int bound) {
        return to_py(to_json(member_submonoid(c, words_arg(gens, c.generators()), word_arg(target, c.generators()),
                                              bound)));
      },
      py::arg("context"), py::arg("generators"), py::arg("target"), py::arg("bound") = 10);
  m.def(
      "member_rational",
      [](const GroupContext& c, const std::string& expr, const std::string& target, int bound) {
        return to_py(to_json(member_rational(c, parse_rational(expr, c.generators()),
                                             word_arg(target, c.generators()), bound)));
      },
      py::arg("context"), py::arg("expression"), py::arg("target"), py::arg("bound") = 10);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
