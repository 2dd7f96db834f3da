#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fungraph/algebra.hpp"
#include "fungraph/canonical.hpp"
#include "fungraph/division.hpp"
#include "fungraph/dot.hpp"
#include "fungraph/enumerate.hpp"
#include "fungraph/parser.hpp"
#include "fungraph/report_json.hpp"
#include "fungraph/witness.hpp"

namespace py = pybind11;
using namespace fungraph;

namespace {

std::string tristate_str(Tristate t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

EnumStrategy strategy_from(const std::string& name) {
  if (name == "constructive") return EnumStrategy::constructive;
  if (name == "brute-force") return EnumStrategy::brute_force;
  throw std::invalid_argument("strategy must be 'constructive' or 'brute-force'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semiring of functional digraphs: sums, direct products, canonical forms,\n"
            "divisibility search, and verified non-primality witnesses.";

  py::class_<FunctionalDigraph>(m, "Digraph")
      .def(py::init([](std::vector<Vertex> succ) {
             return FunctionalDigraph::from_successors(std::move(succ));
           }),
           py::arg("successors"),
           "Build a functional digraph from its successor list.")
      .def_property_readonly("successors",
                             [](const FunctionalDigraph& g) { return g.successors(); })
      .def("__len__", &FunctionalDigraph::size)
      .def("__call__", &FunctionalDigraph::at, py::arg("vertex"))
      .def("__eq__", [](const FunctionalDigraph& a, const FunctionalDigraph& b) { return a == b; })
      .def("__hash__",
           [](const FunctionalDigraph& g) {
             return py::hash(py::tuple(py::cast(g.successors())));
           })
      .def("__add__", [](const FunctionalDigraph& a, const FunctionalDigraph& b) { return sum(a, b); })
      .def("__mul__",
           [](const FunctionalDigraph& a, const FunctionalDigraph& b) { return product(a, b); })
      .def("__rmul__", [](const FunctionalDigraph& a, int k) { return scalar(k, a); })
      .def("__str__", [](const FunctionalDigraph& g) { return to_literal(g); })
      .def("__repr__",
           [](const FunctionalDigraph& g) { return "Digraph(" + to_literal(g) + ")"; });

  py::class_<Component>(m, "Component")
      .def_readonly("digraph", &Component::digraph)
      .def_readonly("cycle_len", &Component::cycle_len)
      .def_readonly("cycle", &Component::cycle)
      .def_readonly("members", &Component::members);

  py::class_<HeightProfile>(m, "HeightProfile")
      .def_readonly("fixed_point", &HeightProfile::fixed_point)
      .def_readonly("depth", &HeightProfile::depth)
      .def_readonly("height", &HeightProfile::height);

  py::class_<QuotientSet>(m, "QuotientSet")
      .def_readonly("quotients", &QuotientSet::quotients)
      .def_readonly("exhaustive", &QuotientSet::exhaustive)
      .def_readonly("candidates_checked", &QuotientSet::candidates_checked);

  py::class_<WitnessReport>(m, "WitnessReport")
      .def_property_readonly("branch",
                             [](const WitnessReport& r) { return std::string(to_string(r.branch)); })
      .def_readonly("subject", &WitnessReport::subject)
      .def_readonly("factor_a", &WitnessReport::factor_a)
      .def_readonly("factor_b", &WitnessReport::factor_b)
      .def_readonly("cofactor", &WitnessReport::cofactor)
      .def_readonly("verified", &WitnessReport::verified)
      .def_property_readonly("iso",
                             [](const WitnessReport& r) -> py::object {
                               if (!r.iso) return py::none();
                               return py::cast(r.iso->forward);
                             })
      .def("to_json", [](const WitnessReport& r, int indent) { return report_to_json(r, indent); },
           py::arg("indent") = 2);

  m.def("parse", [](const std::string& text) { return eval(text); }, py::arg("expression"),
        "Evaluate an expression like 'C2*C2', '2C1 + [0,0]' to a Digraph.");
  m.def("literal", &parse_literal, py::arg("text"), "Parse a '[s0,s1,...]' literal.");
  m.def("to_literal", &to_literal, py::arg("digraph"));
  m.def("to_dot", &to_dot, py::arg("digraph"), py::arg("name") = "fd");

  m.def("canonical_code",
        [](const FunctionalDigraph& g) { return canonical_form(g).code; }, py::arg("digraph"),
        "Total-order code; two digraphs are isomorphic iff their codes are equal.");
  m.def("canonical_representative", &canonical_representative, py::arg("digraph"));
  m.def("is_isomorphic", &is_isomorphic, py::arg("a"), py::arg("b"));
  m.def("check_iso_map",
        [](const FunctionalDigraph& a, const FunctionalDigraph& b, std::vector<Vertex> forward) {
          return check_iso_map(a, b, IsoMap{std::move(forward)});
        },
        py::arg("a"), py::arg("b"), py::arg("forward"));

  m.def("components", &fungraph::components, py::arg("digraph"));
  m.def("cyclic_part", [](const FunctionalDigraph& g) { return cyclic_part(g).lengths; },
        py::arg("digraph"), "Multiset of cycle lengths, ascending.");
  m.def("height_profile", &height_profile, py::arg("digraph"));
  m.def("truncate", &fungraph::truncate, py::arg("digraph"), py::arg("depth"));
  m.def("iterate", &fungraph::iterate, py::arg("digraph"), py::arg("vertex"), py::arg("steps"));

  m.def("cycle", &cycle, py::arg("length"));
  m.def("disjoint_sum", &fungraph::sum, py::arg("a"), py::arg("b"));
  m.def("product", &product, py::arg("a"), py::arg("b"));
  m.def("scalar", &scalar, py::arg("copies"), py::arg("digraph"));
  m.def("cycle_product",
        [](int a, int b) { return cycle_product(a, b).lengths; }, py::arg("a"), py::arg("b"));

  m.def("enumerate_digraphs",
        [](int size, bool connected, std::optional<int> cycle_len, const std::string& strategy) {
          EnumFilter f{size, connected, cycle_len};
          return all_digraphs(f, strategy_from(strategy));
        },
        py::arg("size"), py::arg("connected") = false, py::arg("cycle_len") = py::none(),
        py::arg("strategy") = "constructive");
  m.def("count_digraphs",
        [](int size, const std::string& strategy) {
          return count_digraphs(size, strategy_from(strategy));
        },
        py::arg("size"), py::arg("strategy") = "constructive");

  m.def("divides",
        [](const FunctionalDigraph& x, const FunctionalDigraph& a, int bound) {
          return tristate_str(divides(x, a, bound));
        },
        py::arg("divisor"), py::arg("dividend"), py::arg("bound") = kDefaultDivisionBound,
        "'yes', 'no', or 'unknown' (bound exceeded).");
  m.def("quotients", &quotients, py::arg("divisor"), py::arg("dividend"),
        py::arg("bound") = kDefaultDivisionBound);
  m.def("is_irreducible",
        [](const FunctionalDigraph& x, int bound) { return tristate_str(is_irreducible(x, bound)); },
        py::arg("digraph"), py::arg("bound") = kDefaultDivisionBound);

  m.def("trajectory_class_count", &trajectory_class_count, py::arg("digraph"), py::arg("depth"),
        "Classes of depth-limited vertices under (depth-1)-fold iteration.");
  m.def("build_witness", &build_witness, py::arg("digraph"),
        py::arg("bound") = kDefaultDivisionBound,
        "Construct and verify (a, b, y) with x*y isomorphic to a*b and x dividing neither.");
  m.def("verify_witness", &verify_witness, py::arg("report"),
        py::arg("bound") = kDefaultDivisionBound);

  py::register_exception<WitnessError>(m, "WitnessError");
  py::register_exception<ParseError>(m, "ExpressionError");

  m.attr("__version__") = "0.1.0";
}
