// Python extension: parsed ideals plus the main operations. Reports come back
// as JSON text and are decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monideal/decomposition.hpp"
#include "monideal/hypergraph.hpp"
#include "monideal/ntf.hpp"
#include "monideal/polarization.hpp"
#include "monideal/report_json.hpp"
#include "monideal/text.hpp"

namespace py = pybind11;
using namespace monideal;

namespace {

/// An ideal together with the names it was written in.
struct PyIdeal {
  MonomialIdeal ideal;
  VarNames names;

  PyIdeal derived(MonomialIdeal i) const { return {std::move(i), names}; }
};

PyIdeal parse(const std::string& text, const std::string& format) {
  ParsedInput in;
  if (format == "auto") in = parse_input(text);
  else if (format == "edge-list") in = parse_edge_list(text);
  else if (format == "ideal-expr") in = parse_ideal_expr(text);
  else throw UsageError("format must be auto, edge-list or ideal-expr");
  return {std::move(in.ideal), std::move(in.names)};
}

Monomial monomial_in(const PyIdeal& base, const std::string& text) {
  ParsedInput m = parse_ideal_expr("(" + text + ")");
  if (m.ideal.size() != 1) throw UsageError("expected a single monomial, got '" + text + "'");
  std::vector<Exponent> e(base.ideal.ring_dim(), 0);
  const Monomial& g = m.ideal.generators().front();
  for (VarId v = 0; v < g.dim(); ++v) {
    if (g[v] == 0) continue;
    auto idx = base.names.find(m.names.name(v));
    if (!idx) throw UsageError("unknown variable '" + m.names.name(v) + "'");
    e[*idx] = g[v];
  }
  return Monomial(std::move(e));
}

std::vector<std::vector<std::string>> prime_names(const std::vector<MonomialPrime>& primes, const VarNames& names) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : primes) {
    std::vector<std::string> vars;
    p.vars().for_each([&](VarId v) { vars.push_back(names.name(v)); });
    out.push_back(std::move(vars));
  }
  return out;
}

Hypergraph graph_of(const PyIdeal& i) {
  if (!i.ideal.is_square_free() || !i.ideal.is_proper())
    throw UsageError("a square-free proper ideal is required");
  return hypergraph_of(i.ideal);
}

AnalysisConfig config_of(std::optional<int> bound, const std::string& rule, const Budget& budget) {
  AnalysisConfig c;
  c.budget = budget;
  c.bound = bound;
  if (rule == "half") c.rule = BoundRule::HalfDimension;
  else if (rule == "beta-star") c.rule = BoundRule::BetaStarPlusOne;
  else throw UsageError("rule must be half or beta-star");
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Square-free monomial ideals, their powers and associated primes";
  m.attr("SCHEMA_VERSION") = schema_version();

  auto usage = py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", usage.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ArithmeticError>(m, "ExponentOverflowError", PyExc_OverflowError);

  py::class_<Budget>(m, "Budget")
      .def(py::init<>())
      .def_readwrite("max_box", &Budget::max_box)
      .def_readwrite("max_power", &Budget::max_power)
      .def_readwrite("max_minors", &Budget::max_minors)
      .def_readwrite("max_split_nodes", &Budget::max_split_nodes);

  py::class_<PyIdeal>(m, "Ideal")
      .def(py::init(&parse), py::arg("text"), py::arg("format") = "auto")
      .def_property_readonly("ring_dim", [](const PyIdeal& i) { return i.ideal.ring_dim(); })
      .def_property_readonly("variables", [](const PyIdeal& i) { return i.names.names(); })
      .def_property_readonly("generators",
                             [](const PyIdeal& i) {
                               std::vector<std::vector<Exponent>> out;
                               for (const auto& g : i.ideal.generators()) out.emplace_back(g.exponents().begin(), g.exponents().end());
                               return out;
                             })
      .def_property_readonly("is_square_free", [](const PyIdeal& i) { return i.ideal.is_square_free(); })
      .def("__len__", [](const PyIdeal& i) { return i.ideal.size(); })
      .def("__eq__", [](const PyIdeal& a, const PyIdeal& b) { return a.ideal == b.ideal; })
      .def("__str__", [](const PyIdeal& i) { return to_string(i.ideal, i.names); })
      .def("__repr__", [](const PyIdeal& i) { return "Ideal('" + to_string(i.ideal, i.names) + "')"; })
      .def("contains", [](const PyIdeal& i, const std::string& mono) { return i.ideal.contains(monomial_in(i, mono)); })
      .def("to_json", [](const PyIdeal& i) { return input_json(i.ideal, i.names).dump(); });

  m.def("power", [](const PyIdeal& i, int t) {
    if (t < 1) throw UsageError("power must be positive");
    return i.derived(power(i.ideal, t));
  }, py::arg("ideal"), py::arg("t"));
  m.def("symbolic_power", [](const PyIdeal& i, int t) {
    if (t < 1) throw UsageError("power must be positive");
    return i.derived(symbolic_power(i.ideal, t));
  }, py::arg("ideal"), py::arg("t"));
  m.def("colon", [](const PyIdeal& i, const std::string& by) { return i.derived(colon(i.ideal, monomial_in(i, by))); },
        py::arg("ideal"), py::arg("by"));
  m.def("radical", [](const PyIdeal& i) { return i.derived(radical(i.ideal)); }, py::arg("ideal"));

  m.def("associated_primes",
        [](const PyIdeal& i, bool oracle, const Budget& b) {
          AssResult r = oracle ? ass_witness_oracle(i.ideal, b) : associated_primes(i.ideal, b);
          return prime_names(r.primes, i.names);
        },
        py::arg("ideal"), py::arg("oracle") = false, py::arg("budget") = Budget{});
  m.def("minimal_primes", [](const PyIdeal& i) { return prime_names(minimal_primes(i.ideal), i.names); },
        py::arg("ideal"));

  m.def("konig", [](const PyIdeal& i) { return konig(graph_of(i)); }, py::arg("ideal"));
  m.def("packing", [](const PyIdeal& i, const Budget& b) { return packing(graph_of(i), b.max_minors).holds; },
        py::arg("ideal"), py::arg("budget") = Budget{});

  m.def("_polarize", [](const PyIdeal& i, int t, const Budget& b) {
    return to_json(faridi_correspondence(i.ideal, t, b), i.names).dump();
  }, py::arg("ideal"), py::arg("t") = 1, py::arg("budget") = Budget{});
  m.def("_ntf", [](const PyIdeal& i, std::optional<int> bound, const std::string& rule, const Budget& b) {
    graph_of(i);
    int n = bound ? *bound : default_bound(i.ideal, config_of({}, rule, b).rule, b);
    return to_json(ntf_verdict(i.ideal, n, b), support_maximal(i.ideal), i.names).dump();
  }, py::arg("ideal"), py::arg("bound") = py::none(), py::arg("rule") = "half", py::arg("budget") = Budget{});
  m.def("_analyze", [](const PyIdeal& i, std::optional<int> bound, const std::string& rule, const Budget& b) {
    return to_json(analyze(i.ideal, config_of(bound, rule, b)), i.names).dump();
  }, py::arg("ideal"), py::arg("bound") = py::none(), py::arg("rule") = "half", py::arg("budget") = Budget{});
  m.def("_envelope", [](const std::string& command, const PyIdeal& i, const std::string& result) {
    return envelope(command, input_json(i.ideal, i.names), Json::parse(result)).dump();
  });
}
