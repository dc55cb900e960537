#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "stableset/contraction.hpp"
#include "stableset/errors.hpp"
#include "stableset/io.hpp"
#include "stableset/oracle.hpp"
#include "stableset/solutions.hpp"

namespace py = pybind11;
using namespace stableset;

namespace {

using Members = std::vector<AltId>;

std::vector<Members> as_lists(const std::vector<AltSet>& sets) {
    std::vector<Members> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s.members());
    return out;
}

DecisionProblem make_problem(std::size_t n, const std::vector<Edge>& edges,
                             std::optional<std::vector<std::string>> labels) {
    for (const auto& [x, y] : edges) {
        if (x >= n || y >= n) throw py::index_error("edge endpoint out of range");
    }
    return DecisionProblem(Rel::from_pairs(n, edges), labels.value_or(std::vector<std::string>{}));
}

SociallyInterp interp_of(const std::string& name) {
    if (name == "restrict") return SociallyInterp::RestrictClosure;
    if (name == "closure") return SociallyInterp::ClosureOfRestriction;
    throw py::value_error("interp must be 'restrict' or 'closure'");
}

SchwartzMethod method_of(const std::string& name) {
    if (name == "condensation") return SchwartzMethod::Condensation;
    if (name == "deb") return SchwartzMethod::Deb;
    if (name == "brute") return SchwartzMethod::Brute;
    throw py::value_error("method must be 'condensation', 'deb' or 'brute'");
}

std::vector<Members> family(const DecisionProblem& p, const std::string& kind, const std::string& interp,
                            std::size_t max_n) {
    return as_lists(constructive_family(p, concept_from_string(kind), interp_of(interp), max_n).sorted_members());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Stable sets and dominance solutions for finite decision problems";

    py::register_exception<Error>(m, "StablesetError", PyExc_ValueError);

    py::class_<DecisionProblem>(m, "DecisionProblem")
        .def(py::init(&make_problem), py::arg("n"), py::arg("edges"), py::arg("labels") = py::none())
        .def_property_readonly("n", &DecisionProblem::size)
        .def_property_readonly("edges", [](const DecisionProblem& p) { return p.rel().pairs(); })
        .def_property_readonly("labels", &DecisionProblem::labels)
        .def("__eq__", [](const DecisionProblem& a, const DecisionProblem& b) { return a == b; })
        .def("__repr__", [](const DecisionProblem& p) {
            return "DecisionProblem(n=" + std::to_string(p.size()) + ", edges=" +
                   std::to_string(p.rel().pair_count()) + ")";
        });

    m.def("parse_instance", [](const std::string& text) { return parse_instance(text); }, py::arg("text"));
    m.def("serialize_instance", [](const DecisionProblem& p, const std::string& format) {
        return serialize_instance(p, format == "edgelist" ? InstanceFormat::EdgeList : InstanceFormat::Json);
    }, py::arg("problem"), py::arg("format") = "json");
    m.def("random_problem", &random_problem, py::arg("n"), py::arg("density"), py::arg("seed"),
          py::arg("tournament") = false);

    m.def("core", [](const DecisionProblem& p) { return core(p).members(); });
    m.def("schwartz_set", [](const DecisionProblem& p, const std::string& method) {
        return schwartz_set(p, method_of(method)).members();
    }, py::arg("problem"), py::arg("method") = "condensation");
    m.def("duggan_set", [](const DecisionProblem& p) { return duggan_set(p).members(); });

    m.def("contraction", [](const DecisionProblem& p) {
        const Contraction c = equipotence_classes(p);
        py::dict out;
        out["classes"] = as_lists(c.classes);
        out["cond"] = c.cond.pairs();
        out["maximal"] = maximal_components(c).indices;
        out["stable"] = condensation_stable_set(c);
        return out;
    });

    m.def("solutions", &family, py::arg("problem"), py::arg("concept"), py::arg("interp") = "restrict",
          py::arg("max_n") = 0,
          "Members of a solution family (vnm, gss, sss, mss, wss, ess), ascending by mask.");
    m.def("enumerate_solutions", [](const DecisionProblem& p, const std::string& kind,
                                    const std::string& interp, std::size_t max_n) {
        return as_lists(enumerate_solutions(p, concept_from_string(kind), interp_of(interp), max_n));
    }, py::arg("problem"), py::arg("concept"), py::arg("interp") = "restrict", py::arg("max_n") = 0);
    m.def("cross_verify", [](const DecisionProblem& p, const std::string& kind, const std::string& interp) {
        const VerificationReport r = cross_verify(p, concept_from_string(kind), interp_of(interp));
        py::dict out;
        out["pass"] = r.pass();
        out["oracle_count"] = r.oracle_count;
        out["constructive_count"] = r.constructive_count;
        out["oracle_only"] = as_lists(r.oracle_only);
        out["constructive_only"] = as_lists(r.constructive_only);
        return out;
    }, py::arg("problem"), py::arg("concept"), py::arg("interp") = "restrict");

    m.def("undominated_pairs", [](const DecisionProblem& p) {
        std::vector<py::tuple> out;
        for (const auto& pr : undominated_pairs(p)) {
            out.push_back(py::make_tuple(pr.generator.members(), pr.support.members(), pr.top_cycle));
        }
        return out;
    });
}
