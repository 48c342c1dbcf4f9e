#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "phecke/center.hpp"
#include "phecke/character.hpp"
#include "phecke/coset.hpp"
#include "phecke/expr.hpp"
#include "phecke/hecke.hpp"
#include "phecke/verify.hpp"

#include <sstream>

namespace py = pybind11;
using namespace phecke;

namespace {

// One engine per process; the bindings are single-threaded.
CosetEngine& engine() {
    static CosetEngine e;
    return e;
}

struct PyElement {
    HeckeElement value;
    std::string str() const { return print_element(value); }
};

}  // namespace

PYBIND11_MODULE(phecke, m) {
    m.doc() = "Exact arithmetic in the paramodular Hecke algebra of prime level";

    py::class_<PyElement>(m, "Element")
        .def("__str__", &PyElement::str)
        .def("__repr__", [](const PyElement& e) { return "<Element " + e.str() + ">"; })
        .def("__mul__", [](const PyElement& a, const PyElement& b) {
            return PyElement{mul(a.value, b.value)};
        })
        .def("__add__", [](const PyElement& a, const PyElement& b) {
            return PyElement{a.value + b.value};
        })
        .def("__sub__", [](const PyElement& a, const PyElement& b) {
            return PyElement{a.value - b.value};
        })
        .def("__eq__", [](const PyElement& a, const PyElement& b) { return a.value == b.value; })
        .def("is_zero", [](const PyElement& e) { return e.value.is_zero(); })
        .def("degree", [](const PyElement& e) { return e.value.degree(); })
        .def("alpha", [](const PyElement& e) { return PyElement{e.value.alpha()}; })
        .def("beta", [](const PyElement& e) { return PyElement{e.value.beta()}; })
        .def("gk_project", [](const PyElement& e) { return PyElement{e.value.gk_project()}; });

    m.def("parse", [](const std::string& s) { return PyElement{parse_element(s, engine())}; },
          "Parse an element expression (monomial and coset atoms may be mixed)");
    m.def("to_coset", [](const PyElement& e) { return print_coset(monomial_to_coset(e.value)); },
          "Canonical rendering of an element in the double-coset basis");
    m.def("t_qk", [](int k) { return PyElement{engine().to_monomial(t_qk(k))}; },
          "Sum of all degree-k double cosets, as an element");
    m.def("rank", &hk_rank, "Rank of the degree-k graded piece");
    m.def("center_rank", &center_rank, "Rank of the degree-k piece of the center");
    m.def("is_central", [](const PyElement& e) { return is_central(e.value); });
    m.def("center_basis", [](int k) {
        std::vector<PyElement> out;
        for (auto& e : center_basis(k)) out.push_back(PyElement{std::move(e)});
        return out;
    });
    m.def("series_residual_zero",
          [](int kind, int eps, const std::string& lambda_text, int order) {
              const bool symbolic = (lambda_text == "lambda" || lambda_text == "symbolic");
              const MPoly lam = symbolic
                                    ? Character::symbolic_lambda()
                                    : MPoly::from_polyq(parse_polyq(lambda_text), VarSet::QL);
              Character chi = (kind == 1) ? Character::kind1(eps, lam) : Character::kind2(eps, lam);
              return series_certificate(chi, order, engine()).valid();
          },
          py::arg("kind"), py::arg("eps"), py::arg("lambda_text"), py::arg("order") = 10,
          "Whether Q*S - P vanishes identically up to the truncation order");
    m.def("index_table", [](int kmax) {
        std::vector<std::string> rows;
        for (int k = 0; k <= kmax; ++k) rows.push_back(index_closed_form(k).to_string());
        return rows;
    });
    m.def("verify", [] {
        std::ostringstream out;
        bool ok = run_verification(out);
        py::print(out.str());
        return ok;
    });
}
