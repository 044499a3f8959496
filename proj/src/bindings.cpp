#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rba/textio.hpp"

namespace py = pybind11;
using namespace rba;

namespace {

WeightMode parse_weight(const std::string& text) {
    if (text == "symbolic") return WeightMode::symbolic();
    try {
        return WeightMode::numeric(Rational(text));
    } catch (const std::exception&) {
        throw py::value_error("weight must be 'symbolic' or a rational like '0' or '-1/2'");
    }
}

EvalOptions make_options(const std::string& weight,
                         const std::optional<std::vector<std::string>>& alphabet) {
    EvalOptions opts;
    opts.mode = parse_weight(weight);
    if (alphabet) opts.alphabet = std::set<std::string>(alphabet->begin(), alphabet->end());
    return opts;
}

std::vector<Letter> to_letters(const std::vector<std::string>& names) {
    std::vector<Letter> out;
    out.reserve(names.size());
    for (const auto& n : names) out.emplace_back(n);
    return out;
}

} // namespace

PYBIND11_MODULE(_rba, m) {
    m.doc() = "Exact arithmetic in the free Rota-Baxter algebra on bracketed words";

    // Base first: pybind11 tries the most recently registered translator
    // first, so derived exceptions must be registered after their base.
    py::register_exception<Error>(m, "RbaError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<WeightNotZeroError>(m, "WeightNotZeroError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    py::class_<LinComb>(m, "Element")
        .def(py::init<>())
        .def("__str__", &print_lincomb)
        .def("__repr__",
             [](const LinComb& a) { return "Element(\"" + print_lincomb(a) + "\")"; })
        .def("__eq__", [](const LinComb& a, const LinComb& b) { return a == b; },
             py::is_operator())
        .def("__add__", [](const LinComb& a, const LinComb& b) { return a + b; })
        .def("__sub__", [](const LinComb& a, const LinComb& b) { return a - b; })
        .def("__len__", &LinComb::size)
        .def("is_zero", &LinComb::is_zero)
        .def("to_json", [](const LinComb& a) { return export_structured(a); })
        .def_static("from_json", [](const std::string& text) {
            return import_lincomb(std::string_view(text));
        });

    py::class_<Tensor2>(m, "TensorElement")
        .def(py::init<>())
        .def("__str__", &print_tensor2)
        .def("__repr__",
             [](const Tensor2& t) { return "TensorElement(\"" + print_tensor2(t) + "\")"; })
        .def("__eq__", [](const Tensor2& a, const Tensor2& b) { return a == b; },
             py::is_operator())
        .def("__add__", [](const Tensor2& a, const Tensor2& b) { return a + b; })
        .def("__sub__", [](const Tensor2& a, const Tensor2& b) { return a - b; })
        .def("__len__", &Tensor2::size)
        .def("is_zero", &Tensor2::is_zero)
        .def("to_json", [](const Tensor2& t) { return export_structured(t); })
        .def_static("from_json", [](const std::string& text) {
            return import_tensor2(std::string_view(text));
        });

    m.def(
        "evaluate",
        [](const std::string& text, const std::string& weight,
           const std::optional<std::vector<std::string>>& alphabet) -> py::object {
            Value v = evaluate(*parse(text), make_options(weight, alphabet));
            if (v.is_lincomb()) return py::cast(v.lincomb());
            return py::cast(v.tensor());
        },
        py::arg("text"), py::arg("weight") = "symbolic", py::arg("alphabet") = py::none(),
        "Parse and evaluate an expression; returns an Element or a TensorElement.");

    m.def(
        "diamond",
        [](const LinComb& a, const LinComb& b, const std::string& weight) {
            return diamond(a, b, parse_weight(weight));
        },
        py::arg("a"), py::arg("b"), py::arg("weight") = "symbolic");

    m.def("rb", [](const LinComb& a) { return rb_operator(a); }, py::arg("a"),
          "Apply the Rota-Baxter operator P to each term.");

    m.def(
        "coproduct",
        [](const LinComb& a, const std::string& weight) {
            return coproduct(a, parse_weight(weight));
        },
        py::arg("a"), py::arg("weight") = "symbolic");

    m.def("counit", [](const LinComb& a) { return print_coeff(counit(a)); }, py::arg("a"),
          "The counit of an element, rendered as a scalar string.");

    m.def(
        "antipode",
        [](const LinComb& a, const std::string& weight) {
            return antipode_lin(a, parse_weight(weight));
        },
        py::arg("a"), py::arg("weight") = "0",
        "The antipode; defined only at weight 0.");

    m.def(
        "enumerate_words",
        [](const std::vector<std::string>& alphabet, std::size_t max_degree) {
            std::vector<std::string> out;
            for (const auto& w : enumerate_words(to_letters(alphabet), max_degree))
                out.push_back(to_string(w));
            return out;
        },
        py::arg("alphabet"), py::arg("max_degree"),
        "All words of total degree <= max_degree, in canonical order.");

    m.def(
        "check_rota_baxter",
        [](const std::string& u, const std::string& v, const std::string& weight) {
            const WeightMode mode = parse_weight(weight);
            EvalOptions opts;
            opts.mode = mode;
            return check_rota_baxter(evaluate(*parse(u), opts).lincomb(),
                                     evaluate(*parse(v), opts).lincomb(), mode);
        },
        py::arg("u"), py::arg("v"), py::arg("weight") = "symbolic");

    m.def(
        "counterexample",
        [](const std::string& weight) {
            return export_structured(counterexample_weight_nonzero(parse_weight(weight)));
        },
        py::arg("weight") = "symbolic",
        "JSON report of the grading failure at nonzero weight.");
}
