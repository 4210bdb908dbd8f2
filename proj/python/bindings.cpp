#include "homcyc/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace homcyc;
using io::json;

namespace {

// Everything crosses the boundary as JSON text; scalars stay exact strings.
std::string out(const json& j) { return j.dump(); }

HomAlgebra from_text(const std::string& text) {
    return make_algebra(io::algebra_from_json(json::parse(text)));
}

CyclicMethod method_of(const std::string& m) {
    if (m == "lambda")
        return CyclicMethod::Lambda;
    if (m == "bicomplex")
        return CyclicMethod::Bicomplex;
    if (m == "both")
        return CyclicMethod::Both;
    throw PreconditionError("method must be lambda, bicomplex or both");
}

}  // namespace

PYBIND11_MODULE(_homcyc, m) {
    m.doc() = "exact Hochschild and cyclic (co)homology of Hom-associative algebras";

    // later registrations are tried first, so the base goes in first
    auto& base = py::register_exception<Error>(m, "Error");
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<InvariantError>(m, "InvariantError", base.ptr());
    py::register_exception<io::FormatError>(m, "FormatError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const json::exception& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<HomAlgebra>(m, "Algebra")
        .def_property_readonly("name", &HomAlgebra::name)
        .def_property_readonly("dim", &HomAlgebra::dim)
        .def_property_readonly("basis", &HomAlgebra::basis_names)
        .def("to_json", [](const HomAlgebra& a) { return out(io::algebra_to_json(a.data())); })
        .def("unit", [](const HomAlgebra& a) -> std::optional<std::vector<std::string>> {
            auto u = find_unit(a);
            if (!u)
                return std::nullopt;
            std::vector<std::string> s;
            for (const auto& x : *u)
                s.push_back(format_scalar(x));
            return s;
        })
        .def("alpha_is_idempotent", &HomAlgebra::alpha_is_idempotent)
        .def("alpha_is_identity", &HomAlgebra::alpha_is_identity)
        .def("__repr__", [](const HomAlgebra& a) {
            return "<Algebra " + a.name() + " dim " + std::to_string(a.dim()) + ">";
        });

    m.def("load", [](const std::string& path) { return make_algebra(io::read_algebra(path)); }, py::arg("path"));
    m.def("algebra_from_json", &from_text, py::arg("text"));
    m.def(
        "validate",
        [](const std::string& text) {
            AlgebraData data = io::algebra_from_json(json::parse(text));
            ValidationReport r = validate(data);
            json j;
            j["valid"] = r.valid();
            j["hom_associative"] = r.hom_associative;
            j["multiplicative"] = r.multiplicative;
            j["unit"] = r.unit ? io::vector_to_json(*r.unit) : json(nullptr);
            j["violations"] = io::to_json(r.result, data.basis);
            return out(j);
        },
        py::arg("text"));

    m.def(
        "hochschild_homology",
        [](const HomAlgebra& a, int max, bool reps) {
            return out(io::to_json(hochschild_homology(regular_bimodule(a), max, reps)));
        },
        py::arg("algebra"), py::arg("max_degree"), py::arg("representatives") = false);
    m.def(
        "hochschild_cohomology",
        [](const HomAlgebra& a, int max, bool reps) {
            return out(io::to_json(hochschild_cohomology(dualize_bimodule(regular_bimodule(a)), max, reps)));
        },
        py::arg("algebra"), py::arg("max_degree"), py::arg("representatives") = false);
    m.def(
        "cyclic_homology",
        [](const HomAlgebra& a, int max, const std::string& method, int columns) {
            return out(io::to_json(cyclic_homology(a, max, method_of(method), columns)));
        },
        py::arg("algebra"), py::arg("max_degree"), py::arg("method") = "both", py::arg("columns") = -1);
    m.def(
        "cyclic_cohomology",
        [](const HomAlgebra& a, int max, const std::string& method, int columns) {
            return out(io::to_json(cyclic_cohomology(a, max, method_of(method), columns)));
        },
        py::arg("algebra"), py::arg("max_degree"), py::arg("method") = "both", py::arg("columns") = -1);
    m.def(
        "periodic_homology",
        [](const HomAlgebra& a, int max, int window) { return out(io::to_json(periodic_homology(a, max, window))); },
        py::arg("algebra"), py::arg("max_degree"), py::arg("window") = -1);
    m.def(
        "periodic_cohomology",
        [](const HomAlgebra& a, int max, int window) { return out(io::to_json(periodic_cohomology(a, max, window))); },
        py::arg("algebra"), py::arg("max_degree"), py::arg("window") = -1);
    m.def(
        "connes_bB",
        [](const HomAlgebra& a, int max) { return out(io::to_json(connes_bB_bicomplex(a, max))); },
        py::arg("algebra"), py::arg("max_degree"));

    m.def(
        "yau_twist",
        [](const HomAlgebra& a, const std::string& endo, const std::string& name) {
            return yau_twist(a, io::matrix_from_json(json::parse(endo), a.dim(), a.dim()), name);
        },
        py::arg("algebra"), py::arg("endo"), py::arg("name") = "");
    m.def(
        "a_circ",
        [](const HomAlgebra& a) {
            ACirc c = a_circ(a);
            json j;
            j["dim"] = c.functionals.dim();
            j["basis"] = io::matrix_to_json(c.functionals.basis());
            return out(j);
        },
        py::arg("algebra"));
    m.def(
        "trace_space",
        [](const HomAlgebra& a) { return out(io::matrix_to_json(trace_space(a).basis())); }, py::arg("algebra"));
    m.def(
        "is_cyclic_cocycle",
        [](const HomAlgebra& a, int degree, const std::string& coords) {
            Functional f{degree, io::vector_from_json(json::parse(coords), tensor_dim(a.dim(), a.dim(), degree))};
            return is_cyclic_cocycle(a, f).ok();
        },
        py::arg("algebra"), py::arg("degree"), py::arg("coords"));
    m.def(
        "derivation_cocycle",
        [](const HomAlgebra& a, const std::string& rho, const std::string& trace) {
            Functional f = derivation_cocycle(a, io::matrix_from_json(json::parse(rho), a.dim(), a.dim()),
                                              io::vector_from_json(json::parse(trace), a.dim()));
            return out(io::to_json(f, a));
        },
        py::arg("algebra"), py::arg("rho"), py::arg("trace"));
}
