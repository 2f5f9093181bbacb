#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "hadamard6/errors.hpp"
#include "hadamard6/family.hpp"
#include "hadamard6/known_families.hpp"
#include "hadamard6/mat_core.hpp"
#include "hadamard6/matrix_io.hpp"
#include "hadamard6/moebius.hpp"
#include "hadamard6/verify.hpp"

namespace py = pybind11;
using namespace hadamard6;

namespace {

py::array_t<Complex> to_array(const Mat6& m) {
    py::array_t<Complex> out({6, 6});
    auto buf = out.mutable_unchecked<2>();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) buf(i, j) = m(i, j);
    return out;
}

Mat6 from_array(const py::array_t<Complex, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != 6 || arr.shape(1) != 6)
        throw py::value_error("expected a 6x6 complex array");
    Mat6 m;
    auto buf = arr.unchecked<2>();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(i, j) = buf(i, j);
    return m;
}

using PyMat = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

SignChoice signs_from_string(const std::string& signs) {
    if (signs.size() != 4 || signs.find_first_not_of("01") != std::string::npos)
        throw py::value_error("signs must be four 0/1 characters, e.g. '0101'");
    SignChoice sc;
    sc.s1 = signs[0] == '1';
    sc.s2 = signs[1] == '1';
    sc.s3 = signs[2] == '1';
    sc.s4 = signs[3] == '1';
    return sc;
}

Anchor anchor_from_string(const std::string& name) {
    if (name == "z1" || name == "Z1") return Anchor::Z1;
    if (name == "z3" || name == "Z3") return Anchor::Z3;
    throw py::value_error("anchor must be 'z1' or 'z3'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Order-6 complex Hadamard matrices: the three-parameter block-reducible family";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            switch (e.kind()) {
                case ErrorKind::OutOfRange:
                    PyErr_SetString(PyExc_ValueError, e.what());
                    break;
                case ErrorKind::ParseError:
                    PyErr_SetString(PyExc_IOError, e.what());
                    break;
                default:
                    PyErr_SetString(PyExc_RuntimeError, e.what());
            }
        }
    });

    py::class_<Tolerance>(m, "Tolerance")
        .def(py::init<>())
        .def_readwrite("eps_unimodular", &Tolerance::eps_unimodular)
        .def_readwrite("eps_unitarity", &Tolerance::eps_unitarity)
        .def_readwrite("eps_scalar", &Tolerance::eps_scalar);

    py::class_<HadamardReport>(m, "HadamardReport")
        .def_readonly("unimodular_error", &HadamardReport::unimodular_error)
        .def_readonly("unitarity_error", &HadamardReport::unitarity_error)
        .def_readonly("is_hadamard", &HadamardReport::is_hadamard)
        .def("__repr__", [](const HadamardReport& r) {
            return "HadamardReport(is_hadamard=" + std::string(r.is_hadamard ? "True" : "False") +
                   ", unimodular_error=" + std::to_string(r.unimodular_error) +
                   ", unitarity_error=" + std::to_string(r.unitarity_error) + ")";
        });

    py::class_<EquivalenceReport>(m, "EquivalenceReport")
        .def_readonly("equivalent", &EquivalenceReport::equivalent)
        .def_property_readonly("row_perm",
                               [](const EquivalenceReport& r) -> py::object {
                                   if (!r.row_perm) return py::none();
                                   return py::cast(std::vector<int>(r.row_perm->begin(),
                                                                    r.row_perm->end()));
                               })
        .def_property_readonly("col_perm",
                               [](const EquivalenceReport& r) -> py::object {
                                   if (!r.col_perm) return py::none();
                                   return py::cast(std::vector<int>(r.col_perm->begin(),
                                                                    r.col_perm->end()));
                               })
        .def_readonly("max_entry_error", &EquivalenceReport::max_entry_error)
        .def("__bool__", [](const EquivalenceReport& r) { return r.equivalent; })
        .def("__repr__", [](const EquivalenceReport& r) {
            return std::string("EquivalenceReport(equivalent=") +
                   (r.equivalent ? "True" : "False") + ")";
        });

    // construction
    m.def(
        "build_matrix",
        [](double theta, double phi, double psi1, const std::string& signs, Tolerance tol) {
            return to_array(build_matrix(FamilyPoint(theta, phi, psi1),
                                         signs_from_string(signs), tol));
        },
        py::arg("theta"), py::arg("phi"), py::arg("psi1"), py::arg("signs") = "0000",
        py::arg("tol") = Tolerance{},
        "Build the dephased family member at (theta, phi, psi1).");

    m.def(
        "solve_z_quad",
        [](double theta, double phi, double psi1, Tolerance tol) {
            const ZQuad q = solve_z_quad(FamilyPoint(theta, phi, psi1), tol);
            return py::make_tuple(q.z1.value, q.z2.value, q.z3.value, q.z4.value);
        },
        py::arg("theta"), py::arg("phi"), py::arg("psi1"), py::arg("tol") = Tolerance{},
        "The four Z-block scalars (z1, z2, z3, z4) at a generic point.");

    m.def(
        "classify_regime",
        [](double theta, double phi, double threshold) {
            return std::string(to_string(classify_regime(LambdaParams(theta, phi), threshold)));
        },
        py::arg("theta"), py::arg("phi"), py::arg("threshold") = 1e-10);

    m.def(
        "build_degenerate",
        [](double theta, double phi, Complex free_param, const std::string& anchor,
           Tolerance tol) {
            return to_array(build_degenerate(LambdaParams(theta, phi),
                                             UnimodularScalar(free_param),
                                             anchor_from_string(anchor), tol));
        },
        py::arg("theta"), py::arg("phi"), py::arg("free_param"), py::arg("anchor") = "z1",
        py::arg("tol") = Tolerance{},
        "Single-degenerate construction with the free parameter at Z1 or Z3.");

    m.def(
        "build_theta0_limit",
        [](double phi, Complex z1, Tolerance tol) {
            return to_array(build_theta0_limit(phi, UnimodularScalar(z1), tol));
        },
        py::arg("phi"), py::arg("z1"), py::arg("tol") = Tolerance{});

    m.def(
        "build_theta0_z3_anchor",
        [](Complex z3, double phi, Tolerance tol) {
            return to_array(build_theta0_z3_anchor(UnimodularScalar(z3), phi, tol));
        },
        py::arg("z3"), py::arg("phi"), py::arg("tol") = Tolerance{});

    m.def(
        "build_halfpi_limit",
        [](double phi, Complex z3, Tolerance tol) {
            return to_array(build_halfpi_limit(phi, UnimodularScalar(z3), tol));
        },
        py::arg("phi"), py::arg("z3"), py::arg("tol") = Tolerance{});

    m.def(
        "theta0_z2_squared",
        [](double phi, Complex z1_squared) { return theta0_z2_squared(phi, z1_squared); },
        py::arg("phi"), py::arg("z1_squared"));

    // known families
    m.def(
        "fourier",
        [](Complex z1, Complex z2) {
            return to_array(fourier(UnimodularScalar(z1), UnimodularScalar(z2)));
        },
        py::arg("z1"), py::arg("z2"));
    m.def(
        "fourier_transposed",
        [](Complex z3, Complex z4) {
            return to_array(fourier_transposed(UnimodularScalar(z3), UnimodularScalar(z4)));
        },
        py::arg("z3"), py::arg("z4"));
    m.def(
        "d6_member", [](Complex z) { return to_array(d6_member(UnimodularScalar(z))); },
        py::arg("z"));
    m.def(
        "k6_subfamily_member",
        [](double psi, int epsilon_sign) { return to_array(k6_subfamily_member(psi, epsilon_sign)); },
        py::arg("psi"), py::arg("epsilon_sign") = 1);

    // verification and equivalence
    m.def(
        "is_hadamard", [](PyMat h, Tolerance tol) { return is_hadamard(from_array(h), tol); },
        py::arg("h"), py::arg("tol") = Tolerance{});
    m.def(
        "dephase", [](PyMat h) { return to_array(dephase(from_array(h))); }, py::arg("h"));
    m.def(
        "h2_reducible", [](PyMat h, Tolerance tol) { return h2_reducible(from_array(h), tol); },
        py::arg("h"), py::arg("tol") = Tolerance{});
    m.def(
        "dephased_has_minus_one",
        [](PyMat h, Tolerance tol) { return dephased_has_minus_one(from_array(h), tol); },
        py::arg("h"), py::arg("tol") = Tolerance{});
    m.def(
        "fingerprint",
        [](PyMat h, Tolerance tol) {
            const Fingerprint fp = fingerprint(from_array(h), tol);
            std::vector<double> phases;
            phases.reserve(fp.keys.size());
            for (auto k : fp.keys) phases.push_back(static_cast<double>(k) * 1e-6);
            return phases;
        },
        py::arg("h"), py::arg("tol") = Tolerance{},
        "Sorted multiset of folded quartic-product phases (rounded to 1e-6 rad).");
    m.def(
        "are_equivalent",
        [](PyMat a, PyMat b, bool use_fingerprint, Tolerance tol) {
            EquivalenceOptions opts;
            opts.use_fingerprint = use_fingerprint;
            return are_equivalent(from_array(a), from_array(b), tol, opts);
        },
        py::arg("a"), py::arg("b"), py::arg("use_fingerprint") = true,
        py::arg("tol") = Tolerance{});

    // Moebius layer
    m.def(
        "commutation_defect",
        [](double theta, double phi, Complex z) {
            return commutation_defect(LambdaParams(theta, phi), z);
        },
        py::arg("theta"), py::arg("phi"), py::arg("z"));
    m.def(
        "curve_a", [](double theta, double phi) { return curve_a(LambdaParams(theta, phi)); },
        py::arg("theta"), py::arg("phi"));
    m.def(
        "curve_b", [](double theta, double phi) { return curve_b(LambdaParams(theta, phi)); },
        py::arg("theta"), py::arg("phi"));

    // file format
    m.def(
        "read_matrix", [](const std::string& path) { return to_array(read_mat6_file(path)); },
        py::arg("path"));
    m.def(
        "write_matrix",
        [](const std::string& path, PyMat h, const std::vector<std::string>& comments) {
            write_mat6_file(path, from_array(h), comments);
        },
        py::arg("path"), py::arg("h"), py::arg("comments") = std::vector<std::string>{});

#ifdef HADAMARD6_VERSION
    m.attr("__version__") = HADAMARD6_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
