#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trop/digraph.hpp"
#include "trop/inverse.hpp"
#include "trop/io.hpp"
#include "trop/linsys.hpp"
#include "trop/rank.hpp"

namespace py = pybind11;
using namespace trop;

namespace {

Scalar scalar_from(const py::handle& h) {
    if (py::isinstance<Scalar>(h)) return h.cast<Scalar>();
    if (py::isinstance<py::str>(h)) return parse_scalar(h.cast<std::string>());
    if (py::isinstance<py::int_>(h)) return Scalar::real(Rational(h.cast<long long>()));
    throw py::type_error("expected a Scalar, str, or int entry");
}

Matrix matrix_from(const py::object& src) {
    if (py::isinstance<Matrix>(src)) return src.cast<Matrix>();
    if (py::isinstance<py::str>(src)) return parse_matrix(src.cast<std::string>());
    std::vector<Vector> rows;
    for (const auto& r : src) {
        Vector row;
        for (const auto& cell : r) row.push_back(scalar_from(cell));
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(rows);
}

DetMethod method_from(const std::string& name) {
    if (name == "brute") return DetMethod::Brute;
    if (name == "expand") return DetMethod::Expand;
    if (name == "fast") return DetMethod::Fast;
    if (name == "auto") return DetMethod::Auto;
    throw py::value_error("method must be brute|expand|fast|auto");
}

py::object solution_dict(const SolutionReport& r) {
    py::dict d;
    d["point"] = r.point;
    d["kind"] = r.kind == SolutionKind::PureReal ? "pure-real"
                : r.kind == SolutionKind::Ghost  ? "ghost"
                                                 : "mixed";
    d["form_values"] = r.form_values;
    d["solves"] = r.solves;
    return d;
}

}  // namespace

PYBIND11_MODULE(_trop, m) {
    m.doc() = "exact supertropical (extended tropical) matrix algebra";

    py::register_exception<ParseError>(m, "TropParseError", PyExc_ValueError);
    py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalValidationError", PyExc_RuntimeError);
    py::register_exception<Error>(m, "TropError", PyExc_ValueError);

    py::class_<Scalar>(m, "Scalar")
        .def(py::init([](const py::object& v) { return scalar_from(v); }))
        .def_static("neg_inf", &Scalar::neg_inf)
        .def_property_readonly("is_neg_inf", &Scalar::is_neg_inf)
        .def_property_readonly("is_real", &Scalar::is_real)
        .def_property_readonly("is_ghost", [](const Scalar& x) { return is_ghost(x); })
        .def("ghost", [](const Scalar& x) { return ghost(x); })
        .def("project", [](const Scalar& x) { return project(x); })
        .def("__add__", [](const Scalar& x, const py::object& y) { return add(x, scalar_from(y)); })
        .def("__mul__", [](const Scalar& x, const py::object& y) { return mul(x, scalar_from(y)); })
        .def("__truediv__", [](const Scalar& x, const py::object& y) { return div(x, scalar_from(y)); })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__str__", [](const Scalar& x) { return to_string(x); })
        .def("__repr__", [](const Scalar& x) { return "Scalar('" + to_string(x) + "')"; });

    py::class_<Matrix>(m, "Matrix")
        .def(py::init(&matrix_from))
        .def_static("identity", &Matrix::identity)
        .def_static("zero", &Matrix::zero)
        .def_property_readonly("rows", &Matrix::rows)
        .def_property_readonly("cols", &Matrix::cols)
        .def("at", [](const Matrix& a, std::size_t i, std::size_t j) { return a.at(i, j); },
             "1-based entry access")
        .def("row", &Matrix::row)
        .def("col", &Matrix::col)
        .def("row_vectors", &Matrix::row_vectors)
        .def("transpose", [](const Matrix& a) { return transpose(a); })
        .def("minor", [](const Matrix& a, std::size_t i, std::size_t j) { return minor_of(a, i, j); })
        .def("submatrix",
             [](const Matrix& a, const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) {
                 return submatrix(a, rs, cs);
             })
        .def("project", [](const Matrix& a) { return project_matrix(a); })
        .def("ghostify", [](const Matrix& a) { return ghostify_matrix(a); })
        .def("__add__", [](const Matrix& a, const Matrix& b) { return mat_add(a, b); })
        .def("__matmul__", [](const Matrix& a, const Matrix& b) { return mat_mul(a, b); })
        .def("scale", [](const Matrix& a, const py::object& x) { return scale(scalar_from(x), a); })
        .def(py::self == py::self)
        .def("__str__", &format_matrix_plain)
        .def("to_json", &format_matrix_json)
        .def("__repr__", [](const Matrix& a) { return "Matrix('''" + format_matrix_plain(a) + "''')"; });

    m.def("parse_scalar", [](const std::string& s) { return parse_scalar(s); });
    m.def("parse_matrix", [](const std::string& s) { return parse_matrix(s); });

    m.def("det", [](const py::object& a, const std::string& method) { return det(matrix_from(a), method_from(method)); },
          py::arg("a"), py::arg("method") = "auto");
    m.def("det_expand", [](const py::object& a, std::size_t i) { return det_expand(matrix_from(a), i); });
    m.def("is_singular", [](const py::object& a) { return is_singular(matrix_from(a)); });
    m.def("adjoint", [](const py::object& a) { return adjoint(matrix_from(a)); });
    m.def("achieving_permutations", [](const py::object& a) {
        py::list out;
        for (const auto& ap : achieving_permutations(matrix_from(a)))
            out.append(py::make_tuple(ap.sigma, ap.weight));
        return out;
    });
    m.def("rank_defect_certificate", [](const py::object& a) -> py::object {
        auto cert = rank_defect_certificate(matrix_from(a));
        if (!cert) return py::none();
        return py::make_tuple(cert->row_set, cert->col_set);
    });

    m.def("rank", [](const py::object& a) { return rank(matrix_from(a)); });
    m.def("rank_dss", [](const py::object& a) { return rank_dss(matrix_from(a)); });
    m.def("max_nonsingular_minor", [](const py::object& a) -> py::object {
        auto loc = max_nonsingular_minor(matrix_from(a));
        if (!loc) return py::none();
        return py::make_tuple(loc->row_set, loc->col_set);
    });
    m.def("is_dependent", [](const py::object& a) { return is_dependent(matrix_from(a).row_vectors()); });
    m.def("dependence_witness", [](const py::object& a) {
        auto rows = matrix_from(a).row_vectors();
        return dependence_witness(rows).coefficients;
    });
    m.def("square_witness", [](const py::object& a) { return square_witness(matrix_from(a)).coefficients; });
    m.def("validate_witness", [](const py::object& a, const std::vector<Scalar>& coeffs) {
        return validate_witness(matrix_from(a).row_vectors(), DependenceWitness{coeffs});
    });

    m.def("pseudo_inverse", [](const py::object& a) { return pseudo_inverse(matrix_from(a)); });
    m.def("is_pseudo_unit", [](const py::object& a) {
        PseudoUnitReport r = is_pseudo_unit(matrix_from(a));
        py::dict d;
        d["diagonal_ok"] = r.diagonal_ok;
        d["offdiag_ghost_ok"] = r.offdiag_ghost_ok;
        d["nonsingular_ok"] = r.nonsingular_ok;
        d["verdict"] = r.verdict;
        return d;
    });
    m.def("verify_pseudo_inverse",
          [](const py::object& a, const py::object& b) { return verify_pseudo_inverse(matrix_from(a), matrix_from(b)); });

    m.def("eval_form", [](const std::vector<Scalar>& row, const std::vector<Scalar>& pt) { return eval_form(row, pt); });
    m.def("is_solution", [](const py::object& a, const std::vector<Scalar>& pt) {
        return solution_dict(is_solution(LinearSystem{matrix_from(a)}, pt));
    });
    m.def("find_pure_real_solution", [](const py::object& a) -> py::object {
        auto r = find_pure_real_solution(LinearSystem{matrix_from(a)});
        if (!r) return py::none();
        return solution_dict(*r);
    });

    m.def("digraph_edge_list", [](const py::object& a) { return to_edge_list(digraph_of(matrix_from(a))); });
    m.def("max_multicycle_weight",
          [](const py::object& a, std::size_t k) { return max_multicycle_weight(matrix_from(a), k); });
}
