#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jcd/decompose.hpp"
#include "jcd/io.hpp"
#include "jcd/matrix_functions.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Jordan-Chevalley decomposition of rational matrices";

    py::register_exception<jcd::parse_error>(m, "ParseError", PyExc_ValueError);
    static py::exception<jcd::error> math_error(m, "MathError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const jcd::parse_error&) {
            throw; // handled by the registration above
        } catch (const jcd::error& e) {
            py::set_error(math_error, e.what());
        }
    });

    py::class_<jcd::Rational>(m, "Rational")
        .def(py::init([](const std::string& s) { return jcd::Rational::parse(s); }))
        .def(py::init<long>())
        .def(py::init<long, long>())
        .def_property_readonly("numerator",
                               [](const jcd::Rational& r) { return r.numerator().get_str(); })
        .def_property_readonly("denominator",
                               [](const jcd::Rational& r) { return r.denominator().get_str(); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__str__", &jcd::Rational::to_string)
        .def("__repr__",
             [](const jcd::Rational& r) { return "Rational('" + r.to_string() + "')"; });

    py::class_<jcd::Polynomial>(m, "Polynomial")
        .def(py::init([](const std::string& s) { return jcd::parse_polynomial(s); }))
        .def(py::init([](const std::vector<jcd::Rational>& c) {
            return jcd::Polynomial(std::vector<jcd::Rational>(c));
        }))
        .def_property_readonly("degree",
                               [](const jcd::Polynomial& p) -> py::object {
                                   if (auto d = p.degree())
                                       return py::int_(*d);
                                   return py::none();
                               })
        .def("coefficient",
             [](const jcd::Polynomial& p, std::size_t i) { return p[i]; })
        .def("__call__",
             [](const jcd::Polynomial& p, const jcd::Rational& x) { return p(x); })
        .def("derivative", &jcd::Polynomial::derivative)
        .def("monic", &jcd::Polynomial::monic)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", [](const jcd::Polynomial& p) { return jcd::format_polynomial(p); })
        .def("__repr__", [](const jcd::Polynomial& p) {
            return "Polynomial('" + jcd::format_polynomial(p) + "')";
        });

    py::class_<jcd::SquareMatrix>(m, "SquareMatrix")
        .def(py::init([](const std::string& s) { return jcd::parse_matrix(s); }))
        .def(py::init([](const std::vector<std::vector<jcd::Rational>>& rows) {
            return jcd::SquareMatrix::from_rows(rows);
        }))
        .def_static("identity", &jcd::SquareMatrix::identity)
        .def_property_readonly("dim", &jcd::SquareMatrix::dim)
        .def("at",
             [](const jcd::SquareMatrix& m_, std::size_t i, std::size_t j) {
                 if (i >= m_.dim() || j >= m_.dim())
                     throw py::index_error();
                 return m_.at(i, j);
             })
        .def("is_zero", &jcd::SquareMatrix::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", [](const jcd::SquareMatrix& m_) { return jcd::format_matrix(m_); })
        .def("__repr__", [](const jcd::SquareMatrix& m_) {
            return "SquareMatrix('" + jcd::format_matrix(m_) + "')";
        });

    py::class_<jcd::PolyMatrix>(m, "PolyMatrix")
        .def_property_readonly("dim", &jcd::PolyMatrix::dim)
        .def("at",
             [](const jcd::PolyMatrix& m_, std::size_t i, std::size_t j) {
                 if (i >= m_.dim() || j >= m_.dim())
                     throw py::index_error();
                 return m_.at(i, j);
             })
        .def("__call__",
             [](const jcd::PolyMatrix& m_, const jcd::Rational& t) { return m_(t); })
        .def("coefficient", &jcd::PolyMatrix::coefficient)
        .def("__str__",
             [](const jcd::PolyMatrix& m_) { return jcd::format_poly_matrix(m_); });

    py::class_<jcd::QuotientRun>(m, "QuotientRun")
        .def_readonly("h", &jcd::QuotientRun::h)
        .def_readonly("iterations", &jcd::QuotientRun::iterations)
        .def_readonly("annihilator", &jcd::QuotientRun::annihilator)
        .def_readonly("p_tilde", &jcd::QuotientRun::p_tilde)
        .def_readonly("p_bar", &jcd::QuotientRun::p_bar)
        .def_readonly("q", &jcd::QuotientRun::q)
        .def_readonly("multiplicity", &jcd::QuotientRun::multiplicity)
        .def_readonly("iterates", &jcd::QuotientRun::iterates);

    py::class_<jcd::Decomposition>(m, "Decomposition")
        .def_readonly("d", &jcd::Decomposition::d)
        .def_readonly("n", &jcd::Decomposition::n)
        .def_readonly("h", &jcd::Decomposition::h)
        .def_readonly("iterations", &jcd::Decomposition::iterations)
        .def_readonly("annihilator", &jcd::Decomposition::annihilator)
        .def_readonly("p_tilde", &jcd::Decomposition::p_tilde)
        .def_readonly("p_bar", &jcd::Decomposition::p_bar)
        .def_readonly("multiplicity", &jcd::Decomposition::multiplicity);

    py::class_<jcd::Congruence>(m, "Congruence")
        .def(py::init([](const jcd::Rational& root, int multiplicity,
                         const jcd::Rational& value) {
                 return jcd::Congruence{root, multiplicity, value};
             }),
             py::arg("root"), py::arg("multiplicity"), py::arg("value"))
        .def_readonly("root", &jcd::Congruence::root)
        .def_readonly("multiplicity", &jcd::Congruence::multiplicity)
        .def_readonly("value", &jcd::Congruence::value);

    py::class_<jcd::VerificationReport>(m, "VerificationReport")
        .def_readonly("sum", &jcd::VerificationReport::sum)
        .def_readonly("commutation", &jcd::VerificationReport::commutation)
        .def_readonly("nilpotency", &jcd::VerificationReport::nilpotency)
        .def_readonly("nilpotency_index", &jcd::VerificationReport::nilpotency_index)
        .def_readonly("separability", &jcd::VerificationReport::separability)
        .def_readonly("certificate", &jcd::VerificationReport::certificate)
        .def("passed", &jcd::VerificationReport::pass)
        .def("__str__",
             [](const jcd::VerificationReport& r) { return jcd::format_report(r); });

    m.def("char_poly", &jcd::char_poly, py::arg("matrix"));
    m.def("inverse", &jcd::inverse, py::arg("matrix"));
    m.def("eval_at", &jcd::eval_at, py::arg("polynomial"), py::arg("matrix"));
    m.def("nilpotency_index",
          [](const jcd::SquareMatrix& m_) -> py::object {
              if (auto k = jcd::nilpotency_index(m_))
                  return py::int_(*k);
              return py::none();
          },
          py::arg("matrix"));
    m.def("newton_quotient", &jcd::newton_quotient, py::arg("p"));
    m.def("jordan_chevalley", &jcd::jordan_chevalley, py::arg("u"),
          py::arg("annihilator") = std::nullopt);
    m.def("newton_matrix", &jcd::newton_matrix, py::arg("u"), py::arg("annihilator"));
    m.def("crt_solve", &jcd::crt_solve, py::arg("system"));
    m.def("verify_decomposition", &jcd::verify_decomposition, py::arg("u"),
          py::arg("decomposition"));
    m.def("multiplicative",
          [](const jcd::SquareMatrix& u) { return jcd::multiplicative(u); },
          py::arg("u"));
    m.def("matrix_power",
          [](const jcd::SquareMatrix& u, long long e) { return jcd::matrix_power(u, e); },
          py::arg("u"), py::arg("exponent"));
    m.def("exp_nilpotent_factor", &jcd::exp_nilpotent_factor, py::arg("n"));
    m.def("separable_part", [](const jcd::Polynomial& p) {
        auto s = jcd::separable_part(p);
        return py::make_tuple(s.p_tilde, s.p_bar, s.multiplicity);
    });
    m.def("poly_gcd",
          [](const jcd::Polynomial& a, const jcd::Polynomial& b) { return jcd::gcd(a, b); });
    m.def("parse_matrix", &jcd::parse_matrix);
    m.def("format_matrix", &jcd::format_matrix);
    m.def("parse_polynomial", &jcd::parse_polynomial);
    m.def("format_polynomial", &jcd::format_polynomial);
    m.def("parse_document", &jcd::parse_document);
    m.def("format_document",
          [](const jcd::SquareMatrix& u, const jcd::Decomposition& dec,
             const jcd::VerificationReport& rep) {
              return jcd::format_document(u, dec, rep);
          });

    py::class_<jcd::Document>(m, "Document")
        .def_property_readonly("u",
                               [](const jcd::Document& d) -> py::object {
                                   if (d.u)
                                       return py::cast(*d.u);
                                   return py::none();
                               })
        .def_readonly("dec", &jcd::Document::dec)
        .def_property_readonly("report",
                               [](const jcd::Document& d) -> py::object {
                                   if (d.report)
                                       return py::cast(*d.report);
                                   return py::none();
                               });
}
