#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "bc1/classical.hpp"
#include "bc1/errors.hpp"
#include "bc1/nonsym.hpp"
#include "bc1/pairing.hpp"
#include "bc1/spherical.hpp"
#include "bc1/vector_valued.hpp"

namespace py = pybind11;

namespace {

using bc1::LaurentPoly;
using bc1::Multiplicity;
using bc1::PolyX;
using bc1::Rational;

Rational rational_from(const py::handle& value) {
    if (py::isinstance<py::int_>(value)) return Rational(value.cast<long long>());
    return bc1::parse_rational(value.cast<std::string>());
}

Multiplicity mult_from(const py::object& k1, const py::object& k2, int scale,
                       const std::string& mode) {
    if (mode != "exact" && mode != "float")
        throw bc1::ParameterOutOfRange("mode must be 'exact' or 'float'");
    return Multiplicity(rational_from(k1), rational_from(k2), scale,
                        mode == "exact" ? bc1::Mode::exact : bc1::Mode::floating);
}

LaurentPoly laurent_from(const py::dict& d) {
    LaurentPoly::Map m;
    for (auto item : d) m.emplace(item.first.cast<int>(), rational_from(item.second));
    return LaurentPoly(std::move(m));
}

py::dict laurent_to(const LaurentPoly& p) {
    py::dict d;
    for (const auto& [e, c] : p.coeffs()) d[py::int_(e)] = bc1::to_string(c);
    return d;
}

py::dict polyx_to(const PolyX& p) {
    py::dict d;
    for (const auto& [deg, c] : p.coeffs()) d[py::int_(deg)] = bc1::to_string(c);
    return d;
}

py::list mat_to(const bc1::PolyMat2& m) {
    py::list rows;
    py::list r1, r2;
    r1.append(polyx_to(m.e11));
    r1.append(polyx_to(m.e12));
    r2.append(polyx_to(m.e21));
    r2.append(polyx_to(m.e22));
    rows.append(r1);
    rows.append(r2);
    return rows;
}

std::pair<py::dict, py::dict> vec_to(const bc1::VecLaurent2& v) {
    return {laurent_to(v.first), laurent_to(v.second)};
}

bc1::VecLaurent2 vec_from(const std::pair<py::dict, py::dict>& v) {
    return {laurent_from(v.first), laurent_from(v.second)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact nonsymmetric, vector- and matrix-valued Jacobi polynomials for BC1";

    py::class_<bc1::OperatorVerdict>(m, "Verdict")
        .def_property_readonly("holds", &bc1::OperatorVerdict::ok)
        .def_property_readonly("exact",
                               [](const bc1::OperatorVerdict& v) {
                                   return v.status == bc1::VerdictStatus::holds_exact;
                               })
        .def_readonly("residual", &bc1::OperatorVerdict::residual)
        .def_readonly("detail", &bc1::OperatorVerdict::detail)
        .def("__bool__", &bc1::OperatorVerdict::ok)
        .def("__repr__", [](const bc1::OperatorVerdict& v) {
            return "<Verdict " + std::string(v.ok() ? "holds" : "FAILS") + ": " + v.detail + ">";
        });

    // ---- Laurent core
    m.def(
        "involve", [](const py::dict& p) { return laurent_to(bc1::involve(laurent_from(p))); },
        py::arg("p"), "the Weyl involution p(z) -> p(1/z)");
    m.def(
        "reflect_divide",
        [](const py::dict& p, int c) {
            return laurent_to(bc1::reflect_divide(laurent_from(p), c));
        },
        py::arg("p"), py::arg("c"), "(p - s.p)/(1 - z^-c), exact");
    m.def(
        "rescale",
        [](const py::dict& p, int c) { return laurent_to(bc1::rescale(laurent_from(p), c)); },
        py::arg("p"), py::arg("c"));
    m.def(
        "steinberg_split",
        [](const py::dict& p) {
            auto [f1, f2] = bc1::steinberg_split(laurent_from(p));
            return std::make_pair(polyx_to(f1), polyx_to(f2));
        },
        py::arg("p"), "unique (f1, f2) with p = f1(x) + z f2(x), x = (z+1/z)/2");

    // ---- families and operators
    m.def(
        "nonsym_E",
        [](const py::object& k1, const py::object& k2, int n, int scale) {
            return laurent_to(bc1::gram_schmidt_E(mult_from(k1, k2, scale, "exact"), n));
        },
        py::arg("k1"), py::arg("k2"), py::arg("n"), py::arg("scale") = 1,
        "the nonsymmetric Jacobi polynomial E(n, k)");
    m.def(
        "e_norm_squared",
        [](const py::object& k1, const py::object& k2, int n) {
            bc1::NonsymFamily family(mult_from(k1, k2, 1, "exact"));
            return bc1::to_string(family.norm_squared(n));
        },
        py::arg("k1"), py::arg("k2"), py::arg("n"));
    m.def(
        "cherednik",
        [](const py::object& k1, const py::object& k2, const py::dict& p, int scale,
           const std::string& mode) {
            return laurent_to(
                bc1::cherednik_apply(mult_from(k1, k2, scale, mode), laurent_from(p)));
        },
        py::arg("k1"), py::arg("k2"), py::arg("p"), py::arg("scale") = 1,
        py::arg("mode") = "exact", "apply the Cherednik operator D_k");
    m.def(
        "eigen_check",
        [](const py::object& k1, const py::object& k2, int n, int scale) {
            return bc1::eigen_check(mult_from(k1, k2, scale, "exact"), n);
        },
        py::arg("k1"), py::arg("k2"), py::arg("n"), py::arg("scale") = 1);
    m.def(
        "subleading_check",
        [](const py::object& k1, const py::object& k2, int n) {
            return bc1::subleading_check(mult_from(k1, k2, 1, "exact"), n);
        },
        py::arg("k1"), py::arg("k2"), py::arg("n"));
    m.def(
        "build_P",
        [](const py::object& k1, const py::object& k2, int n) {
            return vec_to(bc1::build_P(mult_from(k1, k2, 1, "exact"), n));
        },
        py::arg("k1"), py::arg("k2"), py::arg("n"), "P(n,k) = Gamma(E(n,k))");
    m.def(
        "build_M",
        [](const py::object& k1, const py::object& k2, int N) {
            return mat_to(bc1::build_M(mult_from(k1, k2, 1, "exact"), N));
        },
        py::arg("k1"), py::arg("k2"), py::arg("N"));
    m.def(
        "monic_M",
        [](const py::object& k1, const py::object& k2, int N) {
            return mat_to(bc1::monic_from_M(mult_from(k1, k2, 1, "exact"), N));
        },
        py::arg("k1"), py::arg("k2"), py::arg("N"));

    // ---- pairings
    m.def(
        "ct_pair",
        [](const py::object& k1, const py::object& k2, const py::dict& p, const py::dict& q) {
            bc1::InnerProductEngine engine(mult_from(k1, k2, 1, "exact"));
            return bc1::to_string(engine.ct_pair(laurent_from(p), laurent_from(q)));
        },
        py::arg("k1"), py::arg("k2"), py::arg("p"), py::arg("q"));
    m.def(
        "quad_pair",
        [](const py::object& k1, const py::object& k2, const py::dict& p, const py::dict& q) {
            bc1::InnerProductEngine engine(mult_from(k1, k2, 1, "float"));
            return engine.quad_pair(laurent_from(p), laurent_from(q));
        },
        py::arg("k1"), py::arg("k2"), py::arg("p"), py::arg("q"));
    m.def(
        "gauss_jacobi_rule",
        [](double a, double b, int n) {
            const bc1::QuadRule rule = bc1::gauss_jacobi_rule(a, b, n);
            return std::make_pair(rule.nodes, rule.weights);
        },
        py::arg("alpha_exp"), py::arg("beta_exp"), py::arg("n"));

    // ---- classical picture
    m.def(
        "jacobi_poly",
        [](const py::object& alpha, const py::object& beta, int n) {
            return polyx_to(bc1::jacobi_poly({rational_from(alpha), rational_from(beta)}, n));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("n"));
    m.def(
        "n_family",
        [](const py::object& alpha, const py::object& beta, int N) {
            return mat_to(bc1::build_N_family({rational_from(alpha), rational_from(beta)}, N));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("N"));
    m.def(
        "shift_check",
        [](const py::object& alpha, const py::object& beta, int N) {
            return bc1::shift_check({rational_from(alpha), rational_from(beta)}, N);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("N"));
    m.def(
        "transmute_check",
        [](const py::object& k1, const py::object& k2, int degree) {
            return bc1::transmute_check(mult_from(k1, k2, 1, "exact"), degree);
        },
        py::arg("k1"), py::arg("k2"), py::arg("degree"));
    m.def(
        "decompose",
        [](const py::object& k1, const py::object& k2, int N) {
            const bc1::DecompositionRecord rec =
                bc1::decompose_E(mult_from(k1, k2, 1, "exact"), N);
            py::dict d;
            d["s"] = bc1::to_string(rec.s);
            d["c"] = bc1::to_string(rec.c);
            d["pochhammer_prefactor"] = bc1::to_string(rec.pochhammer_prefactor);
            d["prefactors_agree"] = rec.prefactors_agree;
            d["e_minus"] = laurent_to(rec.e_minus);
            d["e_plus"] = laurent_to(rec.e_plus);
            return d;
        },
        py::arg("k1"), py::arg("k2"), py::arg("N"));

    // ---- spherical picture
    m.def(
        "spherical_apply",
        [](const std::string& kind, int m_param, const std::pair<py::dict, py::dict>& F) {
            if (kind != "R" && kind != "Q")
                throw bc1::ParameterOutOfRange("kind must be 'R' or 'Q'");
            const bc1::SphericalOp op{m_param, kind == "R" ? bc1::SphericalOp::Kind::R
                                                           : bc1::SphericalOp::Kind::Q};
            return vec_to(bc1::spherical_apply(op, vec_from(F)));
        },
        py::arg("kind"), py::arg("m"), py::arg("F"));
    m.def(
        "spherical_function",
        [](int m_param, int n) {
            const Multiplicity k(0, m_param, 2, bc1::Mode::exact);
            const bc1::VecLaurent2 even = bc1::gamma(bc1::gram_schmidt_E(k, n));
            return vec_to(bc1::ea_transport(even, bc1::EADirection::to_ea));
        },
        py::arg("m"), py::arg("n"),
        "spherical function for (Spin(2m+2), Spin(2m+1)) from the scale-2 family");
    m.def("identification_check", &bc1::identification_check, py::arg("m"), py::arg("degree"));

    py::register_exception<bc1::NonDivisible>(m, "NonDivisible");
    py::register_exception<bc1::ModeError>(m, "ModeError");
    py::register_exception<bc1::DomainError>(m, "DomainError");
    py::register_exception<bc1::ParameterOutOfRange>(m, "ParameterOutOfRange");
}
