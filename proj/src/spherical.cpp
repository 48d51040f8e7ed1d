#include "bc1/spherical.hpp"

#include <algorithm>

#include "bc1/errors.hpp"
#include "bc1/vector_valued.hpp"

namespace bc1 {

namespace {

bool has_parity(const LaurentPoly& p, int parity) {
    for (const auto& [e, c] : p.coeffs())
        if (((e % 2) + 2) % 2 != parity) return false;
    return true;
}

// q / (z^2 - z^{-2}) = (q z^{-2}) / (1 - z^{-4}), exact.
LaurentPoly divide_z2_antisym(const LaurentPoly& q) {
    return divide_one_minus_z_neg(q.shifted(-2), 4);
}

// 2 (z^2 + z^{-2}) as a reusable factor.
LaurentPoly double_cos() {
    return LaurentPoly({{2, Rational(2)}, {-2, Rational(2)}});
}

}  // namespace

VecLaurent2 spherical_apply(const SphericalOp& op, const VecLaurent2& F) {
    if (op.m < 1) throw ParameterOutOfRange("spherical_apply: m must be >= 1");
    const Rational m(op.m);
    const LaurentPoly cos2 = double_cos();

    if (op.kind == SphericalOp::Kind::R) {
        if (!has_parity(F.first, 1) || !has_parity(F.second, 1) || F.second != involve(F.first))
            throw DomainError("spherical_apply: R_m needs an E_A element "
                              "(odd exponents, second = s.first)");
        const LaurentPoly four_second = F.second * Rational(4);
        const LaurentPoly four_first = F.first * Rational(4);
        VecLaurent2 out;
        out.first = F.first.z_derivative() + m * divide_z2_antisym(cos2 * F.first - four_second);
        out.second = -F.second.z_derivative() + m * divide_z2_antisym(four_first - cos2 * F.second);
        return out;
    }

    if (!has_parity(F.first, 0) || !has_parity(F.second, 0) || !F.is_invariant())
        throw DomainError("spherical_apply: Q_m needs an invariant vector with even exponents");
    const LaurentPoly cross1 = F.second.shifted(2) * Rational(4);   // 4 z^2 F2
    const LaurentPoly cross2 = F.first.shifted(-2) * Rational(4);   // 4 z^-2 F1
    VecLaurent2 out;
    out.first = F.first.z_derivative() - F.first + m * divide_z2_antisym(cos2 * F.first - cross1);
    out.second =
        -F.second.z_derivative() - F.second + m * divide_z2_antisym(cross2 - cos2 * F.second);
    return out;
}

VecLaurent2 ea_transport(const VecLaurent2& F, EADirection direction) {
    if (direction == EADirection::from_ea) {
        if (!has_parity(F.first, 1) || !has_parity(F.second, 1))
            throw DomainError("ea_transport: from_ea needs odd exponents");
        return {F.first.shifted(1), F.second.shifted(-1)};
    }
    if (!has_parity(F.first, 0) || !has_parity(F.second, 0))
        throw DomainError("ea_transport: to_ea needs even exponents");
    return {F.first.shifted(-1), F.second.shifted(1)};
}

OperatorVerdict identification_check(int m, int degree) {
    if (m < 1) throw ParameterOutOfRange("identification_check: m must be >= 1");
    if (degree < 0) throw ParameterOutOfRange("identification_check: degree must be >= 0");
    const Multiplicity k(0, m, 2, Mode::exact);
    const SphericalOp q_op{m, SphericalOp::Kind::Q};
    const SphericalOp r_op{m, SphericalOp::Kind::R};

    double residual = 0.0;
    bool all_zero = true;
    for (int j = -degree; j <= degree; ++j) {
        const VecLaurent2 F = gamma(LaurentPoly::monomial(2 * j));
        const VecLaurent2 qf = spherical_apply(q_op, F);

        // (Q_m + I) F = Gamma_*(D_{(0,m)}) F at scale 2.
        const VecLaurent2 lhs = qf + F;
        const VecLaurent2 rhs = gamma_star_apply(k, F, GammaStarForm::first);
        const VecLaurent2 defect = lhs - rhs;
        if (!defect.is_zero()) {
            all_zero = false;
            residual = std::max(residual, defect.max_abs_coeff());
        }

        // Conjugation identity on the same basis.
        const VecLaurent2 conj =
            ea_transport(spherical_apply(r_op, ea_transport(F, EADirection::to_ea)),
                         EADirection::from_ea);
        const VecLaurent2 conj_defect = qf - conj;
        if (!conj_defect.is_zero()) {
            all_zero = false;
            residual = std::max(residual, conj_defect.max_abs_coeff());
        }
    }

    const std::string detail = "spherical identification (Q_m + I = transported Cherednik, "
                               "scale 2): m=" + std::to_string(m) +
                               " degree<=" + std::to_string(degree);
    if (all_zero) return OperatorVerdict::exact_pass(detail);
    return OperatorVerdict::failure(residual, detail);
}

}  // namespace bc1
