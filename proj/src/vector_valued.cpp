#include "bc1/vector_valued.hpp"

#include "bc1/errors.hpp"

namespace bc1 {

namespace {

// q / (1 - z^c) = -(q z^{-c}) / (1 - z^{-c}).
LaurentPoly divide_one_minus_z_pos(const LaurentPoly& q, int c) {
    return -divide_one_minus_z_neg(q.shifted(-c), c);
}

void require_scale_one(const Multiplicity& k, const char* who) {
    if (k.scale() != 1) throw DomainError(std::string(who) + ": scale 1 only");
}

}  // namespace

VecLaurent2 build_P(NonsymFamily& family, int n) { return gamma(family.polynomial(n)); }

VecLaurent2 build_P(const Multiplicity& k, int n) {
    NonsymFamily family(k);
    return build_P(family, n);
}

VecLaurent2 gamma_star_apply(const Multiplicity& k, const VecLaurent2& P, GammaStarForm form) {
    if (!P.is_invariant()) throw NotInvariant("gamma_star_apply: input is not S2-invariant");
    const int c = k.scale();
    const Rational a1 = Rational(c) * k.k1();
    const Rational a2 = Rational(2 * c) * k.k2();
    const Rational rho = k.rho();
    const LaurentPoly diff = P.first - P.second;  // (1 - s) of the scalar part

    LaurentPoly reflect_neg;  // (k1/(1-z^-c) + 2k2/(1-z^-2c)) applied to diff
    if (a1 != 0) reflect_neg += a1 * divide_one_minus_z_neg(diff, c);
    if (a2 != 0) reflect_neg += a2 * divide_one_minus_z_neg(diff, 2 * c);

    VecLaurent2 out;
    out.first = P.first.z_derivative() + reflect_neg - rho * P.first;
    if (form == GammaStarForm::first) {
        LaurentPoly reflect_pos;  // same combination against (1 - z^{+c})
        if (a1 != 0) reflect_pos += a1 * divide_one_minus_z_pos(-diff, c);
        if (a2 != 0) reflect_pos += a2 * divide_one_minus_z_pos(-diff, 2 * c);
        out.second = -P.second.z_derivative() + reflect_pos - rho * P.second;
    } else {
        out.second = -P.second.z_derivative() + reflect_neg - (2 * rho) * P.first +
                     rho * P.second;
    }
    return out;
}

Rational subleading_c(const Multiplicity& k, int N) {
    require_scale_one(k, "subleading_c");
    return k.k1() / (1 + 2 * N + 2 * k.rho());
}

RatMat2 leading_C(const Multiplicity& k, int N) {
    Rational two_pow = 1;
    for (int j = 0; j < N; ++j) two_pow *= 2;
    return {two_pow, two_pow * subleading_c(k, N), 0, two_pow};
}

PolyMat2 build_M(NonsymFamily& family, int N) {
    require_scale_one(family.multiplicity(), "build_M");
    if (N < 0) throw ParameterOutOfRange("build_M: N must be >= 0");
    const PolyVec2 col1 = phi_transport(build_P(family, -N));
    const PolyVec2 col2 = phi_transport(build_P(family, N + 1));
    return PolyMat2::from_columns(col1, col2);
}

PolyMat2 build_M(const Multiplicity& k, int N) {
    NonsymFamily family(k);
    return build_M(family, N);
}

PolyVec2 XDiffOp::apply(const PolyVec2& v) const {
    const PolyX d1 = v.first.derivative();
    const PolyX d2 = v.second.derivative();
    return {first_order.e11 * d1 + first_order.e12 * d2 + zeroth_order.a11 * v.first +
                zeroth_order.a12 * v.second,
            first_order.e21 * d1 + first_order.e22 * d2 + zeroth_order.a21 * v.first +
                zeroth_order.a22 * v.second};
}

PolyMat2 XDiffOp::apply(const PolyMat2& a) const {
    return first_order * a.derivative() + zeroth_order * a;
}

XDiffOp dk_x_op(const Multiplicity& k) {
    require_scale_one(k, "dk_x_op");
    const Rational rho = k.rho();
    PolyMat2 first{-PolyX::x(), PolyX::constant(-1), PolyX::constant(1), PolyX::x()};
    RatMat2 zeroth{-rho, k.k1(), 0, 1 + rho};
    return {std::move(first), std::move(zeroth)};
}

PolyVec2 dk_x_apply(const Multiplicity& k, const PolyVec2& v) { return dk_x_op(k).apply(v); }

PolyMat2 dk_x_apply(const Multiplicity& k, const PolyMat2& a) { return dk_x_op(k).apply(a); }

RatMat2 lambda_of(const Multiplicity& k, int N) {
    return RatMat2::diag(-N - k.rho(), N + 1 + k.rho());
}

}  // namespace bc1
