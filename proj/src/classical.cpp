#include "bc1/classical.hpp"

#include <algorithm>

#include "bc1/errors.hpp"

namespace bc1 {

PolyX jacobi_poly(const JacobiParams& p, int n) {
    if (n < 0) throw ParameterOutOfRange("jacobi_poly: n must be >= 0");
    const Rational& a = p.alpha;
    const Rational& b = p.beta;
    PolyX prev = PolyX::constant(1);
    if (n == 0) return prev;
    PolyX cur({{1, (a + b + 2) / 2}, {0, (a - b) / 2}});
    for (int m = 2; m <= n; ++m) {
        // 2m(m+a+b)(2m+a+b-2) P_m =
        //   (2m+a+b-1)[(2m+a+b)(2m+a+b-2) x + a^2-b^2] P_{m-1}
        //   - 2(m+a-1)(m+b-1)(2m+a+b) P_{m-2}
        const Rational t = 2 * m + a + b;
        const Rational den = 2 * m * (m + a + b) * (t - 2);
        PolyX next = PolyX({{1, t * (t - 2)}, {0, a * a - b * b}}) * cur;
        next *= (t - 1);
        next -= (2 * (m + a - 1) * (m + b - 1) * t) * prev;
        next *= Rational(1) / den;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational jacobi_leading(const JacobiParams& p, int n) {
    Rational two_pow = 1;
    for (int j = 0; j < n; ++j) two_pow *= 2;
    return pochhammer(n + p.alpha + p.beta + 1, n) / (two_pow * factorial(n));
}

PolyMat2 weight_matrix() {
    const PolyX two = PolyX::constant(2);
    const PolyX two_x = PolyX::monomial(1, 2);
    return {two, two_x, two_x, two};
}

RatMat2 u_matrix() { return {1, -1, 1, 1}; }

RatMat2 u_conjugate(const RatMat2& m) { return u_matrix() * m * u_matrix().inverse(); }

PolyMat2 u_conjugate(const PolyMat2& m) { return u_matrix() * m * u_matrix().inverse(); }

OperatorVerdict weight_diagonalization_check() {
    const RatMat2 v = u_matrix();
    const PolyMat2 lhs = v * weight_matrix() * v.transpose();
    const PolyMat2 rhs{PolyX({{0, Rational(4)}, {1, Rational(-4)}}), PolyX(),
                       PolyX(), PolyX({{0, Rational(4)}, {1, Rational(4)}})};
    const PolyMat2 defect = lhs - rhs;
    const std::string detail = "weight diagonalization: V W V^T = 4 diag(1-x, 1+x)";
    if (defect.is_zero()) return OperatorVerdict::exact_pass(detail);
    return OperatorVerdict::failure(defect.max_abs_coeff(), detail);
}

PolyMat2 build_N_family(const JacobiParams& p, int N) {
    if (N < 0) throw ParameterOutOfRange("build_N_family: N must be >= 0");
    return {jacobi_poly({p.alpha + 1, p.beta}, N), PolyX(), PolyX(),
            jacobi_poly({p.alpha, p.beta + 1}, N)};
}

PolyMat2 monic_N_family(const JacobiParams& p, int N) {
    // Both diagonal entries share the leading coefficient (same
    // alpha+beta+1 sum), so the leading matrix is scalar.
    const Rational lead = jacobi_leading({p.alpha + 1, p.beta}, N);
    return (Rational(1) / lead) * build_N_family(p, N);
}

PolyMat2 monic_from_M(NonsymFamily& family, int N) {
    const Multiplicity& k = family.multiplicity();
    return u_conjugate(build_M(family, N) * leading_C(k, N).inverse());
}

PolyMat2 monic_from_M(const Multiplicity& k, int N) {
    NonsymFamily family(k);
    return monic_from_M(family, N);
}

DecompositionRecord decompose_E(NonsymFamily& family, int N) {
    const Multiplicity& k = family.multiplicity();
    if (k.scale() != 1) throw DomainError("decompose_E: scale 1 only");
    if (N < 0) throw ParameterOutOfRange("decompose_E: N must be >= 0");
    const JacobiParams p = JacobiParams::from_multiplicity(k);

    const PolyX plus = jacobi_poly({p.alpha + 1, p.beta}, N);
    const PolyX minus = jacobi_poly({p.alpha, p.beta + 1}, N);
    const LaurentPoly sum = substitute_x(plus + minus);
    const LaurentPoly dif = substitute_x(plus - minus);

    DecompositionRecord rec;
    rec.c = subleading_c(k, N);
    rec.pochhammer_prefactor = factorial(N) / pochhammer(p.alpha + p.beta + 1, N);

    const LaurentPoly raw_minus = sum - dif.shifted(1);
    const Rational bottom = raw_minus.coeff(-N);
    if (bottom == 0)
        throw DecompositionMismatch("decompose_E: cannot normalize, z^{-N} coefficient vanished");
    rec.s = Rational(1) / bottom;
    rec.prefactors_agree = rec.s == rec.pochhammer_prefactor;

    rec.e_minus = rec.s * raw_minus;
    rec.e_plus = rec.s * ((sum - rec.c * dif).shifted(1) + rec.c * sum - dif);

    if (rec.e_minus != family.polynomial(-N))
        throw DecompositionMismatch("decompose_E: E(-N) reconstruction mismatch at N=" +
                                    std::to_string(N) + ", k=" + k.str());
    if (rec.e_plus != family.polynomial(N + 1))
        throw DecompositionMismatch("decompose_E: E(N+1) reconstruction mismatch at N=" +
                                    std::to_string(N) + ", k=" + k.str());
    return rec;
}

DecompositionRecord decompose_E(const Multiplicity& k, int N) {
    NonsymFamily family(k);
    return decompose_E(family, N);
}

XDiffOp frak_D_op(const JacobiParams& p) {
    PolyMat2 first{PolyX(), PolyX({{0, Rational(-1)}, {1, Rational(-1)}}),
                   PolyX({{0, Rational(1)}, {1, Rational(-1)}}), PolyX()};
    RatMat2 zeroth{(p.beta - p.alpha + 1) / 2, (-2 - 2 * p.beta) / 2,
                   (-2 - 2 * p.alpha) / 2, (p.alpha - p.beta + 1) / 2};
    return {std::move(first), std::move(zeroth)};
}

PolyMat2 frak_D_apply(const JacobiParams& p, const PolyMat2& a) {
    return frak_D_op(p).apply(a);
}

RatMat2 frak_L(const JacobiParams& p, int N) {
    return {(p.beta - p.alpha + 1) / 2, (-2 * p.beta - 2 * N - 2) / 2,
            (-2 * p.alpha - 2 * N - 2) / 2, (p.alpha - p.beta + 1) / 2};
}

OperatorVerdict shift_check(const JacobiParams& p, int N) {
    const PolyX up = jacobi_poly({p.alpha + 1, p.beta}, N);    // P_N^{(a+1,b)}
    const PolyX down = jacobi_poly({p.alpha, p.beta + 1}, N);  // P_N^{(a,b+1)}
    const PolyX x_plus({{1, Rational(1)}, {0, Rational(1)}});
    const PolyX x_minus({{1, Rational(1)}, {0, Rational(-1)}});

    const PolyX lhs1 = x_plus * down.derivative() + (p.beta + 1) * down;
    const PolyX rhs1 = (p.beta + 1 + N) * up;
    const PolyX lhs2 = x_minus * up.derivative() + (p.alpha + 1) * up;
    const PolyX rhs2 = (p.alpha + 1 + N) * down;

    const PolyX d1 = lhs1 - rhs1;
    const PolyX d2 = lhs2 - rhs2;
    const std::string detail =
        "shift identities: (alpha,beta)=" + p.str() + " N=" + std::to_string(N);
    if (d1.is_zero() && d2.is_zero()) return OperatorVerdict::exact_pass(detail);
    return OperatorVerdict::failure(std::max(d1.max_abs_coeff(), d2.max_abs_coeff()), detail);
}

OperatorVerdict transmute_check(const Multiplicity& k, int max_degree) {
    const Multiplicity shifted(k.k1(), k.k2() + 1, k.scale(), k.mode());
    const XDiffOp op = dk_x_op(k);
    const XDiffOp op_shifted = dk_x_op(shifted);
    double residual = 0.0;
    bool all_zero = true;
    for (int d = 0; d <= max_degree; ++d) {
        for (int entry = 0; entry < 4; ++entry) {
            PolyMat2 a;
            PolyX* slot = entry == 0 ? &a.e11 : entry == 1 ? &a.e12 : entry == 2 ? &a.e21 : &a.e22;
            *slot = PolyX::monomial(d);
            const PolyMat2 defect = op_shifted.apply(a.derivative()) - op.apply(a).derivative();
            if (!defect.is_zero()) {
                all_zero = false;
                residual = std::max(residual, defect.max_abs_coeff());
            }
        }
    }
    const std::string detail = "transmutation d/dx: k=" + k.str() + " -> k'=(" +
                               to_string(k.k1()) + "," + to_string(k.k2() + 1) +
                               ") degree<=" + std::to_string(max_degree);
    if (all_zero) return OperatorVerdict::exact_pass(detail);
    return OperatorVerdict::failure(residual, detail);
}

OperatorVerdict d_squared_diagonalization_check(const Multiplicity& k, int max_degree) {
    const JacobiParams p = JacobiParams::from_multiplicity(k);
    const XDiffOp frak = frak_D_op(p);
    auto square_minus = [&](const PolyMat2& a) {
        return frak.apply(frak.apply(a)) - frak.apply(a);
    };

    double residual = 0.0;
    bool all_zero = true;
    for (int d = 0; d <= max_degree; ++d) {
        for (int entry = 0; entry < 4; ++entry) {
            PolyMat2 a;
            PolyX* slot = entry == 0 ? &a.e11 : entry == 1 ? &a.e12 : entry == 2 ? &a.e21 : &a.e22;
            *slot = PolyX::monomial(d);
            PolyMat2 image = square_minus(a);
            // The image must stay on the same matrix entry.
            *(entry == 0 ? &image.e11 : entry == 1 ? &image.e12 : entry == 2 ? &image.e21
                                                                             : &image.e22) = PolyX();
            if (!image.is_zero()) {
                all_zero = false;
                residual = std::max(residual, image.max_abs_coeff());
            }
        }
    }

    // Eigenvalue collapse: (frak-D^2 - frak-D) script-N = (N+rho)(N+rho+1) script-N.
    const Rational rho = k.rho();
    for (int N = 0; N <= std::min(max_degree, 4); ++N) {
        const PolyMat2 fam = build_N_family(p, N);
        const Rational lambda = (N + rho) * (N + rho + 1);
        const PolyMat2 defect = square_minus(fam) - lambda * fam;
        if (!defect.is_zero()) {
            all_zero = false;
            residual = std::max(residual, defect.max_abs_coeff());
        }
    }

    const std::string detail = "diagonalization of D_k^2 - D_k under U: k=" + k.str() +
                               " degree<=" + std::to_string(max_degree);
    if (all_zero) return OperatorVerdict::exact_pass(detail);
    return OperatorVerdict::failure(residual, detail);
}

}  // namespace bc1
