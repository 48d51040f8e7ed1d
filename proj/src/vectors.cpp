#include "bc1/vectors.hpp"

#include "bc1/errors.hpp"

namespace bc1 {

VecLaurent2 gamma(const LaurentPoly& p) { return {p, involve(p)}; }

namespace {

// ((z + 1/z)/2)^d expanded once per degree needed.
LaurentPoly x_power(int d) {
    LaurentPoly half_sum({{1, Rational(1, 2)}, {-1, Rational(1, 2)}});
    LaurentPoly out = LaurentPoly::constant(1);
    for (int j = 0; j < d; ++j) out *= half_sum;
    return out;
}

}  // namespace

std::pair<PolyX, PolyX> steinberg_split(const LaurentPoly& p) {
    // Peel from the extreme exponents inward. With d = max |exponent|,
    // only f1's x^d term reaches z^{-d}, and once that side is clear only
    // z f2's x^{d-1} term reaches z^d.
    PolyX f1, f2;
    LaurentPoly rest = p;
    while (!rest.is_zero()) {
        const int d = rest.max_abs_exponent();
        if (d == 0) {
            f1 += PolyX::constant(rest.constant_term());
            break;
        }
        const Rational low = rest.coeff(-d);
        if (low != 0) {
            Rational a = low;
            for (int j = 0; j < d; ++j) a *= 2;
            f1 += PolyX::monomial(d, a);
            rest -= a * x_power(d);
        } else {
            Rational a = rest.coeff(d);
            for (int j = 0; j < d - 1; ++j) a *= 2;
            f2 += PolyX::monomial(d - 1, a);
            rest -= a * x_power(d - 1).shifted(1);
        }
    }
    return {f1, f2};
}

LaurentPoly substitute_x(const PolyX& f) {
    LaurentPoly out;
    for (const auto& [d, c] : f.coeffs()) out += c * x_power(d);
    return out;
}

LaurentPoly steinberg_reassemble(const PolyX& f1, const PolyX& f2) {
    return substitute_x(f1) + substitute_x(f2).shifted(1);
}

PolyVec2 phi_transport(const VecLaurent2& P) {
    if (!P.is_invariant()) throw NotInvariant("phi_transport: input is not S2-invariant");
    auto [f1, f2] = steinberg_split(P.first);
    return {f1, f2};
}

VecLaurent2 phi_transport_inverse(const PolyVec2& v) {
    return gamma(steinberg_reassemble(v.first, v.second));
}

}  // namespace bc1
