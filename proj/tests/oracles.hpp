#pragma once

// Test-side oracles, kept independent of the library code paths they
// check: the Cherednik operator is re-derived from explicit geometric
// sums (no exact-division routine), the eigenfunction construction solves
// the triangular eigenproblem (no Gram-Schmidt, no pairing), and the
// Jacobi polynomials come from the hypergeometric sum (no recurrence).

#include <cstdint>

#include "bc1/classical.hpp"
#include "bc1/laurent.hpp"
#include "bc1/multiplicity.hpp"
#include "bc1/nonsym.hpp"

namespace oracles {

using bc1::JacobiParams;
using bc1::LaurentPoly;
using bc1::Multiplicity;
using bc1::PolyX;
using bc1::Rational;

// (z^e - z^{-e}) / (1 - z^{-step}) as an explicit geometric sum; valid
// whenever step divides 2e.
inline LaurentPoly geometric_reflect(int e, int step) {
    if (e == 0) return {};
    const int sign = e > 0 ? 1 : -1;
    const int top = sign * e;
    LaurentPoly::Map m;
    for (int i = top; i > -top; i -= step) m.emplace(i, Rational(sign));
    return LaurentPoly(std::move(m));
}

inline LaurentPoly cherednik(const Multiplicity& k, const LaurentPoly& p) {
    const int c = k.scale();
    LaurentPoly out = p.z_derivative();
    for (const auto& [e, coeff] : p.coeffs()) {
        if (k.k1() != 0)
            out += (Rational(c) * k.k1() * coeff) * geometric_reflect(e, c);
        if (k.k2() != 0)
            out += (Rational(2 * c) * k.k2() * coeff) * geometric_reflect(e, 2 * c);
    }
    out -= k.rho() * p;
    return out;
}

// E(n, k) as the unique monic eigenfunction of D_k supported on monomials
// <= z^n in the total order, by back-substitution on the triangular
// operator matrix. No inner product involved.
inline LaurentPoly eigen_solve_E(const Multiplicity& k, int n) {
    const int top = bc1::MonomialOrder::rank(n);
    std::vector<LaurentPoly> images(top + 1);
    for (int r = 0; r <= top; ++r)
        images[r] = cherednik(k, LaurentPoly::monomial(bc1::MonomialOrder::exponent(r)));

    const Rational lambda = k.eigenvalue(n);
    std::vector<Rational> a(top + 1, Rational(0));
    a[top] = 1;
    for (int i = top - 1; i >= 0; --i) {
        // coefficient of z^{e_i} in D_k(sum_j a_j z^{e_j}) must equal lambda a_i
        const int e_i = bc1::MonomialOrder::exponent(i);
        Rational upper = 0;
        for (int j = i + 1; j <= top; ++j)
            if (a[j] != 0) upper += a[j] * images[j].coeff(e_i);
        const Rational diag = images[i].coeff(e_i);
        a[i] = upper / (lambda - diag);
    }
    LaurentPoly::Map m;
    for (int r = 0; r <= top; ++r)
        if (a[r] != 0) m.emplace(bc1::MonomialOrder::exponent(r), a[r]);
    return LaurentPoly(std::move(m));
}

// Classical Jacobi polynomial from the terminating hypergeometric sum.
inline PolyX jacobi_2f1(const JacobiParams& p, int n) {
    const PolyX half_one_minus_x({{0, Rational(1, 2)}, {1, Rational(-1, 2)}});
    PolyX acc;
    PolyX power = PolyX::constant(1);
    for (int j = 0; j <= n; ++j) {
        const Rational term = bc1::pochhammer(-n, j) * bc1::pochhammer(n + p.alpha + p.beta + 1, j) /
                              (bc1::pochhammer(p.alpha + 1, j) * bc1::factorial(j));
        acc += term * power;
        power = power * half_one_minus_x;
    }
    return (bc1::pochhammer(p.alpha + 1, n) / bc1::factorial(n)) * acc;
}

// Small deterministic generator for property-style tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    int uniform(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational() {
        const int num = uniform(-9, 9);
        const int den = uniform(1, 5);
        return bc1::make_rational(num, den);
    }

    LaurentPoly laurent(int max_abs_exp, int terms) {
        LaurentPoly p;
        for (int t = 0; t < terms; ++t)
            p += LaurentPoly::monomial(uniform(-max_abs_exp, max_abs_exp), rational());
        return p;
    }

    PolyX polyx(int max_deg, int terms) {
        PolyX p;
        for (int t = 0; t < terms; ++t)
            p += PolyX::monomial(uniform(0, max_deg), rational());
        return p;
    }

private:
    std::uint64_t state_;
};

}  // namespace oracles
