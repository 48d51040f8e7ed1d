#pragma once

#include "bc1/laurent.hpp"
#include "bc1/multiplicity.hpp"
#include "bc1/nonsym.hpp"
#include "bc1/polyx.hpp"
#include "bc1/vector_valued.hpp"
#include "bc1/verdict.hpp"

namespace bc1 {

/// Jacobi parameters; the multiplicity dictionary is
/// alpha = k1 + k2 - 1/2, beta = k2 - 1/2.
struct JacobiParams {
    Rational alpha;
    Rational beta;

    static JacobiParams from_multiplicity(const Multiplicity& k) {
        return {k.alpha(), k.beta()};
    }
    std::string str() const { return "(" + to_string(alpha) + "," + to_string(beta) + ")"; }
};

/// Classical Jacobi polynomial P_n^{(alpha,beta)} with exact rational
/// coefficients, built by the three-term recurrence. Requires n >= 0;
/// valid for alpha + beta != -2, -3, ... which holds whenever
/// alpha, beta > -1.
PolyX jacobi_poly(const JacobiParams& p, int n);

/// Leading coefficient of P_n^{(alpha,beta)}: (n+alpha+beta+1)_n / (2^n n!).
Rational jacobi_leading(const JacobiParams& p, int n);

/// The matrix weight script-W(x) = [[2, 2x], [2x, 2]].
PolyMat2 weight_matrix();

/// The unnormalized diagonalizing matrix [[1, -1], [1, 1]]. Conjugations
/// V M V^{-1} coincide with the unitary U = V/sqrt(2) versions, so all
/// arithmetic stays rational.
RatMat2 u_matrix();
RatMat2 u_conjugate(const RatMat2& m);
PolyMat2 u_conjugate(const PolyMat2& m);

/// Verdict on V script-W V^T = 4 diag(1-x, 1+x), equivalently
/// U script-W U^* = 2 diag(1-x, 1+x).
OperatorVerdict weight_diagonalization_check();

/// script-N(N, (alpha, beta)) = diag(P_N^{(a+1,b)}, P_N^{(a,b+1)}).
PolyMat2 build_N_family(const JacobiParams& p, int N);

/// The same family normalized to a monic leading coefficient.
PolyMat2 monic_N_family(const JacobiParams& p, int N);

/// U script-M(N,k) C_N^{-1} U^{-1}, monic of degree N.
PolyMat2 monic_from_M(NonsymFamily& family, int N);
PolyMat2 monic_from_M(const Multiplicity& k, int N);

/// E(-N, k) and E(N+1, k) expressed through the classical polynomials
/// Pp = P_N^{(alpha+1,beta)} and Pm = P_N^{(alpha,beta+1)}:
///   E(-N)  = s * (S - z D),            S = Pp + Pm, D = Pp - Pm,
///   E(N+1) = s * (z (S - c D) + c S - D),
/// with c = k1/(1+2N+2rho) and the scalar s fixed by matching the
/// z^{-N} coefficient to 1. The ratio N!/(alpha+beta+1)_N is reported
/// alongside for comparison; it does not make the family monic in
/// general.
struct DecompositionRecord {
    Rational s;                      // monic-matching prefactor
    Rational c;                      // k1/(1+2N+2rho)
    Rational pochhammer_prefactor;   // N!/(alpha+beta+1)_N
    bool prefactors_agree = false;
    LaurentPoly e_minus;             // reconstructed E(-N, k)
    LaurentPoly e_plus;              // reconstructed E(N+1, k)
};

/// Builds the decomposition and verifies both reconstructions against the
/// Gram-Schmidt family; throws DecompositionMismatch on disagreement.
DecompositionRecord decompose_E(NonsymFamily& family, int N);
DecompositionRecord decompose_E(const Multiplicity& k, int N);

/// The conjugated operator
///   [[0, -(1+x)], [1-x, 0]] d/dx
///   + (1/2) [[beta-alpha+1, -2-2beta], [-2-2alpha, alpha-beta+1]].
XDiffOp frak_D_op(const JacobiParams& p);

PolyMat2 frak_D_apply(const JacobiParams& p, const PolyMat2& a);

/// Eigenvalue matrix of script-N(N) under the operator above:
///   (1/2) [[beta-alpha+1, -2beta-2N-2], [-2alpha-2N-2, alpha-beta+1]].
RatMat2 frak_L(const JacobiParams& p, int N);

/// Verdict on the pair of first-order contiguous relations
///   ((x+1) d/dx + beta + 1) P_N^{(a,b+1)} = (beta+1+N) P_N^{(a+1,b)}
///   ((x-1) d/dx + alpha + 1) P_N^{(a+1,b)} = (alpha+1+N) P_N^{(a,b+1)}.
OperatorVerdict shift_check(const JacobiParams& p, int N);

/// Verdict on the transmutation D_{k'} d/dx = d/dx D_k with
/// k' = (k1, k2+1), tested on the spanning set x^d E_ij up to the given
/// degree.
OperatorVerdict transmute_check(const Multiplicity& k, int max_degree);

/// Smoke test that the operator D_k^2 - D_k conjugates under U to one
/// with diagonal coefficients: images of x^d E_ij under
/// frak-D^2 - frak-D stay supported on the single entry (i, j), and
/// script-N(N) is an eigenfunction with the scalar eigenvalue
/// (N+rho)(N+rho+1). (D_k^2 alone keeps the off-diagonal first-order
/// part of D_k, so it is the difference that diagonalizes.)
OperatorVerdict d_squared_diagonalization_check(const Multiplicity& k, int max_degree);

}  // namespace bc1
