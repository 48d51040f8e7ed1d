#pragma once

#include "bc1/multiplicity.hpp"
#include "bc1/nonsym.hpp"
#include "bc1/polyx.hpp"
#include "bc1/vectors.hpp"

namespace bc1 {

/// P(n, k) = Gamma(E(n, k)), the invariant C^2-valued picture.
VecLaurent2 build_P(NonsymFamily& family, int n);
VecLaurent2 build_P(const Multiplicity& k, int n);

/// The two displayed forms of the transported operator Gamma_*(D_k).
/// Both act identically on invariant vectors; they organize the
/// reflection-free matrix entries differently.
enum class GammaStarForm { first, second };

VecLaurent2 gamma_star_apply(const Multiplicity& k, const VecLaurent2& P, GammaStarForm form);

/// k1 / (1 + 2N + 2 rho), the off-diagonal entry of the leading
/// coefficient. Scale 1.
Rational subleading_c(const Multiplicity& k, int N);

/// Leading coefficient C_N(k) = 2^N [[1, c_N], [0, 1]] of script-M(N, k).
RatMat2 leading_C(const Multiplicity& k, int N);

/// script-M(N, k): first column the x-picture of P(-N, k), second column
/// that of P(N+1, k). Degree-N matrix polynomial. Scale 1, N >= 0.
PolyMat2 build_M(NonsymFamily& family, int N);
PolyMat2 build_M(const Multiplicity& k, int N);

/// First-order matrix differential operator A(x) d/dx + B acting on the
/// left of vector/matrix polynomials in x.
struct XDiffOp {
    PolyMat2 first_order;
    RatMat2 zeroth_order;

    PolyVec2 apply(const PolyVec2& v) const;
    PolyMat2 apply(const PolyMat2& a) const;
};

/// D_k in the x-picture:
///   [[-x, -1], [1, x]] d/dx + [[-rho, k1], [0, 1 + rho]].
XDiffOp dk_x_op(const Multiplicity& k);

PolyVec2 dk_x_apply(const Multiplicity& k, const PolyVec2& v);
PolyMat2 dk_x_apply(const Multiplicity& k, const PolyMat2& a);

/// Eigenvalue matrix Lambda(N, k) = diag(-N - rho, N + 1 + rho).
RatMat2 lambda_of(const Multiplicity& k, int N);

}  // namespace bc1
