#pragma once

#include "bc1/multiplicity.hpp"
#include "bc1/nonsym.hpp"
#include "bc1/vectors.hpp"
#include "bc1/verdict.hpp"

namespace bc1 {

/// The differential operators attached to the spin spherical functions on
/// the sphere. R_m acts on the module E_A generated by the fundamental
/// spherical functions (odd exponents); Q_m is its conjugate acting on
/// S2-invariant vectors with even exponents:
///   Q_m = diag(z, 1/z) o R_m o diag(1/z, z).
struct SphericalOp {
    enum class Kind { R, Q };
    int m = 1;
    Kind kind = Kind::R;
};

/// Exact image of F under R_m or Q_m. The rational-function entries
/// 1/(z^2 - z^{-2}) are cleared by exact division, which succeeds on the
/// documented domains:
///  - kind R: F in the E_A module (odd exponents, second = s.first);
///  - kind Q: F invariant with even exponents.
VecLaurent2 spherical_apply(const SphericalOp& op, const VecLaurent2& F);

enum class EADirection {
    to_ea,    // invariants (even exponents) -> E_A, multiply by diag(1/z, z)
    from_ea,  // E_A (odd exponents) -> invariants, multiply by diag(z, 1/z)
};

/// The module isomorphism between E_A and the even invariant vectors.
/// from_ea sends the generators (z, 1/z), (1/z, z) to (z^2, 1/z^2), (1, 1).
VecLaurent2 ea_transport(const VecLaurent2& F, EADirection direction);

/// Verdict on the identification (Q_m + I) F = Gamma_*(D_{(0,m)}) F at
/// root scale 2, for every basis vector F = Gamma(z^{2j}), |j| <= degree,
/// together with the conjugation identity Q_m = diag(z,1/z) R_m diag(1/z,z)
/// on the same basis.
OperatorVerdict identification_check(int m, int degree);

}  // namespace bc1
