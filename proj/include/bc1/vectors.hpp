#pragma once

#include <utility>

#include "bc1/laurent.hpp"
#include "bc1/polyx.hpp"

namespace bc1 {

/// Element of C[z, 1/z] tensor C^2, written as a pair of components.
struct VecLaurent2 {
    LaurentPoly first;
    LaurentPoly second;

    bool operator==(const VecLaurent2& rhs) const = default;
    VecLaurent2 operator+(const VecLaurent2& rhs) const {
        return {first + rhs.first, second + rhs.second};
    }
    VecLaurent2 operator-(const VecLaurent2& rhs) const {
        return {first - rhs.first, second - rhs.second};
    }
    friend VecLaurent2 operator*(const Rational& s, const VecLaurent2& v) {
        return {s * v.first, s * v.second};
    }
    /// Componentwise multiplication by a scalar Laurent polynomial.
    friend VecLaurent2 operator*(const LaurentPoly& f, const VecLaurent2& v) {
        return {f * v.first, f * v.second};
    }
    bool is_zero() const { return first.is_zero() && second.is_zero(); }
    double max_abs_coeff() const { return std::max(first.max_abs_coeff(), second.max_abs_coeff()); }

    /// The S2-invariance predicate: second = s.first.
    bool is_invariant() const { return second == involve(first); }
};

/// Gamma(p) = (p, s.p), the isomorphism onto the invariant vectors.
VecLaurent2 gamma(const LaurentPoly& p);

/// Unique decomposition p(z) = f1(x) + z f2(x) with x = (z + 1/z)/2.
std::pair<PolyX, PolyX> steinberg_split(const LaurentPoly& p);

/// The inverse substitution: f1(x) + z f2(x) back to C[z, 1/z].
LaurentPoly steinberg_reassemble(const PolyX& f1, const PolyX& f2);

/// f((z + 1/z)/2) as a Laurent polynomial.
LaurentPoly substitute_x(const PolyX& f);

/// Transport of an invariant vector P to the x-picture: the unique
/// script-P with Phi(z) script-P((z+1/z)/2) = P(z), where
/// Phi = [[1, z], [1, 1/z]]. Throws NotInvariant when the predicate fails.
PolyVec2 phi_transport(const VecLaurent2& P);

/// Inverse of phi_transport: invariant vector with the given x-picture.
VecLaurent2 phi_transport_inverse(const PolyVec2& v);

}  // namespace bc1
