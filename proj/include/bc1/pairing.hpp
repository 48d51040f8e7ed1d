#pragma once

#include <optional>
#include <vector>

#include "bc1/laurent.hpp"
#include "bc1/multiplicity.hpp"
#include "bc1/polyx.hpp"
#include "bc1/vectors.hpp"

namespace bc1 {

/// Gauss rule for the weight (1-x)^alpha_exp (1+x)^beta_exp on (-1, 1).
struct QuadRule {
    std::vector<double> nodes;    // strictly increasing, inside (-1, 1)
    std::vector<double> weights;  // positive
    double alpha_exp = 0.0;
    double beta_exp = 0.0;
};

/// Nodes and weights via the symmetric tridiagonal (Jacobi-matrix)
/// eigenproblem, Golub-Welsch style. Requires alpha_exp, beta_exp > -1
/// and n >= 1.
QuadRule gauss_jacobi_rule(double alpha_exp, double beta_exp, int n);

/// The expanded weight
///   delta_k(z) = (1 - (z+1/z)/2)^{k1} (1 - (z^2+1/z^2)/2)^{k2}
/// with z replaced by z^c for scale c. Exact mode only.
LaurentPoly delta_expand(const Multiplicity& k);

/// Inner products against delta_k. The exact engine pairs by constant
/// term; the float engine by Gauss-Jacobi quadrature in x = (z+1/z)/2.
/// Both compute the same normalization, so they agree on integer k.
class InnerProductEngine {
public:
    explicit InnerProductEngine(Multiplicity k);

    const Multiplicity& multiplicity() const { return k_; }
    const LaurentPoly& delta() const;

    /// (p, q)_k as the constant term of involve(p) * q * delta_k.
    /// Exact mode only.
    Rational ct_pair(const LaurentPoly& p, const LaurentPoly& q) const;

    /// Same pairing by quadrature:
    ///   (2^{k2}/pi) * integral of h_s(x) (1-x)^{k1+k2-1/2} (1+x)^{k2-1/2} dx
    /// where h_s is the symmetric part of involve(p) * q in x. Float mode
    /// only; the rule size is derived from the integrand degree per call.
    double quad_pair(const LaurentPoly& p, const LaurentPoly& q) const;

    /// Vector pairing (P, Q)_k = (1/2)(pair(P1,Q1) + pair(P2,Q2)).
    Rational vec_pair(const VecLaurent2& P, const VecLaurent2& Q) const;
    double vec_pair_quad(const VecLaurent2& P, const VecLaurent2& Q) const;

    /// Matrix-valued pairing of x-picture matrices: each column is pulled
    /// back through Phi to the Laurent picture and paired column against
    /// column, so entry (i, j) = vec_pair(col_i(A), col_j(B)).
    RatMat2 mat_pair(const PolyMat2& A, const PolyMat2& B) const;

private:
    Multiplicity k_;
    std::optional<LaurentPoly> delta_;  // exact mode only
};

}  // namespace bc1
