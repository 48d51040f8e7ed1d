#pragma once

#include <vector>

#include "bc1/laurent.hpp"
#include "bc1/multiplicity.hpp"
#include "bc1/pairing.hpp"
#include "bc1/verdict.hpp"

namespace bc1 {

/// The total order on monomials, 1 < z < 1/z < z^2 < 1/z^2 < ...
/// rank 0 <-> exponent 0, rank 2n-1 <-> z^n, rank 2n <-> z^{-n} (n > 0).
struct MonomialOrder {
    static int rank(int exponent) {
        if (exponent == 0) return 0;
        return exponent > 0 ? 2 * exponent - 1 : -2 * exponent;
    }
    static int exponent(int rank) {
        if (rank == 0) return 0;
        return rank % 2 ? (rank + 1) / 2 : -rank / 2;
    }
    /// True when every monomial of p is <= z^n in the order.
    static bool supported_below(const LaurentPoly& p, int n);
};

/// The orthogonal family E(n, k) obtained by Gram-Schmidt on the totally
/// ordered monomial basis against delta_k. Each member is monic in z^n.
/// The cache grows monotonically and is not synchronized; confine one
/// instance to one worker.
class NonsymFamily {
public:
    explicit NonsymFamily(Multiplicity k);

    const Multiplicity& multiplicity() const { return k_; }

    /// E(n, k); exact mode only. For scale c the result lives in the
    /// rescaled lattice (z -> z^c).
    LaurentPoly polynomial(int n);

    /// ct self-pairing of E(n, k), always positive here.
    Rational norm_squared(int n);

private:
    void extend(int rank);

    Multiplicity k_;
    InnerProductEngine engine_;            // scale-1 engine
    std::vector<LaurentPoly> by_rank_;     // scale-1 picture
    std::vector<Rational> norms_;
};

/// One-shot E(n, k) without keeping the family around.
LaurentPoly gram_schmidt_E(const Multiplicity& k, int n);

/// The Cherednik operator
///   D_k = z d/dz + c k1 (1 - z^{-c})^{-1}(1-s)
///              + 2c k2 (1 - z^{-2c})^{-1}(1-s) - rho
/// for root scale c, applied exactly. Works for any rational k1, k2.
LaurentPoly cherednik_apply(const Multiplicity& k, const LaurentPoly& p);

/// Verdict on D_k E(n,k) = lambda_n E(n,k) with lambda_n from the
/// multiplicity (scale*n + rho for n > 0, scale*n - rho otherwise).
OperatorVerdict eigen_check(NonsymFamily& family, int n);
OperatorVerdict eigen_check(const Multiplicity& k, int n);

/// Verdict on the subleading coefficient of E(n+1, k): the z^{-n}
/// coefficient equals k1 / (1 + 2n + 2 rho). Scale 1, n >= 0.
OperatorVerdict subleading_check(NonsymFamily& family, int n);
OperatorVerdict subleading_check(const Multiplicity& k, int n);

}  // namespace bc1
