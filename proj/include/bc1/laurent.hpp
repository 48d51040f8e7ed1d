#pragma once

#include <map>
#include <string>

#include "bc1/rational.hpp"

namespace bc1 {

/// Sparse Laurent polynomial with exact rational coefficients: a finitely
/// supported map exponent -> coefficient with no stored zeros. Values are
/// immutable in spirit; every operation returns a normalized copy.
class LaurentPoly {
public:
    using Map = std::map<int, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(Map coeffs);

    static LaurentPoly zero() { return {}; }
    static LaurentPoly constant(Rational c);
    static LaurentPoly monomial(int exponent, Rational c = Rational(1));

    const Map& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int exponent) const;
    Rational constant_term() const { return coeff(0); }

    // Both require a nonzero polynomial.
    int min_exponent() const;
    int max_exponent() const;
    int max_abs_exponent() const;

    /// Sum of coefficients, i.e. the value at z = 1.
    Rational value_at_one() const;

    /// Largest |coefficient| as a double, 0 for the zero polynomial.
    double max_abs_coeff() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rational& scalar);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(const Rational& scalar, LaurentPoly p) { return p *= scalar; }
    friend LaurentPoly operator*(LaurentPoly p, const Rational& scalar) { return p *= scalar; }
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// z d/dz: multiplies each coefficient by its exponent.
    LaurentPoly z_derivative() const;

    /// Multiplication by the monomial z^shift.
    LaurentPoly shifted(int shift) const;

    /// Debug rendering like "z^2 + 1/2 z + 1/6 z^-1 + 2/3".
    std::string str() const;

private:
    void add_term(int exponent, const Rational& c);

    Map coeffs_;
};

/// The Weyl involution (s.p)(z) = p(1/z): exponent negation.
LaurentPoly involve(const LaurentPoly& p);

/// Substitution z -> z^c (c >= 1).
LaurentPoly rescale(const LaurentPoly& p, int c);

/// Exact division q = p / (1 - z^{-c}); throws NonDivisible if the
/// division leaves a remainder.
LaurentPoly divide_one_minus_z_neg(const LaurentPoly& p, int c);

/// (p - s.p) / (1 - z^{-c}) computed exactly. The numerator is always
/// divisible when the support of p is c-compatible (any p for c in {1,2};
/// even-exponent p for c = 4), so NonDivisible signals misuse.
LaurentPoly reflect_divide(const LaurentPoly& p, int c);

}  // namespace bc1
