#pragma once

#include <array>
#include <map>
#include <string>

#include "bc1/rational.hpp"

namespace bc1 {

/// Polynomial in the invariant variable x = (z + 1/z)/2, sparse map
/// degree -> coefficient, no stored zeros.
class PolyX {
public:
    using Map = std::map<int, Rational>;

    PolyX() = default;
    explicit PolyX(Map coeffs);

    static PolyX constant(Rational c);
    static PolyX monomial(int degree, Rational c = Rational(1));
    static PolyX x() { return monomial(1); }

    const Map& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int degree) const;
    int degree() const;  // -1 for the zero polynomial

    PolyX& operator+=(const PolyX& rhs);
    PolyX& operator-=(const PolyX& rhs);
    PolyX& operator*=(const Rational& scalar);
    friend PolyX operator+(PolyX lhs, const PolyX& rhs) { return lhs += rhs; }
    friend PolyX operator-(PolyX lhs, const PolyX& rhs) { return lhs -= rhs; }
    friend PolyX operator*(const PolyX& lhs, const PolyX& rhs);
    friend PolyX operator*(const Rational& scalar, PolyX p) { return p *= scalar; }
    friend PolyX operator*(PolyX p, const Rational& scalar) { return p *= scalar; }
    PolyX operator-() const;
    bool operator==(const PolyX& rhs) const { return coeffs_ == rhs.coeffs_; }

    PolyX derivative() const;
    Rational eval(const Rational& x) const;
    double max_abs_coeff() const;
    std::string str() const;

private:
    void add_term(int degree, const Rational& c);
    Map coeffs_;
};

/// Column vector in C[x] x C[x].
struct PolyVec2 {
    PolyX first;
    PolyX second;

    bool operator==(const PolyVec2& rhs) const = default;
    PolyVec2 operator-(const PolyVec2& rhs) const { return {first - rhs.first, second - rhs.second}; }
    PolyVec2 operator+(const PolyVec2& rhs) const { return {first + rhs.first, second + rhs.second}; }
    friend PolyVec2 operator*(const Rational& s, const PolyVec2& v) { return {s * v.first, s * v.second}; }
};

/// Constant 2x2 matrix over the rationals.
struct RatMat2 {
    Rational a11, a12, a21, a22;

    static RatMat2 identity() { return {1, 0, 0, 1}; }
    static RatMat2 diag(Rational d1, Rational d2) { return {std::move(d1), 0, 0, std::move(d2)}; }

    Rational det() const { return a11 * a22 - a12 * a21; }
    RatMat2 inverse() const;
    RatMat2 transpose() const { return {a11, a21, a12, a22}; }

    RatMat2 operator*(const RatMat2& rhs) const;
    RatMat2 operator-(const RatMat2& rhs) const {
        return {a11 - rhs.a11, a12 - rhs.a12, a21 - rhs.a21, a22 - rhs.a22};
    }
    friend RatMat2 operator*(const Rational& s, const RatMat2& m) {
        return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
    }
    bool operator==(const RatMat2& rhs) const = default;
    bool is_zero() const { return a11 == 0 && a12 == 0 && a21 == 0 && a22 == 0; }
    bool is_diagonal() const { return a12 == 0 && a21 == 0; }
    std::string str() const;
};

/// 2x2 matrix with polynomial entries, row-major.
struct PolyMat2 {
    PolyX e11, e12, e21, e22;

    static PolyMat2 identity();
    static PolyMat2 from_columns(const PolyVec2& col1, const PolyVec2& col2);
    static PolyMat2 from_constant(const RatMat2& m);

    PolyVec2 column(int j) const;  // j in {1, 2}
    int degree() const;
    /// Matrix of coefficients at the given x-degree.
    RatMat2 coeff_matrix(int degree) const;

    PolyMat2 derivative() const;
    PolyMat2 operator+(const PolyMat2& rhs) const;
    PolyMat2 operator-(const PolyMat2& rhs) const;
    PolyMat2 operator*(const PolyMat2& rhs) const;
    friend PolyMat2 operator*(const Rational& s, const PolyMat2& m);
    friend PolyMat2 operator*(const RatMat2& lhs, const PolyMat2& rhs);
    friend PolyMat2 operator*(const PolyMat2& lhs, const RatMat2& rhs);
    bool operator==(const PolyMat2& rhs) const = default;
    bool is_zero() const;
    double max_abs_coeff() const;
};

}  // namespace bc1
