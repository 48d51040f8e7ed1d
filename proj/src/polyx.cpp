#include "bc1/polyx.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bc1/errors.hpp"

namespace bc1 {

PolyX::PolyX(Map coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->first < 0) throw ParameterOutOfRange("PolyX: negative degree");
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

PolyX PolyX::constant(Rational c) { return monomial(0, std::move(c)); }

PolyX PolyX::monomial(int degree, Rational c) {
    if (degree < 0) throw ParameterOutOfRange("PolyX: negative degree");
    PolyX p;
    if (c != 0) p.coeffs_.emplace(degree, std::move(c));
    return p;
}

Rational PolyX::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

int PolyX::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

void PolyX::add_term(int degree, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

PolyX& PolyX::operator+=(const PolyX& rhs) {
    for (const auto& [d, c] : rhs.coeffs_) add_term(d, c);
    return *this;
}

PolyX& PolyX::operator-=(const PolyX& rhs) {
    for (const auto& [d, c] : rhs.coeffs_) add_term(d, -c);
    return *this;
}

PolyX& PolyX::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [d, c] : coeffs_) c *= scalar;
    return *this;
}

PolyX operator*(const PolyX& lhs, const PolyX& rhs) {
    PolyX out;
    for (const auto& [d1, c1] : lhs.coeffs_)
        for (const auto& [d2, c2] : rhs.coeffs_) out.add_term(d1 + d2, c1 * c2);
    return out;
}

PolyX PolyX::operator-() const {
    PolyX out = *this;
    for (auto& [d, c] : out.coeffs_) c = -c;
    return out;
}

PolyX PolyX::derivative() const {
    PolyX out;
    for (const auto& [d, c] : coeffs_)
        if (d > 0) out.coeffs_.emplace(d - 1, c * d);
    return out;
}

Rational PolyX::eval(const Rational& x) const {
    // Horner over the dense range is overkill for sparse supports.
    Rational out = 0;
    for (const auto& [d, c] : coeffs_) {
        Rational pw = 1;
        for (int j = 0; j < d; ++j) pw *= x;
        out += c * pw;
    }
    return out;
}

double PolyX::max_abs_coeff() const {
    double best = 0.0;
    for (const auto& [d, c] : coeffs_) best = std::max(best, std::abs(to_double(c)));
    return best;
}

std::string PolyX::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [d, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1 || d == 0) os << to_string(a);
        if (d != 0) {
            if (a != 1) os << " ";
            os << "x";
            if (d != 1) os << "^" << d;
        }
    }
    return os.str();
}

RatMat2 RatMat2::inverse() const {
    Rational d = det();
    if (d == 0) throw DomainError("RatMat2: singular matrix");
    Rational inv = Rational(1) / d;
    return {inv * a22, -inv * a12, -inv * a21, inv * a11};
}

RatMat2 RatMat2::operator*(const RatMat2& rhs) const {
    return {a11 * rhs.a11 + a12 * rhs.a21, a11 * rhs.a12 + a12 * rhs.a22,
            a21 * rhs.a11 + a22 * rhs.a21, a21 * rhs.a12 + a22 * rhs.a22};
}

std::string RatMat2::str() const {
    return "[[" + to_string(a11) + ", " + to_string(a12) + "], [" + to_string(a21) + ", " +
           to_string(a22) + "]]";
}

PolyMat2 PolyMat2::identity() { return from_constant(RatMat2::identity()); }

PolyMat2 PolyMat2::from_columns(const PolyVec2& col1, const PolyVec2& col2) {
    return {col1.first, col2.first, col1.second, col2.second};
}

PolyMat2 PolyMat2::from_constant(const RatMat2& m) {
    return {PolyX::constant(m.a11), PolyX::constant(m.a12), PolyX::constant(m.a21),
            PolyX::constant(m.a22)};
}

PolyVec2 PolyMat2::column(int j) const {
    if (j == 1) return {e11, e21};
    if (j == 2) return {e12, e22};
    throw ParameterOutOfRange("PolyMat2::column: j must be 1 or 2");
}

int PolyMat2::degree() const {
    return std::max(std::max(e11.degree(), e12.degree()),
                    std::max(e21.degree(), e22.degree()));
}

RatMat2 PolyMat2::coeff_matrix(int degree) const {
    return {e11.coeff(degree), e12.coeff(degree), e21.coeff(degree), e22.coeff(degree)};
}

PolyMat2 PolyMat2::derivative() const {
    return {e11.derivative(), e12.derivative(), e21.derivative(), e22.derivative()};
}

PolyMat2 PolyMat2::operator+(const PolyMat2& rhs) const {
    return {e11 + rhs.e11, e12 + rhs.e12, e21 + rhs.e21, e22 + rhs.e22};
}

PolyMat2 PolyMat2::operator-(const PolyMat2& rhs) const {
    return {e11 - rhs.e11, e12 - rhs.e12, e21 - rhs.e21, e22 - rhs.e22};
}

PolyMat2 PolyMat2::operator*(const PolyMat2& rhs) const {
    return {e11 * rhs.e11 + e12 * rhs.e21, e11 * rhs.e12 + e12 * rhs.e22,
            e21 * rhs.e11 + e22 * rhs.e21, e21 * rhs.e12 + e22 * rhs.e22};
}

PolyMat2 operator*(const Rational& s, const PolyMat2& m) {
    return {s * m.e11, s * m.e12, s * m.e21, s * m.e22};
}

PolyMat2 operator*(const RatMat2& lhs, const PolyMat2& rhs) {
    return PolyMat2::from_constant(lhs) * rhs;
}

PolyMat2 operator*(const PolyMat2& lhs, const RatMat2& rhs) {
    return lhs * PolyMat2::from_constant(rhs);
}

bool PolyMat2::is_zero() const {
    return e11.is_zero() && e12.is_zero() && e21.is_zero() && e22.is_zero();
}

double PolyMat2::max_abs_coeff() const {
    return std::max(std::max(e11.max_abs_coeff(), e12.max_abs_coeff()),
                    std::max(e21.max_abs_coeff(), e22.max_abs_coeff()));
}

}  // namespace bc1
