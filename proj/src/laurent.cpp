#include "bc1/laurent.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "bc1/errors.hpp"

namespace bc1 {

LaurentPoly::LaurentPoly(Map coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

LaurentPoly LaurentPoly::constant(Rational c) { return monomial(0, std::move(c)); }

LaurentPoly LaurentPoly::monomial(int exponent, Rational c) {
    LaurentPoly p;
    if (c != 0) p.coeffs_.emplace(exponent, std::move(c));
    return p;
}

Rational LaurentPoly::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent() const { return coeffs_.begin()->first; }

int LaurentPoly::max_exponent() const { return coeffs_.rbegin()->first; }

int LaurentPoly::max_abs_exponent() const {
    return std::max(std::abs(min_exponent()), std::abs(max_exponent()));
}

Rational LaurentPoly::value_at_one() const {
    Rational sum = 0;
    for (const auto& [e, c] : coeffs_) sum += c;
    return sum;
}

double LaurentPoly::max_abs_coeff() const {
    double best = 0.0;
    for (const auto& [e, c] : coeffs_) best = std::max(best, std::abs(to_double(c)));
    return best;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [e1, c1] : lhs.coeffs_)
        for (const auto& [e2, c2] : rhs.coeffs_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, c] : coeffs_) c *= scalar;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.coeffs_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::z_derivative() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_)
        if (e != 0) out.coeffs_.emplace(e, c * e);
    return out;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + shift, c);
    return out;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
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
        if (a != 1 || e == 0) os << to_string(a);
        if (e != 0) {
            if (a != 1) os << " ";
            os << "z";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly involve(const LaurentPoly& p) {
    LaurentPoly::Map flipped;
    for (const auto& [e, c] : p.coeffs()) flipped.emplace(-e, c);
    return LaurentPoly(std::move(flipped));
}

LaurentPoly rescale(const LaurentPoly& p, int c) {
    if (c < 1) throw ParameterOutOfRange("rescale: c must be >= 1");
    LaurentPoly::Map out;
    for (const auto& [e, coeff] : p.coeffs()) out.emplace(c * e, coeff);
    return LaurentPoly(std::move(out));
}

LaurentPoly divide_one_minus_z_neg(const LaurentPoly& p, int c) {
    if (c < 1) throw ParameterOutOfRange("divide_one_minus_z_neg: c must be >= 1");
    if (p.is_zero()) return {};
    // q (1 - z^{-c}) = p means q_e - q_{e+c} = p_e, solved downward from
    // the top of the support. Finite support forces the bottom c values
    // q_e, e in [min_p, min_p + c), to vanish.
    const int lo = p.min_exponent();
    const int hi = p.max_exponent();
    std::map<int, Rational> q;
    auto q_at = [&](int e) -> Rational {
        auto it = q.find(e);
        return it == q.end() ? Rational(0) : it->second;
    };
    for (int e = hi; e >= lo; --e) {
        Rational v = p.coeff(e) + q_at(e + c);
        if (v != 0) q.emplace(e, std::move(v));
    }
    for (int e = lo; e < lo + c && e <= hi; ++e) {
        if (q_at(e) != 0)
            throw NonDivisible("divide_one_minus_z_neg: remainder at exponent " +
                               std::to_string(e));
    }
    return LaurentPoly(std::move(q));
}

LaurentPoly reflect_divide(const LaurentPoly& p, int c) {
    if (c != 1 && c != 2 && c != 4)
        throw ParameterOutOfRange("reflect_divide: c must be 1, 2 or 4");
    return divide_one_minus_z_neg(p - involve(p), c);
}

}  // namespace bc1
