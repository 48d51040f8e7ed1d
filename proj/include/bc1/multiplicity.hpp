#pragma once

#include <string>

#include "bc1/errors.hpp"
#include "bc1/rational.hpp"

namespace bc1 {

enum class Mode { exact, floating };

/// Root multiplicity k = (k1, k2) with a root scale c in {1, 2}. Exact
/// mode requires nonnegative integers (the weight expands to a Laurent
/// polynomial); float mode requires k1 + k2 > -1/2 and k2 > -1/2 so the
/// weight stays integrable. Scale 2 models the doubled root system and is
/// only used by the spherical-function operators.
class Multiplicity {
public:
    Multiplicity(Rational k1, Rational k2, int scale = 1, Mode mode = Mode::exact)
        : k1_(std::move(k1)), k2_(std::move(k2)), scale_(scale), mode_(mode) {
        if (scale_ != 1 && scale_ != 2)
            throw ParameterOutOfRange("Multiplicity: scale must be 1 or 2");
        if (mode_ == Mode::exact) {
            if (!is_integer(k1_) || !is_integer(k2_) || k1_ < 0 || k2_ < 0)
                throw ParameterOutOfRange(
                    "Multiplicity: exact mode requires integer k1, k2 >= 0");
        } else {
            if (!(k1_ + k2_ > Rational(-1, 2)) || !(k2_ > Rational(-1, 2)))
                throw ParameterOutOfRange(
                    "Multiplicity: float mode requires k1+k2 > -1/2 and k2 > -1/2");
        }
    }

    const Rational& k1() const { return k1_; }
    const Rational& k2() const { return k2_; }
    int scale() const { return scale_; }
    Mode mode() const { return mode_; }
    bool exact() const { return mode_ == Mode::exact; }

    /// rho(k) = (k1 + 2 k2)/2, multiplied by the root scale.
    Rational rho() const { return Rational(scale_) * (k1_ + 2 * k2_) / 2; }

    /// Jacobi exponents alpha = k1 + k2 - 1/2, beta = k2 - 1/2 (scale 1).
    Rational alpha() const { return k1_ + k2_ - Rational(1, 2); }
    Rational beta() const { return k2_ - Rational(1, 2); }

    /// Cherednik eigenvalue on E(n, k): scale*n + rho for n > 0,
    /// scale*n - rho for n <= 0.
    Rational eigenvalue(int n) const {
        return n > 0 ? Rational(scale_) * n + rho() : Rational(scale_) * n - rho();
    }

    std::string str() const {
        std::string s = "(" + bc1::to_string(k1_) + "," + bc1::to_string(k2_) + ")";
        if (scale_ != 1) s += "@scale" + std::to_string(scale_);
        return s;
    }

    bool operator==(const Multiplicity& rhs) const = default;

private:
    Rational k1_;
    Rational k2_;
    int scale_;
    Mode mode_;
};

}  // namespace bc1
