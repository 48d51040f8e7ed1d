#include "bc1/nonsym.hpp"

#include "bc1/errors.hpp"

namespace bc1 {

namespace {

Multiplicity descale(const Multiplicity& k) {
    return Multiplicity(k.k1(), k.k2(), 1, k.mode());
}

}  // namespace

bool MonomialOrder::supported_below(const LaurentPoly& p, int n) {
    const int bound = rank(n);
    for (const auto& [e, c] : p.coeffs())
        if (rank(e) > bound) return false;
    return true;
}

NonsymFamily::NonsymFamily(Multiplicity k) : k_(std::move(k)), engine_(descale(k_)) {}

void NonsymFamily::extend(int target) {
    for (int r = static_cast<int>(by_rank_.size()); r <= target; ++r) {
        LaurentPoly v = LaurentPoly::monomial(MonomialOrder::exponent(r));
        for (int j = 0; j < r; ++j) {
            Rational proj = engine_.ct_pair(by_rank_[j], v);
            if (proj != 0) v -= (proj / norms_[j]) * by_rank_[j];
        }
        Rational nrm = engine_.ct_pair(v, v);
        if (nrm == 0)
            throw DegenerateGram("gram_schmidt: self-pairing vanished at rank " +
                                 std::to_string(r));
        by_rank_.push_back(std::move(v));
        norms_.push_back(std::move(nrm));
    }
}

LaurentPoly NonsymFamily::polynomial(int n) {
    if (!k_.exact()) throw ModeError("gram_schmidt: requires exact mode");
    const int r = MonomialOrder::rank(n);
    extend(r);
    return k_.scale() == 1 ? by_rank_[r] : rescale(by_rank_[r], k_.scale());
}

Rational NonsymFamily::norm_squared(int n) {
    if (!k_.exact()) throw ModeError("gram_schmidt: requires exact mode");
    const int r = MonomialOrder::rank(n);
    extend(r);
    return norms_[r];
}

LaurentPoly gram_schmidt_E(const Multiplicity& k, int n) {
    NonsymFamily family(k);
    return family.polynomial(n);
}

LaurentPoly cherednik_apply(const Multiplicity& k, const LaurentPoly& p) {
    const int c = k.scale();
    LaurentPoly out = p.z_derivative();
    if (k.k1() != 0) out += (Rational(c) * k.k1()) * reflect_divide(p, c);
    if (k.k2() != 0) out += (Rational(2 * c) * k.k2()) * reflect_divide(p, 2 * c);
    out -= k.rho() * p;
    return out;
}

OperatorVerdict eigen_check(NonsymFamily& family, int n) {
    const Multiplicity& k = family.multiplicity();
    const LaurentPoly e = family.polynomial(n);
    const LaurentPoly defect = cherednik_apply(k, e) - k.eigenvalue(n) * e;
    const std::string detail = "eigenvalue law: k=" + k.str() + " n=" + std::to_string(n) +
                               " lambda=" + to_string(k.eigenvalue(n));
    if (defect.is_zero()) return OperatorVerdict::exact_pass(detail);
    return OperatorVerdict::failure(defect.max_abs_coeff(), detail);
}

OperatorVerdict eigen_check(const Multiplicity& k, int n) {
    NonsymFamily family(k);
    return eigen_check(family, n);
}

OperatorVerdict subleading_check(NonsymFamily& family, int n) {
    const Multiplicity& k = family.multiplicity();
    if (k.scale() != 1) throw DomainError("subleading_check: scale 1 only");
    if (n < 0) throw ParameterOutOfRange("subleading_check: n must be >= 0");
    const Rational expected = k.k1() / (1 + 2 * n + 2 * k.rho());
    const Rational got = family.polynomial(n + 1).coeff(-n);
    const std::string detail = "subleading coefficient: k=" + k.str() + " n=" +
                               std::to_string(n) + " expected " + to_string(expected);
    if (got == expected) return OperatorVerdict::exact_pass(detail);
    return OperatorVerdict::failure(std::abs(to_double(got - expected)),
                                    detail + " got " + to_string(got));
}

OperatorVerdict subleading_check(const Multiplicity& k, int n) {
    NonsymFamily family(k);
    return subleading_check(family, n);
}

}  // namespace bc1
