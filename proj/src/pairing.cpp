#include "bc1/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "bc1/errors.hpp"

namespace bc1 {

namespace {

constexpr int kMaxQLIterations = 40;

double sign_of(double x) { return x >= 0.0 ? 1.0 : -1.0; }

// Implicit-shift QL on a symmetric tridiagonal matrix (diagonal d,
// subdiagonal e). z starts as the first unit vector and accumulates the
// first row of the eigenvector matrix, which is all Golub-Welsch needs.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return;
    const double prec = std::numeric_limits<double>::epsilon();
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            while (m < n - 1 && std::abs(e[m]) > prec * (std::abs(d[m]) + std::abs(d[m + 1])))
                ++m;
            if (m == l) break;
            if (++iter > kMaxQLIterations)
                throw std::runtime_error("gauss_jacobi_rule: QL iteration limit exceeded");

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + r * sign_of(g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;

            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

}  // namespace

QuadRule gauss_jacobi_rule(double alpha_exp, double beta_exp, int n) {
    if (!(alpha_exp > -1.0) || !(beta_exp > -1.0))
        throw ParameterOutOfRange("gauss_jacobi_rule: exponents must be > -1");
    if (n < 1) throw ParameterOutOfRange("gauss_jacobi_rule: need n >= 1");

    const double ab = alpha_exp + beta_exp;
    std::vector<double> diag(n), sub(n, 0.0);

    // Three-term recurrence of the (monic) Jacobi polynomials for the
    // weight (1-x)^a (1+x)^b: diag holds the recurrence alphas, sub the
    // square roots of the betas.
    diag[0] = (beta_exp - alpha_exp) / (ab + 2.0);
    for (int j = 1; j < n; ++j) {
        const double t = 2.0 * j + ab;
        diag[j] = (beta_exp * beta_exp - alpha_exp * alpha_exp) / (t * (t + 2.0));
    }
    if (n > 1) {
        sub[0] = std::sqrt(4.0 * (alpha_exp + 1.0) * (beta_exp + 1.0) /
                           ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
        for (int j = 2; j < n; ++j) {
            const double t = 2.0 * j + ab;
            sub[j - 1] = std::sqrt(4.0 * j * (j + alpha_exp) * (j + beta_exp) * (j + ab) /
                                   ((t * t - 1.0) * t * t));
        }
    }

    // Zeroth moment: integral of the weight over (-1, 1).
    const double mu0 = std::exp((ab + 1.0) * std::numbers::ln2 + std::lgamma(alpha_exp + 1.0) +
                                std::lgamma(beta_exp + 1.0) - std::lgamma(ab + 2.0));

    std::vector<double> z(n, 0.0);
    z[0] = 1.0;
    tridiagonal_ql(diag, sub, z);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return diag[a] < diag[b]; });

    QuadRule rule;
    rule.alpha_exp = alpha_exp;
    rule.beta_exp = beta_exp;
    rule.nodes.reserve(n);
    rule.weights.reserve(n);
    for (int i : order) {
        rule.nodes.push_back(diag[i]);
        rule.weights.push_back(mu0 * z[i] * z[i]);
    }
    return rule;
}

LaurentPoly delta_expand(const Multiplicity& k) {
    if (!k.exact()) throw ModeError("delta_expand: requires exact mode");
    const LaurentPoly short_factor(
        {{0, Rational(1)}, {1, Rational(-1, 2)}, {-1, Rational(-1, 2)}});
    const LaurentPoly long_factor(
        {{0, Rational(1)}, {2, Rational(-1, 2)}, {-2, Rational(-1, 2)}});
    const long n1 = numerator(k.k1()).convert_to<long>();
    const long n2 = numerator(k.k2()).convert_to<long>();
    LaurentPoly out = LaurentPoly::constant(1);
    for (long j = 0; j < n1; ++j) out *= short_factor;
    for (long j = 0; j < n2; ++j) out *= long_factor;
    return k.scale() == 1 ? out : rescale(out, k.scale());
}

InnerProductEngine::InnerProductEngine(Multiplicity k) : k_(std::move(k)) {
    if (k_.exact()) {
        delta_ = delta_expand(k_);
    } else if (k_.scale() != 1) {
        throw DomainError("InnerProductEngine: float mode supports scale 1 only");
    }
}

const LaurentPoly& InnerProductEngine::delta() const {
    if (!delta_) throw ModeError("delta: engine is in float mode");
    return *delta_;
}

Rational InnerProductEngine::ct_pair(const LaurentPoly& p, const LaurentPoly& q) const {
    if (!delta_) throw ModeError("ct_pair: requires exact mode");
    // Constant term of involve(p) * q * delta without forming the full
    // product: sum over matching exponents.
    const LaurentPoly h = involve(p) * q;
    Rational out = 0;
    for (const auto& [e, c] : h.coeffs()) out += c * delta_->coeff(-e);
    return out;
}

double InnerProductEngine::quad_pair(const LaurentPoly& p, const LaurentPoly& q) const {
    if (k_.exact()) throw ModeError("quad_pair: requires float mode");
    const LaurentPoly h = involve(p) * q;
    if (h.is_zero()) return 0.0;

    // Symmetric part of h; the antisymmetric part integrates to zero. In
    // x = (z+1/z)/2 it reads g_0 + sum_e 2 g_e T_e(x), and evaluating the
    // Chebyshev series by its recurrence keeps the evaluation stable (the
    // monomial expansion has coefficients of size 2^deg and cancels
    // catastrophically).
    LaurentPoly sym = h + involve(h);
    sym *= Rational(1, 2);
    if (sym.is_zero()) return 0.0;

    const int deg = sym.max_exponent();
    const int size = (deg + 1) / 2 + 2;
    const double a = to_double(k_.alpha());
    const double b = to_double(k_.beta());
    const QuadRule rule = gauss_jacobi_rule(a, b, size);

    std::vector<double> cheb(deg + 1, 0.0);
    for (const auto& [e, c] : sym.coeffs())
        if (e >= 0) cheb[e] = (e == 0 ? 1.0 : 2.0) * to_double(c);

    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        double value = cheb[0];
        double t_prev = 1.0, t_cur = x;
        for (int e = 1; e <= deg; ++e) {
            value += cheb[e] * t_cur;
            const double t_next = 2.0 * x * t_cur - t_prev;
            t_prev = t_cur;
            t_cur = t_next;
        }
        total += rule.weights[i] * value;
    }
    return total * std::pow(2.0, to_double(k_.k2())) / std::numbers::pi;
}

Rational InnerProductEngine::vec_pair(const VecLaurent2& P, const VecLaurent2& Q) const {
    return (ct_pair(P.first, Q.first) + ct_pair(P.second, Q.second)) / 2;
}

double InnerProductEngine::vec_pair_quad(const VecLaurent2& P, const VecLaurent2& Q) const {
    return 0.5 * (quad_pair(P.first, Q.first) + quad_pair(P.second, Q.second));
}

RatMat2 InnerProductEngine::mat_pair(const PolyMat2& A, const PolyMat2& B) const {
    const VecLaurent2 a1 = phi_transport_inverse(A.column(1));
    const VecLaurent2 a2 = phi_transport_inverse(A.column(2));
    const VecLaurent2 b1 = phi_transport_inverse(B.column(1));
    const VecLaurent2 b2 = phi_transport_inverse(B.column(2));
    return {vec_pair(a1, b1), vec_pair(a1, b2), vec_pair(a2, b1), vec_pair(a2, b2)};
}

}  // namespace bc1
