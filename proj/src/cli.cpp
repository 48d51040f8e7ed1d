#include "bc1/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bc1/classical.hpp"
#include "bc1/errors.hpp"
#include "bc1/nonsym.hpp"
#include "bc1/pairing.hpp"
#include "bc1/records.hpp"
#include "bc1/spherical.hpp"
#include "bc1/vector_valued.hpp"

namespace bc1::cli {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

const std::vector<std::pair<int, int>> kDefaultKs = {{0, 1}, {1, 1}, {2, 1}, {1, 2}, {3, 2}};
const std::vector<std::pair<std::string, std::string>> kDefaultAlphaBetas = {
    {"3/2", "1/2"}, {"5/2", "1/2"}, {"7/2", "3/2"}};
const std::vector<std::pair<int, int>> kDefaultTransmuteKs = {{1, 1}, {0, 1}};

struct CaseResult {
    std::string id;
    OperatorVerdict verdict;
    double ms = 0.0;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

OperatorVerdict aggregate(const std::vector<OperatorVerdict>& verdicts, std::string detail) {
    bool exact = true;
    double residual = 0.0;
    bool ok = true;
    for (const auto& v : verdicts) {
        if (!v.ok()) ok = false;
        if (v.status != VerdictStatus::holds_exact) exact = false;
        residual = std::max(residual, v.residual);
    }
    if (!ok) return OperatorVerdict::failure(residual, std::move(detail));
    if (exact) return OperatorVerdict::exact_pass(std::move(detail));
    return OperatorVerdict::approx_pass(residual, std::move(detail));
}

void run_case(std::vector<CaseResult>& cases, const std::string& id,
              const std::function<OperatorVerdict()>& body) {
    Stopwatch watch;
    OperatorVerdict verdict;
    try {
        verdict = body();
    } catch (const DecompositionMismatch& ex) {
        verdict = OperatorVerdict::failure(0.0, ex.what());
    }
    cases.push_back({id, std::move(verdict), watch.ms()});
}

// ---------------------------------------------------------------- verify

void suite_eigen(const Multiplicity& k, int range, std::vector<CaseResult>& cases) {
    run_case(cases, "eigen " + k.str(), [&] {
        NonsymFamily family(k);
        std::vector<OperatorVerdict> all;
        for (int n = -range; n <= range; ++n) all.push_back(eigen_check(family, n));
        return aggregate(all, "eigenvalue law: k=" + k.str() + " n in [-" +
                                  std::to_string(range) + "," + std::to_string(range) + "]");
    });
    run_case(cases, "subleading " + k.str(), [&] {
        NonsymFamily family(k);
        std::vector<OperatorVerdict> all;
        for (int n = 0; n <= range; ++n) all.push_back(subleading_check(family, n));
        return aggregate(all, "subleading coefficient: k=" + k.str() + " n in [0," +
                                  std::to_string(range) + "]");
    });
}

void suite_lowdeg(const Multiplicity& k, std::vector<CaseResult>& cases) {
    run_case(cases, "lowdeg " + k.str(), [&] {
        NonsymFamily family(k);
        const Rational rho = k.rho();
        const Rational c = k.k1() / (1 + 2 * rho);
        const VecLaurent2 p0 = build_P(family, 0);
        const VecLaurent2 p1 = build_P(family, 1);
        bool ok = p0.first == LaurentPoly::constant(1) && p0.second == p0.first;
        ok = ok && p1.first == LaurentPoly({{1, Rational(1)}, {0, c}});
        for (GammaStarForm form : {GammaStarForm::first, GammaStarForm::second}) {
            ok = ok && gamma_star_apply(k, p0, form) == (-rho) * p0;
            ok = ok && gamma_star_apply(k, p1, form) == (1 + rho) * p1;
        }
        const std::string detail =
            "P(0,k), P(1,k) and their transported eigenvalues: k=" + k.str();
        return ok ? OperatorVerdict::exact_pass(detail) : OperatorVerdict::failure(1.0, detail);
    });
}

void suite_quad(const Multiplicity& k, int degree, double tol,
                std::vector<CaseResult>& cases) {
    run_case(cases, "quadrature " + k.str(), [&] {
        const InnerProductEngine exact(k);
        const InnerProductEngine quad(
            Multiplicity(k.k1(), k.k2(), 1, Mode::floating));
        double worst = 0.0;
        for (int i = -degree; i <= degree; ++i)
            for (int j = -degree; j <= degree; ++j) {
                const Rational ct =
                    exact.ct_pair(LaurentPoly::monomial(i), LaurentPoly::monomial(j));
                const double qd =
                    quad.quad_pair(LaurentPoly::monomial(i), LaurentPoly::monomial(j));
                worst = std::max(worst, std::abs(qd - to_double(ct)) /
                                            (1.0 + std::abs(to_double(ct))));
            }
        const QuadRule rule = gauss_jacobi_rule(0.5, -0.5, 2);
        const double moment = rule.weights[0] + rule.weights[1];
        worst = std::max(worst, std::abs(moment - std::numbers::pi));
        const std::string detail = "quadrature engine agrees with the constant-term "
                                   "pairing: k=" + k.str();
        return worst <= tol ? OperatorVerdict::approx_pass(worst, detail)
                            : OperatorVerdict::failure(worst, detail);
    });
}

void suite_ortho(const Multiplicity& k, int range, std::vector<CaseResult>& cases) {
    run_case(cases, "ortho " + k.str(), [&] {
        NonsymFamily family(k);
        InnerProductEngine engine(k);
        bool ok = true;
        for (int n = -range; n <= range; ++n) {
            const LaurentPoly en = family.polynomial(n);
            if (en.coeff(n) != 1 || !MonomialOrder::supported_below(en, n)) ok = false;
            for (int m = n + 1; m <= range; ++m)
                if (engine.ct_pair(en, family.polynomial(m)) != 0) ok = false;
        }
        const std::string detail = "orthogonality, monicity and support bound: k=" + k.str() +
                                   " |n| <= " + std::to_string(range);
        return ok ? OperatorVerdict::exact_pass(detail) : OperatorVerdict::failure(1.0, detail);
    });
    run_case(cases, "gamma unitarity " + k.str(), [&] {
        NonsymFamily family(k);
        InnerProductEngine engine(k);
        bool ok = true;
        for (int n = -range / 2; n <= range / 2; ++n)
            for (int m = -range / 2; m <= range / 2; ++m) {
                const LaurentPoly en = family.polynomial(n);
                const LaurentPoly em = family.polynomial(m);
                if (engine.vec_pair(gamma(en), gamma(em)) != engine.ct_pair(en, em)) ok = false;
            }
        const std::string detail = "Gamma preserves the pairing: k=" + k.str();
        return ok ? OperatorVerdict::exact_pass(detail) : OperatorVerdict::failure(1.0, detail);
    });
}

void suite_matrix(const Multiplicity& k, int max_n, std::vector<CaseResult>& cases) {
    run_case(cases, "matrix leading " + k.str(), [&] {
        NonsymFamily family(k);
        std::vector<OperatorVerdict> all;
        for (int n = 0; n <= max_n; ++n) {
            const PolyMat2 m = build_M(family, n);
            const bool ok = m.degree() == n && m.coeff_matrix(n) == leading_C(k, n);
            all.push_back(ok ? OperatorVerdict::exact_pass("")
                             : OperatorVerdict::failure(1.0, ""));
        }
        return aggregate(all, "leading coefficient of script-M: k=" + k.str());
    });
    run_case(cases, "matrix eigen " + k.str(), [&] {
        NonsymFamily family(k);
        std::vector<OperatorVerdict> all;
        for (int n = 0; n <= max_n; ++n) {
            const PolyMat2 m = build_M(family, n);
            const PolyMat2 defect = dk_x_apply(k, m) - m * lambda_of(k, n);
            all.push_back(defect.is_zero() ? OperatorVerdict::exact_pass("")
                                           : OperatorVerdict::failure(defect.max_abs_coeff(), ""));
        }
        return aggregate(all, "D_k script-M = script-M Lambda: k=" + k.str());
    });
    run_case(cases, "matrix orthogonality " + k.str(), [&] {
        NonsymFamily family(k);
        InnerProductEngine engine(k);
        bool ok = true;
        std::vector<PolyMat2> ms;
        for (int n = 0; n <= max_n; ++n) ms.push_back(build_M(family, n));
        for (int n = 0; n <= max_n; ++n)
            for (int m = 0; m <= max_n; ++m) {
                const RatMat2 g = engine.mat_pair(ms[n], ms[m]);
                if (n != m && !g.is_zero()) ok = false;
                if (n == m && (!g.is_diagonal() || !(g.a11 > 0) || !(g.a22 > 0))) ok = false;
            }
        const std::string detail = "matrix family orthogonality: k=" + k.str() + " N <= " +
                                   std::to_string(max_n);
        return ok ? OperatorVerdict::exact_pass(detail) : OperatorVerdict::failure(1.0, detail);
    });
    run_case(cases, "monic uniqueness " + k.str(), [&] {
        NonsymFamily family(k);
        const JacobiParams p = JacobiParams::from_multiplicity(k);
        std::vector<OperatorVerdict> all;
        for (int n = 0; n <= max_n; ++n) {
            const PolyMat2 defect = monic_from_M(family, n) - monic_N_family(p, n);
            all.push_back(defect.is_zero() ? OperatorVerdict::exact_pass("")
                                           : OperatorVerdict::failure(defect.max_abs_coeff(), ""));
        }
        return aggregate(all, "monic family matches the classical diagonal family: k=" + k.str());
    });
    run_case(cases, "decomposition " + k.str(), [&] {
        NonsymFamily family(k);
        for (int n = 0; n <= max_n; ++n) decompose_E(family, n);  // throws on mismatch
        return OperatorVerdict::exact_pass(
            "decomposition into classical Jacobi polynomials: k=" + k.str() + " N <= " +
            std::to_string(max_n));
    });
    run_case(cases, "frak eigen " + k.str(), [&] {
        const JacobiParams p = JacobiParams::from_multiplicity(k);
        std::vector<OperatorVerdict> all;
        for (int n = 0; n <= max_n; ++n) {
            const PolyMat2 fam = build_N_family(p, n);
            const PolyMat2 defect = frak_D_apply(p, fam) - fam * frak_L(p, n);
            all.push_back(defect.is_zero() ? OperatorVerdict::exact_pass("")
                                           : OperatorVerdict::failure(defect.max_abs_coeff(), ""));
        }
        return aggregate(all, "conjugated operator eigenvalue law: (alpha,beta)=" + p.str());
    });
}

void suite_shift(const JacobiParams& p, int max_n, std::vector<CaseResult>& cases) {
    run_case(cases, "shift " + p.str(), [&] {
        std::vector<OperatorVerdict> all;
        for (int n = 0; n <= max_n; ++n) all.push_back(shift_check(p, n));
        return aggregate(all, "shift identities: (alpha,beta)=" + p.str() + " N <= " +
                                  std::to_string(max_n));
    });
}

void suite_transmute(const Multiplicity& k, int degree, std::vector<CaseResult>& cases) {
    run_case(cases, "transmute " + k.str(), [&] { return transmute_check(k, degree); });
    run_case(cases, "dsquared " + k.str(),
             [&] { return d_squared_diagonalization_check(k, degree); });
}

void suite_spherical(int m, int degree, std::vector<CaseResult>& cases) {
    run_case(cases, "spherical identification m=" + std::to_string(m),
             [&] { return identification_check(m, degree); });
    run_case(cases, "spherical eigenvalues m=" + std::to_string(m), [&] {
        const VecLaurent2 plus{LaurentPoly::monomial(1), LaurentPoly::monomial(-1)};
        const VecLaurent2 minus{LaurentPoly::monomial(-1), LaurentPoly::monomial(1)};
        const SphericalOp op{m, SphericalOp::Kind::R};
        const Rational lambda(2 * m + 1);
        const VecLaurent2 d1 = spherical_apply(op, plus) - lambda * plus;
        const VecLaurent2 d2 = spherical_apply(op, minus) + lambda * minus;
        const std::string detail = "fundamental spherical eigenvalues +-(2m+1): m=" +
                                   std::to_string(m);
        if (d1.is_zero() && d2.is_zero()) return OperatorVerdict::exact_pass(detail);
        return OperatorVerdict::failure(std::max(d1.max_abs_coeff(), d2.max_abs_coeff()),
                                        detail);
    });
}

void suite_weight(std::vector<CaseResult>& cases) {
    run_case(cases, "weight diagonalization", [] { return weight_diagonalization_check(); });
}

void suite_forms(const Multiplicity& k, int degree, std::vector<CaseResult>& cases) {
    run_case(cases, "operator forms " + k.str(), [&] {
        bool ok = true;
        double residual = 0.0;
        for (int j = -degree; j <= degree; ++j) {
            const VecLaurent2 basis = gamma(LaurentPoly::monomial(j));
            const VecLaurent2 defect = gamma_star_apply(k, basis, GammaStarForm::first) -
                                       gamma_star_apply(k, basis, GammaStarForm::second);
            if (!defect.is_zero()) {
                ok = false;
                residual = std::max(residual, defect.max_abs_coeff());
            }
        }
        const std::string detail = "two forms of the transported operator agree: k=" + k.str();
        return ok ? OperatorVerdict::exact_pass(detail)
                  : OperatorVerdict::failure(residual, detail);
    });
}

// --------------------------------------------------------------- records

std::string format_int(int v) { return std::to_string(v); }

std::vector<PolyRecord> compute_records(const std::string& family, const Multiplicity& k,
                                        std::optional<int> n, std::optional<int> big_n,
                                        std::optional<int> m,
                                        const std::optional<JacobiParams>& ab) {
    std::vector<PolyRecord> records;
    const std::string k1 = to_string(k.k1());
    const std::string k2 = to_string(k.k2());

    if (family == "E") {
        if (!n) throw ParameterOutOfRange("compute: family E needs --n");
        records.push_back(PolyRecord::from_laurent("E", k1, k2, k.scale(),
                                                   {{"n", format_int(*n)}},
                                                   gram_schmidt_E(k, *n)));
    } else if (family == "P") {
        if (!n) throw ParameterOutOfRange("compute: family P needs --n");
        const VecLaurent2 p = build_P(k, *n);
        records.push_back(PolyRecord::from_laurent(
            "P", k1, k2, k.scale(), {{"n", format_int(*n)}, {"component", "1"}}, p.first));
        records.push_back(PolyRecord::from_laurent(
            "P", k1, k2, k.scale(), {{"n", format_int(*n)}, {"component", "2"}}, p.second));
    } else if (family == "M" || family == "monic") {
        if (!big_n) throw ParameterOutOfRange("compute: family " + family + " needs --N");
        NonsymFamily fam(k);
        const PolyMat2 mat =
            family == "M" ? build_M(fam, *big_n) : monic_from_M(fam, *big_n);
        const PolyX* entries[2][2] = {{&mat.e11, &mat.e12}, {&mat.e21, &mat.e22}};
        for (int r = 1; r <= 2; ++r)
            for (int c = 1; c <= 2; ++c)
                records.push_back(PolyRecord::from_polyx(
                    family, k1, k2, k.scale(),
                    {{"N", format_int(*big_n)}, {"row", format_int(r)}, {"col", format_int(c)}},
                    *entries[r - 1][c - 1]));
    } else if (family == "N") {
        if (!big_n) throw ParameterOutOfRange("compute: family N needs --N");
        const JacobiParams p = ab ? *ab : JacobiParams::from_multiplicity(k);
        const PolyMat2 mat = build_N_family(p, *big_n);
        const PolyX* entries[2][2] = {{&mat.e11, &mat.e12}, {&mat.e21, &mat.e22}};
        // Jacobi parameters determine the multiplicity: k1 = alpha - beta,
        // k2 = beta + 1/2.
        const std::string nk1 = to_string(p.alpha - p.beta);
        const std::string nk2 = to_string(p.beta + Rational(1, 2));
        for (int r = 1; r <= 2; ++r)
            for (int c = 1; c <= 2; ++c)
                records.push_back(PolyRecord::from_polyx(
                    "N", nk1, nk2, 1,
                    {{"N", format_int(*big_n)},
                     {"alpha", to_string(p.alpha)},
                     {"beta", to_string(p.beta)},
                     {"row", format_int(r)},
                     {"col", format_int(c)}},
                    *entries[r - 1][c - 1]));
    } else if (family == "spherical") {
        if (!m || !n) throw ParameterOutOfRange("compute: family spherical needs --m and --n");
        const Multiplicity km(0, *m, 2, Mode::exact);
        const VecLaurent2 even = gamma(gram_schmidt_E(km, *n));
        const VecLaurent2 sph = ea_transport(even, EADirection::to_ea);
        const Params base = {{"m", format_int(*m)}, {"n", format_int(*n)}};
        Params p1 = base;
        p1.emplace_back("component", "1");
        Params p2 = base;
        p2.emplace_back("component", "2");
        records.push_back(PolyRecord::from_laurent("spherical", "0", format_int(*m), 2,
                                                   std::move(p1), sph.first));
        records.push_back(PolyRecord::from_laurent("spherical", "0", format_int(*m), 2,
                                                   std::move(p2), sph.second));
    } else {
        throw ParameterOutOfRange("compute: unknown family '" + family + "'");
    }
    return records;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + out_path);
    file << text;
}

int print_report(const std::vector<CaseResult>& cases, std::ostream& out) {
    std::vector<CaseResult> sorted = cases;
    std::sort(sorted.begin(), sorted.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
    bool all_ok = true;
    for (const CaseResult& c : sorted) {
        const char* tag = c.verdict.ok() ? "PASS" : "FAIL";
        out << "[" << tag << "] " << c.verdict.detail;
        if (c.verdict.status == VerdictStatus::holds_exact)
            out << " (exact)";
        else
            out << " (residual " << std::scientific << std::setprecision(3)
                << c.verdict.residual << std::defaultfloat << ")";
        out << " [" << std::fixed << std::setprecision(1) << c.ms << std::defaultfloat
            << " ms]\n";
        if (!c.verdict.ok()) all_ok = false;
    }
    out << (all_ok ? "all checks passed" : "CHECKS FAILED") << " (" << sorted.size()
        << " cases)\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"nonsymmetric, vector- and matrix-valued Jacobi polynomials "
                 "for the rank-one root system BC1"};
    app.require_subcommand(1);

    std::string k1_text = "0", k2_text = "1";
    bool k_given = false;
    std::string mode_text = "exact";
    int scale = 1;

    // ---- compute
    auto* compute = app.add_subcommand("compute", "compute a polynomial family member");
    std::string family, format = "json", out_path;
    std::optional<int> n_opt, big_n_opt, m_opt;
    std::optional<std::string> alpha_text, beta_text;
    compute->add_option("--family", family, "E | P | M | N | monic | spherical")->required();
    compute->add_option("--k1", k1_text, "multiplicity k1 (rational p/q)");
    compute->add_option("--k2", k2_text, "multiplicity k2 (rational p/q)");
    compute->add_option("--n", n_opt, "index n (families E, P, spherical)");
    compute->add_option("--N", big_n_opt, "degree N (families M, N, monic)");
    compute->add_option("--m", m_opt, "spherical parameter m");
    compute->add_option("--alpha", alpha_text, "Jacobi alpha (family N)");
    compute->add_option("--beta", beta_text, "Jacobi beta (family N)");
    compute->add_option("--scale", scale, "root scale (1 or 2)");
    compute->add_option("--mode", mode_text, "exact | float");
    compute->add_option("--format", format, "json | csv");
    compute->add_option("--out", out_path, "write to file instead of stdout");

    // ---- verify
    auto* verify = app.add_subcommand("verify", "run identity checks");
    std::string suite = "all";
    int range = 8, matrix_n = -1, degree = -1;
    double tol = 1e-10;
    verify->add_option("--suite", suite,
                       "eigen | ortho | matrix | shift | transmute | spherical | all");
    verify->add_option("--k1", k1_text)->each([&](const std::string&) { k_given = true; });
    verify->add_option("--k2", k2_text)->each([&](const std::string&) { k_given = true; });
    verify->add_option("--range", range, "index range for eigen/ortho (default 8)");
    verify->add_option("--N", matrix_n, "degree bound (matrix default 6, shift default 12)");
    verify->add_option("--degree", degree,
                       "degree bound (transmute default 8, spherical default 10)");
    verify->add_option("--m", m_opt, "restrict the spherical suite to one m");
    verify->add_option("--alpha", alpha_text, "Jacobi alpha for the shift suite");
    verify->add_option("--beta", beta_text, "Jacobi beta for the shift suite");
    verify->add_option("--mode", mode_text, "exact | float");
    verify->add_option("--tol", tol, "tolerance for numerical residuals");

    // ---- crosscheck
    auto* crosscheck =
        app.add_subcommand("crosscheck", "compare the exact and quadrature pairings");
    int cc_degree = 12;
    crosscheck->add_option("--k1", k1_text);
    crosscheck->add_option("--k2", k2_text);
    crosscheck->add_option("--degree", cc_degree, "monomial degree bound (default 12)");
    crosscheck->add_option("--tol", tol, "relative tolerance (default 1e-10)");

    try {
        std::vector<const char*> argv;
        argv.push_back("bc1jacobi");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    }

    try {
        if (mode_text != "float" && mode_text != "exact")
            throw ParameterOutOfRange("mode must be exact or float");
        const Mode mode = mode_text == "float" ? Mode::floating : Mode::exact;

        std::optional<JacobiParams> ab;
        if (alpha_text && beta_text)
            ab = JacobiParams{parse_rational(*alpha_text), parse_rational(*beta_text)};
        else if (alpha_text || beta_text)
            throw ParameterOutOfRange("--alpha and --beta must be given together");

        if (compute->parsed()) {
            const Multiplicity k(parse_rational(k1_text), parse_rational(k2_text), scale, mode);
            const auto records = compute_records(family, k, n_opt, big_n_opt, m_opt, ab);
            if (format == "json")
                emit(records_to_json(records), out_path, out);
            else if (format == "csv")
                emit(records_to_csv(records), out_path, out);
            else
                throw ParameterOutOfRange("format must be json or csv");
            return 0;
        }

        if (verify->parsed()) {
            std::vector<Multiplicity> ks;
            if (k_given) {
                ks.emplace_back(parse_rational(k1_text), parse_rational(k2_text), 1, mode);
            } else {
                for (auto [a, b] : kDefaultKs) ks.emplace_back(a, b, 1, mode);
            }
            std::vector<JacobiParams> abs;
            if (ab) {
                abs.push_back(*ab);
            } else {
                for (const auto& [a, b] : kDefaultAlphaBetas)
                    abs.push_back({parse_rational(a), parse_rational(b)});
            }
            std::vector<int> ms;
            if (m_opt) {
                ms.push_back(*m_opt);
            } else {
                for (int m = 1; m <= 5; ++m) ms.push_back(m);
            }

            std::vector<CaseResult> cases;
            const bool all = suite == "all";
            if (all || suite == "eigen")
                for (const auto& k : ks) suite_eigen(k, range, cases);
            if (all || suite == "ortho") {
                for (const auto& k : ks) {
                    suite_ortho(k, range, cases);
                    suite_lowdeg(k, cases);
                }
                suite_quad(ks.front().exact() ? ks.front() : Multiplicity(1, 1), 6, tol,
                           cases);
            }
            if (all || suite == "matrix") {
                suite_weight(cases);
                const int bound = matrix_n > 0 ? matrix_n : 6;
                for (const auto& k : ks) {
                    suite_matrix(k, bound, cases);
                    suite_forms(k, std::min(range, 10), cases);
                }
            }
            if (all || suite == "shift") {
                const int bound = matrix_n > 0 ? matrix_n : 12;
                for (const auto& p : abs) suite_shift(p, bound, cases);
            }
            if (all || suite == "transmute") {
                const int bound = degree > 0 ? degree : 8;
                std::vector<Multiplicity> tks;
                if (k_given)
                    tks = ks;
                else
                    for (auto [a, b] : kDefaultTransmuteKs) tks.emplace_back(a, b, 1, mode);
                for (const auto& k : tks) suite_transmute(k, bound, cases);
            }
            if (all || suite == "spherical") {
                const int bound = degree > 0 ? degree : 10;
                for (int m : ms) suite_spherical(m, bound, cases);
            }
            if (cases.empty()) throw ParameterOutOfRange("unknown suite '" + suite + "'");
            return print_report(cases, out);
        }

        if (crosscheck->parsed()) {
            const Rational rk1 = parse_rational(k1_text);
            const Rational rk2 = parse_rational(k2_text);
            const InnerProductEngine exact(Multiplicity(rk1, rk2, 1, Mode::exact));
            const InnerProductEngine quad(Multiplicity(rk1, rk2, 1, Mode::floating));
            double worst = 0.0;
            for (int i = -cc_degree; i <= cc_degree; ++i)
                for (int j = -cc_degree; j <= cc_degree; ++j) {
                    const LaurentPoly p = LaurentPoly::monomial(i);
                    const LaurentPoly q = LaurentPoly::monomial(j);
                    const Rational ct = exact.ct_pair(p, q);
                    const double qd = quad.quad_pair(p, q);
                    const double scaled =
                        std::abs(qd - to_double(ct)) / (1.0 + std::abs(to_double(ct)));
                    worst = std::max(worst, scaled);
                }
            out << "crosscheck k=(" << to_string(rk1) << "," << to_string(rk2)
                << ") degree<=" << cc_degree << ": max scaled deviation " << std::scientific
                << std::setprecision(3) << worst << std::defaultfloat << " (tol " << tol
                << ")\n";
            return worst <= tol ? 0 : 1;
        }
    } catch (const ParameterOutOfRange& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const ModeError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const DomainError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        err << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace bc1::cli
