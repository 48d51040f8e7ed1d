#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bc1/errors.hpp"
#include "bc1/nonsym.hpp"
#include "bc1/pairing.hpp"
#include "bc1/vector_valued.hpp"
#include "oracles.hpp"

using namespace bc1;

namespace {

LaurentPoly from_pairs(std::initializer_list<std::pair<int, Rational>> pairs) {
    LaurentPoly::Map m;
    for (const auto& [e, c] : pairs) m.emplace(e, c);
    return LaurentPoly(std::move(m));
}

const LaurentPoly kDelta11 = from_pairs({{0, 1},
                                         {1, Rational(-1, 4)},
                                         {-1, Rational(-1, 4)},
                                         {2, Rational(-1, 2)},
                                         {-2, Rational(-1, 2)},
                                         {3, Rational(1, 4)},
                                         {-3, Rational(1, 4)}});

}  // namespace

TEST_SUITE("pairing") {

TEST_CASE("delta expansion") {
    CHECK(delta_expand(Multiplicity(0, 1)) ==
          from_pairs({{0, 1}, {2, Rational(-1, 2)}, {-2, Rational(-1, 2)}}));
    CHECK(delta_expand(Multiplicity(1, 1)) == kDelta11);
    CHECK(delta_expand(Multiplicity(0, 0)) == LaurentPoly::constant(1));
    CHECK_THROWS_AS(delta_expand(Multiplicity(Rational(1, 2), 1, 1, Mode::floating)), ModeError);

    for (auto [k1, k2] : {std::pair{0, 1}, {1, 1}, {2, 1}, {1, 2}, {3, 2}}) {
        const LaurentPoly d = delta_expand(Multiplicity(k1, k2));
        CHECK(involve(d) == d);
        if (k1 + k2 > 0) CHECK(d.value_at_one() == 0);
    }

    // scale-2 weight is the rescaled expansion
    CHECK(delta_expand(Multiplicity(0, 1, 2)) ==
          from_pairs({{0, 1}, {4, Rational(-1, 2)}, {-4, Rational(-1, 2)}}));
}

TEST_CASE("constant-term pairing") {
    InnerProductEngine engine(Multiplicity(1, 1));
    const LaurentPoly one = LaurentPoly::constant(1);
    const LaurentPoly z = LaurentPoly::monomial(1);
    CHECK(engine.ct_pair(one, one) == 1);
    CHECK(engine.ct_pair(one, z) == Rational(-1, 4));
    CHECK(engine.ct_pair(z, z) == 1);

    oracles::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const LaurentPoly p = rng.laurent(6, 4);
        const LaurentPoly q = rng.laurent(6, 4);
        CHECK(engine.ct_pair(p, q) == engine.ct_pair(q, p));
        if (!p.is_zero()) CHECK(engine.ct_pair(p, p) > 0);
    }
}

TEST_CASE("gauss-jacobi rule") {
    SUBCASE("chebyshev three points") {
        const QuadRule rule = gauss_jacobi_rule(-0.5, -0.5, 3);
        REQUIRE(rule.nodes.size() == 3);
        const double third = std::numbers::pi / 3.0;
        CHECK(rule.nodes[0] == doctest::Approx(std::cos(5.0 * std::numbers::pi / 6.0)).epsilon(1e-14));
        CHECK(rule.nodes[1] == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(rule.nodes[2] == doctest::Approx(std::cos(std::numbers::pi / 6.0)).epsilon(1e-14));
        for (double w : rule.weights) CHECK(w == doctest::Approx(third).epsilon(1e-14));
    }
    SUBCASE("legendre midpoint") {
        const QuadRule rule = gauss_jacobi_rule(0.0, 0.0, 1);
        CHECK(rule.nodes[0] == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(rule.weights[0] == doctest::Approx(2.0).epsilon(1e-15));
    }
    SUBCASE("half-integer moment reproduces pi") {
        const QuadRule rule = gauss_jacobi_rule(0.5, -0.5, 2);
        double total = 0.0;
        for (double w : rule.weights) total += w;
        CHECK(std::abs(total - std::numbers::pi) < 1e-13);
    }
    SUBCASE("structure invariants") {
        for (int n : {1, 5, 12}) {
            const QuadRule rule = gauss_jacobi_rule(1.5, -0.25, n);
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                CHECK(rule.nodes[i] > -1.0);
                CHECK(rule.nodes[i] < 1.0);
                CHECK(rule.weights[i] > 0.0);
                if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
            }
        }
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(gauss_jacobi_rule(-1.0, 0.0, 3), ParameterOutOfRange);
        CHECK_THROWS_AS(gauss_jacobi_rule(0.0, 0.0, 0), ParameterOutOfRange);
    }
    SUBCASE("polynomial exactness to degree 2n-1") {
        // an n-point and an (n+5)-point rule must integrate x^j identically
        // for j <= 2n-1
        const int n = 6;
        const QuadRule small = gauss_jacobi_rule(1.5, 0.5, n);
        const QuadRule big = gauss_jacobi_rule(1.5, 0.5, n + 5);
        for (int j = 0; j <= 2 * n - 1; ++j) {
            auto moment = [j](const QuadRule& rule) {
                double total = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                    total += rule.weights[i] * std::pow(rule.nodes[i], j);
                return total;
            };
            CHECK(std::abs(moment(small) - moment(big)) < 1e-13);
        }
    }
}

TEST_CASE("quadrature pairing") {
    InnerProductEngine quad(Multiplicity(1, 1, 1, Mode::floating));
    const LaurentPoly one = LaurentPoly::constant(1);
    const LaurentPoly z = LaurentPoly::monomial(1);
    CHECK(std::abs(quad.quad_pair(one, one) - 1.0) < 1e-12);
    CHECK(std::abs(quad.quad_pair(one, z) + 0.25) < 1e-12);

    SUBCASE("non-integer weight is stable under rule refinement") {
        // (z^2, z^2) at k = (0, 1/2): integrate the same symmetric part
        // with the auto-sized rule and a doubled rule.
        InnerProductEngine half(Multiplicity(0, Rational(1, 2), 1, Mode::floating));
        const LaurentPoly z2 = LaurentPoly::monomial(2);
        const double value = half.quad_pair(z2, z2);
        CHECK(value > 0.0);

        const LaurentPoly sym = LaurentPoly::constant(1);  // involve(z^2) z^2 = 1
        auto [hs, hodd] = steinberg_split(sym);
        REQUIRE(hodd.is_zero());
        double refined = 0.0;
        const QuadRule rule = gauss_jacobi_rule(0.0, 0.0, 12);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            refined += rule.weights[i] * 1.0;
        refined *= std::pow(2.0, 0.5) / std::numbers::pi;
        CHECK(std::abs(value - refined) < 1e-12);
    }

    SUBCASE("mode errors") {
        InnerProductEngine exact(Multiplicity(1, 1));
        CHECK_THROWS_AS(exact.quad_pair(one, one), ModeError);
        CHECK_THROWS_AS(quad.ct_pair(one, one), ModeError);
    }
}

TEST_CASE("dual-engine agreement on integer multiplicities") {
    for (int k1 = 0; k1 <= 4; ++k1)
        for (int k2 = 0; k1 + k2 <= 4; ++k2) {
            InnerProductEngine exact(Multiplicity(k1, k2));
            InnerProductEngine quad(Multiplicity(k1, k2, 1, Mode::floating));
            for (int i = -12; i <= 12; ++i)
                for (int j = -12; j <= 12; ++j) {
                    const LaurentPoly p = LaurentPoly::monomial(i);
                    const LaurentPoly q = LaurentPoly::monomial(j);
                    const double ct = to_double(exact.ct_pair(p, q));
                    const double qd = quad.quad_pair(p, q);
                    CHECK(std::abs(qd - ct) <= 1e-10 * (1.0 + std::abs(ct)));
                }
        }
}

TEST_CASE("float-mode vector pairing") {
    InnerProductEngine quad(Multiplicity(1, 1, 1, Mode::floating));
    const VecLaurent2 g0 = gamma(LaurentPoly::constant(1));
    const VecLaurent2 g1 = gamma(LaurentPoly({{1, Rational(1)}, {0, Rational(1, 4)}}));
    CHECK(std::abs(quad.vec_pair_quad(g0, g0) - 1.0) < 1e-12);
    CHECK(std::abs(quad.vec_pair_quad(g1, g1) - 15.0 / 16.0) < 1e-12);
    CHECK(std::abs(quad.vec_pair_quad(g0, g1)) < 1e-12);
}

TEST_CASE("vector pairing") {
    InnerProductEngine engine(Multiplicity(1, 1));
    NonsymFamily family(Multiplicity(1, 1));
    const VecLaurent2 g0 = gamma(family.polynomial(0));
    const VecLaurent2 g1 = gamma(family.polynomial(1));
    CHECK(engine.vec_pair(g0, g0) == 1);
    CHECK(engine.vec_pair(g0, g1) == 0);
    CHECK(engine.vec_pair(g1, g1) == Rational(15, 16));

    oracles::Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const LaurentPoly p = rng.laurent(6, 4);
        const LaurentPoly q = rng.laurent(6, 4);
        CHECK(engine.vec_pair(gamma(p), gamma(q)) == engine.ct_pair(p, q));
    }
}

TEST_CASE("matrix pairing") {
    const Multiplicity k(1, 1);
    InnerProductEngine engine(k);
    NonsymFamily family(k);
    const PolyMat2 m0 = build_M(family, 0);
    const PolyMat2 m1 = build_M(family, 1);

    CHECK(engine.mat_pair(m0, m0) == RatMat2::diag(1, Rational(15, 16)));
    CHECK(engine.mat_pair(m0, m1).is_zero());
    CHECK(engine.mat_pair(m1, m0).is_zero());
    CHECK(engine.mat_pair(m1, m1) ==
          RatMat2::diag(family.norm_squared(-1), family.norm_squared(2)));

    SUBCASE("gram matrices are positive definite for independent columns") {
        oracles::Rng rng(29);
        for (int trial = 0; trial < 10; ++trial) {
            const PolyMat2 a{rng.polyx(3, 3), rng.polyx(3, 3), rng.polyx(3, 3), rng.polyx(3, 3)};
            const RatMat2 g = engine.mat_pair(a, a);
            CHECK(g.a12 == g.a21);
            // both leading minors nonnegative; positive when the columns
            // are independent (det of the Laurent pullbacks nonzero)
            CHECK(g.a11 >= 0);
            CHECK(g.det() >= 0);
            const PolyX det_poly = a.e11 * a.e22 - a.e12 * a.e21;
            if (!det_poly.is_zero()) {
                CHECK(g.a11 > 0);
                CHECK(g.det() > 0);
            }
        }
    }
}

}  // TEST_SUITE
