#include <doctest.h>

#include "bc1/errors.hpp"
#include "bc1/nonsym.hpp"
#include "bc1/pairing.hpp"
#include "oracles.hpp"

using namespace bc1;

namespace {

LaurentPoly from_pairs(std::initializer_list<std::pair<int, Rational>> pairs) {
    LaurentPoly::Map m;
    for (const auto& [e, c] : pairs) m.emplace(e, c);
    return LaurentPoly(std::move(m));
}

const std::initializer_list<std::pair<int, int>> kTestKs = {{0, 1}, {1, 1}, {2, 1}, {1, 2}};

}  // namespace

TEST_SUITE("nonsym") {

TEST_CASE("monomial order") {
    CHECK(MonomialOrder::rank(0) == 0);
    CHECK(MonomialOrder::rank(1) == 1);
    CHECK(MonomialOrder::rank(-1) == 2);
    CHECK(MonomialOrder::rank(3) == 5);
    CHECK(MonomialOrder::rank(-3) == 6);
    for (int r = 0; r <= 20; ++r) CHECK(MonomialOrder::rank(MonomialOrder::exponent(r)) == r);
}

TEST_CASE("gram-schmidt golden values") {
    NonsymFamily family(Multiplicity(1, 1));
    CHECK(family.polynomial(0) == LaurentPoly::constant(1));
    CHECK(family.polynomial(1) == from_pairs({{1, 1}, {0, Rational(1, 4)}}));
    CHECK(family.polynomial(-1) ==
          from_pairs({{-1, 1}, {1, Rational(3, 5)}, {0, Rational(2, 5)}}));
    CHECK(family.polynomial(2) == from_pairs({{2, 1},
                                              {1, Rational(1, 2)},
                                              {0, Rational(2, 3)},
                                              {-1, Rational(1, 6)}}));

    NonsymFamily any_k(Multiplicity(3, 2));
    CHECK(any_k.polynomial(0) == LaurentPoly::constant(1));

    NonsymFamily free_case(Multiplicity(0, 0));
    CHECK(free_case.polynomial(4) == LaurentPoly::monomial(4));
    CHECK(free_case.polynomial(-5) == LaurentPoly::monomial(-5));
}

TEST_CASE("mode error in float mode") {
    NonsymFamily family(Multiplicity(Rational(1, 2), Rational(1, 2), 1, Mode::floating));
    CHECK_THROWS_AS(family.polynomial(1), ModeError);
}

TEST_CASE("monicity, support bound and orthogonality") {
    for (auto [k1, k2] : kTestKs) {
        const Multiplicity k(k1, k2);
        NonsymFamily family(k);
        InnerProductEngine engine(k);
        for (int n = -8; n <= 8; ++n) {
            const LaurentPoly e_n = family.polynomial(n);
            CHECK(e_n.coeff(n) == 1);
            CHECK(MonomialOrder::supported_below(e_n, n));
            for (int m = n + 1; m <= 8; ++m)
                CHECK(engine.ct_pair(e_n, family.polynomial(m)) == 0);
        }
    }
}

TEST_CASE("cherednik operator examples") {
    const Multiplicity k(1, 1);
    CHECK(cherednik_apply(k, LaurentPoly::constant(1)) ==
          LaurentPoly::constant(Rational(-3, 2)));

    NonsymFamily family(k);
    const LaurentPoly e1 = family.polynomial(1);
    CHECK(cherednik_apply(k, e1) == Rational(5, 2) * e1);
    const LaurentPoly em1 = family.polynomial(-1);
    CHECK(cherednik_apply(k, em1) == Rational(-5, 2) * em1);
}

TEST_CASE("cherednik agrees with an independent construction") {
    oracles::Rng rng(3);
    for (auto [k1, k2] : kTestKs) {
        const Multiplicity k(k1, k2);
        for (int trial = 0; trial < 15; ++trial) {
            const LaurentPoly p = rng.laurent(7, 5);
            CHECK(cherednik_apply(k, p) == oracles::cherednik(k, p));
        }
    }
}

TEST_CASE("eigenvalue verdicts") {
    SUBCASE("k=(1,1), n=2 has eigenvalue 7/2") {
        const Multiplicity k(1, 1);
        CHECK(k.eigenvalue(2) == Rational(7, 2));
        CHECK(eigen_check(k, 2).status == VerdictStatus::holds_exact);
    }
    SUBCASE("free case degenerates to z d/dz") {
        const Multiplicity k(0, 0);
        CHECK(k.eigenvalue(-3) == -3);
        CHECK(eigen_check(k, -3).status == VerdictStatus::holds_exact);
    }
    SUBCASE("k=(2,3), n=-5 has eigenvalue -9") {
        const Multiplicity k(2, 3);
        CHECK(k.eigenvalue(-5) == -9);
        CHECK(eigen_check(k, -5).status == VerdictStatus::holds_exact);
    }
    SUBCASE("sweep") {
        for (auto [k1, k2] : kTestKs) {
            NonsymFamily family(Multiplicity(k1, k2));
            for (int n = -8; n <= 8; ++n) CHECK(eigen_check(family, n).ok());
        }
    }
}

TEST_CASE("subleading coefficient verdicts") {
    NonsymFamily family(Multiplicity(1, 1));
    CHECK(family.polynomial(1).coeff(0) == Rational(1, 4));
    CHECK(subleading_check(family, 0).status == VerdictStatus::holds_exact);
    CHECK(family.polynomial(2).coeff(-1) == Rational(1, 6));
    CHECK(subleading_check(family, 1).status == VerdictStatus::holds_exact);

    for (int m : {1, 2, 3}) {
        NonsymFamily zero_k1(Multiplicity(0, m));
        for (int n = 0; n <= 5; ++n) {
            CHECK(zero_k1.polynomial(n + 1).coeff(-n) == 0);
            CHECK(subleading_check(zero_k1, n).ok());
        }
    }

    CHECK_THROWS_AS(subleading_check(family, -1), ParameterOutOfRange);
}

TEST_CASE("uniqueness: gram-schmidt equals the triangular eigen-solver") {
    for (auto [k1, k2] : kTestKs) {
        const Multiplicity k(k1, k2);
        NonsymFamily family(k);
        for (int n = -6; n <= 6; ++n)
            CHECK(family.polynomial(n) == oracles::eigen_solve_E(k, n));
    }
}

TEST_CASE("scale-2 family") {
    const Multiplicity k2(0, 2, 2);
    NonsymFamily doubled(k2);
    NonsymFamily base(Multiplicity(0, 2));
    for (int n = -4; n <= 4; ++n) {
        CHECK(doubled.polynomial(n) == rescale(base.polynomial(n), 2));
        // eigenvalues double with the scale
        CHECK(k2.eigenvalue(n) == 2 * Multiplicity(0, 2).eigenvalue(n));
        const LaurentPoly e = doubled.polynomial(n);
        CHECK(cherednik_apply(k2, e) == k2.eigenvalue(n) * e);
    }
}

}  // TEST_SUITE
