#include <doctest.h>

#include "bc1/errors.hpp"
#include "bc1/laurent.hpp"
#include "bc1/vectors.hpp"
#include "oracles.hpp"

using namespace bc1;

namespace {

LaurentPoly from_pairs(std::initializer_list<std::pair<int, Rational>> pairs) {
    LaurentPoly::Map m;
    for (const auto& [e, c] : pairs) m.emplace(e, c);
    return LaurentPoly(std::move(m));
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("ring arithmetic basics") {
    const LaurentPoly z = LaurentPoly::monomial(1);
    const LaurentPoly zi = LaurentPoly::monomial(-1);

    CHECK((z + zi) * (z - zi) == from_pairs({{2, 1}, {-2, -1}}));

    const LaurentPoly p = from_pairs({{3, Rational(2, 7)}, {0, -1}, {-2, Rational(5)}});
    CHECK((p + Rational(-1) * p).is_zero());

    // (1 - (z+1/z)/2)(1 - (z^2+1/z^2)/2) expanded
    const LaurentPoly f1 = from_pairs({{0, 1}, {1, Rational(-1, 2)}, {-1, Rational(-1, 2)}});
    const LaurentPoly f2 = from_pairs({{0, 1}, {2, Rational(-1, 2)}, {-2, Rational(-1, 2)}});
    const LaurentPoly expected = from_pairs({{0, 1},
                                             {1, Rational(-1, 4)},
                                             {-1, Rational(-1, 4)},
                                             {2, Rational(-1, 2)},
                                             {-2, Rational(-1, 2)},
                                             {3, Rational(1, 4)},
                                             {-3, Rational(1, 4)}});
    CHECK(f1 * f2 == expected);
}

TEST_CASE("ring laws on random inputs") {
    oracles::Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const LaurentPoly a = rng.laurent(6, 4);
        const LaurentPoly b = rng.laurent(6, 4);
        const LaurentPoly c = rng.laurent(6, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("involution") {
    CHECK(involve(LaurentPoly::monomial(1)) == LaurentPoly::monomial(-1));
    CHECK(involve(LaurentPoly::constant(1)) == LaurentPoly::constant(1));
    CHECK(involve(from_pairs({{1, 1}, {-3, 2}})) == from_pairs({{-1, 1}, {3, 2}}));

    oracles::Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const LaurentPoly p = rng.laurent(8, 5);
        CHECK(involve(involve(p)) == p);
    }
}

TEST_CASE("reflect_divide values") {
    // (z - 1/z)/(1 - 1/z) = z + 1 and (z^2 - 1/z^2)/(1 - 1/z^2) = z^2 + 1;
    // both follow from 1 - z^{-2e} = (1 - z^{-c}) * geometric sum.
    CHECK(reflect_divide(LaurentPoly::monomial(1), 1) == from_pairs({{1, 1}, {0, 1}}));
    CHECK(reflect_divide(LaurentPoly::constant(1), 1).is_zero());
    CHECK(reflect_divide(LaurentPoly::constant(1), 2).is_zero());
    CHECK(reflect_divide(LaurentPoly::monomial(2), 2) == from_pairs({{2, 1}, {0, 1}}));
}

TEST_CASE("reflect_divide division identity") {
    oracles::Rng rng(11);
    for (int c : {1, 2}) {
        const LaurentPoly unit = from_pairs({{0, 1}, {-c, -1}});
        for (int trial = 0; trial < 25; ++trial) {
            const LaurentPoly p = rng.laurent(7, 5);
            CHECK(unit * reflect_divide(p, c) == p - involve(p));
        }
    }
    // c = 4 needs even support
    oracles::Rng rng2(13);
    const LaurentPoly unit4 = from_pairs({{0, 1}, {-4, -1}});
    for (int trial = 0; trial < 25; ++trial) {
        const LaurentPoly p = rescale(rng2.laurent(4, 4), 2);
        CHECK(unit4 * reflect_divide(p, 4) == p - involve(p));
    }
}

TEST_CASE("non-divisible inputs are rejected") {
    CHECK_THROWS_AS(divide_one_minus_z_neg(LaurentPoly::monomial(1), 1), NonDivisible);
    CHECK_THROWS_AS(reflect_divide(LaurentPoly::monomial(1), 4), NonDivisible);
    CHECK_THROWS_AS(reflect_divide(LaurentPoly::monomial(1), 3), ParameterOutOfRange);
}

TEST_CASE("gamma embedding") {
    const VecLaurent2 g0 = gamma(LaurentPoly::constant(1));
    CHECK(g0.first == LaurentPoly::constant(1));
    CHECK(g0.second == LaurentPoly::constant(1));

    const VecLaurent2 g1 = gamma(from_pairs({{1, 1}, {0, Rational(1, 4)}}));
    CHECK(g1.first == from_pairs({{1, 1}, {0, Rational(1, 4)}}));
    CHECK(g1.second == from_pairs({{-1, 1}, {0, Rational(1, 4)}}));
    CHECK(g1.is_invariant());

    const VecLaurent2 g2 = gamma(LaurentPoly::monomial(-1));
    CHECK(g2.second == LaurentPoly::monomial(1));
}

TEST_CASE("steinberg split") {
    auto [f1, f2] = steinberg_split(LaurentPoly::monomial(-1));
    CHECK(f1 == PolyX::monomial(1, 2));  // 1/z = (z + 1/z) - z
    CHECK(f2 == PolyX::constant(-1));

    auto [g1, g2] = steinberg_split(LaurentPoly::constant(1));
    CHECK(g1 == PolyX::constant(1));
    CHECK(g2.is_zero());

    auto [h1, h2] = steinberg_split(LaurentPoly::monomial(1));
    CHECK(h1.is_zero());
    CHECK(h2 == PolyX::constant(1));
}

TEST_CASE("steinberg round trip") {
    oracles::Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const LaurentPoly p = rng.laurent(9, 6);
        auto [f1, f2] = steinberg_split(p);
        CHECK(steinberg_reassemble(f1, f2) == p);
    }
}

TEST_CASE("phi transport") {
    const PolyVec2 v0 = phi_transport(gamma(LaurentPoly::constant(1)));
    CHECK(v0.first == PolyX::constant(1));
    CHECK(v0.second.is_zero());

    const PolyVec2 v1 = phi_transport(gamma(from_pairs({{1, 1}, {0, Rational(1, 4)}})));
    CHECK(v1.first == PolyX::constant(Rational(1, 4)));
    CHECK(v1.second == PolyX::constant(1));

    // E(-1, (1,1)) = 1/z + (3/5) z + 2/5 splits as (2x + 2/5, -2/5)
    const LaurentPoly e_minus1 =
        from_pairs({{-1, 1}, {1, Rational(3, 5)}, {0, Rational(2, 5)}});
    const PolyVec2 v2 = phi_transport(gamma(e_minus1));
    CHECK(v2.first == PolyX({{1, Rational(2)}, {0, Rational(2, 5)}}));
    CHECK(v2.second == PolyX::constant(Rational(-2, 5)));

    VecLaurent2 bad{LaurentPoly::monomial(1), LaurentPoly::monomial(1)};
    CHECK_THROWS_AS(phi_transport(bad), NotInvariant);
}

TEST_CASE("phi transport round trip") {
    oracles::Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const PolyVec2 v{rng.polyx(5, 4), rng.polyx(5, 4)};
        const PolyVec2 back = phi_transport(phi_transport_inverse(v));
        CHECK(back == v);

        const VecLaurent2 p = gamma(rng.laurent(6, 4));
        CHECK(phi_transport_inverse(phi_transport(p)) == p);
    }
}

TEST_CASE("rescale") {
    CHECK(rescale(LaurentPoly::monomial(1), 2) == LaurentPoly::monomial(2));
    CHECK(rescale(from_pairs({{0, 1}, {-1, 1}}), 2) == from_pairs({{0, 1}, {-2, 1}}));
    const LaurentPoly delta01 = from_pairs({{0, 1}, {2, Rational(-1, 2)}, {-2, Rational(-1, 2)}});
    CHECK(rescale(delta01, 2) ==
          from_pairs({{0, 1}, {4, Rational(-1, 2)}, {-4, Rational(-1, 2)}}));
}

}  // TEST_SUITE
