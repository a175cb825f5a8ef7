#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "bihankel/series.hpp"
#include "support.hpp"

using bihankel::cplx;
using bihankel::TruncatedSeries;
using testsupport::close;

TEST_SUITE("series") {

TEST_CASE("multiply truncates the Cauchy product at the stored order") {
    const TruncatedSeries one_plus({1.0, 1.0, 0.0, 0.0});
    const TruncatedSeries one_minus({1.0, -1.0, 0.0, 0.0});
    const TruncatedSeries prod = multiply(one_plus, one_minus);
    CHECK(prod[0] == cplx(1.0));
    CHECK(prod[1] == cplx(0.0));
    CHECK(prod[2] == cplx(-1.0));
    CHECK(prod[3] == cplx(0.0));

    const TruncatedSeries z_z2({0.0, 1.0, 1.0, 0.0});
    const TruncatedSeries sq = multiply(z_z2, z_z2);
    CHECK(sq[0] == cplx(0.0));
    CHECK(sq[1] == cplx(0.0));
    CHECK(sq[2] == cplx(1.0));
    CHECK(sq[3] == cplx(2.0));  // z^4 dropped
}

TEST_CASE("multiplicative identity") {
    const TruncatedSeries a({cplx(1.0, 2.0), cplx(-0.5, 0.25), cplx(0.0, 1.0), cplx(3.0, 0.0)});
    const TruncatedSeries one = TruncatedSeries::constant(1.0, 3);
    const TruncatedSeries prod = multiply(a, one);
    for (int k = 0; k <= 3; ++k) CHECK(prod[k] == a[k]);
}

TEST_CASE("multiply rejects mismatched orders") {
    CHECK_THROWS_AS(multiply(TruncatedSeries(2), TruncatedSeries(3)), std::invalid_argument);
}

TEST_CASE("multiply is commutative and associative at fixed order") {
    bihankel::SplitMix64 gen(101);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<cplx> ca(5), cb(5), cc(5);
        for (int k = 0; k < 5; ++k) {
            ca[k] = {testsupport::uniform(gen, -2, 2), testsupport::uniform(gen, -2, 2)};
            cb[k] = {testsupport::uniform(gen, -2, 2), testsupport::uniform(gen, -2, 2)};
            cc[k] = {testsupport::uniform(gen, -2, 2), testsupport::uniform(gen, -2, 2)};
        }
        const TruncatedSeries a(ca), b(cb), c(cc);
        const TruncatedSeries ab = multiply(a, b), ba = multiply(b, a);
        const TruncatedSeries ab_c = multiply(ab, c), a_bc = multiply(a, multiply(b, c));
        for (int k = 0; k <= 4; ++k) {
            CHECK(close(ab[k], ba[k], 1e-12));
            CHECK(close(ab_c[k], a_bc[k], 1e-12));
        }
    }
}

TEST_CASE("compose with identity and power inners") {
    const TruncatedSeries outer({1.0, 2.0, 2.0, 2.0});
    const TruncatedSeries ident = compose(outer, TruncatedSeries::identity(3));
    for (int k = 0; k <= 3; ++k) CHECK(ident[k] == outer[k]);

    const TruncatedSeries squared = compose(outer, TruncatedSeries({0.0, 0.0, 1.0, 0.0}));
    CHECK(squared[0] == cplx(1.0));
    CHECK(squared[1] == cplx(0.0));
    CHECK(squared[2] == cplx(2.0));
    CHECK(squared[3] == cplx(0.0));
}

TEST_CASE("compose matches the worked coefficients") {
    const TruncatedSeries outer({1.0, 2.0, 2.0, 2.0});
    const TruncatedSeries inner({0.0, 0.5, 3.0 / 8.0, 15.0 / 32.0});
    const TruncatedSeries out = compose(outer, inner);
    CHECK(close(out[0], 1.0, 1e-15));
    CHECK(close(out[1], 1.0, 1e-15));
    CHECK(close(out[2], 1.25, 1e-15));
    CHECK(close(out[3], 31.0 / 16.0, 1e-15));
}

TEST_CASE("compose rejects inner series with a constant term") {
    const TruncatedSeries outer({1.0, 2.0, 2.0, 2.0});
    CHECK_THROWS_AS(compose(outer, TruncatedSeries({0.1, 1.0, 0.0, 0.0})), std::domain_error);
}

TEST_CASE("compose expands a cubic target over any normalized inner") {
    // For outer = 1 + B1 z + B2 z^2 + B3 z^3 and inner = c1 z + c2 z^2 + c3 z^3
    // the composition is 1 + B1 c1 z + (B1 c2 + B2 c1^2) z^2
    // + (B1 c3 + 2 B2 c1 c2 + B3 c1^3) z^3.
    bihankel::SplitMix64 gen(202);
    for (int trial = 0; trial < 1000; ++trial) {
        const double b1 = testsupport::uniform(gen, -3, 3);
        const double b2 = testsupport::uniform(gen, -3, 3);
        const double b3 = testsupport::uniform(gen, -3, 3);
        const cplx c1 = bihankel::sample_unit_disk(gen);
        const cplx c2 = bihankel::sample_unit_disk(gen);
        const cplx c3 = bihankel::sample_unit_disk(gen);
        const TruncatedSeries out =
            compose(TruncatedSeries({1.0, b1, b2, b3}), TruncatedSeries({0.0, c1, c2, c3}));
        CHECK(close(out[0], 1.0, 1e-12));
        CHECK(close(out[1], b1 * c1, 1e-12));
        CHECK(close(out[2], b1 * c2 + b2 * c1 * c1, 1e-12));
        CHECK(close(out[3], b1 * c3 + 2.0 * b2 * c1 * c2 + b3 * c1 * c1 * c1, 1e-12));
    }
}

TEST_CASE("invert_coefficients fixtures") {
    SUBCASE("zero") {
        const auto inv = bihankel::invert_coefficients(0.0, 0.0, 0.0);
        CHECK(inv[0] == cplx(0.0));
        CHECK(inv[1] == cplx(0.0));
        CHECK(inv[2] == cplx(0.0));
    }
    SUBCASE("geometric series z/(1-z)") {
        const auto inv = bihankel::invert_coefficients(1.0, 1.0, 1.0);
        CHECK(inv[0] == cplx(-1.0));
        CHECK(inv[1] == cplx(1.0));
        CHECK(inv[2] == cplx(-1.0));
    }
    SUBCASE("-log(1-z)") {
        const auto inv = bihankel::invert_coefficients(0.5, 1.0 / 3.0, 0.25);
        CHECK(close(inv[0], -0.5, 1e-15));
        CHECK(close(inv[1], 1.0 / 6.0, 1e-15));
        CHECK(close(inv[2], -1.0 / 24.0, 1e-15));
    }
    SUBCASE("odd series log((1+z)/(1-z))/2") {
        const auto inv = bihankel::invert_coefficients(0.0, 1.0 / 3.0, 0.0);
        CHECK(close(inv[0], 0.0, 1e-15));
        CHECK(close(inv[1], -1.0 / 3.0, 1e-15));
        CHECK(close(inv[2], 0.0, 1e-15));
    }
}

TEST_CASE("reversion round trip: composing with the inverse gives the identity") {
    bihankel::SplitMix64 gen(303);
    for (int trial = 0; trial < 300; ++trial) {
        const cplx a2{testsupport::uniform(gen, -1.5, 1.5), testsupport::uniform(gen, -1.5, 1.5)};
        const cplx a3{testsupport::uniform(gen, -1.5, 1.5), testsupport::uniform(gen, -1.5, 1.5)};
        const cplx a4{testsupport::uniform(gen, -1.5, 1.5), testsupport::uniform(gen, -1.5, 1.5)};
        const auto inv = bihankel::invert_coefficients(a2, a3, a4);

        const TruncatedSeries f({cplx(0.0), cplx(1.0), a2, a3, a4});
        const TruncatedSeries g({cplx(0.0), cplx(1.0), inv[0], inv[1], inv[2]});
        const TruncatedSeries round = compose(f, g);
        CHECK(close(round[0], 0.0, 1e-12));
        CHECK(close(round[1], 1.0, 1e-12));
        CHECK(close(round[2], 0.0, 1e-12));
        CHECK(close(round[3], 0.0, 1e-12));
        CHECK(close(round[4], 0.0, 1e-12));

        // and agrees with the multiplication-only oracle
        const auto oracle = testsupport::reversion_oracle(a2, a3, a4);
        CHECK(close(inv[0], oracle[0], 1e-12));
        CHECK(close(inv[1], oracle[1], 1e-12));
        CHECK(close(inv[2], oracle[2], 1e-12));
    }
}

TEST_CASE("hankel determinants") {
    const std::vector<cplx> flat{1.0, 1.0, 1.0, 1.0};
    CHECK(bihankel::hankel(flat, 2, 2) == cplx(0.0));

    const std::vector<cplx> harmonic{1.0, 0.5, 1.0 / 3.0, 0.25};
    CHECK(close(bihankel::hankel(harmonic, 2, 2), 1.0 / 72.0, 1e-16));
    CHECK(close(bihankel::hankel(harmonic, 2, 1), 1.0 / 12.0, 1e-16));

    CHECK_THROWS_AS(bihankel::hankel(std::vector<cplx>{1.0, 0.5}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(bihankel::hankel(flat, 0, 1), std::invalid_argument);
}

TEST_CASE("hankel(.,2,2) equals a2 a4 - a3^2 exactly") {
    bihankel::SplitMix64 gen(404);
    for (int trial = 0; trial < 200; ++trial) {
        const cplx a2{testsupport::uniform(gen, -2, 2), testsupport::uniform(gen, -2, 2)};
        const cplx a3{testsupport::uniform(gen, -2, 2), testsupport::uniform(gen, -2, 2)};
        const cplx a4{testsupport::uniform(gen, -2, 2), testsupport::uniform(gen, -2, 2)};
        const std::vector<cplx> coeffs{1.0, a2, a3, a4};
        CHECK(bihankel::hankel(coeffs, 2, 2) == a2 * a4 - a3 * a3);
    }
}

TEST_CASE("fekete_szego") {
    CHECK(bihankel::fekete_szego(0.0, cplx(0.3, -0.7), 123.0) == cplx(0.3, -0.7));
    CHECK(bihankel::fekete_szego(1.0, 1.0, 1.0) == cplx(0.0));
    CHECK(close(bihankel::fekete_szego(0.5, 1.0 / 3.0, 2.0), -1.0 / 6.0, 1e-16));
}

}  // TEST_SUITE
