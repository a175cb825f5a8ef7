#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bihankel/phi.hpp"
#include "support.hpp"

using bihankel::ClassParams;
using bihankel::cplx;
using bihankel::PhiSpec;
using bihankel::TruncatedSeries;
using testsupport::close;

namespace {

// exp(alpha * log((1+z)/(1-z))) expanded to order 3 through series arithmetic.
TruncatedSeries power_target_oracle(double alpha) {
    const TruncatedSeries log_ratio({0.0, 2.0 * alpha, 0.0, 2.0 * alpha / 3.0});
    TruncatedSeries acc = TruncatedSeries::constant(1.0, 3);
    TruncatedSeries term = TruncatedSeries::constant(1.0, 3);
    double factorial = 1.0;
    std::vector<cplx> coeffs = acc.coeffs();
    for (int k = 1; k <= 3; ++k) {
        term = multiply(term, log_ratio);
        factorial *= k;
        for (int j = 0; j <= 3; ++j) coeffs[j] += term[j] / factorial;
    }
    return TruncatedSeries(coeffs);
}

}  // namespace

TEST_SUITE("phi") {

TEST_CASE("built-in families resolve to the expected coefficients") {
    const PhiSpec cara = PhiSpec::caratheodory();
    CHECK(cara.b1() == 2.0);
    CHECK(cara.b2() == 2.0);
    CHECK(cara.b3() == 2.0);

    const PhiSpec pow1 = PhiSpec::power_alpha(1.0);
    CHECK(pow1.b1() == 2.0);
    CHECK(pow1.b2() == 2.0);
    CHECK(pow1.b3() == 2.0);

    const PhiSpec beta = PhiSpec::order_beta(0.25);
    CHECK(beta.b1() == 1.5);
    CHECK(beta.b2() == 1.5);
    CHECK(beta.b3() == 1.5);

    const PhiSpec jan = PhiSpec::janowski(0.5, -0.5);
    CHECK(jan.b1() == 1.0);
    CHECK(jan.b2() == 0.5);
    CHECK(jan.b3() == 0.25);
}

TEST_CASE("power family third coefficient is 2a(2a^2+1)/3") {
    bihankel::SplitMix64 gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        const double alpha = testsupport::uniform(gen, 0.01, 1.0);
        const PhiSpec spec = PhiSpec::power_alpha(alpha);
        CHECK(spec.b3() == doctest::Approx((4.0 * alpha * alpha * alpha + 2.0 * alpha) / 3.0)
                               .epsilon(1e-15));
    }
}

TEST_CASE("power family matches the exp(log) series oracle") {
    for (int i = 1; i <= 50; ++i) {
        const double alpha = static_cast<double>(i) / 50.0;
        const PhiSpec spec = PhiSpec::power_alpha(alpha);
        const TruncatedSeries oracle = power_target_oracle(alpha);
        CHECK(close(oracle[0], 1.0, 1e-10));
        CHECK(close(oracle[1], spec.b1(), 1e-10));
        CHECK(close(oracle[2], spec.b2(), 1e-10));
        CHECK(close(oracle[3], spec.b3(), 1e-10));
    }
}

TEST_CASE("janowski coefficients match multiplication by the geometric expansion") {
    bihankel::SplitMix64 gen(12);
    for (int trial = 0; trial < 100; ++trial) {
        const double b = testsupport::uniform(gen, -1.0, 0.9);
        const double a = testsupport::uniform(gen, b + 0.05, 1.0);
        const PhiSpec spec = PhiSpec::janowski(a, b);
        // (1 + A z) * (1 - B z + B^2 z^2 - B^3 z^3)
        const TruncatedSeries prod =
            multiply(TruncatedSeries({1.0, a, 0.0, 0.0}),
                     TruncatedSeries({1.0, -b, b * b, -b * b * b}));
        CHECK(close(prod[1], spec.b1(), 1e-14));
        CHECK(close(prod[2], spec.b2(), 1e-14));
        CHECK(close(prod[3], spec.b3(), 1e-14));
    }
}

TEST_CASE("order_beta is identical to janowski(1-2beta, -1)") {
    for (int i = 0; i < 64; ++i) {
        const double beta = static_cast<double>(i) / 64.0;
        const PhiSpec ob = PhiSpec::order_beta(beta);
        const PhiSpec jan = PhiSpec::janowski(1.0 - 2.0 * beta, -1.0);
        CHECK(ob.b1() == jan.b1());
        CHECK(ob.b2() == jan.b2());
        CHECK(ob.b3() == jan.b3());
        CHECK(ob.b1() > 0.0);
    }
}

TEST_CASE("family validation") {
    CHECK_THROWS_AS(PhiSpec::janowski(0.5, 0.6), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec::janowski(0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec::janowski(1.2, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec::janowski(0.5, -1.2), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec::power_alpha(0.0), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec::power_alpha(1.5), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec::order_beta(1.0), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec::order_beta(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec::custom(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec::custom(-2.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("textual syntax parses and round-trips") {
    CHECK(PhiSpec::parse("caratheodory").family() == bihankel::PhiFamily::caratheodory);
    CHECK(PhiSpec::parse("order_beta:0.25").b1() == 1.5);
    const PhiSpec jan = PhiSpec::parse("janowski:0.5,-0.5");
    CHECK(jan.family_param(0) == 0.5);
    CHECK(jan.family_param(1) == -0.5);
    CHECK(PhiSpec::parse("power:0.75").family_param(0) == 0.75);
    const PhiSpec cust = PhiSpec::parse("custom:2.0,1.0,0.5");
    CHECK(cust.b1() == 2.0);
    CHECK(cust.b2() == 1.0);
    CHECK(cust.b3() == 0.5);

    for (const char* text : {"caratheodory", "order_beta:0.25", "janowski:0.5,-0.5",
                             "power:0.75", "custom:2,1,0.5"}) {
        const PhiSpec spec = PhiSpec::parse(text);
        const PhiSpec again = PhiSpec::parse(spec.to_string());
        CHECK(again.b1() == spec.b1());
        CHECK(again.b2() == spec.b2());
        CHECK(again.b3() == spec.b3());
        CHECK(again.family() == spec.family());
    }

    CHECK_THROWS_AS(PhiSpec::parse("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec::parse("janowski:0.5"), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec::parse("power:abc"), std::invalid_argument);
    CHECK_THROWS_AS(PhiSpec::parse("caratheodory:1"), std::invalid_argument);
}

TEST_CASE("class parameter validation") {
    CHECK_THROWS_AS(ClassParams(cplx(0.0, 0.0), 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ClassParams(cplx(1.0, 0.0), 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ClassParams(cplx(1.0, 0.0), 1.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(ClassParams(cplx(1.0, 0.0), 1.0, -0.1), std::invalid_argument);

    // weights never drop below 2 on the admissible parameter range
    bihankel::SplitMix64 gen(13);
    for (int trial = 0; trial < 100; ++trial) {
        const ClassParams params = testsupport::random_params(gen);
        CHECK(params.weight(2) >= 2.0);
        CHECK(params.weight(3) >= 2.0);
        CHECK(params.weight(4) >= 2.0);
    }
}

TEST_CASE("operator weights") {
    const ClassParams base(cplx(1.0, 0.0), 1.0, 0.0);
    CHECK(operator_weight(base, 2) == cplx(2.0));
    CHECK(operator_weight(base, 3) == cplx(3.0));
    CHECK(operator_weight(base, 4) == cplx(4.0));

    const ClassParams scaled(cplx(2.0, 0.0), 1.0, 1.0);
    CHECK(operator_weight(scaled, 3) == cplx(4.5));

    CHECK_THROWS_AS(operator_weight(base, 1), std::invalid_argument);
}

TEST_CASE("apply_operator") {
    const ClassParams base(cplx(1.0, 0.0), 1.0, 0.0);

    const TruncatedSeries fixed = apply_operator(base, TruncatedSeries::identity(4));
    CHECK(fixed[0] == cplx(1.0));
    for (int k = 1; k <= 3; ++k) CHECK(fixed[k] == cplx(0.0));

    const TruncatedSeries quadratic = apply_operator(base, TruncatedSeries({0.0, 1.0, 1.0}));
    CHECK(quadratic[0] == cplx(1.0));
    CHECK(quadratic[1] == cplx(2.0));

    const cplx a2{0.3, 0.1}, a3{-0.2, 0.4}, a4{0.05, -0.6};
    const TruncatedSeries full = apply_operator(base, TruncatedSeries({0.0, 1.0, a2, a3, a4}));
    CHECK(full[1] == 2.0 * a2);
    CHECK(full[2] == 3.0 * a3);
    CHECK(full[3] == 4.0 * a4);

    CHECK_THROWS_AS(apply_operator(base, TruncatedSeries({0.0, 2.0, 1.0})), std::domain_error);
    CHECK_THROWS_AS(apply_operator(base, TruncatedSeries({0.5, 1.0, 1.0})), std::domain_error);
}

TEST_CASE("apply_operator is linear in the tail") {
    bihankel::SplitMix64 gen(14);
    for (int trial = 0; trial < 100; ++trial) {
        const ClassParams params = testsupport::random_params(gen);
        std::vector<cplx> cf{0.0, 1.0}, cg{0.0, 1.0}, csum{0.0, 1.0};
        for (int k = 2; k <= 4; ++k) {
            const cplx vf{testsupport::uniform(gen, -1, 1), testsupport::uniform(gen, -1, 1)};
            const cplx vg{testsupport::uniform(gen, -1, 1), testsupport::uniform(gen, -1, 1)};
            cf.push_back(vf);
            cg.push_back(vg);
            csum.push_back(vf + vg);
        }
        // the sum series has linear coefficient 1 as well, so compare the
        // centered images: op(f + g tail) - 1 = (op(f) - 1) + (op(g) - 1)
        const TruncatedSeries of = apply_operator(params, TruncatedSeries(cf));
        const TruncatedSeries og = apply_operator(params, TruncatedSeries(cg));
        const TruncatedSeries osum = apply_operator(params, TruncatedSeries(csum));
        for (int k = 1; k <= 3; ++k) {
            CHECK(close(osum[k], of[k] + og[k], 1e-12));
        }
    }
}

}  // TEST_SUITE
