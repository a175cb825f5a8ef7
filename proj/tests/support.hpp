#pragma once
// Shared test helpers: a tiny exact-fraction type used as an independent
// oracle at rational parameter points, a series-reversion oracle built on
// multiplication alone, and seeded random generators for parameters.

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bihankel/coefficients.hpp"
#include "bihankel/phi.hpp"
#include "bihankel/rng.hpp"
#include "bihankel/series.hpp"

namespace testsupport {

struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n, long long d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Frac: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
    friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
    friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }

    Frac abs() const { return {num < 0 ? -num : num, den}; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Exact P + Q + R for integer-friendly inputs with tau real, used to pin
/// regression values of the bound without going through the double pipeline.
/// Requires rational b1, b2, b3 and tau expressed as fractions.
inline Frac pqr_sum_exact(Frac b1, Frac b2, Frac b3, Frac tau, long long lambda_num,
                          long long delta_num, long long scale_den) {
    // weights with lambda = lambda_num/scale_den, delta = delta_num/scale_den
    const Frac l(lambda_num, scale_den), d(delta_num, scale_den);
    const Frac w2 = Frac(1) + l + Frac(2) * d;
    const Frac w3 = Frac(1) + Frac(2) * l + Frac(6) * d;
    const Frac w4 = Frac(1) + Frac(3) * l + Frac(12) * d;

    const Frac quartic = (b3 / (w2 * w4) - b1 * b1 * b1 * tau * tau / (w2 * w2 * w2 * w2)).abs();
    const Frac corner = b1 / (w3 * w3);
    const Frac mixed = b1 * b1 * tau.abs() / (Frac(2) * w2 * w2 * w3);
    const Frac linear = (b1 + Frac(2) * b2.abs()) / (w2 * w4);

    const Frac p = quartic + corner + mixed + linear;
    const Frac q = linear + Frac(2) * corner + mixed;
    const Frac r = corner;
    return p + q + r;
}

/// Inverse-series coefficients (g2, g3, g4) of z + a2 z^2 + a3 z^3 + a4 z^4
/// solved directly from the vanishing of z^2..z^4 in g(f(z)). Uses series
/// multiplication only, nothing from invert_coefficients.
inline std::array<bihankel::cplx, 3> reversion_oracle(bihankel::cplx a2, bihankel::cplx a3,
                                                      bihankel::cplx a4) {
    using bihankel::cplx;
    using bihankel::TruncatedSeries;
    const TruncatedSeries f({cplx(0.0), cplx(1.0), a2, a3, a4});
    const TruncatedSeries f2 = multiply(f, f);
    const TruncatedSeries f3 = multiply(f2, f);
    const TruncatedSeries f4 = multiply(f3, f);
    const cplx g2 = -f[2] / f2[2];
    const cplx g3 = -(f[3] + g2 * f2[3]) / f3[3];
    const cplx g4 = -(f[4] + g2 * f2[4] + g3 * f3[4]) / f4[4];
    return {g2, g3, g4};
}

inline double uniform(bihankel::SplitMix64& gen, double lo, double hi) {
    return lo + (hi - lo) * gen.next_unit();
}

inline bihankel::PhiSpec random_phi(bihankel::SplitMix64& gen) {
    using bihankel::PhiSpec;
    switch (gen.next() % 5) {
        case 0:
            return PhiSpec::caratheodory();
        case 1:
            return PhiSpec::order_beta(uniform(gen, 0.0, 0.999));
        case 2: {
            const double b = uniform(gen, -1.0, 0.9);
            const double a = uniform(gen, b + 0.05, 1.0);
            return PhiSpec::janowski(a, b);
        }
        case 3:
            return PhiSpec::power_alpha(uniform(gen, 0.05, 1.0));
        default:
            return PhiSpec::custom(uniform(gen, 0.1, 3.0), uniform(gen, -3.0, 3.0),
                                   uniform(gen, -3.0, 3.0));
    }
}

inline bihankel::ClassParams random_params(bihankel::SplitMix64& gen) {
    const double mag = uniform(gen, 0.4, 2.0);
    const double arg = uniform(gen, 0.0, 6.283185307179586);
    return {std::polar(mag, arg), uniform(gen, 1.0, 5.0), uniform(gen, 0.0, 1.0)};
}

inline bool close(bihankel::cplx a, bihankel::cplx b, double tol) {
    return std::abs(a - b) <= tol;
}

}  // namespace testsupport
