#include "bihankel/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace bihankel {

namespace {

bool in_disk(cplx v, double tol) { return std::abs(v) <= 1.0 + tol; }

}  // namespace

bool is_admissible(const SchwarzTuple& s, double tol) {
    return in_disk(s.c1, tol) && in_disk(s.x, tol) && in_disk(s.xi, tol) && in_disk(s.y, tol) &&
           in_disk(s.eta, tol);
}

std::pair<cplx, cplx> schwarz_tail(cplx c1, cplx x, cplx xi) {
    if (!in_disk(c1, kAdmissibilityTol) || !in_disk(x, kAdmissibilityTol) ||
        !in_disk(xi, kAdmissibilityTol)) {
        throw std::domain_error("schwarz_tail: parameters must lie in the closed unit disk");
    }
    const cplx head = 1.0 - c1 * c1;
    const double x_mag2 = std::norm(x);
    const cplx c2 = head * x;
    const cplx c3 = head * (1.0 - x_mag2) * xi - c1 * head * x * x;
    return {c2, c3};
}

CoefficientTriple coefficients_from_schwarz(const ClassParams& params, const PhiSpec& phi,
                                            const SchwarzTuple& s) {
    if (!is_admissible(s)) {
        throw std::domain_error("coefficients_from_schwarz: inadmissible Schwarz tuple");
    }
    const auto [c2, c3] = schwarz_tail(s.c1, s.x, s.xi);
    const auto [d2, d3] = schwarz_tail(-s.c1, s.y, s.eta);

    const cplx tau = params.tau();
    const double w2 = params.weight(2);
    const double w3 = params.weight(3);
    const double w4 = params.weight(4);
    const double b1 = phi.b1();
    const double b2 = phi.b2();
    const double b3 = phi.b3();
    const cplx c1 = s.c1;

    CoefficientTriple t;
    t.a2 = b1 * c1 * tau / w2;
    t.a3 = b1 * b1 * c1 * c1 * tau * tau / (w2 * w2) + b1 * tau * (c2 - d2) / (2.0 * w3);
    t.a4 = 5.0 * b1 * b1 * c1 * tau * tau * (c2 - d2) / (4.0 * w2 * w3) +
           b1 * tau * (c3 - d3) / (2.0 * w4) + b3 * c1 * c1 * c1 * tau / w4 +
           b2 * c1 * tau * (c2 + d2) / w4;
    return t;
}

std::array<cplx, 6> pipeline_residuals(const ClassParams& params, const PhiSpec& phi,
                                       const SchwarzTuple& s, const CoefficientTriple& t,
                                       bool alt_inverse_weight) {
    if (!is_admissible(s)) {
        throw std::domain_error("pipeline_residuals: inadmissible Schwarz tuple");
    }
    const auto [c2, c3] = schwarz_tail(s.c1, s.x, s.xi);
    const cplx d1 = -s.c1;
    const auto [d2, d3] = schwarz_tail(d1, s.y, s.eta);

    const TruncatedSeries target = phi.series(3);
    const TruncatedSeries u({cplx(0.0), s.c1, c2, c3});
    const TruncatedSeries v({cplx(0.0), d1, d2, d3});
    const TruncatedSeries rhs_direct = compose(target, u);
    const TruncatedSeries rhs_inverse = compose(target, v);

    const cplx tau = params.tau();
    const cplx w2 = params.weight(2) / tau;
    const cplx w3 = params.weight(3) / tau;
    const cplx w4 = params.weight(4) / tau;
    const cplx w4_inv = alt_inverse_weight ? w2 : w4;

    const cplx inv3 = 2.0 * t.a2 * t.a2 - t.a3;
    const cplx inv4_neg = 5.0 * t.a2 * t.a2 * t.a2 - 5.0 * t.a2 * t.a3 + t.a4;

    return {
        w2 * t.a2 - rhs_direct[1],  -w2 * t.a2 - rhs_inverse[1],
        w3 * t.a3 - rhs_direct[2],  w3 * inv3 - rhs_inverse[2],
        w4 * t.a4 - rhs_direct[3],  -w4_inv * inv4_neg - rhs_inverse[3],
    };
}

double second_hankel(const CoefficientTriple& t) {
    return std::abs(t.a2 * t.a4 - t.a3 * t.a3);
}

}  // namespace bihankel
