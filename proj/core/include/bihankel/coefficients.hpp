#pragma once

#include <array>
#include <utility>

#include "bihankel/phi.hpp"
#include "bihankel/series.hpp"

namespace bihankel {

/// Tolerance applied to all unit-disk admissibility checks.
inline constexpr double kAdmissibilityTol = 1e-12;

/// Free parameters of the two Schwarz functions in the subordination pair.
/// (c1, x, xi) generate the tail coefficients c2, c3 of the direct-side
/// Schwarz function; (y, eta) generate d2, d3 of the inverse side, whose
/// first coefficient is pinned to d1 = -c1. All five entries must lie in the
/// closed unit disk.
struct SchwarzTuple {
    cplx c1{};
    cplx x{};
    cplx xi{};
    cplx y{};
    cplx eta{};
};

bool is_admissible(const SchwarzTuple& s, double tol = kAdmissibilityTol);

/// Tail coefficients {c2, c3} of a Schwarz function with leading coefficient
/// c1, in the two-parameter form
///   c2 = (1 - c1^2) x,
///   c3 = (1 - c1^2)(1 - |x|^2) xi - c1 (1 - c1^2) x^2.
/// Throws if any input magnitude exceeds 1 beyond kAdmissibilityTol.
std::pair<cplx, cplx> schwarz_tail(cplx c1, cplx x, cplx xi);

struct CoefficientTriple {
    cplx a2{};
    cplx a3{};
    cplx a4{};
};

/// Closed forms for (a2, a3, a4) of a class member whose subordination data
/// is the given Schwarz tuple. With weights w_n = 1 + (n-1)(lambda + n delta):
///   a2 = B1 c1 tau / w2
///   a3 = B1^2 c1^2 tau^2 / w2^2 + B1 tau (c2 - d2) / (2 w3)
///   a4 = 5 B1^2 c1 tau^2 (c2 - d2) / (4 w2 w3) + B1 tau (c3 - d3) / (2 w4)
///        + B3 c1^3 tau / w4 + B2 c1 tau (c2 + d2) / w4
CoefficientTriple coefficients_from_schwarz(const ClassParams& params, const PhiSpec& phi,
                                            const SchwarzTuple& s);

/// Left-minus-right residuals of the six coefficient conditions that the
/// subordination pair imposes at orders 1..3, in the order
///   [0] direct side, order 1      [1] inverse side, order 1
///   [2] direct side, order 2      [3] inverse side, order 2
///   [4] direct side, order 3      [5] inverse side, order 3
/// Right-hand sides are taken from compose(phi, u) and compose(phi, v); left
/// sides apply the operator weights to (a2, a3, a4) and their inverse-side
/// images. For a triple produced by coefficients_from_schwarz, residuals 0
/// and 1 vanish, as do the differences [2]-[3] and [4]-[5]; residuals 2 and 3
/// individually vanish only when the tuple happens to satisfy the order-2
/// compatibility constraint (relaxed sampling does not impose it).
///
/// `alt_inverse_weight` switches the inverse-side order-3 condition to the
/// order-2 operator weight; kept as a diagnostic variant, not part of the
/// consistent system.
std::array<cplx, 6> pipeline_residuals(const ClassParams& params, const PhiSpec& phi,
                                       const SchwarzTuple& s, const CoefficientTriple& t,
                                       bool alt_inverse_weight = false);

/// |a2 a4 - a3^2|.
double second_hankel(const CoefficientTriple& t);

}  // namespace bihankel
