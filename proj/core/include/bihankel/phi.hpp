#pragma once

#include <string>
#include <string_view>

#include "bihankel/series.hpp"

namespace bihankel {

enum class PhiFamily { caratheodory, order_beta, janowski, power_alpha, custom };

/// The target function of the subordination, phi(z) = 1 + B1 z + B2 z^2 + B3 z^3 + ...
/// with B1 > 0 and B2, B3 real. Only the first three coefficients enter any
/// bound computed here, so that is all a PhiSpec stores.
///
/// Built-in families and their resolved coefficients:
///   caratheodory          (1+z)/(1-z)                 -> (2, 2, 2)
///   order_beta(beta)      (1+(1-2beta)z)/(1-z)        -> (2(1-b), 2(1-b), 2(1-b)),  0 <= beta < 1
///   janowski(A, B)        (1+Az)/(1+Bz)               -> (A-B, -B(A-B), B^2(A-B)),  -1 <= B < A <= 1
///   power_alpha(alpha)    ((1+z)/(1-z))^alpha         -> (2a, 2a^2, 2a(2a^2+1)/3),  0 < alpha <= 1
///   custom(B1, B2, B3)    given coefficients verbatim,                      B1 > 0
class PhiSpec {
public:
    static PhiSpec caratheodory();
    static PhiSpec order_beta(double beta);
    static PhiSpec janowski(double a, double b);
    static PhiSpec power_alpha(double alpha);
    static PhiSpec custom(double b1, double b2, double b3);

    /// Parses the textual syntax used by the CLI and config files:
    ///   "caratheodory" | "order_beta:0.25" | "janowski:0.5,-0.5"
    ///   | "power:0.75" | "custom:2.0,1.0,0.5"
    static PhiSpec parse(std::string_view text);

    PhiFamily family() const { return family_; }
    double b1() const { return b1_; }
    double b2() const { return b2_; }
    double b3() const { return b3_; }

    /// Family parameter i (0 or 1): beta, (A, B), or alpha. Zero for families
    /// without one.
    double family_param(int i) const;

    /// Canonical form of the textual syntax accepted by parse().
    std::string to_string() const;

    /// 1 + B1 z + B2 z^2 + B3 z^3, truncated or zero-padded to `order`.
    TruncatedSeries series(int order = 3) const;

private:
    PhiSpec(PhiFamily family, double p0, double p1, double b1, double b2, double b3);

    PhiFamily family_;
    double params_[2];
    double b1_, b2_, b3_;
};

/// Parameters of the class operator
///   L[f](z) = (1 - lambda) f(z)/z + lambda f'(z) + delta z f''(z),
/// compared against phi after centering and scaling by 1/tau.
/// Requires tau != 0, lambda >= 1, 0 <= delta <= 1; under those constraints
/// every weight(n) = 1 + (n-1)(lambda + n delta) for n >= 2 is >= 2.
class ClassParams {
public:
    ClassParams(cplx tau, double lambda, double delta);

    cplx tau() const { return tau_; }
    double lambda() const { return lambda_; }
    double delta() const { return delta_; }

    /// The real factor 1 + (n-1)(lambda + n delta) multiplying a_n in L[f], n >= 2.
    double weight(int n) const;

private:
    cplx tau_;
    double lambda_;
    double delta_;
};

/// weight(n) / tau: the coefficient of z^{n-1} in 1 + (L[f] - 1)/tau per unit a_n.
cplx operator_weight(const ClassParams& params, int n);

/// 1 + (L[f] - 1)/tau as a series: maps f = z + sum a_n z^n (order N) to
/// 1 + sum operator_weight(n) a_n z^{n-1} (order N-1). f must be normalized
/// (zero constant term, unit linear term).
TruncatedSeries apply_operator(const ClassParams& params, const TruncatedSeries& f);

}  // namespace bihankel
