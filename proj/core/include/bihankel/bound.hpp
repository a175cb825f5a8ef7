#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bihankel/phi.hpp"

namespace bihankel {

/// Coefficients of the majorizing quadratic surface at a fixed c = |c1|:
///   F(nu, mu) = t1 + (nu + mu) t2 + (nu^2 + mu^2) t3 + (nu + mu)^2 t4
/// over the unit square. For c in [0, 1]: t1, t2, t4 >= 0 and t3 <= 0, with
/// t3 = 0 at both endpoints.
struct TTerms {
    double c{};
    double t1{};
    double t2{};
    double t3{};
    double t4{};
};

/// Evaluates the four surface terms at c in [0, 1].
TTerms t_terms(const ClassParams& params, const PhiSpec& phi, double c);

/// F(nu, mu) for (nu, mu) in the closed unit square.
double surface_value(const TTerms& terms, double nu, double mu);

struct Pqr {
    double p{};
    double q{};
    double r{};
};

/// The quadratic-in-t coefficients of the c^2 = t reduction of the corner
/// profile: omega(t) = B1 |tau|^2 (P t^2 + Q t + R), all three nonnegative.
/// P + Q + R recombines the c = 1 corner value t1 + 2 t2 + 2 t3 + 4 t4.
Pqr pqr(const ClassParams& params, const PhiSpec& phi);

/// B1 |tau|^2 * F(1, 1; c) -- the corner profile the final bound maximizes.
double omega_of_c(const ClassParams& params, const PhiSpec& phi, double c);

struct BoundBreakdown {
    double b1{}, b2{}, b3{};
    double p{}, q{}, r{};
    double bound{};
    std::vector<TTerms> profile;   // surface terms on a uniform c grid
    std::vector<double> omega;     // omega_of_c per profile entry
    double omega_argmax_c{};
    double omega_max{};
    double omega_corner{};         // omega at c = 1; equals `bound` up to roundoff
};

/// The final upper bound for |a2 a4 - a3^2| over the class:
///   bound = B1 |tau|^2 (P + Q + R),
/// together with the per-c profile evidence that the quadratic omega(t)
/// attains its maximum at t = 1.
BoundBreakdown theorem_bound(const ClassParams& params, const PhiSpec& phi,
                             int profile_steps = 11);

/// Parameters accepted by the specialized bounds. Which fields are read
/// depends on the id; see corollary_bound.
struct CorollaryArgs {
    double alpha = 0.0;
    double lambda = 1.0;
    double delta = 0.0;                // the id-3 class parameter is passed here
    std::optional<PhiSpec> phi{};      // id 1 only
};

/// Closed-form specializations of the bound:
///   1  tau = 1, delta = 0, free (lambda, phi)
///   2  tau = 1, delta = 0, phi = power:alpha        alpha in (0,1], lambda >= 1
///   3  tau = 1, lambda = 1, phi = power:alpha       alpha in (0,1], delta in [0,1]
///   4  tau = 1, lambda = 1, delta = 0, power:alpha  alpha in (0,1]
///   5  tau = 1-alpha, caratheodory                  alpha in [0,1), lambda >= 1, delta in [0,1]
///   6  tau = 1-alpha, lambda = 1, caratheodory      alpha in [0,1), delta in [0,1]
///   7  tau = 1-alpha, lambda = 1, delta = 0, caratheodory  alpha in [0,1)
double corollary_bound(int id, const CorollaryArgs& args);

/// The (params, phi) pair whose theorem_bound the corollary specializes.
std::pair<ClassParams, PhiSpec> corollary_specialization(int id, const CorollaryArgs& args);

/// One row of the surface-maximization report.
struct MaxRecord {
    double c{};
    double argmax_nu{};
    double argmax_mu{};
    double max{};
    double corner{};        // F(1, 1)
    double t3_plus_t4{};
    double t3_plus_2t4{};
    double discriminant{};  // 4 t3 (t3 + 2 t4), the interior second-order test
    bool flagged{};         // max exceeds the corner value beyond tolerance
};

struct MaxReport {
    int c_steps{};
    int grid{};
    int refine_rounds{};
    double tolerance{};
    bool any_flagged{};
    std::vector<MaxRecord> records;
};

/// Maximizes F over the unit square for one set of surface terms: exhaustive
/// grid scan plus `refine_rounds` rounds of 10x window shrinkage around the
/// incumbent, then the analytic candidates (corners, edge critical points,
/// interior stationary point). The reported argmax snaps to (1, 1) whenever
/// the corner attains the maximum to within 1e-12.
MaxRecord analyze_surface(const TTerms& terms, int grid, int refine_rounds,
                          double tolerance = 1e-9);

/// Runs analyze_surface on a uniform c grid and reports every c whose maximum
/// exceeds the corner value beyond tolerance. Findings are flagged rows, never
/// suppressed.
MaxReport verify_max_structure(const ClassParams& params, const PhiSpec& phi, int c_steps,
                               int grid = 101, int refine_rounds = 3, double tolerance = 1e-9);

std::string to_json(const MaxReport& report, const ClassParams& params, const PhiSpec& phi);
std::string to_json(const BoundBreakdown& breakdown, const ClassParams& params,
                    const PhiSpec& phi);

}  // namespace bihankel
