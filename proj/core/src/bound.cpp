#include "bihankel/bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace bihankel {

namespace {

struct Weights {
    double w2, w3, w4;
};

Weights weights_of(const ClassParams& params) {
    return {params.weight(2), params.weight(3), params.weight(4)};
}

// |B3/(w2 w4) - B1^3 tau^2 / w2^4|, the coefficient shared by the c^4 term
// and P.
double quartic_term(const ClassParams& params, const PhiSpec& phi, const Weights& w) {
    const cplx tau2 = params.tau() * params.tau();
    return std::abs(cplx(phi.b3() / (w.w2 * w.w4), 0.0) -
                    std::pow(phi.b1(), 3) * tau2 / std::pow(w.w2, 4));
}

}  // namespace

TTerms t_terms(const ClassParams& params, const PhiSpec& phi, double c) {
    if (!(0.0 <= c && c <= 1.0)) {
        throw std::invalid_argument("t_terms: c must lie in [0, 1]");
    }
    const Weights w = weights_of(params);
    const double b1 = phi.b1();
    const double abs_b2 = std::abs(phi.b2());
    const double abs_tau = std::abs(params.tau());
    const double c2 = c * c;
    const double one_c2 = 1.0 + c2;

    TTerms t;
    t.c = c;
    t.t1 = quartic_term(params, phi, w) * c2 * c2 + b1 * c * one_c2 / (w.w2 * w.w4);
    t.t2 = c2 * one_c2 / w.w2 *
           (b1 * b1 * abs_tau / (4.0 * w.w2 * w.w3) + abs_b2 / w.w4);
    t.t3 = b1 * c * (c - 1.0) * one_c2 / (2.0 * w.w2 * w.w4);
    t.t4 = b1 * one_c2 * one_c2 / (4.0 * w.w3 * w.w3);
    return t;
}

double surface_value(const TTerms& terms, double nu, double mu) {
    if (!(0.0 <= nu && nu <= 1.0 && 0.0 <= mu && mu <= 1.0)) {
        throw std::invalid_argument("surface_value: (nu, mu) must lie in the unit square");
    }
    const double s = nu + mu;
    return terms.t1 + s * terms.t2 + (nu * nu + mu * mu) * terms.t3 + s * s * terms.t4;
}

Pqr pqr(const ClassParams& params, const PhiSpec& phi) {
    const Weights w = weights_of(params);
    const double b1 = phi.b1();
    const double abs_b2 = std::abs(phi.b2());
    const double abs_tau = std::abs(params.tau());

    const double half_mixed = b1 * b1 * abs_tau / (2.0 * w.w2 * w.w2 * w.w3);
    const double linear = (b1 + 2.0 * abs_b2) / (w.w2 * w.w4);
    const double corner = b1 / (w.w3 * w.w3);

    Pqr out;
    out.p = quartic_term(params, phi, w) + corner + half_mixed + linear;
    out.q = linear + 2.0 * corner + half_mixed;
    out.r = corner;
    return out;
}

double omega_of_c(const ClassParams& params, const PhiSpec& phi, double c) {
    const TTerms t = t_terms(params, phi, c);
    const double abs_tau = std::abs(params.tau());
    return phi.b1() * abs_tau * abs_tau * (t.t1 + 2.0 * t.t2 + 2.0 * t.t3 + 4.0 * t.t4);
}

BoundBreakdown theorem_bound(const ClassParams& params, const PhiSpec& phi, int profile_steps) {
    if (profile_steps < 2) {
        throw std::invalid_argument("theorem_bound: profile_steps must be >= 2");
    }
    const Pqr w = pqr(params, phi);
    const double abs_tau = std::abs(params.tau());
    const double scale = phi.b1() * abs_tau * abs_tau;

    BoundBreakdown out;
    out.b1 = phi.b1();
    out.b2 = phi.b2();
    out.b3 = phi.b3();
    out.p = w.p;
    out.q = w.q;
    out.r = w.r;
    out.bound = scale * (w.p + w.q + w.r);

    out.profile.reserve(static_cast<std::size_t>(profile_steps));
    out.omega.reserve(static_cast<std::size_t>(profile_steps));
    out.omega_max = -1.0;
    for (int i = 0; i < profile_steps; ++i) {
        const double c = static_cast<double>(i) / (profile_steps - 1);
        out.profile.push_back(t_terms(params, phi, c));
        const double value = omega_of_c(params, phi, c);
        out.omega.push_back(value);
        if (value > out.omega_max) {
            out.omega_max = value;
            out.omega_argmax_c = c;
        }
    }
    out.omega_corner = out.omega.back();
    return out;
}

namespace {

void require_range(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

double sq(double v) { return v * v; }
double quart(double v) { return v * v * v * v; }

}  // namespace

std::pair<ClassParams, PhiSpec> corollary_specialization(int id, const CorollaryArgs& args) {
    const double a = args.alpha;
    switch (id) {
        case 1:
            require_range(args.lambda >= 1.0, "corollary 1: lambda must be >= 1");
            require_range(args.phi.has_value(), "corollary 1: phi is required");
            return {ClassParams(cplx(1.0, 0.0), args.lambda, 0.0), *args.phi};
        case 2:
            require_range(0.0 < a && a <= 1.0, "corollary 2: alpha must lie in (0, 1]");
            require_range(args.lambda >= 1.0, "corollary 2: lambda must be >= 1");
            return {ClassParams(cplx(1.0, 0.0), args.lambda, 0.0), PhiSpec::power_alpha(a)};
        case 3:
            require_range(0.0 < a && a <= 1.0, "corollary 3: alpha must lie in (0, 1]");
            require_range(0.0 <= args.delta && args.delta <= 1.0,
                          "corollary 3: beta must lie in [0, 1]");
            return {ClassParams(cplx(1.0, 0.0), 1.0, args.delta), PhiSpec::power_alpha(a)};
        case 4:
            require_range(0.0 < a && a <= 1.0, "corollary 4: alpha must lie in (0, 1]");
            return {ClassParams(cplx(1.0, 0.0), 1.0, 0.0), PhiSpec::power_alpha(a)};
        case 5:
            require_range(0.0 <= a && a < 1.0, "corollary 5: alpha must lie in [0, 1)");
            require_range(args.lambda >= 1.0, "corollary 5: lambda must be >= 1");
            require_range(0.0 <= args.delta && args.delta <= 1.0,
                          "corollary 5: delta must lie in [0, 1]");
            return {ClassParams(cplx(1.0 - a, 0.0), args.lambda, args.delta),
                    PhiSpec::caratheodory()};
        case 6:
            require_range(0.0 <= a && a < 1.0, "corollary 6: alpha must lie in [0, 1)");
            require_range(0.0 <= args.delta && args.delta <= 1.0,
                          "corollary 6: delta must lie in [0, 1]");
            return {ClassParams(cplx(1.0 - a, 0.0), 1.0, args.delta), PhiSpec::caratheodory()};
        case 7:
            require_range(0.0 <= a && a < 1.0, "corollary 7: alpha must lie in [0, 1)");
            return {ClassParams(cplx(1.0 - a, 0.0), 1.0, 0.0), PhiSpec::caratheodory()};
        default:
            throw std::invalid_argument("corollary id must lie in 1..7");
    }
}

double corollary_bound(int id, const CorollaryArgs& args) {
    // Validate ranges through the specialization map even though the closed
    // forms below never call back into theorem_bound.
    (void)corollary_specialization(id, args);

    const double a = args.alpha;
    const double l = args.lambda;
    switch (id) {
        case 1: {
            const PhiSpec& phi = *args.phi;
            const double b1 = phi.b1(), b3 = phi.b3();
            const double abs_b2 = std::abs(phi.b2());
            return b1 * (std::abs(b3 / ((1.0 + l) * (1.0 + 3.0 * l)) - b1 * b1 * b1 / quart(1.0 + l)) +
                         4.0 * b1 / sq(1.0 + 2.0 * l) + b1 * b1 / (sq(1.0 + l) * (1.0 + 2.0 * l)) +
                         (2.0 * b1 + 4.0 * abs_b2) / ((1.0 + l) * (1.0 + 3.0 * l)));
        }
        case 2:
            return 2.0 * a *
                   (std::abs((4.0 * a * a * a + 2.0 * a) / (3.0 * (1.0 + l) * (1.0 + 3.0 * l)) -
                             8.0 * a * a * a / quart(1.0 + l)) +
                    8.0 * a / sq(1.0 + 2.0 * l) + 4.0 * a * a / (sq(1.0 + l) * (1.0 + 2.0 * l)) +
                    (4.0 * a + 8.0 * a * a) / ((1.0 + l) * (1.0 + 3.0 * l)));
        case 3: {
            const double b = args.delta;
            return 2.0 * a *
                   (std::abs((2.0 * a * a * a + a) / (12.0 * (1.0 + b) * (1.0 + 3.0 * b)) -
                             a * a * a / (2.0 * quart(1.0 + b))) +
                    8.0 * a / (9.0 * sq(1.0 + 2.0 * b)) +
                    a * a / (3.0 * sq(1.0 + b) * (1.0 + 2.0 * b)) +
                    (a + 2.0 * a * a) / (2.0 * (1.0 + b) * (1.0 + 3.0 * b)));
        }
        case 4:
            return 2.0 * a * (std::abs((4.0 * a * a * a - a) / 12.0) + 25.0 * a / 18.0 +
                              4.0 * a * a / 3.0);
        case 5: {
            const double d = args.delta;
            const double w2 = 1.0 + l + 2.0 * d;
            const double w3 = 1.0 + 2.0 * l + 6.0 * d;
            const double w4 = 1.0 + 3.0 * l + 12.0 * d;
            const double oma = 1.0 - a;
            return 2.0 * oma * oma *
                   (8.0 / sq(w3) + std::abs(2.0 / (w2 * w4) - 8.0 * oma * oma / quart(w2)) +
                    4.0 * oma / (sq(w2) * w3) + 12.0 / (w2 * w4));
        }
        case 6: {
            const double d = args.delta;
            const double oma = 1.0 - a;
            return 2.0 * oma * oma *
                   (8.0 / (9.0 * sq(1.0 + 2.0 * d)) +
                    std::abs(1.0 / (4.0 * (1.0 + d) * (1.0 + 3.0 * d)) -
                             oma * oma / (2.0 * quart(1.0 + d))) +
                    oma / (3.0 * sq(1.0 + d) * (1.0 + 2.0 * d)) +
                    3.0 / (2.0 * (1.0 + d) * (1.0 + 3.0 * d)));
        }
        case 7: {
            const double oma = 1.0 - a;
            return 2.0 * oma * oma *
                   (49.0 / 18.0 - a / 3.0 + std::abs(0.25 - oma * oma / 2.0));
        }
        default:
            throw std::invalid_argument("corollary id must lie in 1..7");
    }
}

namespace {

struct SurfacePoint {
    double nu{}, mu{}, value{};
};

// Scans a grid x grid lattice on [nu_lo, nu_hi] x [mu_lo, mu_hi] clipped to
// the unit square; keeps the first point attaining the maximum.
SurfacePoint scan_window(const TTerms& terms, int grid, double nu_lo, double nu_hi,
                         double mu_lo, double mu_hi) {
    nu_lo = std::clamp(nu_lo, 0.0, 1.0);
    nu_hi = std::clamp(nu_hi, 0.0, 1.0);
    mu_lo = std::clamp(mu_lo, 0.0, 1.0);
    mu_hi = std::clamp(mu_hi, 0.0, 1.0);
    SurfacePoint best{nu_lo, mu_lo, -std::numeric_limits<double>::infinity()};
    for (int i = 0; i < grid; ++i) {
        const double nu = nu_lo + (nu_hi - nu_lo) * i / (grid - 1);
        for (int j = 0; j < grid; ++j) {
            const double mu = mu_lo + (mu_hi - mu_lo) * j / (grid - 1);
            const double v = surface_value(terms, nu, mu);
            if (v > best.value) best = {nu, mu, v};
        }
    }
    return best;
}

}  // namespace

MaxRecord analyze_surface(const TTerms& terms, int grid, int refine_rounds, double tolerance) {
    if (grid < 11) throw std::invalid_argument("analyze_surface: grid must be >= 11");
    if (refine_rounds < 0) throw std::invalid_argument("analyze_surface: refine_rounds must be >= 0");

    SurfacePoint best = scan_window(terms, grid, 0.0, 1.0, 0.0, 1.0);
    double window = 1.0;
    for (int round = 0; round < refine_rounds; ++round) {
        window /= 10.0;
        const SurfacePoint refined =
            scan_window(terms, grid, best.nu - window / 2.0, best.nu + window / 2.0,
                        best.mu - window / 2.0, best.mu + window / 2.0);
        if (refined.value > best.value) best = refined;
    }

    // Analytic candidates of the quadratic: corners, edge critical points,
    // interior stationary point.
    std::vector<SurfacePoint> candidates = {
        {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {1.0, 1.0, 0.0}};
    const double edge_quad = terms.t3 + terms.t4;
    if (edge_quad != 0.0) {
        const double zero_edge = -terms.t2 / (2.0 * edge_quad);
        const double one_edge = -(terms.t2 + 2.0 * terms.t4) / (2.0 * edge_quad);
        if (0.0 <= zero_edge && zero_edge <= 1.0) {
            candidates.push_back({0.0, zero_edge, 0.0});
            candidates.push_back({zero_edge, 0.0, 0.0});
        }
        if (0.0 <= one_edge && one_edge <= 1.0) {
            candidates.push_back({1.0, one_edge, 0.0});
            candidates.push_back({one_edge, 1.0, 0.0});
        }
    }
    if (terms.t3 != 0.0 && terms.t3 + 2.0 * terms.t4 != 0.0) {
        // Stationarity forces nu = mu when t3 != 0.
        const double diag = -terms.t2 / (2.0 * (terms.t3 + 2.0 * terms.t4));
        if (0.0 <= diag && diag <= 1.0) candidates.push_back({diag, diag, 0.0});
    }
    for (auto& cand : candidates) {
        cand.value = surface_value(terms, cand.nu, cand.mu);
        if (cand.value > best.value) best = cand;
    }

    MaxRecord rec;
    rec.c = terms.c;
    rec.max = best.value;
    rec.corner = surface_value(terms, 1.0, 1.0);
    // When the corner attains the maximum up to floating-point noise, report
    // it as the argmax rather than whichever lattice point tied first.
    if (rec.max - rec.corner <= 1e-12) {
        rec.argmax_nu = 1.0;
        rec.argmax_mu = 1.0;
    } else {
        rec.argmax_nu = best.nu;
        rec.argmax_mu = best.mu;
    }
    rec.t3_plus_t4 = terms.t3 + terms.t4;
    rec.t3_plus_2t4 = terms.t3 + 2.0 * terms.t4;
    rec.discriminant = 4.0 * terms.t3 * (terms.t3 + 2.0 * terms.t4);
    rec.flagged = rec.max - rec.corner > tolerance;
    return rec;
}

MaxReport verify_max_structure(const ClassParams& params, const PhiSpec& phi, int c_steps,
                               int grid, int refine_rounds, double tolerance) {
    if (c_steps < 2) throw std::invalid_argument("verify_max_structure: c_steps must be >= 2");

    MaxReport report;
    report.c_steps = c_steps;
    report.grid = grid;
    report.refine_rounds = refine_rounds;
    report.tolerance = tolerance;
    report.any_flagged = false;
    report.records.reserve(static_cast<std::size_t>(c_steps));
    for (int i = 0; i < c_steps; ++i) {
        const double c = static_cast<double>(i) / (c_steps - 1);
        const MaxRecord rec = analyze_surface(t_terms(params, phi, c), grid, refine_rounds,
                                              tolerance);
        report.any_flagged = report.any_flagged || rec.flagged;
        report.records.push_back(rec);
    }
    return report;
}

namespace {

nlohmann::ordered_json params_json(const ClassParams& params, const PhiSpec& phi) {
    return {
        {"tau", {params.tau().real(), params.tau().imag()}},
        {"lambda", params.lambda()},
        {"delta", params.delta()},
        {"phi", phi.to_string()},
    };
}

}  // namespace

std::string to_json(const MaxReport& report, const ClassParams& params, const PhiSpec& phi) {
    nlohmann::ordered_json j;
    j["config"] = params_json(params, phi);
    j["config"]["c_steps"] = report.c_steps;
    j["config"]["grid"] = report.grid;
    j["config"]["refine_rounds"] = report.refine_rounds;
    j["config"]["tolerance"] = report.tolerance;
    j["any_flagged"] = report.any_flagged;
    j["records"] = nlohmann::ordered_json::array();
    for (const MaxRecord& rec : report.records) {
        j["records"].push_back({
            {"c", rec.c},
            {"argmax", {rec.argmax_nu, rec.argmax_mu}},
            {"max", rec.max},
            {"corner", rec.corner},
            {"t3_plus_t4", rec.t3_plus_t4},
            {"t3_plus_2t4", rec.t3_plus_2t4},
            {"discriminant", rec.discriminant},
            {"flagged", rec.flagged},
        });
    }
    return j.dump(2);
}

std::string to_json(const BoundBreakdown& breakdown, const ClassParams& params,
                    const PhiSpec& phi) {
    nlohmann::ordered_json j;
    j["config"] = params_json(params, phi);
    j["b1"] = breakdown.b1;
    j["b2"] = breakdown.b2;
    j["b3"] = breakdown.b3;
    j["p"] = breakdown.p;
    j["q"] = breakdown.q;
    j["r"] = breakdown.r;
    j["bound"] = breakdown.bound;
    j["omega"] = {
        {"argmax_c", breakdown.omega_argmax_c},
        {"max", breakdown.omega_max},
        {"corner", breakdown.omega_corner},
    };
    j["profile"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < breakdown.profile.size(); ++i) {
        const TTerms& t = breakdown.profile[i];
        j["profile"].push_back({
            {"c", t.c},
            {"t1", t.t1},
            {"t2", t.t2},
            {"t3", t.t3},
            {"t4", t.t4},
            {"omega", breakdown.omega[i]},
        });
    }
    return j.dump(2);
}

}  // namespace bihankel
