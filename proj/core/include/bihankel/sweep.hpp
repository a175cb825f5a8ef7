#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bihankel/falsify.hpp"

namespace bihankel {

/// Cartesian grid over the class parameters plus the falsification settings
/// shared by every grid point. Parsed from JSON; tau entries are [re, im]
/// pairs (alternatively polar "tau_abs" x "tau_arg" lists), phi entries use
/// the PhiSpec textual syntax.
struct SweepSpec {
    std::vector<double> lambdas{1.0};
    std::vector<double> deltas{0.0};
    std::vector<cplx> taus{cplx(1.0, 0.0)};
    std::vector<std::string> phis{"caratheodory"};

    bool run_falsify = true;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    SampleMode mode = SampleMode::relaxed;
    bool complex_c1 = false;
    bool boundary_bias = false;
};

/// One grid point. Invalid points carry `error` and empty results; the sweep
/// itself continues. Corollary slots hold the matching specialized bound for
/// every corollary whose parameter pattern the point matches.
struct SweepRow {
    double lambda{};
    double delta{};
    cplx tau{};
    std::string phi_text;
    std::string error;  // empty on success

    std::optional<BoundBreakdown> breakdown;
    std::optional<FalsifyReport> report;
    std::array<std::optional<double>, 7> corollaries{};
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::uint64_t violation_count{};
};

SweepSpec sweep_spec_from_json(const std::string& text);

/// Evaluates the bound (and optionally the falsification run) at every grid
/// point, row order: lambda-major, then delta, tau, phi.
SweepResult run_sweep(const SweepSpec& spec, int threads = 1);

/// CSV with one row per grid point; phi and error fields are quoted. Columns:
/// lambda, delta, tau_re, tau_im, phi, b1, b2, b3, p, q, r, bound,
/// max_observed, ratio, samples_run, samples_rejected, violations,
/// co1..co7, error.
std::string sweep_csv(const SweepResult& result);

std::string sweep_json(const SweepResult& result, const SweepSpec& spec);

}  // namespace bihankel
