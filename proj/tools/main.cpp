// Command line front end: bound, corollary, verify-max, falsify, sweep.
// Exit codes: 0 success, 2 validation error, 3 when a falsification run
// records at least one violation.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bihankel/bound.hpp"
#include "bihankel/falsify.hpp"
#include "bihankel/sweep.hpp"

namespace {

using bihankel::cplx;

constexpr int kExitValidation = 2;
constexpr int kExitViolation = 3;

double parse_double(std::string_view text, const char* what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument(std::string("bad number for ") + what + ": '" +
                                    std::string(text) + "'");
    }
    return value;
}

// "re,im" or plain "re".
cplx parse_tau(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        return {parse_double(text, "tau"), 0.0};
    }
    return {parse_double(std::string_view(text).substr(0, comma), "tau"),
            parse_double(std::string_view(text).substr(comma + 1), "tau")};
}

struct ClassOptions {
    std::string tau = "1,0";
    double lambda = 1.0;
    double delta = 0.0;
    std::string phi = "caratheodory";

    void attach(CLI::App* cmd) {
        cmd->add_option("--tau", tau, "tau as re,im (or a single real)")
            ->capture_default_str();
        cmd->add_option("--lambda", lambda, "operator weight lambda (>= 1)")
            ->capture_default_str();
        cmd->add_option("--delta", delta, "operator weight delta in [0, 1]")
            ->capture_default_str();
        cmd->add_option("--phi", phi,
                        "target function: caratheodory | order_beta:b | janowski:A,B | "
                        "power:a | custom:B1,B2,B3")
            ->capture_default_str();
    }

    bihankel::ClassParams params() const { return {parse_tau(tau), lambda, delta}; }
    bihankel::PhiSpec phi_spec() const { return bihankel::PhiSpec::parse(phi); }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    out << content;
}

int run_bound(const ClassOptions& opts, bool as_json) {
    const auto params = opts.params();
    const auto phi = opts.phi_spec();
    const auto breakdown = bihankel::theorem_bound(params, phi);
    if (as_json) {
        std::cout << bihankel::to_json(breakdown, params, phi) << "\n";
        return 0;
    }
    std::printf("phi: %s  (B1=%.17g, B2=%.17g, B3=%.17g)\n", phi.to_string().c_str(),
                breakdown.b1, breakdown.b2, breakdown.b3);
    std::printf("tau: %.17g%+.17gi  lambda: %.17g  delta: %.17g\n", params.tau().real(),
                params.tau().imag(), params.lambda(), params.delta());
    std::printf("P = %.17g\nQ = %.17g\nR = %.17g\n", breakdown.p, breakdown.q, breakdown.r);
    std::printf("bound = %.17g\n", breakdown.bound);
    std::printf("omega argmax: c = %.17g (omega = %.17g, corner = %.17g)\n",
                breakdown.omega_argmax_c, breakdown.omega_max, breakdown.omega_corner);
    return 0;
}

int run_corollary(int id, const bihankel::CorollaryArgs& args, bool as_json) {
    const double value = bihankel::corollary_bound(id, args);
    const auto [params, phi] = bihankel::corollary_specialization(id, args);
    const double theorem = bihankel::theorem_bound(params, phi).bound;
    if (as_json) {
        std::printf(
            "{\"id\": %d, \"value\": %.17g, \"theorem\": %.17g, \"abs_diff\": %.17g}\n",
            id, value, theorem, std::abs(value - theorem));
        return 0;
    }
    std::printf("corollary %d: %.17g\n", id, value);
    std::printf("theorem specialization (tau=%.17g%+.17gi, lambda=%.17g, delta=%.17g, %s): %.17g\n",
                params.tau().real(), params.tau().imag(), params.lambda(), params.delta(),
                phi.to_string().c_str(), theorem);
    std::printf("abs difference: %.3g\n", std::abs(value - theorem));
    return 0;
}

int run_verify_max(const ClassOptions& opts, int c_steps, int grid, int refine,
                   const std::string& out_path) {
    const auto params = opts.params();
    const auto phi = opts.phi_spec();
    const auto report = bihankel::verify_max_structure(params, phi, c_steps, grid, refine);
    std::size_t flagged = 0;
    for (const auto& rec : report.records) flagged += rec.flagged ? 1 : 0;
    std::printf("c steps: %d, grid: %d, refine rounds: %d\n", report.c_steps, report.grid,
                report.refine_rounds);
    std::printf("flagged records: %zu of %zu\n", flagged, report.records.size());
    if (!out_path.empty()) {
        write_file(out_path, bihankel::to_json(report, params, phi));
        std::printf("report written to %s\n", out_path.c_str());
    }
    return 0;
}

int run_falsify(const ClassOptions& opts, std::uint64_t samples, std::uint64_t seed,
                const std::string& mode, bool complex_c1, bool boundary_bias, int threads,
                const std::string& out_path) {
    bihankel::FalsifyConfig config{opts.params(), opts.phi_spec(), samples, seed};
    if (mode == "relaxed") {
        config.mode = bihankel::SampleMode::relaxed;
    } else if (mode == "constrained") {
        config.mode = bihankel::SampleMode::constrained;
    } else {
        throw std::invalid_argument("mode must be 'relaxed' or 'constrained'");
    }
    config.complex_c1 = complex_c1;
    config.boundary_bias = boundary_bias;

    const auto report = bihankel::falsify(config, threads);
    std::printf("bound        = %.17g\n", report.bound);
    std::printf("max observed = %.17g  (sample %llu)\n", report.max_observed,
                static_cast<unsigned long long>(report.argmax_index));
    std::printf("ratio        = %.17g\n", report.ratio);
    std::printf("samples run  = %llu, rejected = %llu\n",
                static_cast<unsigned long long>(report.samples_run),
                static_cast<unsigned long long>(report.samples_rejected));
    std::printf("violations   = %llu\n",
                static_cast<unsigned long long>(report.violation_count));
    if (!out_path.empty()) {
        write_file(out_path, bihankel::to_json(report, config));
        std::printf("report written to %s\n", out_path.c_str());
    }
    return report.violation_count > 0 ? kExitViolation : 0;
}

int run_sweep(const std::string& config_path, const std::string& csv_path,
              const std::string& json_path, int threads) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + config_path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto spec = bihankel::sweep_spec_from_json(buffer.str());
    const auto result = bihankel::run_sweep(spec, threads);

    std::size_t errored = 0;
    for (const auto& row : result.rows) errored += row.error.empty() ? 0 : 1;
    std::printf("rows: %zu (%zu with errors), violations: %llu\n", result.rows.size(), errored,
                static_cast<unsigned long long>(result.violation_count));

    if (!csv_path.empty()) {
        write_file(csv_path, bihankel::sweep_csv(result));
        std::printf("csv written to %s\n", csv_path.c_str());
    }
    if (!json_path.empty()) {
        write_file(json_path, bihankel::sweep_json(result, spec));
        std::printf("json written to %s\n", json_path.c_str());
    }
    if (csv_path.empty() && json_path.empty()) {
        std::cout << bihankel::sweep_csv(result);
    }
    return result.violation_count > 0 ? kExitViolation : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Second Hankel determinant bounds for a subordination-defined "
                 "bi-univalent class: closed-form evaluation, surface-maximizer "
                 "verification, and Monte-Carlo falsification"};
    app.require_subcommand(1);

    // bound
    ClassOptions bound_opts;
    bool bound_json = false;
    CLI::App* bound_cmd = app.add_subcommand("bound", "Evaluate the closed-form upper bound");
    bound_opts.attach(bound_cmd);
    bound_cmd->add_flag("--json", bound_json, "emit the full breakdown as JSON");

    // corollary
    int co_id = 0;
    double co_alpha = 0.0, co_lambda = 1.0, co_delta = 0.0, co_beta = 0.0;
    bool co_has_beta = false;
    std::string co_phi;
    bool co_json = false;
    CLI::App* co_cmd =
        app.add_subcommand("corollary", "Evaluate a specialized bound and its theorem value");
    co_cmd->add_option("--id", co_id, "corollary id, 1..7")->required();
    co_cmd->add_option("--alpha", co_alpha, "alpha parameter (ids 2..7)");
    co_cmd->add_option("--lambda", co_lambda, "lambda parameter (ids 1, 2, 5)");
    co_cmd->add_option("--delta", co_delta, "delta parameter (ids 3, 5, 6)");
    co_cmd->add_option("--beta", co_beta, "alias for --delta used by id 3")
        ->each([&co_has_beta](const std::string&) { co_has_beta = true; });
    co_cmd->add_option("--phi", co_phi, "target function (id 1)");
    co_cmd->add_flag("--json", co_json, "emit JSON");

    // verify-max
    ClassOptions vm_opts;
    int vm_c_steps = 51, vm_grid = 101, vm_refine = 3;
    std::string vm_out;
    CLI::App* vm_cmd = app.add_subcommand(
        "verify-max", "Maximize the majorizing surface on a c grid and flag corner misses");
    vm_opts.attach(vm_cmd);
    vm_cmd->add_option("--c-steps", vm_c_steps, "number of c grid points")->capture_default_str();
    vm_cmd->add_option("--grid", vm_grid, "surface grid resolution per axis (>= 11)")
        ->capture_default_str();
    vm_cmd->add_option("--refine", vm_refine, "local refinement rounds")->capture_default_str();
    vm_cmd->add_option("--out", vm_out, "write the JSON report here");

    // falsify
    ClassOptions fz_opts;
    std::uint64_t fz_samples = 100000, fz_seed = 0;
    std::string fz_mode = "relaxed", fz_out;
    bool fz_complex_c1 = false, fz_boundary = false;
    int fz_threads = 1;
    CLI::App* fz_cmd =
        app.add_subcommand("falsify", "Monte-Carlo attack on the bound over admissible tuples");
    fz_opts.attach(fz_cmd);
    fz_cmd->add_option("--samples", fz_samples, "number of sampled tuples")->capture_default_str();
    fz_cmd->add_option("--seed", fz_seed, "PRNG seed")->capture_default_str();
    fz_cmd->add_option("--mode", fz_mode, "relaxed | constrained")->capture_default_str();
    fz_cmd->add_flag("--complex-c1", fz_complex_c1, "draw c1 from the disk instead of [0, 1]");
    fz_cmd->add_flag("--boundary-bias", fz_boundary,
                     "put x and y on the unit circle with probability 1/2");
    fz_cmd->add_option("--threads", fz_threads, "worker threads (result is thread-count independent)")
        ->capture_default_str();
    fz_cmd->add_option("--out", fz_out, "write the JSON report here");

    // sweep
    std::string sw_config, sw_out, sw_json_out;
    int sw_threads = 1;
    CLI::App* sw_cmd =
        app.add_subcommand("sweep", "Run bound + falsification over a parameter grid");
    sw_cmd->add_option("--config", sw_config, "JSON grid specification")->required();
    sw_cmd->add_option("--out", sw_out, "write CSV here");
    sw_cmd->add_option("--json-out", sw_json_out, "write JSON here");
    sw_cmd->add_option("--threads", sw_threads, "worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (bound_cmd->parsed()) {
            return run_bound(bound_opts, bound_json);
        }
        if (co_cmd->parsed()) {
            bihankel::CorollaryArgs args;
            args.alpha = co_alpha;
            args.lambda = co_lambda;
            args.delta = co_has_beta ? co_beta : co_delta;
            if (co_id == 1) {
                if (co_phi.empty()) {
                    throw std::invalid_argument("corollary 1 requires --phi");
                }
                args.phi = bihankel::PhiSpec::parse(co_phi);
            }
            return run_corollary(co_id, args, co_json);
        }
        if (vm_cmd->parsed()) {
            return run_verify_max(vm_opts, vm_c_steps, vm_grid, vm_refine, vm_out);
        }
        if (fz_cmd->parsed()) {
            return run_falsify(fz_opts, fz_samples, fz_seed, fz_mode, fz_complex_c1, fz_boundary,
                               fz_threads, fz_out);
        }
        if (sw_cmd->parsed()) {
            return run_sweep(sw_config, sw_out, sw_json_out, sw_threads);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
