#include "bihankel/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace bihankel {

namespace {

using nlohmann::json;

constexpr double kMatchTol = 1e-12;

bool near(double a, double b) { return std::abs(a - b) <= kMatchTol; }

/// Fills the corollary slots a grid point matches: ids 1-4 need tau = 1 and
/// the stated (lambda, delta, phi) pattern; ids 5-7 read alpha = 1 - tau off
/// a real tau in (0, 1] with the Caratheodory target.
std::array<std::optional<double>, 7> matching_corollaries(const ClassParams& params,
                                                          const PhiSpec& phi) {
    std::array<std::optional<double>, 7> out{};
    const cplx tau = params.tau();
    const double lambda = params.lambda();
    const double delta = params.delta();

    const bool tau_one = near(tau.real(), 1.0) && near(tau.imag(), 0.0);
    const bool tau_real01 =
        near(tau.imag(), 0.0) && tau.real() > 0.0 && tau.real() <= 1.0 + kMatchTol;
    const bool lambda_one = near(lambda, 1.0);
    const bool delta_zero = near(delta, 0.0);
    const bool is_power = phi.family() == PhiFamily::power_alpha;
    const bool is_cara = phi.family() == PhiFamily::caratheodory;
    const double alpha_pow = is_power ? phi.family_param(0) : 0.0;

    if (tau_one && delta_zero) {
        out[0] = corollary_bound(1, {.lambda = lambda, .phi = phi});
        if (is_power) out[1] = corollary_bound(2, {.alpha = alpha_pow, .lambda = lambda});
    }
    if (tau_one && lambda_one && is_power) {
        out[2] = corollary_bound(3, {.alpha = alpha_pow, .delta = delta});
        if (delta_zero) out[3] = corollary_bound(4, {.alpha = alpha_pow});
    }
    if (tau_real01 && is_cara) {
        const double alpha = 1.0 - std::min(tau.real(), 1.0);
        out[4] = corollary_bound(5, {.alpha = alpha, .lambda = lambda, .delta = delta});
        if (lambda_one) {
            out[5] = corollary_bound(6, {.alpha = alpha, .delta = delta});
            if (delta_zero) out[6] = corollary_bound(7, {.alpha = alpha});
        }
    }
    return out;
}

// Empty lists are allowed: an empty grid dimension just yields zero rows.
std::vector<double> number_list(const json& j, const char* key) {
    std::vector<double> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number()) {
            throw std::invalid_argument(std::string("sweep config: '") + key +
                                        "' must be a list of numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

SweepSpec sweep_spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("sweep config: ") + e.what());
    }

    SweepSpec spec;
    if (j.contains("lambda")) spec.lambdas = number_list(j, "lambda");
    if (j.contains("delta")) spec.deltas = number_list(j, "delta");

    if (j.contains("tau") && (j.contains("tau_abs") || j.contains("tau_arg"))) {
        throw std::invalid_argument("sweep config: give either 'tau' or 'tau_abs'/'tau_arg'");
    }
    if (j.contains("tau")) {
        spec.taus.clear();
        for (const auto& v : j.at("tau")) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
                throw std::invalid_argument("sweep config: 'tau' entries must be [re, im] pairs");
            }
            spec.taus.emplace_back(v[0].get<double>(), v[1].get<double>());
        }
    } else if (j.contains("tau_abs")) {
        const std::vector<double> mags = number_list(j, "tau_abs");
        std::vector<double> args{0.0};
        if (j.contains("tau_arg")) args = number_list(j, "tau_arg");
        spec.taus.clear();
        for (double m : mags) {
            for (double a : args) {
                spec.taus.push_back(std::polar(m, a));
            }
        }
    }

    if (j.contains("phi")) {
        spec.phis.clear();
        for (const auto& v : j.at("phi")) {
            if (!v.is_string()) {
                throw std::invalid_argument("sweep config: 'phi' must be a list of strings");
            }
            spec.phis.push_back(v.get<std::string>());
        }
    }

    if (j.contains("falsify")) {
        const json& f = j.at("falsify");
        if (f.is_boolean()) {
            spec.run_falsify = f.get<bool>();
        } else {
            spec.run_falsify = true;
            if (f.contains("samples")) spec.samples = f.at("samples").get<std::uint64_t>();
            if (f.contains("seed")) spec.seed = f.at("seed").get<std::uint64_t>();
            if (f.contains("mode")) {
                const std::string mode = f.at("mode").get<std::string>();
                if (mode == "relaxed") {
                    spec.mode = SampleMode::relaxed;
                } else if (mode == "constrained") {
                    spec.mode = SampleMode::constrained;
                } else {
                    throw std::invalid_argument("sweep config: mode must be relaxed|constrained");
                }
            }
            if (f.contains("complex_c1")) spec.complex_c1 = f.at("complex_c1").get<bool>();
            if (f.contains("boundary_bias")) spec.boundary_bias = f.at("boundary_bias").get<bool>();
        }
    }
    if (spec.run_falsify && spec.samples < 1) {
        throw std::invalid_argument("sweep config: samples must be >= 1");
    }
    return spec;
}

SweepResult run_sweep(const SweepSpec& spec, int threads) {
    SweepResult result;
    result.rows.reserve(spec.lambdas.size() * spec.deltas.size() * spec.taus.size() *
                        spec.phis.size());
    for (double lambda : spec.lambdas) {
        for (double delta : spec.deltas) {
            for (cplx tau : spec.taus) {
                for (const std::string& phi_text : spec.phis) {
                    SweepRow row;
                    row.lambda = lambda;
                    row.delta = delta;
                    row.tau = tau;
                    row.phi_text = phi_text;
                    try {
                        const PhiSpec phi = PhiSpec::parse(phi_text);
                        const ClassParams params(tau, lambda, delta);
                        row.breakdown = theorem_bound(params, phi);
                        row.corollaries = matching_corollaries(params, phi);
                        if (spec.run_falsify) {
                            FalsifyConfig config{params,    phi,
                                                 spec.samples, spec.seed,
                                                 spec.mode, spec.complex_c1,
                                                 spec.boundary_bias};
                            row.report = falsify(config, threads);
                            result.violation_count += row.report->violation_count;
                        }
                    } catch (const std::exception& e) {
                        row.error = e.what();
                        row.breakdown.reset();
                        row.report.reset();
                        row.corollaries = {};
                    }
                    result.rows.push_back(std::move(row));
                }
            }
        }
    }
    return result;
}

namespace {

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string sweep_csv(const SweepResult& result) {
    std::string out =
        "lambda,delta,tau_re,tau_im,phi,b1,b2,b3,p,q,r,bound,max_observed,ratio,"
        "samples_run,samples_rejected,violations,co1,co2,co3,co4,co5,co6,co7,error\n";
    for (const SweepRow& row : result.rows) {
        out += csv_number(row.lambda) + ',' + csv_number(row.delta) + ',' +
               csv_number(row.tau.real()) + ',' + csv_number(row.tau.imag()) + ',' +
               csv_quote(row.phi_text) + ',';
        if (row.breakdown) {
            const BoundBreakdown& b = *row.breakdown;
            out += csv_number(b.b1) + ',' + csv_number(b.b2) + ',' + csv_number(b.b3) + ',' +
                   csv_number(b.p) + ',' + csv_number(b.q) + ',' + csv_number(b.r) + ',' +
                   csv_number(b.bound) + ',';
        } else {
            out += ",,,,,,,";
        }
        if (row.report) {
            const FalsifyReport& r = *row.report;
            out += csv_number(r.max_observed) + ',' + csv_number(r.ratio) + ',' +
                   std::to_string(r.samples_run) + ',' + std::to_string(r.samples_rejected) + ',' +
                   std::to_string(r.violation_count) + ',';
        } else {
            out += ",,,,,";
        }
        for (const auto& co : row.corollaries) {
            if (co) out += csv_number(*co);
            out += ',';
        }
        out += row.error.empty() ? std::string() : csv_quote(row.error);
        out += '\n';
    }
    return out;
}

std::string sweep_json(const SweepResult& result, const SweepSpec& spec) {
    nlohmann::ordered_json j;
    j["falsify"] = {
        {"enabled", spec.run_falsify}, {"samples", spec.samples},
        {"seed", spec.seed},           {"mode", spec.mode == SampleMode::relaxed
                                                    ? "relaxed"
                                                    : "constrained"},
        {"complex_c1", spec.complex_c1}, {"boundary_bias", spec.boundary_bias},
    };
    j["violation_count"] = result.violation_count;
    j["rows"] = nlohmann::ordered_json::array();
    for (const SweepRow& row : result.rows) {
        nlohmann::ordered_json r = {
            {"lambda", row.lambda},
            {"delta", row.delta},
            {"tau", {row.tau.real(), row.tau.imag()}},
            {"phi", row.phi_text},
        };
        if (!row.error.empty()) {
            r["error"] = row.error;
        }
        if (row.breakdown) {
            r["b1"] = row.breakdown->b1;
            r["b2"] = row.breakdown->b2;
            r["b3"] = row.breakdown->b3;
            r["p"] = row.breakdown->p;
            r["q"] = row.breakdown->q;
            r["r"] = row.breakdown->r;
            r["bound"] = row.breakdown->bound;
        }
        if (row.report) {
            r["max_observed"] = row.report->max_observed;
            r["ratio"] = row.report->ratio;
            r["samples_run"] = row.report->samples_run;
            r["samples_rejected"] = row.report->samples_rejected;
            r["violations"] = row.report->violation_count;
        }
        nlohmann::ordered_json cos = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.corollaries.size(); ++i) {
            if (row.corollaries[i]) {
                cos["co" + std::to_string(i + 1)] = *row.corollaries[i];
            }
        }
        if (!cos.empty()) r["corollaries"] = cos;
        j["rows"].push_back(std::move(r));
    }
    return j.dump(2);
}

}  // namespace bihankel
