#include "bihankel/falsify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace bihankel {

namespace {

constexpr std::size_t kMaxViolationDetail = 16;

cplx draw_disk_or_circle(SplitMix64& gen, bool boundary_bias) {
    if (boundary_bias && gen.next_unit() < 0.5) {
        return sample_unit_circle(gen);
    }
    return sample_unit_disk(gen);
}

// Constants of the order-2 compatibility constraint, precomputed per run:
// x + y = scale * c1^2 / (1 - c1^2) with scale = 2 (B1^2 tau w3 / w2^2 - B2) / B1.
struct ConstraintContext {
    cplx scale;
};

ConstraintContext constraint_context(const ClassParams& params, const PhiSpec& phi) {
    const double w2 = params.weight(2);
    const double w3 = params.weight(3);
    const cplx b1b1_tau = phi.b1() * phi.b1() * params.tau();
    return {2.0 * (b1b1_tau * w3 / (w2 * w2) - phi.b2()) / phi.b1()};
}

struct BlockResult {
    double max = -1.0;
    std::uint64_t argmax_index = 0;
    SchwarzTuple argmax_tuple{};
    std::uint64_t rejected = 0;
    std::vector<Violation> violations;
};

BlockResult run_block(const FalsifyConfig& config, const ConstraintContext& ctx, double bound,
                      std::uint64_t block) {
    const std::uint64_t first = block * kSampleBlock;
    const std::uint64_t last = std::min(first + kSampleBlock, config.samples);
    SplitMix64 gen(substream_seed(config.seed, block));

    BlockResult out;
    for (std::uint64_t index = first; index < last; ++index) {
        SchwarzTuple tuple;
        tuple.c1 = config.complex_c1 ? sample_unit_disk(gen) : cplx(gen.next_unit(), 0.0);
        tuple.x = draw_disk_or_circle(gen, config.boundary_bias);
        tuple.xi = sample_unit_disk(gen);
        if (config.mode == SampleMode::constrained) {
            tuple.eta = sample_unit_disk(gen);
            const cplx head = 1.0 - tuple.c1 * tuple.c1;
            if (std::abs(head) < 1e-12) {
                ++out.rejected;
                continue;
            }
            tuple.y = ctx.scale * tuple.c1 * tuple.c1 / head - tuple.x;
            if (std::abs(tuple.y) > 1.0 + kAdmissibilityTol) {
                ++out.rejected;
                continue;
            }
        } else {
            tuple.y = draw_disk_or_circle(gen, config.boundary_bias);
            tuple.eta = sample_unit_disk(gen);
        }

        const double h2 = second_hankel(coefficients_from_schwarz(config.params, config.phi, tuple));
        if (h2 > out.max) {
            out.max = h2;
            out.argmax_index = index;
            out.argmax_tuple = tuple;
        }
        if (h2 > bound + kViolationTol) {
            out.violations.push_back({index, h2, h2 - bound, tuple});
        }
    }
    return out;
}

FalsifyReport merge_blocks(const FalsifyConfig& config, double bound,
                           std::vector<BlockResult>& blocks) {
    FalsifyReport report;
    report.bound = bound;
    report.samples_run = config.samples;
    report.max_observed = 0.0;

    double best = -1.0;
    for (BlockResult& block : blocks) {
        report.samples_rejected += block.rejected;
        if (block.max > best) {
            best = block.max;
            report.argmax_index = block.argmax_index;
            report.argmax_tuple = block.argmax_tuple;
        }
        report.violation_count += block.violations.size();
        for (Violation& v : block.violations) {
            if (report.violations.size() < kMaxViolationDetail) {
                report.violations.push_back(std::move(v));
            }
        }
    }
    report.max_observed = best > 0.0 ? best : 0.0;
    report.ratio = report.bound > 0.0 ? report.max_observed / report.bound : 0.0;
    return report;
}

}  // namespace

SchwarzTuple draw_tuple(SplitMix64& gen, bool complex_c1, bool boundary_bias) {
    SchwarzTuple tuple;
    tuple.c1 = complex_c1 ? sample_unit_disk(gen) : cplx(gen.next_unit(), 0.0);
    tuple.x = draw_disk_or_circle(gen, boundary_bias);
    tuple.xi = sample_unit_disk(gen);
    tuple.y = draw_disk_or_circle(gen, boundary_bias);
    tuple.eta = sample_unit_disk(gen);
    return tuple;
}

FalsifyReport falsify(const FalsifyConfig& config, int threads) {
    if (config.samples < 1) {
        throw std::invalid_argument("falsify: samples must be >= 1");
    }
    if (threads < 1) {
        throw std::invalid_argument("falsify: threads must be >= 1");
    }
    const double bound = theorem_bound(config.params, config.phi).bound;
    const ConstraintContext ctx = constraint_context(config.params, config.phi);

    const std::uint64_t block_count = (config.samples + kSampleBlock - 1) / kSampleBlock;
    std::vector<BlockResult> blocks(block_count);

    const int workers = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(threads), block_count));
    if (workers <= 1) {
        for (std::uint64_t b = 0; b < block_count; ++b) {
            blocks[b] = run_block(config, ctx, bound, b);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t b = static_cast<std::uint64_t>(w); b < block_count;
                     b += static_cast<std::uint64_t>(workers)) {
                    blocks[b] = run_block(config, ctx, bound, b);
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }
    return merge_blocks(config, bound, blocks);
}

FalsifyReport report_for_tuples(const FalsifyConfig& config,
                                std::span<const SchwarzTuple> tuples,
                                std::optional<double> bound_override) {
    const double bound =
        bound_override ? *bound_override : theorem_bound(config.params, config.phi).bound;

    FalsifyReport report;
    report.bound = bound;
    report.samples_run = tuples.size();

    double best = -1.0;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        const double h2 =
            second_hankel(coefficients_from_schwarz(config.params, config.phi, tuples[i]));
        if (h2 > best) {
            best = h2;
            report.argmax_index = i;
            report.argmax_tuple = tuples[i];
        }
        if (h2 > bound + kViolationTol) {
            ++report.violation_count;
            if (report.violations.size() < kMaxViolationDetail) {
                report.violations.push_back({i, h2, h2 - bound, tuples[i]});
            }
        }
    }
    report.max_observed = best > 0.0 ? best : 0.0;
    report.ratio = report.bound > 0.0 ? report.max_observed / report.bound : 0.0;
    return report;
}

namespace {

nlohmann::ordered_json complex_json(cplx v) { return {v.real(), v.imag()}; }

nlohmann::ordered_json tuple_json(const SchwarzTuple& t) {
    return {
        {"c1", complex_json(t.c1)}, {"x", complex_json(t.x)},   {"xi", complex_json(t.xi)},
        {"y", complex_json(t.y)},   {"eta", complex_json(t.eta)},
    };
}

}  // namespace

std::string to_json(const FalsifyReport& report, const FalsifyConfig& config) {
    nlohmann::ordered_json j;
    j["config"] = {
        {"tau", complex_json(config.params.tau())},
        {"lambda", config.params.lambda()},
        {"delta", config.params.delta()},
        {"phi", config.phi.to_string()},
        {"samples", config.samples},
        {"seed", config.seed},
        {"mode", config.mode == SampleMode::relaxed ? "relaxed" : "constrained"},
        {"complex_c1", config.complex_c1},
        {"boundary_bias", config.boundary_bias},
    };
    j["bound"] = report.bound;
    j["max_observed"] = report.max_observed;
    j["ratio"] = report.ratio;
    j["argmax_index"] = report.argmax_index;
    j["argmax_tuple"] = tuple_json(report.argmax_tuple);
    j["samples_run"] = report.samples_run;
    j["samples_rejected"] = report.samples_rejected;
    j["violation_count"] = report.violation_count;
    j["violations"] = nlohmann::ordered_json::array();
    for (const Violation& v : report.violations) {
        j["violations"].push_back({
            {"index", v.index},
            {"h2", v.h2},
            {"excess", v.excess},
            {"tuple", tuple_json(v.tuple)},
        });
    }
    return j.dump(2);
}

}  // namespace bihankel
