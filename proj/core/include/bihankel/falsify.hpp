#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bihankel/bound.hpp"
#include "bihankel/coefficients.hpp"
#include "bihankel/phi.hpp"
#include "bihankel/rng.hpp"

namespace bihankel {

/// Observed |a2 a4 - a3^2| must stay below the bound by more than this before
/// a sample counts as a violation; well above accumulated roundoff, well
/// below any genuine counterexample.
inline constexpr double kViolationTol = 1e-9;

/// Samples are drawn in fixed blocks of this many indices; block b owns the
/// substream seeded with substream_seed(seed, b). Workers process whole
/// blocks, so results are independent of the thread count, and extending the
/// sample count only appends draws.
inline constexpr std::uint64_t kSampleBlock = 8192;

enum class SampleMode { relaxed, constrained };

struct FalsifyConfig {
    ClassParams params{cplx(1.0, 0.0), 1.0, 0.0};
    PhiSpec phi{PhiSpec::caratheodory()};
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    SampleMode mode = SampleMode::relaxed;
    bool complex_c1 = false;    // draw c1 from the disk instead of [0, 1]
    bool boundary_bias = false; // put x and y on the unit circle with probability 1/2
};

struct Violation {
    std::uint64_t index{};
    double h2{};
    double excess{};
    SchwarzTuple tuple{};
};

struct FalsifyReport {
    double bound{};
    double max_observed{};
    double ratio{};
    std::uint64_t argmax_index{};
    SchwarzTuple argmax_tuple{};
    std::uint64_t samples_run{};
    std::uint64_t samples_rejected{};
    std::uint64_t violation_count{};
    std::vector<Violation> violations;  // detail capped; count holds the total
};

/// Draws one Schwarz tuple from the per-block generator. Draw order per
/// sample: c1, [coin_x], x, xi, [coin_y], y, eta; coins exist only in
/// boundary-bias mode, and constrained mode skips the y draws entirely
/// (y is solved, not sampled).
SchwarzTuple draw_tuple(SplitMix64& gen, bool complex_c1, bool boundary_bias);

/// Monte-Carlo attack on the bound: draws `samples` tuples, evaluates
/// |a2 a4 - a3^2| through coefficients_from_schwarz, tracks the maximum and
/// any violations. Identical configs give identical reports regardless of
/// `threads`. Constrained mode solves y from the order-2 compatibility
/// constraint and rejects tuples whose solution leaves the unit disk.
FalsifyReport falsify(const FalsifyConfig& config, int threads = 1);

/// Builds a report from explicit tuples instead of sampled ones (test hook).
/// `bound_override` substitutes the comparison bound, also for tests.
FalsifyReport report_for_tuples(const FalsifyConfig& config,
                                std::span<const SchwarzTuple> tuples,
                                std::optional<double> bound_override = {});

std::string to_json(const FalsifyReport& report, const FalsifyConfig& config);

}  // namespace bihankel
