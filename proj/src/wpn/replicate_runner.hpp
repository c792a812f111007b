#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wpn/amp_rate.hpp"
#include "wpn/channel.hpp"

namespace wpn::detail {

// Per-replicate accumulators. A replicate is one contiguous trajectory of
// n_symbols blocks; the amplitude and phase statistics are read off the same
// pass so a joint run costs one simulation.
struct ReplicateStats {
    double amp_sum = 0.0;
    std::int64_t amp_count = 0;
    double cos_sum = 0.0;
    std::int64_t cos_count = 0;
    std::int64_t degenerate = 0;  // |Y~| == 0 phase samples, excluded

    double amp_mean() const { return amp_sum / static_cast<double>(amp_count); }
    double cos_mean() const { return cos_sum / static_cast<double>(cos_count); }
};

// Runs all replicates, each on its private stream derived from
// (opts.seed, opts.point_index, replicate index). The RNG consumption per
// replicate does not depend on which statistics are requested, and results
// are identical for any thread count.
std::vector<ReplicateStats> run_replicates(const ChannelParams& params,
                                           const McOptions& opts,
                                           bool want_amp, bool want_phase);

struct MeanStderr {
    double mean = 0.0;
    double stderr = 0.0;
};

// Mean of replicate means plus its standard error (sample stddev across
// replicates / sqrt(count); zero for a single replicate).
MeanStderr summarize(std::span<const double> replicate_means);

}  // namespace wpn::detail
