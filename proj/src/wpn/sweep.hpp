#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wpn/amp_rate.hpp"
#include "wpn/phase_rate.hpp"

namespace wpn {

// One SNR sweep: the grid, the Monte Carlo budget, the alpha policy and the
// oversampling rule. oversampling = kPaperSchedule selects L = ceil(beta
// sqrt(snr)) per point.
struct SweepConfig {
    double beta = 1.0;
    std::vector<double> snr_db = {40.0, 50.0, 60.0, 70.0, 80.0};
    int n_symbols = 2000;
    int replicates = 8;
    std::uint64_t seed = 1;
    AlphaPolicy alpha = AlphaPolicy::automatic();
    int oversampling = kPaperSchedule;
    int threads = 0;  // 0 = hardware concurrency; never affects results
};

// Everything estimated and evaluated at one SNR point. All rates in nats.
// ecos_bound, phase_analytic are NaN when SNR * delta <= 2 (bound not
// applicable); amp_analytic carries the only closed-form amplitude reference,
// the high-SNR expression also stored in amp_asymptote.
struct SweepPoint {
    double snr_db = 0.0;
    double snr = 0.0;
    int oversampling = 0;
    double delta = 0.0;
    double alpha_used = 0.0;
    RateEstimate amp_rate;
    RateEstimate phase_rate;
    double total_rate_nats = 0.0;
    double ecos = 0.0;
    double ecos_stderr = 0.0;
    double ecos_bound = 0.0;
    double amp_analytic = 0.0;
    double phase_analytic = 0.0;
    double amp_asymptote = 0.0;
    double phase_asymptote = 0.0;
    std::int64_t degenerate_dropped = 0;
};

// Least-squares fit of rate (nats) against ln snr.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    int points_used = 0;
};

enum class RateField { Amp, Phase, Total };

// Runs both estimators on shared trajectories (one simulation pass feeds
// both) and fills every analytic reference field. point_index feeds the
// per-point seed derivation.
SweepPoint run_point(const SweepConfig& config, double snr_db,
                     std::uint64_t point_index = 0);

// All points of config.snr_db, emitted sorted by snr_db; per-point seeds are
// derived from (config.seed, sorted position).
std::vector<SweepPoint> run_sweep(const SweepConfig& config);

// Ordinary least squares of the chosen rate against ln snr; needs >= 3
// points. stderr of the slope comes from the fit residuals.
SlopeFit fit_prelog(std::span<const SweepPoint> points, RateField field);

}  // namespace wpn
