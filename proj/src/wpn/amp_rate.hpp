#pragma once

#include <complex>
#include <cstdint>
#include <span>

#include "wpn/channel.hpp"

namespace wpn {

// Monte Carlo estimate in nats per symbol. stderr_nats is the sample
// standard deviation of the replicate means divided by sqrt(replicates)
// (zero when only one replicate was run).
struct RateEstimate {
    double mean_nats = 0.0;
    double stderr_nats = 0.0;
    int replicates = 0;
    int symbols_per_replicate = 0;
};

// Replicate layout of a Monte Carlo estimate. Replicate streams derive
// deterministically from (seed, point_index, replicate index), so any thread
// count produces identical results.
struct McOptions {
    int n_symbols = 2000;
    int replicates = 8;
    std::uint64_t seed = 1;
    std::uint64_t point_index = 0;
    int threads = 0;  // 0 = hardware concurrency
};

// Energy statistic V_k = sum of |Y|^2 over one symbol's L samples.
double statistic_v(std::span<const std::complex<double>> block);
double statistic_v(const OutputBlock& block);

// Log density of the Gaussian auxiliary channel for V given the input
// amplitude: mean x_a^2 delta + sigma_n_sq, variance 2 x_a^2 delta^2
// sigma_n_sq. Throws std::domain_error when the variance degenerates
// (x_a = 0 or noise_off).
double log_aux_v(double v, double x_a, const ChannelParams& params);

// Log of the auxiliary-channel output density Q_V(v), the mixture of the
// Gaussian kernel over the shifted-exponential amplitude law. Evaluated in
// closed form via the scaled complementary error function; exact up to
// floating-point rounding for all v.
double log_marginal_v(double v, const ChannelParams& params);

// High-SNR reference (1/2) ln snr - 2 - (1/2) ln(8 pi), in nats.
double amp_asymptote(double snr);

// Monte Carlo average of log_aux_v(V | X_A) - log_marginal_v(V) over the
// true simulated channel.
RateEstimate estimate_amp_rate(const ChannelParams& params, const McOptions& opts);

}  // namespace wpn
