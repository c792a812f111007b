#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "wpn/amp_rate.hpp"
#include "wpn/channel.hpp"
#include "wpn/modulation.hpp"

namespace wpn {

// Differential-phase statistic for one symbol: the principal angle of
// Y~_k and the cosine of its error against the transmitted phase.
struct PhaseStatistic {
    double phi_tilde = 0.0;  // angle of Y~_k in [-pi, pi)
    double cos_err = 0.0;    // cos(phi_tilde - Phi_X), in [-1, 1]
};

// Concentration parameter policy for the Tikhonov auxiliary channel.
struct AlphaPolicy {
    enum class Mode { Paper, Auto, Fixed };
    Mode mode = Mode::Auto;
    double value = 0.0;  // used by Fixed

    static AlphaPolicy paper() { return {Mode::Paper, 0.0}; }
    static AlphaPolicy automatic() { return {Mode::Auto, 0.0}; }
    static AlphaPolicy fixed(double alpha) { return {Mode::Fixed, alpha}; }
};

// Y~_k = (first sample of block k / sqrt(delta)) * conj(last sample of block
// k-1 / (X_{k-1} delta)). Returns nullopt for the probability-zero event
// |Y~_k| = 0 (callers exclude and count such samples).
std::optional<PhaseStatistic> statistic_phase(std::complex<double> prev_block_last_sample,
                                              const InputSymbol& prev_symbol,
                                              std::complex<double> first_sample_of_block,
                                              double current_phase,
                                              const ChannelParams& params);

// Tikhonov (von Mises) log density alpha cos(phi_y - phi_x) - ln(2 pi I0(alpha)).
double tikhonov_logpdf(double phi_y, double phi_x, double alpha);

// Per-symbol auxiliary-channel bound -ln I0(alpha) + alpha * ecos, in nats.
double phase_rate_bound(double alpha, double ecos);

// Analytic bound (1/2) ln alpha - alpha sigma_w_sq/2 - 4 alpha / (SNR delta);
// requires SNR * delta > 2, otherwise throws NotApplicableError.
double analytic_phase_bound(const ChannelParams& params, double alpha);

// Analytic lower bound on E[cos(phi_tilde - Phi_X)]: 1 - sigma_w_sq/2 -
// 4/(SNR delta); same applicability condition as analytic_phase_bound.
double ecos_lower_bound(const ChannelParams& params);

// Paper mode: SNR * delta. Auto mode: golden-section maximizer of
// phase_rate_bound(alpha, ecos) over ln alpha in [ln 1e-3, ln 1e9].
double select_alpha(const AlphaPolicy& policy, const ChannelParams& params,
                    double ecos_estimate);

// High-SNR reference (1/4) ln snr + ln(1/beta) - pi/beta - 4, in nats.
double phase_asymptote(double snr, double beta);

struct PhaseRateEstimate {
    RateEstimate rate;                   // (n-1)/n scaled bound with stderr
    double ecos = 0.0;                   // pooled mean of cos_err
    double ecos_stderr = 0.0;            // across replicate means
    double alpha_used = 0.0;
    std::int64_t degenerate_dropped = 0; // |Y~| = 0 samples excluded
};

// Simulates the true channel, averages cos_err over k = 2..n, picks alpha
// per the policy, and reports the (n-1)/n scaled bound. The stderr follows
// the replicate spread of the bound at the selected alpha, which for this
// linear-in-ecos bound coincides with the delta-method propagation
// d(bound)/d(ecos) = alpha.
PhaseRateEstimate estimate_phase_rate(const ChannelParams& params,
                                      const McOptions& opts,
                                      const AlphaPolicy& policy);

}  // namespace wpn
