#pragma once

#include <complex>
#include <random>
#include <span>
#include <vector>

namespace wpn {

// One operating point of the oversampled Wiener phase noise channel.
// sigma_n_sq is normalized to 1 and power equals the linear SNR; delta and
// sigma_w_sq are always derived from L and beta, never set independently.
struct ChannelParams {
    double beta = 1.0;        // phase-noise linewidth parameter (FWHM), > 0
    double snr = 1.0;         // linear SNR
    double power = 1.0;       // P, equal to snr under the sigma_n_sq = 1 normalization
    double sigma_n_sq = 1.0;  // additive-noise variance, fixed to 1
    int oversampling = 1;     // L, output samples per input symbol
    double delta = 1.0;       // 1 / L
    double sigma_w_sq = 0.0;  // per-sample phase increment variance 2 pi beta delta
    bool noise_off = false;   // diagnostic mode: additive noise exactly zero

    double noise_variance() const { return noise_off ? 0.0 : sigma_n_sq; }
    double snr_delta() const { return snr * delta; }
};

// oversampling = kPaperSchedule selects L = ceil(beta * sqrt(snr)).
inline constexpr int kPaperSchedule = 0;

ChannelParams make_params(double beta, double snr_db, int oversampling = kPaperSchedule);

// Unwrapped Wiener phase trajectory; one value per output sample.
struct PhasePath {
    std::vector<double> theta;
};

// The L output samples belonging to one input symbol.
struct OutputBlock {
    std::vector<std::complex<double>> samples;
};

// Theta_1 uniform on [-pi, pi), increments i.i.d. N(0, sigma_w_sq); the path
// is kept unwrapped (cumulative sum), n_symbols * L values.
PhasePath sample_phase_path(const ChannelParams& params, int n_symbols,
                            std::mt19937_64& rng);

// Y_k = X_{ceil(k/L)} * delta * e^{j Theta_k} + N_k with E|N_k|^2 =
// sigma_n_sq * delta (zero in noise_off mode). Throws if the path length does
// not equal inputs.size() * L.
std::vector<OutputBlock> simulate(const ChannelParams& params,
                                  std::span<const std::complex<double>> inputs,
                                  const PhasePath& path,
                                  std::mt19937_64& rng);

// Wrap an angle to [-pi, pi).
double wrap_angle(double theta);

}  // namespace wpn
