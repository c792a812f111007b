#include "wpn/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wpn {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

ChannelParams make_params(double beta, double snr_db, int oversampling)
{
    if (!(beta > 0.0))
        throw std::invalid_argument("make_params: beta must be > 0");
    if (!std::isfinite(snr_db))
        throw std::invalid_argument("make_params: snr_db must be finite");
    if (oversampling < 0)
        throw std::invalid_argument("make_params: explicit L must be >= 1");

    ChannelParams p;
    p.beta = beta;
    p.snr = std::pow(10.0, snr_db / 10.0);
    p.sigma_n_sq = 1.0;
    p.power = p.snr;  // P = SNR * sigma_n_sq with sigma_n_sq = 1
    if (oversampling == kPaperSchedule) {
        const double l = std::ceil(beta * std::sqrt(p.snr));
        if (l > 1e9)
            throw std::invalid_argument("make_params: schedule oversampling too large");
        p.oversampling = static_cast<int>(l);
    } else {
        p.oversampling = oversampling;
    }
    if (p.oversampling < 1)
        throw std::invalid_argument("make_params: oversampling must be >= 1");
    p.delta = 1.0 / static_cast<double>(p.oversampling);
    p.sigma_w_sq = kTwoPi * beta * p.delta;
    return p;
}

double wrap_angle(double theta)
{
    double w = std::fmod(theta + kPi, kTwoPi);
    if (w < 0.0)
        w += kTwoPi;
    return w - kPi;
}

PhasePath sample_phase_path(const ChannelParams& params, int n_symbols,
                            std::mt19937_64& rng)
{
    if (n_symbols < 1)
        throw std::invalid_argument("sample_phase_path: need n_symbols >= 1");

    const std::size_t total =
        static_cast<std::size_t>(n_symbols) * static_cast<std::size_t>(params.oversampling);
    PhasePath path;
    path.theta.resize(total);

    std::uniform_real_distribution<double> uniform(-kPi, kPi);
    std::normal_distribution<double> standard_normal(0.0, 1.0);
    const double sigma_w = std::sqrt(params.sigma_w_sq);

    double theta = uniform(rng);
    path.theta[0] = theta;
    for (std::size_t k = 1; k < total; ++k) {
        theta += sigma_w * standard_normal(rng);
        path.theta[k] = theta;
    }
    return path;
}

std::vector<OutputBlock> simulate(const ChannelParams& params,
                                  std::span<const std::complex<double>> inputs,
                                  const PhasePath& path,
                                  std::mt19937_64& rng)
{
    const std::size_t l = static_cast<std::size_t>(params.oversampling);
    if (path.theta.size() != inputs.size() * l)
        throw std::invalid_argument("simulate: path length must equal inputs * L");

    std::normal_distribution<double> standard_normal(0.0, 1.0);
    // E|N|^2 = sigma_n_sq * delta, split evenly between the two components.
    const double component_sigma = std::sqrt(0.5 * params.noise_variance() * params.delta);

    std::vector<OutputBlock> blocks(inputs.size());
    std::size_t idx = 0;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        blocks[k].samples.resize(l);
        for (std::size_t i = 0; i < l; ++i, ++idx) {
            const std::complex<double> rotated =
                inputs[k] * params.delta * std::polar(1.0, path.theta[idx]);
            const std::complex<double> noise(component_sigma * standard_normal(rng),
                                             component_sigma * standard_normal(rng));
            blocks[k].samples[i] = rotated + noise;
        }
    }
    return blocks;
}

}  // namespace wpn
