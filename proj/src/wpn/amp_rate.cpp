#include "wpn/amp_rate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wpn/replicate_runner.hpp"
#include "wpn/special_functions.hpp"

namespace wpn {

namespace {
constexpr double kPi = std::numbers::pi;
}

double statistic_v(std::span<const std::complex<double>> block)
{
    double v = 0.0;
    for (const auto& y : block)
        v += std::norm(y);
    return v;
}

double statistic_v(const OutputBlock& block)
{
    return statistic_v(std::span<const std::complex<double>>(block.samples));
}

double log_aux_v(double v, double x_a, const ChannelParams& params)
{
    const double s2 = params.noise_variance();
    const double variance = 2.0 * x_a * x_a * params.delta * params.delta * s2;
    if (!(variance > 0.0))
        throw std::domain_error("log_aux_v: degenerate auxiliary channel variance");
    const double mean = x_a * x_a * params.delta + s2;
    const double d = v - mean;
    return -0.5 * std::log(2.0 * kPi * variance) - d * d / (2.0 * variance);
}

// Q_V(v) = int_{P/2}^inf p_a(a) Normal(v; a delta + s2, 2 a delta^2 s2) da
// with p_a the shifted-exponential amplitude-squared density. Completing the
// square in 1/a gives an integral of the form int a^{-1/2} e^{-pa - q/a} da,
// which evaluates to erfc terms; everything is combined in the log domain via
// the scaled complementary error function so that huge exponents cancel
// analytically instead of numerically.
double log_marginal_v(double v, const ChannelParams& params)
{
    const double s2 = params.noise_variance();
    if (!(s2 > 0.0))
        throw std::domain_error("log_marginal_v: requires positive noise variance");
    const double power = params.power;
    const double delta = params.delta;

    const double t = 0.5 * power;  // support edge of the amplitude-squared law
    const double sig = std::sqrt(s2);
    const double c = v - s2;
    const double p = 1.0 / (4.0 * s2) + 2.0 / power;
    const double g = c / (2.0 * delta * sig * std::sqrt(t));  // signed; sqrt(q/t) = |g|
    const double h = std::sqrt(p * t);

    const double k0 = std::log(2.0 / power) + 1.0 -
                      0.5 * std::log(4.0 * kPi * delta * delta * s2) +
                      0.5 * std::log(kPi / (4.0 * p));
    // Shared exponent of both erfcx terms; the -1 is 2t/power exactly.
    const double gd = g - std::sqrt(t) / (2.0 * sig);
    const double e = -gd * gd - 1.0;

    const double hm = h - std::abs(g);
    const double hp = h + std::abs(g);

    double term_minus;
    if (hm >= 0.0) {
        term_minus = e + std::log(erfcx(hm));
    } else {
        // exponent c/(2 delta s2) - 2 sqrt(p q), written without cancellation
        double bracket;
        if (c > 0.0) {
            const double d8 = 8.0 * s2 / power;
            bracket = -std::abs(g) * (std::sqrt(t) / sig) * d8 / (1.0 + std::sqrt(1.0 + d8));
        } else {
            bracket = g * std::sqrt(t) / sig - 2.0 * h * std::abs(g);
        }
        term_minus = bracket + std::log(std::erfc(hm));  // erfc(hm) in (1, 2)
    }
    const double term_plus = e + std::log(erfcx(hp));

    return k0 + log_sum_exp(term_minus, term_plus);
}

double amp_asymptote(double snr)
{
    if (!(snr > 0.0))
        throw std::invalid_argument("amp_asymptote: snr must be > 0");
    return 0.5 * std::log(snr) - 2.0 - 0.5 * std::log(8.0 * kPi);
}

RateEstimate estimate_amp_rate(const ChannelParams& params, const McOptions& opts)
{
    if (!(params.noise_variance() > 0.0))
        throw std::domain_error(
            "estimate_amp_rate: zero-variance auxiliary channel (noise-off diagnostics "
            "cannot be rated)");

    const auto slots = detail::run_replicates(params, opts, /*want_amp=*/true,
                                              /*want_phase=*/false);
    std::vector<double> means;
    means.reserve(slots.size());
    for (const auto& s : slots)
        means.push_back(s.amp_mean());
    const auto agg = detail::summarize(means);

    RateEstimate est;
    est.mean_nats = agg.mean;
    est.stderr_nats = agg.stderr;
    est.replicates = opts.replicates;
    est.symbols_per_replicate = opts.n_symbols;
    return est;
}

}  // namespace wpn
