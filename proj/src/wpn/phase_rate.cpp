#include "wpn/phase_rate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wpn/errors.hpp"
#include "wpn/replicate_runner.hpp"
#include "wpn/special_functions.hpp"

namespace wpn {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_applicable(const ChannelParams& params, const char* who)
{
    if (!(params.snr_delta() > 2.0))
        throw NotApplicableError(std::string(who) + ": requires SNR * delta > 2");
}
}  // namespace

std::optional<PhaseStatistic> statistic_phase(std::complex<double> prev_block_last_sample,
                                              const InputSymbol& prev_symbol,
                                              std::complex<double> first_sample_of_block,
                                              double current_phase,
                                              const ChannelParams& params)
{
    if (!(prev_symbol.amplitude > 0.0))
        throw std::invalid_argument("statistic_phase: previous amplitude must be > 0");

    // e^{j Theta_hat} estimated from the last sample of the previous block.
    const std::complex<double> phase_estimate =
        prev_block_last_sample / (prev_symbol.value() * params.delta);
    const std::complex<double> y_tilde =
        (first_sample_of_block / std::sqrt(params.delta)) * std::conj(phase_estimate);

    const double magnitude = std::abs(y_tilde);
    if (magnitude == 0.0)
        return std::nullopt;

    PhaseStatistic stat;
    stat.phi_tilde = std::arg(y_tilde);
    if (stat.phi_tilde == kPi)
        stat.phi_tilde = -kPi;
    // Normalized real part instead of an angle difference: no branch cuts.
    const double cos_err =
        std::real(y_tilde * std::polar(1.0, -current_phase)) / magnitude;
    stat.cos_err = std::clamp(cos_err, -1.0, 1.0);
    return stat;
}

double tikhonov_logpdf(double phi_y, double phi_x, double alpha)
{
    return alpha * std::cos(phi_y - phi_x) - std::log(kTwoPi) - log_bessel_i0(alpha);
}

double phase_rate_bound(double alpha, double ecos)
{
    return -log_bessel_i0(alpha) + alpha * ecos;
}

double analytic_phase_bound(const ChannelParams& params, double alpha)
{
    require_applicable(params, "analytic_phase_bound");
    if (!(alpha > 0.0))
        throw std::invalid_argument("analytic_phase_bound: alpha must be > 0");
    return 0.5 * std::log(alpha) - alpha * 0.5 * params.sigma_w_sq -
           4.0 * alpha / params.snr_delta();
}

double ecos_lower_bound(const ChannelParams& params)
{
    require_applicable(params, "ecos_lower_bound");
    return 1.0 - 0.5 * params.sigma_w_sq - 4.0 / params.snr_delta();
}

double select_alpha(const AlphaPolicy& policy, const ChannelParams& params,
                    double ecos_estimate)
{
    switch (policy.mode) {
    case AlphaPolicy::Mode::Paper:
        return params.snr_delta();
    case AlphaPolicy::Mode::Fixed:
        if (!(policy.value > 0.0))
            throw std::invalid_argument("select_alpha: fixed alpha must be > 0");
        return policy.value;
    case AlphaPolicy::Mode::Auto:
        break;
    }

    // Golden-section maximization of the bound over ln alpha; the bound is
    // concave in alpha, so it is unimodal under the monotone reparametrization.
    const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = std::log(1e-3);
    double hi = std::log(1e9);
    double x1 = hi - inv_golden * (hi - lo);
    double x2 = lo + inv_golden * (hi - lo);
    double f1 = phase_rate_bound(std::exp(x1), ecos_estimate);
    double f2 = phase_rate_bound(std::exp(x2), ecos_estimate);
    while (hi - lo > 1e-6) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_golden * (hi - lo);
            f2 = phase_rate_bound(std::exp(x2), ecos_estimate);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_golden * (hi - lo);
            f1 = phase_rate_bound(std::exp(x1), ecos_estimate);
        }
    }
    return std::exp(0.5 * (lo + hi));
}

double phase_asymptote(double snr, double beta)
{
    if (!(snr > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("phase_asymptote: snr and beta must be > 0");
    return 0.25 * std::log(snr) + std::log(1.0 / beta) - kPi / beta - 4.0;
}

PhaseRateEstimate estimate_phase_rate(const ChannelParams& params,
                                      const McOptions& opts,
                                      const AlphaPolicy& policy)
{
    if (opts.n_symbols < 2)
        throw std::invalid_argument("estimate_phase_rate: need n_symbols >= 2");

    const auto slots = detail::run_replicates(params, opts, /*want_amp=*/false,
                                              /*want_phase=*/true);

    PhaseRateEstimate out;
    std::vector<double> cos_means;
    cos_means.reserve(slots.size());
    for (const auto& s : slots) {
        if (s.cos_count == 0)
            throw std::runtime_error("estimate_phase_rate: all phase samples degenerate");
        cos_means.push_back(s.cos_mean());
        out.degenerate_dropped += s.degenerate;
    }

    const auto ecos = detail::summarize(cos_means);
    out.ecos = ecos.mean;
    out.ecos_stderr = ecos.stderr;
    out.alpha_used = select_alpha(policy, params, out.ecos);

    // First symbol has no predecessor, hence the (n-1)/n factor.
    const double scale = static_cast<double>(opts.n_symbols - 1) /
                         static_cast<double>(opts.n_symbols);
    std::vector<double> bounds;
    bounds.reserve(cos_means.size());
    for (double cm : cos_means)
        bounds.push_back(scale * phase_rate_bound(out.alpha_used, cm));
    const auto agg = detail::summarize(bounds);

    out.rate.mean_nats = agg.mean;
    out.rate.stderr_nats = agg.stderr;
    out.rate.replicates = opts.replicates;
    out.rate.symbols_per_replicate = opts.n_symbols;
    return out;
}

}  // namespace wpn
