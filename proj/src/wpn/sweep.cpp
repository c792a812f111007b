#include "wpn/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wpn/replicate_runner.hpp"

namespace wpn {

namespace {

void validate_config(const SweepConfig& config)
{
    if (!(config.beta > 0.0))
        throw std::invalid_argument("sweep config: beta must be > 0");
    if (config.n_symbols < 2)
        throw std::invalid_argument("sweep config: n_symbols must be >= 2");
    if (config.replicates < 1)
        throw std::invalid_argument("sweep config: replicates must be >= 1");
    if (config.oversampling < 0)
        throw std::invalid_argument("sweep config: oversampling must be schedule or >= 1");
}

double field_value(const SweepPoint& p, RateField field)
{
    switch (field) {
    case RateField::Amp:
        return p.amp_rate.mean_nats;
    case RateField::Phase:
        return p.phase_rate.mean_nats;
    case RateField::Total:
        return p.total_rate_nats;
    }
    return 0.0;
}

}  // namespace

SweepPoint run_point(const SweepConfig& config, double snr_db, std::uint64_t point_index)
{
    validate_config(config);
    const ChannelParams params = make_params(config.beta, snr_db, config.oversampling);

    McOptions opts;
    opts.n_symbols = config.n_symbols;
    opts.replicates = config.replicates;
    opts.seed = config.seed;
    opts.point_index = point_index;
    opts.threads = config.threads;

    // One simulation pass feeds both estimators.
    const auto slots = detail::run_replicates(params, opts, /*want_amp=*/true,
                                              /*want_phase=*/true);

    SweepPoint point;
    point.snr_db = snr_db;
    point.snr = params.snr;
    point.oversampling = params.oversampling;
    point.delta = params.delta;

    std::vector<double> amp_means;
    std::vector<double> cos_means;
    amp_means.reserve(slots.size());
    cos_means.reserve(slots.size());
    for (const auto& s : slots) {
        amp_means.push_back(s.amp_mean());
        if (s.cos_count == 0)
            throw std::runtime_error("run_point: all phase samples degenerate");
        cos_means.push_back(s.cos_mean());
        point.degenerate_dropped += s.degenerate;
    }

    const auto amp = detail::summarize(amp_means);
    point.amp_rate.mean_nats = amp.mean;
    point.amp_rate.stderr_nats = amp.stderr;
    point.amp_rate.replicates = opts.replicates;
    point.amp_rate.symbols_per_replicate = opts.n_symbols;

    const auto ecos = detail::summarize(cos_means);
    point.ecos = ecos.mean;
    point.ecos_stderr = ecos.stderr;
    point.alpha_used = select_alpha(config.alpha, params, point.ecos);

    const double scale = static_cast<double>(opts.n_symbols - 1) /
                         static_cast<double>(opts.n_symbols);
    std::vector<double> bounds;
    bounds.reserve(cos_means.size());
    for (double cm : cos_means)
        bounds.push_back(scale * phase_rate_bound(point.alpha_used, cm));
    const auto phase = detail::summarize(bounds);
    point.phase_rate.mean_nats = phase.mean;
    point.phase_rate.stderr_nats = phase.stderr;
    point.phase_rate.replicates = opts.replicates;
    point.phase_rate.symbols_per_replicate = opts.n_symbols;

    point.total_rate_nats = point.amp_rate.mean_nats + point.phase_rate.mean_nats;

    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (params.snr_delta() > 2.0) {
        point.ecos_bound = ecos_lower_bound(params);
        point.phase_analytic = analytic_phase_bound(params, params.snr_delta());
    } else {
        point.ecos_bound = nan;
        point.phase_analytic = nan;
    }
    point.amp_asymptote = amp_asymptote(params.snr);
    point.amp_analytic = point.amp_asymptote;  // the paper's only amplitude reference
    point.phase_asymptote = phase_asymptote(params.snr, params.beta);
    return point;
}

std::vector<SweepPoint> run_sweep(const SweepConfig& config)
{
    validate_config(config);
    if (config.snr_db.empty())
        throw std::invalid_argument("run_sweep: need at least one SNR point");

    std::vector<double> grid = config.snr_db;
    std::sort(grid.begin(), grid.end());

    std::vector<SweepPoint> points;
    points.reserve(grid.size());
    std::string failures;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        try {
            points.push_back(run_point(config, grid[i], static_cast<std::uint64_t>(i)));
        } catch (const std::exception& e) {
            if (!failures.empty())
                failures += "; ";
            failures += "snr_db=" + std::to_string(grid[i]) + ": " + e.what();
        }
    }
    if (!failures.empty())
        throw std::runtime_error("run_sweep: point(s) failed: " + failures);
    return points;
}

SlopeFit fit_prelog(std::span<const SweepPoint> points, RateField field)
{
    const std::size_t n = points.size();
    if (n < 3)
        throw std::invalid_argument("fit_prelog: need at least 3 points");

    double x_mean = 0.0;
    double y_mean = 0.0;
    for (const auto& p : points) {
        x_mean += std::log(p.snr);
        y_mean += field_value(p, field);
    }
    x_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);

    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& p : points) {
        const double dx = std::log(p.snr) - x_mean;
        sxx += dx * dx;
        sxy += dx * (field_value(p, field) - y_mean);
    }
    if (!(sxx > 0.0))
        throw std::invalid_argument("fit_prelog: SNR points must not coincide");

    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = y_mean - fit.slope * x_mean;
    fit.points_used = static_cast<int>(n);

    double rss = 0.0;
    for (const auto& p : points) {
        const double r =
            field_value(p, field) - (fit.intercept + fit.slope * std::log(p.snr));
        rss += r * r;
    }
    fit.stderr_slope = std::sqrt(rss / static_cast<double>(n - 2) / sxx);
    return fit;
}

}  // namespace wpn
