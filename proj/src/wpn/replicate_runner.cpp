#include "wpn/replicate_runner.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "wpn/modulation.hpp"
#include "wpn/phase_rate.hpp"
#include "wpn/rng.hpp"

namespace wpn::detail {

namespace {

ReplicateStats run_one_replicate(const ChannelParams& params, int n_symbols,
                                 std::mt19937_64& rng, bool want_amp, bool want_phase)
{
    const int l = params.oversampling;
    const double delta = params.delta;
    const double sigma_w = std::sqrt(params.sigma_w_sq);
    const double component_sigma = std::sqrt(0.5 * params.noise_variance() * delta);

    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::normal_distribution<double> standard_normal(0.0, 1.0);

    ReplicateStats stats;
    InputSymbol prev_symbol;
    std::complex<double> prev_last{};
    double theta = angle(rng);  // Theta_1
    bool first_sample = true;

    for (int k = 0; k < n_symbols; ++k) {
        const InputSymbol symbol = sample_input(params, rng);
        const std::complex<double> scaled_input = symbol.value() * delta;

        double v = 0.0;
        std::complex<double> first{};
        std::complex<double> last{};
        for (int i = 0; i < l; ++i) {
            if (!first_sample)
                theta += sigma_w * standard_normal(rng);
            first_sample = false;
            const std::complex<double> y =
                scaled_input * std::polar(1.0, theta) +
                std::complex<double>(component_sigma * standard_normal(rng),
                                     component_sigma * standard_normal(rng));
            v += std::norm(y);
            if (i == 0)
                first = y;
            last = y;
        }

        if (want_amp) {
            stats.amp_sum += log_aux_v(v, symbol.amplitude, params) - log_marginal_v(v, params);
            ++stats.amp_count;
        }
        if (want_phase && k >= 1) {
            const auto stat =
                statistic_phase(prev_last, prev_symbol, first, symbol.phase, params);
            if (stat) {
                stats.cos_sum += stat->cos_err;
                ++stats.cos_count;
            } else {
                ++stats.degenerate;
            }
        }
        prev_symbol = symbol;
        prev_last = last;
    }
    return stats;
}

}  // namespace

std::vector<ReplicateStats> run_replicates(const ChannelParams& params,
                                           const McOptions& opts,
                                           bool want_amp, bool want_phase)
{
    if (opts.n_symbols < 1)
        throw std::invalid_argument("run_replicates: need n_symbols >= 1");
    if (want_phase && opts.n_symbols < 2)
        throw std::invalid_argument("run_replicates: phase statistic needs n_symbols >= 2");
    if (opts.replicates < 1)
        throw std::invalid_argument("run_replicates: need replicates >= 1");

    const int replicates = opts.replicates;
    int threads = opts.threads > 0 ? opts.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, replicates));

    std::vector<ReplicateStats> slots(replicates);
    std::vector<std::exception_ptr> errors(replicates);

    auto worker = [&](int tid) {
        for (int r = tid; r < replicates; r += threads) {
            try {
                auto rng = make_replicate_stream(opts.seed, opts.point_index,
                                                 static_cast<std::uint64_t>(r));
                slots[r] = run_one_replicate(params, opts.n_symbols, rng,
                                             want_amp, want_phase);
            } catch (...) {
                errors[r] = std::current_exception();
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker, t);
        for (auto& th : pool)
            th.join();
    }

    for (const auto& err : errors)
        if (err)
            std::rethrow_exception(err);
    return slots;
}

MeanStderr summarize(std::span<const double> replicate_means)
{
    MeanStderr out;
    const std::size_t n = replicate_means.size();
    if (n == 0)
        throw std::invalid_argument("summarize: no replicates");
    double acc = 0.0;
    for (double m : replicate_means)
        acc += m;
    out.mean = acc / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double m : replicate_means) {
            const double d = m - out.mean;
            ss += d * d;
        }
        out.stderr = std::sqrt(ss / static_cast<double>(n - 1)) /
                     std::sqrt(static_cast<double>(n));
    }
    return out;
}

}  // namespace wpn::detail
