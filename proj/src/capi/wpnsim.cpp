#include "wpnsim.h"

#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "wpn/errors.hpp"
#include "wpn/report.hpp"
#include "wpn/selfcheck.hpp"
#include "wpn/special_functions.hpp"
#include "wpn/sweep.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message)
{
    g_last_error = message;
}

wpn_status translate_exception()
{
    try {
        throw;
    } catch (const wpn::NotApplicableError& e) {
        set_error(e.what());
        return WPN_ERR_DOMAIN;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return WPN_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return WPN_ERR_INVALID_ARGUMENT;
    } catch (const std::ios_base::failure& e) {
        set_error(e.what());
        return WPN_ERR_IO;
    } catch (const std::exception& e) {
        set_error(e.what());
        return WPN_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return WPN_ERR_INTERNAL;
    }
}

wpn_status io_translate_exception()
{
    const wpn_status st = translate_exception();
    return st == WPN_ERR_INTERNAL ? WPN_ERR_IO : st;
}

wpn_status invalid(const char* message)
{
    set_error(message);
    return WPN_ERR_INVALID_ARGUMENT;
}

}  // namespace

struct wpn_config {
    wpn::SweepConfig sweep;
    wpn::OutputOptions output;
};

struct wpn_result {
    wpn::RunRecord record;
};

extern "C" {

const char* wpn_version(void)
{
    return "1.0.0";
}

const char* wpn_status_name(wpn_status status)
{
    switch (status) {
    case WPN_OK:
        return "ok";
    case WPN_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case WPN_ERR_DOMAIN:
        return "not applicable";
    case WPN_ERR_STATE:
        return "invalid state";
    case WPN_ERR_IO:
        return "i/o error";
    case WPN_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* wpn_last_error(void)
{
    return g_last_error.c_str();
}

wpn_config* wpn_config_new(void)
{
    try {
        return new wpn_config();
    } catch (...) {
        return nullptr;
    }
}

void wpn_config_free(wpn_config* config)
{
    delete config;
}

wpn_status wpn_config_set_beta(wpn_config* config, double beta)
{
    if (!config)
        return invalid("config is null");
    if (!(beta > 0.0))
        return invalid("beta must be > 0");
    config->sweep.beta = beta;
    return WPN_OK;
}

wpn_status wpn_config_set_snr_db(wpn_config* config, const double* snr_db, size_t count)
{
    if (!config || !snr_db)
        return invalid("config/snr_db is null");
    if (count == 0)
        return invalid("snr_db list must be non-empty");
    config->sweep.snr_db.assign(snr_db, snr_db + count);
    return WPN_OK;
}

wpn_status wpn_config_set_symbols(wpn_config* config, int32_t n_symbols)
{
    if (!config)
        return invalid("config is null");
    if (n_symbols < 2)
        return invalid("n_symbols must be >= 2");
    config->sweep.n_symbols = n_symbols;
    return WPN_OK;
}

wpn_status wpn_config_set_replicates(wpn_config* config, int32_t replicates)
{
    if (!config)
        return invalid("config is null");
    if (replicates < 1)
        return invalid("replicates must be >= 1");
    config->sweep.replicates = replicates;
    return WPN_OK;
}

wpn_status wpn_config_set_seed(wpn_config* config, uint64_t seed)
{
    if (!config)
        return invalid("config is null");
    config->sweep.seed = seed;
    return WPN_OK;
}

wpn_status wpn_config_set_alpha(wpn_config* config, wpn_alpha_mode mode, double fixed_value)
{
    if (!config)
        return invalid("config is null");
    switch (mode) {
    case WPN_ALPHA_PAPER:
        config->sweep.alpha = wpn::AlphaPolicy::paper();
        return WPN_OK;
    case WPN_ALPHA_AUTO:
        config->sweep.alpha = wpn::AlphaPolicy::automatic();
        return WPN_OK;
    case WPN_ALPHA_FIXED:
        if (!(fixed_value > 0.0))
            return invalid("fixed alpha must be > 0");
        config->sweep.alpha = wpn::AlphaPolicy::fixed(fixed_value);
        return WPN_OK;
    }
    return invalid("unknown alpha mode");
}

wpn_status wpn_config_set_oversampling(wpn_config* config, int32_t oversampling)
{
    if (!config)
        return invalid("config is null");
    if (oversampling < 0)
        return invalid("oversampling must be 0 (schedule) or >= 1");
    config->sweep.oversampling = oversampling;
    return WPN_OK;
}

wpn_status wpn_config_set_units(wpn_config* config, wpn_units units)
{
    if (!config)
        return invalid("config is null");
    if (units != WPN_UNITS_NATS && units != WPN_UNITS_BITS)
        return invalid("unknown units");
    config->output.units = units == WPN_UNITS_BITS ? wpn::Units::Bits : wpn::Units::Nats;
    return WPN_OK;
}

wpn_status wpn_config_set_format(wpn_config* config, wpn_format format)
{
    if (!config)
        return invalid("config is null");
    if (format != WPN_FORMAT_CSV && format != WPN_FORMAT_JSON)
        return invalid("unknown format");
    config->output.format = format == WPN_FORMAT_JSON ? wpn::Format::Json : wpn::Format::Csv;
    return WPN_OK;
}

wpn_status wpn_config_set_output(wpn_config* config, const char* path)
{
    if (!config || !path)
        return invalid("config/path is null");
    if (path[0] == '\0')
        return invalid("output path must be non-empty");
    config->output.out_path = path;
    return WPN_OK;
}

wpn_status wpn_config_set_threads(wpn_config* config, int32_t threads)
{
    if (!config)
        return invalid("config is null");
    if (threads < 0)
        return invalid("threads must be >= 0");
    config->sweep.threads = threads;
    return WPN_OK;
}

wpn_status wpn_config_to_json(const wpn_config* config, char* buf, size_t cap,
                              size_t* needed)
{
    if (!config || !needed)
        return invalid("config/needed is null");
    try {
        const std::string text =
            wpn::config_to_json(config->sweep, config->output).dump(2) + "\n";
        *needed = text.size() + 1;
        if (!buf)
            return WPN_OK;
        if (cap < *needed)
            return invalid("buffer too small");
        std::memcpy(buf, text.c_str(), *needed);
        return WPN_OK;
    } catch (...) {
        return translate_exception();
    }
}

wpn_status wpn_run_sweep(const wpn_config* config, wpn_result** out)
{
    if (!config || !out)
        return invalid("config/out is null");
    *out = nullptr;
    try {
        auto points = wpn::run_sweep(config->sweep);
        auto result = new wpn_result{
            wpn::make_run_record(config->sweep, config->output, std::move(points))};
        *out = result;
        return WPN_OK;
    } catch (...) {
        return translate_exception();
    }
}

wpn_status wpn_run_point(const wpn_config* config, double snr_db, wpn_result** out)
{
    if (!config || !out)
        return invalid("config/out is null");
    *out = nullptr;
    try {
        std::vector<wpn::SweepPoint> points;
        points.push_back(wpn::run_point(config->sweep, snr_db));
        auto result = new wpn_result{
            wpn::make_run_record(config->sweep, config->output, std::move(points))};
        *out = result;
        return WPN_OK;
    } catch (...) {
        return translate_exception();
    }
}

void wpn_result_free(wpn_result* result)
{
    delete result;
}

size_t wpn_result_point_count(const wpn_result* result)
{
    return result ? result->record.points.size() : 0;
}

wpn_status wpn_result_point(const wpn_result* result, size_t index, wpn_point* out)
{
    if (!result || !out)
        return invalid("result/out is null");
    if (index >= result->record.points.size())
        return invalid("point index out of range");
    const wpn::SweepPoint& p = result->record.points[index];
    *out = wpn_point{};
    out->snr_db = p.snr_db;
    out->snr = p.snr;
    out->oversampling = p.oversampling;
    out->delta = p.delta;
    out->alpha = p.alpha_used;
    out->amp_rate = p.amp_rate.mean_nats;
    out->amp_stderr = p.amp_rate.stderr_nats;
    out->phase_rate = p.phase_rate.mean_nats;
    out->phase_stderr = p.phase_rate.stderr_nats;
    out->total_rate = p.total_rate_nats;
    out->ecos = p.ecos;
    out->ecos_stderr = p.ecos_stderr;
    out->ecos_bound = p.ecos_bound;
    out->amp_analytic = p.amp_analytic;
    out->phase_analytic = p.phase_analytic;
    out->amp_asymptote = p.amp_asymptote;
    out->phase_asymptote = p.phase_asymptote;
    out->replicates = p.amp_rate.replicates;
    out->n_symbols = p.amp_rate.symbols_per_replicate;
    return WPN_OK;
}

wpn_status wpn_result_fit(const wpn_result* result, wpn_fit_field field, wpn_fit* out)
{
    if (!result || !out)
        return invalid("result/out is null");
    const std::optional<wpn::SlopeFit>* fit = nullptr;
    switch (field) {
    case WPN_FIT_AMP:
        fit = &result->record.fits.amp;
        break;
    case WPN_FIT_PHASE:
        fit = &result->record.fits.phase;
        break;
    case WPN_FIT_TOTAL:
        fit = &result->record.fits.total;
        break;
    default:
        return invalid("unknown fit field");
    }
    if (!fit->has_value()) {
        set_error("fit unavailable: sweep has fewer than 3 points");
        return WPN_ERR_STATE;
    }
    out->slope = (*fit)->slope;
    out->intercept = (*fit)->intercept;
    out->stderr_slope = (*fit)->stderr_slope;
    out->points_used = (*fit)->points_used;
    return WPN_OK;
}

wpn_status wpn_result_write_csv(const wpn_result* result, const char* path)
{
    if (!result || !path)
        return invalid("result/path is null");
    try {
        wpn::write_csv(result->record, path);
        return WPN_OK;
    } catch (...) {
        return io_translate_exception();
    }
}

wpn_status wpn_result_write_json(const wpn_result* result, const char* path)
{
    if (!result || !path)
        return invalid("result/path is null");
    try {
        wpn::write_json(result->record, path);
        return WPN_OK;
    } catch (...) {
        return io_translate_exception();
    }
}

wpn_status wpn_result_write_summary_json(const wpn_result* result, const char* path)
{
    if (!result || !path)
        return invalid("result/path is null");
    try {
        wpn::write_summary_json(result->record, path);
        return WPN_OK;
    } catch (...) {
        return io_translate_exception();
    }
}

double wpn_log_bessel_i0(double alpha)
{
    return wpn::log_bessel_i0(alpha);
}

double wpn_tikhonov_logpdf(double phi_y, double phi_x, double alpha)
{
    return wpn::tikhonov_logpdf(phi_y, phi_x, alpha);
}

double wpn_amp_asymptote(double snr)
{
    return wpn::amp_asymptote(snr);
}

double wpn_phase_asymptote(double snr, double beta)
{
    return wpn::phase_asymptote(snr, beta);
}

wpn_status wpn_analytic_phase_bound(double beta, double snr_db, int32_t oversampling,
                                    double alpha, double* out)
{
    if (!out)
        return invalid("out is null");
    try {
        const wpn::ChannelParams params = wpn::make_params(beta, snr_db, oversampling);
        *out = wpn::analytic_phase_bound(params, alpha);
        return WPN_OK;
    } catch (...) {
        return translate_exception();
    }
}

wpn_status wpn_ecos_lower_bound(double beta, double snr_db, int32_t oversampling,
                                double* out)
{
    if (!out)
        return invalid("out is null");
    try {
        const wpn::ChannelParams params = wpn::make_params(beta, snr_db, oversampling);
        *out = wpn::ecos_lower_bound(params);
        return WPN_OK;
    } catch (...) {
        return translate_exception();
    }
}

int32_t wpn_selfcheck(wpn_report_fn report, void* user)
{
    try {
        return wpn::selfcheck([&](const std::string& line) {
            if (report)
                report(line.c_str(), user);
        });
    } catch (...) {
        translate_exception();
        return -1;
    }
}

}  // extern "C"
