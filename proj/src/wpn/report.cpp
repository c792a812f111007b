#include "wpn/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace wpn {

namespace {

const double kLn2 = std::numbers::ln2;

double to_units(double nats, Units units)
{
    return units == Units::Bits ? nats / kLn2 : nats;
}

std::string alpha_to_string(const AlphaPolicy& policy)
{
    switch (policy.mode) {
    case AlphaPolicy::Mode::Paper:
        return "paper";
    case AlphaPolicy::Mode::Auto:
        return "auto";
    case AlphaPolicy::Mode::Fixed:
        return "fixed:" + format_g12(policy.value);
    }
    return "auto";
}

nlohmann::ordered_json fit_to_json(const std::optional<SlopeFit>& fit, Units units)
{
    if (!fit)
        return nullptr;
    nlohmann::ordered_json j;
    j["slope"] = to_units(fit->slope, units);
    j["intercept"] = to_units(fit->intercept, units);
    j["stderr_slope"] = to_units(fit->stderr_slope, units);
    j["points_used"] = fit->points_used;
    return j;
}

nlohmann::ordered_json point_to_json(const SweepPoint& p, Units units)
{
    const bool bits = units == Units::Bits;
    const std::string suffix = bits ? "_bits" : "";
    nlohmann::ordered_json j;
    j["snr_db"] = p.snr_db;
    j["snr"] = p.snr;
    j["L"] = p.oversampling;
    j["delta"] = p.delta;
    j["alpha"] = p.alpha_used;
    j["amp_rate" + suffix] = to_units(p.amp_rate.mean_nats, units);
    j["amp_stderr" + suffix] = to_units(p.amp_rate.stderr_nats, units);
    j["phase_rate" + suffix] = to_units(p.phase_rate.mean_nats, units);
    j["phase_stderr" + suffix] = to_units(p.phase_rate.stderr_nats, units);
    j["total_rate" + suffix] = to_units(p.total_rate_nats, units);
    j["ecos"] = p.ecos;
    j["ecos_stderr"] = p.ecos_stderr;
    j["ecos_bound"] = p.ecos_bound;  // NaN serializes as null
    j["amp_analytic" + suffix] = to_units(p.amp_analytic, units);
    j["phase_analytic" + suffix] = to_units(p.phase_analytic, units);
    j["amp_asymptote" + suffix] = to_units(p.amp_asymptote, units);
    j["phase_asymptote" + suffix] = to_units(p.phase_asymptote, units);
    j["replicates"] = p.amp_rate.replicates;
    j["n_symbols"] = p.amp_rate.symbols_per_replicate;
    j["degenerate_dropped"] = p.degenerate_dropped;
    return j;
}

std::ofstream open_for_write(const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

}  // namespace

RunRecord make_run_record(const SweepConfig& config, const OutputOptions& output,
                          std::vector<SweepPoint> points)
{
    RunRecord record;
    record.config = config;
    record.output = output;
    record.points = std::move(points);
    if (record.points.size() >= 3) {
        record.fits.amp = fit_prelog(record.points, RateField::Amp);
        record.fits.phase = fit_prelog(record.points, RateField::Phase);
        record.fits.total = fit_prelog(record.points, RateField::Total);
    }
    return record;
}

std::string format_g12(double value)
{
    if (std::isnan(value))
        return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

nlohmann::ordered_json config_to_json(const SweepConfig& config,
                                      const OutputOptions& output)
{
    nlohmann::ordered_json j;
    j["beta"] = config.beta;
    j["snr_db"] = config.snr_db;
    j["n_symbols"] = config.n_symbols;
    j["replicates"] = config.replicates;
    j["seed"] = config.seed;
    j["alpha"] = alpha_to_string(config.alpha);
    j["oversampling"] = config.oversampling == kPaperSchedule
                            ? std::string("schedule")
                            : "fixed:" + std::to_string(config.oversampling);
    j["units"] = output.units == Units::Bits ? "bits" : "nats";
    j["format"] = output.format == Format::Json ? "json" : "csv";
    j["out"] = output.out_path;
    return j;
}

void write_csv(const RunRecord& record, const std::string& path)
{
    auto out = open_for_write(path);
    const Units units = record.output.units;
    const std::string s = units == Units::Bits ? "_bits" : "";

    out << "snr_db,snr,L,delta,alpha,"
        << "amp_rate" << s << ",amp_stderr" << s << ","
        << "phase_rate" << s << ",phase_stderr" << s << ","
        << "total_rate" << s << ",ecos,ecos_bound,"
        << "amp_analytic" << s << ",phase_analytic" << s << ","
        << "amp_asymptote" << s << ",phase_asymptote" << s << "\n";

    for (const auto& p : record.points) {
        out << format_g12(p.snr_db) << ',' << format_g12(p.snr) << ','
            << p.oversampling << ',' << format_g12(p.delta) << ','
            << format_g12(p.alpha_used) << ','
            << format_g12(to_units(p.amp_rate.mean_nats, units)) << ','
            << format_g12(to_units(p.amp_rate.stderr_nats, units)) << ','
            << format_g12(to_units(p.phase_rate.mean_nats, units)) << ','
            << format_g12(to_units(p.phase_rate.stderr_nats, units)) << ','
            << format_g12(to_units(p.total_rate_nats, units)) << ','
            << format_g12(p.ecos) << ',' << format_g12(p.ecos_bound) << ','
            << format_g12(to_units(p.amp_analytic, units)) << ','
            << format_g12(to_units(p.phase_analytic, units)) << ','
            << format_g12(to_units(p.amp_asymptote, units)) << ','
            << format_g12(to_units(p.phase_asymptote, units)) << "\n";
    }
    if (!out)
        throw std::runtime_error("failed while writing '" + path + "'");
}

void write_json(const RunRecord& record, const std::string& path)
{
    nlohmann::ordered_json j;
    j["config"] = config_to_json(record.config, record.output);
    nlohmann::ordered_json fits;
    fits["units"] = record.output.units == Units::Bits ? "bits" : "nats";
    fits["amp"] = fit_to_json(record.fits.amp, record.output.units);
    fits["phase"] = fit_to_json(record.fits.phase, record.output.units);
    fits["total"] = fit_to_json(record.fits.total, record.output.units);
    j["fits"] = fits;
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& p : record.points)
        points.push_back(point_to_json(p, record.output.units));
    j["points"] = points;

    auto out = open_for_write(path);
    out << j.dump(2) << "\n";
    if (!out)
        throw std::runtime_error("failed while writing '" + path + "'");
}

void write_summary_json(const RunRecord& record, const std::string& path)
{
    nlohmann::ordered_json j;
    j["config"] = config_to_json(record.config, record.output);
    nlohmann::ordered_json fits;
    fits["units"] = record.output.units == Units::Bits ? "bits" : "nats";
    fits["amp"] = fit_to_json(record.fits.amp, record.output.units);
    fits["phase"] = fit_to_json(record.fits.phase, record.output.units);
    fits["total"] = fit_to_json(record.fits.total, record.output.units);
    j["fits"] = fits;

    auto out = open_for_write(path);
    out << j.dump(2) << "\n";
    if (!out)
        throw std::runtime_error("failed while writing '" + path + "'");
}

}  // namespace wpn
