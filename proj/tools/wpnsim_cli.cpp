// Command-line front end: configuration, seeding, execution and CSV/JSON
// emission. All channel work happens behind the wpnsim C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wpnsim.h"

namespace {

struct ConfigHandle {
    wpn_config* ptr = wpn_config_new();
    ~ConfigHandle() { wpn_config_free(ptr); }
};

struct ResultHandle {
    wpn_result* ptr = nullptr;
    ~ResultHandle() { wpn_result_free(ptr); }
};

[[noreturn]] void fail_config(const std::string& message)
{
    std::cerr << "wpnsim: config error: " << message << "\n";
    std::exit(2);
}

void check(wpn_status status)
{
    if (status != WPN_OK)
        fail_config(std::string(wpn_status_name(status)) + ": " + wpn_last_error());
}

void apply_alpha(wpn_config* config, const std::string& spec)
{
    if (spec == "paper") {
        check(wpn_config_set_alpha(config, WPN_ALPHA_PAPER, 0.0));
    } else if (spec == "auto") {
        check(wpn_config_set_alpha(config, WPN_ALPHA_AUTO, 0.0));
    } else if (spec.rfind("fixed:", 0) == 0) {
        char* end = nullptr;
        const std::string value = spec.substr(6);
        const double alpha = std::strtod(value.c_str(), &end);
        if (!end || *end != '\0' || value.empty())
            fail_config("alpha: cannot parse fixed value '" + value + "'");
        check(wpn_config_set_alpha(config, WPN_ALPHA_FIXED, alpha));
    } else {
        fail_config("alpha must be paper, auto or fixed:<value> (got '" + spec + "')");
    }
}

void apply_oversampling(wpn_config* config, const std::string& spec)
{
    if (spec == "schedule") {
        check(wpn_config_set_oversampling(config, 0));
    } else if (spec.rfind("fixed:", 0) == 0) {
        char* end = nullptr;
        const std::string value = spec.substr(6);
        const long l = std::strtol(value.c_str(), &end, 10);
        if (!end || *end != '\0' || value.empty())
            fail_config("oversampling: cannot parse fixed L '" + value + "'");
        check(wpn_config_set_oversampling(config, static_cast<int32_t>(l)));
    } else {
        fail_config("oversampling must be schedule or fixed:<L> (got '" + spec + "')");
    }
}

void apply_units(wpn_config* config, const std::string& spec)
{
    if (spec == "nats")
        check(wpn_config_set_units(config, WPN_UNITS_NATS));
    else if (spec == "bits")
        check(wpn_config_set_units(config, WPN_UNITS_BITS));
    else
        fail_config("units must be nats or bits (got '" + spec + "')");
}

void apply_format(wpn_config* config, const std::string& spec)
{
    if (spec == "csv")
        check(wpn_config_set_format(config, WPN_FORMAT_CSV));
    else if (spec == "json")
        check(wpn_config_set_format(config, WPN_FORMAT_JSON));
    else
        fail_config("format must be csv or json (got '" + spec + "')");
}

// Loads a JSON config file. Accepts either a bare config object or a results
// file whose top-level "config" member holds one (so an emitted sidecar can
// be replayed directly). Unknown keys are rejected.
void apply_config_file(wpn_config* config, const std::string& path, std::string* out_path)
{
    std::ifstream in(path);
    if (!in)
        fail_config("cannot open config file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        fail_config("malformed config file '" + path + "': " + e.what());
    }
    if (!doc.is_object())
        fail_config("config file '" + path + "' must hold a JSON object");
    if (doc.contains("config") && doc["config"].is_object())
        doc = doc["config"];

    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "beta") {
                check(wpn_config_set_beta(config, value.get<double>()));
            } else if (key == "snr_db") {
                const auto list = value.get<std::vector<double>>();
                check(wpn_config_set_snr_db(config, list.data(), list.size()));
            } else if (key == "n_symbols") {
                check(wpn_config_set_symbols(config, value.get<int32_t>()));
            } else if (key == "replicates") {
                check(wpn_config_set_replicates(config, value.get<int32_t>()));
            } else if (key == "seed") {
                check(wpn_config_set_seed(config, value.get<std::uint64_t>()));
            } else if (key == "alpha") {
                apply_alpha(config, value.get<std::string>());
            } else if (key == "oversampling") {
                apply_oversampling(config, value.get<std::string>());
            } else if (key == "units") {
                apply_units(config, value.get<std::string>());
            } else if (key == "format") {
                apply_format(config, value.get<std::string>());
            } else if (key == "out") {
                *out_path = value.get<std::string>();
            } else {
                fail_config("unknown config key '" + key + "' in '" + path + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        fail_config("bad value in config file '" + path + "': " + e.what());
    }
}

std::string resolved_output_base(const std::string& out_path)
{
    std::filesystem::path p(out_path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("WPNSIM_OUT_DIR"); dir && *dir)
            p = std::filesystem::path(dir) / p;
    }
    return p.string();
}

std::string config_json_text(const wpn_config* config)
{
    size_t needed = 0;
    check(wpn_config_to_json(config, nullptr, 0, &needed));
    std::string text(needed, '\0');
    check(wpn_config_to_json(config, text.data(), text.size(), &needed));
    text.resize(needed - 1);  // drop the NUL
    return text;
}

void print_points(const wpn_result* result)
{
    const size_t n = wpn_result_point_count(result);
    std::printf("%8s %8s %10s %12s %12s %12s %10s\n", "snr_db", "L", "alpha",
                "amp[nats]", "phase[nats]", "total[nats]", "ecos");
    for (size_t i = 0; i < n; ++i) {
        wpn_point p{};
        check(wpn_result_point(result, i, &p));
        std::printf("%8.4g %8d %10.6g %12.6g %12.6g %12.6g %10.7g\n", p.snr_db,
                    p.oversampling, p.alpha, p.amp_rate, p.phase_rate, p.total_rate,
                    p.ecos);
    }
}

void print_fits(const wpn_result* result)
{
    static const char* names[] = {"amp", "phase", "total"};
    static const wpn_fit_field fields[] = {WPN_FIT_AMP, WPN_FIT_PHASE, WPN_FIT_TOTAL};
    for (int i = 0; i < 3; ++i) {
        wpn_fit fit{};
        if (wpn_result_fit(result, fields[i], &fit) == WPN_OK)
            std::printf("fit %-5s slope = %.4f +/- %.4f nats/ln-SNR (intercept %.4f, %d points)\n",
                        names[i], fit.slope, fit.stderr_slope, fit.intercept,
                        fit.points_used);
    }
}

int emit_files(const wpn_result* result, const wpn_config* config,
               const std::string& out_path)
{
    const std::string base = resolved_output_base(out_path);
    const std::string cfg = config_json_text(config);
    const bool json_format = cfg.find("\"format\": \"json\"") != std::string::npos;

    auto write = [&](wpn_status status, const std::string& path) {
        if (status != WPN_OK) {
            std::cerr << "wpnsim: write failed (" << wpn_status_name(status)
                      << "): " << wpn_last_error() << "\n";
            return false;
        }
        std::printf("wrote %s\n", path.c_str());
        return true;
    };

    if (json_format) {
        const std::string path = base + ".json";
        return write(wpn_result_write_json(result, path.c_str()), path) ? 0 : 1;
    }
    const std::string csv_path = base + ".csv";
    const std::string sidecar_path = base + ".json";
    if (!write(wpn_result_write_csv(result, csv_path.c_str()), csv_path))
        return 1;
    if (!write(wpn_result_write_summary_json(result, sidecar_path.c_str()), sidecar_path))
        return 1;
    return 0;
}

void report_line(const char* line, void*)
{
    std::printf("%s\n", line);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Monte Carlo rate bounds for the oversampled Wiener phase noise channel"};
    app.require_subcommand(1);

    ConfigHandle config;
    if (!config.ptr) {
        std::cerr << "wpnsim: out of memory\n";
        return 1;
    }

    std::string config_file;
    double beta = 1.0;
    std::vector<double> snr_db;
    double point_snr_db = 60.0;
    std::int32_t n_symbols = 2000;
    std::int32_t replicates = 8;
    std::uint64_t seed = 1;
    std::string alpha = "auto";
    std::string oversampling = "schedule";
    std::string units = "nats";
    std::string format = "csv";
    std::string out_path = "wpnsim_results";
    std::int32_t threads = 0;
    bool dry_run = false;

    auto add_common = [&](CLI::App* cmd, bool with_grid) {
        cmd->add_option("--config", config_file, "JSON config file (flags override it)");
        cmd->add_option("--beta", beta, "linewidth parameter beta > 0");
        if (with_grid)
            cmd->add_option("--snr-db", snr_db, "SNR grid in dB (comma separated)")
                ->delimiter(',');
        cmd->add_option("--symbols", n_symbols, "symbols per replicate (>= 2)");
        cmd->add_option("--replicates", replicates, "independent replicates (>= 1)");
        cmd->add_option("--seed", seed, "master seed (64-bit unsigned)");
        cmd->add_option("--alpha", alpha, "alpha policy: paper | auto | fixed:<value>");
        cmd->add_option("--oversampling", oversampling,
                        "oversampling rule: schedule | fixed:<L>");
        cmd->add_option("--units", units, "output units: nats | bits");
        cmd->add_option("--format", format, "output format: csv | json");
        cmd->add_option("--out", out_path,
                        "output base path (files get .csv/.json appended; "
                        "WPNSIM_OUT_DIR prefixes relative paths)");
        cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
        cmd->add_flag("--dry-run", dry_run, "print the resolved config and exit");
    };

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run the configured SNR sweep");
    add_common(sweep_cmd, true);

    CLI::App* point_cmd = app.add_subcommand("point", "run a single SNR point");
    add_common(point_cmd, false);
    point_cmd->add_option("snr_db", point_snr_db, "the SNR point in dB")->required();

    CLI::App* selfcheck_cmd =
        app.add_subcommand("selfcheck", "run the built-in validation battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (selfcheck_cmd->parsed()) {
        const int32_t failures = wpn_selfcheck(report_line, nullptr);
        if (failures < 0) {
            std::cerr << "wpnsim: selfcheck aborted: " << wpn_last_error() << "\n";
            return 1;
        }
        std::printf("%s (%d failure%s)\n", failures == 0 ? "selfcheck passed" : "selfcheck FAILED",
                    failures, failures == 1 ? "" : "s");
        return failures == 0 ? 0 : 1;
    }

    CLI::App* cmd = sweep_cmd->parsed() ? sweep_cmd : point_cmd;

    // Config file first, then flags that were actually given on top.
    if (cmd->count("--config"))
        apply_config_file(config.ptr, config_file, &out_path);
    if (cmd->count("--beta"))
        check(wpn_config_set_beta(config.ptr, beta));
    if (cmd == sweep_cmd && cmd->count("--snr-db")) {
        if (snr_db.empty())
            fail_config("snr_db list must be non-empty");
        check(wpn_config_set_snr_db(config.ptr, snr_db.data(), snr_db.size()));
    }
    if (cmd->count("--symbols"))
        check(wpn_config_set_symbols(config.ptr, n_symbols));
    if (cmd->count("--replicates"))
        check(wpn_config_set_replicates(config.ptr, replicates));
    if (cmd->count("--seed"))
        check(wpn_config_set_seed(config.ptr, seed));
    if (cmd->count("--alpha"))
        apply_alpha(config.ptr, alpha);
    if (cmd->count("--oversampling"))
        apply_oversampling(config.ptr, oversampling);
    if (cmd->count("--units"))
        apply_units(config.ptr, units);
    if (cmd->count("--format"))
        apply_format(config.ptr, format);
    if (cmd->count("--threads"))
        check(wpn_config_set_threads(config.ptr, threads));
    check(wpn_config_set_output(config.ptr, out_path.c_str()));

    if (dry_run) {
        std::printf("%s", config_json_text(config.ptr).c_str());
        return 0;
    }

    ResultHandle result;
    wpn_status status;
    if (point_cmd->parsed())
        status = wpn_run_point(config.ptr, point_snr_db, &result.ptr);
    else
        status = wpn_run_sweep(config.ptr, &result.ptr);
    if (status != WPN_OK) {
        std::cerr << "wpnsim: run failed (" << wpn_status_name(status)
                  << "): " << wpn_last_error() << "\n";
        return 1;
    }

    print_points(result.ptr);
    print_fits(result.ptr);

    if (sweep_cmd->parsed() || cmd->count("--out"))
        return emit_files(result.ptr, config.ptr, out_path);
    return 0;
}
