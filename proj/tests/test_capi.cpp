#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wpnsim.h"

namespace {

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("wpn_capi_" + name);
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Config {
    wpn_config* ptr = wpn_config_new();
    ~Config() { wpn_config_free(ptr); }
};

struct Result {
    wpn_result* ptr = nullptr;
    ~Result() { wpn_result_free(ptr); }
};

void configure_tiny(wpn_config* config, int threads)
{
    const double grid[] = {14.0, 20.0, 26.0};
    REQUIRE(wpn_config_set_snr_db(config, grid, 3) == WPN_OK);
    REQUIRE(wpn_config_set_symbols(config, 60) == WPN_OK);
    REQUIRE(wpn_config_set_replicates(config, 3) == WPN_OK);
    REQUIRE(wpn_config_set_seed(config, 99) == WPN_OK);
    REQUIRE(wpn_config_set_oversampling(config, 5) == WPN_OK);
    REQUIRE(wpn_config_set_alpha(config, WPN_ALPHA_PAPER, 0.0) == WPN_OK);
    REQUIRE(wpn_config_set_threads(config, threads) == WPN_OK);
}

}  // namespace

TEST_CASE("version and status strings")
{
    CHECK(wpn_version() != nullptr);
    CHECK(std::strlen(wpn_version()) > 0);
    CHECK(std::string(wpn_status_name(WPN_OK)) == "ok");
    CHECK(std::string(wpn_status_name(WPN_ERR_DOMAIN)) == "not applicable");
}

TEST_CASE("config setters validate their inputs")
{
    Config config;
    REQUIRE(config.ptr != nullptr);
    CHECK(wpn_config_set_beta(config.ptr, 2.0) == WPN_OK);
    CHECK(wpn_config_set_beta(config.ptr, 0.0) == WPN_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(wpn_last_error()) > 0);
    CHECK(wpn_config_set_beta(nullptr, 1.0) == WPN_ERR_INVALID_ARGUMENT);
    CHECK(wpn_config_set_symbols(config.ptr, 1) == WPN_ERR_INVALID_ARGUMENT);
    CHECK(wpn_config_set_replicates(config.ptr, 0) == WPN_ERR_INVALID_ARGUMENT);
    CHECK(wpn_config_set_snr_db(config.ptr, nullptr, 0) == WPN_ERR_INVALID_ARGUMENT);
    CHECK(wpn_config_set_alpha(config.ptr, WPN_ALPHA_FIXED, -1.0) ==
          WPN_ERR_INVALID_ARGUMENT);
    CHECK(wpn_config_set_oversampling(config.ptr, -2) == WPN_ERR_INVALID_ARGUMENT);
    CHECK(wpn_config_set_output(config.ptr, "") == WPN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("config json reflects the resolved configuration")
{
    Config config;
    configure_tiny(config.ptr, 1);
    size_t needed = 0;
    REQUIRE(wpn_config_to_json(config.ptr, nullptr, 0, &needed) == WPN_OK);
    std::string text(needed, '\0');
    REQUIRE(wpn_config_to_json(config.ptr, text.data(), text.size(), &needed) == WPN_OK);
    CHECK(text.find("\"seed\": 99") != std::string::npos);
    CHECK(text.find("\"oversampling\": \"fixed:5\"") != std::string::npos);
    CHECK(text.find("\"alpha\": \"paper\"") != std::string::npos);
    // thread count stays out of the resolved record
    CHECK(text.find("threads") == std::string::npos);
}

TEST_CASE("sweep through the C API with file emission")
{
    Config config;
    configure_tiny(config.ptr, 2);
    Result result;
    REQUIRE(wpn_run_sweep(config.ptr, &result.ptr) == WPN_OK);
    REQUIRE(result.ptr != nullptr);
    REQUIRE(wpn_result_point_count(result.ptr) == 3);

    wpn_point point{};
    REQUIRE(wpn_result_point(result.ptr, 0, &point) == WPN_OK);
    CHECK(point.snr_db == 14.0);
    CHECK(point.oversampling == 5);
    CHECK(point.total_rate == point.amp_rate + point.phase_rate);
    CHECK(point.n_symbols == 60);
    CHECK(point.replicates == 3);
    CHECK(wpn_result_point(result.ptr, 17, &point) == WPN_ERR_INVALID_ARGUMENT);

    wpn_fit fit{};
    REQUIRE(wpn_result_fit(result.ptr, WPN_FIT_TOTAL, &fit) == WPN_OK);
    CHECK(fit.points_used == 3);
    CHECK(std::isfinite(fit.slope));

    const auto csv1 = temp_file("sweep1.csv");
    const auto csv2 = temp_file("sweep2.csv");
    const auto json_path = temp_file("sweep.json");
    const auto summary_path = temp_file("sweep_summary.json");
    REQUIRE(wpn_result_write_csv(result.ptr, csv1.string().c_str()) == WPN_OK);
    REQUIRE(wpn_result_write_csv(result.ptr, csv2.string().c_str()) == WPN_OK);
    REQUIRE(wpn_result_write_json(result.ptr, json_path.string().c_str()) == WPN_OK);
    REQUIRE(wpn_result_write_summary_json(result.ptr, summary_path.string().c_str()) ==
            WPN_OK);
    CHECK(slurp(csv1) == slurp(csv2));
    CHECK(slurp(json_path).find("\"points\"") != std::string::npos);
    CHECK(slurp(summary_path).find("\"fits\"") != std::string::npos);
    for (const auto& p : {csv1, csv2, json_path, summary_path})
        std::filesystem::remove(p);

    CHECK(wpn_result_write_csv(result.ptr, "/nonexistent-dir-zzz/a.csv") == WPN_ERR_IO);
}

TEST_CASE("identical configs give identical results across thread counts")
{
    Config serial;
    configure_tiny(serial.ptr, 1);
    Config threaded;
    configure_tiny(threaded.ptr, 2);

    Result a, b;
    REQUIRE(wpn_run_sweep(serial.ptr, &a.ptr) == WPN_OK);
    REQUIRE(wpn_run_sweep(threaded.ptr, &b.ptr) == WPN_OK);
    for (size_t i = 0; i < 3; ++i) {
        wpn_point pa{}, pb{};
        REQUIRE(wpn_result_point(a.ptr, i, &pa) == WPN_OK);
        REQUIRE(wpn_result_point(b.ptr, i, &pb) == WPN_OK);
        CHECK(std::memcmp(&pa, &pb, sizeof(wpn_point)) == 0);
    }
}

TEST_CASE("single-point run has no fits")
{
    Config config;
    configure_tiny(config.ptr, 1);
    Result result;
    REQUIRE(wpn_run_point(config.ptr, 20.0, &result.ptr) == WPN_OK);
    CHECK(wpn_result_point_count(result.ptr) == 1);
    wpn_fit fit{};
    CHECK(wpn_result_fit(result.ptr, WPN_FIT_AMP, &fit) == WPN_ERR_STATE);
}

TEST_CASE("scalar helpers mirror the core functions")
{
    CHECK(wpn_log_bessel_i0(1.0) == doctest::Approx(0.23591435850717865).epsilon(1e-12));
    CHECK(wpn_amp_asymptote(1.0) == doctest::Approx(-3.612085713764618).epsilon(1e-12));
    CHECK(wpn_phase_asymptote(1e6, 1.0) ==
          doctest::Approx(-3.687715014098725).epsilon(1e-10));
    CHECK(wpn_tikhonov_logpdf(0.0, 0.0, 0.0) ==
          doctest::Approx(std::log(1.0 / (2.0 * 3.14159265358979324))).epsilon(1e-12));

    double value = 0.0;
    REQUIRE(wpn_analytic_phase_bound(1.0, 60.0, 0, 1000.0, &value) == WPN_OK);
    CHECK(value == doctest::Approx(-3.687715014098725).epsilon(1e-10));
    REQUIRE(wpn_ecos_lower_bound(1.0, 60.0, 0, &value) == WPN_OK);
    CHECK(value == doctest::Approx(0.9928584073464102).epsilon(1e-12));

    // SNR * delta = 1.25 <= 2: domain error with message
    CHECK(wpn_ecos_lower_bound(1.0, 0.97, 1, &value) == WPN_ERR_DOMAIN);
    CHECK(std::strlen(wpn_last_error()) > 0);
}

TEST_CASE("selfcheck reports and passes")
{
    std::vector<std::string> lines;
    const int32_t failures = wpn_selfcheck(
        [](const char* line, void* user) {
            static_cast<std::vector<std::string>*>(user)->emplace_back(line);
        },
        &lines);
    CHECK(failures == 0);
    CHECK(lines.size() >= 8);
    for (const auto& line : lines)
        CHECK(line.rfind("PASS", 0) == 0);
}
