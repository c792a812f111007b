// Drives the installed CLI binary end to end through a shell.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

fs::path work_dir()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "wpnsim_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "")
{
    const fs::path log = work_dir() / "last_output.txt";
    std::ostringstream cmd;
    cmd << env_prefix << " \"" << WPNSIM_CLI_PATH << "\" " << args << " > \""
        << log.string() << "\" 2>&1";
    const int status = std::system(cmd.str().c_str());

    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(log);
    std::ostringstream os;
    os << in.rdbuf();
    result.output = os.str();
    return result;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const std::string kTinyArgs =
    "--snr-db 14,20,26 --symbols 50 --replicates 2 --oversampling fixed:5 "
    "--seed 31 --alpha paper";

}  // namespace

TEST_CASE("dry run prints the resolved config")
{
    const auto r = run_cli("sweep --beta 1 --snr-db 40,50,60,70,80 --seed 7 --dry-run");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"seed\": 7") != std::string::npos);
    CHECK(r.output.find("\"n_symbols\": 2000") != std::string::npos);   // default
    CHECK(r.output.find("\"replicates\": 8") != std::string::npos);     // default
    CHECK(r.output.find("\"alpha\": \"auto\"") != std::string::npos);   // default
}

TEST_CASE("flag validation failures exit with a distinct code and message")
{
    const auto beta = run_cli("sweep --beta 0 --dry-run");
    CHECK(beta.exit_code == 2);
    CHECK(beta.output.find("beta") != std::string::npos);

    const auto alpha = run_cli("sweep --alpha sometimes --dry-run");
    CHECK(alpha.exit_code == 2);
    CHECK(alpha.output.find("alpha") != std::string::npos);

    const auto unknown_flag = run_cli("sweep --no-such-flag 3");
    CHECK(unknown_flag.exit_code == 2);
}

TEST_CASE("alpha fixed:value parses")
{
    const auto r = run_cli("sweep --alpha fixed:12.5 --dry-run");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"alpha\": \"fixed:12.5\"") != std::string::npos);
}

TEST_CASE("config file round trip, overrides, and rejection of unknown keys")
{
    const fs::path cfg = work_dir() / "roundtrip.json";
    {
        const auto r = run_cli("sweep --beta 2 --snr-db 30,40 --symbols 64 --seed 5 "
                               "--units bits --dry-run");
        REQUIRE(r.exit_code == 0);
        std::ofstream out(cfg, std::ios::binary);
        out << r.output;
    }
    const auto replay = run_cli("sweep --config \"" + cfg.string() + "\" --dry-run");
    CHECK(replay.exit_code == 0);
    CHECK(replay.output == slurp(cfg));

    // flags override file values
    const auto overridden =
        run_cli("sweep --config \"" + cfg.string() + "\" --seed 9 --dry-run");
    CHECK(overridden.exit_code == 0);
    CHECK(overridden.output.find("\"seed\": 9") != std::string::npos);
    CHECK(overridden.output.find("\"beta\": 2") != std::string::npos);

    const fs::path bad_key = work_dir() / "bad_key.json";
    std::ofstream(bad_key) << "{\"beta\": 1.0, \"snr_dbx\": [1]}";
    const auto rejected = run_cli("sweep --config \"" + bad_key.string() + "\" --dry-run");
    CHECK(rejected.exit_code == 2);
    CHECK(rejected.output.find("unknown config key") != std::string::npos);

    const fs::path malformed = work_dir() / "malformed.json";
    std::ofstream(malformed) << "{\"beta\": ";
    const auto bad = run_cli("sweep --config \"" + malformed.string() + "\" --dry-run");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("malformed") != std::string::npos);
}

TEST_CASE("tiny sweep writes csv plus sidecar deterministically")
{
    const fs::path out1 = work_dir() / "sweep_a";
    const fs::path out2 = work_dir() / "sweep_b";
    const auto r1 = run_cli("sweep " + kTinyArgs + " --out \"" + out1.string() + "\"");
    REQUIRE(r1.exit_code == 0);
    const std::string csv1 = slurp(out1.string() + ".csv");
    const std::string sidecar1 = slurp(out1.string() + ".json");

    // identical invocation: both files byte-identical
    const auto r1b = run_cli("sweep " + kTinyArgs + " --out \"" + out1.string() + "\"");
    REQUIRE(r1b.exit_code == 0);
    CHECK(slurp(out1.string() + ".csv") == csv1);
    CHECK(slurp(out1.string() + ".json") == sidecar1);

    // different worker count: same data, so the CSV is byte-identical
    const auto r2 = run_cli("sweep " + kTinyArgs + " --threads 1 --out \"" +
                            out2.string() + "\"");
    REQUIRE(r2.exit_code == 0);
    CHECK(slurp(out2.string() + ".csv") == csv1);
    CHECK(csv1.rfind("snr_db,snr,L,delta,alpha,amp_rate,", 0) == 0);

    // 1 header + 3 rows
    int lines = 0;
    std::istringstream is(csv1);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty())
            ++lines;
    CHECK(lines == 4);
}

TEST_CASE("bits units rename the csv rate columns")
{
    const fs::path out = work_dir() / "sweep_bits";
    const auto r =
        run_cli("sweep " + kTinyArgs + " --units bits --out \"" + out.string() + "\"");
    REQUIRE(r.exit_code == 0);
    CHECK(slurp(out.string() + ".csv").rfind("snr_db,snr,L,delta,alpha,amp_rate_bits,", 0) == 0);
}

TEST_CASE("json format emits a single self-contained file")
{
    const fs::path out = work_dir() / "sweep_json";
    const auto r =
        run_cli("sweep " + kTinyArgs + " --format json --out \"" + out.string() + "\"");
    REQUIRE(r.exit_code == 0);
    const std::string text = slurp(out.string() + ".json");
    CHECK(text.find("\"config\"") != std::string::npos);
    CHECK(text.find("\"points\"") != std::string::npos);
    CHECK_FALSE(fs::exists(out.string() + ".csv"));
}

TEST_CASE("WPNSIM_OUT_DIR prefixes relative output paths")
{
    const fs::path dir = work_dir() / "envdir";
    fs::create_directories(dir);
    const auto r = run_cli("sweep " + kTinyArgs + " --out env_rel",
                           "WPNSIM_OUT_DIR=\"" + dir.string() + "\"");
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(dir / "env_rel.csv"));
    CHECK(fs::exists(dir / "env_rel.json"));
}

TEST_CASE("point subcommand prints a table and honors --out")
{
    const auto bare = run_cli("point 20 --symbols 50 --replicates 2 --oversampling fixed:8");
    CHECK(bare.exit_code == 0);
    CHECK(bare.output.find("snr_db") != std::string::npos);
    CHECK_FALSE(fs::exists("wpnsim_results.csv"));

    const fs::path out = work_dir() / "single_point";
    const auto with_out = run_cli("point 20 --symbols 50 --replicates 2 "
                                  "--oversampling fixed:8 --out \"" +
                                  out.string() + "\"");
    CHECK(with_out.exit_code == 0);
    CHECK(fs::exists(out.string() + ".csv"));
}

TEST_CASE("selfcheck subcommand passes")
{
    const auto r = run_cli("selfcheck");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("selfcheck passed") != std::string::npos);
}

TEST_CASE("unwritable output path fails with a nonzero exit")
{
    const auto r = run_cli("sweep " + kTinyArgs + " --out /nonexistent-dir-zzz/results");
    CHECK(r.exit_code != 0);
}

TEST_CASE("per-point failures are reported by SNR")
{
    // the 400 dB point overflows the oversampling schedule
    const auto r = run_cli("sweep --snr-db 20,400 --symbols 50 --replicates 2 "
                           "--out \"" + (work_dir() / "failing").string() + "\"");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("snr_db=400") != std::string::npos);
}
