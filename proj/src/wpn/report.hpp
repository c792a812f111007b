#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wpn/sweep.hpp"

namespace wpn {

enum class Units { Nats, Bits };
enum class Format { Csv, Json };

struct OutputOptions {
    Units units = Units::Nats;
    Format format = Format::Csv;
    std::string out_path = "wpnsim_results";
};

struct SlopeFits {
    std::optional<SlopeFit> amp;
    std::optional<SlopeFit> phase;
    std::optional<SlopeFit> total;
};

// A completed run: resolved config, points, and (with >= 3 points) the
// pre-log fits.
struct RunRecord {
    SweepConfig config;
    OutputOptions output;
    std::vector<SweepPoint> points;
    SlopeFits fits;
};

RunRecord make_run_record(const SweepConfig& config, const OutputOptions& output,
                          std::vector<SweepPoint> points);

// Doubles rendered with 12 significant digits ("nan" for missing values).
std::string format_g12(double value);

// Resolved config as JSON. Thread count is an execution detail and is
// deliberately not part of the record, so emitted files are identical for
// any worker count.
nlohmann::ordered_json config_to_json(const SweepConfig& config,
                                      const OutputOptions& output);

// CSV table, one row per point. In bits mode the rate columns are divided by
// ln 2 and their names suffixed _bits.
void write_csv(const RunRecord& record, const std::string& path);

// Full JSON: config, fits, points.
void write_json(const RunRecord& record, const std::string& path);

// Sidecar JSON: config and fits only (pairs with the CSV table).
void write_summary_json(const RunRecord& record, const std::string& path);

}  // namespace wpn
