#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperchroma/coloring/pipeline.hpp"

namespace hyperchroma::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalidInput = 1,
    kColoringFailed = 2,
    kInfeasibleSpec = 3,
};

enum class ReportFormat { Text, Json };

/// Everything one CLI invocation needs. Unused fields are ignored by commands
/// that do not read them.
struct RunConfig {
    std::string command;
    std::string input;
    std::string output;
    std::string palettes; // optional palette file (color, validate)
    std::string coloring; // optional coloring file to check (validate)
    ReportFormat format = ReportFormat::Text;

    PipelineParams pipeline;

    std::size_t cap_edges = 16;
    std::size_t list_cap_edges = 8;
    std::uint64_t list_budget = 50'000'000;

    // generate
    std::string kind = "random";
    std::uint64_t q = 2;
    std::optional<std::size_t> pad_to;
    std::size_t n = 500;
    std::size_t rank_min = 3;
    std::size_t rank_max = 20;
    std::optional<std::size_t> target_edges;
    std::size_t failure_budget = 1000;

    // lowerbound
    double x = 0.5;
    double delta = 0.1;

    // bench
    std::vector<std::size_t> bench_sizes{500};
    std::size_t seed_count = 10;
    unsigned jobs = 1;
    bool timing = true; // false writes runtime_ms as 0 so seeded CSVs compare byte for byte
};

// Each command writes its primary artifact (instance, coloring, CSV) to
// config.output, or to `out` when no output path is given; the report then
// goes to `err` so `out` stays machine-readable. With an output path the
// report goes to `out`.

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_color(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_lowerbound(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Column header of the bench CSV, preceded in the output by a schema comment line.
extern const char* const kBenchColumns;

/// Parses argv and dispatches. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hyperchroma::cli
