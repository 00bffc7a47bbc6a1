// ============================================================================
// ptsynth/bench.hpp: run configurations over a model suite, CSV and scatter
// output
// ============================================================================
//
// Manifest: one entry per line, "model;property;overrides[;expected]".
// Paths are relative to the manifest's directory, overrides are extra CLI
// flags separated by spaces, and the optional expected optimum is checked
// against synthesis rows.  Blank lines and "#" comments are skipped.
//
// ============================================================================

#ifndef PTSYNTH_BENCH_HPP
#define PTSYNTH_BENCH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ptsynth {

struct BenchConfig {
    std::string name;
    std::vector<std::string> flags;  // CLI flags selecting the algorithm and reductions
};

/// MTReach, MTSynth, MTSynth-noRed, MPReach, MPSynth, EFSynth.
std::vector<BenchConfig> default_configs();

struct BenchEntry {
    std::string model;
    std::string property;
    std::vector<std::string> overrides;
    std::optional<std::string> expected;  // optimum as rendered in the CSV
};

struct BenchSuite {
    std::vector<BenchEntry> entries;
    std::vector<BenchConfig> configs = default_configs();
    double timeout_seconds = 60;
    std::string cli_path;  // the ptsynth executable
    unsigned jobs = 1;     // concurrent processes
};

enum class BenchStatus : std::uint8_t { Ok, Timeout, Partial, Error };
const char* to_string(BenchStatus s);

struct BenchRecord {
    std::string model;
    std::string config;
    BenchStatus status = BenchStatus::Error;
    double wall_ms = 0;
    std::size_t popped = 0;
    std::size_t pushed = 0;
    std::string optimum;  // empty for timeouts and errors
    std::size_t disjuncts = 0;
    std::string detail;   // first diagnostic line on errors
};

/// Throws std::invalid_argument on malformed lines.
std::vector<BenchEntry> parse_manifest(const std::string& text, const std::string& base_dir = "");

/// One record per (entry, config), entry-major.  Each run is a separate
/// process killed after the timeout.  Failures are recorded per row.
std::vector<BenchRecord> run_suite(const BenchSuite& suite);

/// The CLI arguments of one run (without the executable).
std::vector<std::string> bench_arguments(const BenchEntry& entry, const BenchConfig& config);

/// Fills a record from the structured output and exit code of one run.
BenchRecord record_from_output(const std::string& model, const std::string& config, int exit_code,
                               const std::string& stdout_text, const std::string& stderr_text, double wall_ms);

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out);

/// "x y flag" lines, one per model having both configurations; times in ms.
/// A timed-out side is clamped to the timeout and the row flagged 1.
void emit_scatter(const std::vector<BenchRecord>& records, const std::string& config_x,
                  const std::string& config_y, double timeout_seconds, std::ostream& out);

/// Rows that disagree with an entry's expected optimum, as messages.
std::vector<std::string> check_expectations(const BenchSuite& suite, const std::vector<BenchRecord>& records);

}  // namespace ptsynth

#endif  // PTSYNTH_BENCH_HPP
