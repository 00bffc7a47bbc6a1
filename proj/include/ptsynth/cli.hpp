// ============================================================================
// ptsynth/cli.hpp: command-line front end
// ============================================================================

#ifndef PTSYNTH_CLI_HPP
#define PTSYNTH_CLI_HPP

#include "ptsynth/synth.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ptsynth {

enum class Algorithm : std::uint8_t { EfSynth, MinParam, MinParamReach, MinTime, MinTimeReach, LuFast };

const char* to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& name);

enum class OutputMode : std::uint8_t { Text, Structured };

struct CliInvocation {
    std::string model_path;
    std::optional<std::string> property_path;
    std::vector<std::string> targets;       // inline, overrides the property file
    std::optional<std::string> minimize;    // inline, overrides the property file
    Algorithm algorithm = Algorithm::MinTime;
    AlgoConfig config;
    OutputMode output = OutputMode::Text;
    std::optional<std::string> trace_path;
    bool require_global_clock = false;      // mintime variants: no auto-instrumentation
    bool time_as_param = false;             // mintime through minparam on a time parameter
    std::size_t verify_samples = 0;         // replay sampled valuations of each disjunct
};

enum ExitCode : int { ExitComplete = 0, ExitError = 1, ExitPartial = 2 };

/// Parses argv-style arguments (without the program name).  Throws
/// std::invalid_argument with a usage message on bad flags.
CliInvocation parse_invocation(const std::vector<std::string>& args);

/// Runs the invocation; the result goes to `out`, stats and diagnostics to
/// `err`.  Returns an ExitCode.
int run(const CliInvocation& inv, std::ostream& out, std::ostream& err);

/// parse_invocation + run, mapping usage errors to ExitError.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptsynth

#endif  // PTSYNTH_CLI_HPP
