// ============================================================================
// ptsynth/result_io.hpp: text and line-delimited JSON rendering of results
// ============================================================================

#ifndef PTSYNTH_RESULT_IO_HPP
#define PTSYNTH_RESULT_IO_HPP

#include "ptsynth/synth.hpp"

#include <span>
#include <string>

namespace ptsynth {

/// Disjuncts sorted lexicographically and joined by " or "; "false" for the
/// empty union, "true" for the universe.
std::string render_constraint(const DisjunctiveConstraint& k, std::span<const std::string> param_names);

/// Human-readable block, newline-terminated.  Contains no timing data.
std::string render_text(const SynthResult& r, std::span<const std::string> param_names);

/// One JSON object on one line:
///   {"algorithm":..,"optimum":{"value":"2","strictness":"="}|"infinity",
///    "constraint":[["p1 = 2","p2 > 1"],...],"stats":{..},"status":..}
std::string render_structured(const SynthResult& r, std::span<const std::string> param_names);

/// Counters and wall time for the diagnostics stream.
std::string render_stats(const ExplorationStats& s);

}  // namespace ptsynth

#endif  // PTSYNTH_RESULT_IO_HPP
