// ============================================================================
// ptsynth/transform.hpp: model-to-model transformations
// ============================================================================

#ifndef PTSYNTH_TRANSFORM_HPP
#define PTSYNTH_TRANSFORM_HPP

#include "ptsynth/pta.hpp"

#include <span>
#include <string>
#include <vector>

namespace ptsynth {

enum class Polarity : std::uint8_t { Unused, Lower, Upper, Both };

const char* to_string(Polarity p);

struct LuClassification {
    std::vector<Polarity> polarity;  // per parameter
    bool is_lu = true;
};

/// x > p, x >= p make p a lower-bound parameter; x < p, x <= p an upper-bound
/// one; x = p counts as both.
LuClassification classify_lu(const Pta& pta);

struct Instrumented {
    Pta pta;
    std::size_t index = 0;  // the clock or parameter that was added or reused
};

/// Reuses the first clock declared "global" that is never reset; otherwise
/// appends a fresh unconstrained clock (flagged global) named after `name`.
Instrumented instrument_global_clock(const Pta& pta, const std::string& name = "x_global");

/// Appends a parameter `name` and conjoins  global_clock = name  to every
/// edge entering a target.  Throws ModelError if targets is empty or the
/// clock is reset somewhere.
Instrumented instrument_min_time_as_param(const Pta& pta, std::span<const std::size_t> targets,
                                          std::size_t global_clock,
                                          const std::string& name = "p_global");

/// Lower-bound parameters become 0; atoms with an upper-bound parameter are
/// dropped.  The result has no parameters.  Throws ModelError if not L/U.
Pta zero_infinity_substitution(const Pta& pta);

/// Replaces every parameter by its value; the result has no parameters.
Pta instantiate(const Pta& pta, std::span<const Rational> valuation);

/// Desugars urgent locations with one hidden clock reset on every edge into
/// an urgent location, whose invariant gains  clock <= 0.
Pta encode_urgency(const Pta& pta);

/// Fresh identifier based on `base` that clashes with no clock, parameter,
/// action or location name.
std::string fresh_name(const Pta& pta, const std::string& base);

}  // namespace ptsynth

#endif  // PTSYNTH_TRANSFORM_HPP
