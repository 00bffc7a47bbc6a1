// ============================================================================
// ptsynth/concrete.hpp: concrete runs under a fixed parameter valuation
// ============================================================================
//
// Invariants in the guard grammar are convex, so a delay is legal as soon as
// the invariant holds at both ends of it.
//
// ============================================================================

#ifndef PTSYNTH_CONCRETE_HPP
#define PTSYNTH_CONCRETE_HPP

#include "ptsynth/minimum.hpp"
#include "ptsynth/pta.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ptsynth {

struct ConcreteState {
    std::size_t location = 0;
    std::vector<Rational> clocks;

    bool operator==(const ConcreteState&) const = default;
};

struct RunStep {
    Rational delay;
    std::size_t edge = 0;
    ConcreteState state;  // after the edge
};

struct Run {
    ConcreteState start;
    std::vector<RunStep> steps;

    Rational duration() const;
    std::vector<std::size_t> edges() const;
    const ConcreteState& last() const { return steps.empty() ? start : steps.back().state; }
};

class SemanticsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ConcreteState initial_concrete_state(const Pta& pta);

bool satisfies(const Pta& pta, const Guard& g, std::span<const Rational> clocks,
               std::span<const Rational> valuation);

/// Delay then take `edge`.  Throws SemanticsError on a wrong source, a
/// violated invariant (before or after the delay, or in the target) or a
/// violated guard.
ConcreteState concrete_step(const Pta& pta, const ConcreteState& s, const Rational& delay, std::size_t edge,
                            std::span<const Rational> valuation);

enum class ReplayDelays : std::uint8_t {
    Any,       // any feasible choice
    Shortest,  // minimal total duration (approached within a small margin if not attained)
};

/// Concrete delays realizing the discrete sequence from the initial state,
/// found by exact linear programming over the delays; nullopt if none.
std::optional<Run> replay(const Pta& pta, std::span<const std::size_t> edges, std::span<const Rational> valuation,
                          ReplayDelays mode = ReplayDelays::Any);

/// Infimum duration of the discrete sequence under the valuation, with
/// attainment; infinity when the sequence is infeasible.
Minimum replay_min_duration(const Pta& pta, std::span<const std::size_t> edges,
                            std::span<const Rational> valuation);

}  // namespace ptsynth

#endif  // PTSYNTH_CONCRETE_HPP
