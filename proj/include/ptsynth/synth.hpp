// ============================================================================
// ptsynth/synth.hpp: reachability, minimal-parameter and minimal-time
// synthesis over the parametric zone graph
// ============================================================================

#ifndef PTSYNTH_SYNTH_HPP
#define PTSYNTH_SYNTH_HPP

#include "ptsynth/disjunctive.hpp"
#include "ptsynth/minimum.hpp"
#include "ptsynth/pta.hpp"
#include "ptsynth/zone_graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ptsynth {

// ── configuration ───────────────────────────────────────────────────────────

enum class MergePolicy : std::uint8_t {
    Default,  // every layer for breadth-first algorithms, every 10 pops otherwise
    Off,
    Layer,
    Every,  // every merge_every pops
};

enum class StrictMinMode : std::uint8_t {
    Closure,  // optimum (c,>): keep valuations reaching the target arbitrarily close to c
    Epsilon,  // optimum (c,>): keep valuations reaching it exactly at c + epsilon
};

enum class MinParamK : std::uint8_t {
    AtOptimum,  // accumulate (C && p = Opt) projected on the parameters
    Verbatim,   // accumulate C projected on the parameters
};

class ExplorationObserver;

struct AlgoConfig {
    bool inclusion = true;
    MergePolicy merge = MergePolicy::Default;
    std::size_t merge_every = 10;
    StrictMinMode strict_min = StrictMinMode::Closure;
    Rational epsilon = Rational(1, 1024);
    MinParamK minparam_k = MinParamK::AtOptimum;
    std::optional<std::size_t> max_states;
    std::optional<double> timeout_seconds;
    ExplorationObserver* observer = nullptr;

    /// Throws std::invalid_argument when merge_every is 0 or epsilon <= 0.
    void validate() const;
};

// ── results ─────────────────────────────────────────────────────────────────

struct ExplorationStats {
    std::size_t popped = 0;
    std::size_t pushed = 0;
    std::size_t inclusion_hits = 0;
    std::size_t merge_events = 0;
    std::size_t peak_waiting = 0;
    double wall_seconds = 0;
};

enum class Status : std::uint8_t { Complete, Partial };

const char* to_string(Status s);

struct SynthResult {
    std::string algorithm;
    Minimum opt;                // infinity for plain reachability synthesis with empty K
    DisjunctiveConstraint k;    // over the parameters of the explored model
    ExplorationStats stats;
    Status status = Status::Complete;
};

// ── observation ─────────────────────────────────────────────────────────────

struct StateEvent {
    std::size_t index;
    std::size_t location;
    const Polyhedron* zone;
    std::optional<std::size_t> parent;
    std::optional<std::size_t> edge;
};

class ExplorationObserver {
public:
    virtual ~ExplorationObserver() = default;
    /// A state entered the waiting set (initial state included).
    virtual void on_state(const StateEvent&) {}
    /// A successor was computed, before any filtering.
    virtual void on_successor(const SymbolicState& /*from*/, std::size_t /*edge*/, const SymbolicState& /*to*/) {}
    /// A state was taken from the waiting set; key is its priority (time
    /// algorithms) or (0,=).
    virtual void on_pop(std::size_t /*index*/, const Minimum& /*key*/) {}
};

/// Writes "index | location | zone | parent | edge" lines.
class TraceWriter : public ExplorationObserver {
public:
    TraceWriter(const Pta& pta, std::ostream& out);
    void on_state(const StateEvent& ev) override;

private:
    const Pta* pta_;
    std::vector<std::string> names_;
    std::ostream* out_;
};

// ── algorithms ──────────────────────────────────────────────────────────────

/// All valuations reaching a target.  opt is (0,=) when K is non-empty.
SynthResult ef_synth(const Pta& pta, std::span<const std::size_t> targets, const AlgoConfig& cfg = {});

/// Valuations minimizing parameter `param` among those reaching a target.
SynthResult min_param_synth(const Pta& pta, std::span<const std::size_t> targets, std::size_t param,
                            const AlgoConfig& cfg = {});

/// Minimal value of `param` with one witness family; prunes states that
/// cannot improve on the current optimum.
SynthResult min_param_reach(const Pta& pta, std::span<const std::size_t> targets, std::size_t param,
                            const AlgoConfig& cfg = {});

/// Minimal global time to reach a target and all valuations achieving it.
/// Throws ModelError when global_clock is reset.
SynthResult min_time_synth(const Pta& pta, std::span<const std::size_t> targets, std::size_t global_clock,
                           const AlgoConfig& cfg = {});

/// As min_time_synth, stopping at the first target taken from the queue.
SynthResult min_time_reach(const Pta& pta, std::span<const std::size_t> targets, std::size_t global_clock,
                           const AlgoConfig& cfg = {});

/// Minimal time of an L/U model through the 0/infinity substitution.
/// Throws ModelError if the model is not L/U.
Minimum lu_min_time_fast_path(const Pta& pta, std::span<const std::size_t> targets, std::size_t global_clock,
                              const AlgoConfig& cfg = {});

// ── reductions ──────────────────────────────────────────────────────────────

/// Drops candidates included in a state of `seen` at the same location
/// (equal zones included).
std::vector<SymbolicState> apply_inclusion_filter(std::span<const SymbolicState> candidates,
                                                  std::span<const SymbolicState> seen);

struct MergeOutcome {
    std::vector<Polyhedron> zones;
    std::vector<std::vector<std::size_t>> sources;  // input indices behind each zone
    std::size_t merges = 0;
};

/// Greedy pairwise convex merging, in input order, to a fixed point.
MergeOutcome merge_pass(std::span<const Polyhedron> zones);

}  // namespace ptsynth

#endif  // PTSYNTH_SYNTH_HPP
