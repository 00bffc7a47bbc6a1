// ============================================================================
// ptsynth/sampling.hpp: sampling parameter valuations from a result and
// replaying its witness paths concretely
// ============================================================================

#ifndef PTSYNTH_SAMPLING_HPP
#define PTSYNTH_SAMPLING_HPP

#include "ptsynth/disjunctive.hpp"
#include "ptsynth/pta.hpp"

#include <optional>
#include <random>
#include <span>
#include <vector>

namespace ptsynth {

/// A random point of a non-empty polyhedron, fixing one variable at a time
/// to a random rational inside its current range.  nullopt when empty.
std::optional<std::vector<Rational>> sample_point(const Polyhedron& p, std::mt19937_64& rng);

/// `count` points; the first is Polyhedron::sample(), the rest random.
std::vector<std::vector<Rational>> sample_points(const Polyhedron& p, std::size_t count, std::mt19937_64& rng);

struct WitnessReplay {
    bool reached = false;          // some witness path is feasible and ends in a target
    Minimum duration;              // least infimum duration over the feasible witnesses
};

/// Replays every witness of `d` under `valuation` on `pta`.
WitnessReplay replay_witnesses(const Pta& pta, const Disjunct& d, std::span<const Rational> valuation,
                               std::span<const std::size_t> targets);

/// Seed from PTSYNTH_SEED, or `fallback` when unset or malformed.
std::uint64_t sampling_seed(std::uint64_t fallback = 0x5eed);

}  // namespace ptsynth

#endif  // PTSYNTH_SAMPLING_HPP
