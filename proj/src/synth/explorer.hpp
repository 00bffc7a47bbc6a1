// Bookkeeping shared by the exploration loops: graph, store, limits, stats.
#pragma once

#include "state_store.hpp"

#include "ptsynth/synth.hpp"

#include <chrono>
#include <map>
#include <optional>

namespace ptsynth::detail {

class Explorer {
public:
    Explorer(const Pta& pta, std::span<const std::size_t> targets, const AlgoConfig& cfg, std::string algorithm);

    const Pta& pta;
    const AlgoConfig& cfg;
    ZoneGraph graph;
    StateStore store;
    SynthResult result;

    bool is_target(std::size_t location) const { return target_[location]; }

    /// Stores the initial state.  Throws ModelError on an empty initial zone.
    std::size_t start(Minimum key);

    /// Filters a successor and stores it if new; nullopt when dropped.
    std::optional<std::size_t> discover(std::size_t parent, std::size_t edge, SymbolicState succ, Minimum key);

    /// True (and status set to partial) once a state or time limit is hit.
    bool out_of_budget();

    void note_waiting(std::size_t n) { result.stats.peak_waiting = std::max(result.stats.peak_waiting, n); }
    void popped(std::size_t id, const Minimum& key);

    /// Parameter-space slice of a zone at the optimum of `var`.
    Polyhedron optimum_slice(const Polyhedron& zone, VarIndex var, const Minimum& m) const;

    /// Up to kMaxWitnesses discrete paths reaching state `id` whose parameter
    /// projections meet `region`.
    std::vector<EdgePath> witnesses(std::size_t id, const Polyhedron& region) const;
    static constexpr std::size_t kMaxWitnesses = 32;

    SynthResult finish();

    MergePolicy merge_policy(bool breadth_first) const;

private:
    std::vector<bool> target_;
    std::vector<VarIndex> params_;
    mutable std::map<std::size_t, Polyhedron> projections_;

    const Polyhedron& projection(std::size_t id) const;
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace ptsynth::detail
