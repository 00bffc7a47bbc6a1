// ============================================================================
// ef_synth.cpp: shared exploration bookkeeping and reachability synthesis
// ============================================================================

#include "explorer.hpp"

#include <algorithm>

namespace ptsynth::detail {

Explorer::Explorer(const Pta& p, std::span<const std::size_t> targets, const AlgoConfig& c, std::string algorithm)
    : pta(p), cfg(c), graph(p), store(p.locations.size(), c.inclusion), target_(p.locations.size(), false),
      params_(p.param_vars()), t0_(std::chrono::steady_clock::now()) {
    cfg.validate();
    for (auto t : targets) target_.at(t) = true;
    result.algorithm = std::move(algorithm);
    result.k = DisjunctiveConstraint(p.params.size());
}

std::size_t Explorer::start(Minimum key) {
    SymbolicState s0 = graph.initial();
    std::size_t id = store.insert(s0.location, std::move(s0.zone), std::move(key), {}, true);
    ++result.stats.pushed;
    if (cfg.observer)
        cfg.observer->on_state(StateEvent{id, store.at(id).location, &store.at(id).zone, std::nullopt, std::nullopt});
    return id;
}

std::optional<std::size_t> Explorer::discover(std::size_t parent, std::size_t edge, SymbolicState succ, Minimum key) {
    auto verdict = store.classify(succ.location, succ.zone);
    if (verdict != StateStore::Verdict::Fresh) {
        if (verdict == StateStore::Verdict::Included) ++result.stats.inclusion_hits;
        return std::nullopt;
    }
    std::size_t id = store.insert(succ.location, std::move(succ.zone), std::move(key), {Link{parent, edge}}, false);
    ++result.stats.pushed;
    if (cfg.observer) cfg.observer->on_state(StateEvent{id, store.at(id).location, &store.at(id).zone, parent, edge});
    return id;
}

const Polyhedron& Explorer::projection(std::size_t id) const {
    auto it = projections_.find(id);
    if (it == projections_.end()) it = projections_.emplace(id, graph.parameter_projection(store.at(id).zone)).first;
    return it->second;
}

std::vector<EdgePath> Explorer::witnesses(std::size_t id, const Polyhedron& region) const {
    std::vector<EdgePath> out;
    EdgePath suffix;
    // Backward along links, keeping only parents that can still realize
    // part of the region; links always point to older states.
    auto walk = [&](auto&& self, std::size_t at, const Polyhedron& within) -> void {
        if (out.size() >= kMaxWitnesses) return;
        const StoredState& s = store.at(at);
        if (s.initial) out.emplace_back(suffix.rbegin(), suffix.rend());
        for (const Link& l : s.links) {
            if (out.size() >= kMaxWitnesses) return;
            Polyhedron narrowed = within.conjoin(projection(l.parent));
            if (narrowed.is_empty()) continue;
            suffix.push_back(l.edge);
            self(self, l.parent, narrowed);
            suffix.pop_back();
        }
    };
    walk(walk, id, region);
    return out;
}

bool Explorer::out_of_budget() {
    bool hit = false;
    if (cfg.max_states && store.size() >= *cfg.max_states) hit = true;
    if (cfg.timeout_seconds) {
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
        if (s >= *cfg.timeout_seconds) hit = true;
    }
    if (hit) result.status = Status::Partial;
    return hit;
}

void Explorer::popped(std::size_t id, const Minimum& key) {
    ++result.stats.popped;
    if (cfg.observer) cfg.observer->on_pop(id, key);
}

Polyhedron Explorer::optimum_slice(const Polyhedron& zone, VarIndex var, const Minimum& m) const {
    const std::size_t n = zone.dim();
    LinearTerm v = LinearTerm::variable(n, var);
    if (m.strictness() == Strictness::Attained)
        return zone.conjoin(Inequality::make(v, CmpOp::Eq, LinearTerm::constant_term(n, m.value()))).project(params_);
    if (cfg.strict_min == StrictMinMode::Epsilon)
        return zone.conjoin(Inequality::make(v, CmpOp::Eq, LinearTerm::constant_term(n, m.value() + cfg.epsilon)))
            .project(params_);
    // Closure: limit valuations, restricted to those that reach the state at all.
    Polyhedron limit =
        zone.closure().conjoin(Inequality::make(v, CmpOp::Eq, LinearTerm::constant_term(n, m.value()))).project(params_);
    Polyhedron reachable = zone.project(params_);
    auto it = std::find(params_.begin(), params_.end(), var);
    if (it != params_.end()) {
        std::vector<VarIndex> own = {static_cast<VarIndex>(it - params_.begin())};
        reachable = reachable.eliminate(own);
    }
    return limit.conjoin(reachable);
}

SynthResult Explorer::finish() {
    result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    return std::move(result);
}

MergePolicy Explorer::merge_policy(bool breadth_first) const {
    if (cfg.merge != MergePolicy::Default) return cfg.merge;
    return breadth_first ? MergePolicy::Layer : MergePolicy::Every;
}

}  // namespace ptsynth::detail

namespace ptsynth {

using namespace detail;

SynthResult ef_synth(const Pta& pta, std::span<const std::size_t> targets, const AlgoConfig& cfg) {
    Explorer ex(pta, targets, cfg, "efsynth");
    const MergePolicy merge = ex.merge_policy(true);
    auto no_key = [](const Polyhedron&) { return Minimum::attained(0); };

    std::vector<std::size_t> layer = {ex.start(Minimum::attained(0))};
    std::size_t since_merge = 0;
    bool stop = false;
    while (!layer.empty() && !stop) {
        std::vector<std::size_t> next;
        for (std::size_t k = 0; k < layer.size() && !stop; ++k) {
            std::size_t id = layer[k];
            if (!ex.store.at(id).alive) continue;
            ex.note_waiting(layer.size() - k + next.size());
            ex.popped(id, Minimum::attained(0));
            const StoredState& s = ex.store.at(id);
            if (ex.is_target(s.location)) {
                {
                    Polyhedron slice = ex.graph.parameter_projection(s.zone);
                    auto w = ex.witnesses(id, slice);
                    ex.result.k.add(std::move(slice), std::move(w));
                }
                continue;
            }
            SymbolicState cur{s.location, s.zone};
            for (auto& [e, t] : ex.graph.succ(cur)) {
                if (cfg.observer) cfg.observer->on_successor(cur, e, t);
                if (auto nid = ex.discover(id, e, std::move(t), Minimum::attained(0))) next.push_back(*nid);
            }
            if (merge == MergePolicy::Every && ++since_merge >= cfg.merge_every) {
                since_merge = 0;
                next = ex.store.merge(next, no_key, ex.result.stats.merge_events);
            }
            if (ex.out_of_budget()) stop = true;
        }
        if (merge == MergePolicy::Layer) next = ex.store.merge(next, no_key, ex.result.stats.merge_events);
        layer = std::move(next);
    }
    ex.result.opt = ex.result.k.is_false() ? Minimum::infinity() : Minimum::attained(0);
    return ex.finish();
}

}  // namespace ptsynth
