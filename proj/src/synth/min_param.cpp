// ============================================================================
// min_param.cpp: breadth-first minimal-parameter synthesis
// ============================================================================

#include "explorer.hpp"

namespace ptsynth {

using namespace detail;

namespace {

SynthResult min_param_impl(const Pta& pta, std::span<const std::size_t> targets, std::size_t param,
                           const AlgoConfig& cfg, bool reach_only) {
    if (param >= pta.params.size()) throw ModelError("parameter index out of range");
    Explorer ex(pta, targets, cfg, reach_only ? "minparam-reach" : "minparam");
    const VarIndex pvar = pta.param_var(param);
    const MergePolicy merge = ex.merge_policy(true);
    auto key_of = [&](const Polyhedron& z) { return z.get_min(pvar); };
    Minimum& opt = ex.result.opt;
    auto& K = ex.result.k;

    auto accumulate = [&](std::size_t id, const Minimum& m) {
        const Polyhedron& zone = ex.store.at(id).zone;
        Polyhedron slice = cfg.minparam_k == MinParamK::AtOptimum ? ex.optimum_slice(zone, pvar, m)
                                                                 : ex.graph.parameter_projection(zone);
        auto w = ex.witnesses(id, slice);
        K.add(std::move(slice), std::move(w));
    };

    std::size_t root = ex.start(Minimum::attained(0));
    ex.store.at(root).key = key_of(ex.store.at(root).zone);
    std::vector<std::size_t> layer = {root};
    std::size_t since_merge = 0;
    bool stop = false;
    while (!layer.empty() && !stop) {
        std::vector<std::size_t> next;
        for (std::size_t k = 0; k < layer.size() && !stop; ++k) {
            std::size_t id = layer[k];
            if (!ex.store.at(id).alive) continue;
            ex.note_waiting(layer.size() - k + next.size());
            ex.popped(id, ex.store.at(id).key);
            const std::size_t loc = ex.store.at(id).location;
            if (ex.is_target(loc)) {
                Minimum m = ex.store.at(id).zone.get_min(pvar);
                if (m < opt) {
                    opt = m;
                    K.clear();
                    accumulate(id, m);
                } else if (m == opt && !reach_only) {
                    accumulate(id, m);
                }
                continue;
            }
            if (reach_only && opt.is_finite() && ex.store.at(id).key >= opt) continue;
            SymbolicState cur{loc, ex.store.at(id).zone};
            for (auto& [e, t] : ex.graph.succ(cur)) {
                if (cfg.observer) cfg.observer->on_successor(cur, e, t);
                Minimum key = key_of(t.zone);
                if (reach_only && opt.is_finite() && key >= opt) continue;
                if (auto nid = ex.discover(id, e, std::move(t), std::move(key))) next.push_back(*nid);
            }
            if (merge == MergePolicy::Every && ++since_merge >= cfg.merge_every) {
                since_merge = 0;
                next = ex.store.merge(next, key_of, ex.result.stats.merge_events);
            }
            if (ex.out_of_budget()) stop = true;
        }
        if (merge == MergePolicy::Layer) next = ex.store.merge(next, key_of, ex.result.stats.merge_events);
        layer = std::move(next);
    }
    return ex.finish();
}

}  // namespace

SynthResult min_param_synth(const Pta& pta, std::span<const std::size_t> targets, std::size_t param,
                            const AlgoConfig& cfg) {
    return min_param_impl(pta, targets, param, cfg, false);
}

SynthResult min_param_reach(const Pta& pta, std::span<const std::size_t> targets, std::size_t param,
                            const AlgoConfig& cfg) {
    return min_param_impl(pta, targets, param, cfg, true);
}

}  // namespace ptsynth
