// ============================================================================
// min_time.cpp: priority-queue exploration ordered by minimal global time
// ============================================================================

#include "explorer.hpp"

#include "ptsynth/transform.hpp"

#include <queue>

namespace ptsynth {

using namespace detail;

namespace {

struct QueueEntry {
    Minimum key;
    std::size_t seq;
    std::size_t id;
};

// Smallest key first; FIFO among equal keys.
struct Later {
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
        auto c = a.key <=> b.key;
        if (c != 0) return c > 0;
        return a.seq > b.seq;
    }
};

using Queue = std::priority_queue<QueueEntry, std::vector<QueueEntry>, Later>;

SynthResult min_time_impl(const Pta& pta, std::span<const std::size_t> targets, std::size_t global_clock,
                          const AlgoConfig& cfg, bool reach_only) {
    if (global_clock >= pta.clocks.size()) throw ModelError("global clock index out of range");
    if (pta.is_reset_anywhere(global_clock))
        throw ModelError("clock '" + pta.clocks[global_clock] + "' is reset and cannot measure global time");
    Explorer ex(pta, targets, cfg, reach_only ? "mintime-reach" : "mintime");
    const VarIndex xg = pta.clock_var(global_clock);
    const MergePolicy merge = ex.merge_policy(false);
    auto key_of = [&](const Polyhedron& z) { return z.get_min(xg); };
    Minimum& t_opt = ex.result.opt;
    auto& K = ex.result.k;

    Queue queue;
    std::size_t seq = 0;
    std::size_t root = ex.start(Minimum::attained(0));
    ex.store.at(root).key = key_of(ex.store.at(root).zone);
    queue.push(QueueEntry{ex.store.at(root).key, seq++, root});

    auto rebuild = [&] {
        std::vector<std::size_t> waiting;
        while (!queue.empty()) {
            waiting.push_back(queue.top().id);
            queue.pop();
        }
        waiting = ex.store.merge(waiting, key_of, ex.result.stats.merge_events);
        for (auto id : waiting) queue.push(QueueEntry{ex.store.at(id).key, seq++, id});
    };

    std::size_t since_merge = 0;
    while (!queue.empty()) {
        QueueEntry top = queue.top();
        queue.pop();
        if (!ex.store.at(top.id).alive) continue;
        if (top.key > t_opt) break;
        ex.note_waiting(queue.size() + 1);
        ex.popped(top.id, top.key);
        const std::size_t loc = ex.store.at(top.id).location;
        if (ex.is_target(loc)) {
            if (t_opt.is_infinite()) t_opt = top.key;
            Polyhedron slice = ex.optimum_slice(ex.store.at(top.id).zone, xg, t_opt);
            auto w = ex.witnesses(top.id, slice);
            K.add(std::move(slice), std::move(w));
            if (reach_only) break;
            continue;
        }
        SymbolicState cur{loc, ex.store.at(top.id).zone};
        for (auto& [e, t] : ex.graph.succ(cur)) {
            if (cfg.observer) cfg.observer->on_successor(cur, e, t);
            Minimum key = key_of(t.zone);
            if (key > t_opt) continue;
            bool target = ex.is_target(t.location);
            if (auto nid = ex.discover(top.id, e, std::move(t), key)) {
                if (target && key < t_opt) t_opt = key;
                queue.push(QueueEntry{key, seq++, *nid});
            }
        }
        if (merge == MergePolicy::Layer || (merge == MergePolicy::Every && ++since_merge >= cfg.merge_every)) {
            since_merge = 0;
            rebuild();
        }
        if (ex.out_of_budget()) break;
    }
    return ex.finish();
}

}  // namespace

SynthResult min_time_synth(const Pta& pta, std::span<const std::size_t> targets, std::size_t global_clock,
                           const AlgoConfig& cfg) {
    return min_time_impl(pta, targets, global_clock, cfg, false);
}

SynthResult min_time_reach(const Pta& pta, std::span<const std::size_t> targets, std::size_t global_clock,
                           const AlgoConfig& cfg) {
    return min_time_impl(pta, targets, global_clock, cfg, true);
}

Minimum lu_min_time_fast_path(const Pta& pta, std::span<const std::size_t> targets, std::size_t global_clock,
                              const AlgoConfig& cfg) {
    Pta ta = zero_infinity_substitution(pta);
    return min_time_reach(ta, targets, global_clock, cfg).opt;
}

}  // namespace ptsynth
