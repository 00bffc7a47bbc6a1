#include "state_store.hpp"

#include "ptsynth/synth.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ptsynth::detail {

StateStore::Verdict StateStore::classify(std::size_t location, const Polyhedron& zone) const {
    for (std::size_t id : buckets_[location]) {
        const StoredState& s = states_[id];
        if (!s.alive) continue;
        if (inclusion_) {
            if (includes(s.zone, zone)) return equals(s.zone, zone) ? Verdict::Equal : Verdict::Included;
        } else if (equals(s.zone, zone)) {
            return Verdict::Equal;
        }
    }
    return Verdict::Fresh;
}

std::size_t StateStore::insert(std::size_t location, Polyhedron zone, Minimum key, std::vector<Link> links,
                               bool initial) {
    states_.push_back(StoredState{location, std::move(zone), std::move(key), std::move(links), initial, true});
    buckets_[location].push_back(states_.size() - 1);
    return states_.size() - 1;
}

std::vector<std::size_t> StateStore::merge(const std::vector<std::size_t>& waiting,
                                           const std::function<Minimum(const Polyhedron&)>& key_of,
                                           std::size_t& merge_events) {
    std::map<std::size_t, std::vector<std::size_t>> by_loc;
    for (std::size_t id : waiting)
        if (states_[id].alive) by_loc[states_[id].location].push_back(id);

    std::map<std::size_t, std::size_t> replacement;  // first member -> merged id
    for (auto& [loc, ids] : by_loc) {
        if (ids.size() < 2) continue;
        std::vector<std::size_t> first = ids;  // original waiting id behind each slot
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < ids.size(); ++i) {
                for (std::size_t j = i + 1; j < ids.size();) {
                    auto key = std::minmax(ids[i], ids[j]);
                    if (failed_merges_.count(key) > 0) {
                        ++j;
                        continue;
                    }
                    auto m = try_convex_merge(states_[ids[i]].zone, states_[ids[j]].zone);
                    if (!m) {
                        failed_merges_.insert(key);
                        ++j;
                        continue;
                    }
                    std::vector<Link> links = states_[ids[i]].links;
                    links.insert(links.end(), states_[ids[j]].links.begin(), states_[ids[j]].links.end());
                    std::sort(links.begin(), links.end());
                    links.erase(std::unique(links.begin(), links.end()), links.end());
                    bool initial = states_[ids[i]].initial || states_[ids[j]].initial;
                    states_[ids[i]].alive = false;
                    states_[ids[j]].alive = false;
                    Minimum k = key_of(*m);
                    ids[i] = insert(loc, std::move(*m), std::move(k), std::move(links), initial);
                    ids.erase(ids.begin() + static_cast<long>(j));
                    first.erase(first.begin() + static_cast<long>(j));
                    ++merge_events;
                    changed = true;
                }
            }
        }
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (ids[i] != first[i]) replacement[first[i]] = ids[i];
    }

    std::vector<std::size_t> out;
    for (std::size_t id : waiting) {
        auto r = replacement.find(id);
        if (r != replacement.end()) out.push_back(r->second);
        else if (states_[id].alive) out.push_back(id);
    }
    return out;
}

}  // namespace ptsynth::detail
