// Passed/waiting storage shared by the exploration algorithms.
#pragma once

#include "ptsynth/disjunctive.hpp"
#include "ptsynth/minimum.hpp"
#include "ptsynth/polyhedron.hpp"

#include <functional>
#include <memory>
#include <set>
#include <vector>

namespace ptsynth::detail {

/// How a stored state was reached: the state it was computed from and the
/// edge taken.  A merged state carries the links of all its members.
struct Link {
    std::size_t parent;
    std::size_t edge;
    auto operator<=>(const Link&) const = default;
};

struct StoredState {
    std::size_t location = 0;
    Polyhedron zone;
    Minimum key;
    std::vector<Link> links;
    bool initial = false;  // the empty path reaches it
    bool alive = true;     // false once merged into another state
};

class StateStore {
public:
    StateStore(std::size_t locations, bool inclusion) : buckets_(locations), inclusion_(inclusion) {}

    enum class Verdict { Fresh, Equal, Included };

    /// Compares against every live state at the location.
    Verdict classify(std::size_t location, const Polyhedron& zone) const;

    std::size_t insert(std::size_t location, Polyhedron zone, Minimum key, std::vector<Link> links, bool initial);

    StoredState& at(std::size_t id) { return states_[id]; }
    const StoredState& at(std::size_t id) const { return states_[id]; }
    std::size_t size() const { return states_.size(); }

    /// Merges live waiting states location by location.  Returns the new
    /// waiting list: untouched ids keep their position, a merged group takes
    /// the position of its first member.  `key_of` computes merged keys.
    std::vector<std::size_t> merge(const std::vector<std::size_t>& waiting,
                                   const std::function<Minimum(const Polyhedron&)>& key_of,
                                   std::size_t& merge_events);

private:
    std::vector<StoredState> states_;
    std::vector<std::vector<std::size_t>> buckets_;
    bool inclusion_;
    std::set<std::pair<std::size_t, std::size_t>> failed_merges_;  // never retried
};

}  // namespace ptsynth::detail
