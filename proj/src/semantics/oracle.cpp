// ============================================================================
// oracle.cpp: layered breadth-first search over half-unit delays
// ============================================================================

#include "ptsynth/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace ptsynth {

namespace {

struct HalfAtom {
    std::uint32_t clock;
    CmpOp op;
    std::int64_t bound;  // half-units
};

using HalfGuard = std::vector<HalfAtom>;

HalfGuard to_half(const Guard& g) {
    HalfGuard out;
    for (const auto& a : g) {
        if (a.param) throw std::invalid_argument("oracle: model has parameters");
        if (a.op == CmpOp::Lt || a.op == CmpOp::Gt) throw std::invalid_argument("oracle: strict atoms are not supported");
        if (a.constant.get_den() != 1 || sgn(a.constant) < 0)
            throw std::invalid_argument("oracle: constants must be natural numbers");
        if (!a.constant.get_num().fits_slong_p()) throw std::invalid_argument("oracle: constant too large");
        out.push_back(HalfAtom{static_cast<std::uint32_t>(a.clock), a.op, 2 * a.constant.get_num().get_si()});
    }
    return out;
}

bool holds(const HalfGuard& g, const std::int64_t* clocks) {
    for (const auto& a : g) {
        std::int64_t v = clocks[a.clock];
        bool ok = a.op == CmpOp::Le ? v <= a.bound : a.op == CmpOp::Ge ? v >= a.bound : v == a.bound;
        if (!ok) return false;
    }
    return true;
}

constexpr std::size_t kDelay = std::numeric_limits<std::size_t>::max();

class Search {
public:
    Search(const Pta& ta, std::span<const std::size_t> targets) : ta_(ta), nc_(ta.clocks.size()) {
        if (!ta.params.empty()) throw std::invalid_argument("oracle: model has parameters");
        std::int64_t maxc = 0;
        for (const auto& l : ta.locations) {
            invariants_.push_back(to_half(l.invariant));
            for (const auto& a : invariants_.back()) maxc = std::max(maxc, a.bound);
        }
        for (const auto& e : ta.edges) {
            guards_.push_back(to_half(e.guard));
            for (const auto& a : guards_.back()) maxc = std::max(maxc, a.bound);
        }
        cap_ = maxc + 1;
        is_target_.assign(ta.locations.size(), false);
        for (auto t : targets) is_target_.at(t) = true;
        outgoing_.resize(ta.locations.size());
        for (std::size_t i = 0; i < ta.edges.size(); ++i) outgoing_[ta.edges[i].source].push_back(i);
    }

    OracleResult run(const Rational& horizon) {
        OracleResult res;
        Rational limit_q = horizon * 2;
        std::int64_t limit = static_cast<std::int64_t>(mpz_class(limit_q.get_num() / limit_q.get_den()).get_si());

        std::vector<std::int64_t> zero(nc_, 0);
        std::vector<std::size_t> frontier;
        if (holds(invariants_[ta_.initial], zero.data())) {
            if (auto id = add(ta_.initial, zero.data(), kNone, kDelay)) frontier.push_back(*id);
        }
        for (std::int64_t t = 0; !frontier.empty(); ++t) {
            // Discrete closure at time t.
            for (std::size_t k = 0; k < frontier.size(); ++k) {
                std::size_t id = frontier[k];
                if (is_target_[loc_[id]]) {
                    res.minimum = Minimum::attained(canonical(Rational(t, 2)));
                    res.explored = loc_.size();
                    res.path = path_to(id);
                    return res;
                }
                for (std::size_t e : outgoing_[loc_[id]]) {
                    const Edge& edge = ta_.edges[e];
                    const std::int64_t* cl = clocks(id);
                    if (!holds(guards_[e], cl)) continue;
                    scratch_.assign(cl, cl + nc_);
                    for (auto r : edge.resets) scratch_[r] = 0;
                    if (!holds(invariants_[edge.target], scratch_.data())) continue;
                    if (auto nid = add(edge.target, scratch_.data(), id, e)) frontier.push_back(*nid);
                }
            }
            if (t + 1 > limit) {
                res.horizon_exhausted = true;
                break;
            }
            std::vector<std::size_t> next;
            for (std::size_t id : frontier) {
                const std::int64_t* cl = clocks(id);
                scratch_.assign(cl, cl + nc_);
                for (auto& c : scratch_) c = std::min(c + 1, cap_);
                if (!holds(invariants_[loc_[id]], scratch_.data())) continue;
                if (auto nid = add(loc_[id], scratch_.data(), id, kDelay)) next.push_back(*nid);
            }
            frontier = std::move(next);
        }
        res.explored = loc_.size();
        return res;
    }

private:
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    const Pta& ta_;
    std::size_t nc_;
    std::int64_t cap_ = 1;
    std::vector<HalfGuard> invariants_, guards_;
    std::vector<bool> is_target_;
    std::vector<std::vector<std::size_t>> outgoing_;

    std::vector<std::size_t> loc_, parent_, via_;
    std::vector<std::int64_t> arena_;
    std::unordered_set<std::string> seen_;
    std::vector<std::int64_t> scratch_;

    static Rational canonical(Rational q) {
        q.canonicalize();
        return q;
    }

    const std::int64_t* clocks(std::size_t id) const { return arena_.data() + id * nc_; }

    std::optional<std::size_t> add(std::size_t loc, const std::int64_t* cl, std::size_t parent, std::size_t via) {
        std::string key(sizeof(std::size_t) + nc_ * sizeof(std::int64_t), '\0');
        std::memcpy(key.data(), &loc, sizeof(std::size_t));
        if (nc_ > 0) std::memcpy(key.data() + sizeof(std::size_t), cl, nc_ * sizeof(std::int64_t));
        if (!seen_.insert(std::move(key)).second) return std::nullopt;
        loc_.push_back(loc);
        parent_.push_back(parent);
        via_.push_back(via);
        arena_.insert(arena_.end(), cl, cl + nc_);
        return loc_.size() - 1;
    }

    std::vector<std::size_t> path_to(std::size_t id) const {
        std::vector<std::size_t> edges;
        for (std::size_t cur = id; cur != kNone; cur = parent_[cur])
            if (via_[cur] != kDelay) edges.push_back(via_[cur]);
        std::reverse(edges.begin(), edges.end());
        return edges;
    }
};

}  // namespace

OracleResult concrete_min_time_oracle(const Pta& ta, std::span<const std::size_t> targets, const Rational& horizon) {
    if (sgn(horizon) < 0) throw std::invalid_argument("oracle: negative horizon");
    Search s(ta, targets);
    return s.run(horizon);
}

}  // namespace ptsynth
