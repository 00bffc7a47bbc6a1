#include "ptsynth/synth.hpp"

#include <set>

#include <ostream>
#include <stdexcept>

namespace ptsynth {

void AlgoConfig::validate() const {
    if (merge == MergePolicy::Every && merge_every == 0) throw std::invalid_argument("merge interval must be >= 1");
    if (strict_min == StrictMinMode::Epsilon && sgn(epsilon) <= 0) throw std::invalid_argument("epsilon must be > 0");
}

const char* to_string(Status s) { return s == Status::Complete ? "complete" : "partial"; }

TraceWriter::TraceWriter(const Pta& pta, std::ostream& out)
    : pta_(&pta), names_(pta.variable_names()), out_(&out) {}

void TraceWriter::on_state(const StateEvent& ev) {
    *out_ << ev.index << " | " << pta_->locations[ev.location].name << " | " << ev.zone->to_string(names_) << " | "
          << (ev.parent ? std::to_string(*ev.parent) : "-") << " | " << (ev.edge ? std::to_string(*ev.edge) : "-")
          << '\n';
}

std::vector<SymbolicState> apply_inclusion_filter(std::span<const SymbolicState> candidates,
                                                  std::span<const SymbolicState> seen) {
    std::vector<SymbolicState> out;
    for (const auto& c : candidates) {
        bool drop = false;
        for (const auto& s : seen)
            if (s.location == c.location && includes(s.zone, c.zone)) {
                drop = true;
                break;
            }
        if (!drop) out.push_back(c);
    }
    return out;
}

MergeOutcome merge_pass(std::span<const Polyhedron> zones) {
    MergeOutcome out;
    out.zones.assign(zones.begin(), zones.end());
    for (std::size_t i = 0; i < zones.size(); ++i) out.sources.push_back({i});

    // A pair that failed is not retried until one side changes.
    std::vector<std::size_t> token(zones.size());
    for (std::size_t i = 0; i < token.size(); ++i) token[i] = i;
    std::size_t next_token = zones.size();
    std::set<std::pair<std::size_t, std::size_t>> failed;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < out.zones.size(); ++i) {
            for (std::size_t j = i + 1; j < out.zones.size();) {
                auto key = std::minmax(token[i], token[j]);
                if (failed.count(key) > 0) {
                    ++j;
                    continue;
                }
                if (auto m = try_convex_merge(out.zones[i], out.zones[j])) {
                    out.zones[i] = std::move(*m);
                    auto& src = out.sources[i];
                    src.insert(src.end(), out.sources[j].begin(), out.sources[j].end());
                    out.zones.erase(out.zones.begin() + static_cast<long>(j));
                    out.sources.erase(out.sources.begin() + static_cast<long>(j));
                    token.erase(token.begin() + static_cast<long>(j));
                    token[i] = next_token++;
                    ++out.merges;
                    changed = true;
                } else {
                    failed.insert(key);
                    ++j;
                }
            }
        }
    }
    for (auto& s : out.sources) std::sort(s.begin(), s.end());
    return out;
}

}  // namespace ptsynth
