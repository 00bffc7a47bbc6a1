#include "ptsynth/result_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>

namespace ptsynth {

namespace {

const char* optimum_label(const std::string& algorithm) {
    if (algorithm.rfind("mintime", 0) == 0 || algorithm == "lu-fast") return "T_opt";
    if (algorithm.rfind("minparam", 0) == 0) return "Opt";
    return nullptr;
}

std::vector<std::vector<std::string>> disjunct_atoms(const DisjunctiveConstraint& k,
                                                     std::span<const std::string> names) {
    std::vector<std::vector<std::string>> out;
    for (const auto& d : k.disjuncts()) {
        std::vector<std::string> atoms;
        for (const auto& c : d.constraint.constraints()) atoms.push_back(render(c, names));
        out.push_back(std::move(atoms));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string render_constraint(const DisjunctiveConstraint& k, std::span<const std::string> param_names) {
    return k.to_string(param_names);
}

std::string render_text(const SynthResult& r, std::span<const std::string> param_names) {
    std::string out = "algorithm: " + r.algorithm + "\n";
    out += std::string("status: ") + to_string(r.status) + "\n";
    if (const char* label = optimum_label(r.algorithm)) out += std::string(label) + " = " + r.opt.to_string() + "\n";
    if (r.algorithm == "lu-fast") return out;
    out += "K = " + render_constraint(r.k, param_names) + "\n";
    out += "disjuncts: " + std::to_string(r.k.size()) + "\n";
    return out;
}

std::string render_structured(const SynthResult& r, std::span<const std::string> param_names) {
    nlohmann::ordered_json j;
    j["algorithm"] = r.algorithm;
    if (r.opt.is_infinite()) {
        j["optimum"] = "infinity";
    } else {
        j["optimum"] = {{"value", to_string(r.opt.value())},
                        {"strictness", r.opt.strictness() == Strictness::Attained ? "=" : ">"}};
    }
    j["constraint"] = disjunct_atoms(r.k, param_names);
    j["stats"] = {{"popped", r.stats.popped},
                  {"pushed", r.stats.pushed},
                  {"inclusion_hits", r.stats.inclusion_hits},
                  {"merge_events", r.stats.merge_events},
                  {"peak_waiting", r.stats.peak_waiting}};
    j["status"] = to_string(r.status);
    return j.dump() + "\n";
}

std::string render_stats(const ExplorationStats& s) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "popped=%zu pushed=%zu inclusion_hits=%zu merge_events=%zu peak_waiting=%zu wall_ms=%.1f", s.popped,
                  s.pushed, s.inclusion_hits, s.merge_events, s.peak_waiting, s.wall_seconds * 1000.0);
    return buf;
}

}  // namespace ptsynth
