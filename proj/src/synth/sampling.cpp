#include "ptsynth/sampling.hpp"

#include "ptsynth/concrete.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ptsynth {

namespace {

constexpr int kSteps = 16;

// Random interior rational of the range of v in p; the range's endpoints
// are used only when attained and the range is a single point.
std::optional<Rational> pick(const Polyhedron& p, VarIndex v, std::mt19937_64& rng) {
    const std::size_t n = p.dim();
    Minimum lo = p.get_min(v);
    if (lo.is_infinite()) return std::nullopt;
    std::optional<Minimum> neg_hi;
    try {
        neg_hi = p.get_min(-LinearTerm::variable(n, v));
    } catch (const std::domain_error&) {
        neg_hi.reset();
    }
    std::uniform_int_distribution<int> step(1, kSteps - 1);
    // mpq arithmetic requires canonical operands
    auto frac = [](int num, int den) {
        Rational q(num, den);
        q.canonicalize();
        return q;
    };
    if (!neg_hi) return lo.value() + frac(step(rng), 2);
    Rational hi = -neg_hi->value();
    if (hi == lo.value()) return lo.value();
    return lo.value() + (hi - lo.value()) * frac(step(rng), kSteps);
}

}  // namespace

std::optional<std::vector<Rational>> sample_point(const Polyhedron& p, std::mt19937_64& rng) {
    if (p.is_empty()) return std::nullopt;
    const std::size_t n = p.dim();
    std::vector<VarIndex> order(n);
    for (VarIndex v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);

    Polyhedron cur = p;
    std::vector<Rational> point(n);
    for (VarIndex v : order) {
        auto value = pick(cur, v, rng);
        if (!value) return p.sample();
        point[v] = *value;
        cur = cur.conjoin(Inequality::make(LinearTerm::variable(n, v), CmpOp::Eq, LinearTerm::constant_term(n, *value)));
        if (cur.is_empty()) return p.sample();
    }
    return point;
}

std::vector<std::vector<Rational>> sample_points(const Polyhedron& p, std::size_t count, std::mt19937_64& rng) {
    std::vector<std::vector<Rational>> out;
    if (count == 0) return out;
    auto first = p.sample();
    if (!first) return out;
    out.push_back(std::move(*first));
    while (out.size() < count) out.push_back(*sample_point(p, rng));
    return out;
}

WitnessReplay replay_witnesses(const Pta& pta, const Disjunct& d, std::span<const Rational> valuation,
                               std::span<const std::size_t> targets) {
    WitnessReplay out;
    for (const auto& path : d.witnesses) {
        auto run = replay(pta, path, valuation, ReplayDelays::Any);
        if (!run) continue;
        if (std::find(targets.begin(), targets.end(), run->last().location) == targets.end()) continue;
        out.reached = true;
        Minimum m = replay_min_duration(pta, path, valuation);
        if (m < out.duration) out.duration = m;
    }
    return out;
}

std::uint64_t sampling_seed(std::uint64_t fallback) {
    const char* env = std::getenv("PTSYNTH_SEED");
    if (env == nullptr || *env == '\0') return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') return fallback;
    return v;
}

}  // namespace ptsynth
