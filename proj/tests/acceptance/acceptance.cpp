// Acceptance checks over the bundled models.  One line per criterion.
#include "ptsynth/bench.hpp"
#include "ptsynth/oracle.hpp"
#include "ptsynth/parser.hpp"
#include "ptsynth/polyhedron.hpp"
#include "ptsynth/sampling.hpp"
#include "ptsynth/synth.hpp"
#include "ptsynth/transform.hpp"

#include <chrono>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace ptsynth;

namespace {

const std::string kModels = PTSYNTH_MODEL_DIR;

struct Bundled {
    std::string name;
    Pta pta;
    std::vector<std::size_t> targets;
    std::size_t minimize = 0;
};

std::vector<Bundled> load_suite() {
    std::vector<Bundled> out;
    for (const auto& e : parse_manifest(read_file(kModels + "/suite.txt"), kModels)) {
        Bundled b;
        b.name = std::filesystem::path(e.model).stem().string();
        b.pta = parse_model(read_file(e.model));
        Property prop = parse_property(read_file(e.property));
        b.targets = resolve_targets(b.pta, prop.targets);
        if (prop.minimize) b.minimize = *b.pta.find_param(*prop.minimize);
        out.push_back(std::move(b));
    }
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Report {
    int failures = 0;
    void line(int n, bool ok, const std::string& what, const std::string& detail) {
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << n << "  " << what;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << std::endl;
    }
};

DisjunctiveConstraint parse_union(const std::vector<std::string>& names, const std::vector<std::vector<Inequality>>& parts) {
    DisjunctiveConstraint k(names.size());
    for (const auto& cs : parts) k.add(Polyhedron::from_constraints(names.size(), cs));
    return k;
}

LinearTerm var(std::size_t n, VarIndex v) { return LinearTerm::variable(n, v); }
LinearTerm num(std::size_t n, Rational c) { return LinearTerm::constant_term(n, std::move(c)); }

// Checks along one exploration: parameter projections of successors shrink,
// and popped keys never decrease when `keyed`.
struct Monitor : ExplorationObserver {
    std::vector<VarIndex> params;
    bool keyed = false;
    std::optional<Minimum> last;
    std::size_t steps = 0, shrink_violations = 0, key_violations = 0;
    void on_successor(const SymbolicState& from, std::size_t, const SymbolicState& to) override {
        ++steps;
        if (!includes(from.zone.project(params), to.zone.project(params))) ++shrink_violations;
    }
    void on_pop(std::size_t, const Minimum& key) override {
        if (keyed && last && key < *last) ++key_violations;
        last = key;
    }
};

// ── criteria ─────────────────────────────────────────────────────────────────

void minparam_golden(Report& rep) {
    auto t0 = std::chrono::steady_clock::now();
    Pta pta = parse_model(read_file(kModels + "/minparam.pta"));
    auto targets = resolve_targets(pta, {"l3"});
    auto r = min_param_synth(pta, targets, 0);
    double s = seconds_since(t0);
    const std::size_t n = 3;
    auto p1 = var(n, 0), p2 = var(n, 1), p3 = var(n, 2);
    auto nonneg = [&](std::vector<Inequality> cs) {
        for (VarIndex v = 0; v < n; ++v) cs.push_back(Inequality::make(var(n, v), CmpOp::Ge, num(n, 0)));
        return cs;
    };
    auto expected = parse_union(pta.params, {nonneg({Inequality::make(p1, CmpOp::Eq, num(n, 2)),
                                                     Inequality::make(p2, CmpOp::Gt, num(n, 1)),
                                                     Inequality::make(p2, CmpOp::Lt, num(n, 2))}),
                                             nonneg({Inequality::make(p1, CmpOp::Eq, num(n, 2)),
                                                     Inequality::make(p3, CmpOp::Eq, num(n, 2)),
                                                     Inequality::make(p2, CmpOp::Gt, num(n, 1))})});
    bool ok = r.opt == Minimum::attained(2) && equivalent(r.k, expected) && s < 1.0;
    std::ostringstream d;
    d << "Opt = " << r.opt.to_string() << ", K = " << r.k.to_string(pta.params) << ", " << s << " s";
    rep.line(1, ok, "minimal-parameter synthesis on the three-location model", d.str());
}

void trace_golden(Report& rep) {
    Pta pta = parse_model(read_file(kModels + "/minparam.pta"));
    auto targets = resolve_targets(pta, {"l3"});
    std::ostringstream out;
    TraceWriter trace(pta, out);
    AlgoConfig cfg;
    cfg.observer = &trace;
    min_param_synth(pta, targets, 0, cfg);
    const std::vector<std::string> expected = {
        "0 | l1 | x >= 0 && p1 >= 0 && p2 >= 0 && p3 >= 0 | - | -",
        "1 | l3 | x >= 2 && p1 > 2 && p2 >= 0 && p3 >= 0 | 0 | 0",
        "2 | l2 | x >= 0 && p1 >= 0 && p2 > 1 && p3 >= 0 | 0 | 1",
        "3 | l3 | x >= 2 && p1 = 2 && p2 > 1 && p2 < 2 && p3 >= 0 | 2 | 2",
        "4 | l3 | x >= 2 && p1 = 2 && p2 > 1 && p3 = 2 | 2 | 3",
    };
    std::vector<std::string> got;
    std::istringstream in(out.str());
    for (std::string l; std::getline(in, l);) got.push_back(l);
    std::size_t matched = 0;
    for (std::size_t i = 0; i < expected.size() && i < got.size(); ++i) matched += got[i] == expected[i];
    rep.line(2, got == expected, "exploration trace s1..s5",
             std::to_string(matched) + "/5 states match, " + std::to_string(got.size()) + " traced");
}

void train(Report& rep) {
    Pta pta = parse_model(read_file(kModels + "/train.pta"));
    auto targets = resolve_targets(pta, {"goal"});
    auto g = instrument_global_clock(pta);
    auto r = min_time_synth(g.pta, targets, g.index);
    std::vector<Rational> best = {25, 15};
    bool synth_ok = r.opt == Minimum::attained(405) && r.k.contains(best);

    auto t0 = std::chrono::steady_clock::now();
    std::size_t hits = 0, others = 0;
    bool best_found = false;
    for (int d1 = 0; d1 <= 100; ++d1)
        for (int d2 = 0; d2 <= 100; ++d2) {
            std::vector<Rational> v = {d1, d2};
            auto o = concrete_min_time_oracle(instantiate(pta, v), targets, 405);
            if (o.minimum.is_finite() && o.minimum <= Minimum::attained(405)) {
                ++hits;
                if (d1 == 25 && d2 == 15 && o.minimum == Minimum::attained(405)) best_found = true;
                else ++others;
            }
        }
    double sweep = seconds_since(t0);
    std::ostringstream d;
    d << "T_opt = " << r.opt.to_string() << ", K = " << r.k.to_string(pta.params) << "; sweep: " << hits
      << " valuations within 405, only (25,15): " << (best_found && others == 0 ? "yes" : "no") << ", " << sweep
      << " s";
    rep.line(3, synth_ok && best_found && others == 0 && sweep < 120, "train model optimum and grid sweep", d.str());
}

void time_as_param(Report& rep, const std::vector<Bundled>& suite) {
    bool ok = true;
    std::ostringstream d;
    for (const auto& b : suite) {
        auto g = instrument_global_clock(b.pta);
        auto mt = min_time_synth(g.pta, b.targets, g.index);
        auto inst = instrument_min_time_as_param(g.pta, b.targets, g.index);
        auto mp = min_param_synth(inst.pta, b.targets, inst.index);
        bool same = mp.opt == mt.opt && mp.opt.is_infinite() == mt.opt.is_infinite() &&
                    equivalent(mp.k.project_prefix(b.pta.params.size()), mt.k);
        if (!same) d << b.name << " differs; ";
        ok = ok && same;
    }
    d << suite.size() << " models";
    rep.line(4, ok, "time as a parameter agrees with minimal-time synthesis", d.str());
}

// Random parameter-free model with non-strict guards: up to 3 locations and
// 2 clocks, constants up to 5.  Every location is bounded by h <= 21 on an
// extra never-reset clock so the zone graph is finite.
Pta random_model(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    Pta pta;
    std::size_t nclocks = pick(1, 2), nlocs = pick(2, 3);
    for (std::size_t c = 0; c < nclocks; ++c) pta.clocks.push_back("x" + std::to_string(c));
    pta.global_clock.assign(nclocks, false);
    const CmpOp ops[] = {CmpOp::Le, CmpOp::Ge, CmpOp::Eq};
    auto atom = [&]() {
        return Atom{static_cast<std::size_t>(pick(0, static_cast<int>(nclocks) - 1)), ops[pick(0, 2)], std::nullopt,
                    Rational(pick(0, 5))};
    };
    for (std::size_t l = 0; l < nlocs; ++l) {
        Location loc{"l" + std::to_string(l), {}, false};
        if (pick(0, 2) == 0) loc.invariant.push_back(Atom{static_cast<std::size_t>(pick(0, static_cast<int>(nclocks) - 1)),
                                                          CmpOp::Le, std::nullopt, Rational(pick(1, 5))});
        pta.locations.push_back(loc);
    }
    std::size_t nedges = pick(2, 5);
    for (std::size_t i = 0; i < nedges; ++i) {
        Edge e;
        e.source = pick(0, static_cast<int>(nlocs) - 1);
        e.target = pick(0, static_cast<int>(nlocs) - 1);
        for (int a = pick(0, 2); a > 0; --a) e.guard.push_back(atom());
        for (std::size_t c = 0; c < nclocks; ++c)
            if (pick(0, 1)) e.resets.push_back(c);
        pta.edges.push_back(e);
    }
    pta.initial = 0;
    return pta;
}

void oracle_equivalence(Report& rep) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(sampling_seed(20240601));
    const Rational horizon = 20;
    std::size_t models = 0, reachable = 0, positive = 0, mismatches = 0, skipped_init = 0;
    std::string first_bad;
    // Keep drawing until enough models need a positive delay to reach the target.
    while ((models < 120 || positive < 100) && models < 5000) {
        Pta ta = random_model(rng);
        std::vector<std::size_t> targets = {ta.locations.size() - 1};
        Pta bounded = ta;
        std::size_t h = bounded.clocks.size();
        bounded.clocks.push_back("h");
        bounded.global_clock.push_back(true);
        for (auto& l : bounded.locations) l.invariant.push_back(Atom{h, CmpOp::Le, std::nullopt, Rational(21)});
        Minimum sym;
        try {
            sym = min_time_reach(bounded, targets, h).opt;
        } catch (const ModelError&) {
            ++skipped_init;  // initial invariant excludes time zero
            continue;
        }
        ++models;
        auto o = concrete_min_time_oracle(ta, targets, horizon).minimum;
        bool ok;
        if (o.is_finite()) {
            ++reachable;
            if (sgn(o.value()) > 0) ++positive;
            ok = sym == o;
        } else {
            ok = sym.is_infinite() || sym.value() > horizon;
        }
        if (!ok) {
            ++mismatches;
            if (first_bad.empty()) first_bad = print(ta) + " symbolic " + sym.to_string() + " oracle " + o.to_string();
        }
    }
    double s = seconds_since(t0);
    std::ostringstream d;
    d << models << " models, " << reachable << " reachable within 20 (" << positive << " after a positive delay), " << mismatches << " mismatches, " << s << " s";
    if (!first_bad.empty()) d << "; first: " << first_bad;
    rep.line(5, mismatches == 0 && positive >= 100 && s < 60, "minimal-time reachability matches the concrete oracle",
             d.str());
}

void lu_fast_path(Report& rep, const std::vector<Bundled>& suite) {
    bool ok = true;
    std::size_t n = 0;
    std::ostringstream d;
    for (const auto& b : suite) {
        if (!classify_lu(b.pta).is_lu) continue;
        ++n;
        auto g = instrument_global_clock(b.pta);
        auto fast = lu_min_time_fast_path(g.pta, b.targets, g.index);
        auto full = min_time_reach(g.pta, b.targets, g.index).opt;
        d << b.name << ": " << fast.to_string() << " vs " << full.to_string() << "; ";
        ok = ok && fast == full;
    }
    d << n << " L/U models";
    rep.line(6, ok && n > 0, "L/U fast path agrees with minimal-time reachability", d.str());
}

struct Run {
    std::string model;
    std::string algorithm;
    SynthResult result;
    const Pta* replay_model;
    const std::vector<std::size_t>* targets;
};

struct Instrumented2 {
    Pta timed;
    std::size_t clock;
};

// `timed` owns the instrumented models that kept runs replay on.
void reductions_and_monotonicity(Report& rep, const std::vector<Bundled>& suite, std::deque<Instrumented2>& timed,
                                 std::vector<Run>& kept) {
    std::size_t checks = 0, differ = 0, popped_bad = 0, runs = 0;
    std::size_t steps = 0, shrink_bad = 0, key_bad = 0;
    std::ostringstream d;
    for (const auto& b : suite) {
        auto g = instrument_global_clock(b.pta);
        timed.push_back({g.pta, g.index});
        const Pta& tp = timed.back().timed;
        const std::size_t tc = timed.back().clock;
        using Algo = std::function<SynthResult(const AlgoConfig&)>;
        const std::vector<std::tuple<std::string, Algo, bool, const Pta*>> algos = {
            {"efsynth", [&](const AlgoConfig& c) { return ef_synth(b.pta, b.targets, c); }, false, &b.pta},
            {"minparam", [&](const AlgoConfig& c) { return min_param_synth(b.pta, b.targets, b.minimize, c); }, false,
             &b.pta},
            {"minparam-reach", [&](const AlgoConfig& c) { return min_param_reach(b.pta, b.targets, b.minimize, c); },
             false, &b.pta},
            {"mintime", [&](const AlgoConfig& c) { return min_time_synth(tp, b.targets, tc, c); }, true, &tp},
            {"mintime-reach", [&](const AlgoConfig& c) { return min_time_reach(tp, b.targets, tc, c); }, true, &tp},
        };
        std::size_t popped_mt = 0, popped_ef = 0;
        for (const auto& [name, algo, keyed, replay_model] : algos) {
            std::vector<SynthResult> rs;
            for (int mode = 0; mode < 3; ++mode) {
                AlgoConfig cfg;
                cfg.inclusion = mode > 0;
                if (mode < 2) cfg.merge = MergePolicy::Off;
                Monitor mon;
                mon.params = (keyed ? tp : b.pta).param_vars();
                mon.keyed = keyed && name == "mintime";
                cfg.observer = &mon;
                rs.push_back(algo(cfg));
                ++runs;
                steps += mon.steps;
                shrink_bad += mon.shrink_violations;
                key_bad += mon.key_violations;
            }
            bool reach = name.ends_with("-reach");
            for (int mode = 0; mode < 2; ++mode) {
                ++checks;
                bool same = rs[mode].opt == rs[2].opt && rs[mode].status == Status::Complete &&
                            rs[2].status == Status::Complete &&
                            (reach ? !rs[mode].k.is_false() == !rs[2].k.is_false() : equivalent(rs[mode].k, rs[2].k));
                if (!same) {
                    ++differ;
                    d << b.name << "/" << name << " mode " << mode << " differs; ";
                }
            }
            if (name == "mintime") popped_mt = rs[2].stats.popped;
            if (name == "efsynth") popped_ef = rs[2].stats.popped;
            kept.push_back(Run{b.name, name, std::move(rs[2]), replay_model, &b.targets});
        }
        if (popped_mt > popped_ef) {
            ++popped_bad;
            d << b.name << ": popped mintime " << popped_mt << " > efsynth " << popped_ef << "; ";
        }
        d << b.name << " popped " << popped_mt << "/" << popped_ef << "; ";
    }
    d << checks << " comparisons over " << runs << " runs";
    rep.line(7, differ == 0 && popped_bad == 0, "reductions do not change results; MTSynth pops no more than EFSynth",
             d.str());
    std::ostringstream m;
    m << steps << " successors, " << shrink_bad << " projection violations, " << key_bad << " key inversions";
    rep.line(8, steps > 0 && shrink_bad == 0 && key_bad == 0, "projections shrink and pop keys never decrease",
             m.str());
}

void one_clock_termination(Report& rep, const std::vector<Bundled>& suite) {
    bool ok = false;
    std::ostringstream d;
    for (const auto& b : suite) {
        if (b.pta.clocks.size() != 1 || b.name != "oneclock") continue;
        AlgoConfig cfg;
        cfg.max_states = 10000;
        auto r = min_param_synth(b.pta, b.targets, b.minimize, cfg);
        ok = r.status == Status::Complete;
        d << "Opt = " << r.opt.to_string() << ", " << r.stats.popped << " states popped, status " << to_string(r.status);
    }
    rep.line(9, ok, "minimal-parameter synthesis terminates on the one-clock model", d.str());
}

void sampling(Report& rep, const std::vector<Run>& runs) {
    std::mt19937_64 rng(sampling_seed());
    std::size_t disjuncts = 0, samples = 0, failures = 0, duration_checks = 0;
    std::ostringstream d;
    for (const auto& run : runs) {
        for (const auto& dj : run.result.k.disjuncts()) {
            ++disjuncts;
            auto points = sample_points(dj.constraint, 3, rng);
            if (points.size() < 3) {
                ++failures;
                d << run.model << "/" << run.algorithm << ": fewer than 3 samples; ";
                continue;
            }
            for (const auto& v : points) {
                ++samples;
                WitnessReplay w;
                try {
                    w = replay_witnesses(*run.replay_model, dj, v, *run.targets);
                } catch (const std::exception& e) {
                    d << run.model << "/" << run.algorithm << ": " << e.what() << "; ";
                }
                bool ok = w.reached;
                bool timed = run.algorithm.starts_with("mintime");
                if (ok && timed && run.result.opt.is_finite() &&
                    run.result.opt.strictness() == Strictness::Attained) {
                    ++duration_checks;
                    ok = w.duration == run.result.opt;
                }
                if (!ok) {
                    ++failures;
                    if (failures <= 3) d << run.model << "/" << run.algorithm << " failed to replay; ";
                }
            }
        }
    }
    d << disjuncts << " disjuncts, " << samples << " valuations replayed, " << duration_checks
      << " exact durations checked";
    rep.line(10, failures == 0 && disjuncts > 0, "sampled valuations replay to a target", d.str());
}

}  // namespace

int main() {
    Report rep;
    auto suite = load_suite();
    minparam_golden(rep);
    trace_golden(rep);
    train(rep);
    time_as_param(rep, suite);
    oracle_equivalence(rep);
    lu_fast_path(rep, suite);
    std::deque<Instrumented2> timed;
    std::vector<Run> runs;
    reductions_and_monotonicity(rep, suite, timed, runs);
    one_clock_termination(rep, suite);
    sampling(rep, runs);
    std::cout << (rep.failures == 0 ? "all criteria passed" : std::to_string(rep.failures) + " criteria failed")
              << std::endl;
    return rep.failures == 0 ? 0 : 1;
}
