#include "ptsynth/cli.hpp"

#include "ptsynth/parser.hpp"
#include "ptsynth/result_io.hpp"
#include "ptsynth/sampling.hpp"
#include "ptsynth/transform.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace ptsynth {

namespace {

constexpr struct {
    Algorithm algo;
    const char* name;
} kAlgorithms[] = {
    {Algorithm::EfSynth, "efsynth"},     {Algorithm::MinParam, "minparam"},
    {Algorithm::MinParamReach, "minparam-reach"}, {Algorithm::MinTime, "mintime"},
    {Algorithm::MinTimeReach, "mintime-reach"},   {Algorithm::LuFast, "lu-fast"},
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void parse_merge(const std::string& text, AlgoConfig& cfg) {
    if (text == "off") {
        cfg.merge = MergePolicy::Off;
    } else if (text == "layer") {
        cfg.merge = MergePolicy::Layer;
    } else if (text == "default") {
        cfg.merge = MergePolicy::Default;
    } else if (text.rfind("every:", 0) == 0) {
        std::size_t pos = 0;
        const std::string n = text.substr(6);
        unsigned long v = 0;
        try {
            v = std::stoul(n, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != n.size() || v == 0) throw std::invalid_argument("--merge every:N needs a positive N");
        cfg.merge = MergePolicy::Every;
        cfg.merge_every = v;
    } else {
        throw std::invalid_argument("--merge expects off, layer or every:N, got '" + text + "'");
    }
}

void parse_strict_min(const std::string& text, AlgoConfig& cfg) {
    if (text == "closure") {
        cfg.strict_min = StrictMinMode::Closure;
    } else if (text.rfind("epsilon:", 0) == 0) {
        cfg.strict_min = StrictMinMode::Epsilon;
        cfg.epsilon = parse_rational(text.substr(8));
        if (sgn(cfg.epsilon) <= 0) throw std::invalid_argument("--strict-min epsilon must be positive");
    } else if (text == "epsilon") {
        cfg.strict_min = StrictMinMode::Epsilon;
    } else {
        throw std::invalid_argument("--strict-min expects closure or epsilon:R, got '" + text + "'");
    }
}

std::size_t require_global_clock(const Pta& pta) {
    for (std::size_t c = 0; c < pta.clocks.size(); ++c)
        if (pta.global_clock[c] && !pta.is_reset_anywhere(c)) return c;
    throw ModelError("no declared global clock that is never reset (remove --require-global-clock to add one)");
}

struct Outcome {
    SynthResult result;
    Pta replay_model;                  // model whose edge indices the witnesses use
    std::vector<std::string> names;    // parameter names of K
};

Outcome dispatch(const CliInvocation& inv, const Pta& pta, const std::vector<std::size_t>& targets,
                 const Property& prop, std::ostream* trace) {
    AlgoConfig cfg = inv.config;
    std::optional<TraceWriter> writer;

    auto minimized = [&]() -> std::size_t {
        if (!prop.minimize) throw ModelError("algorithm " + std::string(to_string(inv.algorithm)) +
                                             " needs a parameter to minimize (--minimize)");
        auto p = pta.find_param(*prop.minimize);
        if (!p) throw ModelError("unknown parameter '" + *prop.minimize + "' to minimize");
        return *p;
    };

    switch (inv.algorithm) {
        case Algorithm::EfSynth:
        case Algorithm::MinParam:
        case Algorithm::MinParamReach: {
            if (trace) cfg.observer = &writer.emplace(pta, *trace);
            SynthResult r = inv.algorithm == Algorithm::EfSynth ? ef_synth(pta, targets, cfg)
                            : inv.algorithm == Algorithm::MinParam
                                ? min_param_synth(pta, targets, minimized(), cfg)
                                : min_param_reach(pta, targets, minimized(), cfg);
            return {std::move(r), pta, pta.params};
        }
        case Algorithm::MinTime:
        case Algorithm::MinTimeReach:
        case Algorithm::LuFast: {
            Instrumented g = inv.require_global_clock ? Instrumented{pta, require_global_clock(pta)}
                                                      : instrument_global_clock(pta);
            if (inv.algorithm == Algorithm::LuFast) {
                SynthResult r;
                r.algorithm = "lu-fast";
                r.opt = lu_min_time_fast_path(g.pta, targets, g.index, cfg);
                r.k = DisjunctiveConstraint(g.pta.params.size());
                return {std::move(r), g.pta, g.pta.params};
            }
            if (inv.time_as_param) {
                Instrumented t = instrument_min_time_as_param(g.pta, targets, g.index);
                if (trace) cfg.observer = &writer.emplace(t.pta, *trace);
                SynthResult r = inv.algorithm == Algorithm::MinTime ? min_param_synth(t.pta, targets, t.index, cfg)
                                                                    : min_param_reach(t.pta, targets, t.index, cfg);
                r.k = r.k.project_prefix(pta.params.size());
                r.algorithm = to_string(inv.algorithm);
                return {std::move(r), g.pta, pta.params};
            }
            if (trace) cfg.observer = &writer.emplace(g.pta, *trace);
            SynthResult r = inv.algorithm == Algorithm::MinTime ? min_time_synth(g.pta, targets, g.index, cfg)
                                                                : min_time_reach(g.pta, targets, g.index, cfg);
            return {std::move(r), g.pta, g.pta.params};
        }
    }
    throw std::logic_error("unhandled algorithm");
}

// Replays sampled valuations of every disjunct; returns the failure count.
std::size_t verify(const Outcome& o, const std::vector<std::size_t>& targets, std::size_t samples,
                   std::ostream& err) {
    std::mt19937_64 rng(sampling_seed());
    const bool timed = o.result.algorithm.rfind("mintime", 0) == 0;
    std::size_t checked = 0;
    std::size_t failed = 0;
    for (std::size_t i = 0; i < o.result.k.size(); ++i) {
        const Disjunct& d = o.result.k.disjuncts()[i];
        for (const auto& v : sample_points(d.constraint, samples, rng)) {
            ++checked;
            WitnessReplay w = replay_witnesses(o.replay_model, d, v, targets);
            bool ok = w.reached;
            if (ok && timed && o.result.opt.is_finite() && o.result.opt.strictness() == Strictness::Attained)
                ok = w.duration == o.result.opt;
            if (!ok) {
                ++failed;
                err << "verify: disjunct " << i << " valuation";
                for (const auto& q : v) err << ' ' << to_string(q);
                err << (w.reached ? " replays with duration " + w.duration.to_string() : " does not replay") << '\n';
            }
        }
    }
    err << "verify: " << (checked - failed) << "/" << checked << " sampled valuations replayed\n";
    return failed;
}

}  // namespace

const char* to_string(Algorithm a) {
    for (const auto& e : kAlgorithms)
        if (e.algo == a) return e.name;
    return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
    for (const auto& e : kAlgorithms)
        if (name == e.name) return e.algo;
    return std::nullopt;
}

CliInvocation parse_invocation(const std::vector<std::string>& args) {
    CliInvocation inv;
    CLI::App app{"Parametric timed automata synthesis", "ptsynth"};
    std::string algorithm = "mintime";
    std::string targets;
    std::string minimize;
    std::string merge;
    std::string strict;
    std::string output = "text";
    std::size_t max_states = 0;
    double timeout = 0;
    app.add_option("model", inv.model_path, "Model file")->required();
    app.add_option("--property", inv.property_path, "Property file");
    app.add_option("--algorithm", algorithm,
                   "efsynth | minparam | minparam-reach | mintime | mintime-reach | lu-fast");
    app.add_option("--targets", targets, "Comma-separated target locations");
    app.add_option("--minimize", minimize, "Parameter to minimize");
    app.add_flag("--no-inclusion", [&](std::int64_t) { inv.config.inclusion = false; }, "Disable state inclusion");
    app.add_option("--merge", merge, "off | layer | every:N");
    app.add_option("--strict-min", strict, "closure | epsilon:R");
    app.add_option("--max-states", max_states, "Stop after storing N states");
    app.add_option("--timeout-seconds", timeout, "Stop after N seconds");
    app.add_option("--output", output, "text | structured");
    app.add_option("--trace", inv.trace_path, "Write the exploration trace to PATH");
    app.add_flag("--require-global-clock", inv.require_global_clock,
                 "Time algorithms: use the declared global clock instead of adding one");
    app.add_flag("--time-as-param", inv.time_as_param, "Time algorithms: minimize a time parameter instead");
    app.add_option("--verify", inv.verify_samples, "Replay N sampled valuations of each disjunct");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw std::invalid_argument(app.help());
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(std::string(e.what()) + "\n" + app.help());
    }

    auto algo = parse_algorithm(algorithm);
    if (!algo) throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
    inv.algorithm = *algo;
    if (!targets.empty()) inv.targets = split_list(targets);
    if (!minimize.empty()) inv.minimize = minimize;
    if (!merge.empty()) parse_merge(merge, inv.config);
    if (!strict.empty()) parse_strict_min(strict, inv.config);
    if (app.count("--max-states") > 0) inv.config.max_states = max_states;
    if (app.count("--timeout-seconds") > 0) {
        if (timeout <= 0) throw std::invalid_argument("--timeout-seconds must be positive");
        inv.config.timeout_seconds = timeout;
    }
    if (output == "text") inv.output = OutputMode::Text;
    else if (output == "structured") inv.output = OutputMode::Structured;
    else throw std::invalid_argument("--output expects text or structured, got '" + output + "'");
    return inv;
}

int run(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
    try {
        inv.config.validate();
        Pta pta = parse_model(read_file(inv.model_path));
        Property prop;
        if (inv.property_path) prop = parse_property(read_file(*inv.property_path));
        if (!inv.targets.empty()) prop.targets = inv.targets;
        if (inv.minimize) prop.minimize = inv.minimize;
        if (prop.targets.empty()) throw ModelError("no target locations (use --targets or --property)");
        std::vector<std::size_t> targets = resolve_targets(pta, prop.targets);

        std::ofstream trace_file;
        if (inv.trace_path) {
            trace_file.open(*inv.trace_path);
            if (!trace_file) throw std::runtime_error("cannot write trace file " + *inv.trace_path);
        }
        Outcome o = dispatch(inv, pta, targets, prop, inv.trace_path ? &trace_file : nullptr);

        out << (inv.output == OutputMode::Text ? render_text(o.result, o.names)
                                               : render_structured(o.result, o.names));
        err << render_stats(o.result.stats) << '\n';
        if (o.result.status == Status::Partial) err << "limit reached: result is partial\n";
        if (inv.verify_samples > 0 && verify(o, targets, inv.verify_samples, err) > 0) return ExitError;
        return o.result.status == Status::Complete ? ExitComplete : ExitPartial;
    } catch (const ModelError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return ExitError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliInvocation inv;
    try {
        inv = parse_invocation(args);
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return ExitError;
    }
    return run(inv, out, err);
}

}  // namespace ptsynth
