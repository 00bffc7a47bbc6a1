#include "ptsynth/concrete.hpp"
#include "ptsynth/parser.hpp"
#include "ptsynth/result_io.hpp"
#include "ptsynth/sampling.hpp"
#include "ptsynth/synth.hpp"
#include "ptsynth/transform.hpp"
#include "poly_text.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace ptsynth;
using ptsynth::testing::poly;

namespace {

const std::vector<std::string> P = {"p1", "p2", "p3"};

Pta load(const std::string& name) { return parse_model(read_file(std::string(PTSYNTH_MODEL_DIR) + "/" + name)); }

// Parameters range over nonnegative values.
DisjunctiveConstraint union_of(const std::vector<std::string>& names, std::initializer_list<const char*> parts) {
    std::string nonneg;
    for (const auto& n : names) nonneg += " && " + n + " >= 0";
    DisjunctiveConstraint k(names.size());
    for (const char* p : parts) k.add(poly(names, std::string(p) + nonneg));
    return k;
}

struct KeyLog : ExplorationObserver {
    std::vector<Minimum> keys;
    std::vector<std::pair<Polyhedron, Polyhedron>> steps;  // (from, to) zones
    void on_pop(std::size_t, const Minimum& key) override { keys.push_back(key); }
    void on_successor(const SymbolicState& from, std::size_t, const SymbolicState& to) override {
        steps.emplace_back(from.zone, to.zone);
    }
};

}  // namespace

TEST_CASE("ef_synth") {
    Pta pta = load("minparam.pta");
    std::vector<std::size_t> l3 = {2};
    auto r = ef_synth(pta, l3);
    CHECK(r.status == Status::Complete);
    CHECK(equivalent(r.k, union_of(P, {"p1 > 2", "p1 = 2 && 1 < p2 < 2", "p1 = 2 && p3 = 2 && p2 > 1"})));

    std::vector<std::size_t> init = {0};
    CHECK(equivalent(ef_synth(pta, init).k, union_of(P, {"0 = 0"})));

    Pta un = load("unreachable.pta");
    auto none = ef_synth(un, resolve_targets(un, {"goal"}));
    CHECK(none.k.is_false());
    CHECK(none.status == Status::Complete);
}

TEST_CASE("min_param_synth on the worked example") {
    Pta pta = load("minparam.pta");
    std::vector<std::size_t> l3 = {2};
    auto r = min_param_synth(pta, l3, 0);
    CHECK(r.opt == Minimum::attained(2));
    CHECK(equivalent(r.k, union_of(P, {"p1 = 2 && 1 < p2 < 2", "p1 = 2 && p3 = 2 && p2 > 1"})));
    CHECK(render_constraint(r.k, P) ==
          "(p1 = 2 && p2 > 1 && p2 < 2 && p3 >= 0) or (p1 = 2 && p2 > 1 && p3 = 2)");

    SECTION("verbatim accumulation") {
        AlgoConfig cfg;
        cfg.minparam_k = MinParamK::Verbatim;
        auto v = min_param_synth(pta, l3, 0, cfg);
        CHECK(v.opt == Minimum::attained(2));
        CHECK(equivalent(v.k, r.k));
    }
    SECTION("reach variant") {
        auto reach = min_param_reach(pta, l3, 0);
        CHECK(reach.opt == Minimum::attained(2));
        CHECK(reach.k.size() == 1);
        CHECK(includes(r.k, reach.k));
    }
    SECTION("unreachable target") {
        Pta un = load("unreachable.pta");
        auto none = min_param_synth(un, resolve_targets(un, {"goal"}), 0);
        CHECK(none.opt.is_infinite());
        CHECK(none.k.is_false());
    }
}

TEST_CASE("trace of the worked example") {
    Pta pta = load("minparam.pta");
    std::ostringstream out;
    TraceWriter trace(pta, out);
    AlgoConfig cfg;
    cfg.observer = &trace;
    std::vector<std::size_t> l3 = {2};
    min_param_synth(pta, l3, 0, cfg);
    CHECK(out.str() ==
          "0 | l1 | x >= 0 && p1 >= 0 && p2 >= 0 && p3 >= 0 | - | -\n"
          "1 | l3 | x >= 2 && p1 > 2 && p2 >= 0 && p3 >= 0 | 0 | 0\n"
          "2 | l2 | x >= 0 && p1 >= 0 && p2 > 1 && p3 >= 0 | 0 | 1\n"
          "3 | l3 | x >= 2 && p1 = 2 && p2 > 1 && p2 < 2 && p3 >= 0 | 2 | 2\n"
          "4 | l3 | x >= 2 && p1 = 2 && p2 > 1 && p3 = 2 | 2 | 3\n");
}

TEST_CASE("min_time_synth") {
    SECTION("initial location is a target") {
        Pta pta = load("minparam.pta");
        auto g = instrument_global_clock(pta);
        std::vector<std::size_t> init = {0};
        auto r = min_time_synth(g.pta, init, g.index);
        CHECK(r.opt == Minimum::attained(0));
        CHECK(equivalent(r.k, union_of(P, {"0 = 0"})));
    }
    SECTION("strict guard on the global clock") {
        Pta pta = parse_model("clocks t; params p; actions;\nglobal t;\ninit loc a;\nloc b;\n"
                              "edge a -> b when t > 1 && t <= p;");
        std::vector<std::size_t> b = {1};
        auto r = min_time_synth(pta, b, 0);
        CHECK(r.opt == Minimum::infimum(1));
        CHECK(equivalent(r.k, union_of({"p"}, {"p > 1"})));

        AlgoConfig eps;
        eps.strict_min = StrictMinMode::Epsilon;
        eps.epsilon = Rational(1, 4);
        auto e = min_time_synth(pta, b, 0, eps);
        CHECK(e.opt == Minimum::infimum(1));
        CHECK(e.opt == Minimum::infimum(1));
        CHECK(equivalent(e.k, union_of({"p"}, {"p > 1"})));
    }
    SECTION("closure and epsilon slices differ") {
        Pta pta = parse_model("clocks t; params p; actions;\nglobal t;\ninit loc a;\nloc b;\n"
                              "edge a -> b when t > 1 && t >= p;");
        std::vector<std::size_t> b = {1};
        auto c = min_time_synth(pta, b, 0);
        CHECK(c.opt == Minimum::infimum(1));
        CHECK(equivalent(c.k, union_of({"p"}, {"p <= 1"})));
        AlgoConfig eps;
        eps.strict_min = StrictMinMode::Epsilon;
        eps.epsilon = Rational(1, 4);
        auto e = min_time_synth(pta, b, 0, eps);
        CHECK(equivalent(e.k, union_of({"p"}, {"p <= 5/4"})));
    }
    SECTION("reset global clock is refused") {
        Pta pta = load("minparam.pta");
        std::vector<std::size_t> l3 = {2};
        CHECK_THROWS_AS(min_time_synth(pta, l3, 0), ModelError);
    }
    SECTION("worked example") {
        Pta pta = load("minparam.pta");
        auto g = instrument_global_clock(pta);
        std::vector<std::size_t> l3 = {2};
        auto r = min_time_synth(g.pta, l3, g.index);
        CHECK(r.opt == Minimum::attained(2));
        CHECK(equivalent(r.k, union_of(P, {"p1 > 2"})));
        auto reach = min_time_reach(g.pta, l3, g.index);
        CHECK(reach.opt == Minimum::attained(2));
        CHECK(includes(r.k, reach.k));
    }
    SECTION("unreachable") {
        Pta pta = load("unreachable.pta");
        auto g = instrument_global_clock(pta);
        auto r = min_time_reach(g.pta, resolve_targets(g.pta, {"goal"}), g.index);
        CHECK(r.opt.is_infinite());
        CHECK(r.k.is_false());
    }
}

TEST_CASE("time as a parameter agrees with min_time_synth") {
    for (const char* name : {"minparam.pta", "oneclock.pta", "lu.pta", "unreachable.pta"}) {
        Pta pta = load(name);
        auto g = instrument_global_clock(pta);
        auto targets = resolve_targets(pta, {name == std::string("minparam.pta") ? "l3"
                                             : name == std::string("oneclock.pta") ? "done"
                                                                                   : "goal"});
        auto mt = min_time_synth(g.pta, targets, g.index);
        auto inst = instrument_min_time_as_param(g.pta, targets, g.index);
        auto mp = min_param_synth(inst.pta, targets, inst.index);
        CHECK(mp.opt == mt.opt);
        CHECK(equivalent(mp.k.project_prefix(pta.params.size()), mt.k));
    }
}

TEST_CASE("L/U fast path") {
    Pta pta = parse_model("clocks x, t; params pl, pu; actions;\nglobal t;\ninit loc a;\nloc b;\nloc c;\n"
                          "edge a -> b when x >= pl && x <= pu reset {x};\nedge b -> c when x = 3;");
    std::vector<std::size_t> c = {2};
    CHECK(lu_min_time_fast_path(pta, c, 1) == min_time_reach(pta, c, 1).opt);
    CHECK(lu_min_time_fast_path(pta, c, 1) == Minimum::attained(3));

    Pta plain = parse_model("clocks x, t; params; actions;\nglobal t;\ninit loc a;\nloc b;\n"
                            "edge a -> b when x >= 2;");
    std::vector<std::size_t> b = {1};
    CHECK(lu_min_time_fast_path(plain, b, 1) == min_time_reach(plain, b, 1).opt);

    auto g = instrument_global_clock(load("minparam.pta"));
    std::vector<std::size_t> l3 = {2};
    CHECK_THROWS_AS(lu_min_time_fast_path(g.pta, l3, g.index), ModelError);
}

TEST_CASE("inclusion filter") {
    const std::vector<std::string> X = {"x", "p"};
    std::vector<SymbolicState> seen = {{0, poly(X, "p > 2")}};
    SECTION("included zone is dropped") {
        std::vector<SymbolicState> c = {{0, poly(X, "p > 5")}};
        CHECK(apply_inclusion_filter(c, seen).empty());
    }
    SECTION("larger zone is kept") {
        std::vector<SymbolicState> c = {{0, poly(X, "p > 1")}};
        CHECK(apply_inclusion_filter(c, seen).size() == 1);
    }
    SECTION("different location is kept") {
        std::vector<SymbolicState> c = {{1, poly(X, "p > 5")}};
        CHECK(apply_inclusion_filter(c, seen).size() == 1);
    }
    SECTION("equal zone is dropped") {
        std::vector<SymbolicState> c = {{0, poly(X, "p > 2")}};
        CHECK(apply_inclusion_filter(c, seen).empty());
    }
}

TEST_CASE("merge pass") {
    const std::vector<std::string> X = {"x"};
    std::vector<Polyhedron> adj = {poly(X, "0 <= x <= 1"), poly(X, "1 <= x <= 2")};
    auto m = merge_pass(adj);
    REQUIRE(m.zones.size() == 1);
    CHECK(m.zones[0] == poly(X, "0 <= x <= 2"));
    CHECK(m.merges == 1);
    CHECK(m.sources[0] == std::vector<std::size_t>{0, 1});

    std::vector<Polyhedron> gap = {poly(X, "x <= 0"), poly(X, "x >= 1")};
    auto g = merge_pass(gap);
    CHECK(g.zones.size() == 2);
    CHECK(g.merges == 0);

    std::vector<Polyhedron> chain = {poly(X, "0 <= x <= 1"), poly(X, "2 <= x <= 3"), poly(X, "1 <= x <= 2")};
    auto c = merge_pass(chain);
    REQUIRE(c.zones.size() == 1);
    CHECK(c.zones[0] == poly(X, "0 <= x <= 3"));
}

TEST_CASE("reductions do not change results") {
    for (const char* name : {"minparam.pta", "oneclock.pta", "lu.pta"}) {
        Pta pta = load(name);
        auto targets = resolve_targets(pta, {pta.locations.back().name == "l3"    ? "l3"
                                             : pta.locations.back().name == "done" ? "done"
                                                                                   : "goal"});
        AlgoConfig none, incl, both;
        none.inclusion = false;
        none.merge = MergePolicy::Off;
        incl.merge = MergePolicy::Off;
        auto a = ef_synth(pta, targets, none);
        CHECK(equivalent(a.k, ef_synth(pta, targets, incl).k));
        CHECK(equivalent(a.k, ef_synth(pta, targets, both).k));
        auto m0 = min_param_synth(pta, targets, 0, none);
        auto m1 = min_param_synth(pta, targets, 0, both);
        CHECK(m0.opt == m1.opt);
        CHECK(equivalent(m0.k, m1.k));
        auto g = instrument_global_clock(pta);
        auto t0 = min_time_synth(g.pta, targets, g.index, none);
        auto t1 = min_time_synth(g.pta, targets, g.index, both);
        CHECK(t0.opt == t1.opt);
        CHECK(equivalent(t0.k, t1.k));
        CHECK(t1.stats.popped <= t0.stats.popped);
    }
}

TEST_CASE("pop keys are non-decreasing and projections shrink") {
    for (const char* name : {"minparam.pta", "oneclock.pta", "lu.pta"}) {
        Pta pta = load(name);
        auto g = instrument_global_clock(pta);
        auto targets = resolve_targets(pta, {pta.locations.back().name == "l3"    ? "l3"
                                             : pta.locations.back().name == "done" ? "done"
                                                                                   : "goal"});
        KeyLog log;
        AlgoConfig cfg;
        cfg.observer = &log;
        auto r = min_time_synth(g.pta, targets, g.index, cfg);
        REQUIRE_FALSE(log.keys.empty());
        for (std::size_t i = 1; i < log.keys.size(); ++i) CHECK(log.keys[i - 1] <= log.keys[i]);
        auto params = g.pta.param_vars();
        for (const auto& [from, to] : log.steps) CHECK(includes(from.project(params), to.project(params)));
        CHECK(log.keys.size() == r.stats.popped);
    }
}

TEST_CASE("state limit gives a partial, sound result") {
    Pta pta = load("minparam.pta");
    std::vector<std::size_t> l3 = {2};
    AlgoConfig cfg;
    cfg.max_states = 2;
    auto r = ef_synth(pta, l3, cfg);
    CHECK(r.status == Status::Partial);
    CHECK(includes(ef_synth(pta, l3).k, r.k));
    std::mt19937_64 rng(7);
    for (const auto& d : r.k.disjuncts())
        for (const auto& v : sample_points(d.constraint, 3, rng)) CHECK(replay_witnesses(pta, d, v, l3).reached);
}

TEST_CASE("witnesses replay for every disjunct") {
    Pta pta = load("minparam.pta");
    std::vector<std::size_t> l3 = {2};
    std::mt19937_64 rng(11);
    auto r = ef_synth(pta, l3);
    for (const auto& d : r.k.disjuncts()) {
        REQUIRE_FALSE(d.witnesses.empty());
        for (const auto& v : sample_points(d.constraint, 4, rng)) {
            CHECK(d.constraint.contains(v));
            CHECK(replay_witnesses(pta, d, v, l3).reached);
        }
    }
}

TEST_CASE("configuration validation") {
    AlgoConfig cfg;
    cfg.merge = MergePolicy::Every;
    cfg.merge_every = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    AlgoConfig eps;
    eps.strict_min = StrictMinMode::Epsilon;
    eps.epsilon = 0;
    CHECK_THROWS_AS(eps.validate(), std::invalid_argument);
}

TEST_CASE("structured rendering") {
    Pta pta = load("minparam.pta");
    std::vector<std::size_t> l3 = {2};
    auto r = min_param_synth(pta, l3, 0);
    auto s = render_structured(r, P);
    CHECK(s.find("\"optimum\":{\"value\":\"2\",\"strictness\":\"=\"}") != std::string::npos);
    CHECK(s.find('\n') == s.size() - 1);
    CHECK(s == render_structured(min_param_synth(pta, l3, 0), P));
    DisjunctiveConstraint empty(3);
    CHECK(render_constraint(empty, P) == "false");
    CHECK(render_constraint(DisjunctiveConstraint::universe(3), P) == "true");
}
