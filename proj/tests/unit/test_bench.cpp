#include "ptsynth/bench.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <map>
#include <sstream>

using namespace ptsynth;

namespace {

std::string model(const std::string& name) { return std::string(PTSYNTH_MODEL_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BenchRecord rec(const std::string& m, const std::string& c, BenchStatus s, double ms) {
    BenchRecord r;
    r.model = m;
    r.config = c;
    r.status = s;
    r.wall_ms = ms;
    return r;
}

}  // namespace

TEST_CASE("six configurations") {
    auto cs = default_configs();
    std::vector<std::string> names;
    for (const auto& c : cs) names.push_back(c.name);
    CHECK(names == std::vector<std::string>{"MTReach", "MTSynth", "MTSynth-noRed", "MPReach", "MPSynth", "EFSynth"});
    BenchEntry e{"m.pta", "m.prop", {"--max-states", "10"}, std::nullopt};
    auto args = bench_arguments(e, cs[2]);
    CHECK(args == std::vector<std::string>{"m.pta", "--property", "m.prop", "--algorithm", "mintime",
                                           "--no-inclusion", "--merge", "off", "--max-states", "10", "--output",
                                           "structured"});
}

TEST_CASE("manifest parsing") {
    auto es = parse_manifest("# comment\n\na.pta;a.prop;;2\n/abs/b.pta ; b.prop ; --merge off --max-states 5\n",
                             "dir");
    REQUIRE(es.size() == 2);
    CHECK(es[0].model == "dir/a.pta");
    CHECK(es[0].property == "dir/a.prop");
    CHECK(es[0].overrides.empty());
    CHECK(es[0].expected == "2");
    CHECK(es[1].model == "/abs/b.pta");
    CHECK(es[1].overrides == std::vector<std::string>{"--merge", "off", "--max-states", "5"});
    CHECK_FALSE(es[1].expected);
    CHECK_THROWS_AS(parse_manifest("only-one-field\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_manifest(";x.prop;\n"), std::invalid_argument);

    auto suite = parse_manifest(slurp(model("suite.txt")), PTSYNTH_MODEL_DIR);
    CHECK(suite.size() == 6);
}

TEST_CASE("records from process output") {
    std::string json = R"({"algorithm":"mintime","optimum":{"value":"405","strictness":"="},)"
                       R"("constraint":[["D1 = 25","D2 = 15"]],"stats":{"popped":7,"pushed":9,)"
                       R"("inclusion_hits":0,"merge_events":0,"peak_waiting":1},"status":"complete"})";
    auto ok = record_from_output("train", "MTSynth", 0, json, "", 12.5);
    CHECK(ok.status == BenchStatus::Ok);
    CHECK(ok.optimum == "405");
    CHECK(ok.popped == 7);
    CHECK(ok.pushed == 9);
    CHECK(ok.disjuncts == 1);

    auto partial = record_from_output("train", "MTSynth", 2, json, "", 1);
    CHECK(partial.status == BenchStatus::Partial);
    CHECK(partial.optimum.empty());

    auto err = record_from_output("train", "MTSynth", 1, "", "error: no target locations\nmore", 1);
    CHECK(err.status == BenchStatus::Error);
    CHECK(err.detail == "error: no target locations");

    std::string strict = R"({"optimum":{"value":"5","strictness":">"},"constraint":[],)"
                         R"("stats":{"popped":1,"pushed":1}})";
    CHECK(record_from_output("lu", "MTSynth", 0, strict, "", 1).optimum == "(5,>)");
    std::string inf = R"({"optimum":"infinity","constraint":[],"stats":{"popped":1,"pushed":1}})";
    CHECK(record_from_output("u", "MTSynth", 0, inf, "", 1).optimum == "infinity");
    CHECK(record_from_output("u", "MTSynth", 0, "garbage", "", 1).status == BenchStatus::Error);
}

TEST_CASE("csv") {
    std::ostringstream out;
    auto r = rec("m", "EFSynth", BenchStatus::Ok, 1.25);
    r.popped = 3;
    r.pushed = 4;
    r.optimum = "0";
    r.disjuncts = 2;
    write_csv({r, rec("m", "MTSynth", BenchStatus::Timeout, 60000)}, out);
    CHECK(out.str() ==
          "model,config,status,wall_ms,popped,pushed,optimum,disjuncts\n"
          "m,EFSynth,ok,1.2,3,4,0,2\n"
          "m,MTSynth,timeout,60000.0,0,0,,0\n");
}

TEST_CASE("scatter data") {
    SECTION("empty input gives a header only") {
        std::ostringstream out;
        emit_scatter({}, "MTSynth", "EFSynth", 60, out);
        CHECK(out.str() == "# x=MTSynth y=EFSynth (wall ms; flag 1 = timeout clamped to 60000)\n");
    }
    SECTION("one line per model, timeouts clamped and flagged") {
        std::vector<BenchRecord> rs = {rec("a", "MTSynth", BenchStatus::Ok, 10), rec("a", "EFSynth", BenchStatus::Ok, 20),
                                       rec("b", "MTSynth", BenchStatus::Ok, 5),
                                       rec("b", "EFSynth", BenchStatus::Timeout, 61234),
                                       rec("c", "MTSynth", BenchStatus::Ok, 5)};
        std::ostringstream out;
        emit_scatter(rs, "MTSynth", "EFSynth", 60, out);
        std::istringstream in(out.str());
        std::string header, l1, l2, extra;
        std::getline(in, header);
        std::getline(in, l1);
        std::getline(in, l2);
        CHECK(l1 == "10.0 20.0 0");
        CHECK(l2 == "5.0 60000.0 1");
        CHECK_FALSE(std::getline(in, extra));
    }
}

TEST_CASE("expectations") {
    BenchSuite s;
    s.entries = {BenchEntry{"m", "p", {}, std::string("405")}};
    auto good = rec("m", "MTSynth", BenchStatus::Ok, 1);
    good.optimum = "405";
    auto bad = rec("m", "MPSynth", BenchStatus::Ok, 1);
    bad.optimum = "404";
    auto ef = rec("m", "EFSynth", BenchStatus::Ok, 1);
    ef.optimum = "0";
    CHECK(check_expectations(s, {good, ef}).empty());
    CHECK(check_expectations(s, {good, bad, ef}).size() == 1);
}

TEST_CASE("suite runs in separate processes") {
    BenchSuite s;
    s.cli_path = PTSYNTH_CLI;
    s.entries = parse_manifest("minparam.pta;minparam.prop;;2\noneclock.pta;oneclock.prop;;3\n"
                               "lu.pta;lu.prop;;(5,>)\nunreachable.pta;unreachable.prop;;infinity\n"
                               "missing.pta;minparam.prop;\n",
                               PTSYNTH_MODEL_DIR);
    auto rs = run_suite(s);
    REQUIRE(rs.size() == 5 * 6);
    std::map<std::pair<std::string, std::string>, BenchRecord> by;
    for (const auto& r : rs) by[{r.model, r.config}] = r;
    for (const auto& r : rs) {
        if (r.model == model("missing.pta")) {
            CHECK(r.status == BenchStatus::Error);
            continue;
        }
        CHECK(r.status == BenchStatus::Ok);
    }
    CHECK(check_expectations(s, rs).empty());
    for (const char* m : {"minparam.pta", "oneclock.pta", "lu.pta", "unreachable.pta"}) {
        auto get = [&](const char* c) { return by[{model(m), c}]; };
        CHECK(get("MTSynth-noRed").popped >= get("MTSynth").popped);
        CHECK(get("MTReach").popped <= get("MTSynth").popped);
        CHECK(get("MTSynth").popped <= get("EFSynth").popped);
    }
    CHECK(by[{model("minparam.pta"), "EFSynth"}].disjuncts == 3);
}

TEST_CASE("timeouts are enforced") {
    BenchSuite s;
    s.cli_path = PTSYNTH_CLI;
    s.timeout_seconds = 0.3;
    s.configs = {default_configs()[5]};
    s.entries = parse_manifest("train.pta;train.prop;\n", PTSYNTH_MODEL_DIR);
    auto rs = run_suite(s);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == BenchStatus::Timeout);
    CHECK(rs[0].optimum.empty());
    CHECK(rs[0].wall_ms == 300.0);

    s.timeout_seconds = 0;
    CHECK_THROWS_AS(run_suite(s), std::invalid_argument);
}

TEST_CASE("a missing executable is a per-row error") {
    BenchSuite s;
    s.cli_path = "/nonexistent/ptsynth";
    s.configs = {default_configs()[0]};
    s.entries = parse_manifest("minparam.pta;minparam.prop;\n", PTSYNTH_MODEL_DIR);
    auto rs = run_suite(s);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == BenchStatus::Error);
}
