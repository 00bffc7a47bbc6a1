#include "ptsynth/bench.hpp"

#include <json.hpp>

#include <fcntl.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

extern char** environ;

namespace ptsynth {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string render_optimum(const nlohmann::json& opt) {
    if (opt.is_string()) return opt.get<std::string>();
    std::string value = opt.at("value").get<std::string>();
    if (opt.at("strictness").get<std::string>() == "=") return value;
    return "(" + value + ",>)";
}

struct Running {
    std::size_t index;
    pid_t pid;
    std::filesystem::path out_file;
    std::filesystem::path err_file;
    std::chrono::steady_clock::time_point start;
};

pid_t spawn(const std::string& exe, const std::vector<std::string>& args, const std::filesystem::path& out,
            const std::filesystem::path& err) {
    posix_spawn_file_actions_t fa;
    posix_spawn_file_actions_init(&fa);
    posix_spawn_file_actions_addopen(&fa, STDOUT_FILENO, out.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    posix_spawn_file_actions_addopen(&fa, STDERR_FILENO, err.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    std::vector<std::string> all = {exe};
    all.insert(all.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : all) argv.push_back(a.data());
    argv.push_back(nullptr);
    pid_t pid = -1;
    int rc = posix_spawn(&pid, exe.c_str(), &fa, nullptr, argv.data(), environ);
    posix_spawn_file_actions_destroy(&fa);
    if (rc != 0) return -1;
    return pid;
}

}  // namespace

std::vector<BenchConfig> default_configs() {
    return {
        {"MTReach", {"--algorithm", "mintime-reach"}},
        {"MTSynth", {"--algorithm", "mintime"}},
        {"MTSynth-noRed", {"--algorithm", "mintime", "--no-inclusion", "--merge", "off"}},
        {"MPReach", {"--algorithm", "mintime-reach", "--time-as-param"}},
        {"MPSynth", {"--algorithm", "mintime", "--time-as-param"}},
        {"EFSynth", {"--algorithm", "efsynth"}},
    };
}

const char* to_string(BenchStatus s) {
    switch (s) {
        case BenchStatus::Ok: return "ok";
        case BenchStatus::Timeout: return "timeout";
        case BenchStatus::Partial: return "partial";
        case BenchStatus::Error: return "error";
    }
    return "?";
}

std::vector<BenchEntry> parse_manifest(const std::string& text, const std::string& base_dir) {
    std::vector<BenchEntry> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto resolve = [&](const std::string& p) {
        if (p.empty() || base_dir.empty() || std::filesystem::path(p).is_absolute()) return p;
        return (std::filesystem::path(base_dir) / p).string();
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto fields = split(t, ';');
        if (fields.size() < 3 || fields.size() > 4)
            throw std::invalid_argument("manifest line " + std::to_string(lineno) +
                                        ": expected model;property;overrides[;expected]");
        BenchEntry e;
        e.model = resolve(trim(fields[0]));
        e.property = resolve(trim(fields[1]));
        if (e.model.empty() || e.property.empty())
            throw std::invalid_argument("manifest line " + std::to_string(lineno) + ": empty model or property");
        std::istringstream flags(fields[2]);
        for (std::string f; flags >> f;) e.overrides.push_back(f);
        if (fields.size() == 4 && !trim(fields[3]).empty()) e.expected = trim(fields[3]);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<std::string> bench_arguments(const BenchEntry& entry, const BenchConfig& config) {
    std::vector<std::string> args = {entry.model, "--property", entry.property};
    args.insert(args.end(), config.flags.begin(), config.flags.end());
    args.insert(args.end(), entry.overrides.begin(), entry.overrides.end());
    args.push_back("--output");
    args.push_back("structured");
    return args;
}

BenchRecord record_from_output(const std::string& model, const std::string& config, int exit_code,
                               const std::string& stdout_text, const std::string& stderr_text, double wall_ms) {
    BenchRecord r;
    r.model = model;
    r.config = config;
    r.wall_ms = wall_ms;
    if (exit_code != 0 && exit_code != 2) {
        r.status = BenchStatus::Error;
        r.detail = stderr_text.substr(0, stderr_text.find('\n'));
        return r;
    }
    try {
        auto j = nlohmann::json::parse(stdout_text);
        r.popped = j.at("stats").at("popped").get<std::size_t>();
        r.pushed = j.at("stats").at("pushed").get<std::size_t>();
        r.disjuncts = j.at("constraint").size();
        if (exit_code == 0) {
            r.status = BenchStatus::Ok;
            r.optimum = render_optimum(j.at("optimum"));
        } else {
            r.status = BenchStatus::Partial;
        }
    } catch (const std::exception& e) {
        r.status = BenchStatus::Error;
        r.detail = std::string("unreadable output: ") + e.what();
    }
    return r;
}

std::vector<BenchRecord> run_suite(const BenchSuite& suite) {
    if (suite.timeout_seconds <= 0) throw std::invalid_argument("bench timeout must be positive");
    if (suite.cli_path.empty()) throw std::invalid_argument("bench needs the ptsynth executable path");

    struct Job {
        const BenchEntry* entry;
        const BenchConfig* config;
    };
    std::vector<Job> jobs;
    for (const auto& e : suite.entries)
        for (const auto& c : suite.configs) jobs.push_back({&e, &c});
    std::vector<BenchRecord> records(jobs.size());

    auto tmp = std::filesystem::temp_directory_path() / ("ptsynth-bench-" + std::to_string(::getpid()));
    std::filesystem::create_directories(tmp);

    std::vector<Running> running;
    std::size_t next = 0;
    const unsigned width = std::max(1u, suite.jobs);
    const auto limit = std::chrono::duration<double>(suite.timeout_seconds);

    auto finish = [&](const Running& r, int exit_code, bool timed_out) {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - r.start).count();
        const Job& job = jobs[r.index];
        if (timed_out) {
            BenchRecord rec;
            rec.model = job.entry->model;
            rec.config = job.config->name;
            rec.status = BenchStatus::Timeout;
            rec.wall_ms = suite.timeout_seconds * 1000.0;
            records[r.index] = rec;
        } else {
            records[r.index] = record_from_output(job.entry->model, job.config->name, exit_code, slurp(r.out_file),
                                                  slurp(r.err_file), ms);
        }
        std::filesystem::remove(r.out_file);
        std::filesystem::remove(r.err_file);
    };

    while (next < jobs.size() || !running.empty()) {
        while (running.size() < width && next < jobs.size()) {
            std::size_t i = next++;
            Running r{i, -1, tmp / (std::to_string(i) + ".out"), tmp / (std::to_string(i) + ".err"),
                      std::chrono::steady_clock::now()};
            r.pid = spawn(suite.cli_path, bench_arguments(*jobs[i].entry, *jobs[i].config), r.out_file, r.err_file);
            if (r.pid < 0) {
                BenchRecord rec;
                rec.model = jobs[i].entry->model;
                rec.config = jobs[i].config->name;
                rec.detail = "cannot start " + suite.cli_path;
                records[i] = rec;
                continue;
            }
            running.push_back(r);
        }
        bool progressed = false;
        for (std::size_t k = 0; k < running.size();) {
            Running& r = running[k];
            int status = 0;
            pid_t done = ::waitpid(r.pid, &status, WNOHANG);
            bool timed_out = false;
            if (done == 0 && std::chrono::steady_clock::now() - r.start > limit) {
                ::kill(r.pid, SIGKILL);
                ::waitpid(r.pid, &status, 0);
                timed_out = true;
                done = r.pid;
            }
            if (done == r.pid) {
                int code = WIFEXITED(status) ? WEXITSTATUS(status) : 1;
                finish(r, code, timed_out);
                running.erase(running.begin() + static_cast<long>(k));
                progressed = true;
            } else {
                ++k;
            }
        }
        if (!progressed && !running.empty()) std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
    std::filesystem::remove_all(tmp);
    return records;
}

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "model,config,status,wall_ms,popped,pushed,optimum,disjuncts\n";
    for (const auto& r : records) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.1f", r.wall_ms);
        out << r.model << ',' << r.config << ',' << to_string(r.status) << ',' << ms << ',' << r.popped << ','
            << r.pushed << ',' << r.optimum << ',' << r.disjuncts << '\n';
    }
}

void emit_scatter(const std::vector<BenchRecord>& records, const std::string& config_x, const std::string& config_y,
                  double timeout_seconds, std::ostream& out) {
    out << "# x=" << config_x << " y=" << config_y << " (wall ms; flag 1 = timeout clamped to "
        << timeout_seconds * 1000.0 << ")\n";
    std::map<std::string, const BenchRecord*> xs, ys;
    std::vector<std::string> order;
    for (const auto& r : records) {
        if (r.config == config_x) {
            if (!xs.count(r.model) && !ys.count(r.model)) order.push_back(r.model);
            xs[r.model] = &r;
        } else if (r.config == config_y) {
            if (!xs.count(r.model) && !ys.count(r.model)) order.push_back(r.model);
            ys[r.model] = &r;
        }
    }
    const double cap = timeout_seconds * 1000.0;
    for (const auto& m : order) {
        auto x = xs.find(m);
        auto y = ys.find(m);
        if (x == xs.end() || y == ys.end()) continue;
        bool tx = x->second->status == BenchStatus::Timeout;
        bool ty = y->second->status == BenchStatus::Timeout;
        char line[96];
        std::snprintf(line, sizeof line, "%.1f %.1f %d\n", tx ? cap : x->second->wall_ms, ty ? cap : y->second->wall_ms,
                      (tx || ty) ? 1 : 0);
        out << line;
    }
}

std::vector<std::string> check_expectations(const BenchSuite& suite, const std::vector<BenchRecord>& records) {
    std::vector<std::string> out;
    for (const auto& e : suite.entries) {
        if (!e.expected) continue;
        for (const auto& r : records) {
            if (r.model != e.model || r.status != BenchStatus::Ok || r.config == "EFSynth") continue;
            if (r.optimum != *e.expected)
                out.push_back(r.model + " " + r.config + ": optimum " + r.optimum + ", expected " + *e.expected);
        }
    }
    return out;
}

}  // namespace ptsynth
