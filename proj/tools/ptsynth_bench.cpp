#include "ptsynth/bench.hpp"
#include "ptsynth/parser.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Runs the six configurations over a model suite", "ptsynth-bench"};
    std::string manifest;
    std::string csv_path = "bench.csv";
    std::string scatter_dir;
    std::string cli;
    double timeout = 60;
    unsigned jobs = 1;
    app.add_option("manifest", manifest, "Suite manifest (model;property;overrides[;expected])")->required();
    app.add_option("--csv", csv_path, "CSV output path");
    app.add_option("--scatter-dir", scatter_dir, "Directory for scatter data files");
    app.add_option("--timeout", timeout, "Per-run timeout in seconds");
    app.add_option("--cli", cli, "ptsynth executable (default: next to this program)");
    app.add_option("--jobs", jobs, "Concurrent runs");
    CLI11_PARSE(app, argc, argv);

    try {
        ptsynth::BenchSuite suite;
        auto base = std::filesystem::path(manifest).parent_path().string();
        suite.entries = ptsynth::parse_manifest(ptsynth::read_file(manifest), base);
        suite.timeout_seconds = timeout;
        suite.jobs = jobs;
        suite.cli_path = cli.empty() ? (std::filesystem::path(argv[0]).parent_path() / "ptsynth").string() : cli;

        auto records = ptsynth::run_suite(suite);
        std::ofstream csv(csv_path);
        ptsynth::write_csv(records, csv);
        for (const auto& r : records) {
            std::cerr << r.model << ' ' << r.config << ' ' << ptsynth::to_string(r.status) << ' ' << r.wall_ms << " ms";
            if (!r.detail.empty()) std::cerr << " (" << r.detail << ')';
            std::cerr << '\n';
        }
        if (!scatter_dir.empty()) {
            std::filesystem::create_directories(scatter_dir);
            const std::pair<const char*, const char*> pairs[] = {
                {"MTSynth", "EFSynth"}, {"MPSynth", "EFSynth"}, {"MTSynth", "MPSynth"}, {"MTSynth", "MTSynth-noRed"}};
            for (auto [x, y] : pairs) {
                std::ofstream out(std::filesystem::path(scatter_dir) / (std::string(x) + "-vs-" + y + ".dat"));
                ptsynth::emit_scatter(records, x, y, timeout, out);
            }
        }
        auto mismatches = ptsynth::check_expectations(suite, records);
        for (const auto& m : mismatches) std::cerr << "mismatch: " << m << '\n';
        return mismatches.empty() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
