#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "harness/bench.hpp"
#include "harness/runner.hpp"
#include "harness/workload.hpp"
#include "ptrie/analysis.hpp"

namespace hn = ptrie::harness;

namespace {

int cmd_gen(const std::string& mode_s, uint32_t k, uint64_t ops, const std::string& dist_s,
            uint64_t seed, const std::string& out, bool pq_only) {
    const auto mode = hn::mode_from_name(mode_s);
    if (!mode) {
        std::cerr << "gen: unknown mode '" << mode_s << "'\n";
        return 2;
    }
    const auto dist = hn::dist_from_name(dist_s);
    if (!dist) {
        std::cerr << "gen: unknown distribution '" << dist_s << "'\n";
        return 2;
    }
    const hn::Workload w = hn::gen_workload(*mode, k, ops, *dist, seed, pq_only);
    if (out.empty() || out == "-") {
        hn::write_workload(w, std::cout);
    } else {
        hn::write_workload_file(w, out);
        std::cout << "wrote " << w.ops.size() << " ops to " << out << "\n";
    }
    return 0;
}

int cmd_diff(const std::string& workload_path, bool paranoid, bool json_out,
             const std::string& repro_out) {
    const hn::Workload w = hn::read_workload_file(workload_path);
    hn::DiffOptions opt;
    opt.paranoid = paranoid;
    const hn::RunReport report = hn::diff_run(w, opt);
    if (json_out) {
        std::cout << hn::report_to_json(report) << "\n";
    } else {
        std::cout << report.name << ": " << report.ops << " ops, "
                  << report.mismatches.size() << " mismatches, " << report.violations
                  << " violations, " << report.bound_violations << " bound violations\n";
        std::cout << "  max layer_visits=" << report.max_layer_visits
                  << " max bst_comparisons=" << report.max_bst_comparisons
                  << " depth_max=" << report.depth_max << " elapsed=" << report.elapsed_s
                  << "s\n";
        for (const hn::Mismatch& m : report.mismatches)
            std::cout << "  mismatch @" << m.op_index << " [" << m.op << "] trie=" << m.ptrie_out
                      << " oracle=" << m.oracle_out << "\n";
    }
    if (!report.passed() && !report.mismatches.empty()) {
        const hn::Workload repro = hn::minimize_failure(w, opt);
        const std::string path = repro_out.empty() ? workload_path + ".repro" : repro_out;
        hn::write_workload_file(repro, path);
        std::cerr << "minimized failing prefix (" << repro.ops.size() << " ops) written to "
                  << path << "\n";
    }
    return report.passed() ? 0 : 1;
}

int cmd_bench(const std::string& workload_path, const std::string& backend_s, uint32_t repeat,
              const std::string& out) {
    const auto backend = hn::bench_backend_from_name(backend_s);
    if (!backend) {
        std::cerr << "bench: unknown backend '" << backend_s << "' (want ptrie|binheap)\n";
        return 2;
    }
    const hn::Workload w = hn::read_workload_file(workload_path);
    hn::BenchResult r;
    try {
        r = hn::run_bench(w, *backend, repeat);
    } catch (const std::invalid_argument& e) {
        std::cerr << "bench: " << e.what() << "\n";
        return 2;
    }
    const bool json = out.size() > 5 && out.substr(out.size() - 5) == ".json";
    const std::string text = json ? hn::bench_to_json(r) : hn::bench_to_csv(r);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream os(out, std::ios::binary);
        os << text;
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

int cmd_analyze(uint64_t n, uint64_t p, uint64_t trials, uint64_t seed, uint32_t m,
                const std::string& out) {
    namespace an = ptrie::analysis;
    if ((p & (p - 1)) != 0 || p < 2) {
        std::cerr << "analyze: p must be a power of two >= 2\n";
        return 2;
    }
    uint32_t k = 0;
    while ((uint64_t{1} << k) < p) ++k;
    const ptrie::PatternConfig cfg = ptrie::PatternConfig::fixed(k, m);
    const uint64_t levels = cfg.digit_count();
    const an::FormulaResult formula = an::formula_profile(n, p, levels);
    const an::EmpiricalProfile emp = an::empirical_profile(trials, n, cfg, seed);

    const bool json = out.size() > 5 && out.substr(out.size() - 5) == ".json";
    std::ostringstream os;
    if (json) {
        nlohmann::json j;
        j["n"] = n;
        j["p"] = p;
        j["m"] = m;
        j["trials"] = trials;
        j["seed"] = seed;
        j["a_n_series"] = formula.a_n;
        j["levels"] = nlohmann::json::array();
        for (uint64_t l = 0; l < levels; ++l) {
            j["levels"].push_back({{"level", l},
                                   {"formula", formula.per_level[l]},
                                   {"empirical_mean", emp.mean[l]},
                                   {"stderr", emp.stderr_[l]}});
        }
        os << j.dump(2) << "\n";
    } else {
        os << "level,formula,empirical_mean,stderr\n";
        for (uint64_t l = 0; l < levels; ++l) {
            char line[128];
            std::snprintf(line, sizeof line, "%llu,%.6f,%.6f,%.6f\n",
                          static_cast<unsigned long long>(l), formula.per_level[l], emp.mean[l],
                          emp.stderr_[l]);
            os << line;
        }
        char total[64];
        std::snprintf(total, sizeof total, "# a_n_series=%.6f\n", formula.a_n);
        os << total;
    }
    if (out.empty() || out == "-") {
        std::cout << os.str();
    } else {
        std::ofstream f(out, std::ios::binary);
        f << os.str();
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"priority trie workload harness"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a deterministic workload");
    std::string gen_mode = "u32", gen_dist = "uniform", gen_out;
    uint64_t gen_ops = 1000, gen_seed = 1;
    uint32_t gen_k = 4;
    bool gen_pq = false;
    gen->add_option("--mode", gen_mode, "u8|u16|u32|i64|f64|str");
    gen->add_option("--k", gen_k, "bits per digit");
    gen->add_option("--ops", gen_ops, "operation count");
    gen->add_option("--dist", gen_dist, "uniform|clustered|ascending|duplicate-heavy");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--out", gen_out, "output file ('-' for stdout)");
    gen->add_flag("--pq", gen_pq, "emit only insert/delete-min/min (bench-compatible)");

    auto* diff = app.add_subcommand("diff", "run a workload against the oracle in lockstep");
    std::string diff_workload, diff_repro;
    bool diff_paranoid = false, diff_json = false;
    diff->add_option("--workload", diff_workload, "workload file")->required();
    diff->add_flag("--paranoid", diff_paranoid, "validate after every mutating op");
    diff->add_flag("--json", diff_json, "emit the run report as JSON");
    diff->add_option("--repro-out", diff_repro, "where to write a minimized failing prefix");

    auto* bench = app.add_subcommand("bench", "time a priority-queue workload");
    std::string bench_workload, bench_backend = "ptrie", bench_out;
    uint32_t bench_repeat = 1;
    bench->add_option("--workload", bench_workload, "workload file")->required();
    bench->add_option("--backend", bench_backend, "ptrie|binheap");
    bench->add_option("--repeat", bench_repeat, "timing repetitions");
    bench->add_option("--out", bench_out, "output file (.json for JSON, else CSV)");

    auto* analyze = app.add_subcommand("analyze", "layer-count formulas vs Monte Carlo");
    uint64_t an_n = 1024, an_p = 4, an_trials = 200, an_seed = 1;
    uint32_t an_m = 16;
    std::string an_out;
    analyze->add_option("--n", an_n, "keys per trial");
    analyze->add_option("--p", an_p, "branching factor (power of two)");
    analyze->add_option("--trials", an_trials, "Monte Carlo trials");
    analyze->add_option("--seed", an_seed, "rng seed");
    analyze->add_option("--m", an_m, "key width in bits");
    analyze->add_option("--out", an_out, "output file (.json for JSON, else CSV)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_mode, gen_k, gen_ops, gen_dist, gen_seed, gen_out, gen_pq);
        if (diff->parsed()) return cmd_diff(diff_workload, diff_paranoid, diff_json, diff_repro);
        if (bench->parsed()) return cmd_bench(bench_workload, bench_backend, bench_repeat, bench_out);
        if (analyze->parsed()) return cmd_analyze(an_n, an_p, an_trials, an_seed, an_m, an_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
