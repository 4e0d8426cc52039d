// Command-line front end: single runs, Cartesian sweeps, landscape binning,
// benchmark listing, and stand-in instance generation. All numeric output
// uses fixed 6-decimal formatting so repeated invocations are byte-identical.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pbitsim/cost.hpp"
#include "pbitsim/engine.hpp"
#include "pbitsim/gset.hpp"
#include "pbitsim/gsetgen.hpp"
#include "pbitsim/sweep.hpp"

namespace {

using namespace pbitsim;

constexpr int kUsageError = 2;

std::string resolve_graph_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PBIT_GRAPH_DIR"); env && *env) return env;
    return ".";
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write output file: " + out_path);
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string json_record(std::uint64_t run_id, const RunResult& result,
                        bool with_trace) {
    const RunConfig& cfg = result.config;
    const BenchmarkEntry* entry = find_entry(result.graph);
    const std::uint64_t n = entry ? entry->n : result.final_spins.size();
    std::ostringstream out;
    out << "{\"run_id\":" << run_id << ",\"graph\":\"" << result.graph
        << "\",\"policy\":\"" << policy_name(cfg.policy) << "\""
        << ",\"tau_ns\":" << fixed6(cfg.tau_ns) << ",\"c\":" << fixed6(cfg.c)
        << ",\"b\":" << cfg.bits << ",\"d_ns\":" << fixed6(cfg.d_ns)
        << ",\"time_ns\":" << fixed6(cfg.t_total_ns) << ",\"seed\":" << cfg.seed
        << ",\"final_cut\":" << result.final_cut
        << ",\"normalized_cut\":" << fixed6(result.normalized_cut)
        << ",\"final_energy\":" << fixed6(result.final_energy)
        << ",\"pbits_physical\":" << physical_pbits(n, cfg.c)
        << ",\"cost_norm\":" << fixed6(normalized_cost(n, cfg.c, cfg.bits))
        << ",\"d_tau_ratio\":" << fixed6(d_tau_ratio(cfg.d_ns, cfg.tau_ns))
        << ",\"applied_updates\":" << result.applied_updates;
    if (with_trace) {
        out << ",\"energy_trace\":[";
        for (std::size_t i = 0; i < result.energy_trace.size(); ++i) {
            const auto& p = result.energy_trace[i];
            if (i) out << ',';
            out << '[' << fixed6(p.t_ns) << ',' << fixed6(p.energy) << ']';
        }
        out << ']';
    }
    out << "}\n";
    return out.str();
}

std::string trace_csv(const RunResult& result) {
    std::string csv = "t_ns,energy\n";
    for (const auto& p : result.energy_trace) {
        csv += fixed6(p.t_ns);
        csv += ',';
        csv += fixed6(p.energy);
        csv += '\n';
    }
    return csv;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parallel p-bit Ising annealing simulator and benchmark harness"};
    app.require_subcommand(1);

    // run
    auto* cmd_run = app.add_subcommand("run", "Execute a single annealing run");
    std::string run_graph, run_policy = "tick-random", graph_dir, run_out,
                run_format = "csv", run_trace_out;
    double run_tau = 5.0, run_c = 1.0, run_d = 5.0, run_time = 500.0;
    int run_bits = 12;
    std::uint64_t run_seed = 0;
    bool force_timing = false;
    cmd_run->add_option("--graph", run_graph, "Benchmark instance name")->required();
    cmd_run->add_option("--graph-dir", graph_dir,
                        "Directory with graph files (or $PBIT_GRAPH_DIR)");
    cmd_run->add_option("--policy", run_policy, "Update policy");
    cmd_run->add_option("--tau", run_tau, "Update interval in ns");
    cmd_run->add_option("--c", run_c, "Time-multiplexing reuse factor");
    cmd_run->add_option("--b", run_bits, "DAC resolution in bits");
    auto* d_opt = cmd_run->add_option("--d", run_d, "Apply delay in ns (default 5; "
                                                    "defaults to tau for tick policies)");
    cmd_run->add_option("--time", run_time, "Total annealing time in ns");
    cmd_run->add_option("--seed", run_seed, "RNG seed");
    cmd_run->add_option("--out", run_out, "Output path (stdout when omitted)");
    cmd_run->add_option("--format", run_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_run->add_option("--trace-out", run_trace_out,
                        "Also write the energy trace as CSV to this path");
    cmd_run->add_flag("--force-timing", force_timing,
                      "Allow tick policies with d != tau");

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "Execute a Cartesian sweep");
    std::string sweep_spec_path, sweep_out, sweep_graphs, sweep_policies,
        sweep_taus, sweep_cs, sweep_bits, sweep_times;
    std::uint64_t sweep_repeats = 1, sweep_seed = 0;
    double sweep_d = 5.0;
    unsigned sweep_jobs = 0;
    bool sweep_force_timing = false;
    cmd_sweep->add_option("--spec", sweep_spec_path, "Sweep spec file");
    cmd_sweep->add_option("--graph-dir", graph_dir,
                          "Directory with graph files (or $PBIT_GRAPH_DIR)");
    cmd_sweep->add_option("--graph", sweep_graphs, "Instance list (comma separated)");
    cmd_sweep->add_option("--policy", sweep_policies, "Policy list");
    cmd_sweep->add_option("--tau", sweep_taus, "Tau list in ns");
    cmd_sweep->add_option("--c", sweep_cs, "Reuse factor list");
    cmd_sweep->add_option("--b", sweep_bits, "DAC bit list");
    cmd_sweep->add_option("--time", sweep_times, "Total time list in ns");
    cmd_sweep->add_option("--repeats", sweep_repeats, "Repeats per point");
    cmd_sweep->add_option("--seed", sweep_seed, "Base seed");
    cmd_sweep->add_option("--d", sweep_d, "Apply delay in ns");
    cmd_sweep->add_option("--jobs", sweep_jobs, "Worker count (0 = all cores)");
    cmd_sweep->add_option("--out", sweep_out, "Output path (stdout when omitted)");
    cmd_sweep->add_flag("--force-timing", sweep_force_timing,
                        "Allow tick policies with d != tau");

    // landscape
    auto* cmd_landscape =
        app.add_subcommand("landscape", "Bin sweep results by hardware cost");
    std::string landscape_in, landscape_out;
    int landscape_bins_n = 40;
    cmd_landscape->add_option("input", landscape_in, "Sweep results CSV")->required();
    cmd_landscape->add_option("--bins", landscape_bins_n, "Bin count");
    cmd_landscape->add_option("--out", landscape_out,
                              "Output path (stdout when omitted)");

    // graphs
    auto* cmd_graphs =
        app.add_subcommand("graphs", "List the benchmark registry");

    // gen
    auto* cmd_gen = app.add_subcommand(
        "gen", "Generate deterministic stand-in instances for the registry");
    std::string gen_out = "graphs";
    std::string gen_names;
    cmd_gen->add_option("--out", gen_out, "Output directory");
    cmd_gen->add_option("--names", gen_names,
                        "Instance list (comma separated; default all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (cmd_run->parsed()) {
            const auto policy = parse_policy(run_policy);
            if (!policy) {
                std::cerr << "unknown policy '" << run_policy << "'\n";
                return kUsageError;
            }
            RunConfig cfg;
            cfg.policy = *policy;
            cfg.tau_ns = run_tau;
            cfg.c = run_c;
            cfg.bits = run_bits;
            cfg.t_total_ns = run_time;
            cfg.seed = run_seed;
            if (is_tick_delayed(*policy)) {
                if (d_opt->count() == 0) {
                    cfg.d_ns = run_tau; // clocked design: apply at the next tick
                } else if (run_d != run_tau && !force_timing) {
                    std::cerr << "tick policies require d = tau (got d=" << run_d
                              << ", tau=" << run_tau
                              << "); pass --force-timing to override\n";
                    return kUsageError;
                } else {
                    cfg.d_ns = run_d;
                }
            } else {
                cfg.d_ns = run_d;
            }
            try {
                cfg.validate();
            } catch (const std::exception& e) {
                std::cerr << e.what() << "\n";
                return kUsageError;
            }

            const BenchmarkEntry* entry = find_entry(run_graph);
            if (!entry) {
                std::cerr << "unknown benchmark '" << run_graph << "'\n";
                return kUsageError;
            }
            const WeightedGraph graph =
                load_instance(run_graph, resolve_graph_dir(graph_dir));
            const IsingModel model = to_ising(graph);
            const RunResult result = run(model, graph, cfg, *entry);

            std::string text;
            if (run_format == "json") {
                text = json_record(0, result, true);
            } else {
                text = std::string(kCsvHeader) + "\n" +
                       format_csv_record(0, result) + "\n";
            }
            write_output(text, run_out);
            if (!run_trace_out.empty()) {
                write_output(trace_csv(result), run_trace_out);
            }
            return 0;
        }

        if (cmd_sweep->parsed()) {
            SweepSpec spec;
            if (!sweep_spec_path.empty()) {
                spec = parse_sweep_spec_file(sweep_spec_path);
            } else {
                std::ostringstream flags;
                flags << "instances = " << sweep_graphs << "\n"
                      << "policies = " << sweep_policies << "\n"
                      << "taus_ns = " << sweep_taus << "\n"
                      << "cs = " << sweep_cs << "\n"
                      << "bits_list = " << sweep_bits << "\n"
                      << "repeats = " << sweep_repeats << "\n"
                      << "base_seed = " << sweep_seed << "\n"
                      << "d_ns = " << sweep_d << "\n";
                if (!sweep_times.empty()) {
                    flags << "t_total_ns = " << sweep_times << "\n";
                }
                std::istringstream in(flags.str());
                spec = parse_sweep_spec(in);
            }
            if (sweep_force_timing) spec.force_timing = true;

            SweepOptions options;
            options.graph_dir = resolve_graph_dir(graph_dir);
            options.jobs = sweep_jobs;
            write_output(run_sweep_csv(spec, options), sweep_out);
            return 0;
        }

        if (cmd_landscape->parsed()) {
            std::ifstream in(landscape_in);
            if (!in) {
                std::cerr << "cannot open " << landscape_in << "\n";
                return kUsageError;
            }
            std::vector<LandscapeGroup> groups;
            try {
                groups = landscape_from_csv(in, landscape_bins_n);
            } catch (const std::exception& e) {
                std::cerr << e.what() << "\n";
                return kUsageError;
            }
            write_output(landscape_csv(groups), landscape_out);
            return 0;
        }

        if (cmd_graphs->parsed()) {
            std::string table;
            for (const auto& e : registry()) {
                table += e.name + " " + std::to_string(e.n) + " " +
                         std::to_string(e.m) + " " + std::to_string(e.target) + "\n";
            }
            write_output(table, "");
            return 0;
        }

        if (cmd_gen->parsed()) {
            std::vector<std::string> names;
            if (!gen_names.empty()) {
                std::istringstream in(gen_names);
                std::string item;
                while (std::getline(in, item, ',')) {
                    if (!item.empty()) names.push_back(item);
                }
            }
            generate_twin_files(gen_out, names);
            std::cerr << "wrote " << (names.empty() ? registry().size() : names.size())
                      << " instance file(s) to " << gen_out << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        const std::string what = e.what();
        if (what.find("unknown benchmark") != std::string::npos ||
            what.find("cannot open") != std::string::npos ||
            what.find("sweep spec") != std::string::npos ||
            what.find("require") != std::string::npos) {
            return kUsageError;
        }
        return 1;
    }
    return 0;
}
