#include "pbitsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pbitsim/cost.hpp"

namespace pbitsim {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::string current;
    std::istringstream in(value);
    while (std::getline(in, current, ',')) {
        current = trim(current);
        if (!current.empty()) items.push_back(current);
    }
    return items;
}

double parse_double(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::runtime_error("sweep spec: bad number '" + s + "' for " + key);
    }
}

std::uint64_t parse_u64(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const auto v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::runtime_error("sweep spec: bad integer '" + s + "' for " + key);
    }
}

} // namespace

std::size_t SweepSpec::run_count() const {
    return instances.size() * policies.size() * taus_ns.size() * cs.size() *
           bits_list.size() * t_totals_ns.size() * repeats;
}

SweepSpec parse_sweep_spec(std::istream& in) {
    SweepSpec spec;
    spec.t_totals_ns.clear();
    bool have_time = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("sweep spec line " + std::to_string(line_no) +
                                     ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::vector<std::string> items = split_list(value);
        if (items.empty()) {
            throw std::runtime_error("sweep spec line " + std::to_string(line_no) +
                                     ": empty value for " + key);
        }

        if (key == "instances") {
            spec.instances = items;
        } else if (key == "policies") {
            spec.policies.clear();
            for (const auto& s : items) {
                const auto p = parse_policy(s);
                if (!p) {
                    throw std::runtime_error("sweep spec: unknown policy '" + s + "'");
                }
                spec.policies.push_back(*p);
            }
        } else if (key == "taus_ns") {
            spec.taus_ns.clear();
            for (const auto& s : items) spec.taus_ns.push_back(parse_double(s, key));
        } else if (key == "cs") {
            spec.cs.clear();
            for (const auto& s : items) spec.cs.push_back(parse_double(s, key));
        } else if (key == "bits_list") {
            spec.bits_list.clear();
            for (const auto& s : items) {
                spec.bits_list.push_back(static_cast<int>(parse_u64(s, key)));
            }
        } else if (key == "t_total_ns") {
            spec.t_totals_ns.clear();
            for (const auto& s : items) {
                spec.t_totals_ns.push_back(parse_double(s, key));
            }
            have_time = true;
        } else if (key == "repeats") {
            spec.repeats = parse_u64(items.front(), key);
        } else if (key == "base_seed") {
            spec.base_seed = parse_u64(items.front(), key);
        } else if (key == "d_ns") {
            spec.d_ns = parse_double(items.front(), key);
        } else if (key == "force_timing") {
            spec.force_timing = items.front() == "true" || items.front() == "1";
        } else {
            throw std::runtime_error("sweep spec line " + std::to_string(line_no) +
                                     ": unknown key '" + key + "'");
        }
    }
    if (!have_time) spec.t_totals_ns = {500.0};

    if (spec.instances.empty() || spec.policies.empty() || spec.taus_ns.empty() ||
        spec.cs.empty() || spec.bits_list.empty() || spec.repeats == 0) {
        throw std::runtime_error(
            "sweep spec: instances, policies, taus_ns, cs, bits_list and a "
            "nonzero repeats are required");
    }
    return spec;
}

SweepSpec parse_sweep_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open sweep spec: " + path);
    }
    return parse_sweep_spec(in);
}

std::vector<RunPoint> enumerate_runs(const SweepSpec& spec) {
    std::vector<RunPoint> points;
    points.reserve(spec.run_count());
    std::uint64_t k = 0;
    for (const auto& instance : spec.instances) {
        if (!find_entry(instance)) {
            throw std::runtime_error("unknown benchmark '" + instance + "'");
        }
        for (Policy policy : spec.policies) {
            for (double tau : spec.taus_ns) {
                for (double c : spec.cs) {
                    for (int bits : spec.bits_list) {
                        for (double t_total : spec.t_totals_ns) {
                            for (std::uint64_t rep = 0; rep < spec.repeats; ++rep) {
                                RunConfig cfg;
                                cfg.policy = policy;
                                cfg.tau_ns = tau;
                                cfg.c = c;
                                cfg.bits = bits;
                                cfg.d_ns = spec.d_ns;
                                cfg.t_total_ns = t_total;
                                cfg.seed = spec.base_seed + k;
                                if (is_tick_delayed(policy) && cfg.d_ns != cfg.tau_ns &&
                                    !spec.force_timing) {
                                    throw std::runtime_error(
                                        "run " + std::to_string(k) + " (" + instance +
                                        ", " + std::string(policy_name(policy)) +
                                        "): tick policies require d = tau; set "
                                        "force_timing to override");
                                }
                                cfg.validate();
                                points.push_back({k, instance, cfg});
                                ++k;
                            }
                        }
                    }
                }
            }
        }
    }
    return points;
}

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::string format_csv_record(std::uint64_t run_id, const RunResult& result) {
    const RunConfig& cfg = result.config;
    const BenchmarkEntry* entry = find_entry(result.graph);
    const std::uint64_t n = entry ? entry->n : result.final_spins.size();
    std::string row;
    row.reserve(256);
    row += std::to_string(run_id);
    row += ',';
    row += result.graph;
    row += ',';
    row += policy_name(cfg.policy);
    row += ',';
    row += fixed6(cfg.tau_ns);
    row += ',';
    row += fixed6(cfg.c);
    row += ',';
    row += std::to_string(cfg.bits);
    row += ',';
    row += fixed6(cfg.d_ns);
    row += ',';
    row += fixed6(cfg.t_total_ns);
    row += ',';
    row += std::to_string(cfg.seed);
    row += ',';
    row += std::to_string(result.final_cut);
    row += ',';
    row += fixed6(result.normalized_cut);
    row += ',';
    row += fixed6(result.final_energy);
    row += ',';
    row += std::to_string(physical_pbits(n, cfg.c));
    row += ',';
    row += fixed6(normalized_cost(n, cfg.c, cfg.bits));
    row += ',';
    row += fixed6(d_tau_ratio(cfg.d_ns, cfg.tau_ns));
    row += ',';
    row += std::to_string(result.applied_updates);
    return row;
}

namespace {

struct LoadedInstance {
    WeightedGraph graph;
    IsingModel model;
    const BenchmarkEntry* entry;
};

} // namespace

std::string run_sweep_csv(const SweepSpec& spec, const SweepOptions& options) {
    const std::vector<RunPoint> points = enumerate_runs(spec);

    std::map<std::string, LoadedInstance> instances;
    for (const auto& name : spec.instances) {
        if (instances.count(name)) continue;
        WeightedGraph graph = load_instance(name, options.graph_dir);
        IsingModel model = to_ising(graph);
        instances.emplace(name,
                          LoadedInstance{std::move(graph), std::move(model),
                                         find_entry(name)});
    }

    std::vector<std::string> rows(points.size());
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::mutex failure_mutex;
    std::uint64_t failed_run = std::numeric_limits<std::uint64_t>::max();
    std::string failure_message;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= points.size() || failed.load()) return;
            const RunPoint& point = points[i];
            const LoadedInstance& inst = instances.at(point.instance);
            try {
                const RunResult result =
                    run(inst.model, inst.graph, point.config, *inst.entry);
                rows[i] = format_csv_record(point.run_id, result);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (point.run_id < failed_run) {
                    failed_run = point.run_id;
                    failure_message =
                        "run " + std::to_string(point.run_id) + " (" +
                        point.instance + ", " +
                        std::string(policy_name(point.config.policy)) +
                        ", tau=" + fixed6(point.config.tau_ns) +
                        ", c=" + fixed6(point.config.c) +
                        ", b=" + std::to_string(point.config.bits) +
                        ", seed=" + std::to_string(point.config.seed) +
                        ") failed: " + e.what();
                }
                failed.store(true);
            }
        }
    };

    unsigned jobs = options.jobs != 0 ? options.jobs
                                      : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(
        std::min<std::size_t>(jobs, std::max<std::size_t>(points.size(), 1)));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (failed.load()) {
        throw std::runtime_error(failure_message);
    }

    std::string csv;
    csv.reserve(rows.size() * 128 + 128);
    csv += kCsvHeader;
    csv += '\n';
    for (const auto& row : rows) {
        csv += row;
        csv += '\n';
    }
    return csv;
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

bool in_group(const std::string& group, Policy policy) {
    if (group == "all") return true;
    if (group == "async-only") return policy == Policy::Gillespie;
    if (group == "structured-sync") {
        return policy == Policy::TickBlockRandom ||
               policy == Policy::TickBlockRandomStride;
    }
    if (group == "random-sync") return policy == Policy::TickRandom;
    return false;
}

} // namespace

std::vector<LandscapeGroup> landscape_from_csv(std::istream& in, int n_bins) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("landscape: empty input");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split_csv_row(line);
    const std::vector<std::string> expected = split_csv_row(std::string(kCsvHeader));
    std::size_t policy_col = 0, cut_col = 0, cost_col = 0;
    for (const auto& name : expected) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
            throw std::runtime_error("landscape: input is missing column '" + name +
                                     "'");
        }
        const auto idx = static_cast<std::size_t>(it - header.begin());
        if (name == "policy") policy_col = idx;
        if (name == "normalized_cut") cut_col = idx;
        if (name == "cost_norm") cost_col = idx;
    }

    std::vector<CostPoint> points;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_row(line);
        if (fields.size() != expected.size()) {
            throw std::runtime_error("landscape: line " + std::to_string(line_no) +
                                     " has " + std::to_string(fields.size()) +
                                     " fields, expected " +
                                     std::to_string(expected.size()));
        }
        const auto policy = parse_policy(fields[policy_col]);
        if (!policy) {
            throw std::runtime_error("landscape: line " + std::to_string(line_no) +
                                     ": unknown policy '" + fields[policy_col] + "'");
        }
        CostPoint p;
        p.policy = *policy;
        p.cost_norm = parse_double(fields[cost_col], "cost_norm");
        p.cut_norm = parse_double(fields[cut_col], "normalized_cut");
        points.push_back(p);
    }
    if (points.empty()) {
        throw std::runtime_error("landscape: no data rows");
    }

    std::vector<LandscapeGroup> groups;
    for (const char* name : {"all", "async-only", "structured-sync", "random-sync"}) {
        std::vector<CostPoint> member;
        for (const auto& p : points) {
            if (in_group(name, p.policy)) member.push_back(p);
        }
        if (member.empty()) continue;
        groups.push_back({name, landscape_bins(member, n_bins)});
    }
    return groups;
}

std::string landscape_csv(const std::vector<LandscapeGroup>& groups) {
    std::string csv = "bin_center_cost,median_cut_norm,max_cut_norm,policy_filter\n";
    for (const auto& group : groups) {
        for (const auto& bin : group.bins) {
            csv += fixed6(bin.bin_center_cost);
            csv += ',';
            csv += fixed6(bin.median_cut_norm);
            csv += ',';
            csv += fixed6(bin.max_cut_norm);
            csv += ',';
            csv += group.name;
            csv += '\n';
        }
    }
    return csv;
}

} // namespace pbitsim
