#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pbitsim/engine.hpp"
#include "pbitsim/metrics.hpp"

namespace pbitsim {

// Cartesian sweep description. Enumeration is instance-major, then policy,
// tau, c, bits, t_total, repeat; run k of the enumeration uses seed
// base_seed + k and run_id k.
struct SweepSpec {
    std::vector<std::string> instances;
    std::vector<Policy> policies;
    std::vector<double> taus_ns;
    std::vector<double> cs;
    std::vector<int> bits_list;
    std::vector<double> t_totals_ns = {500.0};
    std::uint64_t repeats = 1;
    std::uint64_t base_seed = 0;
    double d_ns = 5.0;
    // The clocked tick policies pair the apply delay with the tick length;
    // a point with d != tau is rejected unless this is set.
    bool force_timing = false;

    std::size_t run_count() const;
};

// Parses the line-oriented "key = value" sweep format. Lists are
// comma-separated; '#' starts a comment. Keys: instances, policies,
// taus_ns, cs, bits_list, t_total_ns (scalar or list), repeats, base_seed,
// d_ns, force_timing.
SweepSpec parse_sweep_spec(std::istream& in);
SweepSpec parse_sweep_spec_file(const std::string& path);

struct RunPoint {
    std::uint64_t run_id;
    std::string instance;
    RunConfig config;
};

// Expands the Cartesian product in enumeration order, validating every
// configuration up front.
std::vector<RunPoint> enumerate_runs(const SweepSpec& spec);

struct SweepOptions {
    std::string graph_dir = ".";
    unsigned jobs = 0; // 0 = hardware concurrency
};

inline constexpr std::string_view kCsvHeader =
    "run_id,graph,policy,tau_ns,c,b,d_ns,time_ns,seed,final_cut,"
    "normalized_cut,final_energy,pbits_physical,cost_norm,d_tau_ratio,"
    "applied_updates";

// %.6f with the C locale; used for every floating-point CSV field so the
// output is byte-reproducible.
std::string fixed6(double value);

std::string format_csv_record(std::uint64_t run_id, const RunResult& result);

// Runs every point (in parallel when jobs > 1) and returns the complete CSV
// byte stream, header included, rows in enumeration order. The worker count
// cannot change the output. A failing run aborts with a std::runtime_error
// naming the run.
std::string run_sweep_csv(const SweepSpec& spec, const SweepOptions& options);

// Landscape grouping of sweep records by policy family.
struct LandscapeGroup {
    std::string name; // all, async-only, structured-sync, random-sync
    std::vector<LandscapeBin> bins;
};

// Reads a sweep CSV (schema above, validated) and bins each policy family.
// Groups with no points are omitted.
std::vector<LandscapeGroup> landscape_from_csv(std::istream& in, int n_bins = 40);

std::string landscape_csv(const std::vector<LandscapeGroup>& groups);

} // namespace pbitsim
