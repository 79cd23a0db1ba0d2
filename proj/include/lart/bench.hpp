#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lart/synthgen.hpp"

namespace lart {

inline constexpr const char* kBenchCsvHeader =
    "scenario,seed,algorithm,nmi,fm,runtime_ms,num_communities,q_m";

struct BenchRow {
    std::string scenario;
    std::uint64_t seed = 0;
    std::string algorithm;  // "lart" or "fixed"
    double nmi = 0.0;
    double fm = 0.0;
    long long runtime_ms = 0;
    int num_communities = 0;
    double q_m = 0.0;
    bool failed = false;
};

struct BenchAggregate {
    std::string scenario;
    std::string algorithm;
    int runs = 0;
    double nmi_mean = 0.0, nmi_std = 0.0;
    double fm_mean = 0.0, fm_std = 0.0;
};

/// Per-run seed derived from a master seed by a counter-based split, so
/// extending `runs` never perturbs earlier runs.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_index);

/// Generates `runs` seeded instances of `scenario` and runs each requested
/// algorithm with the defaults t=3L, epsilon=1, gamma=1. `record_timings`
/// keeps wall-clock runtime out of the rows by default so the CSV is
/// byte-reproducible.
std::vector<BenchRow> run_bench(Scenario scenario, int runs, std::uint64_t master_seed,
                                const std::vector<std::string>& algorithms,
                                bool record_timings = false);

std::vector<BenchAggregate> aggregate(const std::vector<BenchRow>& rows);

std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace lart
