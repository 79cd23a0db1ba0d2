#include "lart/bench.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "lart/metrics.hpp"

namespace lart {

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_index) {
    // splitmix64 over (master, counter)
    std::uint64_t z = master_seed + run_index * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<BenchRow> run_bench(Scenario scenario, int runs, std::uint64_t master_seed,
                                const std::vector<std::string>& algorithms,
                                bool record_timings) {
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    for (const auto& a : algorithms)
        if (a != "lart" && a != "fixed")
            throw std::invalid_argument("unknown algorithm '" + a + "'");

    std::vector<BenchRow> rows;
    for (int r = 0; r < runs; ++r) {
        ScenarioConfig cfg;
        cfg.scenario = scenario;
        cfg.seed = derive_seed(master_seed, static_cast<std::uint64_t>(r));
        const auto inst = generate(cfg);
        const int t = 3 * inst.multiplex.num_layers();
        const auto truth = truth_partition(inst.truth);

        for (const auto& algo : algorithms) {
            BenchRow row;
            row.scenario = to_string(scenario);
            row.seed = cfg.seed;
            row.algorithm = algo;
            try {
                const auto start = std::chrono::steady_clock::now();
                const auto res =
                    lart_detect(inst.multiplex, t, 1.0, 1.0,
                                algo == "fixed" ? std::optional<double>(1.0) : std::nullopt);
                const auto stop = std::chrono::steady_clock::now();
                if (record_timings)
                    row.runtime_ms =
                        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                            .count();
                row.nmi = nmi(truth, res.partition);
                row.fm = fowlkes_mallows(truth, res.partition);
                row.num_communities = res.partition.num_communities;
                row.q_m = multiplex_modularity(res.partition, res.supra, 1.0);
            } catch (const std::exception&) {
                row.failed = true;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<BenchAggregate> aggregate(const std::vector<BenchRow>& rows) {
    std::map<std::pair<std::string, std::string>, std::vector<const BenchRow*>> groups;
    for (const auto& r : rows)
        if (!r.failed) groups[{r.scenario, r.algorithm}].push_back(&r);

    std::vector<BenchAggregate> out;
    for (const auto& [key, members] : groups) {
        BenchAggregate agg;
        agg.scenario = key.first;
        agg.algorithm = key.second;
        agg.runs = static_cast<int>(members.size());
        for (const auto* r : members) {
            agg.nmi_mean += r->nmi;
            agg.fm_mean += r->fm;
        }
        agg.nmi_mean /= agg.runs;
        agg.fm_mean /= agg.runs;
        for (const auto* r : members) {
            agg.nmi_std += (r->nmi - agg.nmi_mean) * (r->nmi - agg.nmi_mean);
            agg.fm_std += (r->fm - agg.fm_mean) * (r->fm - agg.fm_mean);
        }
        agg.nmi_std = std::sqrt(agg.nmi_std / agg.runs);
        agg.fm_std = std::sqrt(agg.fm_std / agg.runs);
        out.push_back(std::move(agg));
    }
    return out;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << kBenchCsvHeader << "\n";
    out.setf(std::ios::fixed);
    out.precision(6);
    for (const auto& r : rows) {
        if (r.failed) {
            out << r.scenario << "," << r.seed << "," << r.algorithm << ",FAILED,,,,\n";
            continue;
        }
        out << r.scenario << "," << r.seed << "," << r.algorithm << "," << r.nmi << ","
            << r.fm << "," << r.runtime_ms << "," << r.num_communities << "," << r.q_m
            << "\n";
    }
    return out.str();
}

}  // namespace lart
