#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lart/bench.hpp"
#include "lart/cluster.hpp"
#include "lart/io.hpp"
#include "lart/metrics.hpp"
#include "lart/multiplex.hpp"
#include "lart/synthgen.hpp"
#include "lart/walk.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

int cmd_generate(const std::string& scenario_name, std::uint64_t seed,
                 const std::string& out_path, const std::string& truth_path,
                 const std::string& manifest_path, double p_noise) {
    lart::ScenarioConfig cfg;
    cfg.scenario = lart::scenario_from_string(scenario_name);
    cfg.seed = seed;
    cfg.p_noise = p_noise;
    const auto inst = lart::generate(cfg);
    lart::write_multiplex(inst.multiplex, out_path);
    lart::write_truth(inst.truth, truth_path);
    if (!manifest_path.empty()) write_text(manifest_path, lart::manifest_json(inst));
    std::cout << "generated " << scenario_name << " seed=" << seed
              << " nodes=" << inst.multiplex.num_nodes()
              << " layers=" << inst.multiplex.num_layers()
              << " edges=" << inst.multiplex.num_edges() << "\n";
    return 0;
}

int cmd_detect(const std::string& input, std::optional<int> t_opt, double epsilon,
               double gamma, std::optional<double> fixed_omega,
               const std::string& out_path, const std::string& json_path,
               const std::string& dump_walk, const std::string& dump_dissim) {
    const auto m = lart::read_multiplex(input);
    const int t = t_opt.value_or(3 * m.num_layers());
    if (t < 1) throw std::invalid_argument("t must be >= 1");

    const auto res = lart::lart_detect(m, t, epsilon, gamma, fixed_omega);
    lart::write_partition(res.partition, m.num_nodes(), m.num_layers(), out_path);
    if (!json_path.empty())
        write_text(json_path,
                   lart::detect_json(res, m.num_nodes(), m.num_layers(), t, epsilon,
                                     gamma, fixed_omega));
    if (!dump_walk.empty()) {
        const auto tp = lart::walk_power(lart::transition_matrix(res.supra), res.supra, t);
        lart::write_matrix_csv(tp.matrix, dump_walk);
    }
    if (!dump_dissim.empty()) {
        const auto tp = lart::walk_power(lart::transition_matrix(res.supra), res.supra, t);
        lart::write_matrix_csv(lart::dissimilarity_matrix(tp).values, dump_dissim);
    }
    std::cout << "communities=" << res.partition.num_communities << " q_m="
              << lart::multiplex_modularity(res.partition, res.supra, gamma) << "\n";
    return 0;
}

int cmd_evaluate(const std::string& truth_path, const std::string& pred_path,
                 const std::string& metric, const std::string& json_path) {
    const auto gt = lart::read_truth(truth_path);
    const auto truth = lart::truth_partition(gt);
    const auto pred = lart::read_partition(pred_path);
    if (pred.labels.size() != truth.labels.size())
        throw std::invalid_argument("truth and prediction cover different element sets");

    nlohmann::json j;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(6);
    if (metric == "nmi" || metric == "both") {
        const double v = lart::nmi(truth, pred);
        line << "nmi=" << v;
        j["nmi"] = v;
    }
    if (metric == "fm" || metric == "both") {
        const double v = lart::fowlkes_mallows(truth, pred);
        if (line.tellp() > 0) line << " ";
        line << "fm=" << v;
        j["fm"] = v;
    }
    std::cout << line.str() << "\n";
    if (!json_path.empty()) write_text(json_path, j.dump(2));
    return 0;
}

int cmd_bench(const std::string& scenario_name, int runs, std::uint64_t seed,
              const std::vector<std::string>& algorithms, const std::string& out_csv,
              bool timings) {
    const auto scenario = lart::scenario_from_string(scenario_name);
    const auto rows = lart::run_bench(scenario, runs, seed, algorithms, timings);
    write_text(out_csv, lart::to_csv(rows));
    for (const auto& agg : lart::aggregate(rows)) {
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(4);
        line << agg.scenario << " " << agg.algorithm << " runs=" << agg.runs
             << " nmi=" << agg.nmi_mean << "+-" << agg.nmi_std << " fm=" << agg.fm_mean
             << "+-" << agg.fm_std;
        std::cout << line.str() << "\n";
    }
    for (const auto& r : rows)
        if (r.failed) return kExitData;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LART community detection for multiplex networks"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Generate a synthetic multiplex instance");
    std::string gen_scenario, gen_out, gen_truth, gen_manifest;
    std::uint64_t gen_seed = 0;
    double gen_noise = 0.05;
    gen->add_option("--scenario", gen_scenario, "Scenario (s1..s5)")->required();
    gen->add_option("--seed", gen_seed, "RNG seed")->required();
    gen->add_option("--out", gen_out, "Multiplex output path")->required();
    gen->add_option("--truth-out", gen_truth, "Ground-truth output path")->required();
    gen->add_option("--manifest-out", gen_manifest, "Manifest JSON output path");
    gen->add_option("--p-noise", gen_noise, "Background noise edge probability");

    // detect
    auto* det = app.add_subcommand("detect", "Run community detection");
    std::string det_in, det_out, det_json, det_dump_walk, det_dump_dissim;
    int det_t = -1;
    double det_eps = 1.0, det_gamma = 1.0, det_omega = -1.0;
    det->add_option("--input", det_in, "Multiplex input path")->required();
    det->add_option("--out", det_out, "Partition output path")->required();
    det->add_option("--json-out", det_json, "Detect bundle JSON path");
    det->add_option("--t", det_t, "Walk length (default 3L)");
    det->add_option("--eps", det_eps, "Regularization epsilon (default 1.0)");
    det->add_option("--gamma", det_gamma, "Modularity resolution (default 1.0)");
    auto* omega_opt =
        det->add_option("--fixed-omega", det_omega, "Fixed inter-layer weight baseline");
    det->add_option("--dump-walk", det_dump_walk, "Dump P^t as dense CSV");
    det->add_option("--dump-dissim", det_dump_dissim, "Dump S(t) as dense CSV");

    // evaluate
    auto* ev = app.add_subcommand("evaluate", "Score a partition against ground truth");
    std::string ev_truth, ev_pred, ev_metric = "both", ev_json;
    ev->add_option("--truth", ev_truth, "Ground-truth path")->required();
    ev->add_option("--pred", ev_pred, "Predicted partition path")->required();
    ev->add_option("--metric", ev_metric, "nmi, fm or both")
        ->check(CLI::IsMember({"nmi", "fm", "both"}));
    ev->add_option("--json-out", ev_json, "Machine-readable JSON path");

    // bench
    auto* be = app.add_subcommand("bench", "Seeded benchmark over generated instances");
    std::string be_scenario, be_csv;
    int be_runs = 20;
    std::uint64_t be_seed = 0;
    std::vector<std::string> be_algos{"lart"};
    bool be_timings = false;
    be->add_option("--scenario", be_scenario, "Scenario (s1..s5)")->required();
    be->add_option("--runs", be_runs, "Number of seeded runs")->required();
    be->add_option("--seed", be_seed, "Master seed")->required();
    be->add_option("--algorithms", be_algos, "Subset of {lart, fixed}");
    be->add_option("--out-csv", be_csv, "Per-run CSV path")->required();
    be->add_flag("--timings", be_timings,
                 "Record wall-clock runtimes in the CSV (breaks byte-reproducibility)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed())
            return cmd_generate(gen_scenario, gen_seed, gen_out, gen_truth, gen_manifest,
                                gen_noise);
        if (det->parsed())
            return cmd_detect(det_in, det_t >= 0 ? std::optional<int>(det_t) : std::nullopt,
                              det_eps, det_gamma,
                              omega_opt->count() ? std::optional<double>(det_omega)
                                                 : std::nullopt,
                              det_out, det_json, det_dump_walk, det_dump_dissim);
        if (ev->parsed()) return cmd_evaluate(ev_truth, ev_pred, ev_metric, ev_json);
        if (be->parsed())
            return cmd_bench(be_scenario, be_runs, be_seed, be_algos, be_csv, be_timings);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
