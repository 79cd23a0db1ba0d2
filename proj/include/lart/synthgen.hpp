#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lart/multiplex.hpp"

namespace lart {

enum class Scenario { S1, S2, S3, S4, S5 };

Scenario scenario_from_string(const std::string& name);
std::string to_string(Scenario s);

/// Planted community assignment per node-layer. kBackground marks node
/// copies with no planted structure in that layer.
struct GroundTruth {
    static constexpr int kBackground = -1;

    int num_nodes = 0;
    int num_layers = 0;
    std::vector<int> labels;  // flat layer-major index

    int label(int node, int layer) const { return labels[layer * num_nodes + node]; }
};

struct ScenarioConfig {
    Scenario scenario = Scenario::S1;
    std::uint64_t seed = 0;
    double p_in_min = 0.25;
    double p_in_max = 0.40;
    double p_noise = 0.05;
};

/// Per-community record for the instance manifest.
struct CommunityInfo {
    int id = 0;
    int size = 0;
    std::vector<int> layers;  // layers the community is planted in
    std::string pattern;      // dense / split / weak / bipartite
};

struct GeneratedInstance {
    Multiplex multiplex;
    GroundTruth truth;
    Scenario scenario;
    std::uint64_t seed = 0;
    double p_noise = 0.0;
    std::vector<CommunityInfo> communities;
};

/// Seeded generator for the five synthetic scenarios. Deterministic under a
/// fixed config.
GeneratedInstance generate(const ScenarioConfig& cfg);

/// Truth file format: one `<layer> <node> <label>` line per node-layer,
/// label -1 for background. Every node-layer must be present.
void write_truth(const GroundTruth& gt, const std::string& path);
GroundTruth read_truth(const std::string& path);
void write_truth_stream(const GroundTruth& gt, std::ostream& out);
GroundTruth read_truth_stream(std::istream& in);

/// Manifest JSON describing a generated instance.
std::string manifest_json(const GeneratedInstance& inst);

}  // namespace lart
