#include "lart/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "lart/multiplex.hpp"

namespace lart {

void write_partition(const Partition& p, int num_nodes, int num_layers,
                     const std::string& path) {
    if (static_cast<int>(p.labels.size()) != num_nodes * num_layers)
        throw std::invalid_argument("partition size disagrees with dimensions");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (int k = 0; k < num_layers; ++k)
        for (int i = 0; i < num_nodes; ++i)
            out << k << " " << i << " " << p.labels[k * num_nodes + i] << "\n";
}

Partition read_partition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::map<std::pair<int, int>, int> entries;
    std::string line;
    int lineno = 0;
    int max_node = -1, max_layer = -1, max_label = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int layer, node, label;
        if (!(ls >> layer >> node >> label)) throw ParseError("malformed partition line", lineno);
        if (layer < 0 || node < 0 || label < 0) throw ParseError("negative field", lineno);
        if (!entries.emplace(std::pair{layer, node}, label).second)
            throw ParseError("duplicate node-layer entry", lineno);
        max_node = std::max(max_node, node);
        max_layer = std::max(max_layer, layer);
        max_label = std::max(max_label, label);
    }
    if (entries.empty()) throw ParseError("empty partition file", lineno);
    const int n = max_node + 1;
    const int l = max_layer + 1;
    if (entries.size() != static_cast<std::size_t>(n) * l)
        throw ParseError("missing node-layer entries", lineno);
    Partition p;
    p.labels.resize(entries.size());
    p.num_communities = max_label + 1;
    for (const auto& [key, label] : entries) p.labels[key.first * n + key.second] = label;
    return p;
}

std::string detect_json(const DetectResult& res, int num_nodes, int num_layers,
                        int t, double epsilon, double gamma,
                        std::optional<double> fixed_omega) {
    nlohmann::json j;
    j["parameters"] = {{"t", t},
                       {"epsilon", epsilon},
                       {"gamma", gamma},
                       {"weights", fixed_omega ? "fixed" : "adaptive"},
                       {"modularity_matrix", "raw"}};
    if (fixed_omega) j["parameters"]["omega"] = *fixed_omega;
    j["num_nodes"] = num_nodes;
    j["num_layers"] = num_layers;
    j["num_communities"] = res.partition.num_communities;

    nlohmann::json part = nlohmann::json::array();
    for (int k = 0; k < num_layers; ++k)
        for (int i = 0; i < num_nodes; ++i)
            part.push_back({{"layer", k},
                            {"node", i},
                            {"community", res.partition.labels[k * num_nodes + i]}});
    j["partition"] = std::move(part);
    j["q_scores"] = res.dendrogram.q_scores;

    nlohmann::json merges = nlohmann::json::array();
    for (const auto& mg : res.dendrogram.merges)
        merges.push_back({{"a", mg.cluster_a},
                          {"b", mg.cluster_b},
                          {"distance", mg.distance},
                          {"new_cluster", mg.new_cluster}});
    j["merges"] = std::move(merges);
    return j.dump(2);
}

void write_matrix_csv(const Eigen::MatrixXd& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.precision(17);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out << ",";
            out << m(r, c);
        }
        out << "\n";
    }
}

}  // namespace lart
