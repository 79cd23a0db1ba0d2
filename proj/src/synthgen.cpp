#include "lart/synthgen.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace lart {

namespace {

using Rng = std::mt19937_64;

constexpr int kMinCommunitySize = 8;

// How a planted community-layer's internal edges are wired.
enum class Structure { Dense, Subsets, Weak, Bipartite };

struct PlantedLayer {
    int layer = 0;
    Structure structure = Structure::Dense;
    double p = 0.0;                // edge probability for this layer
    std::vector<int> group_of;     // subset/half id per community-node position
    std::vector<double> group_p;   // per-subset edge probability (Subsets only)
};

struct PlannedCommunity {
    int id = 0;
    std::vector<int> nodes;
    std::vector<PlantedLayer> planted;
    std::string pattern = "dense";
};

int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double uniform_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool flip(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Near-equal community sizes over all N nodes, each >= kMinCommunitySize.
// The target size is a per-scenario knob: it trades planted density (larger
// communities sit further above the noise level) against how much damage a
// single corrupted community does to the whole instance.
std::vector<std::vector<int>> sample_community_nodes(Rng& rng, int n, int target_lo,
                                                     int target_hi) {
    const int target = uniform_int(rng, target_lo, target_hi);
    const int c = std::max(2, n / target);
    std::vector<int> sizes(c, n / c);
    for (int i = 0; i < n % c; ++i) ++sizes[i];
    // random jitter, keeping the minimum size
    for (int pass = 0; pass < 2 * c; ++pass) {
        const int a = uniform_int(rng, 0, c - 1);
        const int b = uniform_int(rng, 0, c - 1);
        if (a != b && sizes[a] > kMinCommunitySize) {
            --sizes[a];
            ++sizes[b];
        }
    }
    std::vector<int> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 0);
    std::shuffle(nodes.begin(), nodes.end(), rng);
    std::vector<std::vector<int>> out(c);
    int pos = 0;
    for (int i = 0; i < c; ++i) {
        out[i].assign(nodes.begin() + pos, nodes.begin() + pos + sizes[i]);
        std::sort(out[i].begin(), out[i].end());
        pos += sizes[i];
    }
    return out;
}

// k distinct layers out of 0..l-1, sorted.
std::vector<int> sample_layers(Rng& rng, int l, int k) {
    std::vector<int> all(l);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

// Splits positions 0..size-1 into `parts` near-equal groups, randomly.
std::vector<int> random_groups(Rng& rng, int size, int parts) {
    std::vector<int> pos(size);
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    std::vector<int> group(size);
    for (int i = 0; i < size; ++i) group[pos[i]] = i % parts;
    return group;
}

struct SpecialNoise {
    int layer = -1;
    int comm_a = -1;
    int comm_b = -1;
    double p = 0.0;
};

struct Plan {
    int num_nodes = 0;
    int num_layers = 0;
    std::vector<PlannedCommunity> communities;
    SpecialNoise special;   // S3 cross-community white noise, if any
    double noise_p = -1.0;  // per-pair noise override; cfg.p_noise when negative
};

Plan plan_s1(Rng& rng, const ScenarioConfig& cfg) {
    Plan plan;
    plan.num_layers = 3;
    plan.num_nodes = uniform_int(rng, 30, 90);
    auto node_sets = sample_community_nodes(rng, plan.num_nodes, 25, 35);
    for (std::size_t c = 0; c < node_sets.size(); ++c) {
        PlannedCommunity pc;
        pc.id = static_cast<int>(c);
        pc.nodes = node_sets[c];
        const double p = uniform_real(rng, cfg.p_in_min, cfg.p_in_max);
        for (int k : sample_layers(rng, 3, uniform_int(rng, 1, 3)))
            pc.planted.push_back({k, Structure::Dense, p, {}});
        plan.communities.push_back(std::move(pc));
    }
    return plan;
}

Plan plan_s2(Rng& rng, const ScenarioConfig& cfg) {
    Plan plan;
    plan.num_layers = 3;
    plan.num_nodes = uniform_int(rng, 60, 80);
    auto node_sets = sample_community_nodes(rng, plan.num_nodes, 38, 48);
    for (std::size_t c = 0; c < node_sets.size(); ++c) {
        PlannedCommunity pc;
        pc.id = static_cast<int>(c);
        pc.nodes = node_sets[c];
        pc.pattern = "split";
        const double p = uniform_real(rng, cfg.p_in_min, cfg.p_in_max);
        const auto split_layers = sample_layers(rng, 3, 2);
        for (int k = 0; k < 3; ++k) {
            PlantedLayer pl{k, Structure::Dense, p, {}, {}};
            if (std::find(split_layers.begin(), split_layers.end(), k) != split_layers.end()) {
                pl.structure = Structure::Subsets;
                // three-way splits leave subsets too small to re-attach to
                // their community reliably at this scale, so they stay rare
                const int parts = flip(rng, 0.10) ? 3 : 2;
                pl.group_of = random_groups(rng, static_cast<int>(pc.nodes.size()), parts);
                for (int g = 0; g < parts; ++g)
                    pl.group_p.push_back(uniform_real(rng, cfg.p_in_min, cfg.p_in_max));
            }
            pc.planted.push_back(std::move(pl));
        }
        plan.communities.push_back(std::move(pc));
    }
    return plan;
}

Plan plan_s3(Rng& rng, const ScenarioConfig& cfg) {
    Plan plan;
    plan.num_layers = 3;
    plan.num_nodes = uniform_int(rng, 60, 80);
    // two deliberately small communities (the pair that gets corrupted)
    // plus near-equal larger ones over the remaining nodes
    std::vector<int> sizes{uniform_int(rng, 12, 14), uniform_int(rng, 12, 14)};
    const int rest = plan.num_nodes - sizes[0] - sizes[1];
    const int cr = std::max(2, rest / uniform_int(rng, 20, 24));
    for (int q = 0; q < cr; ++q) sizes.push_back(rest / cr + (q < rest % cr ? 1 : 0));
    std::vector<int> shuffled(plan.num_nodes);
    std::iota(shuffled.begin(), shuffled.end(), 0);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<std::vector<int>> node_sets;
    int pos = 0;
    for (int sz : sizes) {
        node_sets.emplace_back(shuffled.begin() + pos, shuffled.begin() + pos + sz);
        std::sort(node_sets.back().begin(), node_sets.back().end());
        pos += sz;
    }
    for (std::size_t c = 0; c < node_sets.size(); ++c) {
        PlannedCommunity pc;
        pc.id = static_cast<int>(c);
        pc.nodes = node_sets[c];
        const double p = uniform_real(rng, cfg.p_in_min, cfg.p_in_max);
        for (int k = 0; k < 3; ++k) pc.planted.push_back({k, Structure::Dense, p, {}});
        plan.communities.push_back(std::move(pc));
    }
    // the two smallest communities get a weak layer plus white noise between
    // them there, so a single corrupted layer cannot dominate the instance
    const int c = static_cast<int>(plan.communities.size());
    std::vector<int> order(c);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return plan.communities[x].nodes.size() < plan.communities[y].nodes.size();
    });
    const int ca = order[0];
    const int cb = order[1];
    const int weak_layer = uniform_int(rng, 0, 2);
    for (int cid : {ca, cb}) {
        auto& pc = plan.communities[cid];
        pc.pattern = "weak";
        pc.planted[weak_layer].structure = Structure::Weak;
        pc.planted[weak_layer].p = uniform_real(rng, 0.10, 0.20);
    }
    plan.special = {weak_layer, std::min(ca, cb), std::max(ca, cb),
                    uniform_real(rng, 0.10, 0.20)};
    return plan;
}

// Replaces communities ca and cb in the given layer by two fresh bipartite
// communities over the shuffled union of their nodes.
void plant_bipartite_pair(Rng& rng, Plan& plan, int ca, int cb, int layer) {
    auto& a = plan.communities[ca];
    auto& b = plan.communities[cb];
    std::vector<int> pool = a.nodes;
    pool.insert(pool.end(), b.nodes.begin(), b.nodes.end());
    std::shuffle(pool.begin(), pool.end(), rng);

    const int next_id = static_cast<int>(plan.communities.size());
    for (int half = 0; half < 2; ++half) {
        PlannedCommunity pc;
        pc.id = next_id + half;
        pc.pattern = "bipartite";
        const auto begin = pool.begin() + half * (pool.size() / 2);
        const auto end = (half == 0) ? pool.begin() + pool.size() / 2 : pool.end();
        pc.nodes.assign(begin, end);
        std::sort(pc.nodes.begin(), pc.nodes.end());
        PlantedLayer pl{layer, Structure::Bipartite, 0.4, {}};
        pl.group_of = random_groups(rng, static_cast<int>(pc.nodes.size()), 2);
        pc.planted.push_back(std::move(pl));
        plan.communities.push_back(std::move(pc));
    }
}

Plan plan_s4(Rng& rng, const ScenarioConfig& cfg) {
    Plan plan;
    plan.num_layers = 3;
    plan.num_nodes = 80;
    auto node_sets = sample_community_nodes(rng, plan.num_nodes, 15, 20);
    const auto shared_layers = sample_layers(rng, 3, 2);
    const int third = 3 - shared_layers[0] - shared_layers[1];
    for (std::size_t c = 0; c < node_sets.size(); ++c) {
        PlannedCommunity pc;
        pc.id = static_cast<int>(c);
        pc.nodes = node_sets[c];
        const double p = uniform_real(rng, cfg.p_in_min, cfg.p_in_max);
        for (int k : shared_layers) pc.planted.push_back({k, Structure::Dense, p, {}});
        plan.communities.push_back(std::move(pc));
    }
    const int c = static_cast<int>(plan.communities.size());
    const int ca = uniform_int(rng, 0, c - 1);
    int cb = uniform_int(rng, 0, c - 2);
    if (cb >= ca) ++cb;
    plant_bipartite_pair(rng, plan, std::min(ca, cb), std::max(ca, cb), third);
    return plan;
}

Plan plan_s5(Rng& rng, const ScenarioConfig& cfg) {
    Plan plan;
    plan.num_layers = 4;
    plan.num_nodes = uniform_int(rng, 150, 180);
    // Cap the per-pair noise probability so the expected number of noise
    // edges per node stays in the same regime as the smaller scenarios.
    // With the probability held fixed the noise degree grows with N and the
    // random walk mixes out before any community signal can accumulate.
    plan.noise_p =
        std::min(cfg.p_noise, 9.0 / (plan.num_nodes * plan.num_layers));
    auto node_sets = sample_community_nodes(rng, plan.num_nodes, 22, 30);
    const int c = static_cast<int>(node_sets.size());

    std::vector<int> style(c);
    for (int i = 0; i < c; ++i) style[i] = uniform_int(rng, 1, 4);
    // bipartite re-partitioning needs community pairs
    std::vector<int> s4_comms;
    for (int i = 0; i < c; ++i)
        if (style[i] == 4) s4_comms.push_back(i);
    if (s4_comms.size() % 2 == 1) {
        style[s4_comms.back()] = 1;
        s4_comms.pop_back();
    }

    for (int i = 0; i < c; ++i) {
        PlannedCommunity pc;
        pc.id = i;
        pc.nodes = node_sets[i];
        const double p = uniform_real(rng, cfg.p_in_min, cfg.p_in_max);
        switch (style[i]) {
            case 1: {
                for (int k : sample_layers(rng, 4, uniform_int(rng, 2, 3)))
                    pc.planted.push_back({k, Structure::Dense, p, {}});
                break;
            }
            case 2: {
                pc.pattern = "split";
                const auto layers = sample_layers(rng, 4, 3);
                const auto split = sample_layers(rng, 3, 2);  // indices into layers
                for (int j = 0; j < 3; ++j) {
                    PlantedLayer pl{layers[j], Structure::Dense, p, {}, {}};
                    if (std::find(split.begin(), split.end(), j) != split.end()) {
                        pl.structure = Structure::Subsets;
                        const int parts = uniform_int(rng, 2, 3);
                        pl.group_of =
                            random_groups(rng, static_cast<int>(pc.nodes.size()), parts);
                        for (int g = 0; g < parts; ++g)
                            pl.group_p.push_back(
                                uniform_real(rng, cfg.p_in_min, cfg.p_in_max));
                    }
                    pc.planted.push_back(std::move(pl));
                }
                break;
            }
            case 3: {
                pc.pattern = "weak";
                const auto layers = sample_layers(rng, 4, 3);
                const int weak = uniform_int(rng, 0, 2);
                for (int j = 0; j < 3; ++j) {
                    PlantedLayer pl{layers[j], Structure::Dense, p, {}};
                    if (j == weak) {
                        pl.structure = Structure::Weak;
                        pl.p = uniform_real(rng, 0.10, 0.20);
                    }
                    pc.planted.push_back(std::move(pl));
                }
                break;
            }
            case 4:
                // planted below, jointly with its partner community
                break;
        }
        plan.communities.push_back(std::move(pc));
    }
    for (std::size_t i = 0; i + 1 < s4_comms.size(); i += 2) {
        const int ca = s4_comms[i];
        const int cb = s4_comms[i + 1];
        // two shared layers for the pair, plus a third for the re-partition
        std::vector<int> layers{0, 1, 2, 3};
        std::shuffle(layers.begin(), layers.end(), rng);
        const double p = uniform_real(rng, cfg.p_in_min, cfg.p_in_max);
        for (int cid : {ca, cb}) {
            plan.communities[cid].planted.push_back({layers[0], Structure::Dense, p, {}});
            plan.communities[cid].planted.push_back({layers[1], Structure::Dense, p, {}});
        }
        plant_bipartite_pair(rng, plan, ca, cb, layers[2]);
    }
    return plan;
}

GeneratedInstance materialize(Rng& rng, const Plan& plan, const ScenarioConfig& cfg) {
    const int n = plan.num_nodes;
    const int l = plan.num_layers;
    Multiplex m(n, l);
    GroundTruth gt;
    gt.num_nodes = n;
    gt.num_layers = l;
    gt.labels.assign(static_cast<std::size_t>(n) * l, GroundTruth::kBackground);

    // planted community per node-layer (index into plan.communities)
    std::vector<std::vector<int>> comm_at(l, std::vector<int>(n, -1));
    for (std::size_t c = 0; c < plan.communities.size(); ++c) {
        const auto& pc = plan.communities[c];
        for (const auto& pl : pc.planted)
            for (int v : pc.nodes) {
                comm_at[pl.layer][v] = static_cast<int>(c);
                gt.labels[pl.layer * n + v] = pc.id;
            }
    }

    // planted structure, community by community, layer by layer
    for (const auto& pc : plan.communities) {
        for (const auto& pl : pc.planted) {
            const int sz = static_cast<int>(pc.nodes.size());
            for (int a = 0; a < sz; ++a) {
                for (int b = a + 1; b < sz; ++b) {
                    bool eligible = true;
                    double p = pl.p;
                    if (pl.structure == Structure::Subsets) {
                        eligible = pl.group_of[a] == pl.group_of[b];
                        if (eligible && !pl.group_p.empty()) p = pl.group_p[pl.group_of[a]];
                    } else if (pl.structure == Structure::Bipartite)
                        eligible = pl.group_of[a] != pl.group_of[b];
                    if (eligible && flip(rng, p))
                        m.add_edge(pl.layer, pc.nodes[a], pc.nodes[b]);
                }
            }
        }
    }

    // background / inter-community noise
    for (int k = 0; k < l; ++k) {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const int cu = comm_at[k][u];
                const int cv = comm_at[k][v];
                if (cu >= 0 && cu == cv) continue;  // planted pair, already handled
                double p = plan.noise_p >= 0.0 ? plan.noise_p : cfg.p_noise;
                const auto& sp = plan.special;
                if (k == sp.layer && cu >= 0 && cv >= 0 &&
                    std::min(cu, cv) == sp.comm_a && std::max(cu, cv) == sp.comm_b)
                    p = sp.p;
                if (flip(rng, p)) m.add_edge(k, u, v);
            }
        }
    }

    GeneratedInstance inst{std::move(m), std::move(gt), cfg.scenario, cfg.seed,
                           cfg.p_noise, {}};
    for (const auto& pc : plan.communities) {
        CommunityInfo info;
        info.id = pc.id;
        info.size = static_cast<int>(pc.nodes.size());
        for (const auto& pl : pc.planted) info.layers.push_back(pl.layer);
        std::sort(info.layers.begin(), info.layers.end());
        info.pattern = pc.pattern;
        inst.communities.push_back(std::move(info));
    }
    return inst;
}

}  // namespace

Scenario scenario_from_string(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), ::tolower);
    if (s == "s1") return Scenario::S1;
    if (s == "s2") return Scenario::S2;
    if (s == "s3") return Scenario::S3;
    if (s == "s4") return Scenario::S4;
    if (s == "s5") return Scenario::S5;
    throw std::invalid_argument("unknown scenario '" + name + "'");
}

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::S1: return "s1";
        case Scenario::S2: return "s2";
        case Scenario::S3: return "s3";
        case Scenario::S4: return "s4";
        case Scenario::S5: return "s5";
    }
    return "?";
}

GeneratedInstance generate(const ScenarioConfig& cfg) {
    if (cfg.p_noise < 0.0 || cfg.p_noise > 1.0 || cfg.p_in_min < 0.0 ||
        cfg.p_in_max > 1.0 || cfg.p_in_min > cfg.p_in_max)
        throw std::invalid_argument("probabilities must lie in [0,1]");
    Rng rng(cfg.seed);
    Plan plan;
    switch (cfg.scenario) {
        case Scenario::S1: plan = plan_s1(rng, cfg); break;
        case Scenario::S2: plan = plan_s2(rng, cfg); break;
        case Scenario::S3: plan = plan_s3(rng, cfg); break;
        case Scenario::S4: plan = plan_s4(rng, cfg); break;
        case Scenario::S5: plan = plan_s5(rng, cfg); break;
    }
    return materialize(rng, plan, cfg);
}

void write_truth_stream(const GroundTruth& gt, std::ostream& out) {
    for (int k = 0; k < gt.num_layers; ++k)
        for (int i = 0; i < gt.num_nodes; ++i)
            out << k << " " << i << " " << gt.labels[k * gt.num_nodes + i] << "\n";
}

void write_truth(const GroundTruth& gt, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_truth_stream(gt, out);
}

GroundTruth read_truth_stream(std::istream& in) {
    std::map<std::pair<int, int>, int> entries;
    std::string line;
    int lineno = 0;
    int max_node = -1, max_layer = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int layer, node, label;
        if (!(ls >> layer >> node >> label)) throw ParseError("malformed truth line", lineno);
        if (layer < 0 || node < 0) throw ParseError("negative index", lineno);
        if (label < GroundTruth::kBackground) throw ParseError("invalid label", lineno);
        if (!entries.emplace(std::pair{layer, node}, label).second)
            throw ParseError("duplicate node-layer entry", lineno);
        max_node = std::max(max_node, node);
        max_layer = std::max(max_layer, layer);
    }
    if (entries.empty()) throw ParseError("empty truth file", lineno);
    GroundTruth gt;
    gt.num_nodes = max_node + 1;
    gt.num_layers = max_layer + 1;
    if (entries.size() != static_cast<std::size_t>(gt.num_nodes) * gt.num_layers)
        throw ParseError("missing node-layer entries", lineno);
    gt.labels.resize(entries.size());
    for (const auto& [key, label] : entries)
        gt.labels[key.first * gt.num_nodes + key.second] = label;
    return gt;
}

GroundTruth read_truth(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_truth_stream(in);
}

std::string manifest_json(const GeneratedInstance& inst) {
    nlohmann::json j;
    j["scenario"] = to_string(inst.scenario);
    j["seed"] = inst.seed;
    j["num_nodes"] = inst.multiplex.num_nodes();
    j["num_layers"] = inst.multiplex.num_layers();
    j["num_edges"] = inst.multiplex.num_edges();
    j["p_noise"] = inst.p_noise;
    j["communities"] = nlohmann::json::array();
    for (const auto& c : inst.communities) {
        j["communities"].push_back({{"id", c.id},
                                    {"size", c.size},
                                    {"layers", c.layers},
                                    {"pattern", c.pattern}});
    }
    return j.dump(2);
}

}  // namespace lart
