#include "lart/cluster.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "lart/walk.hpp"

namespace lart {

namespace {

// Contiguous labels for the active clusters, in ascending cluster-id order.
Partition partition_from_clusters(const std::vector<int>& cluster_of, int nl,
                                  const std::vector<int>& active_sorted) {
    Partition p;
    p.labels.resize(nl);
    p.num_communities = static_cast<int>(active_sorted.size());
    for (int x = 0; x < nl; ++x) {
        auto it = std::lower_bound(active_sorted.begin(), active_sorted.end(), cluster_of[x]);
        p.labels[x] = static_cast<int>(it - active_sorted.begin());
    }
    return p;
}

}  // namespace

Dendrogram agglomerate(const DissimilarityMatrix& s, const SupraAdjacency& sa) {
    const int nl = s.size();
    if (nl != sa.size()) throw std::invalid_argument("dissimilarity and supra sizes disagree");

    const int max_clusters = 2 * nl - 1;

    // Per-cluster state, indexed by cluster id (singletons 0..nl-1, merged
    // clusters get ids nl, nl+1, ...).
    std::vector<int> size(max_clusters, 0);
    std::vector<char> alive(max_clusters, 0);
    // avg[a][b]: mean pairwise S between clusters a and b.
    std::vector<std::vector<double>> avg(max_clusters);
    std::vector<std::vector<char>> conn(max_clusters);
    for (int a = 0; a < max_clusters; ++a) {
        avg[a].assign(max_clusters, 0.0);
        conn[a].assign(max_clusters, 0);
    }

    for (int x = 0; x < nl; ++x) {
        size[x] = 1;
        alive[x] = 1;
        for (int y = 0; y < nl; ++y) avg[x][y] = s.values(x, y);
    }
    for (int col = 0; col < nl; ++col)
        for (Eigen::SparseMatrix<double>::InnerIterator it(sa.raw, col); it; ++it)
            if (it.row() != col) conn[it.row()][col] = 1;

    std::vector<int> cluster_of(nl);
    std::iota(cluster_of.begin(), cluster_of.end(), 0);
    std::vector<int> active(nl);
    std::iota(active.begin(), active.end(), 0);

    Dendrogram d;
    d.levels.push_back(partition_from_clusters(cluster_of, nl, active));

    int next_id = nl;
    while (active.size() > 1) {
        // find the connected pair with minimal average distance
        double best = std::numeric_limits<double>::infinity();
        int best_a = -1, best_b = -1;
        for (std::size_t ia = 0; ia + 1 < active.size(); ++ia) {
            const int a = active[ia];
            for (std::size_t ib = ia + 1; ib < active.size(); ++ib) {
                const int b = active[ib];
                if (!conn[a][b]) continue;
                const double dist = avg[a][b];
                if (dist < best ||
                    (dist == best && std::pair{a, b} < std::pair{best_a, best_b})) {
                    best = dist;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        if (best_a < 0) break;  // no mergeable pair left (disconnected A*)

        const int id = next_id++;
        size[id] = size[best_a] + size[best_b];
        alive[id] = 1;
        alive[best_a] = alive[best_b] = 0;

        // Lance-Williams update for average linkage; connectivity by union.
        for (int c : active) {
            if (c == best_a || c == best_b) continue;
            avg[id][c] = (size[best_a] * avg[best_a][c] + size[best_b] * avg[best_b][c]) /
                         size[id];
            avg[c][id] = avg[id][c];
            conn[id][c] = conn[c][id] = conn[best_a][c] | conn[best_b][c];
        }

        active.erase(std::remove_if(active.begin(), active.end(),
                                    [&](int c) { return c == best_a || c == best_b; }),
                     active.end());
        active.push_back(id);  // ids are created in increasing order, stays sorted

        for (int x = 0; x < nl; ++x)
            if (cluster_of[x] == best_a || cluster_of[x] == best_b) cluster_of[x] = id;

        d.merges.push_back({best_a, best_b, best, id});
        d.levels.push_back(partition_from_clusters(cluster_of, nl, active));
    }
    return d;
}

double multiplex_modularity(const Partition& p, const SupraAdjacency& sa, double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
    const int n = sa.num_nodes;
    const int l = sa.num_layers;
    const int nl = n * l;
    if (static_cast<int>(p.labels.size()) != nl)
        throw std::invalid_argument("partition does not cover all node-layers");

    const double two_mu = sa.raw.sum();
    if (two_mu == 0.0) return 0.0;

    // adjacency and coupling terms over pairs sharing a community
    double edge_sum = 0.0;
    for (int col = 0; col < nl; ++col)
        for (Eigen::SparseMatrix<double>::InnerIterator it(sa.raw, col); it; ++it)
            if (p.labels[it.row()] == p.labels[col]) edge_sum += it.value();

    // intra-layer null model, per layer and community
    double null_sum = 0.0;
    std::vector<double> comm_deg(p.num_communities);
    for (int k = 0; k < l; ++k) {
        std::fill(comm_deg.begin(), comm_deg.end(), 0.0);
        double two_m = 0.0;
        for (int i = 0; i < n; ++i) {
            const int x = k * n + i;
            comm_deg[p.labels[x]] += sa.layer_degrees[x];
            two_m += sa.layer_degrees[x];
        }
        if (two_m == 0.0) continue;  // empty layer contributes no null term
        for (double dsum : comm_deg) null_sum += dsum * dsum / two_m;
    }

    return (edge_sum - gamma * null_sum) / two_mu;
}

void score_levels(Dendrogram& d, const SupraAdjacency& sa, double gamma) {
    d.q_scores.resize(d.levels.size());
    for (std::size_t i = 0; i < d.levels.size(); ++i)
        d.q_scores[i] = multiplex_modularity(d.levels[i], sa, gamma);
}

Partition select_partition(const Dendrogram& d) {
    if (d.levels.empty()) throw std::invalid_argument("empty dendrogram");
    if (d.q_scores.size() != d.levels.size())
        throw std::invalid_argument("dendrogram levels are unscored");
    // later levels have fewer communities, so >= implements the tie-break
    std::size_t best = 0;
    for (std::size_t i = 1; i < d.levels.size(); ++i)
        if (d.q_scores[i] >= d.q_scores[best]) best = i;
    return d.levels[best];
}

DetectResult lart_detect(const Multiplex& m, int t, double epsilon, double gamma,
                         std::optional<double> fixed_omega) {
    DetectResult res;
    res.supra = fixed_omega ? build_supra_fixed(m, *fixed_omega, epsilon)
                            : build_supra(m, epsilon);
    const auto p = transition_matrix(res.supra);
    const auto tp = walk_power(p, res.supra, t);
    const auto s = dissimilarity_matrix(tp);
    res.dendrogram = agglomerate(s, res.supra);
    score_levels(res.dendrogram, res.supra, gamma);
    res.partition = select_partition(res.dendrogram);
    return res;
}

}  // namespace lart
