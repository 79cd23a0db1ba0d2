#pragma once

#include <optional>
#include <vector>

#include "lart/dissim.hpp"
#include "lart/supra.hpp"

namespace lart {

/// Community labels over node-layer pairs (flat layer-major index).
/// Ids are contiguous 0..num_communities-1.
struct Partition {
    std::vector<int> labels;
    int num_communities = 0;

    int label(int node, int layer, int num_nodes) const {
        return labels[layer * num_nodes + node];
    }
};

struct Merge {
    int cluster_a = 0;
    int cluster_b = 0;
    double distance = 0.0;
    int new_cluster = 0;
};

/// Merge history of the constrained agglomeration. levels[0] is the
/// all-singletons partition; levels[i] the partition after merge i-1.
/// q_scores holds multiplex modularity per level. Linkage distances are
/// recorded as computed; inversions are possible under the connectivity
/// constraint.
struct Dendrogram {
    std::vector<Merge> merges;
    std::vector<Partition> levels;
    std::vector<double> q_scores;
};

/// Connectivity-constrained average-linkage clustering over S(t).
///
/// Starts from NL singletons and repeatedly merges the connected pair with
/// minimal average distance. Connectivity is judged on the raw supra-adjacency:
/// a pair is mergeable only if a within-layer edge or a nonzero inter-layer
/// weight links them (epsilon coupling alone does not). Stops when no
/// mergeable pair remains. Ties at equal distance go to the smallest
/// (cluster_a, cluster_b) pair, ids ordered ascending.
Dendrogram agglomerate(const DissimilarityMatrix& s, const SupraAdjacency& sa);

/// Multiplex modularity Q_M with coupling weights omega_{i;sr}, computed on
/// the raw supra-adjacency (epsilon excluded). Layers without edges
/// contribute no intra-layer null term.
double multiplex_modularity(const Partition& p, const SupraAdjacency& sa, double gamma);

/// The dendrogram level with maximal Q_M; ties go to fewer communities.
/// Requires q_scores to be populated (agglomerate with scoring, or rescore).
Partition select_partition(const Dendrogram& d);

/// Computes Q_M for every level of `d` in place.
void score_levels(Dendrogram& d, const SupraAdjacency& sa, double gamma);

struct DetectResult {
    Partition partition;
    Dendrogram dendrogram;
    SupraAdjacency supra;
};

/// End-to-end pipeline: supra-adjacency (adaptive weights, or fixed when
/// `fixed_omega` is set), walk of length t, dissimilarity, constrained
/// agglomeration, Q_M-based selection. Deterministic for fixed inputs.
DetectResult lart_detect(const Multiplex& m, int t, double epsilon, double gamma,
                         std::optional<double> fixed_omega = std::nullopt);

}  // namespace lart
