#pragma once

#include <Eigen/Dense>

#include "lart/walk.hpp"

namespace lart {

/// All pairwise node-layer distances S(t): symmetric, zero diagonal,
/// satisfies the triangle inequality.
struct DissimilarityMatrix {
    int num_nodes = 0;
    int num_layers = 0;
    int t = 0;
    Eigen::MatrixXd values;

    int size() const { return num_nodes * num_layers; }
    int flat_index(int node, int layer) const { return layer * num_nodes + node; }
};

/// Distance between v_i^k and v_j^k: Euclidean norm of the degree-weighted
/// difference of their full probability rows.
double same_layer_distance(const TransitionPowers& tp, int i, int j, int k);

/// Distance between v_i^k and v_j^l for k != l: sqrt(s1 + s2 + s3), where
/// s1 compares own-layer rows, s2 compares swapped-layer rows and s3 covers
/// the remaining layers. Symmetric under swapping (i,k) <-> (j,l).
double cross_layer_distance(const TransitionPowers& tp, int i, int k, int j, int l);

DissimilarityMatrix dissimilarity_matrix(const TransitionPowers& tp);

}  // namespace lart
