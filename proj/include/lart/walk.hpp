#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "lart/supra.hpp"

namespace lart {

/// The t-step transition matrix P^t of the multiplex walk, together with
/// the degrees kappa of the supra-adjacency that defined it.
struct TransitionPowers {
    int num_nodes = 0;
    int num_layers = 0;
    int t = 0;
    Eigen::MatrixXd matrix;   // row-stochastic NL x NL
    Eigen::VectorXd degrees;  // kappa, copied from the supra-adjacency

    int size() const { return num_nodes * num_layers; }
    int flat_index(int node, int layer) const { return layer * num_nodes + node; }
};

/// Degree-proportional stationary distribution p* = kappa / sum(kappa).
struct StationaryDistribution {
    Eigen::VectorXd probs;
};

/// One-step transition matrix P = D^-1 A over the regularized supra-adjacency.
/// Row-stochastic; entries between distinct nodes in distinct layers are zero.
Eigen::SparseMatrix<double> transition_matrix(const SupraAdjacency& sa);

/// P^t by t-1 successive sparse-times-dense multiplications.
/// t = 0 returns the identity (degenerate; distances at t=0 are meaningless).
TransitionPowers walk_power(const Eigen::SparseMatrix<double>& p,
                            const SupraAdjacency& sa, int t);

StationaryDistribution stationary(const SupraAdjacency& sa);

}  // namespace lart
