#pragma once

#include <optional>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "lart/multiplex.hpp"

namespace lart {

/// The NL x NL supra-adjacency of a multiplex, in two variants:
///   raw          diagonal blocks A_k, off-diagonal blocks diag(omega_{.;kl})
///   regularized  raw + epsilon on every block's main diagonal
///
/// The regularized variant drives the random walk (it is connected and
/// non-bipartite for any input); the raw variant carries the structure used
/// by the merge constraint and by multiplex modularity.
struct SupraAdjacency {
    int num_nodes = 0;
    int num_layers = 0;
    double epsilon = 1.0;

    Eigen::SparseMatrix<double> raw;
    Eigen::SparseMatrix<double> regularized;

    /// Row sums of `regularized` (multiplex degrees kappa).
    Eigen::VectorXd degrees;

    /// Within-layer degree of each node-layer in the raw matrix.
    Eigen::VectorXd layer_degrees;

    int size() const { return num_nodes * num_layers; }
    int flat_index(int node, int layer) const { return layer * num_nodes + node; }

    /// Inter-layer coupling weight between (node,k) and (node,l), k != l.
    double omega(int node, int layer_k, int layer_l) const;
};

/// Builds the supra-adjacency with locally adaptive inter-layer weights
/// omega_{i;kl} = |N_{i,k} intersect N_{i,l}|.
SupraAdjacency build_supra(const Multiplex& m, double epsilon);

/// Same construction but with every inter-layer weight fixed to `omega`
/// (the Fixed1 baseline).
SupraAdjacency build_supra_fixed(const Multiplex& m, double omega, double epsilon);

namespace detail {
SupraAdjacency build_supra_impl(const Multiplex& m, double epsilon,
                                std::optional<double> fixed_omega);
}

}  // namespace lart
