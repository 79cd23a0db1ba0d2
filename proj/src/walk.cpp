#include "lart/walk.hpp"

#include <iostream>

namespace lart {

Eigen::SparseMatrix<double> transition_matrix(const SupraAdjacency& sa) {
    const int nl = sa.size();
    Eigen::SparseMatrix<double> p = sa.regularized;
    for (int col = 0; col < nl; ++col)
        for (Eigen::SparseMatrix<double>::InnerIterator it(p, col); it; ++it)
            it.valueRef() /= sa.degrees[it.row()];
    return p;
}

TransitionPowers walk_power(const Eigen::SparseMatrix<double>& p,
                            const SupraAdjacency& sa, int t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    TransitionPowers tp;
    tp.num_nodes = sa.num_nodes;
    tp.num_layers = sa.num_layers;
    tp.t = t;
    tp.degrees = sa.degrees;

    const int nl = sa.size();
    if (t == 0) {
        std::cerr << "warning: walk_power called with t=0; returning identity\n";
        tp.matrix = Eigen::MatrixXd::Identity(nl, nl);
        return tp;
    }
    tp.matrix = Eigen::MatrixXd(p);
    for (int step = 1; step < t; ++step) tp.matrix = p * tp.matrix;
    return tp;
}

StationaryDistribution stationary(const SupraAdjacency& sa) {
    StationaryDistribution sd;
    sd.probs = sa.degrees / sa.degrees.sum();
    return sd;
}

}  // namespace lart
