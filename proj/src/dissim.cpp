#include "lart/dissim.hpp"

#include <cmath>
#include <stdexcept>

namespace lart {

namespace {

using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Scales the columns of P^t by 1/sqrt(kappa), so that same-layer distances
// become plain Euclidean row differences and cross-layer distances become
// row differences after swapping the k and l column blocks.
RowMajorMatrix scaled_rows(const TransitionPowers& tp) {
    return tp.matrix * tp.degrees.cwiseSqrt().cwiseInverse().asDiagonal();
}

double same_from_scaled(const double* ra, const double* rb, int nl) {
    double sum = 0.0;
    for (int x = 0; x < nl; ++x) {
        const double d = ra[x] - rb[x];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double cross_from_scaled(const double* ra, const double* rb, int n, int l_total,
                         int k, int l) {
    double sum = 0.0;
    for (int m = 0; m < l_total; ++m) {
        // row b reads layers k and l swapped
        const int mb = (m == k) ? l : (m == l) ? k : m;
        const double* pa = ra + m * n;
        const double* pb = rb + mb * n;
        for (int h = 0; h < n; ++h) {
            const double d = pa[h] - pb[h];
            sum += d * d;
        }
    }
    return std::sqrt(sum);
}

}  // namespace

double same_layer_distance(const TransitionPowers& tp, int i, int j, int k) {
    const RowMajorMatrix q = scaled_rows(tp);
    const int a = tp.flat_index(i, k);
    const int b = tp.flat_index(j, k);
    return same_from_scaled(q.row(a).data(), q.row(b).data(), tp.size());
}

double cross_layer_distance(const TransitionPowers& tp, int i, int k, int j, int l) {
    if (k == l)
        throw std::invalid_argument("cross_layer_distance requires k != l; use same_layer_distance");
    const RowMajorMatrix q = scaled_rows(tp);
    const int a = tp.flat_index(i, k);
    const int b = tp.flat_index(j, l);
    return cross_from_scaled(q.row(a).data(), q.row(b).data(), tp.num_nodes,
                             tp.num_layers, k, l);
}

DissimilarityMatrix dissimilarity_matrix(const TransitionPowers& tp) {
    const int n = tp.num_nodes;
    const int nl = tp.size();
    const RowMajorMatrix q = scaled_rows(tp);

    DissimilarityMatrix s;
    s.num_nodes = n;
    s.num_layers = tp.num_layers;
    s.t = tp.t;
    s.values = Eigen::MatrixXd::Zero(nl, nl);

    for (int a = 0; a < nl; ++a) {
        const int k = a / n;
        const double* ra = q.row(a).data();
        for (int b = a + 1; b < nl; ++b) {
            const int l = b / n;
            const double* rb = q.row(b).data();
            const double d = (k == l)
                                 ? same_from_scaled(ra, rb, nl)
                                 : cross_from_scaled(ra, rb, n, tp.num_layers, k, l);
            s.values(a, b) = d;
            s.values(b, a) = d;
        }
    }
    return s;
}

}  // namespace lart
