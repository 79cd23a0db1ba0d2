#include "lart/supra.hpp"

#include <vector>

namespace lart {

double SupraAdjacency::omega(int node, int layer_k, int layer_l) const {
    if (layer_k == layer_l) throw std::invalid_argument("omega requires k != l");
    return raw.coeff(flat_index(node, layer_k), flat_index(node, layer_l));
}

namespace detail {

SupraAdjacency build_supra_impl(const Multiplex& m, double epsilon,
                                std::optional<double> fixed_omega) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("epsilon must lie in (0,1]");
    if (fixed_omega && *fixed_omega < 0.0)
        throw std::invalid_argument("omega must be >= 0");

    const int n = m.num_nodes();
    const int l = m.num_layers();
    const int nl = n * l;

    std::vector<Eigen::Triplet<double>> raw_trip;
    std::vector<Eigen::Triplet<double>> reg_trip;
    raw_trip.reserve(2 * m.num_edges() + static_cast<std::size_t>(nl) * l);
    reg_trip.reserve(raw_trip.capacity() + nl);

    SupraAdjacency sa;
    sa.num_nodes = n;
    sa.num_layers = l;
    sa.epsilon = epsilon;
    sa.layer_degrees = Eigen::VectorXd::Zero(nl);

    for (int k = 0; k < l; ++k) {
        for (int i = 0; i < n; ++i) {
            const int x = sa.flat_index(i, k);
            sa.layer_degrees[x] = m.degree(i, k);
            // within-layer block
            for (int j : m.neighbors(i, k)) {
                raw_trip.emplace_back(x, sa.flat_index(j, k), 1.0);
                reg_trip.emplace_back(x, sa.flat_index(j, k), 1.0);
            }
            reg_trip.emplace_back(x, x, epsilon);
            // inter-layer couplings to the node's other copies
            for (int k2 = 0; k2 < l; ++k2) {
                if (k2 == k) continue;
                const double w =
                    fixed_omega ? *fixed_omega : interlayer_weight(m, i, k, k2);
                const int y = sa.flat_index(i, k2);
                if (w != 0.0) raw_trip.emplace_back(x, y, w);
                reg_trip.emplace_back(x, y, w + epsilon);
            }
        }
    }

    sa.raw.resize(nl, nl);
    sa.raw.setFromTriplets(raw_trip.begin(), raw_trip.end());
    sa.regularized.resize(nl, nl);
    sa.regularized.setFromTriplets(reg_trip.begin(), reg_trip.end());

    sa.degrees = sa.regularized * Eigen::VectorXd::Ones(nl);
    return sa;
}

}  // namespace detail

SupraAdjacency build_supra(const Multiplex& m, double epsilon) {
    return detail::build_supra_impl(m, epsilon, std::nullopt);
}

SupraAdjacency build_supra_fixed(const Multiplex& m, double omega, double epsilon) {
    return detail::build_supra_impl(m, epsilon, omega);
}

}  // namespace lart
