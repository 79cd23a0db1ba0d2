// Independent reference implementations used as test oracles. These must not
// share code with the library paths they check: the supra matrix is rebuilt
// densely from first principles, walk probabilities are enumerated
// recursively, and distances are expanded term by term.
#pragma once

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "lart/multiplex.hpp"

namespace oracle {

struct DenseSupra {
    int n = 0;
    int l = 0;
    std::vector<std::vector<double>> a;  // regularized, NL x NL
    std::vector<double> kappa;

    int idx(int node, int layer) const { return layer * n + node; }
};

// Dense epsilon-regularized supra-adjacency built directly from the
// definitions (set intersections for the inter-layer weights).
inline DenseSupra dense_supra(const lart::Multiplex& m, double eps,
                              double fixed_omega = -1.0) {
    DenseSupra d;
    d.n = m.num_nodes();
    d.l = m.num_layers();
    const int nl = d.n * d.l;
    d.a.assign(nl, std::vector<double>(nl, 0.0));
    for (int k = 0; k < d.l; ++k) {
        for (int i = 0; i < d.n; ++i) {
            const int x = d.idx(i, k);
            d.a[x][x] += eps;
            for (int j : m.neighbors(i, k)) d.a[x][d.idx(j, k)] += 1.0;
            for (int k2 = 0; k2 < d.l; ++k2) {
                if (k2 == k) continue;
                double w = fixed_omega;
                if (w < 0.0) {
                    std::set<int> na(m.neighbors(i, k).begin(), m.neighbors(i, k).end());
                    w = 0.0;
                    for (int v : m.neighbors(i, k2))
                        if (na.count(v)) w += 1.0;
                }
                d.a[x][d.idx(i, k2)] += w + eps;
            }
        }
    }
    d.kappa.assign(nl, 0.0);
    for (int x = 0; x < nl; ++x)
        for (int y = 0; y < nl; ++y) d.kappa[x] += d.a[x][y];
    return d;
}

// Probability of reaching y from x in exactly t steps, by recursive
// enumeration of all length-t walks.
inline double walk_prob(const DenseSupra& d, int x, int y, int t) {
    if (t == 0) return x == y ? 1.0 : 0.0;
    const int nl = d.n * d.l;
    double sum = 0.0;
    for (int z = 0; z < nl; ++z)
        if (d.a[x][z] != 0.0) sum += d.a[x][z] / d.kappa[x] * walk_prob(d, z, y, t - 1);
    return sum;
}

// Same-layer distance expanded term by term from enumerated walks.
inline double same_layer_dist(const DenseSupra& d, int i, int j, int k, int t) {
    double sum = 0.0;
    for (int m = 0; m < d.l; ++m)
        for (int h = 0; h < d.n; ++h) {
            const double diff =
                walk_prob(d, d.idx(i, k), d.idx(h, m), t) -
                walk_prob(d, d.idx(j, k), d.idx(h, m), t);
            sum += diff * diff / d.kappa[d.idx(h, m)];
        }
    return std::sqrt(sum);
}

// Cross-layer distance from the s1 + s2 + s3 expansion.
inline double cross_layer_dist(const DenseSupra& d, int i, int k, int j, int l, int t) {
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (int h = 0; h < d.n; ++h) {
        const double a1 = walk_prob(d, d.idx(i, k), d.idx(h, k), t) /
                          std::sqrt(d.kappa[d.idx(h, k)]);
        const double b1 = walk_prob(d, d.idx(j, l), d.idx(h, l), t) /
                          std::sqrt(d.kappa[d.idx(h, l)]);
        s1 += (a1 - b1) * (a1 - b1);
        const double a2 = walk_prob(d, d.idx(i, k), d.idx(h, l), t) /
                          std::sqrt(d.kappa[d.idx(h, l)]);
        const double b2 = walk_prob(d, d.idx(j, l), d.idx(h, k), t) /
                          std::sqrt(d.kappa[d.idx(h, k)]);
        s2 += (a2 - b2) * (a2 - b2);
        for (int m = 0; m < d.l; ++m) {
            if (m == k || m == l) continue;
            const double diff = walk_prob(d, d.idx(i, k), d.idx(h, m), t) -
                                walk_prob(d, d.idx(j, l), d.idx(h, m), t);
            s3 += diff * diff / d.kappa[d.idx(h, m)];
        }
    }
    return std::sqrt(s1 + s2 + s3);
}

// Standalone single-network WalkTrap distance r_ij at walk length t, with a
// self-loop of weight eps on every node.
inline double walktrap_dist(const std::vector<std::vector<double>>& adj, double eps,
                            int i, int j, int t) {
    const int n = static_cast<int>(adj.size());
    std::vector<double> deg(n, eps);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) deg[u] += adj[u][v];
    std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) p[u][v] = adj[u][v] / deg[u];
        p[u][u] += eps / deg[u];
    }
    auto pt = p;
    for (int step = 1; step < t; ++step) {
        std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w)
                for (int v = 0; v < n; ++v) next[u][v] += p[u][w] * pt[w][v];
        pt = next;
    }
    double sum = 0.0;
    for (int h = 0; h < n; ++h) {
        const double diff = pt[i][h] - pt[j][h];
        sum += diff * diff / deg[h];
    }
    return std::sqrt(sum);
}

// Newman-Girvan modularity by direct double loop.
inline double newman_girvan(const std::vector<std::vector<double>>& adj,
                            const std::vector<int>& labels) {
    const int n = static_cast<int>(adj.size());
    std::vector<double> deg(n, 0.0);
    double two_m = 0.0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            deg[u] += adj[u][v];
            two_m += adj[u][v];
        }
    if (two_m == 0.0) return 0.0;
    double q = 0.0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (labels[u] == labels[v]) q += adj[u][v] - deg[u] * deg[v] / two_m;
    return q / two_m;
}

// Fowlkes-Mallows by explicit enumeration of co-clustered element pairs.
inline double fm_pair_counting(const std::vector<int>& l1, const std::vector<int>& l2) {
    const int n = static_cast<int>(l1.size());
    double both = 0.0, first = 0.0, second = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const bool c1 = l1[a] == l1[b];
            const bool c2 = l2[a] == l2[b];
            if (c1 && c2) ++both;
            if (c1) ++first;
            if (c2) ++second;
        }
    if (first == 0.0 && second == 0.0) return 1.0;  // both all-singletons
    if (first == 0.0 || second == 0.0) return 0.0;
    return both / std::sqrt(first * second);
}

// Seeded Erdos-Renyi multiplex for property tests.
inline lart::Multiplex random_multiplex(std::mt19937_64& rng, int n, int l, double p) {
    lart::Multiplex m(n, l);
    std::bernoulli_distribution edge(p);
    for (int k = 0; k < l; ++k)
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng)) m.add_edge(k, u, v);
    return m;
}

}  // namespace oracle
