#include "lart/metrics.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace lart {

namespace {

struct Contingency {
    std::map<std::pair<int, int>, long long> cells;
    std::map<int, long long> row_marginals;
    std::map<int, long long> col_marginals;
    long long n = 0;
};

Contingency contingency(const Partition& p1, const Partition& p2) {
    if (p1.labels.size() != p2.labels.size() || p1.labels.empty())
        throw std::invalid_argument("partitions must cover the same non-empty element set");
    Contingency c;
    c.n = static_cast<long long>(p1.labels.size());
    for (std::size_t x = 0; x < p1.labels.size(); ++x) {
        ++c.cells[{p1.labels[x], p2.labels[x]}];
        ++c.row_marginals[p1.labels[x]];
        ++c.col_marginals[p2.labels[x]];
    }
    return c;
}

bool identical_up_to_relabel(const Contingency& c) {
    // every row and column holds exactly one nonzero cell
    return c.cells.size() == c.row_marginals.size() &&
           c.cells.size() == c.col_marginals.size();
}

double entropy(const std::map<int, long long>& marginals, long long n) {
    double h = 0.0;
    for (const auto& [label, cnt] : marginals) {
        const double p = static_cast<double>(cnt) / n;
        h -= p * std::log(p);
    }
    return h;
}

}  // namespace

double nmi(const Partition& p1, const Partition& p2) {
    const auto c = contingency(p1, p2);
    const double h1 = entropy(c.row_marginals, c.n);
    const double h2 = entropy(c.col_marginals, c.n);
    if (h1 <= 0.0 || h2 <= 0.0) return identical_up_to_relabel(c) ? 1.0 : 0.0;
    double mi = 0.0;
    for (const auto& [cell, cnt] : c.cells) {
        const double pxy = static_cast<double>(cnt) / c.n;
        const double px = static_cast<double>(c.row_marginals.at(cell.first)) / c.n;
        const double py = static_cast<double>(c.col_marginals.at(cell.second)) / c.n;
        mi += pxy * std::log(pxy / (px * py));
    }
    return mi / std::sqrt(h1 * h2);
}

double fowlkes_mallows(const Partition& p1, const Partition& p2) {
    const auto c = contingency(p1, p2);
    double t = -static_cast<double>(c.n);
    for (const auto& [cell, cnt] : c.cells) t += static_cast<double>(cnt) * cnt;
    double pp = -static_cast<double>(c.n);
    for (const auto& [label, cnt] : c.row_marginals) pp += static_cast<double>(cnt) * cnt;
    double qq = -static_cast<double>(c.n);
    for (const auto& [label, cnt] : c.col_marginals) qq += static_cast<double>(cnt) * cnt;
    if (pp == 0.0 || qq == 0.0) return identical_up_to_relabel(c) ? 1.0 : 0.0;
    return t / std::sqrt(pp * qq);
}

Partition truth_partition(const GroundTruth& gt) {
    Partition p;
    p.labels.resize(gt.labels.size());
    std::map<int, int> relabel;
    int next = 0;
    for (std::size_t x = 0; x < gt.labels.size(); ++x) {
        if (gt.labels[x] == GroundTruth::kBackground) {
            p.labels[x] = next++;  // unique singleton per background node-layer
        } else {
            auto [it, inserted] = relabel.emplace(gt.labels[x], -1);
            if (inserted) it->second = next++;
            p.labels[x] = it->second;
        }
    }
    p.num_communities = next;
    return p;
}

}  // namespace lart
