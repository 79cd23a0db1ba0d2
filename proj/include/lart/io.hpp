#pragma once

#include <string>

#include <Eigen/Dense>

#include "lart/cluster.hpp"

namespace lart {

/// Partition text format: one `<layer> <node> <community>` line per
/// node-layer.
void write_partition(const Partition& p, int num_nodes, int num_layers,
                     const std::string& path);
Partition read_partition(const std::string& path);

/// Detect-run bundle: partition, per-level Q_M curve, parameters used and
/// the merge list.
std::string detect_json(const DetectResult& res, int num_nodes, int num_layers,
                        int t, double epsilon, double gamma,
                        std::optional<double> fixed_omega);

/// Dense CSV dump (row index = flat node-layer index), used for P^t
/// heat-map inspection and S(t) debugging.
void write_matrix_csv(const Eigen::MatrixXd& m, const std::string& path);

}  // namespace lart
