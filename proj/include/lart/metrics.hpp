#pragma once

#include <vector>

#include "lart/cluster.hpp"
#include "lart/synthgen.hpp"

namespace lart {

/// Normalized mutual information I(p1;p2)/sqrt(H1*H2) over the same element
/// set. 1 for identical partitions with a zero entropy; 0 when mutual
/// information vanishes in a degenerate case.
double nmi(const Partition& p1, const Partition& p2);

/// Generalized Fowlkes-Mallows index B = T/sqrt(P*Q) from the contingency
/// table (pair-counting form).
double fowlkes_mallows(const Partition& p1, const Partition& p2);

/// Ground truth as a Partition, with background node-layers expanded to
/// unique singleton communities.
Partition truth_partition(const GroundTruth& gt);

}  // namespace lart
