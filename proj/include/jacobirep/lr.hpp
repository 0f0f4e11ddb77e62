#pragma once

#include "jacobirep/partition.hpp"

namespace jacobirep {

// Littlewood-Richardson coefficient N^{lambda}_{mu nu}, by exhaustive
// enumeration of LR skew tableaux of shape lambda/mu and content nu.
// Total: returns 0 on any size/containment mismatch.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Number of standard Young tableaux of shape lambda (dim of the Specht
// module), by backtracking enumeration.
long standard_tableaux_count(const Partition& lambda);

}  // namespace jacobirep
