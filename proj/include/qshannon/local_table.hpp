#pragma once

#include <cstdint>
#include <vector>

#include "qshannon/entropy.hpp"

namespace qshannon {

/// Pair configurations grouped by site separation d = j2 - j1. All pair
/// probabilities in this library depend on the positions only through
/// the separation, so a table row is (d, probability, multiplicity)
/// with multiplicity L-d (total system) or ell-d (subsystem). This
/// keeps table construction O(L) instead of O(L^2).
struct SeparationWeight {
    std::int64_t separation;
    double probability;
    std::int64_t multiplicity;
};

/// The finite probability table of local configurations for one state
/// and one region: the vacuum entry p0 (subsystem tables only), the
/// single-occupation entries p_j, the doubly-occupied-site entries
/// p_{j^2} (bosonic states only), and the separation-grouped pair
/// entries p_{j1 j2}.
struct LocalProbabilities {
    bool has_vacuum = false;
    double p0 = 0.0;
    std::vector<double> singles;      // p_j, j = 1..ell
    std::vector<double> diagonal;     // p_{j^2}, j = 1..count
    std::vector<SeparationWeight> pairs;

    double total_weight() const;
    double entropy() const;           // -sum p log p over every entry, compensated
    std::int64_t outcome_count() const;

    /// Flattened copy (multiplicities expanded) as a checked distribution.
    ProbabilityDistribution to_distribution(double tolerance = 1e-10) const;
};

}  // namespace qshannon
