#pragma once

#include <cstdint>

#include "qshannon/boson.hpp"
#include "qshannon/entropy.hpp"

namespace qshannon::number_dist {

enum class Statistics { bose, fermi };

/// Probability of finding 0, 1, or 2 particles in A for the free-chain
/// state |k1 k2>. The interference term sin^2(pi k12 x) / (L^2 sin^2(pi
/// k12/L)) is added to p0 and p2 and subtracted twice from p1 for
/// bosons; signs flip for fermions. Sums to 1 by algebraic identity.
ProbabilityDistribution boson_number_probs(const ChainGeometry& geom, const MomentumPair& pair);
ProbabilityDistribution fermion_number_probs(const ChainGeometry& geom, const MomentumPair& pair);

/// Same distributions with x supplied directly (admits the x = 0 and
/// x = 1 boundary points the ChainGeometry type excludes).
ProbabilityDistribution number_probs_at(Statistics st, std::int64_t L, double x,
                                        std::int64_t k12);

double number_entropy(const ProbabilityDistribution& probs);

/// H_R^cl: entropy of the binomial count distribution; the |k12| -> inf
/// limit of both quantum results, and the single-particle / |k^2>
/// answer for any momentum.
double classical_binomial_entropy(std::int64_t R, double x);

}  // namespace qshannon::number_dist
