#pragma once

#include <cstdint>
#include <vector>

#include "qshannon/entropy.hpp"

namespace qshannon::classical {

enum class CoreType { soft, hard };

CoreType core_from_string(const std::string& name);

/// Multi-species particle content: species[i] particles of kind i.
struct ClassicalConfig {
    CoreType core = CoreType::soft;
    std::vector<std::int64_t> species;

    std::int64_t total_particles() const;
};

/// One classical particle on the circle; the exact table holds at all L.
EntropyReport one_particle_report(const ChainGeometry& geom, EvalMode mode);

/// Two identical particles, soft-core (multiple occupancy allowed) or
/// hard-core (at most one per site). The two cores share one scaling
/// triple.
EntropyReport two_identical_report(const ChainGeometry& geom, CoreType core, EvalMode mode);

/// Two distinguishable particles.
EntropyReport two_distinguishable_report(const ChainGeometry& geom, CoreType core, EvalMode mode);

/// r identical particles in the scaling limit.
EntropyReport r_identical_scaling_report(double x, std::int64_t L, std::int64_t r);

/// s species with multiplicities config.species, scaling limit; reports
/// are exactly additive over species.
EntropyReport multi_species_scaling_report(double x, std::int64_t L, const ClassicalConfig& config);

/// Entropy of the coarse-grained particle-count distribution
/// {C_R^r x^r (1-x)^(R-r)}; every classical scaling MI equals this.
double binomial_count_entropy(std::int64_t R, double x);

}  // namespace qshannon::classical
