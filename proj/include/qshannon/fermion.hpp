#pragma once

#include <cstdint>

#include "qshannon/boson.hpp"
#include "qshannon/entropy.hpp"
#include "qshannon/local_table.hpp"

namespace qshannon::fermion {

/// Identical contract to the bosonic single-particle report.
EntropyReport single_particle_report(const ChainGeometry& geom);

/// Double-particle state |k1 k2| with sin^2-modulated pair weights, no
/// doubly-occupied sites, and the interference sign flipped in p0/p_j.
/// k1 == k2 (mod L) is rejected: the state vanishes.
LocalProbabilities k1k2_total_table(std::int64_t L, const MomentumPair& pair);
double k1k2_total_entropy(std::int64_t L, const MomentumPair& pair, EvalMode mode);
double exceptional_total_entropy(std::int64_t L, const ExceptionalMomentum& exc);

LocalProbabilities k1k2_sub_table(const ChainGeometry& geom, const MomentumPair& pair);
double k1k2_sub_entropy(const ChainGeometry& geom, const MomentumPair& pair, EvalMode mode);
double exceptional_sub_entropy(std::int64_t L, double x, const ExceptionalMomentum& exc);

double k1k2_mutual_info(const ChainGeometry& geom, const MomentumPair& pair, EvalMode mode);
double universal_mutual_info(double x);
double exceptional_mutual_info(double x, const ExceptionalMomentum& exc);

EntropyReport k1k2_report(const ChainGeometry& geom, const MomentumPair& pair, EvalMode mode);

double universal_total_entropy(std::int64_t L);
double universal_sub_entropy(std::int64_t L, double x);

}  // namespace qshannon::fermion
