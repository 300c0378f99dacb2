#pragma once

// Shared computational kernel for the free bosonic and fermionic chain
// |k1 k2> tables. The two formula families differ only by the pair
// modulation (cos^2 vs sin^2), the sign of the interference term in
// p0/p_j, and the presence of doubly-occupied sites; one implementation
// eliminates transcription drift between them. boson.hpp / fermion.hpp
// stay separate API surfaces.

#include <cstdint>

#include "qshannon/boson.hpp"
#include "qshannon/entropy.hpp"
#include "qshannon/local_table.hpp"

namespace qshannon::detail {

enum class Statistics { bose, fermi };

/// cos^2(pi d k12 / L) or sin^2(pi d k12 / L), with the integer product
/// d*k12 reduced mod L before the trig call.
double pair_modulation(Statistics st, std::int64_t L, std::int64_t k12, std::int64_t d);

LocalProbabilities k1k2_total_table(Statistics st, std::int64_t L, const MomentumPair& pair);
LocalProbabilities k1k2_sub_table(Statistics st, const ChainGeometry& geom,
                                  const MomentumPair& pair);

double k1k2_total_entropy_exact(Statistics st, std::int64_t L, const MomentumPair& pair);
double k1k2_sub_entropy_exact(Statistics st, const ChainGeometry& geom, const MomentumPair& pair);
double k1k2_sub_entropy_scaling(Statistics st, std::int64_t L, double x, std::int64_t abs_k12);

double universal_total_entropy(std::int64_t L);
double universal_sub_entropy(std::int64_t L, double x);
double universal_mutual_info(double x);

/// sum_{a=1}^{n-1} c_a log c_a with c_a = cos^2(pi a/n) or sin^2(pi a/n).
double exceptional_sum(Statistics st, std::int64_t n);
double exceptional_total_entropy(Statistics st, std::int64_t L, const ExceptionalMomentum& exc);
double exceptional_sub_entropy(Statistics st, std::int64_t L, double x,
                               const ExceptionalMomentum& exc);
double exceptional_mutual_info(Statistics st, double x, const ExceptionalMomentum& exc);

double k1k2_total_entropy(Statistics st, std::int64_t L, const MomentumPair& pair, EvalMode mode);
double k1k2_sub_entropy(Statistics st, const ChainGeometry& geom, const MomentumPair& pair,
                        EvalMode mode);
double k1k2_mutual_info(Statistics st, const ChainGeometry& geom, const MomentumPair& pair,
                        EvalMode mode);
EntropyReport k1k2_report(Statistics st, const ChainGeometry& geom, const MomentumPair& pair,
                          EvalMode mode);

}  // namespace qshannon::detail
