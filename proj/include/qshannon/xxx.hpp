#pragma once

#include <complex>
#include <cstdint>

#include "qshannon/entropy.hpp"
#include "qshannon/local_table.hpp"

namespace qshannon::xxx {

enum class BetheCase { I, II, IIIa, IIIb };

/// One solved two-magnon Bethe state. For case II the momenta and the
/// shift angle are real; cases IIIa/IIIb carry the complex-conjugate
/// bound-state momenta p = pi I / L +- i v with theta = pi + i L v
/// (IIIa) or theta = i L v (IIIb). The normalization is kept in log
/// form: L v reaches ~4700 at L = 840, far beyond double range.
struct BetheSolution {
    BetheCase bethe_case;
    std::int64_t L;
    std::int64_t I1;
    std::int64_t I2;
    std::int64_t I12;               // I1 - I2
    std::complex<double> p1;
    std::complex<double> p2;
    std::complex<double> theta;
    double v = 0.0;                 // bound-state parameter (1/v = bound-state size)
    double u = 0.0;                 // scaled parameter u = L v
    double log_normalization = 0.0; // log N from the case's closed form
    double iota1 = 0.0;             // I1 / L
    double iota2 = 0.0;             // I2 / L
    double residual = 0.0;          // |e^{i theta} + RHS| of the Bethe equation
    bool extremely_bound = false;   // IIIb with I = L/2; routed to the single-magnon triple
};

/// Fixed-point solver for the case II (real shift angle) branch.
/// Rejects pairs whose only real solution is the degenerate theta = pi
/// point where the wavefunction vanishes identically (adjacent Bethe
/// numbers away from the band edges).
BetheSolution solve_case_II(std::int64_t L, std::int64_t I1, std::int64_t I2);

/// |e^{i theta} + (1+e^{i(p1+p2)}-2e^{i p1}) / (1+e^{i(p1+p2)}-2e^{i p2})|.
double bethe_residual(const BetheSolution& sol);

struct MagnonTables {
    LocalProbabilities total;
    LocalProbabilities sub;
};

/// Case I (I1 = I2 = 0): identical to two identical hard-core
/// classical particles.
EntropyReport case_I_report(const ChainGeometry& geom, EvalMode mode = EvalMode::exact);

MagnonTables case_II_tables(const ChainGeometry& geom, const BetheSolution& sol);
EntropyReport case_II_report(const ChainGeometry& geom, const BetheSolution& sol);

/// Which free-chain scaling family the exact case II results converge
/// to, and with which effective momentum difference.
enum class ScalingClass { bosonic, fermionic, universal };
struct ScalingLimit {
    ScalingClass type;
    std::int64_t effective_k12;  // meaningful for bosonic/fermionic
};
ScalingLimit classify_scaling_limit(double iota1, double iota2, std::int64_t I12,
                                    double tolerance = 0.02);

/// Smallest odd Bethe number hosting a IIIa bound state: the least odd
/// integer >= 2 sqrt(L) / pi.
std::int64_t smallest_case_IIIa_bethe_number(std::int64_t L);

/// Case IIIa: adjacent Bethe numbers I1 = (I-1)/2, I2 = (I+1)/2, odd
/// total I inside the validity window; v from the large-L closed form.
BetheSolution case_IIIa_params(std::int64_t L, std::int64_t I);
MagnonTables case_IIIa_tables(const ChainGeometry& geom, const BetheSolution& sol);
EntropyReport case_IIIa_report(const ChainGeometry& geom, const BetheSolution& sol, EvalMode mode);

/// Case IIIb: equal Bethe numbers I1 = I2 = I/2, even I in [2, L/2];
/// I = L/2 is the extremely bound state (single-magnon results).
/// Modes: exact | tight | loose, plus scaling = the u->0 limit, which
/// equals the two-identical classical triple.
BetheSolution case_IIIb_params(std::int64_t L, std::int64_t I);
MagnonTables case_IIIb_tables(const ChainGeometry& geom, const BetheSolution& sol);
EntropyReport case_IIIb_report(const ChainGeometry& geom, const BetheSolution& sol, EvalMode mode);

/// Tight-limit triple (shared by IIIa and IIIb): H(L) = log L -
/// log(2 sinh v) + v coth v; the MI is v-independent.
EntropyReport tight_report(const ChainGeometry& geom, double v);

/// Loose-limit triples at fixed u = L v.
EntropyReport loose_IIIa_report(const ChainGeometry& geom, double u);
EntropyReport loose_IIIb_report(const ChainGeometry& geom, double u);

/// Single-magnon state: the single-particle triple.
EntropyReport single_magnon_report(const ChainGeometry& geom);

}  // namespace qshannon::xxx
