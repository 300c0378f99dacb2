#pragma once

#include <cstdint>

#include "qshannon/entropy.hpp"
#include "qshannon/local_table.hpp"

namespace qshannon {

/// Momentum pair (k1, k2) on a chain of L sites, with the difference
/// k12 = k1 - k2 reduced modulo L to the representative with
/// 1 <= |k12| <= L/2. Only |k12| enters any probability, so the
/// reduced magnitude is what the table builders consume.
struct MomentumPair {
    std::int64_t k1;
    std::int64_t k2;
    std::int64_t k12;  // reduced representative, |k12| in [1, L/2]

    MomentumPair(std::int64_t k1_in, std::int64_t k2_in, std::int64_t L);
    std::int64_t abs_k12() const { return k12 < 0 ? -k12 : k12; }

    /// Direct construction from a reduced difference (used by sweeps).
    static MomentumPair from_difference(std::int64_t k12_in, std::int64_t L);
};

/// Exceptional momentum difference |k12| = m L / n with coprime m, n,
/// n >= 2 a divisor of L, and m/n <= 1/2.
struct ExceptionalMomentum {
    std::int64_t m;
    std::int64_t n;

    ExceptionalMomentum(std::int64_t m_in, std::int64_t n_in);
    void validate_against(std::int64_t L) const;

    /// Derives (m, n) from a reduced pair: n = L / gcd(L, |k12|).
    static ExceptionalMomentum from_pair(const MomentumPair& pair, std::int64_t L);
};

namespace boson {

/// Single-particle state |k>: the table is exact for all L and does not
/// depend on k.
EntropyReport single_particle_report(const ChainGeometry& geom);

/// Double-particle state |k^2>: exact mode enumerates the tables,
/// scaling mode returns the closed forms (equal to the two-identical
/// classical particle results).
EntropyReport kk_report(const ChainGeometry& geom, EvalMode mode);
LocalProbabilities kk_total_table(std::int64_t L);
LocalProbabilities kk_sub_table(const ChainGeometry& geom);

/// Double-particle state |k1 k2>, k1 != k2 (mod L).
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

/// Universal closed forms, valid for 1 << |k12| << L (shared verbatim
/// with the fermionic chain).
double universal_total_entropy(std::int64_t L);
double universal_sub_entropy(std::int64_t L, double x);

}  // namespace boson
}  // namespace qshannon
