#pragma once

#include <cstdint>

#include "qshannon/entropy.hpp"

namespace qshannon::sigma_x {

/// Controls for the 2^L brute-force enumeration.
struct EnumerationOptions {
    int max_sites = 30;  // refuse larger L (work estimate in the error message)
    int threads = 0;     // 0 = hardware concurrency
};

/// Partial sums of one enumeration: the summed configuration weights
/// (should be 1) and the entropy. Exposed so tests can assert the
/// normalization invariant directly.
struct EnumerationResult {
    double entropy;
    double weight_sum;
};

/// Ground state |up...up> in the sigma-x basis: maximal entropies,
/// zero mutual information. Closed form, no enumeration.
EntropyReport ground_state_report(const ChainGeometry& geom);

/// Total-system entropy of the single-magnon state |I> in the sigma-x
/// basis: streams all 2^L sign configurations in reflected-Gray-code
/// order with O(1) incremental updates of S = sum_j e^{2 pi i j I/L} m_j.
double magnon_total_entropy(std::int64_t L, std::int64_t I, const EnumerationOptions& opts = {});
EnumerationResult magnon_total_enumeration(std::int64_t L, std::int64_t I,
                                           const EnumerationOptions& opts = {});

/// Subsystem entropy over the 2^ell masks of A = [1, ell].
double magnon_sub_entropy(const ChainGeometry& geom, std::int64_t I,
                          const EnumerationOptions& opts = {});
EnumerationResult magnon_sub_enumeration(const ChainGeometry& geom, std::int64_t I,
                                         const EnumerationOptions& opts = {});

/// Full brute-force report (total, subsystem, complement, MI).
EntropyReport magnon_report(const ChainGeometry& geom, std::int64_t I,
                            const EnumerationOptions& opts = {});

/// O(L) binomial closed form for I = 0 or I = L/2; equals the brute
/// force result.
double special_I_total_entropy(std::int64_t L, std::int64_t I);

/// The companion binomial closed form over subsystem masks for
/// I in {0, L/2}. It evaluates the subsystem Shannon entropy (its
/// summand is exactly -p log p of the subsystem mask probabilities;
/// the marginalization oracle in the test suite confirms this).
double special_I_sub_closed_form(const ChainGeometry& geom, std::int64_t I);

}  // namespace qshannon::sigma_x
