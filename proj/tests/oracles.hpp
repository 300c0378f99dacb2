#pragma once

// Independent brute-force oracles for the test suite. Everything here
// is built from explicit wavefunction amplitudes (complex exponential
// sums) and direct enumeration, deliberately avoiding the closed-form
// trigonometric tables the library computes, so that agreement between
// the two is a real check.

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qshannon/xxx.hpp"

namespace oracle {

using cx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

/// Probabilities of a two-particle chain state, indexed by ordered
/// site pairs. diag[j] is the doubly-occupied-site weight (1-based,
/// empty for fermions); pair(j1, j2) with 1 <= j1 < j2 <= L.
struct TwoParticleProbs {
    std::int64_t L;
    std::vector<double> diag;                 // size L or empty
    std::vector<std::vector<double>> pair_p;  // pair_p[j1-1][j2-j1-1]

    double pair(std::int64_t j1, std::int64_t j2) const {
        return pair_p[static_cast<std::size_t>(j1 - 1)][static_cast<std::size_t>(j2 - j1 - 1)];
    }
};

inline TwoParticleProbs boson_kk_probs(std::int64_t L, std::int64_t k) {
    // |k^2> = (1/L) sum_j e^{4 pi i j k/L} |j^2> + (sqrt2/L) sum_{j1<j2} e^{2 pi i k (j1+j2)/L} |j1 j2>
    TwoParticleProbs out{L, std::vector<double>(static_cast<std::size_t>(L)), {}};
    const double p = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(L);
    for (std::int64_t j = 1; j <= L; ++j) {
        const cx amp = std::exp(cx{0.0, 2.0 * p * static_cast<double>(j)}) /
                       static_cast<double>(L);
        out.diag[static_cast<std::size_t>(j - 1)] = std::norm(amp);
    }
    out.pair_p.resize(static_cast<std::size_t>(L));
    for (std::int64_t j1 = 1; j1 <= L; ++j1)
        for (std::int64_t j2 = j1 + 1; j2 <= L; ++j2) {
            const cx amp = std::sqrt(2.0) *
                           std::exp(cx{0.0, p * static_cast<double>(j1 + j2)}) /
                           static_cast<double>(L);
            out.pair_p[static_cast<std::size_t>(j1 - 1)].push_back(std::norm(amp));
        }
    return out;
}

inline TwoParticleProbs boson_k1k2_probs(std::int64_t L, std::int64_t k1, std::int64_t k2) {
    // b+_{k1} b+_{k2}|G> expanded over local states via two plane waves.
    TwoParticleProbs out{L, std::vector<double>(static_cast<std::size_t>(L)), {}};
    const double p1 = 2.0 * kPi * static_cast<double>(k1) / static_cast<double>(L);
    const double p2 = 2.0 * kPi * static_cast<double>(k2) / static_cast<double>(L);
    const auto wave = [&](double p, std::int64_t j) {
        return std::exp(cx{0.0, p * static_cast<double>(j)});
    };
    for (std::int64_t j = 1; j <= L; ++j) {
        const cx amp = std::sqrt(2.0) * wave(p1, j) * wave(p2, j) / static_cast<double>(L);
        out.diag[static_cast<std::size_t>(j - 1)] = std::norm(amp);
    }
    out.pair_p.resize(static_cast<std::size_t>(L));
    for (std::int64_t j1 = 1; j1 <= L; ++j1)
        for (std::int64_t j2 = j1 + 1; j2 <= L; ++j2) {
            const cx amp = (wave(p1, j1) * wave(p2, j2) + wave(p1, j2) * wave(p2, j1)) /
                           static_cast<double>(L);
            out.pair_p[static_cast<std::size_t>(j1 - 1)].push_back(std::norm(amp));
        }
    return out;
}

inline TwoParticleProbs fermion_k1k2_probs(std::int64_t L, std::int64_t k1, std::int64_t k2) {
    TwoParticleProbs out{L, {}, {}};
    const double p1 = 2.0 * kPi * static_cast<double>(k1) / static_cast<double>(L);
    const double p2 = 2.0 * kPi * static_cast<double>(k2) / static_cast<double>(L);
    const auto wave = [&](double p, std::int64_t j) {
        return std::exp(cx{0.0, p * static_cast<double>(j)});
    };
    out.pair_p.resize(static_cast<std::size_t>(L));
    for (std::int64_t j1 = 1; j1 <= L; ++j1)
        for (std::int64_t j2 = j1 + 1; j2 <= L; ++j2) {
            const cx amp = (wave(p1, j1) * wave(p2, j2) - wave(p1, j2) * wave(p2, j1)) /
                           static_cast<double>(L);
            out.pair_p[static_cast<std::size_t>(j1 - 1)].push_back(std::norm(amp));
        }
    return out;
}

/// |I1 I2> from the Bethe amplitudes U_{j1 j2} with whatever momenta
/// and shift angle the solution carries, normalized by direct
/// summation of |U|^2. Usable for cases II, IIIa and IIIb at small L.
inline TwoParticleProbs magnon_probs(const qshannon::xxx::BetheSolution& sol) {
    const std::int64_t L = sol.L;
    TwoParticleProbs out{L, {}, {}};
    const cx half_theta = 0.5 * sol.theta;
    std::vector<std::vector<cx>> amp(static_cast<std::size_t>(L));
    double norm = 0.0;
    for (std::int64_t j1 = 1; j1 <= L; ++j1)
        for (std::int64_t j2 = j1 + 1; j2 <= L; ++j2) {
            const cx u = std::exp(cx{0.0, 1.0} * (static_cast<double>(j1) * sol.p1 +
                                                  static_cast<double>(j2) * sol.p2 + half_theta)) +
                         std::exp(cx{0.0, 1.0} * (static_cast<double>(j1) * sol.p2 +
                                                  static_cast<double>(j2) * sol.p1 - half_theta));
            amp[static_cast<std::size_t>(j1 - 1)].push_back(u);
            norm += std::norm(u);
        }
    out.pair_p.resize(static_cast<std::size_t>(L));
    for (std::int64_t j1 = 1; j1 <= L; ++j1)
        for (std::int64_t j2 = j1 + 1; j2 <= L; ++j2)
            out.pair_p[static_cast<std::size_t>(j1 - 1)].push_back(
                std::norm(amp[static_cast<std::size_t>(j1 - 1)]
                             [static_cast<std::size_t>(j2 - j1 - 1)]) /
                norm);
    out.diag.clear();
    return out;
}

/// Direct |U|^2 sum (the normalization the closed forms must match).
inline double magnon_norm_direct(const qshannon::xxx::BetheSolution& sol) {
    const std::int64_t L = sol.L;
    const cx half_theta = 0.5 * sol.theta;
    double norm = 0.0;
    for (std::int64_t j1 = 1; j1 <= L; ++j1)
        for (std::int64_t j2 = j1 + 1; j2 <= L; ++j2) {
            const cx u = std::exp(cx{0.0, 1.0} * (static_cast<double>(j1) * sol.p1 +
                                                  static_cast<double>(j2) * sol.p2 + half_theta)) +
                         std::exp(cx{0.0, 1.0} * (static_cast<double>(j1) * sol.p2 +
                                                  static_cast<double>(j2) * sol.p1 - half_theta));
            norm += std::norm(u);
        }
    return norm;
}

/// Subsystem marginal of a two-particle table: p0, the ell singles,
/// the diagonal entries inside A, and the pairs inside A.
struct TwoParticleMarginal {
    double p0 = 0.0;
    std::vector<double> singles;
    std::vector<double> diag;
    std::vector<std::vector<double>> pair_p;  // indexed like TwoParticleProbs
};

inline TwoParticleMarginal marginalize(const TwoParticleProbs& full, std::int64_t ell) {
    const std::int64_t L = full.L;
    TwoParticleMarginal out;
    out.singles.assign(static_cast<std::size_t>(ell), 0.0);
    for (std::int64_t j1 = 1; j1 <= L; ++j1)
        for (std::int64_t j2 = j1 + 1; j2 <= L; ++j2) {
            // j1 < j2, so a boundary-crossing pair always has j1 in A.
            const double p = full.pair(j1, j2);
            if (j1 > ell) out.p0 += p;
            else if (j2 > ell) out.singles[static_cast<std::size_t>(j1 - 1)] += p;
        }
    if (!full.diag.empty()) {
        out.diag.assign(static_cast<std::size_t>(ell), 0.0);
        for (std::int64_t j = 1; j <= L; ++j) {
            const double p = full.diag[static_cast<std::size_t>(j - 1)];
            if (j <= ell)
                out.diag[static_cast<std::size_t>(j - 1)] = p;
            else
                out.p0 += p;
        }
    }
    out.pair_p.resize(static_cast<std::size_t>(ell));
    for (std::int64_t j1 = 1; j1 <= ell; ++j1)
        for (std::int64_t j2 = j1 + 1; j2 <= ell; ++j2)
            out.pair_p[static_cast<std::size_t>(j1 - 1)].push_back(full.pair(j1, j2));
    return out;
}

/// Single-magnon sigma-x probabilities, directly per mask.
inline std::vector<double> sigma_x_total_probs(std::int64_t L, std::int64_t I) {
    const std::uint64_t n = std::uint64_t{1} << L;
    std::vector<double> probs(n);
    std::vector<cx> ph(static_cast<std::size_t>(L));
    for (std::int64_t j = 1; j <= L; ++j)
        ph[static_cast<std::size_t>(j - 1)] =
            std::exp(cx{0.0, 2.0 * kPi * static_cast<double>(j) * static_cast<double>(I) /
                                 static_cast<double>(L)});
    const double denom = std::pow(2.0, static_cast<double>(L)) * static_cast<double>(L);
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        cx s{0.0, 0.0};
        for (std::int64_t j = 0; j < L; ++j)
            s += (mask >> j) & 1u ? -ph[static_cast<std::size_t>(j)]
                                  : ph[static_cast<std::size_t>(j)];
        probs[mask] = std::norm(s) / denom;
    }
    return probs;
}

/// Marginal over the complement: bin the full sigma-x distribution by
/// the first ell bits.
inline std::vector<double> sigma_x_marginal(const std::vector<double>& total, std::int64_t ell) {
    const std::uint64_t keep = (std::uint64_t{1} << ell) - 1;
    std::vector<double> out(std::uint64_t{1} << ell, 0.0);
    for (std::uint64_t mask = 0; mask < total.size(); ++mask) out[mask & keep] += total[mask];
    return out;
}

inline double entropy_of(const std::vector<double>& probs) {
    double h = 0.0;
    for (double p : probs)
        if (p > 0.0) h -= p * std::log(p);
    return h;
}

/// Plain midpoint rule, the quadrature module's independent oracle.
template <typename F>
double midpoint_integral(const F& f, double a, double b, std::int64_t n = 1000000) {
    const double h = (b - a) / static_cast<double>(n);
    double acc = 0.0, comp = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        const double val = f(a + (static_cast<double>(i) + 0.5) * h);
        const double y = val - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc * h;
}

}  // namespace oracle
