#include "qshannon/xxx.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "math_util.hpp"
#include "qshannon/boson.hpp"
#include "qshannon/classical.hpp"
#include "qshannon/quadrature.hpp"

namespace qshannon::xxx {
namespace {

using detail::log_cosh;
using detail::log_sinh;
using detail::xlogx_unrestricted;

constexpr double kPi = 3.14159265358979323846;
constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> bethe_rhs(std::complex<double> p1, std::complex<double> p2) {
    const std::complex<double> e12 = std::exp(kI * (p1 + p2));
    const std::complex<double> num = 1.0 + e12 - 2.0 * std::exp(kI * p1);
    const std::complex<double> den = 1.0 + e12 - 2.0 * std::exp(kI * p2);
    return -num / den;
}

void require_xxx_length(std::int64_t L) {
    if (L < 4 || L % 4 != 0)
        throw domain_error("XXX bound states: L must be a positive multiple of 4 (got " +
                           std::to_string(L) + ")");
}

// --- case II -------------------------------------------------------

struct CaseIIAngles {
    // One consistent branch of p12 = (2 pi I12 + 2 theta)/L is used for
    // every trig factor; the closed forms mix half-angles, whose signs
    // are not invariant under per-factor mod-2pi reduction.
    std::int64_t L;
    std::int64_t I12;
    double theta;

    double p12() const {
        return (2.0 * kPi * static_cast<double>(I12) + 2.0 * theta) / static_cast<double>(L);
    }
    /// Pair weight numerator 1 + cos(d p12 - theta) for separation d.
    double pair_factor(std::int64_t d) const {
        return 1.0 + std::cos(static_cast<double>(d) * p12() - theta);
    }
};

double case_II_log_norm_closed(std::int64_t L, const CaseIIAngles& ang) {
    const double p12 = ang.p12();
    const double theta = ang.theta;
    const double denom = 1.0 - std::cos(p12);
    // cos(theta - L p12) == cos(theta): L p12 = 2 pi I12 + 2 theta.
    const double num = static_cast<double>(L) * std::cos(theta - p12) -
                       static_cast<double>(L - 1) * std::cos(theta) - std::cos(theta);
    const double N = static_cast<double>(L) * static_cast<double>(L - 1) + num / denom;
    if (!(N > 0.0)) throw domain_error("case II: nonpositive normalization");
    return std::log(N);
}

double case_II_norm_direct(std::int64_t L, const CaseIIAngles& ang) {
    KahanAccumulator acc;
    for (std::int64_t d = 1; d < L; ++d)
        acc += static_cast<double>(L - d) * 2.0 * ang.pair_factor(d);
    return acc;
}

bool case_II_degenerate_denominator(const CaseIIAngles& ang) {
    return std::abs(std::sin(0.5 * ang.p12())) < 1e-7;
}

}  // namespace

BetheSolution solve_case_II(std::int64_t L, std::int64_t I1, std::int64_t I2) {
    if (L < 2) throw domain_error("solve_case_II: L must be >= 2");
    if (!(0 <= I1 && I1 < I2 && I2 <= L - 1))
        throw domain_error("solve_case_II: need 0 <= I1 < I2 <= L-1");

    const auto momenta = [&](double theta) {
        const double p1 = (2.0 * kPi * static_cast<double>(I1) + theta) / static_cast<double>(L);
        const double p2 = (2.0 * kPi * static_cast<double>(I2) - theta) / static_cast<double>(L);
        return std::pair<double, double>{p1, p2};
    };

    double theta = 0.0;
    double prev_step = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 10000; ++iter) {
        const auto [p1, p2] = momenta(theta);
        double next = std::arg(bethe_rhs({p1, 0.0}, {p2, 0.0}));
        const double step = next - theta;
        if (std::abs(step) < 1e-12) {
            theta = next;
            converged = true;
            break;
        }
        // Damp when the iterate oscillates (sign-flipping steps).
        if (iter > 0 && step * prev_step < 0.0) next = 0.5 * (theta + next);
        prev_step = next - theta;
        theta = next;
    }
    if (!converged)
        throw convergence_error("solve_case_II: fixed point did not converge in 10000 iterations",
                                theta);
    if (theta < -1e-9 || theta > kPi + 1e-9)
        throw domain_error("solve_case_II: not a case II pair (theta outside [0, pi])");
    theta = std::clamp(theta, 0.0, kPi);

    BetheSolution sol;
    sol.bethe_case = BetheCase::II;
    sol.L = L;
    sol.I1 = I1;
    sol.I2 = I2;
    sol.I12 = I1 - I2;
    const auto [p1, p2] = momenta(theta);
    sol.p1 = {p1, 0.0};
    sol.p2 = {p2, 0.0};
    sol.theta = {theta, 0.0};
    sol.iota1 = static_cast<double>(I1) / static_cast<double>(L);
    sol.iota2 = static_cast<double>(I2) / static_cast<double>(L);
    sol.residual = std::abs(std::exp(kI * sol.theta) - bethe_rhs(sol.p1, sol.p2));
    if (sol.residual > 1e-9)
        throw convergence_error("solve_case_II: Bethe residual " + std::to_string(sol.residual) +
                                    " above 1e-9",
                                theta);

    // Degenerate adjacent pairs converge to theta = pi exactly, where
    // p1 = p2 and the wavefunction vanishes identically; no case II
    // state exists there.
    const CaseIIAngles ang{L, sol.I12, theta};
    const double n_direct = case_II_norm_direct(L, ang);
    if (!(n_direct / (static_cast<double>(L) * static_cast<double>(L - 1)) > 1e-9))
        throw domain_error(
            "solve_case_II: not a case II pair (wavefunction vanishes at the theta = pi "
            "fixed point; adjacent Bethe numbers away from the band edges host no "
            "scattering state)");
    sol.log_normalization = case_II_degenerate_denominator(ang) ? std::log(n_direct)
                                                                : case_II_log_norm_closed(L, ang);
    return sol;
}

double bethe_residual(const BetheSolution& sol) {
    return std::abs(std::exp(kI * sol.theta) - bethe_rhs(sol.p1, sol.p2));
}

EntropyReport case_I_report(const ChainGeometry& geom, EvalMode mode) {
    return classical::two_identical_report(geom, classical::CoreType::hard, mode);
}

MagnonTables case_II_tables(const ChainGeometry& geom, const BetheSolution& sol) {
    if (sol.bethe_case != BetheCase::II) throw domain_error("case_II_tables: not a case II solution");
    if (sol.L != geom.L) throw domain_error("case_II_tables: geometry/solution L mismatch");
    const std::int64_t L = geom.L;
    const std::int64_t ell = geom.ell;
    const std::int64_t B = L - ell;
    const CaseIIAngles ang{L, sol.I12, sol.theta.real()};
    const double N = std::exp(sol.log_normalization);

    MagnonTables tables;
    tables.total.pairs.reserve(static_cast<std::size_t>(L - 1));
    for (std::int64_t d = 1; d < L; ++d)
        tables.total.pairs.push_back({d, 2.0 * ang.pair_factor(d) / N, L - d});

    tables.sub.has_vacuum = true;
    tables.sub.singles.reserve(static_cast<std::size_t>(ell));
    if (case_II_degenerate_denominator(ang)) {
        // Series evaluation: sum the defining finite series directly.
        KahanAccumulator p0;
        for (std::int64_t d = 1; d < B; ++d)
            p0 += static_cast<double>(B - d) * 2.0 * ang.pair_factor(d) / N;
        tables.sub.p0 = p0;
        for (std::int64_t j = 1; j <= ell; ++j) {
            KahanAccumulator pj;
            for (std::int64_t jp = ell + 1; jp <= L; ++jp)
                pj += 2.0 * ang.pair_factor(jp - j) / N;
            tables.sub.singles.push_back(pj);
        }
    } else {
        const double theta = ang.theta;
        const double p12 = ang.p12();
        const double denom = 1.0 - std::cos(p12);
        const double pB = static_cast<double>(B) * std::cos(p12 - theta) -
                          static_cast<double>(B - 1) * std::cos(theta) -
                          std::cos(static_cast<double>(B) * p12 - theta);
        tables.sub.p0 = std::max(
            (static_cast<double>(B) * static_cast<double>(B - 1) + pB / denom) / N, 0.0);
        const double sinB = std::sin(0.5 * static_cast<double>(B) * p12);
        const double sin_half = std::sin(0.5 * p12);
        for (std::int64_t j = 1; j <= ell; ++j) {
            const double c = std::cos(
                (static_cast<double>(j) - 0.5 * static_cast<double>(L + ell + 1)) * p12 + theta);
            const double pj = 2.0 * (static_cast<double>(B) + sinB * c / sin_half) / N;
            tables.sub.singles.push_back(std::max(pj, 0.0));
        }
    }

    tables.sub.pairs.reserve(static_cast<std::size_t>(ell > 0 ? ell - 1 : 0));
    for (std::int64_t d = 1; d < ell; ++d)
        tables.sub.pairs.push_back({d, 2.0 * ang.pair_factor(d) / N, ell - d});
    return tables;
}

EntropyReport case_II_report(const ChainGeometry& geom, const BetheSolution& sol) {
    const MagnonTables at_ell = case_II_tables(geom, sol);
    const MagnonTables at_comp = case_II_tables(geom.complement(), sol);
    return make_report(at_ell.total.entropy(), at_ell.sub.entropy(), at_comp.sub.entropy(),
                       EvalMode::exact);
}

ScalingLimit classify_scaling_limit(double iota1, double iota2, std::int64_t I12,
                                    double tolerance) {
    const auto near = [tolerance](double a, double b) { return std::abs(a - b) <= tolerance; };
    const bool equal_iotas = near(iota1, iota2);
    if ((equal_iotas && (near(iota1, 0.0) || near(iota1, 1.0))) ||
        (near(iota1, 0.0) && near(iota2, 1.0)))
        return {ScalingClass::bosonic, I12};
    if (equal_iotas) return {ScalingClass::fermionic, I12 + 1};
    return {ScalingClass::universal, 0};
}

std::int64_t smallest_case_IIIa_bethe_number(std::int64_t L) {
    require_xxx_length(L);
    const double edge = 2.0 * std::sqrt(static_cast<double>(L)) / kPi;
    std::int64_t I = static_cast<std::int64_t>(std::ceil(edge));
    if (I % 2 == 0) ++I;
    return I;
}

namespace {

// --- case III common machinery --------------------------------------

struct BoundKernel {
    // Pair weight log: 2 log sinh(v |L/2 - d|) (IIIa, zero weight at
    // d = L/2) or 2 log cosh(v (L/2 - d)) (IIIb).
    std::int64_t L;
    double v;
    bool cosh_kernel;

    bool zero_at(std::int64_t d) const { return !cosh_kernel && 2 * d == L; }
    double log_weight(std::int64_t d) const {
        const double z = v * std::abs(static_cast<double>(L) / 2.0 - static_cast<double>(d));
        return cosh_kernel ? 2.0 * log_cosh(z) : 2.0 * log_sinh(z);
    }
};

/// log of sum_d (L-d) w(d) (log-sum-exp over separations); equals
/// log(N/4) with N the closed-form normalization.
double bound_log_pair_sum(const BoundKernel& k) {
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(k.L - 1));
    double peak = -std::numeric_limits<double>::infinity();
    for (std::int64_t d = 1; d < k.L; ++d) {
        if (k.zero_at(d)) continue;
        const double t = std::log(static_cast<double>(k.L - d)) + k.log_weight(d);
        terms.push_back(t);
        peak = std::max(peak, t);
    }
    KahanAccumulator acc;
    for (double t : terms) acc += std::exp(t - peak);
    return peak + std::log(static_cast<double>(acc));
}

double bound_log_norm_closed(std::int64_t L, double v, bool cosh_kernel) {
    // N = L [ sinh((L-1)v)/sinh v -+ (L-1) ].
    const double A = log_sinh(static_cast<double>(L - 1) * v) - log_sinh(v);
    const double corr = static_cast<double>(L - 1) * std::exp(-A);
    return std::log(static_cast<double>(L)) + A +
           (cosh_kernel ? std::log1p(corr) : std::log1p(-corr));
}

MagnonTables bound_tables(const ChainGeometry& geom, const BoundKernel& kern) {
    const std::int64_t L = geom.L;
    const std::int64_t ell = geom.ell;
    const std::int64_t B = L - ell;
    const double logZ = bound_log_pair_sum(kern);  // log(N) - log(4)
    const double logN = logZ + std::log(4.0);
    const double v = kern.v;
    const double sign = kern.cosh_kernel ? +1.0 : -1.0;

    MagnonTables tables;
    tables.total.pairs.reserve(static_cast<std::size_t>(L - 1));
    for (std::int64_t d = 1; d < L; ++d) {
        const double p = kern.zero_at(d) ? 0.0 : std::exp(kern.log_weight(d) - logZ);
        tables.total.pairs.push_back({d, p, L - d});
    }

    // p0 * N = B sinh((L-1)v)/sinh v - sinh(ell v) sinh(B v)/sinh^2 v -+ B(B-1)
    const double a1 = std::log(static_cast<double>(B)) +
                      log_sinh(static_cast<double>(L - 1) * v) - log_sinh(v);
    const double a2 = log_sinh(static_cast<double>(ell) * v) +
                      log_sinh(static_cast<double>(B) * v) - 2.0 * log_sinh(v);
    const double m = std::max(a1, a2);
    const double sinh_part = std::exp(a1 - m) - std::exp(a2 - m);  // in units of e^m
    double log_p0;
    if (sinh_part <= 0.0) {
        log_p0 = -std::numeric_limits<double>::infinity();
    } else {
        const double t = m + std::log(sinh_part);
        const double poly = static_cast<double>(B) * static_cast<double>(B - 1);
        const double corr = sign * poly * std::exp(-t);
        log_p0 = corr <= -1.0 ? -std::numeric_limits<double>::infinity()
                              : t + std::log1p(corr) - logN;
    }
    tables.sub.has_vacuum = true;
    tables.sub.p0 = std::exp(log_p0);

    // p_j * N / 2 = sinh(B v) cosh(v (2j - ell - 1))/sinh v +- B
    tables.sub.singles.reserve(static_cast<std::size_t>(ell));
    for (std::int64_t j = 1; j <= ell; ++j) {
        const double c = log_sinh(static_cast<double>(B) * v) +
                         log_cosh(v * static_cast<double>(std::abs(2 * j - ell - 1))) -
                         log_sinh(v);
        const double corr = sign * static_cast<double>(B) * std::exp(-c);
        const double pj =
            corr <= -1.0 ? 0.0 : std::exp(std::log(2.0) + c + std::log1p(corr) - logN);
        tables.sub.singles.push_back(pj);
    }

    tables.sub.pairs.reserve(static_cast<std::size_t>(ell > 0 ? ell - 1 : 0));
    for (std::int64_t d = 1; d < ell; ++d) {
        const double p = kern.zero_at(d) ? 0.0 : std::exp(kern.log_weight(d) - logZ);
        tables.sub.pairs.push_back({d, p, ell - d});
    }
    return tables;
}

/// Exact entropies straight from the log-domain weights; table entries
/// that underflow to zero contribute exactly nothing, as they should.
double bound_total_entropy(const BoundKernel& kern) {
    const double logZ = bound_log_pair_sum(kern);
    KahanAccumulator acc;
    for (std::int64_t d = 1; d < kern.L; ++d) {
        if (kern.zero_at(d)) continue;
        const double lp = kern.log_weight(d) - logZ;
        const double p = std::exp(lp);
        if (p > 0.0) acc += static_cast<double>(kern.L - d) * p * lp;
    }
    return -static_cast<double>(acc);
}

double bound_sub_entropy(const ChainGeometry& geom, const BoundKernel& kern) {
    const MagnonTables tables = bound_tables(geom, kern);
    return tables.sub.entropy();
}

EntropyReport bound_exact_report(const ChainGeometry& geom, const BoundKernel& kern) {
    return make_report(bound_total_entropy(kern), bound_sub_entropy(geom, kern),
                       bound_sub_entropy(geom.complement(), kern), EvalMode::exact);
}

/// Loose-limit integrands grow like e^u across the interval, far too
/// steeply for one absolute tolerance; integrate piecewise with the
/// tolerance scaled to each segment's sampled magnitude.
double integrate_loose(const std::function<double(double)>& f, double a, double b) {
    if (a == b) return 0.0;
    constexpr int kSegments = 64;
    KahanAccumulator total;
    for (int s = 0; s < kSegments; ++s) {
        const double sa = a + (b - a) * static_cast<double>(s) / kSegments;
        const double sb = a + (b - a) * static_cast<double>(s + 1) / kSegments;
        double peak = 1.0;
        for (int i = 0; i < 8; ++i)
            peak = std::max(peak,
                            std::abs(f(sa + (sb - sa) * (static_cast<double>(i) + 0.5) / 8.0)));
        total += integrate(f, sa, sb, std::max(1e-12, 1e-13 * peak * (sb - sa)));
    }
    return total;
}

double loose_sub_entropy(std::int64_t L, double x, double u, bool cosh_kernel) {
    const double sign = cosh_kernel ? +1.0 : -1.0;
    const double S = std::sinh(u) / u + sign;
    const double F =
        std::sinh(u * x) * std::sinh(u * (1.0 - x)) / (u * u) + sign * x * (1.0 - x);
    double h = 2.0 * x * std::log(static_cast<double>(L)) + (x + F / S) * std::log(S) -
               2.0 * x * std::log(2.0);
    h -= xlogx_unrestricted(1.0 - x - F / S);
    const auto edge = [&](double y) {
        const double t = std::sinh(u * (1.0 - x)) * std::cosh(2.0 * u * y) / u +
                         sign * (1.0 - x);
        return xlogx_unrestricted(t);
    };
    h -= (4.0 / S) * integrate_loose(edge, 0.0, x / 2.0);
    const auto bulk = [&](double y) {
        const double z = u * (y - 0.5);
        const double t = cosh_kernel ? std::cosh(z) : std::sinh(z);
        return (x - y) * xlogx_unrestricted(t * t);
    };
    h -= (4.0 / S) * integrate_loose(bulk, 0.0, x);
    return h;
}

double loose_total_entropy(std::int64_t L, double u, bool cosh_kernel) {
    const double sign = cosh_kernel ? +1.0 : -1.0;
    const double S = std::sinh(u) / u + sign;
    const auto f = [&](double y) {
        const double t = cosh_kernel ? std::cosh(y) : std::sinh(y);
        return xlogx_unrestricted(t * t);
    };
    return 2.0 * std::log(static_cast<double>(L)) + std::log(S) - 2.0 * std::log(2.0) -
           (4.0 / (S * u)) * integrate_loose(f, 0.0, u / 2.0);
}

EntropyReport loose_report(const ChainGeometry& geom, double u, bool cosh_kernel) {
    if (!(u > 0.0)) throw domain_error("loose limit: u = L v must be > 0");
    // sinh(u)/u and the integrands scale like e^u; past double range
    // the loose asymptotics is out of its regime anyway (tight applies).
    if (u > 700.0)
        throw domain_error("loose limit: u = " + std::to_string(u) +
                           " exceeds double-precision range (the tightly bound limit applies "
                           "for such deeply bound states)");
    const double x = geom.x();
    return make_report(loose_total_entropy(geom.L, u, cosh_kernel),
                       loose_sub_entropy(geom.L, x, u, cosh_kernel),
                       loose_sub_entropy(geom.L, 1.0 - x, u, cosh_kernel), EvalMode::loose);
}

BetheSolution bound_params(std::int64_t L, std::int64_t I, bool cosh_kernel) {
    require_xxx_length(L);
    BetheSolution sol;
    sol.bethe_case = cosh_kernel ? BetheCase::IIIb : BetheCase::IIIa;
    sol.L = L;
    if (!cosh_kernel) {
        if (I % 2 == 0) throw domain_error("case IIIa: total Bethe number I must be odd");
        if (I > 3 * L / 2) I = 2 * L - I;  // mirror band, same v
        const std::int64_t edge = smallest_case_IIIa_bethe_number(L);
        if (I < edge || I > L / 2 - 1)
            throw domain_error("case IIIa: I = " + std::to_string(I) +
                               " outside the validity window [" + std::to_string(edge) + ", " +
                               std::to_string(L / 2 - 1) + "] (lower edge ~ 2 sqrt(L)/pi)");
        sol.I1 = (I - 1) / 2;
        sol.I2 = (I + 1) / 2;
    } else {
        if (I % 2 != 0) throw domain_error("case IIIb: total Bethe number I must be even");
        if (I > L) I = 2 * L - I;  // mirror band, same v
        if (I < 2 || I > L / 2)
            throw domain_error("case IIIb: I = " + std::to_string(I) +
                               " outside the validity window [2, " + std::to_string(L / 2) + "]");
        sol.I1 = sol.I2 = I / 2;
        if (I == L / 2) sol.extremely_bound = true;
    }
    sol.I12 = sol.I1 - sol.I2;
    sol.iota1 = static_cast<double>(sol.I1) / static_cast<double>(L);
    sol.iota2 = static_cast<double>(sol.I2) / static_cast<double>(L);

    const double p_re = kPi * static_cast<double>(I) / static_cast<double>(L);
    if (sol.extremely_bound) {
        sol.p1 = {p_re, 0.0};
        sol.p2 = {p_re, 0.0};
        sol.v = std::numeric_limits<double>::infinity();
        sol.u = std::numeric_limits<double>::infinity();
        sol.theta = {cosh_kernel ? 0.0 : kPi, std::numeric_limits<double>::infinity()};
        return sol;
    }
    const double v = -std::log(std::abs(std::cos(p_re)));
    sol.v = v;
    sol.u = static_cast<double>(L) * v;
    sol.p1 = {p_re, v};
    sol.p2 = {p_re, -v};
    sol.theta = {cosh_kernel ? 0.0 : kPi, static_cast<double>(L) * v};
    sol.log_normalization = bound_log_norm_closed(L, v, cosh_kernel);
    sol.residual = bethe_residual(sol);
    return sol;
}

void check_bound_solution(const BetheSolution& sol, BetheCase expected, const char* who) {
    if (sol.bethe_case != expected) throw domain_error(std::string(who) + ": wrong solution case");
}

}  // namespace

BetheSolution case_IIIa_params(std::int64_t L, std::int64_t I) { return bound_params(L, I, false); }

MagnonTables case_IIIa_tables(const ChainGeometry& geom, const BetheSolution& sol) {
    check_bound_solution(sol, BetheCase::IIIa, "case_IIIa_tables");
    if (sol.L != geom.L) throw domain_error("case_IIIa_tables: geometry/solution L mismatch");
    return bound_tables(geom, BoundKernel{geom.L, sol.v, false});
}

EntropyReport case_IIIa_report(const ChainGeometry& geom, const BetheSolution& sol,
                               EvalMode mode) {
    check_bound_solution(sol, BetheCase::IIIa, "case_IIIa_report");
    switch (mode) {
        case EvalMode::exact: return bound_exact_report(geom, BoundKernel{geom.L, sol.v, false});
        case EvalMode::tight: return tight_report(geom, sol.v);
        case EvalMode::loose: return loose_IIIa_report(geom, sol.u);
        default: throw domain_error("case_IIIa_report: mode must be exact, tight, or loose");
    }
}

BetheSolution case_IIIb_params(std::int64_t L, std::int64_t I) { return bound_params(L, I, true); }

MagnonTables case_IIIb_tables(const ChainGeometry& geom, const BetheSolution& sol) {
    check_bound_solution(sol, BetheCase::IIIb, "case_IIIb_tables");
    if (sol.extremely_bound)
        throw domain_error("case_IIIb_tables: I = L/2 is the extremely bound state; "
                           "use single_magnon_report");
    if (sol.L != geom.L) throw domain_error("case_IIIb_tables: geometry/solution L mismatch");
    return bound_tables(geom, BoundKernel{geom.L, sol.v, true});
}

EntropyReport case_IIIb_report(const ChainGeometry& geom, const BetheSolution& sol,
                               EvalMode mode) {
    check_bound_solution(sol, BetheCase::IIIb, "case_IIIb_report");
    if (sol.extremely_bound) return single_magnon_report(geom);
    switch (mode) {
        case EvalMode::exact: return bound_exact_report(geom, BoundKernel{geom.L, sol.v, true});
        case EvalMode::tight: return tight_report(geom, sol.v);
        case EvalMode::loose: return loose_IIIb_report(geom, sol.u);
        case EvalMode::scaling:
            // u -> 0 (or v = w/L^2) limit: the two-identical classical triple.
            return classical::r_identical_scaling_report(geom.x(), geom.L, 2);
        default:
            throw domain_error("case_IIIb_report: mode must be exact, tight, loose, or scaling "
                               "(the u -> 0 limit)");
    }
}

EntropyReport tight_report(const ChainGeometry& geom, double v) {
    if (!(v > 0.0)) throw domain_error("tight limit: v must be > 0");
    const double e2 = std::exp(-2.0 * v);
    const double log_2sinh = v + std::log1p(-e2);           // log(2 sinh v)
    const double vcoth = v * (1.0 + e2) / (1.0 - e2);
    const double bracket = std::log(static_cast<double>(geom.L)) - log_2sinh + vcoth;
    const double x = geom.x();
    return make_report(bracket, x * bracket - x_log_x(1.0 - x),
                       (1.0 - x) * bracket - x_log_x(x), EvalMode::tight);
}

EntropyReport loose_IIIa_report(const ChainGeometry& geom, double u) {
    return loose_report(geom, u, false);
}

EntropyReport loose_IIIb_report(const ChainGeometry& geom, double u) {
    return loose_report(geom, u, true);
}

EntropyReport single_magnon_report(const ChainGeometry& geom) {
    return boson::single_particle_report(geom);
}

}  // namespace qshannon::xxx
