#include "qshannon/boson.hpp"

#include <cmath>
#include <numeric>

#include "free_chain_kernel.hpp"

namespace qshannon {

MomentumPair::MomentumPair(std::int64_t k1_in, std::int64_t k2_in, std::int64_t L)
    : k1(k1_in), k2(k2_in) {
    if (L < 2) throw domain_error("MomentumPair: L must be >= 2");
    std::int64_t r = (k1_in - k2_in) % L;
    if (r < 0) r += L;
    if (r == 0)
        throw domain_error(
            "MomentumPair: k1 == k2 (mod L); not a two-mode state "
            "(bosonic |k^2>: use kk_report; fermionic: the state vanishes)");
    k12 = 2 * r <= L ? r : r - L;
}

MomentumPair MomentumPair::from_difference(std::int64_t k12_in, std::int64_t L) {
    return MomentumPair(k12_in, 0, L);
}

ExceptionalMomentum::ExceptionalMomentum(std::int64_t m_in, std::int64_t n_in)
    : m(m_in), n(n_in) {
    if (m < 1 || n < 2) throw domain_error("ExceptionalMomentum: need m >= 1, n >= 2");
    if (std::gcd(m, n) != 1) throw domain_error("ExceptionalMomentum: m and n must be coprime");
    if (2 * m > n) throw domain_error("ExceptionalMomentum: m/n must be <= 1/2");
}

void ExceptionalMomentum::validate_against(std::int64_t L) const {
    if (L % n != 0)
        throw domain_error("ExceptionalMomentum: n = " + std::to_string(n) +
                           " does not divide L = " + std::to_string(L));
}

ExceptionalMomentum ExceptionalMomentum::from_pair(const MomentumPair& pair, std::int64_t L) {
    const std::int64_t k = pair.abs_k12();
    const std::int64_t g = std::gcd(k, L);
    return ExceptionalMomentum(k / g, L / g);
}

namespace boson {
namespace {
using detail::Statistics;
constexpr Statistics kBose = Statistics::bose;
}  // namespace

EntropyReport single_particle_report(const ChainGeometry& geom) {
    const double logL = std::log(static_cast<double>(geom.L));
    const double x = geom.x();
    const double h_sub = x * logL - x_log_x(1.0 - x);
    const double h_comp = (1.0 - x) * logL - x_log_x(x);
    return make_report(logL, h_sub, h_comp, EvalMode::exact);
}

LocalProbabilities kk_total_table(std::int64_t L) {
    if (L < 2) throw domain_error("kk_total_table: L must be >= 2");
    const double L2 = static_cast<double>(L) * static_cast<double>(L);
    LocalProbabilities table;
    table.diagonal.assign(static_cast<std::size_t>(L), 1.0 / L2);
    for (std::int64_t d = 1; d < L; ++d) table.pairs.push_back({d, 2.0 / L2, L - d});
    return table;
}

LocalProbabilities kk_sub_table(const ChainGeometry& geom) {
    const double x = geom.x();
    const double L = static_cast<double>(geom.L);
    LocalProbabilities table;
    table.has_vacuum = true;
    table.p0 = (1.0 - x) * (1.0 - x);
    table.singles.assign(static_cast<std::size_t>(geom.ell), 2.0 * (1.0 - x) / L);
    table.diagonal.assign(static_cast<std::size_t>(geom.ell), 1.0 / (L * L));
    for (std::int64_t d = 1; d < geom.ell; ++d)
        table.pairs.push_back({d, 2.0 / (L * L), geom.ell - d});
    return table;
}

EntropyReport kk_report(const ChainGeometry& geom, EvalMode mode) {
    if (mode == EvalMode::exact) {
        const double h_total = kk_total_table(geom.L).entropy();
        const double h_sub = kk_sub_table(geom).entropy();
        const double h_comp = kk_sub_table(geom.complement()).entropy();
        return make_report(h_total, h_sub, h_comp, mode);
    }
    if (mode == EvalMode::scaling) {
        const double logL = std::log(static_cast<double>(geom.L));
        const double log2 = std::log(2.0);
        const auto h_sub_at = [&](double x) {
            return 2.0 * x * logL - x * (2.0 - x) * log2 - 2.0 * x_log_x(1.0 - x);
        };
        const double x = geom.x();
        return make_report(2.0 * logL - log2, h_sub_at(x), h_sub_at(1.0 - x), mode);
    }
    throw domain_error("kk_report: mode must be exact or scaling");
}

LocalProbabilities k1k2_total_table(std::int64_t L, const MomentumPair& pair) {
    return detail::k1k2_total_table(kBose, L, pair);
}

double k1k2_total_entropy(std::int64_t L, const MomentumPair& pair, EvalMode mode) {
    return detail::k1k2_total_entropy(kBose, L, pair, mode);
}

double exceptional_total_entropy(std::int64_t L, const ExceptionalMomentum& exc) {
    return detail::exceptional_total_entropy(kBose, L, exc);
}

LocalProbabilities k1k2_sub_table(const ChainGeometry& geom, const MomentumPair& pair) {
    return detail::k1k2_sub_table(kBose, geom, pair);
}

double k1k2_sub_entropy(const ChainGeometry& geom, const MomentumPair& pair, EvalMode mode) {
    return detail::k1k2_sub_entropy(kBose, geom, pair, mode);
}

double exceptional_sub_entropy(std::int64_t L, double x, const ExceptionalMomentum& exc) {
    return detail::exceptional_sub_entropy(kBose, L, x, exc);
}

double k1k2_mutual_info(const ChainGeometry& geom, const MomentumPair& pair, EvalMode mode) {
    return detail::k1k2_mutual_info(kBose, geom, pair, mode);
}

double universal_mutual_info(double x) { return detail::universal_mutual_info(x); }

double exceptional_mutual_info(double x, const ExceptionalMomentum& exc) {
    return detail::exceptional_mutual_info(kBose, x, exc);
}

EntropyReport k1k2_report(const ChainGeometry& geom, const MomentumPair& pair, EvalMode mode) {
    return detail::k1k2_report(kBose, geom, pair, mode);
}

double universal_total_entropy(std::int64_t L) { return detail::universal_total_entropy(L); }

double universal_sub_entropy(std::int64_t L, double x) {
    return detail::universal_sub_entropy(L, x);
}

}  // namespace boson
}  // namespace qshannon
