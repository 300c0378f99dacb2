#include "qshannon/classical.hpp"

#include <cmath>

namespace qshannon::classical {
namespace {

double log_factorial(std::int64_t r) {
    if (r < 0) throw domain_error("log_factorial: negative argument");
    if (r > 20) throw domain_error("log_factorial: r > 20 not supported (finite-r scaling only)");
    double f = 1.0;
    for (std::int64_t i = 2; i <= r; ++i) f *= static_cast<double>(i);
    return std::log(f);
}

double binomial(std::int64_t r, std::int64_t i) {
    double c = 1.0;
    for (std::int64_t t = 1; t <= i; ++t)
        c *= static_cast<double>(r - i + t) / static_cast<double>(t);
    return c;
}

// Entropy of a list of (probability, multiplicity) rows.
double table_entropy(const std::vector<std::pair<double, std::int64_t>>& rows) {
    KahanAccumulator acc;
    for (const auto& [p, mult] : rows) acc += static_cast<double>(mult) * x_log_x(p);
    return -static_cast<double>(acc);
}

double soft_two_identical_total(std::int64_t L) {
    const double L2 = static_cast<double>(L) * static_cast<double>(L);
    return table_entropy({{1.0 / L2, L}, {2.0 / L2, L * (L - 1) / 2}});
}

double soft_two_identical_sub(const ChainGeometry& g) {
    const double x = g.x();
    const double L = static_cast<double>(g.L);
    return table_entropy({{(1.0 - x) * (1.0 - x), 1},
                          {2.0 * (1.0 - x) / L, g.ell},
                          {1.0 / (L * L), g.ell},
                          {2.0 / (L * L), g.ell * (g.ell - 1) / 2}});
}

double hard_two_identical_total(std::int64_t L) {
    const double p = 2.0 / (static_cast<double>(L) * static_cast<double>(L - 1));
    return table_entropy({{p, L * (L - 1) / 2}});
}

double hard_two_identical_sub(const ChainGeometry& g) {
    const double LL1 = static_cast<double>(g.L) * static_cast<double>(g.L - 1);
    const std::int64_t B = g.L - g.ell;
    return table_entropy({{static_cast<double>(B) * static_cast<double>(B - 1) / LL1, 1},
                          {2.0 * static_cast<double>(B) / LL1, g.ell},
                          {2.0 / LL1, g.ell * (g.ell - 1) / 2}});
}

double soft_two_distinguishable_total(std::int64_t L) {
    const double L2 = static_cast<double>(L) * static_cast<double>(L);
    return table_entropy({{1.0 / L2, L}, {1.0 / L2, L * (L - 1)}});
}

double soft_two_distinguishable_sub(const ChainGeometry& g) {
    const double x = g.x();
    const double L = static_cast<double>(g.L);
    return table_entropy({{(1.0 - x) * (1.0 - x), 1},
                          {(1.0 - x) / L, 2 * g.ell},          // red-only and blue-only entries
                          {1.0 / (L * L), g.ell},
                          {1.0 / (L * L), g.ell * (g.ell - 1)}});
}

double hard_two_distinguishable_total(std::int64_t L) {
    const double p = 1.0 / (static_cast<double>(L) * static_cast<double>(L - 1));
    return table_entropy({{p, L * (L - 1)}});
}

double hard_two_distinguishable_sub(const ChainGeometry& g) {
    const double LL1 = static_cast<double>(g.L) * static_cast<double>(g.L - 1);
    const std::int64_t B = g.L - g.ell;
    return table_entropy({{static_cast<double>(B) * static_cast<double>(B - 1) / LL1, 1},
                          {static_cast<double>(B) / LL1, 2 * g.ell},
                          {1.0 / LL1, g.ell * (g.ell - 1)}});
}

}  // namespace

CoreType core_from_string(const std::string& name) {
    if (name == "soft") return CoreType::soft;
    if (name == "hard") return CoreType::hard;
    throw domain_error("unknown core type: " + name);
}

std::int64_t ClassicalConfig::total_particles() const {
    std::int64_t R = 0;
    for (std::int64_t r : species) {
        if (r < 1) throw domain_error("ClassicalConfig: species multiplicities must be >= 1");
        R += r;
    }
    return R;
}

EntropyReport one_particle_report(const ChainGeometry& geom, EvalMode mode) {
    if (mode != EvalMode::exact && mode != EvalMode::scaling)
        throw domain_error("one_particle_report: mode must be exact or scaling");
    // The table {1-x; 1/L x ell} is exact for all L, so both modes
    // evaluate the same closed forms.
    const double logL = std::log(static_cast<double>(geom.L));
    const double x = geom.x();
    return make_report(logL, x * logL - x_log_x(1.0 - x), (1.0 - x) * logL - x_log_x(x), mode);
}

EntropyReport two_identical_report(const ChainGeometry& geom, CoreType core, EvalMode mode) {
    if (mode == EvalMode::exact) {
        if (core == CoreType::hard && geom.L < 2)
            throw domain_error("two_identical_report: hard core needs L >= 2");
        const bool soft = core == CoreType::soft;
        const double h_total =
            soft ? soft_two_identical_total(geom.L) : hard_two_identical_total(geom.L);
        const double h_sub =
            soft ? soft_two_identical_sub(geom) : hard_two_identical_sub(geom);
        const double h_comp = soft ? soft_two_identical_sub(geom.complement())
                                   : hard_two_identical_sub(geom.complement());
        return make_report(h_total, h_sub, h_comp, mode);
    }
    if (mode == EvalMode::scaling) return r_identical_scaling_report(geom.x(), geom.L, 2);
    throw domain_error("two_identical_report: mode must be exact or scaling");
}

EntropyReport two_distinguishable_report(const ChainGeometry& geom, CoreType core, EvalMode mode) {
    if (mode == EvalMode::exact) {
        const bool soft = core == CoreType::soft;
        const double h_total = soft ? soft_two_distinguishable_total(geom.L)
                                    : hard_two_distinguishable_total(geom.L);
        const double h_sub =
            soft ? soft_two_distinguishable_sub(geom) : hard_two_distinguishable_sub(geom);
        const double h_comp = soft ? soft_two_distinguishable_sub(geom.complement())
                                   : hard_two_distinguishable_sub(geom.complement());
        return make_report(h_total, h_sub, h_comp, mode);
    }
    if (mode == EvalMode::scaling) {
        const double logL = std::log(static_cast<double>(geom.L));
        const double x = geom.x();
        const auto h_sub_at = [&](double z) { return 2.0 * z * logL - 2.0 * x_log_x(1.0 - z); };
        return make_report(2.0 * logL, h_sub_at(x), h_sub_at(1.0 - x), mode);
    }
    throw domain_error("two_distinguishable_report: mode must be exact or scaling");
}

EntropyReport r_identical_scaling_report(double x, std::int64_t L, std::int64_t r) {
    if (r < 1) throw domain_error("r_identical_scaling_report: r must be >= 1");
    if (!(x >= 0.0 && x <= 1.0)) throw domain_error("r_identical_scaling_report: x outside [0,1]");
    const double logL = std::log(static_cast<double>(L));
    const double h_total = static_cast<double>(r) * logL - log_factorial(r);
    const auto h_sub_at = [&](double z) {
        KahanAccumulator acc;
        for (std::int64_t i = 0; i <= r; ++i) {
            const double c = binomial(r, i);
            const double w = c * std::pow(z, static_cast<double>(i)) *
                             std::pow(1.0 - z, static_cast<double>(r - i));
            if (w <= 0.0) continue;
            double f = 1.0;
            for (std::int64_t t = 2; t <= i; ++t) f *= static_cast<double>(t);
            acc += w * std::log(f * c * std::pow(1.0 - z, static_cast<double>(r - i)));
        }
        return static_cast<double>(r) * z * logL - static_cast<double>(acc);
    };
    return make_report(h_total, h_sub_at(x), h_sub_at(1.0 - x), EvalMode::scaling);
}

EntropyReport multi_species_scaling_report(double x, std::int64_t L,
                                           const ClassicalConfig& config) {
    if (config.species.empty())
        throw domain_error("multi_species_scaling_report: need at least one species");
    config.total_particles();
    double h_total = 0.0, h_sub = 0.0, h_comp = 0.0;
    for (std::int64_t r : config.species) {
        const EntropyReport rep = r_identical_scaling_report(x, L, r);
        h_total += rep.H_total;
        h_sub += rep.H_sub;
        h_comp += rep.H_complement;
    }
    return make_report(h_total, h_sub, h_comp, EvalMode::scaling);
}

double binomial_count_entropy(std::int64_t R, double x) {
    if (R < 0) throw domain_error("binomial_count_entropy: R must be >= 0");
    KahanAccumulator acc;
    for (std::int64_t r = 0; r <= R; ++r) {
        const double w = binomial(R, r) * std::pow(x, static_cast<double>(r)) *
                         std::pow(1.0 - x, static_cast<double>(R - r));
        acc += x_log_x(w);
    }
    return -static_cast<double>(acc);
}

}  // namespace qshannon::classical
