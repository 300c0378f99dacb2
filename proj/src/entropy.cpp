#include "qshannon/entropy.hpp"

#include <algorithm>

namespace qshannon {

double x_log_x(double p) {
    if (!(p >= 0.0) || p > 1.0 + 1e-12)
        throw domain_error("x_log_x: probability " + std::to_string(p) + " outside [0, 1+1e-12]");
    if (p == 0.0) return 0.0;
    return p * std::log(p);
}

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> weights, double tolerance)
    : weights_(std::move(weights)), tolerance_(tolerance) {
    if (tolerance_ <= 0.0) throw domain_error("ProbabilityDistribution: tolerance must be > 0");
    KahanAccumulator total;
    for (double& w : weights_) {
        if (w < -tolerance_)
            throw domain_error("ProbabilityDistribution: weight " + std::to_string(w) +
                               " below -tolerance");
        if (w < 0.0) w = 0.0;
        total += w;
    }
    const double slack = tolerance_ * static_cast<double>(std::max<std::size_t>(weights_.size(), 1));
    if (std::abs(static_cast<double>(total) - 1.0) > slack)
        throw domain_error("ProbabilityDistribution: weights sum to " +
                           std::to_string(static_cast<double>(total)) + ", not 1");
}

double shannon_entropy(const ProbabilityDistribution& dist) {
    KahanAccumulator acc;
    for (double w : dist.weights()) acc += x_log_x(w);
    return -static_cast<double>(acc);
}

double mutual_information(double h_sub, double h_complement, double h_total) {
    return h_sub + h_complement - h_total;
}

const char* to_string(EvalMode mode) {
    switch (mode) {
        case EvalMode::exact: return "exact";
        case EvalMode::scaling: return "scaling";
        case EvalMode::universal: return "universal";
        case EvalMode::exceptional: return "exceptional";
        case EvalMode::tight: return "tight";
        case EvalMode::loose: return "loose";
    }
    return "?";
}

EvalMode eval_mode_from_string(const std::string& name) {
    if (name == "exact") return EvalMode::exact;
    if (name == "scaling") return EvalMode::scaling;
    if (name == "universal") return EvalMode::universal;
    if (name == "exceptional") return EvalMode::exceptional;
    if (name == "tight") return EvalMode::tight;
    if (name == "loose") return EvalMode::loose;
    throw domain_error("unknown evaluation mode: " + name);
}

ChainGeometry::ChainGeometry(std::int64_t total_sites, std::int64_t subsystem_sites)
    : L(total_sites), ell(subsystem_sites) {
    if (L < 2) throw domain_error("ChainGeometry: L must be >= 2");
    if (ell < 1 || ell > L - 1)
        throw domain_error("ChainGeometry: ell must satisfy 1 <= ell <= L-1 (got ell=" +
                           std::to_string(ell) + ", L=" + std::to_string(L) + ")");
}

EntropyReport make_report(double h_total, double h_sub, double h_complement, EvalMode mode) {
    return EntropyReport{h_total, h_sub, h_complement,
                         mutual_information(h_sub, h_complement, h_total), mode};
}

}  // namespace qshannon
