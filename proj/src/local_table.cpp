#include "qshannon/local_table.hpp"

namespace qshannon {

double LocalProbabilities::total_weight() const {
    KahanAccumulator acc;
    if (has_vacuum) acc += p0;
    for (double p : singles) acc += p;
    for (double p : diagonal) acc += p;
    for (const auto& sw : pairs) acc += static_cast<double>(sw.multiplicity) * sw.probability;
    return acc;
}

double LocalProbabilities::entropy() const {
    KahanAccumulator acc;
    if (has_vacuum) acc += x_log_x(p0);
    for (double p : singles) acc += x_log_x(p);
    for (double p : diagonal) acc += x_log_x(p);
    for (const auto& sw : pairs)
        acc += static_cast<double>(sw.multiplicity) * x_log_x(sw.probability);
    return -static_cast<double>(acc);
}

std::int64_t LocalProbabilities::outcome_count() const {
    std::int64_t n = has_vacuum ? 1 : 0;
    n += static_cast<std::int64_t>(singles.size());
    n += static_cast<std::int64_t>(diagonal.size());
    for (const auto& sw : pairs) n += sw.multiplicity;
    return n;
}

ProbabilityDistribution LocalProbabilities::to_distribution(double tolerance) const {
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(outcome_count()));
    if (has_vacuum) flat.push_back(p0);
    flat.insert(flat.end(), singles.begin(), singles.end());
    flat.insert(flat.end(), diagonal.begin(), diagonal.end());
    for (const auto& sw : pairs)
        for (std::int64_t i = 0; i < sw.multiplicity; ++i) flat.push_back(sw.probability);
    return ProbabilityDistribution(std::move(flat), tolerance);
}

}  // namespace qshannon
