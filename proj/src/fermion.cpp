#include "qshannon/fermion.hpp"

#include "free_chain_kernel.hpp"

namespace qshannon::fermion {
namespace {
using detail::Statistics;
constexpr Statistics kFermi = Statistics::fermi;
}  // namespace

EntropyReport single_particle_report(const ChainGeometry& geom) {
    return boson::single_particle_report(geom);
}

LocalProbabilities k1k2_total_table(std::int64_t L, const MomentumPair& pair) {
    return detail::k1k2_total_table(kFermi, L, pair);
}

double k1k2_total_entropy(std::int64_t L, const MomentumPair& pair, EvalMode mode) {
    return detail::k1k2_total_entropy(kFermi, L, pair, mode);
}

double exceptional_total_entropy(std::int64_t L, const ExceptionalMomentum& exc) {
    return detail::exceptional_total_entropy(kFermi, L, exc);
}

LocalProbabilities k1k2_sub_table(const ChainGeometry& geom, const MomentumPair& pair) {
    return detail::k1k2_sub_table(kFermi, geom, pair);
}

double k1k2_sub_entropy(const ChainGeometry& geom, const MomentumPair& pair, EvalMode mode) {
    return detail::k1k2_sub_entropy(kFermi, geom, pair, mode);
}

double exceptional_sub_entropy(std::int64_t L, double x, const ExceptionalMomentum& exc) {
    return detail::exceptional_sub_entropy(kFermi, L, x, exc);
}

double k1k2_mutual_info(const ChainGeometry& geom, const MomentumPair& pair, EvalMode mode) {
    return detail::k1k2_mutual_info(kFermi, geom, pair, mode);
}

double universal_mutual_info(double x) { return detail::universal_mutual_info(x); }

double exceptional_mutual_info(double x, const ExceptionalMomentum& exc) {
    return detail::exceptional_mutual_info(kFermi, x, exc);
}

EntropyReport k1k2_report(const ChainGeometry& geom, const MomentumPair& pair, EvalMode mode) {
    return detail::k1k2_report(kFermi, geom, pair, mode);
}

double universal_total_entropy(std::int64_t L) { return detail::universal_total_entropy(L); }

double universal_sub_entropy(std::int64_t L, double x) {
    return detail::universal_sub_entropy(L, x);
}

}  // namespace qshannon::fermion
