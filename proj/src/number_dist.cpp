#include "qshannon/number_dist.hpp"

#include <cmath>

#include "qshannon/classical.hpp"

namespace qshannon::number_dist {
namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

ProbabilityDistribution number_probs_at(Statistics st, std::int64_t L, double x,
                                        std::int64_t k12) {
    if (L < 2) throw domain_error("number_probs_at: L must be >= 2");
    if (!(x >= 0.0 && x <= 1.0)) throw domain_error("number_probs_at: x outside [0, 1]");
    std::int64_t k = k12 % L;
    if (k < 0) k += L;
    if (k == 0) throw domain_error("number_probs_at: k1 == k2 (mod L)");
    if (2 * k > L) k = L - k;  // representative with |k12| <= L/2
    const double sk = std::sin(kPi * static_cast<double>(k) / static_cast<double>(L));
    const double skx = std::sin(kPi * static_cast<double>(k) * x);
    const double t = skx * skx / (static_cast<double>(L) * static_cast<double>(L) * sk * sk);
    const double sgn = st == Statistics::bose ? +1.0 : -1.0;
    return ProbabilityDistribution({(1.0 - x) * (1.0 - x) + sgn * t,
                                    2.0 * (x * (1.0 - x) - sgn * t),
                                    x * x + sgn * t});
}

ProbabilityDistribution boson_number_probs(const ChainGeometry& geom, const MomentumPair& pair) {
    return number_probs_at(Statistics::bose, geom.L, geom.x(), pair.abs_k12());
}

ProbabilityDistribution fermion_number_probs(const ChainGeometry& geom, const MomentumPair& pair) {
    return number_probs_at(Statistics::fermi, geom.L, geom.x(), pair.abs_k12());
}

double number_entropy(const ProbabilityDistribution& probs) { return shannon_entropy(probs); }

double classical_binomial_entropy(std::int64_t R, double x) {
    return classical::binomial_count_entropy(R, x);
}

}  // namespace qshannon::number_dist
