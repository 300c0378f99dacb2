#include "qshannon/sigma_x.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <complex>
#include <thread>
#include <vector>

#include "math_util.hpp"

namespace qshannon::sigma_x {
namespace {

using detail::xlogx_unrestricted;

constexpr double kPi = 3.14159265358979323846;
constexpr std::uint64_t kBlockBits = 16;  // blocks re-seed S from scratch every 2^16 steps

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

/// Phase deltas 2 e^{2 pi i (j I mod L) / L}, j = 1..count. Integer
/// reduction keeps the trig arguments in [0, 2 pi).
std::vector<std::complex<double>> phase_deltas(std::int64_t L, std::int64_t I,
                                               std::int64_t count) {
    std::vector<std::complex<double>> deltas(static_cast<std::size_t>(count));
    std::int64_t Imod = I % L;
    if (Imod < 0) Imod += L;
    for (std::int64_t j = 1; j <= count; ++j) {
        const std::int64_t r = (j * Imod) % L;
        const double arg = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(L);
        deltas[static_cast<std::size_t>(j - 1)] = {2.0 * std::cos(arg), 2.0 * std::sin(arg)};
    }
    return deltas;
}

std::complex<double> seed_sum(const std::vector<std::complex<double>>& deltas,
                              std::uint64_t mask) {
    std::complex<double> s{0.0, 0.0};
    for (std::size_t j = 0; j < deltas.size(); ++j) {
        const std::complex<double> half = 0.5 * deltas[j];
        s += (mask >> j) & 1u ? -half : half;
    }
    return s;
}

struct BlockPartial {
    double weight = 0.0;
    double weighted_log = 0.0;
};

/// Walks one contiguous Gray-code block [first, last) of mask indices;
/// Transform maps |S|^2 to the per-configuration weight q, and the
/// block accumulates sum q and sum q log q with compensation.
template <typename Transform>
BlockPartial walk_block(const std::vector<std::complex<double>>& deltas, std::uint64_t first,
                        std::uint64_t last, const Transform& weight_of) {
    std::complex<double> s = seed_sum(deltas, gray(first));
    KahanAccumulator weight, weighted_log;
    {
        const double q = weight_of(std::norm(s));
        weight += q;
        weighted_log += xlogx_unrestricted(q);
    }
    std::uint64_t mask = gray(first);
    for (std::uint64_t i = first + 1; i < last; ++i) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(i));
        const std::uint64_t flip = std::uint64_t{1} << bit;
        // Site flips from m to -m: S changes by -2 m e^{i phi}.
        s += (mask & flip) ? deltas[bit] : -deltas[bit];
        mask ^= flip;
        const double q = weight_of(std::norm(s));
        weight += q;
        weighted_log += xlogx_unrestricted(q);
    }
    return BlockPartial{weight, weighted_log};
}

template <typename Transform>
BlockPartial enumerate_masks(std::int64_t bits, const std::vector<std::complex<double>>& deltas,
                             int threads, const Transform& weight_of) {
    const std::uint64_t total = std::uint64_t{1} << bits;
    const std::uint64_t block = std::min<std::uint64_t>(total, std::uint64_t{1} << kBlockBits);
    const std::uint64_t nblocks = total / block;

    std::vector<BlockPartial> partials(nblocks);
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(nblocks)));

    if (threads == 1) {
        for (std::uint64_t b = 0; b < nblocks; ++b)
            partials[b] = walk_block(deltas, b * block, (b + 1) * block, weight_of);
    } else {
        std::atomic<std::uint64_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::uint64_t b = next.fetch_add(1);
                if (b >= nblocks) return;
                partials[b] = walk_block(deltas, b * block, (b + 1) * block, weight_of);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Fixed-order reduction: results are bit-identical for any thread count.
    KahanAccumulator weight, weighted_log;
    for (const BlockPartial& p : partials) {
        weight += p.weight;
        weighted_log += p.weighted_log;
    }
    return BlockPartial{weight, weighted_log};
}

void check_ceiling(std::int64_t bits, const EnumerationOptions& opts) {
    if (bits > opts.max_sites) {
        const double steps = std::pow(2.0, static_cast<double>(bits));
        throw domain_error("sigma-x enumeration: " + std::to_string(bits) + " sites need ~" +
                           std::to_string(steps) +
                           " Gray steps; above the configured ceiling of " +
                           std::to_string(opts.max_sites) + " sites");
    }
    if (bits > 62) throw domain_error("sigma-x enumeration: mask space exceeds 64-bit indices");
}

void check_bethe_number(std::int64_t L, std::int64_t I) {
    if (I < 0 || I >= L)
        throw domain_error("sigma-x magnon: Bethe number I must lie in [0, L-1]");
}

}  // namespace

EntropyReport ground_state_report(const ChainGeometry& geom) {
    const double log2 = std::log(2.0);
    return make_report(static_cast<double>(geom.L) * log2, static_cast<double>(geom.ell) * log2,
                       static_cast<double>(geom.L - geom.ell) * log2, EvalMode::exact);
}

EnumerationResult magnon_total_enumeration(std::int64_t L, std::int64_t I,
                                           const EnumerationOptions& opts) {
    if (L < 1) throw domain_error("magnon_total_enumeration: L must be >= 1");
    check_bethe_number(L, I);
    check_ceiling(L, opts);
    const auto deltas = phase_deltas(L, I, L);
    // p = |S|^2 / (2^L L); accumulate over t = |S|^2 and rescale:
    // H = log(2^L L) - sum t log t / (2^L L).
    const BlockPartial acc =
        enumerate_masks(L, deltas, opts.threads, [](double t) { return t; });
    const double scale = std::pow(2.0, static_cast<double>(L)) * static_cast<double>(L);
    const double log_scale = static_cast<double>(L) * std::log(2.0) +
                             std::log(static_cast<double>(L));
    return EnumerationResult{log_scale - acc.weighted_log / scale, acc.weight / scale};
}

double magnon_total_entropy(std::int64_t L, std::int64_t I, const EnumerationOptions& opts) {
    return magnon_total_enumeration(L, I, opts).entropy;
}

EnumerationResult magnon_sub_enumeration(const ChainGeometry& geom, std::int64_t I,
                                         const EnumerationOptions& opts) {
    check_bethe_number(geom.L, I);
    check_ceiling(geom.ell, opts);
    const auto deltas = phase_deltas(geom.L, I, geom.ell);
    const double c = 1.0 - geom.x();
    const double invL = 1.0 / static_cast<double>(geom.L);
    // p = (c + |S|^2 / L) / 2^ell; accumulate q = c + |S|^2/L:
    // H = ell log 2 - sum q log q / 2^ell.
    const BlockPartial acc =
        enumerate_masks(geom.ell, deltas, opts.threads,
                        [c, invL](double t) { return c + t * invL; });
    const double scale = std::pow(2.0, static_cast<double>(geom.ell));
    return EnumerationResult{static_cast<double>(geom.ell) * std::log(2.0) -
                                 acc.weighted_log / scale,
                             acc.weight / scale};
}

double magnon_sub_entropy(const ChainGeometry& geom, std::int64_t I,
                          const EnumerationOptions& opts) {
    return magnon_sub_enumeration(geom, I, opts).entropy;
}

EntropyReport magnon_report(const ChainGeometry& geom, std::int64_t I,
                            const EnumerationOptions& opts) {
    // Translation invariance makes the complement block's distribution
    // equal that of a block of the same size starting at site 1.
    return make_report(magnon_total_entropy(geom.L, I, opts),
                       magnon_sub_entropy(geom, I, opts),
                       magnon_sub_entropy(geom.complement(), I, opts), EvalMode::exact);
}

double special_I_total_entropy(std::int64_t L, std::int64_t I) {
    if (L < 1) throw domain_error("special_I_total_entropy: L must be >= 1");
    if (!(I == 0 || (L % 2 == 0 && I == L / 2)))
        throw domain_error("special_I_total_entropy: closed form holds for I = 0 or I = L/2");
    const double logL = std::log(static_cast<double>(L));
    const double Llog2 = static_cast<double>(L) * std::log(2.0);
    KahanAccumulator acc;
    for (std::int64_t n = 0; n <= L; ++n) {
        const double diff = static_cast<double>(L - 2 * n);
        const double g = diff * diff / static_cast<double>(L);
        if (g <= 0.0) continue;
        const double logw = std::lgamma(static_cast<double>(L + 1)) -
                            std::lgamma(static_cast<double>(n + 1)) -
                            std::lgamma(static_cast<double>(L - n + 1)) - Llog2;
        acc += std::exp(logw) * g * (2.0 * std::log(std::abs(diff)) - logL);
    }
    return Llog2 - static_cast<double>(acc);
}

double special_I_sub_closed_form(const ChainGeometry& geom, std::int64_t I) {
    if (!(I == 0 || (geom.L % 2 == 0 && I == geom.L / 2)))
        throw domain_error("special_I_sub_closed_form: closed form holds for I = 0 or I = L/2");
    const std::int64_t ell = geom.ell;
    const double elllog2 = static_cast<double>(ell) * std::log(2.0);
    KahanAccumulator acc;
    for (std::int64_t n = 0; n <= ell; ++n) {
        const double g = 1.0 + static_cast<double>(ell * ell - (4 * n + 1) * ell + 4 * n * n) /
                                   static_cast<double>(geom.L);
        const double logw = std::lgamma(static_cast<double>(ell + 1)) -
                            std::lgamma(static_cast<double>(n + 1)) -
                            std::lgamma(static_cast<double>(ell - n + 1)) - elllog2;
        acc += std::exp(logw) * xlogx_unrestricted(g);
    }
    return elllog2 - static_cast<double>(acc);
}

}  // namespace qshannon::sigma_x
