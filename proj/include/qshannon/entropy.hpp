#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qshannon {

/// Parameter or domain violation (maps to CLI exit code 2).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Iterative scheme failed to reach tolerance (maps to CLI exit code 3).
/// Carries the best estimate available when the failure was detected.
struct convergence_error : std::runtime_error {
    double best_estimate;
    convergence_error(const std::string& what, double best)
        : std::runtime_error(what), best_estimate(best) {}
};

/// Kahan compensated accumulator. Entropy tables reach ~350k terms at
/// L=840 while acceptance tolerances sit at 1e-3..1e-2, so plain
/// summation drift is not acceptable.
struct KahanAccumulator {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double value) {
        const double y = value - compensation;
        const double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }
    KahanAccumulator& operator+=(double value) {
        add(value);
        return *this;
    }
    operator double() const { return sum; }
};

/// p*log(p) in nats with the continuous extension 0 at p==0.
/// Accepts p in [0, 1+1e-12]; anything else is a domain error.
double x_log_x(double p);

/// Finite probability table. Weights in [-tolerance, 0) are clamped to
/// zero (they arise from exact formulas that are provably nonnegative,
/// e.g. the fermionic p0 or case IIIa p_j); weights below -tolerance and
/// totals off 1 by more than tolerance*count are rejected.
class ProbabilityDistribution {
  public:
    explicit ProbabilityDistribution(std::vector<double> weights, double tolerance = 1e-10);

    const std::vector<double>& weights() const { return weights_; }
    double tolerance() const { return tolerance_; }
    std::size_t size() const { return weights_.size(); }

  private:
    std::vector<double> weights_;
    double tolerance_;
};

/// H = -sum_i p_i log p_i in nats, compensated accumulation.
double shannon_entropy(const ProbabilityDistribution& dist);

/// M = H_sub + H_complement - H_total.
double mutual_information(double h_sub, double h_complement, double h_total);

/// Which formula family produced a report.
enum class EvalMode { exact, scaling, universal, exceptional, tight, loose };

const char* to_string(EvalMode mode);
EvalMode eval_mode_from_string(const std::string& name);

/// Periodic chain of L sites with the connected subsystem A = [1, ell].
struct ChainGeometry {
    std::int64_t L;
    std::int64_t ell;

    ChainGeometry(std::int64_t total_sites, std::int64_t subsystem_sites);

    double x() const { return static_cast<double>(ell) / static_cast<double>(L); }
    ChainGeometry complement() const { return ChainGeometry(L, L - ell); }
};

/// The triple H(L), H(ell), H(L-ell) and the mutual information, in nats.
struct EntropyReport {
    double H_total;
    double H_sub;
    double H_complement;
    double MI;
    EvalMode mode;
};

/// Assembles a report; MI = H_sub + H_complement - H_total by construction.
EntropyReport make_report(double h_total, double h_sub, double h_complement, EvalMode mode);

}  // namespace qshannon
