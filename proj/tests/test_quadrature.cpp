#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qshannon/entropy.hpp"
#include "qshannon/quadrature.hpp"

using namespace qshannon;

namespace {
constexpr double kPi = 3.14159265358979323846;

double cos2log(double t) {
    const double c = std::cos(kPi * t);
    const double v = c * c;
    return v > 0.0 ? v * std::log(v) : 0.0;
}

double sin2log(double t) {
    const double s = std::sin(kPi * t);
    const double v = s * s;
    return v > 0.0 ? v * std::log(v) : 0.0;
}
}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("polynomial") {
    CHECK(integrate([](double t) { return t; }, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("cos^2 log cos^2 matches the closed value and the midpoint oracle") {
    const double closed = (1.0 - 2.0 * std::log(2.0)) / 2.0;  // ~ -0.19314718
    const double got = integrate(cos2log, 0.0, 1.0);
    CHECK(got == doctest::Approx(closed).epsilon(1e-9));
    CHECK(got == doctest::Approx(oracle::midpoint_integral(cos2log, 0.0, 1.0)).epsilon(1e-8));
    // t -> t + 1/2 maps cos^2 onto sin^2 on the periodic interval.
    CHECK(integrate(sin2log, 0.0, 1.0) == doctest::Approx(closed).epsilon(1e-9));
}

TEST_CASE("linearity and interval additivity on random smooth functions") {
    std::mt19937 rng(7771);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double a1 = coeff(rng), a2 = coeff(rng), a3 = coeff(rng);
        const double b1 = coeff(rng), b2 = coeff(rng);
        const auto f = [&](double t) { return a1 * std::sin(3 * t) + a2 * t * t + a3; };
        const auto g = [&](double t) { return b1 * std::cos(2 * t) + b2 * t; };
        const double tol = 1e-10;
        const double lhs = integrate([&](double t) { return a1 * f(t) + b1 * g(t); }, 0.0, 2.0,
                                     tol);
        const double rhs = a1 * integrate(f, 0.0, 2.0, tol) + b1 * integrate(g, 0.0, 2.0, tol);
        CHECK(std::abs(lhs - rhs) < 10 * tol);

        const double whole = integrate(f, 0.0, 2.0, tol);
        const double split = integrate(f, 0.0, 0.7, tol) + integrate(f, 0.7, 2.0, tol);
        CHECK(std::abs(whole - split) < 10 * tol);
    }
}

TEST_CASE("refining the tolerance never worsens the midpoint-oracle discrepancy") {
    const double reference = oracle::midpoint_integral(cos2log, 0.0, 1.0, 2000000);
    double prev = std::abs(integrate(cos2log, 0.0, 1.0, 1e-4) - reference);
    for (double tol : {1e-5, 1e-6, 1e-7, 1e-8}) {
        const double cur = std::abs(integrate(cos2log, 0.0, 1.0, tol) - reference);
        CHECK(cur <= prev + 1e-14);
        prev = cur;
    }
}

TEST_CASE("max_depth exhaustion reports a convergence error with the best estimate") {
    IntegrationRequest req;
    // Integrable inverse-square-root singularity: three bisections are
    // nowhere near enough for 1e-14.
    req.integrand = [](double t) { return 1.0 / std::sqrt(std::abs(t - 1.0 / 3.0) + 1e-300); };
    req.lower = 0.0;
    req.upper = 1.0;
    req.absolute_tolerance = 1e-14;
    req.max_depth = 3;
    CHECK_THROWS_AS(integrate(req), convergence_error);
    try {
        integrate(req);
    } catch (const convergence_error& err) {
        CHECK(std::isfinite(err.best_estimate));
    }
}

TEST_CASE("degenerate and invalid intervals") {
    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0), domain_error);
}

}  // TEST_SUITE
