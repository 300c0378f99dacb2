#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qshannon/boson.hpp"

using namespace qshannon;

namespace {

void check_total_vs_oracle(std::int64_t L, std::int64_t k1, std::int64_t k2, double tol) {
    const MomentumPair pair(k1, k2, L);
    const LocalProbabilities table = boson::k1k2_total_table(L, pair);
    const auto full = oracle::boson_k1k2_probs(L, k1, k2);
    for (std::int64_t j = 1; j <= L; ++j)
        CHECK(std::abs(table.diagonal[static_cast<std::size_t>(j - 1)] -
                       full.diag[static_cast<std::size_t>(j - 1)]) < tol);
    for (const auto& sw : table.pairs)
        for (std::int64_t j1 = 1; j1 + sw.separation <= L; ++j1)
            CHECK(std::abs(sw.probability - full.pair(j1, j1 + sw.separation)) < tol);
}

}  // namespace

TEST_SUITE("boson") {

TEST_CASE("single particle report") {
    const EntropyReport rep = boson::single_particle_report(ChainGeometry(4, 2));
    CHECK(rep.H_total == doctest::Approx(1.3863).epsilon(1e-4));
    CHECK(rep.H_sub == doctest::Approx(1.0397).epsilon(1e-4));
    CHECK(rep.MI == doctest::Approx(0.6931).epsilon(1e-4));

    // ell = L-1: the (1-x)log(1-x) term keeps H_sub below H_total by
    // exactly that amount; as x -> 1 it vanishes.
    const EntropyReport near_total = boson::single_particle_report(ChainGeometry(4096, 4095));
    CHECK(near_total.H_sub == doctest::Approx(near_total.H_total).epsilon(1e-3));

    const EntropyReport half = boson::single_particle_report(ChainGeometry(100, 50));
    CHECK(half.MI == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("kk report exact and scaling") {
    const EntropyReport exact = boson::kk_report(ChainGeometry(4, 2), EvalMode::exact);
    CHECK(exact.H_total == doctest::Approx(2.2527).epsilon(1e-4));

    // Oracle: |k^2> amplitudes at L=4 reproduce the same table.
    const auto full = oracle::boson_kk_probs(4, 1);
    double h = 0.0;
    for (double p : full.diag) h -= p * std::log(p);
    for (std::int64_t j1 = 1; j1 <= 4; ++j1)
        for (std::int64_t j2 = j1 + 1; j2 <= 4; ++j2) {
            const double p = full.pair(j1, j2);
            h -= p * std::log(p);
        }
    CHECK(exact.H_total == doctest::Approx(h).epsilon(1e-12));

    const EntropyReport scal = boson::kk_report(ChainGeometry(1000, 500), EvalMode::scaling);
    CHECK(scal.H_total == doctest::Approx(2 * std::log(1000.0) - std::log(2.0)).epsilon(1e-12));
    CHECK(scal.MI == doctest::Approx(1.0397).epsilon(1e-4));

    // Exact converges onto the scaling triple as L grows.
    const EntropyReport big_exact = boson::kk_report(ChainGeometry(2000, 1000), EvalMode::exact);
    const EntropyReport big_scal = boson::kk_report(ChainGeometry(2000, 1000), EvalMode::scaling);
    CHECK(std::abs(big_exact.H_total - big_scal.H_total) < 0.01);
    CHECK(std::abs(big_exact.H_sub - big_scal.H_sub) < 0.01);
    CHECK(std::abs(big_exact.MI - big_scal.MI) < 0.01);
}

TEST_CASE("k1k2 total table, L=4 patterns") {
    const LocalProbabilities t1 = boson::k1k2_total_table(4, MomentumPair(1, 0, 4));
    CHECK(t1.total_weight() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(t1.entropy() == doctest::Approx(std::log(8.0)).epsilon(1e-12));
    // Eight outcomes of weight 1/8 and two zero-weight pairs (d=2).
    std::int64_t zeros = 0;
    for (const auto& sw : t1.pairs)
        if (sw.probability == 0.0) zeros += sw.multiplicity;
    CHECK(zeros == 2);

    const LocalProbabilities t2 = boson::k1k2_total_table(4, MomentumPair(2, 0, 4));
    for (const auto& sw : t2.pairs) {
        if (sw.separation % 2 == 1) CHECK(sw.probability == 0.0);
        if (sw.separation == 2) CHECK(sw.probability == doctest::Approx(0.25));
    }
    for (double d : t2.diagonal) CHECK(d == doctest::Approx(2.0 / 16.0));
}

TEST_CASE("k1k2 total entropy: exact, universal, exceptional") {
    CHECK(boson::k1k2_total_entropy(4, MomentumPair(1, 0, 4), EvalMode::exact) ==
          doctest::Approx(std::log(8.0)).epsilon(1e-12));
    // Formula path equals the table path.
    for (std::int64_t L : {6, 9, 17, 24})
        for (std::int64_t k = 1; k <= L / 2; ++k)
            CHECK(boson::k1k2_total_entropy(L, MomentumPair::from_difference(k, L),
                                            EvalMode::exact) ==
                  doctest::Approx(boson::k1k2_total_table(L, MomentumPair::from_difference(k, L))
                                      .entropy())
                      .epsilon(1e-11));

    const double twologL = 2 * std::log(840.0);
    CHECK(boson::exceptional_total_entropy(840, ExceptionalMomentum(1, 2)) ==
          doctest::Approx(twologL - 2 * std::log(2.0)).epsilon(1e-12));
    CHECK(boson::exceptional_total_entropy(840, ExceptionalMomentum(1, 3)) ==
          doctest::Approx(twologL - 4.0 / 3.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(boson::exceptional_total_entropy(840, ExceptionalMomentum(1, 4)) ==
          doctest::Approx(twologL - 1.5 * std::log(2.0)).epsilon(1e-12));
    CHECK(boson::exceptional_total_entropy(840, ExceptionalMomentum(1, 6)) ==
          doctest::Approx(twologL - 2.0 / 3.0 * std::log(2.0) - 0.5 * std::log(3.0))
              .epsilon(1e-12));
    // n=5: -(1/5)log2 - (1/10)[(3-sqrt5)log(3-sqrt5) + (3+sqrt5)log(3+sqrt5)], same for m=1,2.
    const double s5 = std::sqrt(5.0);
    const double n5 = -0.2 * std::log(2.0) -
                      0.1 * ((3 - s5) * std::log(3 - s5) + (3 + s5) * std::log(3 + s5));
    CHECK(boson::exceptional_total_entropy(840, ExceptionalMomentum(1, 5)) ==
          doctest::Approx(twologL + n5).epsilon(1e-12));
    CHECK(boson::exceptional_total_entropy(840, ExceptionalMomentum(2, 5)) ==
          doctest::Approx(twologL + n5).epsilon(1e-12));
    CHECK(boson::universal_total_entropy(840) == doctest::Approx(twologL - 1.0));
    CHECK_THROWS_AS(ExceptionalMomentum(1, 11).validate_against(840), domain_error);
    CHECK_THROWS_AS(ExceptionalMomentum(2, 4), domain_error);  // not coprime
    CHECK_THROWS_AS(ExceptionalMomentum(3, 5), domain_error);  // m/n > 1/2
}

TEST_CASE("k1k2 sub table values and normalization") {
    CHECK_THROWS_AS(ChainGeometry(6, 6), domain_error);

    const LocalProbabilities t = boson::k1k2_sub_table(ChainGeometry(6, 3),
                                                       MomentumPair(1, 0, 6));
    CHECK(t.p0 == doctest::Approx(0.25 + 1.0 / 9.0).epsilon(1e-12));
    CHECK(t.total_weight() == doctest::Approx(1.0).epsilon(1e-12));

    std::mt19937 rng(424242);
    for (int trial = 0; trial < 40; ++trial) {
        const std::int64_t L = 3 + static_cast<std::int64_t>(rng() % 38);
        const std::int64_t ell = 1 + static_cast<std::int64_t>(rng() % (L - 1));
        const std::int64_t k12 = 1 + static_cast<std::int64_t>(rng() % (L - 1));
        if (k12 % L == 0) continue;
        const auto table = boson::k1k2_sub_table(ChainGeometry(L, ell),
                                                 MomentumPair(k12, 0, L));
        CHECK(table.total_weight() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("k1k2 sub entropy modes") {
    // Universal at x -> 1 reduces to the universal total entropy.
    CHECK(boson::universal_sub_entropy(512, 1.0) ==
          doctest::Approx(boson::universal_total_entropy(512)).epsilon(1e-12));
    // Exceptional n=2 at x=0.5: the cos^2 sum vanishes termwise.
    CHECK(boson::exceptional_sub_entropy(240, 0.5, ExceptionalMomentum(1, 2)) ==
          doctest::Approx(std::log(240.0)).epsilon(1e-12));
    // Exact vs scaling, L=240, k12=1, x=0.5: converged to < 0.02.
    const double exact =
        boson::k1k2_sub_entropy(ChainGeometry(240, 120), MomentumPair(1, 0, 240),
                                EvalMode::exact);
    const double scal =
        boson::k1k2_sub_entropy(ChainGeometry(240, 120), MomentumPair(1, 0, 240),
                                EvalMode::scaling);
    CHECK(std::abs(exact - scal) < 0.02);
}

TEST_CASE("k1k2 mutual information modes") {
    CHECK(boson::universal_mutual_info(0.0) == doctest::Approx(0.0));
    CHECK(boson::universal_mutual_info(0.5) == doctest::Approx(1.1931).epsilon(1e-4));
    // Exceptional n=2 equals the two-distinguishable classical MI.
    for (double x : {0.1, 0.3, 0.5, 0.8}) {
        const double mcl12 = -2 * x * std::log(x) - 2 * (1 - x) * std::log(1 - x);
        CHECK(boson::exceptional_mutual_info(x, ExceptionalMomentum(1, 2)) ==
              doctest::Approx(mcl12).epsilon(1e-12));
    }
    // Composition consistency: the closed universal/exceptional MI
    // equals H_sub(x) + H_sub(1-x) - H_total.
    for (double x : {0.2, 0.5, 0.7}) {
        CHECK(boson::universal_sub_entropy(300, x) + boson::universal_sub_entropy(300, 1 - x) -
                  boson::universal_total_entropy(300) ==
              doctest::Approx(boson::universal_mutual_info(x)).epsilon(1e-11));
        const ExceptionalMomentum exc(1, 3);
        CHECK(boson::exceptional_sub_entropy(300, x, exc) +
                  boson::exceptional_sub_entropy(300, 1 - x, exc) -
                  boson::exceptional_total_entropy(300, exc) ==
              doctest::Approx(boson::exceptional_mutual_info(x, exc)).epsilon(1e-11));
    }
}

TEST_CASE("oracle equivalence for all pairs at L <= 10") {
    for (std::int64_t L = 3; L <= 10; ++L)
        for (std::int64_t k1 = 0; k1 < L; ++k1)
            for (std::int64_t k2 = 0; k2 < L; ++k2) {
                if ((k1 - k2) % L == 0) continue;
                check_total_vs_oracle(L, k1, k2, 1e-12);
            }
}

TEST_CASE("subsystem table equals the marginalized total table") {
    for (std::int64_t L : {5, 8, 10})
        for (std::int64_t ell = 1; ell < L; ++ell)
            for (std::int64_t k12 = 1; k12 <= L / 2; ++k12) {
                const auto marg =
                    oracle::marginalize(oracle::boson_k1k2_probs(L, k12, 0), ell);
                const auto table =
                    boson::k1k2_sub_table(ChainGeometry(L, ell), MomentumPair(k12, 0, L));
                CHECK(std::abs(table.p0 - marg.p0) < 1e-12);
                for (std::int64_t j = 1; j <= ell; ++j)
                    CHECK(std::abs(table.singles[static_cast<std::size_t>(j - 1)] -
                                   marg.singles[static_cast<std::size_t>(j - 1)]) < 1e-12);
            }
}

TEST_CASE("k12 sign and period symmetry") {
    for (std::int64_t L : {7, 12})
        for (std::int64_t k = 1; k < L; ++k) {
            const auto a = boson::k1k2_total_table(L, MomentumPair(k, 0, L));
            const auto b = boson::k1k2_total_table(L, MomentumPair(0, k, L));   // -k12
            const auto c = boson::k1k2_total_table(L, MomentumPair(k + L, 0, L));  // +L
            for (std::size_t i = 0; i < a.pairs.size(); ++i) {
                CHECK(a.pairs[i].probability == doctest::Approx(b.pairs[i].probability));
                CHECK(a.pairs[i].probability == doctest::Approx(c.pairs[i].probability));
            }
        }
}

TEST_CASE("exceptional approaches universal as n grows") {
    const std::int64_t L = 840;
    CHECK(std::abs(boson::exceptional_total_entropy(L, ExceptionalMomentum(1, 10000)) -
                   boson::universal_total_entropy(L)) < 1e-3);
    CHECK(std::abs(boson::exceptional_sub_entropy(L, 0.5, ExceptionalMomentum(1, 10000)) -
                   boson::universal_sub_entropy(L, 0.5)) < 1e-3);
    CHECK(std::abs(boson::exceptional_mutual_info(0.5, ExceptionalMomentum(1, 10000)) -
                   boson::universal_mutual_info(0.5)) < 1e-3);
}

TEST_CASE("prime L stays near universal for every k12") {
    const std::int64_t L = 101;
    for (std::int64_t k = 1; k <= L / 2; ++k) {
        const double exact =
            boson::k1k2_total_entropy(L, MomentumPair::from_difference(k, L), EvalMode::exact);
        CHECK(std::abs(exact - boson::universal_total_entropy(L)) <
              5.0 * std::log(static_cast<double>(L)) / static_cast<double>(L));
    }
}

}  // TEST_SUITE
