#include <doctest.h>

#include <cmath>
#include <random>

#include "tricv/state.hpp"

using namespace tricv;

TEST_CASE("photon_numbers") {
    SUBCASE("vacuum at t = 0") {
        const auto p = photon_numbers({1.0, std::sqrt(2.0), 0.0});
        CHECK(p.n_b == 0.0);
        CHECK(p.n_c == 0.0);
    }
    SUBCASE("Omega t = pi") {
        const CouplingParams cp{1.0, std::sqrt(2.0), M_PI}; // Omega = 1
        const auto p = photon_numbers(cp);
        CHECK(p.n_c == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(p.n_b == doctest::Approx(4.0 * 1.0 * 2.0).epsilon(1e-10));
    }
    SUBCASE("Omega t = pi/2") {
        const auto p = photon_numbers({1.0, std::sqrt(2.0), M_PI / 2.0});
        CHECK(p.n_c == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p.n_b == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(p.n_a() == doctest::Approx(p.n_b + p.n_c)); // K(t) = 0
    }
    SUBCASE("hyperbolic regime rejected") {
        CHECK_THROWS_AS(photon_numbers({2.0, 1.0, 0.3}), std::invalid_argument);
        CHECK_THROWS_AS(photon_numbers({1.0, 1.0, 0.3}), std::invalid_argument);
    }
    SUBCASE("periodic in t with period 2 pi / Omega") {
        const double period = 2.0 * M_PI;
        for (double t = 0.1; t < 6.0; t += 0.7) {
            const auto p0 = photon_numbers({1.0, std::sqrt(2.0), t});
            const auto p1 = photon_numbers({1.0, std::sqrt(2.0), t + period});
            CHECK(p0.n_b == doctest::Approx(p1.n_b).epsilon(1e-10));
            CHECK(p0.n_c == doctest::Approx(p1.n_c).epsilon(1e-10));
        }
    }
    SUBCASE("coupling phases are ignored") {
        const auto p0 = photon_numbers({1.0, std::sqrt(2.0), 0.8});
        const auto p1 = photon_numbers({-1.0, -std::sqrt(2.0), 0.8});
        CHECK(p0.n_b == p1.n_b);
        CHECK(p0.n_c == p1.n_c);
    }
}

TEST_CASE("build_cm block structure") {
    SUBCASE("vacuum") {
        const CovMat sigma = build_cm({0.0, 0.0});
        CHECK((sigma.entries() - 0.5 * Eigen::MatrixXd::Identity(6, 6)).norm() == 0.0);
    }
    SUBCASE("explicit blocks at (1, 0.5)") {
        const CovMat sigma = build_cm({1.0, 0.5});
        CHECK(sigma(0, 0) == doctest::Approx(2.0));
        CHECK(sigma(2, 2) == doctest::Approx(1.5));
        CHECK(sigma(4, 4) == doctest::Approx(1.0));
        CHECK(sigma(0, 2) == doctest::Approx(std::sqrt(2.5)));
        CHECK(sigma(1, 3) == doctest::Approx(-std::sqrt(2.5)));
        CHECK(sigma(0, 4) == doctest::Approx(std::sqrt(1.25)));
        CHECK(sigma(1, 5) == doctest::Approx(-std::sqrt(1.25)));
        CHECK(sigma(2, 4) == doctest::Approx(std::sqrt(0.5)));
        CHECK(sigma(3, 5) == doctest::Approx(std::sqrt(0.5)));
        CHECK(sigma(0, 1) == 0.0);
    }
    SUBCASE("negative photon numbers rejected") {
        CHECK_THROWS_AS(build_cm({-0.1, 0.0}), std::invalid_argument);
    }
}

TEST_CASE("reduce matches partial_trace and the standard-form signatures") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> unif(0.0, 5.0);
    for (int i = 0; i < 30; ++i) {
        const TripartiteParams p{unif(rng), unif(rng)};
        const CovMat sigma = build_cm(p);
        for (OrderedPair pr : kAllPairs) {
            const CovMat direct = reduce(p, pr);
            const CovMat traced =
                partial_trace(sigma, {pair_first(pr), pair_second(pr)});
            CHECK((direct.entries() - traced.entries()).norm() == 0.0);
        }
        const CovMat ab = reduce(p, OrderedPair::AB);
        CHECK(ab(0, 2) == doctest::Approx(-ab(1, 3)));
        const CovMat bc = reduce(p, OrderedPair::BC);
        CHECK(bc(0, 2) == doctest::Approx(bc(1, 3)));
    }

    const CovMat ab = reduce({1.0, 0.5}, OrderedPair::AB);
    CHECK(ab(0, 0) == doctest::Approx(2.0));
    CHECK(ab(2, 2) == doctest::Approx(1.5));
    CHECK(ab(0, 2) == doctest::Approx(std::sqrt(2.5)));
    const CovMat bc = reduce({1.0, 0.5}, OrderedPair::BC);
    CHECK(bc(0, 0) == doctest::Approx(1.5));
    CHECK(bc(2, 2) == doctest::Approx(1.0));
    CHECK(bc(0, 2) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("reduction_params") {
    const TripartiteParams p{1.0, 0.5};
    SUBCASE("AB is a squeezed thermal state") {
        const auto rp = reduction_params(p, OrderedPair::AB);
        CHECK(rp.kind == ReductionKind::STS);
        CHECK(std::sinh(rp.squeeze_r) * std::sinh(rp.squeeze_r) ==
              doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(rp.thermal_n == doctest::Approx(0.5));
    }
    SUBCASE("BC is a mixed thermal state") {
        const auto rp = reduction_params(p, OrderedPair::BC);
        CHECK(rp.kind == ReductionKind::MTS);
        const double c = std::cos(rp.mix_phi);
        CHECK(c * c == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(rp.thermal_n == doctest::Approx(1.5));
    }
    SUBCASE("balanced mixing at N_B = N_C") {
        const auto rp = reduction_params({1.0, 1.0}, OrderedPair::BC);
        CHECK(rp.mix_phi == doctest::Approx(M_PI / 4.0).epsilon(1e-12));
    }
    SUBCASE("MTS angle undefined on vacuum") {
        CHECK_THROWS_AS(reduction_params({0.0, 0.0}, OrderedPair::BC),
                        std::invalid_argument);
    }
}

// Rebuilding the AB reduction from its STS parameters: apply the two-mode
// squeezing symplectic to a thermal (x) vacuum CM and compare entry-wise.
TEST_CASE("STS reconstruction reproduces the AB reduction") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> unif(0.0, 4.0);
    for (int i = 0; i < 20; ++i) {
        const TripartiteParams p{unif(rng), unif(rng)};
        const auto rp = reduction_params(p, OrderedPair::AB);
        const double ch = std::cosh(rp.squeeze_r);
        const double sh = std::sinh(rp.squeeze_r);

        Eigen::Matrix4d squeeze = Eigen::Matrix4d::Zero();
        squeeze.block<2, 2>(0, 0) = ch * Eigen::Matrix2d::Identity();
        squeeze.block<2, 2>(2, 2) = ch * Eigen::Matrix2d::Identity();
        Eigen::Matrix2d pz = Eigen::Matrix2d::Identity();
        pz(1, 1) = -1.0;
        squeeze.block<2, 2>(0, 2) = sh * pz;
        squeeze.block<2, 2>(2, 0) = sh * pz;

        Eigen::Matrix4d seed = 0.5 * Eigen::Matrix4d::Identity();
        seed(0, 0) = seed(1, 1) = rp.thermal_n + 0.5;
        const Eigen::Matrix4d rebuilt = squeeze * seed * squeeze.transpose();

        const CovMat expected = reduce(p, OrderedPair::AB);
        CHECK((rebuilt - expected.entries()).cwiseAbs().maxCoeff() <= 1e-10);
    }
}
