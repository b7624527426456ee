#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tricv/covmat.hpp"
#include "tricv/state.hpp"

using namespace tricv;

TEST_CASE("entropy_fn boundary and frozen values") {
    CHECK(entropy_fn(0.5) == 0.0);
    // values frozen from the thermal-series oracle with N = x - 1/2
    CHECK(entropy_fn(2.0) == doctest::Approx(1.6825291675).epsilon(1e-9));
    CHECK(entropy_fn(1.0) == doctest::Approx(0.9547712524).epsilon(1e-9));
    // round-off below the boundary clamps, deeper violations throw
    CHECK(entropy_fn(0.5 - 1e-10) == 0.0);
    CHECK_THROWS_AS((void)entropy_fn(0.4), std::domain_error);
}

TEST_CASE("entropy_fn agrees with the thermal-series oracle") {
    for (double n = 0.0; n <= 10.0; n += 0.37)
        CHECK(entropy_fn(n + 0.5) ==
              doctest::Approx(oracles::thermal_series_entropy(n)).epsilon(1e-8));
}

TEST_CASE("entropy_fn is strictly increasing above the boundary") {
    double prev = entropy_fn(0.5);
    for (double x = 0.51; x < 20.0; x += 0.13) {
        const double cur = entropy_fn(x);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("CovMat validation") {
    Eigen::MatrixXd bad = 0.5 * Eigen::MatrixXd::Identity(2, 2);
    bad(0, 1) = 1e-6; // asymmetric
    CHECK_THROWS_AS(CovMat(1, bad), std::invalid_argument);
    Eigen::MatrixXd low = 0.3 * Eigen::MatrixXd::Identity(2, 2);
    CHECK_THROWS_AS(CovMat(1, low), std::invalid_argument);
    CHECK_THROWS_AS(CovMat(2, Eigen::MatrixXd::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("partial_trace") {
    const CovMat sigma = build_cm({1.0, 0.5});

    SUBCASE("keep mode A gives the thermal diagonal block") {
        const CovMat a = partial_trace(sigma, {Mode::A});
        CHECK(a(0, 0) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(a(1, 1) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(a(0, 1) == doctest::Approx(0.0));
    }
    SUBCASE("vacuum reductions are vacuum") {
        const CovMat bc = partial_trace(build_cm({0.0, 0.0}), {Mode::B, Mode::C});
        CHECK((bc.entries() - 0.5 * Eigen::MatrixXd::Identity(4, 4)).norm() == 0.0);
    }
    SUBCASE("keeping all modes is the identity") {
        const CovMat all = partial_trace(sigma, {Mode::A, Mode::B, Mode::C});
        CHECK((all.entries() - sigma.entries()).norm() == 0.0);
    }
    SUBCASE("errors") {
        const CovMat two = partial_trace(sigma, {Mode::A, Mode::B});
        CHECK_THROWS_AS(partial_trace(two, {Mode::C}), std::invalid_argument);
        CHECK_THROWS_AS(partial_trace(sigma, {Mode::A, Mode::A}), std::invalid_argument);
        CHECK_THROWS_AS(partial_trace(sigma, {}), std::invalid_argument);
    }
}

TEST_CASE("two_mode_invariants") {
    SUBCASE("AB reduction") {
        const auto inv = two_mode_invariants(reduce({1.0, 0.5}, OrderedPair::AB));
        CHECK(inv.i_h == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(inv.i_k == doctest::Approx(2.25).epsilon(1e-12));
        CHECK(inv.i_hk == doctest::Approx(-2.5).epsilon(1e-12));
        CHECK(inv.j_hk > 0.0);
    }
    SUBCASE("vacuum") {
        const auto inv = two_mode_invariants(CovMat::vacuum(2));
        CHECK(inv.i_h == doctest::Approx(0.25));
        CHECK(inv.i_k == doctest::Approx(0.25));
        CHECK(inv.i_hk == doctest::Approx(0.0));
        CHECK(inv.j_hk == doctest::Approx(1.0 / 16.0));
    }
    SUBCASE("BC off-diagonal determinant carries a positive sign") {
        const auto inv = two_mode_invariants(reduce({1.0, 1.0}, OrderedPair::BC));
        CHECK(inv.i_hk == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("standard-form recomputation") {
        const CovMat cm = reduce({2.3, 0.7}, OrderedPair::AB);
        const auto inv = two_mode_invariants(cm);
        const double a = cm(0, 0), b = cm(2, 2), c1 = cm(0, 2), c2 = cm(1, 3);
        CHECK(inv.i_h == doctest::Approx(a * a).epsilon(1e-10));
        CHECK(inv.i_k == doctest::Approx(b * b).epsilon(1e-10));
        CHECK(inv.i_hk == doctest::Approx(c1 * c2).epsilon(1e-10));
    }
}

TEST_CASE("symplectic_spectrum") {
    SUBCASE("pure-state reduction structure") {
        const auto sp = symplectic_spectrum(reduce({1.0, 0.5}, OrderedPair::AB));
        CHECK(sp.lambda_minus == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(sp.lambda_plus == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("vacuum") {
        const auto sp = symplectic_spectrum(CovMat::vacuum(2));
        CHECK(sp.lambda_minus == doctest::Approx(0.5));
        CHECK(sp.lambda_plus == doctest::Approx(0.5));
        CHECK(sp.lambda_tilde_minus == doctest::Approx(0.5));
    }
    SUBCASE("BC reduction stays PPT") {
        const auto sp = symplectic_spectrum(reduce({1.0, 0.5}, OrderedPair::BC));
        CHECK(sp.lambda_tilde_minus >= 0.5 - 1e-12);
    }
}

TEST_CASE("entropies of reductions") {
    CHECK(two_mode_entropy(reduce({1.0, 0.5}, OrderedPair::AB)) ==
          doctest::Approx(0.9547712524).epsilon(1e-9));
    CHECK(two_mode_entropy(reduce({1.0, 0.5}, OrderedPair::BC)) ==
          doctest::Approx(1.6825291675).epsilon(1e-9));
    CHECK(two_mode_entropy(CovMat::vacuum(2)) == doctest::Approx(0.0));

    CHECK(single_mode_entropy(CovMat(1, 2.0 * Eigen::MatrixXd::Identity(2, 2))) ==
          doctest::Approx(1.6825291675).epsilon(1e-9));
    CHECK(single_mode_entropy(CovMat::vacuum(1)) == 0.0);
    CHECK(single_mode_entropy(CovMat(1, Eigen::MatrixXd::Identity(2, 2))) ==
          doctest::Approx(0.9547712524).epsilon(1e-9));
}

TEST_CASE("is_entangled pattern") {
    CHECK(is_entangled(reduce({1.0, 0.5}, OrderedPair::AB)));
    CHECK(is_entangled(reduce({1.0, 0.5}, OrderedPair::AC)));
    CHECK_FALSE(is_entangled(reduce({1.0, 0.5}, OrderedPair::BC)));
    CHECK_FALSE(is_entangled(reduce({3.0, 0.2}, OrderedPair::BC)));
    CHECK_FALSE(is_entangled(CovMat::vacuum(2)));
}

TEST_CASE("property grid: spectrum, entropies and PT eigenvalues") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(1e-3, 5.0);
    for (int i = 0; i < 100; ++i) {
        const TripartiteParams p{unif(rng), unif(rng)};
        const double ns[3] = {p.n_a(), p.n_b, p.n_c};
        for (OrderedPair up : {OrderedPair::AB, OrderedPair::AC, OrderedPair::BC}) {
            const CovMat two = reduce(p, up);
            const auto sp = symplectic_spectrum(two);
            const double nj = ns[static_cast<int>(pair_remaining(up))];
            CHECK(sp.lambda_minus == doctest::Approx(0.5).epsilon(1e-10));
            CHECK(sp.lambda_plus == doctest::Approx(0.5 + nj).epsilon(1e-10));
            CHECK(two_mode_entropy(two) ==
                  doctest::Approx(entropy_fn(nj + 0.5)).epsilon(1e-10));
            if (up == OrderedPair::BC)
                CHECK(sp.lambda_tilde_minus >= 0.5 - 1e-12);
            else
                CHECK(sp.lambda_tilde_minus <= 0.5 + 1e-12);
        }
        // generic formula vs the closed forms in the photon numbers
        CHECK(symplectic_spectrum(reduce(p, OrderedPair::AB)).lambda_tilde_minus ==
              doctest::Approx(oracles::lambda_tilde_ab(p.n_b, p.n_c)).epsilon(1e-10));
        CHECK(symplectic_spectrum(reduce(p, OrderedPair::AC)).lambda_tilde_minus ==
              doctest::Approx(oracles::lambda_tilde_ac(p.n_b, p.n_c)).epsilon(1e-10));
        CHECK(symplectic_spectrum(reduce(p, OrderedPair::BC)).lambda_tilde_minus ==
              doctest::Approx(oracles::lambda_tilde_bc(p.n_b, p.n_c)).epsilon(1e-10));
    }
}

TEST_CASE("global purity of the tripartite CM") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> unif(0.0, 5.0);
    for (int i = 0; i < 20; ++i) {
        const CovMat sigma = build_cm({unif(rng), unif(rng)});
        CHECK(sigma.entries().determinant() ==
              doctest::Approx(std::pow(0.5, 6)).epsilon(1e-10));
        for (double nu : sigma.symplectic_eigenvalues())
            CHECK(nu == doctest::Approx(0.5).epsilon(1e-9));
    }
}
