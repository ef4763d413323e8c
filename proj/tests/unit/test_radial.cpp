#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "annspec/radial.hpp"

using namespace annspec;

namespace {
// Frozen before the main build from an independent adaptive-step
// shooting + bisection oracle (tolerances 1e-12/1e-14); agreement here
// certifies the fixed-step RK4 pipeline end to end.
constexpr double kMu1Euclid2_12 = 0.4587840638544155;
constexpr double kTau2Euclid2_12 = 10.218113344667564;
constexpr double kMu1Euclid3_12 = 0.8466467420248991;
constexpr double kMu1Euclid3_0515 = 1.7482045481099344;
constexpr double kMu1Rank1k2n2_12 = 0.293386830964834;
constexpr double kMu1Rank1k1n3_0515 = 1.0997468777387471;
}  // namespace

TEST_CASE("steklov_concentric_mode closed forms") {
    auto m0 = radial::steklov_concentric_mode(3, 1.0, 2.0, 0);
    CHECK(m0.tau == doctest::Approx(0.5).epsilon(1e-14));
    auto m0_2d = radial::steklov_concentric_mode(2, 1.0, std::exp(1.0), 0);
    CHECK(m0_2d.tau == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    auto m1 = radial::steklov_concentric_mode(3, 1.0, 2.0, 1);
    CHECK(m1.tau == doctest::Approx(5.0 / 7.0).epsilon(1e-14));

    // Eigenfunctions vanish at R1 and are positive/increasing beyond it.
    for (const auto& solved : {m0, m0_2d, m1}) {
        CHECK(solved.mode.values.front() == doctest::Approx(0.0).epsilon(1e-14));
        for (std::size_t j = 1; j < solved.mode.values.size(); ++j) {
            CHECK(solved.mode.values[j] > 0.0);
            CHECK(solved.mode.dvalues[j] > 0.0);
        }
    }
    CHECK_THROWS_AS(radial::steklov_concentric_mode(3, 2.0, 1.0, 0),
                    std::domain_error);
}

TEST_CASE("steklov shooting matches closed forms") {
    for (unsigned n = 2; n <= 7; ++n) {
        for (unsigned i = 0; i <= 8; ++i) {
            double closed = radial::steklov_concentric_mode(n, 1.0, 2.0, i).tau;
            double shot = radial::steklov_concentric_shoot(n, 1.0, 2.0, i);
            CHECK(std::abs(shot - closed) <= 1e-8 * closed);
        }
    }
}

TEST_CASE("steklov eigenvalues strictly increasing in the mode index") {
    for (unsigned n : {2u, 4u, 6u}) {
        double prev = radial::steklov_concentric_mode(n, 0.5, 1.7, 0).tau;
        for (unsigned i = 1; i <= 8; ++i) {
            double tau = radial::steklov_concentric_mode(n, 0.5, 1.7, i).tau;
            CHECK(tau > prev);
            prev = tau;
        }
    }
}

TEST_CASE("wronskian_monotonicity") {
    for (auto [n, i] : {std::pair<unsigned, unsigned>{3, 0},
                        std::pair<unsigned, unsigned>{5, 3},
                        std::pair<unsigned, unsigned>{2, 1}}) {
        auto report = radial::wronskian_monotonicity(n, 1.0, 2.0, i);
        CHECK(report.pass);
    }
}

TEST_CASE("RadialEigenSolution interpolation consistency") {
    auto solved = radial::steklov_concentric_mode(3, 1.0, 2.0, 0);
    // f0 = 1 - 1/r.
    for (double r : {1.0, 1.21, 1.5, 1.97, 2.0}) {
        CHECK(solved.mode.value_at(r) ==
              doctest::Approx(1.0 - 1.0 / r).epsilon(1e-10));
        CHECK(solved.mode.derivative_at(r) ==
              doctest::Approx(1.0 / (r * r)).epsilon(1e-8));
    }
}

TEST_CASE("neumann_radial_mu1 frozen values") {
    auto e2 = radial::neumann_radial_mu1(SpaceKind::euclidean(2), {1.0, 2.0});
    CHECK(e2.eigenvalue == doctest::Approx(kMu1Euclid2_12).epsilon(1e-9));
    CHECK(e2.fn.residual < 1e-10);

    auto e3 = radial::neumann_radial_mu1(SpaceKind::euclidean(3), {1.0, 2.0});
    CHECK(e3.eigenvalue == doctest::Approx(kMu1Euclid3_12).epsilon(1e-9));
    auto e3b =
        radial::neumann_radial_mu1(SpaceKind::euclidean(3), {0.5, 1.5});
    CHECK(e3b.eigenvalue == doctest::Approx(kMu1Euclid3_0515).epsilon(1e-9));

    auto r22 = radial::neumann_radial_mu1(SpaceKind::rank1(2, 2), {1.0, 2.0});
    CHECK(r22.eigenvalue == doctest::Approx(kMu1Rank1k2n2_12).epsilon(1e-9));
    auto r13 =
        radial::neumann_radial_mu1(SpaceKind::rank1(1, 3), {0.5, 1.5});
    CHECK(r13.eigenvalue == doctest::Approx(kMu1Rank1k1n3_0515).epsilon(1e-9));
}

TEST_CASE("neumann_radial_mu1 Euclidean dilation scaling") {
    for (unsigned n : {2u, 3u}) {
        double base =
            radial::neumann_radial_mu1(SpaceKind::euclidean(n), {1.0, 2.0})
                .eigenvalue;
        double scaled =
            radial::neumann_radial_mu1(SpaceKind::euclidean(n), {2.0, 4.0})
                .eigenvalue;
        CHECK(scaled == doctest::Approx(base / 4.0).epsilon(1e-8));
    }
}

TEST_CASE("neumann_radial_mu1 solution shape") {
    for (const SpaceKind& space :
         {SpaceKind::euclidean(2), SpaceKind::rank1(2, 2)}) {
        auto mu1 = radial::neumann_radial_mu1(space, {1.0, 2.0});
        CHECK(mu1.eigenvalue > lambda1_sphere(space, 2.0));
        CHECK(mu1.fn.values.front() == doctest::Approx(1.0));
        CHECK(std::abs(mu1.fn.dvalues.front()) < 1e-12);
        CHECK(std::abs(mu1.fn.dvalues.back()) < 1e-8);
        for (std::size_t j = 0; j < mu1.fn.values.size(); ++j)
            CHECK(mu1.fn.values[j] > 0.0);
        for (std::size_t j = 1; j + 1 < mu1.fn.values.size(); ++j)
            CHECK(mu1.fn.dvalues[j] > 0.0);
    }
}

TEST_CASE("neumann_radial_mu1 stable under step refinement") {
    auto coarse = radial::neumann_radial_mu1(SpaceKind::euclidean(3),
                                             {1.0, 2.0}, 1e-12, 4096);
    auto fine = radial::neumann_radial_mu1(SpaceKind::euclidean(3), {1.0, 2.0},
                                           1e-12, 8192);
    CHECK(std::abs(coarse.eigenvalue - fine.eigenvalue) < 1e-11);
}

TEST_CASE("neumann_radial_tau2") {
    auto tau2 = radial::neumann_radial_tau2(SpaceKind::euclidean(2), {1.0, 2.0});
    CHECK(tau2.eigenvalue == doctest::Approx(kTau2Euclid2_12).epsilon(1e-9));
    CHECK(tau2.fn.node_locations.size() == 1);
    double node = tau2.fn.node_locations.front();
    CHECK(node > 1.0);
    CHECK(node < 2.0);

    // Scaling law.
    auto scaled =
        radial::neumann_radial_tau2(SpaceKind::euclidean(2), {2.0, 4.0});
    CHECK(scaled.eigenvalue ==
          doctest::Approx(tau2.eigenvalue / 4.0).epsilon(1e-8));

    // tau2 > mu1 (the dichotomy resolution).
    auto mu1 = radial::neumann_radial_mu1(SpaceKind::euclidean(2), {1.0, 2.0});
    CHECK(tau2.eigenvalue > mu1.eigenvalue);
}

TEST_CASE("neumann certificates across spaces and shells") {
    for (const SpaceKind& space :
         {SpaceKind::euclidean(2), SpaceKind::euclidean(3),
          SpaceKind::rank1(1, 3), SpaceKind::rank1(2, 2)}) {
        for (auto [r1, r2] : {std::pair<double, double>{1.0, 2.0},
                              std::pair<double, double>{0.5, 1.5}}) {
            CAPTURE(space.label());
            CAPTURE(r1);
            AnnulusSpec annulus{r1, r2};
            auto mu1 = radial::neumann_radial_mu1(space, annulus);
            auto tau2 = radial::neumann_radial_tau2(space, annulus);
            auto certs =
                radial::neumann_h_certificate(space, annulus, mu1, tau2);
            CHECK(certs.h_nonpositive.pass);
            CHECK(certs.h_equation_residual.pass);
            CHECK(certs.integral_identity.pass);
            CHECK(certs.tau2_exceeds_mu1.pass);
            CHECK(radial::psi_b_certificate(space, annulus, mu1).pass);
            CHECK(radial::b_function_profile(space, annulus, mu1).pass);
        }
    }
}

TEST_CASE("psi crossing matches the analytic Euclidean solution") {
    // For Euclidean spaces lambda1(S(b)) = mu1 has the closed solution
    // b = sqrt((n-1)/mu1).
    SpaceKind space = SpaceKind::euclidean(3);
    AnnulusSpec annulus{1.0, 3.0};
    auto mu1 = radial::neumann_radial_mu1(space, annulus);
    double b = std::sqrt(2.0 / mu1.eigenvalue);
    CHECK(b > 1.0);
    CHECK(b < 3.0);
    CHECK(radial::psi_b_certificate(space, annulus, mu1).pass);
}

TEST_CASE("rk4 shooting is fourth order") {
    // Error against the closed form must drop ~16x when steps double.
    double closed = radial::steklov_concentric_mode(4, 1.0, 2.0, 2).tau;
    double err_coarse =
        std::abs(radial::steklov_concentric_shoot(4, 1.0, 2.0, 2, 128) - closed);
    double err_fine =
        std::abs(radial::steklov_concentric_shoot(4, 1.0, 2.0, 2, 256) - closed);
    double order = std::log2(err_coarse / err_fine);
    CHECK(order > 3.9);
    CHECK(order < 4.5);
}
