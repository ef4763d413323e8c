#include <cmath>
#include <stdexcept>
#include <random>

#include <doctest.h>

#include "annspec/quadgeom.hpp"
#include "annspec/specfun.hpp"

using namespace annspec;

TEST_CASE("gauss_legendre basic rules") {
    auto one = quadgeom::gauss_legendre(1);
    REQUIRE(one.order() == 1);
    CHECK(one.nodes[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(one.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

    auto two = quadgeom::gauss_legendre(2);
    CHECK(two.integrate(-1.0, 1.0, [](double s) { return s * s; }) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-14));

    auto eight = quadgeom::gauss_legendre(8);
    CHECK(eight.integrate(-1.0, 1.0, [](double s) {
        double w = 1.0 - s * s;
        return w * w;
    }) == doctest::Approx(16.0 / 15.0).epsilon(1e-14));

    CHECK_THROWS_AS(quadgeom::gauss_legendre(0), std::domain_error);
}

TEST_CASE("gauss_legendre rule invariants") {
    for (std::size_t order : {3u, 16u, 64u, 96u}) {
        auto rule = quadgeom::gauss_legendre(order);
        REQUIRE(rule.order() == order);
        double wsum = 0.0;
        for (std::size_t j = 0; j < order; ++j) {
            CHECK(rule.weights[j] > 0.0);
            wsum += rule.weights[j];
            if (j > 0) CHECK(rule.nodes[j] > rule.nodes[j - 1]);
            CHECK(rule.nodes[j] > -1.0);
            CHECK(rule.nodes[j] < 1.0);
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-13));
        // Exact for degree 2*order - 1.
        double degree = double(2 * order - 1);
        double integral = rule.integrate(-1.0, 1.0, [degree](double s) {
            return std::pow(s, degree) + std::pow(s, degree - 1.0);
        });
        CHECK(integral == doctest::Approx(2.0 / degree).epsilon(1e-12));
    }
}

TEST_CASE("OffsetAnnulusSpec validation") {
    CHECK_NOTHROW((quadgeom::OffsetAnnulusSpec{3, 1.0, 2.0, 0.5}.validate()));
    CHECK_THROWS_AS((quadgeom::OffsetAnnulusSpec{1, 1.0, 2.0, 0.0}.validate()),
                    std::domain_error);
    CHECK_THROWS_AS((quadgeom::OffsetAnnulusSpec{3, 2.0, 1.0, 0.0}.validate()),
                    std::domain_error);
    CHECK_THROWS_AS((quadgeom::OffsetAnnulusSpec{3, 1.0, 2.0, 1.0}.validate()),
                    std::domain_error);
    CHECK_THROWS_AS((quadgeom::OffsetAnnulusSpec{3, 1.0, 2.0, -0.1}.validate()),
                    std::domain_error);
}

TEST_CASE("unit_sphere_area") {
    CHECK(quadgeom::unit_sphere_area(2) ==
          doctest::Approx(2.0 * M_PI).epsilon(1e-14));
    CHECK(quadgeom::unit_sphere_area(3) ==
          doctest::Approx(4.0 * M_PI).epsilon(1e-14));
    CHECK(quadgeom::unit_sphere_area(4) ==
          doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-14));
}

TEST_CASE("offset_kernel_integral anchors") {
    auto rule = quadgeom::gauss_legendre(64);

    // x = 0: kernel constant, integral = Wallis(w)/R2^{2p}.
    for (double w : {0.0, 0.5, 1.0, 2.5}) {
        double wallis = rule.integrate(0.0, M_PI, [w](double theta) {
            return std::pow(std::sin(theta), 2.0 * w + 1.0);
        });
        double value = quadgeom::offset_kernel_integral(w, 1.75, 2.0, 0.0, rule);
        CHECK(value ==
              doctest::Approx(wallis / std::pow(2.0, 3.5)).epsilon(1e-12));
    }

    // Half-integer identity at k=2 (x-independence).
    for (double x : {0.0, 0.1, 0.3}) {
        CHECK(quadgeom::offset_kernel_integral(1.0, 1.5, 1.0, x, rule) ==
              doctest::Approx(4.0 / 3.0).epsilon(1e-10));
    }

    // Closed-form logarithm oracle for w=0, p=1.
    double R2 = 2.0, x = 0.5;
    CHECK(quadgeom::offset_kernel_integral(0.0, 1.0, R2, x, rule) ==
          doctest::Approx(std::log((R2 + x) / (R2 - x)) / (R2 * x))
              .epsilon(1e-12));

    CHECK_THROWS_AS(quadgeom::offset_kernel_integral(0.0, 1.0, 2.0, 2.0, rule),
                    std::domain_error);
    CHECK_THROWS_AS(quadgeom::offset_kernel_integral(-0.5, 1.0, 2.0, 0.0, rule),
                    std::domain_error);
}

TEST_CASE("offset_kernel_integral converges: order 64 vs 96") {
    auto r64 = quadgeom::gauss_legendre(64);
    auto r96 = quadgeom::gauss_legendre(96);
    for (double w : {0.0, 0.5, 1.5, 2.0}) {
        for (double p : {1.0, 2.5, 5.0}) {
            double a = quadgeom::offset_kernel_integral(w, p, 2.0, 0.7, r64);
            double b = quadgeom::offset_kernel_integral(w, p, 2.0, 0.7, r96);
            CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)));
        }
    }
}

TEST_CASE("boundary_energy_profile n=3 closed form") {
    auto rule = quadgeom::gauss_legendre(64);
    double R1 = 1.0, R2 = 2.0;
    // Expand the square; both cross and square kernel terms have
    // elementary antiderivatives for n = 3:
    //   int (A+Bs)^{-1/2} ds = 2/R2 (x-independent),
    //   int (A+Bs)^{-1}   ds = ln((R2+x)/(R2-x))/(R2 x).
    for (double x : {0.1, 0.5, 0.9}) {
        double expected = 2.0 / (R1 * R1) - (2.0 / R1) * (2.0 / R2) +
                          std::log((R2 + x) / (R2 - x)) / (R2 * x);
        CHECK(quadgeom::boundary_energy_profile(3, R1, R2, x, rule) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
    // x = 0 limit.
    double at_zero = quadgeom::boundary_energy_profile(3, R1, R2, 0.0, rule);
    CHECK(at_zero ==
          doctest::Approx(2.0 * std::pow(1.0 / R1 - 1.0 / R2, 2.0))
              .epsilon(1e-12));
    CHECK_THROWS_AS(quadgeom::boundary_energy_profile(2, R1, R2, 0.1, rule),
                    std::domain_error);
}

TEST_CASE("boundary_energy_profile monotone in the offset") {
    auto rule = quadgeom::gauss_legendre(64);
    for (unsigned n = 3; n <= 8; ++n) {
        double base = quadgeom::boundary_energy_profile(n, 1.0, 2.0, 0.0, rule);
        double prev = base;
        for (double x : {0.2, 0.4, 0.6, 0.8}) {
            double value =
                quadgeom::boundary_energy_profile(n, 1.0, 2.0, x, rule);
            CHECK(value > base);
            CHECK(value > prev);  // empirically strictly increasing
            prev = value;
        }
    }
}

TEST_CASE("eccentric_volume_integral trivial anchors") {
    auto rule = quadgeom::gauss_legendre(64);
    auto one = [](double) { return 1.0; };

    // Volume is translation invariant.
    for (unsigned n : {2u, 3u, 5u}) {
        double base = 0.0;
        for (double x : {0.0, 0.3, 0.7}) {
            quadgeom::OffsetAnnulusSpec spec{n, 1.0, 2.0, x};
            double vol = quadgeom::eccentric_volume_integral(spec, one, rule);
            if (x == 0.0) {
                base = vol;
                double exact = quadgeom::unit_sphere_area(n) / n *
                               (std::pow(2.0, double(n)) - 1.0);
                CHECK(vol == doctest::Approx(exact).epsilon(1e-11));
            } else {
                CHECK(vol == doctest::Approx(base).epsilon(1e-10));
            }
        }
    }

    // Concentric shell with f = r^2 in n = 3.
    quadgeom::OffsetAnnulusSpec shell{3, 1.0, 2.0, 0.0};
    CHECK(quadgeom::eccentric_volume_integral(
              shell, [](double r) { return r * r; }, rule) ==
          doctest::Approx(4.0 * M_PI * (32.0 - 1.0) / 5.0).epsilon(1e-12));
}

TEST_CASE("eccentric_volume_integral vs Monte-Carlo") {
    auto rule = quadgeom::gauss_legendre(64);
    quadgeom::OffsetAnnulusSpec spec{3, 1.0, 2.0, 0.4};
    auto grad_sq = [](double r) {
        double v = 1.0 / (r * r);
        return v * v;
    };
    double quad = quadgeom::eccentric_volume_integral(spec, grad_sq, rule);

    // Rejection sampling over the bounding box of the offset outer ball.
    std::mt19937_64 rng(20260824ULL);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const std::size_t total = 10'000'000;
    std::size_t inside = 0;
    double acc = 0.0;
    for (std::size_t s = 0; s < total; ++s) {
        double px = spec.x + 2.0 * uni(rng);
        double py = 2.0 * uni(rng);
        double pz = 2.0 * uni(rng);
        double dx = px - spec.x;
        if (dx * dx + py * py + pz * pz > 4.0) continue;
        double r2 = px * px + py * py + pz * pz;
        if (r2 <= 1.0) continue;
        ++inside;
        acc += grad_sq(std::sqrt(r2));
    }
    double box_volume = 64.0;
    double mc = acc * box_volume / double(total);
    (void)inside;
    CHECK(quad == doctest::Approx(mc).epsilon(2e-3));
}

TEST_CASE("eccentric_volume_integral gradient energy decreases with offset") {
    auto rule = quadgeom::gauss_legendre(64);
    for (unsigned n : {3u, 4u, 5u}) {
        auto grad_sq = [n](double r) {
            double v = (double(n) - 2.0) * std::pow(r, -(double(n) - 1.0));
            return v * v;
        };
        double base = quadgeom::eccentric_volume_integral(
            {n, 1.0, 2.0, 0.0}, grad_sq, rule);
        for (double x : {0.2, 0.5, 0.8}) {
            double offset_value = quadgeom::eccentric_volume_integral(
                {n, 1.0, 2.0, x}, grad_sq, rule);
            CHECK(offset_value < base);
        }
    }
}

TEST_CASE("eccentric_volume_integral flags non-finite integrands") {
    auto rule = quadgeom::gauss_legendre(16);
    quadgeom::OffsetAnnulusSpec spec{3, 1.0, 2.0, 0.3};
    auto bad = [](double r) { return 1.0 / (r - 1.5); };
    CHECK_THROWS_AS(quadgeom::eccentric_volume_integral(
                        spec, [](double) { return std::nan(""); }, rule),
                    std::runtime_error);
    (void)bad;
}

TEST_CASE("kernel integrals match their coefficient expansions for small x") {
    auto rule = quadgeom::gauss_legendre(64);
    using specfun::CoeffFamily;
    using specfun::CoeffMethod;
    const double R2 = 2.0, x = 0.15;  // x/R2 = 0.075
    for (unsigned k : {1u, 2u, 3u}) {
        double lhs =
            quadgeom::offset_kernel_integral(k - 1.0, 2.0 * k - 1.0, R2, x, rule);
        double sum = 0.0;
        for (unsigned t = 0; t <= 6; ++t)
            sum += specfun::series_coefficient(CoeffFamily::Alpha, k, t,
                                               CoeffMethod::ClosedForm) *
                   std::pow(x, 2.0 * t) / std::pow(R2, 2.0 * t + 4.0 * k - 2.0);
        CHECK(lhs == doctest::Approx(sum).epsilon(1e-8));
        if (k < 2) continue;
        double lhs_hat = quadgeom::offset_kernel_integral(
            (2.0 * k - 3.0) / 2.0, 2.0 * k - 2.0, R2, x, rule);
        double sum_hat = 0.0;
        for (unsigned t = 0; t <= 6; ++t)
            sum_hat += specfun::series_coefficient(CoeffFamily::AlphaHat, k, t,
                                                   CoeffMethod::ClosedForm) *
                       std::pow(x, 2.0 * t) /
                       std::pow(R2, 2.0 * t + 4.0 * k - 4.0);
        CHECK(lhs_hat == doctest::Approx(sum_hat).epsilon(1e-8));
    }
}
