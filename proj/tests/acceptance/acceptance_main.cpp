// Acceptance suite: one pass/fail line per criterion, exit nonzero if any
// criterion fails. argv[1] must be the path to the annspec CLI binary
// (used by criterion 10 for byte-stability of the CSV outputs).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "annspec/bounds.hpp"
#include "annspec/oracle2d.hpp"
#include "annspec/quadgeom.hpp"
#include "annspec/radial.hpp"
#include "annspec/spaces.hpp"
#include "annspec/specfun.hpp"

using namespace annspec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int id;
    std::string summary;
    bool pass = true;
    std::ostringstream detail;

    Criterion(int id, std::string summary) : id(id), summary(std::move(summary)) {}

    void require(bool condition, const std::string& what) {
        if (!condition) {
            pass = false;
            if (!detail.str().empty()) detail << "; ";
            detail << what;
        }
    }

    bool report() const {
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": "
                  << summary;
        if (!pass) std::cout << " [" << detail.str() << "]";
        std::cout << "\n";
        return pass;
    }
};

// --------------------------------------------------------------------------
// 1. Coefficient identities: finite sum vs closed form, beta vanishing.

bool criterion1() {
    Criterion c(1, "coefficient identities (finite sum vs closed form, "
                   "beta vanishing for t >= 1)");
    auto start = Clock::now();
    using specfun::CoeffFamily;
    using specfun::CoeffMethod;
    for (CoeffFamily family : {CoeffFamily::Alpha, CoeffFamily::Beta,
                               CoeffFamily::AlphaHat, CoeffFamily::BetaHat}) {
        const bool hatted = family == CoeffFamily::AlphaHat ||
                            family == CoeffFamily::BetaHat;
        const bool vanishing = family == CoeffFamily::Beta ||
                               family == CoeffFamily::BetaHat;
        for (unsigned k = hatted ? 2 : 1; k <= 5; ++k) {
            double t0 = 0.0;
            for (unsigned t = 0; t <= 10; ++t) {
                double fs = specfun::series_coefficient(family, k, t,
                                                        CoeffMethod::FiniteSum);
                double cf = specfun::series_coefficient(family, k, t,
                                                        CoeffMethod::ClosedForm);
                c.require(std::abs(fs - cf) <=
                              1e-10 * std::max(std::abs(cf), std::abs(t0)),
                          "finite sum vs closed form k=" + std::to_string(k) +
                              " t=" + std::to_string(t));
                if (t == 0) t0 = cf;
                if (vanishing && t >= 1)
                    c.require(std::abs(fs) <= 1e-9 * std::abs(t0),
                              "beta normalization k=" + std::to_string(k) +
                                  " t=" + std::to_string(t));
            }
        }
    }
    c.require(seconds_since(start) < 1.0, "runtime >= 1 s");
    return c.report();
}

// --------------------------------------------------------------------------
// 2/3. Kernel x-independence identities and inequalities on the shared grid.

bool criterion2() {
    Criterion c(2, "kernel x-independence identities on the (k, R2, x) grid");
    auto start = Clock::now();
    auto rule = quadgeom::gauss_legendre(64);
    using specfun::CoeffFamily;
    using specfun::CoeffMethod;
    int cases = 0;
    for (unsigned k : {2u, 3u, 4u}) {
        for (double R2 : {1.0, 2.0}) {
            const double R1 = 0.5 * R2;
            for (double x : {0.0, 0.1 * R2, 0.45 * R2, 0.8 * (R2 - R1)}) {
                double odd = quadgeom::offset_kernel_integral(
                    double(k) - 1.0, (2.0 * k - 1.0) / 2.0, R2, x, rule);
                double beta0 = specfun::series_coefficient(
                    CoeffFamily::Beta, k, 0, CoeffMethod::ClosedForm);
                double odd_rhs = beta0 / std::pow(R2, 2.0 * k - 1.0);
                c.require(std::abs(odd - odd_rhs) <= 1e-8 * std::abs(odd_rhs),
                          "odd identity k=" + std::to_string(k));

                double even = quadgeom::offset_kernel_integral(
                    (2.0 * k - 3.0) / 2.0, double(k) - 1.0, R2, x, rule);
                double betahat0 = specfun::series_coefficient(
                    CoeffFamily::BetaHat, k, 0, CoeffMethod::ClosedForm);
                double even_rhs = betahat0 / std::pow(R2, 2.0 * (k - 1.0));
                c.require(std::abs(even - even_rhs) <= 1e-8 * std::abs(even_rhs),
                          "even identity k=" + std::to_string(k));
                ++cases;
            }
        }
    }
    c.require(cases == 24, "case count != 24");
    c.require(seconds_since(start) < 1.0, "runtime >= 1 s");
    return c.report();
}

bool criterion3() {
    Criterion c(3, "kernel inequalities: LHS - RHS >= -1e-12, strict for x > 0");
    auto rule = quadgeom::gauss_legendre(64);
    using specfun::CoeffFamily;
    using specfun::CoeffMethod;
    for (unsigned k : {2u, 3u, 4u}) {
        for (double R2 : {1.0, 2.0}) {
            const double R1 = 0.5 * R2;
            for (double x : {0.0, 0.1 * R2, 0.45 * R2, 0.8 * (R2 - R1)}) {
                double odd = quadgeom::offset_kernel_integral(
                    double(k) - 1.0, 2.0 * k - 1.0, R2, x, rule);
                double alpha0 = specfun::series_coefficient(
                    CoeffFamily::Alpha, k, 0, CoeffMethod::ClosedForm);
                double odd_margin = odd - alpha0 / std::pow(R2, 4.0 * k - 2.0);
                c.require(odd_margin >= -1e-12,
                          "odd inequality k=" + std::to_string(k));
                if (x > 0.0)
                    c.require(odd_margin > 0.0,
                              "odd strict margin k=" + std::to_string(k));

                double even = quadgeom::offset_kernel_integral(
                    (2.0 * k - 3.0) / 2.0, 2.0 * k - 2.0, R2, x, rule);
                double alphahat0 = specfun::series_coefficient(
                    CoeffFamily::AlphaHat, k, 0, CoeffMethod::ClosedForm);
                double even_margin =
                    even - alphahat0 / std::pow(R2, 4.0 * k - 4.0);
                c.require(even_margin >= -1e-12,
                          "even inequality k=" + std::to_string(k));
                if (x > 0.0)
                    c.require(even_margin > 0.0,
                              "even strict margin k=" + std::to_string(k));
            }
        }
    }
    return c.report();
}

// --------------------------------------------------------------------------
// 4. Boundary-energy monotonicity I(x) >= I(0).

bool criterion4() {
    Criterion c(4, "boundary energy I(x) >= I(0) for n = 3..8");
    auto rule = quadgeom::gauss_legendre(64);
    const double R1 = 1.0, R2 = 2.0;
    for (unsigned n = 3; n <= 8; ++n) {
        double base = quadgeom::boundary_energy_profile(n, R1, R2, 0.0, rule);
        for (int j = 0; j < 10; ++j) {
            double x = 0.099 * j * (R2 - R1);
            double value = quadgeom::boundary_energy_profile(n, R1, R2, x, rule);
            c.require(value >= base - 1e-14,
                      "I(x) < I(0) at n=" + std::to_string(n));
            if (x > 0.0)
                c.require(value > base,
                          "margin not positive at n=" + std::to_string(n));
        }
    }
    return c.report();
}

// --------------------------------------------------------------------------
// 5. Steklov concentric spectrum: shooting vs closed form plus anchors.

bool criterion5() {
    Criterion c(5, "concentric spectrum: shooting vs closed form, ordering, "
                   "Wronskian, anchors");
    for (unsigned n = 2; n <= 7; ++n) {
        double prev = -1.0;
        for (unsigned i = 0; i <= 8; ++i) {
            double closed = radial::steklov_concentric_mode(n, 1.0, 2.0, i).tau;
            double shot = radial::steklov_concentric_shoot(n, 1.0, 2.0, i);
            c.require(std::abs(shot - closed) <= 1e-8 * closed,
                      "shooting n=" + std::to_string(n) + " i=" +
                          std::to_string(i));
            c.require(closed > prev,
                      "ordering n=" + std::to_string(n) + " i=" +
                          std::to_string(i));
            prev = closed;
            if (i < 8)
                c.require(radial::wronskian_monotonicity(n, 1.0, 2.0, i).pass,
                          "Wronskian n=" + std::to_string(n) + " i=" +
                              std::to_string(i));
        }
    }
    double anchor3 = radial::steklov_concentric_mode(3, 1.0, 2.0, 0).tau;
    c.require(std::abs(anchor3 - 0.5) <= 1e-10, "anchor tau0(3,1,2)");
    double anchor2 =
        radial::steklov_concentric_mode(2, 1.0, std::exp(1.0), 0).tau;
    c.require(std::abs(anchor2 - std::exp(-1.0)) <= 1e-10,
              "anchor tau0(2,1,e)");
    return c.report();
}

// --------------------------------------------------------------------------
// 6. n = 2 eccentric oracle sweep: DtN anchor, strict decrease, FEM agreement.

bool criterion6() {
    Criterion c(6, "n=2 offset sweep: DtN anchor, strict decrease, FEM "
                   "agreement within 1e-3");
    auto start = Clock::now();
    const double R1 = 1.0, R2 = 2.0;
    double tau0 = oracle2d::steklov_eccentric_tau1(R1, R2, 0.0);
    c.require(std::abs(tau0 - 1.0 / (2.0 * std::log(2.0))) <= 1e-8,
              "tau1(0) anchor");
    for (int j = 0; j <= 9; ++j) {
        double x = 0.1 * j;
        double dtn = oracle2d::steklov_eccentric_tau1(R1, R2, x);
        if (x > 0.0)
            c.require(dtn < tau0 - 1e-6, "decrease margin at x=" +
                                             std::to_string(x));
        auto profile = [R2, x](double th) {
            double cs = std::cos(th), sn = std::sin(th);
            return x * cs + std::sqrt(R2 * R2 - x * x * sn * sn);
        };
        double fem = oracle2d::fem_steklov_tau1(
            oracle2d::build_transfinite_mesh(R1, profile, 96, 192));
        c.require(std::abs(fem - dtn) <= 1e-3,
                  "FEM vs DtN at x=" + std::to_string(x));
    }
    c.require(seconds_since(start) < 120.0, "runtime >= 2 min");
    return c.report();
}

// --------------------------------------------------------------------------
// 7. Test-function bound chain for n = 3, 4, 5.

bool criterion7() {
    Criterion c(7, "bound chain n=3,4,5: quotient(0) = tau1, monotone links, "
                   "quotient(x) <= quotient(0)");
    auto rule = quadgeom::gauss_legendre(64);
    for (unsigned n : {3u, 4u, 5u}) {
        auto base = bounds::steklov_testfn_quotient({n, 1.0, 2.0, 0.0}, rule);
        double tau = radial::steklov_concentric_mode(n, 1.0, 2.0, 0).tau;
        c.require(std::abs(base.quotient - tau) <= 1e-10 * std::max(1.0, tau),
                  "quotient(0) vs tau1 n=" + std::to_string(n));
        for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            auto q = bounds::steklov_testfn_quotient({n, 1.0, 2.0, x}, rule);
            c.require(q.numerator <= base.numerator + 1e-14,
                      "numerator link n=" + std::to_string(n));
            c.require(q.denominator >= base.denominator - 1e-14,
                      "denominator link n=" + std::to_string(n));
            c.require(q.quotient <= base.quotient + 1e-14,
                      "quotient comparison n=" + std::to_string(n));
        }
    }
    return c.report();
}

// --------------------------------------------------------------------------
// 8. Neumann radial certificate matrix.

bool criterion8() {
    Criterion c(8, "Neumann radial certificates across spaces and shells");
    auto start = Clock::now();
    const std::vector<SpaceKind> spaces = {
        SpaceKind::euclidean(2), SpaceKind::euclidean(3),
        SpaceKind::rank1(1, 3), SpaceKind::rank1(2, 2)};
    for (const SpaceKind& space : spaces) {
        for (auto [r1, r2] : {std::pair<double, double>{1.0, 2.0},
                              std::pair<double, double>{0.5, 1.5}}) {
            std::string tag = space.label() + " (" + std::to_string(r1) + "," +
                              std::to_string(r2) + ")";
            AnnulusSpec annulus{r1, r2};
            auto mu1 = radial::neumann_radial_mu1(space, annulus);
            auto tau2 = radial::neumann_radial_tau2(space, annulus);
            c.require(mu1.eigenvalue > lambda1_sphere(space, r2),
                      "mu1 <= lambda1(S(r2)) " + tag);
            c.require(mu1.eigenvalue < tau2.eigenvalue, "mu1 >= tau2 " + tag);
            // g > 0 and g' > 0 on the interior.
            for (std::size_t j = 0; j < mu1.fn.values.size(); ++j)
                c.require(mu1.fn.values[j] > 0.0, "g sign " + tag);
            for (std::size_t j = 1; j + 1 < mu1.fn.values.size(); ++j)
                c.require(mu1.fn.dvalues[j] > 0.0, "g' sign " + tag);
            c.require(radial::psi_b_certificate(space, annulus, mu1).pass,
                      "Psi certificate " + tag);
            c.require(radial::b_function_profile(space, annulus, mu1).pass,
                      "B profile " + tag);
            auto certs = radial::neumann_h_certificate(space, annulus, mu1, tau2);
            c.require(certs.h_nonpositive.pass, "h sign " + tag);
            c.require(certs.h_equation_residual.pass &&
                          certs.h_equation_residual.lhs < 1e-6,
                      "h equation residual " + tag);
            c.require(certs.integral_identity.pass, "integral identity " + tag);
            c.require(certs.tau2_exceeds_mu1.pass, "tau2 > mu1 " + tag);
        }
    }
    c.require(seconds_since(start) < 30.0, "runtime >= 30 s");
    return c.report();
}

// --------------------------------------------------------------------------
// 9. Ellipse sweep with FEM oracle and test-function bound.

bool criterion9() {
    Criterion c(9, "ellipse sweep: FEM mu1 below the annulus value, "
                   "test-function bound consistent");
    auto start = Clock::now();
    const double geomean = 1.5, r1 = 0.4;
    double mu_annulus =
        radial::neumann_radial_mu1(SpaceKind::euclidean(2), {r1, geomean})
            .eigenvalue;
    for (double ratio : {1.0, 1.2, 1.5, 2.0}) {
        const double a = geomean * std::sqrt(ratio);
        const double b = geomean / std::sqrt(ratio);
        std::string tag = "a/b=" + std::to_string(ratio);
        auto domain = bounds::ellipse_domain(a, b, r1);
        auto profile = [&domain](double th) { return domain.boundary(th); };
        double mu_coarse = oracle2d::fem_neumann_mu1(
            oracle2d::build_transfinite_mesh(r1, profile, 48, 96));
        double mu_fine = oracle2d::fem_neumann_mu1(
            oracle2d::build_transfinite_mesh(r1, profile, 96, 192));
        double slack = 2.0 * std::abs(mu_coarse - mu_fine);
        c.require(mu_fine <= mu_annulus + slack, "FEM above annulus " + tag);
        if (ratio >= 1.2)
            c.require(mu_annulus - mu_fine > slack,
                      "no strict gap beyond slack " + tag);
        auto bound = bounds::neumann_testfn_bound(domain);
        c.require(bound.bound <= mu_annulus + 1e-9,
                  "bound above annulus " + tag);
        c.require(bound.bound >= mu_fine - slack, "bound below FEM " + tag);
    }
    c.require(seconds_since(start) < 300.0, "runtime >= 5 min");
    return c.report();
}

// --------------------------------------------------------------------------
// 10. Numerics hygiene: RK4 order, FEM rate, CSV byte stability.

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << f.rdbuf();
    return buffer.str();
}

bool criterion10(const std::string& cli_path) {
    Criterion c(10, "numerics hygiene: RK4 order, FEM convergence rate, CSV "
                    "byte stability");

    double closed = radial::steklov_concentric_mode(4, 1.0, 2.0, 2).tau;
    double err128 =
        std::abs(radial::steklov_concentric_shoot(4, 1.0, 2.0, 2, 128) - closed);
    double err256 =
        std::abs(radial::steklov_concentric_shoot(4, 1.0, 2.0, 2, 256) - closed);
    double order = std::log2(err128 / err256);
    c.require(order >= 3.9, "RK4 order " + std::to_string(order) + " < 3.9");

    double mu_exact =
        radial::neumann_radial_mu1(SpaceKind::euclidean(2), {1.0, 2.0})
            .eigenvalue;
    auto annulus = [](double) { return 2.0; };
    std::vector<double> errors;
    for (std::size_t n_r : {24u, 48u, 96u})
        errors.push_back(std::abs(
            oracle2d::fem_neumann_mu1(
                oracle2d::build_transfinite_mesh(1.0, annulus, n_r, 2 * n_r)) -
            mu_exact));
    for (std::size_t level = 0; level + 1 < errors.size(); ++level) {
        double rate = std::log2(errors[level] / errors[level + 1]);
        c.require(rate > 1.6 && rate < 2.4,
                  "FEM rate " + std::to_string(rate) + " not ~2");
    }

    if (cli_path.empty()) {
        c.require(false, "CLI path missing (argv[1])");
    } else {
        for (const std::string& sub :
             {std::string("verify-identities"), std::string("steklov"),
              std::string("neumann")}) {
            std::string fa = "acceptance_" + sub + "_a.csv";
            std::string fb = "acceptance_" + sub + "_b.csv";
            for (const std::string& out : {fa, fb}) {
                std::string cmd = "\"" + cli_path + "\" " + sub + " --out " +
                                  out + " 2>/dev/null";
                int rc = std::system(cmd.c_str());
                c.require(rc == 0, sub + " exit code nonzero");
            }
            std::string a = read_file(fa), b = read_file(fb);
            c.require(!a.empty() && a == b, sub + " CSV not byte-stable");
            std::remove(fa.c_str());
            std::remove(fb.c_str());
        }
    }
    return c.report();
}

} // namespace

int main(int argc, char** argv) {
    std::string cli_path = argc > 1 ? argv[1] : "";
    bool all = true;
    all &= criterion1();
    all &= criterion2();
    all &= criterion3();
    all &= criterion4();
    all &= criterion5();
    all &= criterion6();
    all &= criterion7();
    all &= criterion8();
    all &= criterion9();
    all &= criterion10(cli_path);
    std::cout << (all ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
    return all ? 0 : 1;
}
