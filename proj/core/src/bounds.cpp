#include "annspec/bounds.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace annspec::bounds {

namespace {

using quadgeom::QuadratureRule;
using quadgeom::gauss_legendre;

// Radial profile of the extended test function and its energy density.
struct ExtendedTestFunction {
    const radial::RadialEigenSolution* g;
    SpaceKind space;
    double r2;

    double h(double r) const {
        return r >= r2 ? g->values.back() : g->value_at(r);
    }
    double dh(double r) const { return r >= r2 ? 0.0 : g->derivative_at(r); }
    double energy_density(double r) const {
        double hv = h(r), hd = dh(r);
        return hd * hd + lambda1_sphere(space, r) * hv * hv;
    }
};

// Integrates F(r) over Omega = D \ B(r1) in polar (2D) or axisymmetric
// spherical (3D) coordinates, splitting each radial line at r_split to
// keep piecewise-smooth integrands inside smooth panels.
double domain_integral(const SymmetricDomainSpec& domain,
                       const std::function<double(double)>& radial_part,
                       const std::function<double(double)>& angular_part,
                       double r_split, std::size_t angular_order,
                       std::size_t radial_order) {
    QuadratureRule angular = gauss_legendre(angular_order);
    QuadratureRule radial_rule = gauss_legendre(radial_order);
    const double r1 = domain.inner_radius;
    const bool planar = domain.dimension == 2;
    const double angle_hi = planar ? 2.0 * M_PI : M_PI;

    auto line = [&](double angle) {
        double R = domain.boundary(angle);
        double value = 0.0;
        auto piece = [&](double lo, double hi) {
            if (hi <= lo) return;
            value += radial_rule.integrate(lo, hi, [&](double r) {
                double jac = planar ? r : r * r;
                return radial_part(r) * jac;
            });
        };
        if (r_split > r1 && r_split < R) {
            piece(r1, r_split);
            piece(r_split, R);
        } else {
            piece(r1, R);
        }
        double meas = planar ? 1.0 : std::sin(angle);
        return value * angular_part(angle) * meas;
    };
    double total = angular.integrate(0.0, angle_hi, line);
    return planar ? total : 2.0 * M_PI * total;
}

} // namespace

void SymmetricDomainSpec::validate(std::size_t samples) const {
    if (dimension != 2 && dimension != 3)
        throw std::domain_error("SymmetricDomainSpec: dimension must be 2 or 3");
    if (!(inner_radius > 0.0))
        throw std::domain_error("SymmetricDomainSpec: inner radius must be > 0");
    if (!boundary)
        throw std::domain_error("SymmetricDomainSpec: boundary profile missing");
    const double hi = dimension == 2 ? 2.0 * M_PI : M_PI;
    for (std::size_t j = 0; j < samples; ++j) {
        double angle = hi * double(j) / double(samples);
        double R = boundary(angle);
        if (!(R > inner_radius))
            throw std::domain_error(
                "SymmetricDomainSpec: boundary must satisfy min R > r1");
        double mirror =
            dimension == 2 ? boundary(angle + M_PI) : boundary(M_PI - angle);
        if (std::abs(R - mirror) > 1e-9 * std::max(1.0, std::abs(R)))
            throw std::domain_error(
                "SymmetricDomainSpec: boundary is not antipodally symmetric");
    }
}

SymmetricDomainSpec ball_domain(unsigned dimension, double radius,
                                double inner_radius) {
    SymmetricDomainSpec d;
    d.dimension = dimension;
    d.boundary = [radius](double) { return radius; };
    d.inner_radius = inner_radius;
    d.validate();
    return d;
}

SymmetricDomainSpec ellipse_domain(double a, double b, double inner_radius) {
    SymmetricDomainSpec d;
    d.dimension = 2;
    d.boundary = [a, b](double theta) {
        double c = std::cos(theta), s = std::sin(theta);
        return a * b / std::sqrt(b * b * c * c + a * a * s * s);
    };
    d.inner_radius = inner_radius;
    d.validate();
    return d;
}

SteklovQuotient steklov_testfn_quotient(const quadgeom::OffsetAnnulusSpec& spec,
                                        const quadgeom::QuadratureRule& rule) {
    spec.validate();
    if (spec.n < 3)
        throw std::domain_error(
            "steklov_testfn_quotient: the radial test function needs n >= 3");
    const double p = double(spec.n) - 2.0;
    auto grad_sq = [p](double r) {
        double v = p * std::pow(r, -p - 1.0);
        return v * v;
    };
    double numerator = quadgeom::eccentric_volume_integral(spec, grad_sq, rule);
    double profile =
        quadgeom::boundary_energy_profile(spec.n, spec.R1, spec.R2, spec.x, rule);
    double denominator = std::pow(spec.R2, double(spec.n) - 1.0) *
                         quadgeom::unit_sphere_area(spec.n - 1) * profile;
    return {numerator / denominator, numerator, denominator};
}

double equal_volume_radius(const SymmetricDomainSpec& domain) {
    domain.validate();
    QuadratureRule rule = gauss_legendre(256);
    if (domain.dimension == 2) {
        double area = rule.integrate(0.0, 2.0 * M_PI, [&](double theta) {
            double R = domain.boundary(theta);
            return 0.5 * R * R;
        });
        return std::sqrt(area / M_PI);
    }
    double volume = rule.integrate(0.0, M_PI, [&](double phi) {
        double R = domain.boundary(phi);
        return 2.0 * M_PI / 3.0 * R * R * R * std::sin(phi);
    });
    return std::cbrt(volume * 3.0 / (4.0 * M_PI));
}

NeumannBound neumann_testfn_bound(const SymmetricDomainSpec& domain,
                                  std::size_t angular_order,
                                  std::size_t radial_order) {
    domain.validate();
    const double r1 = domain.inner_radius;
    const double r2 = equal_volume_radius(domain);
    if (!(r2 > r1))
        throw std::domain_error(
            "neumann_testfn_bound: equal-volume radius must exceed r1");
    SpaceKind space = SpaceKind::euclidean(domain.dimension);
    radial::NeumannSolution mu1 =
        radial::neumann_radial_mu1(space, {r1, r2});
    ExtendedTestFunction test{&mu1.fn, space, r2};

    auto one = [](double) { return 1.0; };
    double fun = domain_integral(
        domain, [&](double r) { double v = test.h(r); return v * v; }, one, r2,
        angular_order, radial_order);
    double energy = domain_integral(
        domain, [&](double r) { return test.energy_density(r); }, one, r2,
        angular_order, radial_order);

    return {energy / fun, fun, energy, mu1.eigenvalue, r2};
}

CheckReport gradient_identity_check(unsigned n, double r1, double r2,
                                    std::size_t samples, std::uint64_t seed) {
    SpaceKind space = SpaceKind::euclidean(n);
    radial::NeumannSolution mu1 = radial::neumann_radial_mu1(space, {r1, r2});
    const radial::RadialEigenSolution& g = mu1.fn;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double step = 1e-5;
    // Keep the whole finite-difference stencil inside the solved interval.
    const double margin = 4.0 * step * (1.0 + r2);
    std::uniform_real_distribution<double> radius(r1 + margin, r2 - margin);

    auto u = [&](unsigned i, const std::vector<double>& p) {
        double r = 0.0;
        for (double c : p) r += c * c;
        r = std::sqrt(r);
        return g.value_at(r) * p[i] / r;
    };

    double max_rel_err = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<double> p(n);
        double norm = 0.0;
        for (auto& c : p) {
            c = gauss(rng);
            norm += c * c;
        }
        norm = std::sqrt(norm);
        double r = radius(rng);
        for (auto& c : p) c *= r / norm;

        double fd_total = 0.0;
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned d = 0; d < n; ++d) {
                std::vector<double> hi = p, lo = p;
                hi[d] += step;
                lo[d] -= step;
                double deriv = (u(i, hi) - u(i, lo)) / (2.0 * step);
                fd_total += deriv * deriv;
            }
        }
        double gv = g.value_at(r), gd = g.derivative_at(r);
        double analytic = gd * gd + (double(n) - 1.0) / (r * r) * gv * gv;
        double rel = std::abs(fd_total - analytic) / std::max(1.0, std::abs(analytic));
        max_rel_err = std::max(max_rel_err, rel);
    }

    CheckReport report;
    report.name = "gradient_identity";
    report.add_param("n", double(n));
    report.add_param("r1", r1);
    report.add_param("r2", r2);
    report.add_param("samples", double(samples));
    report.add_param("seed", std::to_string(seed));
    report.lhs = max_rel_err;
    report.rhs = 0.0;
    report.relation = CheckReport::Relation::LessEqual;
    report.tolerance = 1e-6;
    report.evaluate();
    return report;
}

CheckReport moment_vanishing_check(const SymmetricDomainSpec& domain,
                                   std::size_t angular_order,
                                   std::size_t radial_order) {
    domain.validate();
    const double r1 = domain.inner_radius;
    const double r2 = equal_volume_radius(domain);
    SpaceKind space = SpaceKind::euclidean(domain.dimension);
    radial::NeumannSolution mu1 = radial::neumann_radial_mu1(space, {r1, r2});
    ExtendedTestFunction test{&mu1.fn, space, r2};

    auto h_abs = [&](double r) { return std::abs(test.h(r)); };
    auto h_val = [&](double r) { return test.h(r); };
    auto one = [](double) { return 1.0; };
    double scale = domain_integral(domain, h_abs, one, r2, angular_order,
                                   radial_order);

    double worst = 0.0;
    if (domain.dimension == 2) {
        for (auto dir : {+0.0, M_PI_2}) {
            double m = domain_integral(
                domain, h_val,
                [dir](double theta) { return std::cos(theta - dir); }, r2,
                angular_order, radial_order);
            worst = std::max(worst, std::abs(m));
        }
    } else {
        // Transverse moments vanish identically by axisymmetry; the axis
        // moment is the nontrivial one.
        double m = domain_integral(domain, h_val,
                                   [](double phi) { return std::cos(phi); }, r2,
                                   angular_order, radial_order);
        worst = std::abs(m);
    }

    CheckReport report;
    report.name = "moment_vanishing";
    report.add_param("dimension", double(domain.dimension));
    report.add_param("r1", r1);
    report.add_param("r2", r2);
    report.lhs = worst / std::max(1e-300, scale);
    report.rhs = 0.0;
    report.relation = CheckReport::Relation::LessEqual;
    report.tolerance = 1e-10;
    report.evaluate();
    return report;
}

} // namespace annspec::bounds
