#include "annspec/quadgeom.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "annspec/specfun.hpp"

namespace annspec::quadgeom {

double QuadratureRule::integrate(double a, double b,
                                 const std::function<double(double)>& f) const {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        acc += weights[i] * f(mid + half * nodes[i]);
    return acc * half;
}

QuadratureRule gauss_legendre(std::size_t order) {
    if (order < 1)
        throw std::domain_error("gauss_legendre: order must be >= 1");
    QuadratureRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const std::size_t m = (order + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_order.
        double z = std::cos(M_PI * (double(i) + 0.75) / (double(order) + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t j = 0; j < order; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * double(j) + 1.0) * z * p1 - double(j) * p2) /
                     (double(j) + 1.0);
            }
            pp = double(order) * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[order - 1 - i] = z;
        double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

void OffsetAnnulusSpec::validate() const {
    if (n < 2) throw std::domain_error("OffsetAnnulusSpec: n must be >= 2");
    if (!(0.0 < R1 && R1 < R2))
        throw std::domain_error("OffsetAnnulusSpec: requires 0 < R1 < R2");
    if (!(0.0 <= x && x < R2 - R1))
        throw std::domain_error(
            "OffsetAnnulusSpec: offset must satisfy 0 <= x < R2 - R1");
}

double unit_sphere_area(unsigned n) {
    return 2.0 * std::pow(M_PI, 0.5 * double(n)) /
           specfun::gamma_fn(0.5 * double(n));
}

double offset_kernel_integral(double w, double p, double R2, double x,
                              const QuadratureRule& rule) {
    if (!(R2 > 0.0) || x < 0.0 || x >= R2)
        throw std::domain_error("offset_kernel_integral: requires R2 > 0, 0 <= x < R2");
    if (w < 0.0)
        throw std::domain_error("offset_kernel_integral: requires w >= 0");
    // s = cos(theta): the weight (1-s^2)^w ds becomes sin^{2w+1}(theta)
    // d(theta), analytic for the half-integer weights of interest.
    auto integrand = [&](double theta) {
        double c = std::cos(theta), sn = std::sin(theta);
        double base = R2 * R2 + x * x + 2.0 * R2 * x * c;
        return std::pow(sn, 2.0 * w + 1.0) * std::pow(base, -p);
    };
    return rule.integrate(0.0, M_PI, integrand);
}

double boundary_energy_profile(unsigned n, double R1, double R2, double x,
                               const QuadratureRule& rule) {
    if (n < 3)
        throw std::domain_error("boundary_energy_profile: requires n >= 3");
    OffsetAnnulusSpec{n, R1, R2, x}.validate();
    double inv = std::pow(R1, -(double(n) - 2.0));
    double half_pow = 0.5 * (double(n) - 2.0);
    auto integrand = [&](double theta) {
        double c = std::cos(theta), sn = std::sin(theta);
        double base = R2 * R2 + x * x + 2.0 * R2 * x * c;
        double d = inv - std::pow(base, -half_pow);
        return d * d * std::pow(sn, double(n) - 2.0);
    };
    return rule.integrate(0.0, M_PI, integrand);
}

namespace {

// int_0^T sin^m(t) dt for integer m >= 0, by the standard reduction
// S_m(T) = (-cos T sin^{m-1} T + (m-1) S_{m-2}(T)) / m.
double sin_power_integral(unsigned m, double T) {
    if (m == 0) return T;
    if (m == 1) return 1.0 - std::cos(T);
    std::vector<double> s(m + 1);
    s[0] = T;
    s[1] = 1.0 - std::cos(T);
    for (unsigned j = 2; j <= m; ++j)
        s[j] = (-std::cos(T) * std::pow(std::sin(T), double(j - 1)) +
                (double(j) - 1.0) * s[j - 2]) /
               double(j);
    return s[m];
}

} // namespace

double eccentric_volume_integral(const OffsetAnnulusSpec& spec,
                                 const std::function<double(double)>& f,
                                 const QuadratureRule& rule) {
    spec.validate();
    const unsigned n = spec.n;
    const double R1 = spec.R1, R2 = spec.R2, x = spec.x;
    const double omega = unit_sphere_area(n - 1); // area of S^{n-2}
    const double full_angle = sin_power_integral(n - 2, M_PI);

    auto check_finite = [&](double v, double r) {
        if (!std::isfinite(v))
            throw std::runtime_error(
                "eccentric_volume_integral: integrand singular at r = " +
                std::to_string(r));
        return v;
    };

    // Full shells R1 <= r <= R2 - x.
    double shell = 0.0;
    if (R2 - x > R1) {
        shell = rule.integrate(R1, R2 - x, [&](double r) {
            return check_finite(f(r), r) * std::pow(r, double(n) - 1.0) *
                   full_angle;
        });
    }
    if (x == 0.0) return omega * shell;

    // Band R2 - x <= r <= R2 + x: only the cap of the origin-centered
    // sphere of radius r inside the outer ball contributes. The cap
    // half-angle theta*(r) satisfies cos(theta*) = (r^2+x^2-R2^2)/(2rx).
    // Substituting r = R2 - x cos(u) removes the square-root kinks at the
    // band edges, so a single Gauss rule in u converges rapidly.
    double band_lo = std::max(R1, R2 - x);
    double u_lo = (band_lo == R2 - x)
                      ? 0.0
                      : std::acos((R2 - band_lo) / x);
    double band = rule.integrate(u_lo, M_PI, [&](double u) {
        double r = R2 - x * std::cos(u);
        double c = (r * r + x * x - R2 * R2) / (2.0 * r * x);
        c = std::min(1.0, std::max(-1.0, c));
        double theta_star = std::acos(c);
        double cap = sin_power_integral(n - 2, theta_star);
        return check_finite(f(r), r) * std::pow(r, double(n) - 1.0) * cap *
               x * std::sin(u);
    });

    return omega * (shell + band);
}

} // namespace annspec::quadgeom
