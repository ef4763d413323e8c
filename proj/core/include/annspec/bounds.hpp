#pragma once

#include <cstdint>
#include <functional>

#include "annspec/check.hpp"
#include "annspec/quadgeom.hpp"
#include "annspec/radial.hpp"
#include "annspec/spaces.hpp"

namespace annspec::bounds {

/// Star-shaped domain with antipodal symmetry, minus a concentric ball:
/// 2D boundary R(theta) with R(theta) = R(theta + pi), or 3D
/// axisymmetric profile R(phi), phi in [0, pi], with R(phi) = R(pi - phi).
struct SymmetricDomainSpec {
    unsigned dimension;                     // 2 or 3
    std::function<double(double)> boundary; // R(theta) / R(phi)
    double inner_radius;                    // r1, with min R > r1 > 0

    void validate(std::size_t samples = 256) const;
};

/// Circle/sphere boundary of constant radius.
SymmetricDomainSpec ball_domain(unsigned dimension, double radius,
                                double inner_radius);
/// 2D ellipse with semi-axes a, b.
SymmetricDomainSpec ellipse_domain(double a, double b, double inner_radius);

/// Rayleigh quotient of the radial test function R1^{2-n} - r^{2-n} on
/// the eccentric region: gradient energy over the region divided by the
/// boundary energy on the shifted outer sphere. Upper bound for tau1.
/// Requires n >= 3.
struct SteklovQuotient {
    double quotient;
    double numerator;    // int_D ((n-2)/r^{n-1})^2 dV
    double denominator;  // int_{S'(R2)} (R1^{2-n} - r^{2-n})^2 dv
};
SteklovQuotient steklov_testfn_quotient(const quadgeom::OffsetAnnulusSpec& spec,
                                        const quadgeom::QuadratureRule& rule);

/// Radius of the Euclidean ball with the same volume as the domain D.
double equal_volume_radius(const SymmetricDomainSpec& domain);

/// Test-function upper bound for the first nonzero Neumann eigenvalue of
/// Omega = D \ closure(B(r1)): solves the radial problem on the
/// equal-volume annulus (r1, r2), extends g by the constant g(r2), and
/// evaluates the Rayleigh quotient of the n-vector test family over Omega.
struct NeumannBound {
    double bound;            // energy_integral / fun_integral
    double fun_integral;     // int_Omega h^2 dV
    double energy_integral;  // int_Omega (h'^2 + lambda1(S(r)) h^2) dV
    double mu1_annulus;      // mu1 of the equal-volume annulus
    double r2;               // equal-volume radius
};
NeumannBound neumann_testfn_bound(const SymmetricDomainSpec& domain,
                                  std::size_t angular_order = 256,
                                  std::size_t radial_order = 256);

/// Finite-difference spot check of the gradient identity
///   sum_i |grad(h(r) x_i / r)|^2 = h'(r)^2 + ((n-1)/r^2) h(r)^2
/// at reproducible random points with r1 < |p| < r2 (Euclidean).
CheckReport gradient_identity_check(unsigned n, double r1, double r2,
                                    std::size_t samples = 100,
                                    std::uint64_t seed = 0x5eed5eed5eed5eedULL);

/// Quadrature check that the antipodal symmetry kills the first moments:
/// int_Omega h(r) x_i / r dV = 0 for each coordinate i.
CheckReport moment_vanishing_check(const SymmetricDomainSpec& domain,
                                   std::size_t angular_order = 256,
                                   std::size_t radial_order = 256);

} // namespace annspec::bounds
