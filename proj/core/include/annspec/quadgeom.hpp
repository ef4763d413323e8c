#pragma once

#include <functional>
#include <vector>

namespace annspec::quadgeom {

/// Gauss-Legendre nodes/weights on [-1, 1].
struct QuadratureRule {
    std::vector<double> nodes;   // strictly increasing, in (-1, 1)
    std::vector<double> weights; // positive, sum to 2
    std::size_t order() const { return nodes.size(); }

    /// Integrates f over [a, b] with this rule mapped affinely.
    double integrate(double a, double b,
                     const std::function<double(double)>& f) const;
};

/// Standard Gauss-Legendre rule of the given order (order >= 1),
/// exact for polynomials of degree <= 2*order - 1.
QuadratureRule gauss_legendre(std::size_t order);

/// Eccentric pair of balls in R^n: outer ball of radius R2 centered at
/// (x, 0, ..., 0), inner ball of radius R1 centered at the origin, with
/// the closed inner ball strictly inside the outer one.
struct OffsetAnnulusSpec {
    unsigned n;  // ambient dimension >= 2
    double R1;
    double R2;
    double x;    // center offset along the first axis, 0 <= x < R2 - R1

    void validate() const; // throws std::domain_error on violation
};

/// Surface area of the unit (n-1)-sphere in R^n.
double unit_sphere_area(unsigned n);

/// Integral over [-1, 1] of (1-s^2)^w (R2^2 + x^2 + 2 R2 x s)^{-p},
/// the common kernel of the offset-sphere expansions. Requires
/// R2 > 0, 0 <= x < R2, w >= 0. Evaluated in the angle variable
/// s = cos(theta) so half-integer weights stay smooth.
double offset_kernel_integral(double w, double p, double R2, double x,
                              const QuadratureRule& rule);

/// Normalized boundary-energy integral
///   I(x) = int_{-1}^{1} (R1^{-(n-2)} - (R2^2+x^2+2 R2 x s)^{-(n-2)/2})^2
///          (1-s^2)^{(n-3)/2} ds,
/// the 1D reduction of the offset-sphere test-function energy with the
/// common angular prefactor divided out. Requires n >= 3.
double boundary_energy_profile(unsigned n, double R1, double R2, double x,
                               const QuadratureRule& rule);

/// Integral of a radial function f(r), r = distance to the origin, over
/// the doubly connected region D = B2'(center (x,0,...), radius R2)
/// minus the closed ball B1(origin, radius R1). f must be finite on
/// [R1, R2 + x]; on D the origin distance never drops below R1, so the
/// region is integrated directly (concentric shell up to R2 - x plus the
/// cap-angle band beyond it) rather than as a difference of two ball
/// integrals that would sample f inside B1.
double eccentric_volume_integral(const OffsetAnnulusSpec& spec,
                                 const std::function<double(double)>& f,
                                 const QuadratureRule& rule);

} // namespace annspec::quadgeom
