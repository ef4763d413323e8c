#pragma once

#include <string>

namespace annspec {

/// Ambient geometry for the radial problems: flat R^n, or a non-compact
/// rank-1 symmetric space over K with k = dim_R(K) in {1,2,4,8} and
/// total dimension k*n (curvature pinched in [-4, -1]). Only the radial
/// reductions enter: the volume density J(r) and the first geodesic
/// sphere eigenvalue lambda1(S(r)).
struct SpaceKind {
    enum class Variant { Euclidean, Rank1 };

    Variant variant = Variant::Euclidean;
    unsigned k = 1; // dim_R of the base field (Rank1 only)
    unsigned n = 2;

    static SpaceKind euclidean(unsigned n);
    static SpaceKind rank1(unsigned k, unsigned n);

    /// Dimension of the manifold (n for Euclidean, k*n for Rank1).
    unsigned dimension() const {
        return variant == Variant::Euclidean ? n : k * n;
    }

    std::string label() const;
};

/// Riemannian volume density along a unit-speed geodesic:
/// r^{n-1} (Euclidean) or sinh^{kn-1}(r) cosh^{k-1}(r) (Rank1). r > 0.
double volume_density(const SpaceKind& space, double r);

/// d/dr log J(r): (n-1)/r or (kn-1) coth(r) + (k-1) tanh(r).
double log_density_derivative(const SpaceKind& space, double r);

/// First nonzero eigenvalue of the geodesic sphere S(r):
/// (n-1)/r^2 or (kn-1)/sinh^2(r) - (k-1)/cosh^2(r). r > 0.
double lambda1_sphere(const SpaceKind& space, double r);

/// i-th eigenvalue i(i+n-2)/r^2 of the round sphere of radius r in R^n.
double sphere_mode_euclidean(unsigned n, unsigned i, double r);

/// Concentric geodesic shell r1 < d(p, .) < r2.
struct AnnulusSpec {
    double r1;
    double r2;
    void validate() const; // throws std::domain_error on violation
};

} // namespace annspec
