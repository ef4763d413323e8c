#pragma once

#include <vector>

#include "annspec/check.hpp"
#include "annspec/spaces.hpp"

namespace annspec::radial {

/// One solved radial eigenmode: the eigenvalue, the eigenfunction and its
/// derivative sampled on a uniform grid over [r1, r2], an a-posteriori
/// error estimate, and the interior sign changes.
struct RadialEigenSolution {
    double eigenvalue = 0.0;
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<double> dvalues;
    double residual = 0.0;               // max step-halving defect
    std::vector<double> node_locations;  // interior sign changes

    /// Cubic-Hermite interpolation of the eigenfunction / derivative at
    /// an arbitrary radius inside [grid.front(), grid.back()].
    double value_at(double r) const;
    double derivative_at(double r) const;
};

inline constexpr std::size_t kDefaultShootingSteps = 4096;

/// Closed-form Steklov-Dirichlet mode i on the concentric Euclidean
/// shell (R1, R2): f_i vanishing at R1 with tau_i = f_i'(R2)/f_i(R2).
/// i = 0 gives ln(r/R1) (n = 2) or R1^{2-n} - r^{2-n} (n >= 3);
/// i >= 1 gives r^i - R1^{2i+n-2} r^{-(i+n-2)}.
struct SteklovMode {
    double tau;
    RadialEigenSolution mode;
};
SteklovMode steklov_concentric_mode(unsigned n, double R1, double R2,
                                    unsigned i,
                                    std::size_t grid_points = 513);

/// Same eigenvalue by RK4 shooting on
///   -f'' - ((n-1)/r) f' + lambda_i(S(r)) f = 0, f(R1)=0, f'(R1)=1,
/// returning f'(R2)/f(R2).
double steklov_concentric_shoot(unsigned n, double R1, double R2, unsigned i,
                                std::size_t steps = kDefaultShootingSteps);

/// Samples W(r) = r^{n-1} (f_i' f_{i+1} - f_{i+1}' f_i) on a uniform grid
/// of the given size and reports its non-increase together with the
/// endpoint conclusion tau_i <= tau_{i+1}.
CheckReport wronskian_monotonicity(unsigned n, double R1, double R2,
                                   unsigned i, std::size_t grid_points = 257);

/// First eigenvalue of the radial problem with the angular lambda1 term,
///   -(1/J)(J g')' + lambda1(S(r)) g = mu g,  g'(r1) = 0 = g'(r2),
/// found by scanning mu upward from lambda1(S(r2)) and bisecting the
/// first sign change of g'(r2; mu). g is normalized g(r1) = 1.
struct NeumannSolution {
    double eigenvalue;
    RadialEigenSolution fn;
};
NeumannSolution neumann_radial_mu1(const SpaceKind& space,
                                   const AnnulusSpec& annulus,
                                   double tol = 1e-12,
                                   std::size_t steps = kDefaultShootingSteps);

/// Second eigenvalue (first positive, eigenfunction with exactly one
/// interior node) of the purely radial problem
///   -(1/J)(J f')' = tau f,  f'(r1) = 0 = f'(r2),
/// normalized f(r1) = 1, node stored in node_locations.
NeumannSolution neumann_radial_tau2(const SpaceKind& space,
                                    const AnnulusSpec& annulus,
                                    double tol = 1e-12,
                                    std::size_t steps = kDefaultShootingSteps);

/// Certificate bundle around the comparison function h with h' = g:
/// h <= 0, h solves the radial equation -(1/J)(J h')' = mu1 h to
/// tolerance, the integrated identity on [r1, a] balances its boundary
/// terms, and tau2 > mu1 follows.
struct NeumannCertificates {
    CheckReport h_nonpositive;
    CheckReport h_equation_residual;
    CheckReport integral_identity;
    CheckReport tau2_exceeds_mu1;
    bool all_pass() const {
        return h_nonpositive.pass && h_equation_residual.pass &&
               integral_identity.pass && tau2_exceeds_mu1.pass;
    }
};
NeumannCertificates neumann_h_certificate(const SpaceKind& space,
                                          const AnnulusSpec& annulus,
                                          const NeumannSolution& mu1,
                                          const NeumannSolution& tau2);

/// Checks Psi(r) = J(r) g'(r): zero at both ends, positive on the
/// interior, lambda1(S(r)) - mu1 crossing sign exactly once (positive
/// then negative), and mu1 > lambda1(S(r2)).
CheckReport psi_b_certificate(const SpaceKind& space,
                              const AnnulusSpec& annulus,
                              const NeumannSolution& mu1);

/// Checks monotone non-increase of B(r) = g'(r)^2 + lambda1(S(r)) g(r)^2
/// on a sample grid, plus the sign of the ODE-substituted analytic B'.
CheckReport b_function_profile(const SpaceKind& space,
                               const AnnulusSpec& annulus,
                               const NeumannSolution& mu1,
                               std::size_t grid_points = 513);

} // namespace annspec::radial
