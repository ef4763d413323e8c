#pragma once

#include <complex>
#include <cstdint>

#include "annspec/mesh.hpp"

namespace annspec::oracle2d {

/// Mobius normalization of an eccentric circle pair: the common inverse
/// points a, b of the two circles (on the symmetry axis) and the modulus
/// rho of the conformally equivalent concentric annulus. The map
/// W(z) = (z - a) / (scale (z - b)) sends the outer circle to |w| = 1 and
/// the inner circle to |w| = rho.
struct MobiusMapParams {
    double a = 0.0;
    double b = 0.0;
    double rho = 0.0;     // conformal modulus, in (0, 1)
    double scale = 1.0;   // normalizes the outer image radius to 1
    bool identity = false; // x = 0 short-circuit: z = R2 * w

    double R1 = 0.0, R2 = 0.0, x = 0.0;

    /// Inverse map z(w) and |dz/dw| on the unit circle.
    std::complex<double> z_of_w(std::complex<double> w) const;
    double boundary_weight(double theta) const; // |dz/dw|(e^{i theta})
    std::complex<double> w_of_z(std::complex<double> z) const;
};

/// Common inverse points for inner circle (center 0, radius R1) and
/// outer circle (center (x,0), radius R2). Throws std::domain_error for
/// tangent or intersecting circles. x below 1e-12 is treated as 0.
MobiusMapParams mobius_concentric_map(double R1, double R2, double x);

/// Dirichlet-to-Neumann eigenvalue of Fourier mode m on the concentric
/// annulus rho < |w| < 1 (zero data at |w| = rho):
/// sigma_0 = 1/ln(1/rho), sigma_m = m (1 + rho^{2m}) / (1 - rho^{2m}).
double dtn_mode_concentric(double rho, unsigned m);

/// First Steklov-Dirichlet eigenvalue of the eccentric annulus by the
/// conformal DtN method: diag(sigma_m) against the |dz/dw|-weighted Gram
/// matrix in the real Fourier basis up to mode M.
double steklov_eccentric_tau1(double R1, double R2, double x,
                              std::size_t modes = 64);

/// Smallest nonzero eigenvalue of K u = mu M u (free membrane) by
/// inverse power iteration with constant-mode deflation in the M-inner
/// product; CG inner solves.
double fem_neumann_mu1(const Mesh& mesh, double tol = 1e-10,
                       std::size_t max_iters = 500);

/// First Steklov-Dirichlet eigenvalue: inner boundary clamped, smallest
/// tau of K u = tau Mb_outer u via inverse iteration on K^{-1} Mb.
double fem_steklov_tau1(const Mesh& mesh, double tol = 1e-10,
                        std::size_t max_iters = 500);

} // namespace annspec::oracle2d
