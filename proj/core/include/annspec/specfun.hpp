#pragma once

#include <cstddef>

#include "annspec/quadgeom.hpp"

namespace annspec::specfun {

/// Termination policy for power-series summation.
struct SeriesPolicy {
    double rel_tol = 1e-16;   // stop when |term| < rel_tol * |partial sum|
    std::size_t max_terms = 100000;
};

/// The four coefficient families of the offset-kernel expansions:
/// Alpha/Beta arise for odd ambient dimension n = 2k+1, the hatted pair
/// for even n = 2k.
enum class CoeffFamily { Alpha, Beta, AlphaHat, BetaHat };

enum class CoeffMethod { FiniteSum, ClosedForm };

/// Natural log of Gamma(s), s > 0. Accurate to ~15 digits on (0, 171).
double ln_gamma(double s);

/// Gamma(s) for s > 0.
double gamma_fn(double s);

/// Rising factorial (q)_m = q (q+1) ... (q+m-1); (q)_0 = 1.
double pochhammer(double q, unsigned m);

/// Gauss hypergeometric 2F1(a,b;c;z) by direct power-series summation.
/// Requires c not a non-positive integer and |z| < 1, or |z| = 1 with
/// c - a - b > 0. z within 1e-6 of 1 without the convergence condition
/// is rejected.
double hyp2f1_series(double a, double b, double c, double z,
                     const SeriesPolicy& policy = SeriesPolicy{});

/// Gauss hypergeometric 2F1(a,b;c;z) through the Euler integral
/// representation, evaluated with the supplied quadrature rule after the
/// substitution x = sin^2(psi) (keeps half-integer exponents smooth).
/// Requires c > b > 0 and z < 1.
double hyp2f1_integral(double a, double b, double c, double z,
                       const quadgeom::QuadratureRule& rule);

/// Coefficient of the x^{2t} term in the offset-kernel expansion for the
/// given family, evaluated either by the i = 0..t finite sum or by the
/// simplified Gamma-ratio closed form. Alpha/Beta need k >= 1, the hatted
/// families k >= 2.
double series_coefficient(CoeffFamily family, unsigned k, unsigned t,
                          CoeffMethod method);

} // namespace annspec::specfun
