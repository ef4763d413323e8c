#include "annspec/radial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "annspec/quadgeom.hpp"

namespace annspec::radial {

namespace {

using Coeff = std::function<double(double)>;

double hermite(double t, double h, double y0, double y1, double d0, double d1) {
    // Cubic Hermite on [0, 1] with derivatives scaled by the step h.
    double t2 = t * t, t3 = t2 * t;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * h * d0 +
           (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * h * d1;
}

double hermite_derivative(double t, double h, double y0, double y1, double d0,
                          double d1) {
    double t2 = t * t;
    return ((6.0 * t2 - 6.0 * t) * y0 + (3.0 * t2 - 4.0 * t + 1.0) * h * d0 +
            (-6.0 * t2 + 6.0 * t) * y1 + (3.0 * t2 - 2.0 * t) * h * d1) / h;
}

std::size_t locate(const std::vector<double>& grid, double r) {
    if (r < grid.front() - 1e-12 || r > grid.back() + 1e-12)
        throw std::domain_error("RadialEigenSolution: radius outside grid");
    double h = (grid.back() - grid.front()) / double(grid.size() - 1);
    auto j = std::size_t(std::floor((r - grid.front()) / h));
    return std::min(j, grid.size() - 2);
}

struct Trajectory {
    std::vector<double> grid, f, df;
};

// Classical RK4 for f'' = -drift(r) f' + (potential(r) - mu) f.
Trajectory rk4_shoot(const Coeff& drift, const Coeff& potential, double mu,
                     double r1, double r2, double f0, double df0,
                     std::size_t steps) {
    Trajectory out;
    out.grid.resize(steps + 1);
    out.f.resize(steps + 1);
    out.df.resize(steps + 1);
    const double h = (r2 - r1) / double(steps);
    auto accel = [&](double r, double f, double v) {
        return -drift(r) * v + (potential(r) - mu) * f;
    };
    double f = f0, v = df0;
    out.grid[0] = r1;
    out.f[0] = f;
    out.df[0] = v;
    for (std::size_t j = 0; j < steps; ++j) {
        double r = r1 + double(j) * h;
        double k1f = v, k1v = accel(r, f, v);
        double k2f = v + 0.5 * h * k1v,
               k2v = accel(r + 0.5 * h, f + 0.5 * h * k1f, v + 0.5 * h * k1v);
        double k3f = v + 0.5 * h * k2v,
               k3v = accel(r + 0.5 * h, f + 0.5 * h * k2f, v + 0.5 * h * k2v);
        double k4f = v + h * k3v,
               k4v = accel(r + h, f + h * k3f, v + h * k3v);
        f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        out.grid[j + 1] = r1 + double(j + 1) * h;
        out.f[j + 1] = f;
        out.df[j + 1] = v;
    }
    return out;
}

// Step-halving defect on the shared grid, normalized by the solution size.
double halving_residual(const Coeff& drift, const Coeff& potential, double mu,
                        const Trajectory& coarse) {
    std::size_t steps = coarse.grid.size() - 1;
    Trajectory fine = rk4_shoot(drift, potential, mu, coarse.grid.front(),
                                coarse.grid.back(), coarse.f.front(),
                                coarse.df.front(), 2 * steps);
    double scale = 0.0, defect = 0.0;
    for (std::size_t j = 0; j <= steps; ++j) {
        scale = std::max(scale, std::abs(coarse.f[j]));
        defect = std::max(defect, std::abs(coarse.f[j] - fine.f[2 * j]));
        defect = std::max(defect, std::abs(coarse.df[j] - fine.df[2 * j]));
    }
    return defect / std::max(1.0, scale);
}

std::vector<double> find_nodes(const Trajectory& t) {
    std::vector<double> nodes;
    for (std::size_t j = 0; j + 1 < t.grid.size(); ++j) {
        if (t.f[j] == 0.0 && j > 0) {
            nodes.push_back(t.grid[j]);
        } else if (t.f[j] * t.f[j + 1] < 0.0) {
            // Bisection on the Hermite interpolant.
            double h = t.grid[j + 1] - t.grid[j];
            double lo = 0.0, hi = 1.0;
            double flo = t.f[j];
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = hermite(mid, h, t.f[j], t.f[j + 1], t.df[j], t.df[j + 1]);
                if (fm == 0.0) { lo = hi = mid; break; }
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            nodes.push_back(t.grid[j] + 0.5 * (lo + hi) * h);
        }
    }
    return nodes;
}

RadialEigenSolution pack_solution(double eigenvalue, Trajectory t,
                                  double residual) {
    RadialEigenSolution sol;
    sol.eigenvalue = eigenvalue;
    sol.node_locations = find_nodes(t);
    sol.grid = std::move(t.grid);
    sol.values = std::move(t.f);
    sol.dvalues = std::move(t.df);
    sol.residual = residual;
    return sol;
}

double lambda1_sphere_derivative(const SpaceKind& space, double r) {
    if (space.variant == SpaceKind::Variant::Euclidean)
        return -2.0 * (double(space.n) - 1.0) / (r * r * r);
    double kn = double(space.k) * double(space.n);
    double sh = std::sinh(r), ch = std::cosh(r);
    return -2.0 * (kn - 1.0) * ch / (sh * sh * sh) +
           2.0 * (double(space.k) - 1.0) * sh / (ch * ch * ch);
}

struct EigenSearchResult {
    double eigenvalue;
    Trajectory trajectory;
};

// Scans the shooting mismatch g'(r2; mu) upward from `start` in steps of
// `step` and bisects the first admissible bracket. `accept` can reject a
// root (used to skip radial modes with the wrong node count).
EigenSearchResult scan_and_bisect(
    const Coeff& drift, const Coeff& potential, double r1, double r2,
    double start, double step, double limit, double tol, std::size_t steps,
    const std::function<bool(const Trajectory&)>& accept,
    const std::string& what) {
    auto endslope = [&](double mu) {
        return rk4_shoot(drift, potential, mu, r1, r2, 1.0, 0.0, steps);
    };
    double mu_prev = start;
    double s_prev = endslope(mu_prev).df.back();
    for (double mu = start + step; mu <= limit; mu += step) {
        double s = endslope(mu).df.back();
        if (s_prev == 0.0 || s_prev * s < 0.0) {
            double lo = mu_prev, hi = mu, slo = s_prev;
            for (int it = 0; it < 200 && hi - lo > tol; ++it) {
                double mid = 0.5 * (lo + hi);
                double sm = endslope(mid).df.back();
                if (sm == 0.0) { lo = hi = mid; break; }
                if ((sm < 0.0) == (slo < 0.0)) {
                    lo = mid;
                    slo = sm;
                } else {
                    hi = mid;
                }
            }
            double eig = 0.5 * (lo + hi);
            Trajectory t = endslope(eig);
            if (accept(t)) return {eig, std::move(t)};
        }
        mu_prev = mu;
        s_prev = s;
    }
    throw std::runtime_error(what + ": no admissible eigenvalue in scan range [" +
                             std::to_string(start) + ", " + std::to_string(limit) +
                             "], step " + std::to_string(step));
}

} // namespace

double RadialEigenSolution::value_at(double r) const {
    std::size_t j = locate(grid, r);
    double h = grid[j + 1] - grid[j];
    return hermite((r - grid[j]) / h, h, values[j], values[j + 1], dvalues[j],
                   dvalues[j + 1]);
}

double RadialEigenSolution::derivative_at(double r) const {
    std::size_t j = locate(grid, r);
    double h = grid[j + 1] - grid[j];
    return hermite_derivative((r - grid[j]) / h, h, values[j], values[j + 1],
                              dvalues[j], dvalues[j + 1]);
}

SteklovMode steklov_concentric_mode(unsigned n, double R1, double R2,
                                    unsigned i, std::size_t grid_points) {
    if (n < 2 || !(0.0 < R1 && R1 < R2))
        throw std::domain_error("steklov_concentric_mode: invalid shell");
    std::function<double(double)> f, df;
    if (i == 0 && n == 2) {
        f = [R1](double r) { return std::log(r / R1); };
        df = [](double r) { return 1.0 / r; };
    } else if (i == 0) {
        double p = double(n) - 2.0;
        f = [R1, p](double r) { return std::pow(R1, -p) - std::pow(r, -p); };
        df = [p](double r) { return p * std::pow(r, -p - 1.0); };
    } else {
        double ii = double(i);
        double q = ii + double(n) - 2.0;  // decaying exponent
        double c = std::pow(R1, 2.0 * ii + double(n) - 2.0);
        f = [ii, q, c](double r) { return std::pow(r, ii) - c * std::pow(r, -q); };
        df = [ii, q, c](double r) {
            return ii * std::pow(r, ii - 1.0) + q * c * std::pow(r, -q - 1.0);
        };
    }
    SteklovMode out;
    out.tau = df(R2) / f(R2);
    out.mode.eigenvalue = out.tau;
    out.mode.grid.resize(grid_points);
    out.mode.values.resize(grid_points);
    out.mode.dvalues.resize(grid_points);
    for (std::size_t j = 0; j < grid_points; ++j) {
        double r = R1 + (R2 - R1) * double(j) / double(grid_points - 1);
        out.mode.grid[j] = r;
        out.mode.values[j] = f(r);
        out.mode.dvalues[j] = df(r);
    }
    out.mode.residual = 0.0;
    return out;
}

double steklov_concentric_shoot(unsigned n, double R1, double R2, unsigned i,
                                std::size_t steps) {
    if (n < 2 || !(0.0 < R1 && R1 < R2))
        throw std::domain_error("steklov_concentric_shoot: invalid shell");
    Coeff drift = [n](double r) { return (double(n) - 1.0) / r; };
    Coeff pot = [n, i](double r) { return sphere_mode_euclidean(n, i, r); };
    Trajectory t = rk4_shoot(drift, pot, 0.0, R1, R2, 0.0, 1.0, steps);
    if (std::abs(t.f.back()) < 1e-300)
        throw std::runtime_error("steklov_concentric_shoot: f(R2) degenerate");
    return t.df.back() / t.f.back();
}

CheckReport wronskian_monotonicity(unsigned n, double R1, double R2,
                                   unsigned i, std::size_t grid_points) {
    SteklovMode lo = steklov_concentric_mode(n, R1, R2, i, grid_points);
    SteklovMode hi = steklov_concentric_mode(n, R1, R2, i + 1, grid_points);
    double w_prev = 0.0, max_increase = 0.0, w_scale = 0.0;
    for (std::size_t j = 0; j < grid_points; ++j) {
        double r = lo.mode.grid[j];
        double w = std::pow(r, double(n) - 1.0) *
                   (lo.mode.dvalues[j] * hi.mode.values[j] -
                    hi.mode.dvalues[j] * lo.mode.values[j]);
        w_scale = std::max(w_scale, std::abs(w));
        if (j > 0) max_increase = std::max(max_increase, w - w_prev);
        w_prev = w;
    }
    CheckReport report;
    report.name = "wronskian_monotonicity";
    report.add_param("n", double(n));
    report.add_param("i", double(i));
    report.add_param("tau_i", lo.tau);
    report.add_param("tau_ip1", hi.tau);
    report.lhs = max_increase;
    report.rhs = 0.0;
    report.relation = CheckReport::Relation::LessEqual;
    report.tolerance = 1e-10 * std::max(1.0, w_scale);
    report.evaluate();
    if (!(lo.tau <= hi.tau + 1e-12 * std::abs(hi.tau))) report.pass = false;
    return report;
}

NeumannSolution neumann_radial_mu1(const SpaceKind& space,
                                   const AnnulusSpec& annulus, double tol,
                                   std::size_t steps) {
    annulus.validate();
    if (!(tol > 0.0)) throw std::domain_error("neumann_radial_mu1: tol must be > 0");
    Coeff drift = [&space](double r) { return log_density_derivative(space, r); };
    Coeff pot = [&space](double r) { return lambda1_sphere(space, r); };
    double lam_hi = lambda1_sphere(space, annulus.r1);
    double lam_lo = lambda1_sphere(space, annulus.r2);
    double start = lam_lo * (1.0 + 1e-9);
    double step = (lam_hi - lam_lo) / 200.0;
    double limit = lam_lo + 4.0 * (lam_hi - lam_lo);
    EigenSearchResult found = scan_and_bisect(
        drift, pot, annulus.r1, annulus.r2, start, step, limit, tol, steps,
        [](const Trajectory&) { return true; }, "neumann_radial_mu1");
    double residual = halving_residual(drift, pot, found.eigenvalue,
                                       found.trajectory);
    return {found.eigenvalue,
            pack_solution(found.eigenvalue, std::move(found.trajectory), residual)};
}

NeumannSolution neumann_radial_tau2(const SpaceKind& space,
                                    const AnnulusSpec& annulus, double tol,
                                    std::size_t steps) {
    annulus.validate();
    if (!(tol > 0.0)) throw std::domain_error("neumann_radial_tau2: tol must be > 0");
    Coeff drift = [&space](double r) { return log_density_derivative(space, r); };
    Coeff pot = [](double) { return 0.0; };
    double scale = std::pow(M_PI / (annulus.r2 - annulus.r1), 2.0);
    double step = scale / 100.0;
    EigenSearchResult found = scan_and_bisect(
        drift, pot, annulus.r1, annulus.r2, step, step, 20.0 * scale, tol, steps,
        [](const Trajectory& t) { return find_nodes(t).size() == 1; },
        "neumann_radial_tau2");
    double residual = halving_residual(drift, pot, found.eigenvalue,
                                       found.trajectory);
    return {found.eigenvalue,
            pack_solution(found.eigenvalue, std::move(found.trajectory), residual)};
}

NeumannCertificates neumann_h_certificate(const SpaceKind& space,
                                          const AnnulusSpec& annulus,
                                          const NeumannSolution& mu1,
                                          const NeumannSolution& tau2) {
    annulus.validate();
    const RadialEigenSolution& g = mu1.fn;
    const std::size_t N = g.grid.size();
    const double mu = mu1.eigenvalue;

    // h' = g, anchored at r2 through mu1 h(r2) = -g'(r2) - (J'/J)(r2) g(r2).
    double h_r2 = -log_density_derivative(space, annulus.r2) *
                  g.values.back() / mu;
    // Cumulative integral of g with the Euler-Maclaurin endpoint correction
    // (g' is available on the grid).
    std::vector<double> cumulative(N, 0.0);
    for (std::size_t j = 0; j + 1 < N; ++j) {
        double h = g.grid[j + 1] - g.grid[j];
        cumulative[j + 1] = cumulative[j] +
                            0.5 * h * (g.values[j] + g.values[j + 1]) +
                            h * h / 12.0 * (g.dvalues[j] - g.dvalues[j + 1]);
    }
    RadialEigenSolution hfun;
    hfun.grid = g.grid;
    hfun.values.resize(N);
    hfun.dvalues = g.values; // h' = g
    double h_scale = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        hfun.values[j] = h_r2 - (cumulative[N - 1] - cumulative[j]);
        h_scale = std::max(h_scale, std::abs(hfun.values[j]));
    }

    NeumannCertificates certs;

    CheckReport& nonpos = certs.h_nonpositive;
    nonpos.name = "h_nonpositive";
    nonpos.lhs = *std::max_element(hfun.values.begin(), hfun.values.end());
    nonpos.rhs = 0.0;
    nonpos.relation = CheckReport::Relation::LessEqual;
    nonpos.tolerance = 1e-9 * std::max(1.0, h_scale);
    nonpos.add_param("h_r2", h_r2);
    nonpos.evaluate();

    // Residual of -(1/J)(J h')' = mu1 h, i.e. -g' - (J'/J) g = mu1 h.
    double max_defect = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        double r = g.grid[j];
        double lhs = -g.dvalues[j] - log_density_derivative(space, r) * g.values[j];
        max_defect = std::max(max_defect, std::abs(lhs - mu * hfun.values[j]));
    }
    CheckReport& resid = certs.h_equation_residual;
    resid.name = "h_equation_residual";
    resid.lhs = max_defect / (mu * std::max(1e-300, h_scale));
    resid.rhs = 0.0;
    resid.relation = CheckReport::Relation::LessEqual;
    resid.tolerance = 1e-6;
    resid.evaluate();

    // Integrated identity on [r1, a]:
    //   int (tau2 - mu1) f h J = -J(a) h(a) f'(a) - J(r1) f(r1) h'(r1).
    if (tau2.fn.node_locations.size() != 1)
        throw std::runtime_error(
            "neumann_h_certificate: tau2 eigenfunction must have exactly one node");
    double a = tau2.fn.node_locations.front();
    const RadialEigenSolution& f = tau2.fn;
    quadgeom::QuadratureRule rule = quadgeom::gauss_legendre(64);
    double integral = 0.0;
    const std::size_t panels = 8;
    for (std::size_t p = 0; p < panels; ++p) {
        double lo = annulus.r1 + (a - annulus.r1) * double(p) / double(panels);
        double hi = annulus.r1 + (a - annulus.r1) * double(p + 1) / double(panels);
        integral += rule.integrate(lo, hi, [&](double r) {
            return (tau2.eigenvalue - mu) * f.value_at(r) * hfun.value_at(r) *
                   volume_density(space, r);
        });
    }
    double boundary = -volume_density(space, a) * hfun.value_at(a) *
                          f.derivative_at(a) -
                      volume_density(space, annulus.r1) * f.values.front() *
                          g.values.front();
    CheckReport& ident = certs.integral_identity;
    ident.name = "integral_identity";
    ident.add_param("node_a", a);
    ident.lhs = integral;
    ident.rhs = boundary;
    ident.relation = CheckReport::Relation::Equal;
    ident.tolerance = 1e-6;
    ident.evaluate();

    CheckReport& order = certs.tau2_exceeds_mu1;
    order.name = "tau2_exceeds_mu1";
    order.lhs = tau2.eigenvalue;
    order.rhs = mu;
    order.relation = CheckReport::Relation::GreaterEqual;
    order.tolerance = 0.0;
    order.evaluate();
    if (tau2.eigenvalue <= mu) order.pass = false; // strict

    return certs;
}

CheckReport psi_b_certificate(const SpaceKind& space, const AnnulusSpec& annulus,
                              const NeumannSolution& mu1) {
    annulus.validate();
    const RadialEigenSolution& g = mu1.fn;
    const std::size_t N = g.grid.size();
    double psi_scale = 0.0;
    for (std::size_t j = 0; j < N; ++j)
        psi_scale = std::max(psi_scale,
                             std::abs(volume_density(space, g.grid[j]) * g.dvalues[j]));
    double end_tol = 1e-6 * std::max(1.0, psi_scale);

    bool ends_zero =
        std::abs(volume_density(space, g.grid.front()) * g.dvalues.front()) <= end_tol &&
        std::abs(volume_density(space, g.grid.back()) * g.dvalues.back()) <= end_tol;

    double min_interior_psi = psi_scale;
    for (std::size_t j = 1; j + 1 < N; ++j)
        min_interior_psi = std::min(
            min_interior_psi, volume_density(space, g.grid[j]) * g.dvalues[j]);

    // lambda1(S(r)) - mu1: positive, then exactly one crossing, then negative.
    std::size_t crossings = 0;
    double b = 0.0;
    double prev = lambda1_sphere(space, g.grid.front()) - mu1.eigenvalue;
    bool starts_positive = prev > 0.0;
    for (std::size_t j = 1; j < N; ++j) {
        double cur = lambda1_sphere(space, g.grid[j]) - mu1.eigenvalue;
        if (prev > 0.0 && cur <= 0.0) {
            ++crossings;
            b = g.grid[j];
        } else if (prev <= 0.0 && cur > 0.0) {
            ++crossings;
        }
        prev = cur;
    }
    bool ends_negative = prev < 0.0;
    bool above_lambda_r2 =
        mu1.eigenvalue > lambda1_sphere(space, annulus.r2);

    CheckReport report;
    report.name = "psi_b_certificate";
    report.add_param("space", space.label());
    report.add_param("r1", annulus.r1);
    report.add_param("r2", annulus.r2);
    report.add_param("mu1", mu1.eigenvalue);
    report.add_param("b", b);
    report.lhs = min_interior_psi;
    report.rhs = 0.0;
    report.relation = CheckReport::Relation::GreaterEqual;
    report.tolerance = 0.0;
    report.evaluate();
    report.pass = report.pass && ends_zero && crossings == 1 &&
                  starts_positive && ends_negative && above_lambda_r2;
    return report;
}

CheckReport b_function_profile(const SpaceKind& space, const AnnulusSpec& annulus,
                               const NeumannSolution& mu1,
                               std::size_t grid_points) {
    annulus.validate();
    const RadialEigenSolution& g = mu1.fn;
    auto b_of = [&](double r) {
        double gv = g.value_at(r), gd = g.derivative_at(r);
        return gd * gd + lambda1_sphere(space, r) * gv * gv;
    };
    double b_r1 = b_of(annulus.r1);
    double slack = 1e-8 * std::max(1.0, b_r1);
    double prev = b_r1, max_increase = 0.0, max_analytic_dB = 0.0;
    for (std::size_t j = 1; j < grid_points; ++j) {
        double r = annulus.r1 +
                   (annulus.r2 - annulus.r1) * double(j) / double(grid_points - 1);
        double cur = b_of(r);
        max_increase = std::max(max_increase, cur - prev);
        prev = cur;
        // Analytic derivative with g'' substituted from the ODE.
        double gv = g.value_at(r), gd = g.derivative_at(r);
        double gdd = -log_density_derivative(space, r) * gd +
                     (lambda1_sphere(space, r) - mu1.eigenvalue) * gv;
        double dB = 2.0 * gd * gdd + lambda1_sphere_derivative(space, r) * gv * gv +
                    2.0 * lambda1_sphere(space, r) * gv * gd;
        max_analytic_dB = std::max(max_analytic_dB, dB);
    }
    CheckReport report;
    report.name = "b_function_profile";
    report.add_param("space", space.label());
    report.add_param("r1", annulus.r1);
    report.add_param("r2", annulus.r2);
    report.add_param("max_analytic_dB", max_analytic_dB);
    report.lhs = max_increase;
    report.rhs = 0.0;
    report.relation = CheckReport::Relation::LessEqual;
    report.tolerance = slack;
    report.evaluate();
    if (max_analytic_dB > 1e-6 * std::max(1.0, b_r1)) report.pass = false;
    return report;
}

} // namespace annspec::radial
