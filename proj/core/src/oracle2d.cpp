#include "annspec/oracle2d.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace annspec::oracle2d {

namespace {
constexpr double kOffsetEpsilon = 1e-12;
}

std::complex<double> MobiusMapParams::z_of_w(std::complex<double> w) const {
    if (identity) return R2 * w;
    std::complex<double> sw = scale * w;
    return (a - b * sw) / (1.0 - sw);
}

std::complex<double> MobiusMapParams::w_of_z(std::complex<double> z) const {
    if (identity) return z / R2;
    return (z - a) / ((z - b) * scale);
}

double MobiusMapParams::boundary_weight(double theta) const {
    if (identity) return R2;
    std::complex<double> w = std::polar(1.0, theta);
    std::complex<double> denom = 1.0 - scale * w;
    return std::abs(scale * (a - b)) / std::norm(denom);
}

MobiusMapParams mobius_concentric_map(double R1, double R2, double x) {
    if (!(0.0 < R1 && R1 < R2))
        throw std::domain_error("mobius_concentric_map: requires 0 < R1 < R2");
    if (x < 0.0 || x >= R2 - R1)
        throw std::domain_error(
            "mobius_concentric_map: circles must be strictly nested");
    MobiusMapParams params;
    params.R1 = R1;
    params.R2 = R2;
    params.x = x;
    if (x < kOffsetEpsilon) {
        params.identity = true;
        params.rho = R1 / R2;
        return params;
    }
    // Common inverse points on the axis: a*b = R1^2 and (a-x)(b-x) = R2^2,
    // i.e. x a^2 - (R1^2 + x^2 - R2^2) a + x R1^2 = 0.
    double c = R1 * R1 + x * x - R2 * R2;
    double disc = c * c - 4.0 * x * x * R1 * R1;
    if (disc <= 0.0)
        throw std::domain_error("mobius_concentric_map: circles tangent or intersecting");
    double root = std::sqrt(disc);
    // c < 0 here; both roots are negative. Pick |a| < R1 (inside the inner
    // circle) so the annulus maps to rho < |w| < 1.
    double a1 = (c + root) / (2.0 * x);
    double a2 = (c - root) / (2.0 * x);
    params.a = std::abs(a1) < std::abs(a2) ? a1 : a2;
    params.b = R1 * R1 / params.a;
    double rho_inner = std::abs((R1 - params.a) / (R1 - params.b));
    double rho_outer = std::abs((x + R2 - params.a) / (x + R2 - params.b));
    params.scale = rho_outer;
    params.rho = rho_inner / rho_outer;
    if (!(params.rho > 0.0 && params.rho < 1.0))
        throw std::runtime_error("mobius_concentric_map: modulus out of range");
    return params;
}

double dtn_mode_concentric(double rho, unsigned m) {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::domain_error("dtn_mode_concentric: requires 0 < rho < 1");
    if (m == 0) return 1.0 / std::log(1.0 / rho);
    double r2m = std::pow(rho, 2.0 * double(m));
    return double(m) * (1.0 + r2m) / (1.0 - r2m);
}

double steklov_eccentric_tau1(double R1, double R2, double x,
                              std::size_t modes) {
    MobiusMapParams map = mobius_concentric_map(R1, R2, x);
    const std::size_t dim = 2 * modes + 1;
    linalg::DenseMatrix A(dim, dim), B(dim, dim);
    // Dirichlet energy of the harmonic extension of the trace, i.e. the
    // DtN quadratic form in the real Fourier basis on |w| = 1.
    A(0, 0) = 2.0 * M_PI * dtn_mode_concentric(map.rho, 0);
    for (std::size_t m = 1; m <= modes; ++m) {
        double sigma = M_PI * dtn_mode_concentric(map.rho, unsigned(m));
        A(2 * m - 1, 2 * m - 1) = sigma;
        A(2 * m, 2 * m) = sigma;
    }
    // Weighted Gram matrix by the periodic trapezoid rule (spectrally
    // accurate for the analytic weight).
    const std::size_t q = 4 * modes;
    std::vector<double> basis(dim);
    for (std::size_t node = 0; node < q; ++node) {
        double theta = 2.0 * M_PI * double(node) / double(q);
        double w = map.boundary_weight(theta) * (2.0 * M_PI / double(q));
        basis[0] = 1.0;
        for (std::size_t m = 1; m <= modes; ++m) {
            basis[2 * m - 1] = std::cos(double(m) * theta);
            basis[2 * m] = std::sin(double(m) * theta);
        }
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i; j < dim; ++j) {
                double v = w * basis[i] * basis[j];
                B(i, j) += v;
                if (i != j) B(j, i) += v;
            }
    }
    return linalg::smallest_generalized_eigenvalue(A, B);
}

namespace {

// Deterministic pseudo-random start vector; a fixed seed keeps runs
// bitwise reproducible while avoiding accidental orthogonality to the
// target eigenspace on symmetric meshes.
std::vector<double> start_vector(std::size_t n) {
    std::mt19937_64 rng(0x416e6e53706563ULL);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& c : v) c = uni(rng);
    return v;
}

void deflate_constant(std::vector<double>& v, const std::vector<double>& mdiag,
                      double mtotal) {
    double proj = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) proj += mdiag[i] * v[i];
    proj /= mtotal;
    for (auto& c : v) c -= proj;
}

} // namespace

double fem_neumann_mu1(const Mesh& mesh, double tol, std::size_t max_iters) {
    P1System sys = assemble_p1(mesh);
    const std::size_t n = mesh.vertices.size();
    std::vector<double> mdiag = sys.mass.diagonal();
    double mtotal = 0.0;
    for (double d : mdiag) mtotal += d;

    // Shifted operator K + sigma M keeps CG on a definite system even
    // though K itself is singular (constant mode).
    double sigma = 1e-8 * (sys.stiffness.trace() / sys.mass.trace());
    linalg::SparseMatrix shifted(n);
    for (const auto& t : mesh.triangles) {
        const auto& p0 = mesh.vertices[t[0]];
        const auto& p1 = mesh.vertices[t[1]];
        const auto& p2 = mesh.vertices[t[2]];
        double area = Mesh::triangle_area(p0, p1, p2);
        double bx[3] = {p1[1] - p2[1], p2[1] - p0[1], p0[1] - p1[1]};
        double by[3] = {p2[0] - p1[0], p0[0] - p2[0], p1[0] - p0[0]};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                shifted.add(t[a], t[b],
                            (bx[a] * bx[b] + by[a] * by[b]) / (4.0 * area));
    }
    for (std::size_t i = 0; i < n; ++i) shifted.add(i, i, sigma * mdiag[i]);
    shifted.finalize();

    std::vector<double> v = start_vector(n);
    deflate_constant(v, mdiag, mtotal);
    double nv = linalg::norm2(v);
    for (auto& c : v) c /= nv;

    double mu = 0.0, mu_prev = -1.0;
    std::vector<double> x(n, 0.0);
    for (std::size_t it = 0; it < max_iters; ++it) {
        std::vector<double> rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = mdiag[i] * v[i];
        linalg::CgResult solve = linalg::conjugate_gradient(shifted, rhs, x, 1e-12);
        x = solve.x;
        deflate_constant(x, mdiag, mtotal);
        double mnorm = 0.0;
        for (std::size_t i = 0; i < n; ++i) mnorm += mdiag[i] * x[i] * x[i];
        mnorm = std::sqrt(mnorm);
        for (std::size_t i = 0; i < n; ++i) v[i] = x[i] / mnorm;
        std::vector<double> kv = sys.stiffness.multiply(v);
        double num = linalg::dot(v, kv), den = 0.0;
        for (std::size_t i = 0; i < n; ++i) den += mdiag[i] * v[i] * v[i];
        mu = num / den;
        if (mu_prev > 0.0 && std::abs(mu - mu_prev) < tol * std::abs(mu)) break;
        mu_prev = mu;
    }
    return mu;
}

double fem_steklov_tau1(const Mesh& mesh, double tol, std::size_t max_iters) {
    P1System sys = assemble_p1(mesh);
    const std::size_t n = mesh.vertices.size();

    // Eliminate the inner (Dirichlet) boundary.
    std::vector<bool> clamped(n, false);
    for (std::size_t v : mesh.boundary_inner) clamped[v] = true;
    std::vector<std::size_t> to_reduced(n, SIZE_MAX), to_full;
    for (std::size_t i = 0; i < n; ++i)
        if (!clamped[i]) {
            to_reduced[i] = to_full.size();
            to_full.push_back(i);
        }
    const std::size_t m = to_full.size();

    linalg::SparseMatrix K(m), Mb(m);
    // Re-assemble reduced matrices from the mesh (row/column deletion).
    for (const auto& t : mesh.triangles) {
        const auto& p0 = mesh.vertices[t[0]];
        const auto& p1 = mesh.vertices[t[1]];
        const auto& p2 = mesh.vertices[t[2]];
        double area = Mesh::triangle_area(p0, p1, p2);
        double bx[3] = {p1[1] - p2[1], p2[1] - p0[1], p0[1] - p1[1]};
        double by[3] = {p2[0] - p1[0], p0[0] - p2[0], p1[0] - p0[0]};
        for (int a = 0; a < 3; ++a) {
            if (clamped[t[a]]) continue;
            for (int b = 0; b < 3; ++b) {
                if (clamped[t[b]]) continue;
                double kv = (bx[a] * bx[b] + by[a] * by[b]) / (4.0 * area);
                K.add(to_reduced[t[a]], to_reduced[t[b]], kv);
            }
        }
    }
    for (std::size_t j = 0; j < mesh.boundary_outer.size(); ++j) {
        std::size_t a = mesh.boundary_outer[j];
        std::size_t b = mesh.boundary_outer[(j + 1) % mesh.boundary_outer.size()];
        const auto& pa = mesh.vertices[a];
        const auto& pb = mesh.vertices[b];
        double len = std::hypot(pb[0] - pa[0], pb[1] - pa[1]);
        if (!clamped[a]) Mb.add(to_reduced[a], to_reduced[a], 0.5 * len);
        if (!clamped[b]) Mb.add(to_reduced[b], to_reduced[b], 0.5 * len);
    }
    K.finalize();
    Mb.finalize();
    std::vector<double> mb_diag = Mb.diagonal();

    // Inverse iteration on K^{-1} Mb: converges to the largest eigenvalue
    // of the compact side, i.e. the smallest Steklov eigenvalue.
    std::vector<double> v(m, 1.0);
    std::vector<double> x(m, 0.0);
    double tau = 0.0, tau_prev = -1.0;
    for (std::size_t it = 0; it < max_iters; ++it) {
        std::vector<double> rhs(m);
        for (std::size_t i = 0; i < m; ++i) rhs[i] = mb_diag[i] * v[i];
        linalg::CgResult solve = linalg::conjugate_gradient(K, rhs, x, 1e-12);
        x = solve.x;
        double bnorm = 0.0;
        for (std::size_t i = 0; i < m; ++i) bnorm += mb_diag[i] * x[i] * x[i];
        bnorm = std::sqrt(bnorm);
        for (std::size_t i = 0; i < m; ++i) v[i] = x[i] / bnorm;
        std::vector<double> kv = K.multiply(v);
        double num = linalg::dot(v, kv), den = 0.0;
        for (std::size_t i = 0; i < m; ++i) den += mb_diag[i] * v[i] * v[i];
        tau = num / den;
        if (tau_prev > 0.0 && std::abs(tau - tau_prev) < tol * std::abs(tau)) break;
        tau_prev = tau;
    }
    return tau;
}

} // namespace annspec::oracle2d
