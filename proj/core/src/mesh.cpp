#include "annspec/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace annspec::oracle2d {

double Mesh::triangle_area(const std::array<double, 2>& a,
                           const std::array<double, 2>& b,
                           const std::array<double, 2>& c) {
    return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
}

double Mesh::total_area() const {
    double acc = 0.0;
    for (const auto& t : triangles)
        acc += triangle_area(vertices[t[0]], vertices[t[1]], vertices[t[2]]);
    return acc;
}

double Mesh::outer_boundary_length() const {
    double acc = 0.0;
    for (std::size_t j = 0; j < boundary_outer.size(); ++j) {
        const auto& a = vertices[boundary_outer[j]];
        const auto& b = vertices[boundary_outer[(j + 1) % boundary_outer.size()]];
        acc += std::hypot(b[0] - a[0], b[1] - a[1]);
    }
    return acc;
}

Mesh build_transfinite_mesh(double r_inner,
                            const std::function<double(double)>& outer_profile,
                            std::size_t n_r, std::size_t n_theta) {
    if (n_r < 4 || n_theta < 4)
        throw std::domain_error("build_transfinite_mesh: n_r, n_theta must be >= 4");
    Mesh mesh;
    mesh.vertices.reserve((n_r + 1) * n_theta);
    for (std::size_t i = 0; i <= n_r; ++i) {
        double blend = double(i) / double(n_r);
        for (std::size_t j = 0; j < n_theta; ++j) {
            double theta = 2.0 * M_PI * double(j) / double(n_theta);
            double R = outer_profile(theta);
            if (!(R > r_inner))
                throw std::domain_error(
                    "build_transfinite_mesh: outer profile must exceed r_inner");
            double r = r_inner + blend * (R - r_inner);
            mesh.vertices.push_back({r * std::cos(theta), r * std::sin(theta)});
        }
    }
    auto vid = [n_theta](std::size_t i, std::size_t j) {
        return i * n_theta + (j % n_theta);
    };
    mesh.triangles.reserve(2 * n_r * n_theta);
    for (std::size_t i = 0; i < n_r; ++i) {
        for (std::size_t j = 0; j < n_theta; ++j) {
            std::size_t v00 = vid(i, j), v10 = vid(i + 1, j);
            std::size_t v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
            mesh.triangles.push_back({v00, v10, v11});
            mesh.triangles.push_back({v00, v11, v01});
        }
    }
    for (const auto& t : mesh.triangles) {
        if (Mesh::triangle_area(mesh.vertices[t[0]], mesh.vertices[t[1]],
                                mesh.vertices[t[2]]) <= 0.0)
            throw std::runtime_error("build_transfinite_mesh: inverted cell");
    }
    mesh.boundary_inner.resize(n_theta);
    mesh.boundary_outer.resize(n_theta);
    for (std::size_t j = 0; j < n_theta; ++j) {
        mesh.boundary_inner[j] = vid(0, j);
        mesh.boundary_outer[j] = vid(n_r, j);
    }
    return mesh;
}

P1System assemble_p1(const Mesh& mesh) {
    const std::size_t n = mesh.vertices.size();
    P1System sys{linalg::SparseMatrix(n), linalg::SparseMatrix(n),
                 linalg::SparseMatrix(n)};
    for (const auto& t : mesh.triangles) {
        const auto& p0 = mesh.vertices[t[0]];
        const auto& p1 = mesh.vertices[t[1]];
        const auto& p2 = mesh.vertices[t[2]];
        double area = Mesh::triangle_area(p0, p1, p2);
        if (area <= 0.0)
            throw std::runtime_error("assemble_p1: degenerate triangle");
        // Gradients of the barycentric hat functions.
        double bx[3] = {p1[1] - p2[1], p2[1] - p0[1], p0[1] - p1[1]};
        double by[3] = {p2[0] - p1[0], p0[0] - p2[0], p1[0] - p0[0]};
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                double k = (bx[a] * bx[b] + by[a] * by[b]) / (4.0 * area);
                sys.stiffness.add(t[a], t[b], k);
            }
            sys.mass.add(t[a], t[a], area / 3.0); // lumped
        }
    }
    for (std::size_t j = 0; j < mesh.boundary_outer.size(); ++j) {
        std::size_t a = mesh.boundary_outer[j];
        std::size_t b = mesh.boundary_outer[(j + 1) % mesh.boundary_outer.size()];
        const auto& pa = mesh.vertices[a];
        const auto& pb = mesh.vertices[b];
        double len = std::hypot(pb[0] - pa[0], pb[1] - pa[1]);
        sys.outer_mass.add(a, a, 0.5 * len);
        sys.outer_mass.add(b, b, 0.5 * len);
    }
    sys.stiffness.finalize();
    sys.mass.finalize();
    sys.outer_mass.finalize();
    return sys;
}

} // namespace annspec::oracle2d
