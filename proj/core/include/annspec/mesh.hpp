#pragma once

#include <array>
#include <functional>
#include <vector>

#include "annspec/linalg.hpp"

namespace annspec::oracle2d {

/// Planar P1 triangulation of a doubly connected domain between an inner
/// circle and a star-shaped outer profile, both described around the
/// origin. Boundary loops are stored as ordered vertex index lists.
struct Mesh {
    std::vector<std::array<double, 2>> vertices;
    std::vector<std::array<std::size_t, 3>> triangles; // positively oriented
    std::vector<std::size_t> boundary_inner;
    std::vector<std::size_t> boundary_outer;

    double total_area() const;
    double outer_boundary_length() const;
    static double triangle_area(const std::array<double, 2>& a,
                                const std::array<double, 2>& b,
                                const std::array<double, 2>& c);
};

/// Tensor-product mesh: n_theta spokes, n_r radial layers blending from
/// the inner circle of radius r_inner to the outer profile R(theta).
/// Throws std::runtime_error on inverted cells.
Mesh build_transfinite_mesh(double r_inner,
                            const std::function<double(double)>& outer_profile,
                            std::size_t n_r, std::size_t n_theta);

/// P1 stiffness matrix, lumped mass matrix and outer-boundary lumped
/// mass matrix.
struct P1System {
    linalg::SparseMatrix stiffness;
    linalg::SparseMatrix mass;        // diagonal (lumped)
    linalg::SparseMatrix outer_mass;  // diagonal, supported on boundary_outer
};
P1System assemble_p1(const Mesh& mesh);

} // namespace annspec::oracle2d
