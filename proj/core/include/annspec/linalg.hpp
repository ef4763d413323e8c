#pragma once

#include <cstddef>
#include <vector>

namespace annspec::linalg {

/// Row-major dense matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double max_asymmetry() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

/// Compressed-row sparse matrix, built from triplets.
class SparseMatrix {
public:
    SparseMatrix() = default;
    explicit SparseMatrix(std::size_t n) : n_(n) {}

    std::size_t size() const { return n_; }
    void add(std::size_t i, std::size_t j, double v); // accumulate triplet
    void finalize();                                  // build CSR, merge duplicates

    std::vector<double> multiply(const std::vector<double>& x) const;
    double trace() const;
    std::vector<double> diagonal() const;

private:
    std::size_t n_ = 0;
    bool finalized_ = false;
    std::vector<std::size_t> ti_, tj_; // triplets before finalize
    std::vector<double> tv_;
    std::vector<std::size_t> row_ptr_, col_;
    std::vector<double> val_;
};

/// In-place lower Cholesky factor of a symmetric positive definite
/// matrix. Throws std::runtime_error if a pivot is non-positive.
DenseMatrix cholesky(const DenseMatrix& a);

/// Solves L y = b (forward) and L^T x = y (backward).
std::vector<double> cholesky_solve_lower(const DenseMatrix& L,
                                         const std::vector<double>& b);
std::vector<double> cholesky_solve_upper(const DenseMatrix& L,
                                         const std::vector<double>& b);

/// Eigen-decomposition of a symmetric dense matrix by cyclic Jacobi
/// rotations. Eigenvalues ascending; columns of `vectors` matching.
struct SymmetricEigen {
    std::vector<double> values;
    DenseMatrix vectors;
};
SymmetricEigen jacobi_eigen(DenseMatrix a, double tol = 1e-14,
                            std::size_t max_sweeps = 64);

/// Smallest generalized eigenvalue of A c = lambda B c with A symmetric
/// and B symmetric positive definite, via Cholesky reduction of B and
/// Jacobi diagonalization.
double smallest_generalized_eigenvalue(const DenseMatrix& a,
                                       const DenseMatrix& b);

/// Conjugate gradient for s.p.d. systems; relative residual target.
struct CgResult {
    std::vector<double> x;
    std::size_t iterations;
    double relative_residual;
};
CgResult conjugate_gradient(const SparseMatrix& a, const std::vector<double>& b,
                            const std::vector<double>& x0,
                            double rel_tol = 1e-12,
                            std::size_t max_iters = 0 /* 0 -> 10n */);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);

} // namespace annspec::linalg
