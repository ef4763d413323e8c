#include "annspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace annspec::linalg {

double DenseMatrix::max_asymmetry() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    return worst;
}

void SparseMatrix::add(std::size_t i, std::size_t j, double v) {
    if (finalized_)
        throw std::runtime_error("SparseMatrix: add after finalize");
    if (i >= n_ || j >= n_)
        throw std::runtime_error("SparseMatrix: index out of range");
    ti_.push_back(i);
    tj_.push_back(j);
    tv_.push_back(v);
}

void SparseMatrix::finalize() {
    if (finalized_) return;
    std::vector<std::size_t> order(ti_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ti_[a] != ti_[b] ? ti_[a] < ti_[b] : tj_[a] < tj_[b];
    });
    row_ptr_.assign(n_ + 1, 0);
    col_.clear();
    val_.clear();
    std::size_t current_row = 0;
    std::size_t last_i = n_, last_j = n_; // sentinel
    for (std::size_t idx : order) {
        std::size_t i = ti_[idx], j = tj_[idx];
        while (current_row < i) row_ptr_[++current_row] = col_.size();
        if (i == last_i && j == last_j) {
            val_.back() += tv_[idx];
        } else {
            col_.push_back(j);
            val_.push_back(tv_[idx]);
            last_i = i;
            last_j = j;
        }
    }
    while (current_row < n_) row_ptr_[++current_row] = col_.size();
    ti_.clear();
    tj_.clear();
    tv_.clear();
    finalized_ = true;
}

std::vector<double> SparseMatrix::multiply(const std::vector<double>& x) const {
    if (!finalized_)
        throw std::runtime_error("SparseMatrix: multiply before finalize");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double acc = 0.0;
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
            acc += val_[p] * x[col_[p]];
        y[i] = acc;
    }
    return y;
}

double SparseMatrix::trace() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
            if (col_[p] == i) acc += val_[p];
    return acc;
}

std::vector<double> SparseMatrix::diagonal() const {
    std::vector<double> d(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
            if (col_[p] == i) d[i] += val_[p];
    return d;
}

DenseMatrix cholesky(const DenseMatrix& a) {
    const std::size_t n = a.rows();
    DenseMatrix L(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double acc = a(i, j);
            for (std::size_t k = 0; k < j; ++k) acc -= L(i, k) * L(j, k);
            if (i == j) {
                if (acc <= 0.0)
                    throw std::runtime_error("cholesky: matrix not positive definite");
                L(i, j) = std::sqrt(acc);
            } else {
                L(i, j) = acc / L(j, j);
            }
        }
    }
    return L;
}

std::vector<double> cholesky_solve_lower(const DenseMatrix& L,
                                         const std::vector<double>& b) {
    const std::size_t n = L.rows();
    std::vector<double> y(b);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) y[i] -= L(i, k) * y[k];
        y[i] /= L(i, i);
    }
    return y;
}

std::vector<double> cholesky_solve_upper(const DenseMatrix& L,
                                         const std::vector<double>& b) {
    const std::size_t n = L.rows();
    std::vector<double> x(b);
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t k = ii + 1; k < n; ++k) x[ii] -= L(k, ii) * x[k];
        x[ii] /= L(ii, ii);
    }
    return x;
}

SymmetricEigen jacobi_eigen(DenseMatrix a, double tol, std::size_t max_sweeps) {
    const std::size_t n = a.rows();
    DenseMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) q(i, i) = 1.0;

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scale = std::max(scale, std::abs(a(i, j)));
    if (scale == 0.0) scale = 1.0;

    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                off = std::max(off, std::abs(a(i, j)));
        if (off <= tol * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t qi = p + 1; qi < n; ++qi) {
                double apq = a(p, qi);
                if (std::abs(apq) <= 1e-300) continue;
                double theta = (a(qi, qi) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, qi);
                    a(k, p) = c * akp - s * akq;
                    a(k, qi) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(qi, k);
                    a(p, k) = c * apk - s * aqk;
                    a(qi, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double qkp = q(k, p), qkq = q(k, qi);
                    q(k, p) = c * qkp - s * qkq;
                    q(k, qi) = s * qkp + c * qkq;
                }
            }
        }
    }

    SymmetricEigen result;
    result.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) result.values[i] = a(i, i);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return result.values[x] < result.values[y];
    });
    SymmetricEigen sorted;
    sorted.values.resize(n);
    sorted.vectors = DenseMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        sorted.values[c] = result.values[order[c]];
        for (std::size_t r = 0; r < n; ++r) sorted.vectors(r, c) = q(r, order[c]);
    }
    return sorted;
}

double smallest_generalized_eigenvalue(const DenseMatrix& a,
                                       const DenseMatrix& b) {
    const std::size_t n = a.rows();
    DenseMatrix L = cholesky(b);
    // C = L^{-1} A L^{-T}, assembled column by column.
    DenseMatrix c(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> e(n, 0.0);
        e[j] = 1.0;
        std::vector<double> w = cholesky_solve_upper(L, e); // w = L^{-T} e_j
        std::vector<double> aw(n, 0.0);
        for (std::size_t r = 0; r < n; ++r) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += a(r, k) * w[k];
            aw[r] = acc;
        }
        std::vector<double> cj = cholesky_solve_lower(L, aw);
        for (std::size_t r = 0; r < n; ++r) c(r, j) = cj[r];
    }
    // Symmetrize away roundoff before Jacobi.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = 0.5 * (c(i, j) + c(j, i));
            c(i, j) = v;
            c(j, i) = v;
        }
    return jacobi_eigen(std::move(c)).values.front();
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

CgResult conjugate_gradient(const SparseMatrix& a, const std::vector<double>& b,
                            const std::vector<double>& x0, double rel_tol,
                            std::size_t max_iters) {
    const std::size_t n = a.size();
    if (max_iters == 0) max_iters = 10 * n;
    CgResult result;
    result.x = x0;
    std::vector<double> r = a.multiply(result.x);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
    double bnorm = norm2(b);
    if (bnorm == 0.0) {
        result.x.assign(n, 0.0);
        result.iterations = 0;
        result.relative_residual = 0.0;
        return result;
    }
    std::vector<double> p = r;
    double rs = dot(r, r);
    result.iterations = 0;
    while (result.iterations < max_iters && std::sqrt(rs) > rel_tol * bnorm) {
        std::vector<double> ap = a.multiply(p);
        double alpha = rs / dot(p, ap);
        for (std::size_t i = 0; i < n; ++i) {
            result.x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        double rs_new = dot(r, r);
        double beta = rs_new / rs;
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
        rs = rs_new;
        ++result.iterations;
    }
    result.relative_residual = std::sqrt(rs) / bnorm;
    if (result.relative_residual > rel_tol * 10.0)
        throw std::runtime_error("conjugate_gradient: no convergence");
    return result;
}

} // namespace annspec::linalg
