#include "tripotent/decompose.hpp"

#include <cmath>
#include <cstdlib>

#include "eigen_support.hpp"

namespace tripotent {

SvdResult svd(const ComplexMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) {
        return SvdResult{ComplexMatrix::identity(a.rows()), {},
                         ComplexMatrix::identity(a.cols())};
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> solver(
        detail::to_eigen(a), Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("svd: iteration did not converge");
    }
    const auto& sv = solver.singularValues();
    return SvdResult{detail::from_eigen(solver.matrixU()),
                     std::vector<double>(sv.data(), sv.data() + sv.size()),
                     detail::from_eigen(solver.matrixV())};
}

ComplexMatrix mp_inverse(const ComplexMatrix& a, const ToleranceConfig& cfg) {
    if (a.rows() == 0 || a.cols() == 0) {
        return ComplexMatrix::zero(a.cols(), a.rows());
    }
    const SvdResult s = svd(a);
    const std::size_t r =
        rank_from_singular_values(s.singular_values, a.rows(), a.cols(), cfg);
    // a^+ = sum over retained values of (1 / sigma_i) v_i u_i^*
    std::vector<Complex> out(a.cols() * a.rows(), Complex(0.0, 0.0));
    for (std::size_t t = 0; t < r; ++t) {
        const double inv = 1.0 / s.singular_values[t];
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const Complex vi = s.v(i, t) * inv;
            for (std::size_t j = 0; j < a.rows(); ++j) {
                out[i * a.rows() + j] += vi * std::conj(s.u(j, t));
            }
        }
    }
    return ComplexMatrix(a.cols(), a.rows(), std::move(out));
}

HSDecomposition hs_decompose(const ComplexMatrix& a, const ToleranceConfig& cfg) {
    if (!a.is_square()) {
        throw DimensionError("hs_decompose: matrix must be square");
    }
    const std::size_t n = a.rows();
    const SvdResult s = svd(a);
    const std::size_t r = rank_from_singular_values(s.singular_values, n, n, cfg);
    if (r == 0) {
        return HSDecomposition{ComplexMatrix::identity(n), {},
                               ComplexMatrix::zero(0, 0), ComplexMatrix::zero(0, n), 0};
    }
    // With a = u_svd S v_svd^*, conjugating by u_svd gives
    //   u_svd^* a u_svd = S (v_svd^* u_svd),
    // whose top r rows are [ sigma k | sigma l ] with [k l] the first r rows
    // of the unitary v_svd^* u_svd, so k k^* + l l^* = I_r automatically.
    const ComplexMatrix g = mat_mul(conj_transpose(s.v), s.u);
    HSDecomposition d;
    d.u = s.u;
    d.sigma.assign(s.singular_values.begin(), s.singular_values.begin() + r);
    d.k = block(g, 0, 0, r, r);
    d.l = block(g, 0, r, r, n - r);
    d.r = r;
    return d;
}

ComplexMatrix hs_reconstruct(const HSDecomposition& d) {
    const std::size_t n = d.n();
    const std::size_t r = d.r;
    std::vector<Complex> entries(n * n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) entries[i * n + j] = d.sigma[i] * d.k(i, j);
        for (std::size_t j = 0; j < n - r; ++j) {
            entries[i * n + r + j] = d.sigma[i] * d.l(i, j);
        }
    }
    const ComplexMatrix core(n, n, std::move(entries));
    return mat_mul(mat_mul(d.u, core), conj_transpose(d.u));
}

ComplexMatrix mp_via_hs(const HSDecomposition& d) {
    const std::size_t n = d.n();
    const std::size_t r = d.r;
    std::vector<Complex> entries(n * n, Complex(0.0, 0.0));
    // First r columns hold k^* diag(sigma)^-1 stacked on l^* diag(sigma)^-1.
    for (std::size_t j = 0; j < r; ++j) {
        const double inv = 1.0 / d.sigma[j];
        for (std::size_t i = 0; i < r; ++i) {
            entries[i * n + j] = std::conj(d.k(j, i)) * inv;
        }
        for (std::size_t i = 0; i < n - r; ++i) {
            entries[(r + i) * n + j] = std::conj(d.l(j, i)) * inv;
        }
    }
    const ComplexMatrix core(n, n, std::move(entries));
    return mat_mul(mat_mul(d.u, core), conj_transpose(d.u));
}

HermEig herm_eig(const ComplexMatrix& a, const ToleranceConfig& cfg) {
    if (!a.is_square()) throw DimensionError("herm_eig: matrix must be square");
    const ComplexMatrix astar = conj_transpose(a);
    if (!approx_eq(a, astar, cfg)) {
        throw NotHermitianError("herm_eig: matrix is not Hermitian within eq_tol");
    }
    const std::size_t n = a.rows();
    if (n == 0) return HermEig{ComplexMatrix::identity(0), {}};
    // Symmetrize before solving so tolerance-level skew cannot leak through.
    const ComplexMatrix h = scale(Complex(0.5, 0.0), mat_add(a, astar));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(detail::to_eigen(h));
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("herm_eig: iteration cap exceeded");
    }
    // Eigen sorts ascending; flip to nonincreasing along with the columns.
    HermEig e;
    e.eigenvalues.resize(n);
    std::vector<Complex> q(n * n);
    const auto& vals = solver.eigenvalues();
    const auto& vecs = solver.eigenvectors();
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = n - 1 - j;
        e.eigenvalues[j] = vals(static_cast<Eigen::Index>(src));
        for (std::size_t i = 0; i < n; ++i) {
            q[i * n + j] = vecs(static_cast<Eigen::Index>(i),
                                static_cast<Eigen::Index>(src));
        }
    }
    e.q = ComplexMatrix(n, n, std::move(q));
    return e;
}

ComplexMatrix gram_power(const ComplexMatrix& a, GramSide side, long long s,
                         const ToleranceConfig& cfg) {
    if (!a.is_square()) throw DimensionError("gram_power: matrix must be square");
    const std::size_t n = a.rows();
    if (s == 0) return ComplexMatrix::identity(n);
    const ComplexMatrix astar = conj_transpose(a);
    ComplexMatrix g = (side == GramSide::Left) ? mat_mul(a, astar) : mat_mul(astar, a);
    if (s < 0) g = mp_inverse(g, cfg);
    const std::size_t m = static_cast<std::size_t>(s < 0 ? -s : s);
    return mat_pow(g, m);
}

std::vector<Complex> eigenvalues(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("eigenvalues: matrix must be square");
    if (a.rows() == 0) return {};
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(detail::to_eigen(a), false);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("eigenvalues: iteration did not converge");
    }
    const auto& vals = solver.eigenvalues();
    return std::vector<Complex>(vals.data(), vals.data() + vals.size());
}

} // namespace tripotent
