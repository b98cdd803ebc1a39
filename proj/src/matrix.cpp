#include "tripotent/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "eigen_support.hpp"

namespace tripotent {

namespace {

void check_finite(const std::vector<Complex>& entries) {
    for (const Complex& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidInputError("matrix entry is not finite");
        }
    }
}

} // namespace

void ToleranceConfig::validate() const {
    auto bad = [](double v) { return !(v >= 0.0) || !std::isfinite(v); };
    if (bad(eq_tol) || bad(rank_rel_tol) || bad(eig_class_tol)) {
        throw InvalidInputError("tolerance fields must be finite and nonnegative");
    }
}

double ToleranceConfig::rank_cutoff_factor(std::size_t rows, std::size_t cols) const {
    if (rank_rel_tol > 0.0) return rank_rel_tol;
    return static_cast<double>(std::max(rows, cols)) *
           std::numeric_limits<double>::epsilon();
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("entry count does not match rows * cols");
    }
    check_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Complex(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.entries_[i * d.size() + i] = d[i];
    check_finite(m.entries_);
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    std::vector<Complex> c(d.begin(), d.end());
    return diagonal(c);
}

ComplexMatrix conj_transpose(const ComplexMatrix& a) {
    std::vector<Complex> out(a.size());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out[j * a.rows() + i] = std::conj(a(i, j));
        }
    }
    return ComplexMatrix(a.cols(), a.rows(), std::move(out));
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mat_mul: inner dimensions disagree");
    }
    std::vector<Complex> out(a.rows() * b.cols(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out[i * b.cols() + j] += aik * b(k, j);
            }
        }
    }
    return ComplexMatrix(a.rows(), b.cols(), std::move(out));
}

ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("mat_add: shapes disagree");
    }
    std::vector<Complex> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.entries()[i] + b.entries()[i];
    return ComplexMatrix(a.rows(), a.cols(), std::move(out));
}

ComplexMatrix mat_sub(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("mat_sub: shapes disagree");
    }
    std::vector<Complex> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.entries()[i] - b.entries()[i];
    return ComplexMatrix(a.rows(), a.cols(), std::move(out));
}

ComplexMatrix scale(const Complex& c, const ComplexMatrix& a) {
    std::vector<Complex> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a.entries()[i];
    return ComplexMatrix(a.rows(), a.cols(), std::move(out));
}

ComplexMatrix mat_pow(const ComplexMatrix& a, std::size_t k) {
    if (!a.is_square()) throw DimensionError("mat_pow: matrix must be square");
    ComplexMatrix result = ComplexMatrix::identity(a.rows());
    for (std::size_t i = 0; i < k; ++i) result = mat_mul(result, a);
    return result;
}

ComplexMatrix block(const ComplexMatrix& a, std::size_t r0, std::size_t c0,
                    std::size_t nr, std::size_t nc) {
    if (r0 + nr > a.rows() || c0 + nc > a.cols()) {
        throw DimensionError("block: range exceeds matrix bounds");
    }
    std::vector<Complex> out(nr * nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) out[i * nc + j] = a(r0 + i, c0 + j);
    }
    return ComplexMatrix(nr, nc, std::move(out));
}

ComplexMatrix hcat(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hcat: row counts disagree");
    const std::size_t cols = a.cols() + b.cols();
    std::vector<Complex> out(a.rows() * cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out[i * cols + j] = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out[i * cols + a.cols() + j] = b(i, j);
    }
    return ComplexMatrix(a.rows(), cols, std::move(out));
}

Complex trace(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("trace: matrix must be square");
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Complex& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("frobenius_distance: shapes disagree");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::norm(a.entries()[i] - b.entries()[i]);
    }
    return std::sqrt(s);
}

double relative_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    const double d = frobenius_distance(a, b);
    const double s = std::max({1.0, frobenius_norm(a), frobenius_norm(b)});
    return d / s;
}

bool approx_eq(const ComplexMatrix& a, const ComplexMatrix& b,
               const ToleranceConfig& cfg) {
    return relative_distance(a, b) <= cfg.eq_tol;
}

std::size_t rank_from_singular_values(const std::vector<double>& sv,
                                      std::size_t rows, std::size_t cols,
                                      const ToleranceConfig& cfg) {
    if (sv.empty()) return 0;
    const double cutoff = cfg.rank_cutoff_factor(rows, cols) * sv.front();
    std::size_t r = 0;
    for (double s : sv) {
        if (s > cutoff) ++r;
    }
    return r;
}

std::size_t numerical_rank(const ComplexMatrix& a, const ToleranceConfig& cfg) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> solver(detail::to_eigen(a));
    const auto& sv = solver.singularValues();
    std::vector<double> s(sv.data(), sv.data() + sv.size());
    return rank_from_singular_values(s, a.rows(), a.cols(), cfg);
}

} // namespace tripotent
