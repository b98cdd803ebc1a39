#ifndef TRIPOTENT_MATRIX_HPP
#define TRIPOTENT_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "tripotent/errors.hpp"

namespace tripotent {

using Complex = std::complex<double>;

// Numerical thresholds shared across the library.
//
//   eq_tol        scale-aware approximate equality (see approx_eq)
//   rank_rel_tol  relative singular-value cutoff; 0 means the automatic
//                 default max(rows, cols) * 2^-52
//   eig_class_tol snapping distance when eigenvalues are matched against a
//                 small target set such as {-1, 0, 1}
struct ToleranceConfig {
    double eq_tol = 1e-10;
    double rank_rel_tol = 0.0;
    double eig_class_tol = 1e-8;

    // Throws InvalidInputError if any field is negative or non-finite.
    void validate() const;

    // Effective cutoff factor for a rows x cols matrix.
    double rank_cutoff_factor(std::size_t rows, std::size_t cols) const;
};

// Dense complex matrix, row-major storage. Values are immutable after
// construction; every operation returns a fresh matrix. Construction rejects
// NaN and infinite entries.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(const std::vector<Complex>& d);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::size_t size() const { return entries_.size(); }

    const Complex& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    const std::vector<Complex>& entries() const { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix conj_transpose(const ComplexMatrix& a);
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const Complex& c, const ComplexMatrix& a);

// a^k by repeated multiplication, k >= 0; a^0 is the identity.
ComplexMatrix mat_pow(const ComplexMatrix& a, std::size_t k);

// Contiguous nr x nc submatrix with top-left corner (r0, c0).
ComplexMatrix block(const ComplexMatrix& a, std::size_t r0, std::size_t c0,
                    std::size_t nr, std::size_t nc);

// Columns of a followed by columns of b (row counts must match).
ComplexMatrix hcat(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Frobenius distance normalized by max(1, |a|_F, |b|_F). approx_eq compares
// this value against eq_tol, so it is also the residual the CLI reports.
double relative_distance(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_eq(const ComplexMatrix& a, const ComplexMatrix& b,
               const ToleranceConfig& cfg);

// Count of singular values above rank_cutoff_factor * sigma_max.
std::size_t numerical_rank(const ComplexMatrix& a, const ToleranceConfig& cfg);

// Same cutoff rule applied to an already-computed singular value list
// (nonincreasing order expected).
std::size_t rank_from_singular_values(const std::vector<double>& sv,
                                      std::size_t rows, std::size_t cols,
                                      const ToleranceConfig& cfg);

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return mat_mul(a, b);
}
inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    return mat_add(a, b);
}
inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    return mat_sub(a, b);
}
inline ComplexMatrix operator*(const Complex& c, const ComplexMatrix& a) {
    return scale(c, a);
}
inline ComplexMatrix operator*(double c, const ComplexMatrix& a) {
    return scale(Complex(c, 0.0), a);
}

} // namespace tripotent

#endif
