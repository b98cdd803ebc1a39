#ifndef TRIPOTENT_DECOMPOSE_HPP
#define TRIPOTENT_DECOMPOSE_HPP

#include <cstddef>
#include <vector>

#include "tripotent/matrix.hpp"

namespace tripotent {

// Full singular value decomposition a = u * diag(singular_values) * v^*,
// u rows x rows unitary, v cols x cols unitary, values nonincreasing.
struct SvdResult {
    ComplexMatrix u;
    std::vector<double> singular_values;
    ComplexMatrix v;
};

// Canonical form of a square matrix of numerical rank r:
//
//   a = u * [ diag(sigma) * k   diag(sigma) * l ] * u^*
//           [        0                 0        ]
//
// with u n x n unitary, sigma the r positive singular values, k r x r,
// l r x (n - r), and k k^* + l l^* = I_r. For r = 0 (the zero matrix)
// u = I_n and sigma, k, l are empty.
struct HSDecomposition {
    ComplexMatrix u;
    std::vector<double> sigma;
    ComplexMatrix k;
    ComplexMatrix l;
    std::size_t r = 0;

    std::size_t n() const { return u.rows(); }
};

// Eigendecomposition of a Hermitian matrix: a = q * diag(eigenvalues) * q^*,
// eigenvalues real and nonincreasing, q unitary.
struct HermEig {
    ComplexMatrix q;
    std::vector<double> eigenvalues;
};

// Which Gram matrix gram_power starts from: Left is a a^*, Right is a^* a.
enum class GramSide { Left, Right };

SvdResult svd(const ComplexMatrix& a);

// Moore-Penrose inverse via the SVD: reciprocals of the singular values that
// pass the numerical-rank cutoff, zeros for the rest.
ComplexMatrix mp_inverse(const ComplexMatrix& a, const ToleranceConfig& cfg);

HSDecomposition hs_decompose(const ComplexMatrix& a, const ToleranceConfig& cfg);

// Reassembles the matrix an HSDecomposition describes. Test/diagnostic aid.
ComplexMatrix hs_reconstruct(const HSDecomposition& d);

// Moore-Penrose inverse assembled from the canonical form:
//
//   a^+ = u * [ k^* diag(sigma)^-1   0 ] * u^*
//             [ l^* diag(sigma)^-1   0 ]
//
// Second, independent route to the same value as mp_inverse.
ComplexMatrix mp_via_hs(const HSDecomposition& d);

// Throws NotHermitianError unless a equals a^* within eq_tol and
// ConvergenceError if the iterative kernel fails.
HermEig herm_eig(const ComplexMatrix& a, const ToleranceConfig& cfg);

// (a a^*)^s or (a^* a)^s for integer s. Negative exponents follow the
// generalized-inverse convention g^-m = (g^+)^m; s = 0 gives the identity.
ComplexMatrix gram_power(const ComplexMatrix& a, GramSide side, long long s,
                         const ToleranceConfig& cfg);

// Eigenvalues of a general square matrix, unordered.
std::vector<Complex> eigenvalues(const ComplexMatrix& a);

} // namespace tripotent

#endif
