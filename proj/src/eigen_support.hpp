#ifndef TRIPOTENT_EIGEN_SUPPORT_HPP
#define TRIPOTENT_EIGEN_SUPPORT_HPP

// Internal bridge between ComplexMatrix and Eigen. Not installed; only the
// .cpp files include this, so Eigen never appears in the public headers.

#include <Eigen/Dense>

#include "tripotent/matrix.hpp"

namespace tripotent {
namespace detail {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
    Eigen::MatrixXcd m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
        }
    }
    return m;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
    std::vector<Complex> entries(static_cast<std::size_t>(m.rows() * m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(m.cols()) +
                    static_cast<std::size_t>(j)] = m(i, j);
        }
    }
    return ComplexMatrix(static_cast<std::size_t>(m.rows()),
                         static_cast<std::size_t>(m.cols()), std::move(entries));
}

} // namespace detail
} // namespace tripotent

#endif
