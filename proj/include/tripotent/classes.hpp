#ifndef TRIPOTENT_CLASSES_HPP
#define TRIPOTENT_CLASSES_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "tripotent/decompose.hpp"
#include "tripotent/matrix.hpp"

namespace tripotent {

// Matrix classes recognized by the library, each defined by an equation:
//
//   H        a = a^*                      Hermitian
//   P        a^2 = a                      idempotent
//   OP       a^2 = a = a^*                orthogonal projector
//   TM       a^3 = a                      tripotent
//   N        a a^* = a^* a                normal
//   EP       a a^+ = a^+ a                range-Hermitian
//   MP       a^+ = a                      equals its Moore-Penrose inverse
//   SD       a^+ a^* = a^* a^+            star-dagger
//   PI       a = a a^* a                  partial isometry
//   ThreeOP  a^3 = a = a^*                orthogonal tripotent
enum class ClassLabel { H, P, OP, TM, N, EP, MP, SD, PI, ThreeOP };

inline constexpr std::array<ClassLabel, 10> all_class_labels = {
    ClassLabel::H,  ClassLabel::P,  ClassLabel::OP, ClassLabel::TM,
    ClassLabel::N,  ClassLabel::EP, ClassLabel::MP, ClassLabel::SD,
    ClassLabel::PI, ClassLabel::ThreeOP};

const char* to_string(ClassLabel label);
std::optional<ClassLabel> class_from_string(std::string_view name);

// Inertia of an orthogonal tripotent matrix: counts of eigenvalues snapped
// to +1, -1 and 0. p + q + z = n and p + q = rank.
struct Signature {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t z = 0;

    bool operator==(const Signature&) const = default;
};

// Largest normalized residual among the label's defining equations; the
// matrix is a member exactly when this is <= eq_tol.
double class_residual(const ComplexMatrix& a, ClassLabel label,
                      const ToleranceConfig& cfg);

bool is_member(const ComplexMatrix& a, ClassLabel label,
               const ToleranceConfig& cfg);

// Membership evaluated on the canonical-form factors instead of the matrix:
//   H:       l = 0 and (sigma k)^* = sigma k
//   MP:      l = 0 and (sigma k)^2 = I_r
//   N:       l = 0 and k sigma = sigma k
//   TM:      (sigma k)^2 = I_r
//   EP:      l = 0
//   PI:      sigma = I_r
//   SD:      k sigma = sigma k
//   ThreeOP: l = 0, sigma = I_r, k = k^*
// P and OP have no factor-level criterion and throw UnsupportedLabelError.
// Everything is vacuously true when r = 0.
double hs_class_residual(const HSDecomposition& d, ClassLabel label,
                         const ToleranceConfig& cfg);

bool hs_class_check(const HSDecomposition& d, ClassLabel label,
                    const ToleranceConfig& cfg);

// Eigenvalue counts of an orthogonal tripotent matrix. Throws
// NotThreeOpError when the matrix is not in ThreeOP within tolerance and
// UnclassifiableEigenvalueError when an eigenvalue is further than
// eig_class_tol from every value in {-1, 0, 1}.
Signature signature(const ComplexMatrix& a, const ToleranceConfig& cfg);

// Class that the k-idempotent equation a^k = a collapses to when combined
// with a = a^*: OP for even k, ThreeOP for odd k. Requires k >= 2.
ClassLabel k_idempotent_reduce(long long k);

} // namespace tripotent

#endif
