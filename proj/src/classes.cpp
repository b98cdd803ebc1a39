#include "tripotent/classes.hpp"

#include <algorithm>
#include <cmath>

namespace tripotent {

const char* to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::H: return "H";
        case ClassLabel::P: return "P";
        case ClassLabel::OP: return "OP";
        case ClassLabel::TM: return "TM";
        case ClassLabel::N: return "N";
        case ClassLabel::EP: return "EP";
        case ClassLabel::MP: return "MP";
        case ClassLabel::SD: return "SD";
        case ClassLabel::PI: return "PI";
        case ClassLabel::ThreeOP: return "3OP";
    }
    return "?";
}

std::optional<ClassLabel> class_from_string(std::string_view name) {
    for (ClassLabel label : all_class_labels) {
        if (name == to_string(label)) return label;
    }
    if (name == "ThreeOP" || name == "3-OP") return ClassLabel::ThreeOP;
    return std::nullopt;
}

double class_residual(const ComplexMatrix& a, ClassLabel label,
                      const ToleranceConfig& cfg) {
    if (!a.is_square()) {
        throw DimensionError("class_residual: matrix must be square");
    }
    const ComplexMatrix astar = conj_transpose(a);
    switch (label) {
        case ClassLabel::H:
            return relative_distance(a, astar);
        case ClassLabel::P:
            return relative_distance(mat_mul(a, a), a);
        case ClassLabel::OP:
            return std::max(relative_distance(mat_mul(a, a), a),
                            relative_distance(a, astar));
        case ClassLabel::TM:
            return relative_distance(mat_pow(a, 3), a);
        case ClassLabel::N:
            return relative_distance(mat_mul(a, astar), mat_mul(astar, a));
        case ClassLabel::EP: {
            const ComplexMatrix pinv = mp_inverse(a, cfg);
            return relative_distance(mat_mul(a, pinv), mat_mul(pinv, a));
        }
        case ClassLabel::MP:
            return relative_distance(mp_inverse(a, cfg), a);
        case ClassLabel::SD: {
            const ComplexMatrix pinv = mp_inverse(a, cfg);
            return relative_distance(mat_mul(pinv, astar), mat_mul(astar, pinv));
        }
        case ClassLabel::PI:
            return relative_distance(mat_mul(mat_mul(a, astar), a), a);
        case ClassLabel::ThreeOP:
            return std::max(relative_distance(mat_pow(a, 3), a),
                            relative_distance(a, astar));
    }
    throw InvalidInputError("class_residual: unknown label");
}

bool is_member(const ComplexMatrix& a, ClassLabel label,
               const ToleranceConfig& cfg) {
    return class_residual(a, label, cfg) <= cfg.eq_tol;
}

double hs_class_residual(const HSDecomposition& d, ClassLabel label,
                         const ToleranceConfig& cfg) {
    (void)cfg;
    if (label == ClassLabel::P || label == ClassLabel::OP) {
        throw UnsupportedLabelError(
            "hs_class_check: no factor-level criterion for this label");
    }
    const std::size_t r = d.r;
    if (r == 0) return 0.0;

    const ComplexMatrix sigma = ComplexMatrix::diagonal(d.sigma);
    const ComplexMatrix sk = mat_mul(sigma, d.k);
    const ComplexMatrix i_r = ComplexMatrix::identity(r);
    const ComplexMatrix l_zero = ComplexMatrix::zero(r, d.n() - r);

    auto l_res = [&] { return relative_distance(d.l, l_zero); };
    auto commute_res = [&] {
        return relative_distance(mat_mul(d.k, sigma), sk);
    };

    switch (label) {
        case ClassLabel::H:
            return std::max(l_res(), relative_distance(conj_transpose(sk), sk));
        case ClassLabel::MP:
            return std::max(l_res(), relative_distance(mat_mul(sk, sk), i_r));
        case ClassLabel::N:
            return std::max(l_res(), commute_res());
        case ClassLabel::TM:
            return relative_distance(mat_mul(sk, sk), i_r);
        case ClassLabel::EP:
            return l_res();
        case ClassLabel::PI:
            return relative_distance(sigma, i_r);
        case ClassLabel::SD:
            return commute_res();
        case ClassLabel::ThreeOP:
            return std::max({l_res(), relative_distance(sigma, i_r),
                             relative_distance(d.k, conj_transpose(d.k))});
        default:
            break;
    }
    throw InvalidInputError("hs_class_residual: unknown label");
}

bool hs_class_check(const HSDecomposition& d, ClassLabel label,
                    const ToleranceConfig& cfg) {
    return hs_class_residual(d, label, cfg) <= cfg.eq_tol;
}

Signature signature(const ComplexMatrix& a, const ToleranceConfig& cfg) {
    if (!is_member(a, ClassLabel::ThreeOP, cfg)) {
        throw NotThreeOpError("signature: matrix is not orthogonal tripotent");
    }
    const HermEig e = herm_eig(a, cfg);
    Signature sig;
    sig.z = 0;
    for (double lambda : e.eigenvalues) {
        double best_dist = std::abs(lambda - 1.0);
        int best = 1;
        if (std::abs(lambda) < best_dist) {
            best_dist = std::abs(lambda);
            best = 0;
        }
        if (std::abs(lambda + 1.0) < best_dist) {
            best_dist = std::abs(lambda + 1.0);
            best = -1;
        }
        if (best_dist > cfg.eig_class_tol) {
            throw UnclassifiableEigenvalueError(
                "signature: eigenvalue too far from {-1, 0, 1}");
        }
        if (best == 1) {
            ++sig.p;
        } else if (best == -1) {
            ++sig.q;
        } else {
            ++sig.z;
        }
    }
    return sig;
}

ClassLabel k_idempotent_reduce(long long k) {
    if (k < 2) {
        throw InvalidInputError("k_idempotent_reduce: k must be at least 2");
    }
    return (k % 2 == 0) ? ClassLabel::OP : ClassLabel::ThreeOP;
}

} // namespace tripotent
